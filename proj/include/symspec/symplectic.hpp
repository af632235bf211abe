#pragma once

#include "symspec/pfaffian.hpp"
#include "symspec/rng.hpp"

namespace symspec {

/// The standard symplectic context in dimension 2n: the antidiagonal Gram
/// matrix J of omega_0 (J[i][2n+1-i] = 1 for i <= n, -1 for i > n,
/// 1-based), with its Pfaffian cached. Requires characteristic 0 or p > 2n.
class SymplecticSpace {
 public:
  SymplecticSpace(std::size_t n, const FieldSpec& field);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return 2 * n_; }
  const FieldSpec& field() const { return field_; }
  const Matrix<Scalar>& J() const { return j_; }
  const Scalar& pfJ() const { return pfj_; }

  /// J^{-1} = -J for the standard antidiagonal form.
  Matrix<Scalar> J_inv() const { return -j_; }

 private:
  std::size_t n_;
  FieldSpec field_;
  Matrix<Scalar> j_;
  Scalar pfj_;
};

/// x is in g = sp_2n iff J x is symmetric.
template <typename T>
bool in_g(const SymplecticSpace& sp, const Matrix<T>& x);

/// x is in the anti-fixed part g+ iff J x is antisymmetric.
template <typename T>
bool in_gplus(const SymplecticSpace& sp, const Matrix<T>& x);

template <>
inline bool in_g(const SymplecticSpace& sp, const Matrix<Scalar>& x) {
  if (x.dim() != sp.dim()) throw std::invalid_argument("in_g: dimension mismatch");
  return is_symmetric(sp.J() * x);
}
template <>
inline bool in_gplus(const SymplecticSpace& sp, const Matrix<Scalar>& x) {
  if (x.dim() != sp.dim()) throw std::invalid_argument("in_gplus: dimension mismatch");
  return is_antisymmetric(sp.J() * x);
}
template <>
inline bool in_g(const SymplecticSpace& sp, const Matrix<MultiPoly>& x) {
  if (x.dim() != sp.dim()) throw std::invalid_argument("in_g: dimension mismatch");
  return is_symmetric(lift(sp.J()) * x);
}
template <>
inline bool in_gplus(const SymplecticSpace& sp, const Matrix<MultiPoly>& x) {
  if (x.dim() != sp.dim()) throw std::invalid_argument("in_gplus: dimension mismatch");
  return is_antisymmetric(lift(sp.J()) * x);
}

/// x = g_part + gplus_part along gl(V) = g (+) g+, by splitting J x into
/// symmetric and antisymmetric halves and multiplying back by J^{-1}.
std::pair<Matrix<Scalar>, Matrix<Scalar>> split(const SymplecticSpace& sp,
                                                const Matrix<Scalar>& x);

/// The Pfaffian norm N+(x) = Pf(J x) / Pf(J) on g+. Satisfies
/// N+(x)^2 = det(x); scalar matrices give N+(c I) = c^n.
Scalar pfaffian_norm(const SymplecticSpace& sp, const Matrix<Scalar>& x,
                     bool verify = true);

/// Same norm over a polynomial ring (entries in k[t] or k[alpha,beta]);
/// always the matching-sum kernel.
MultiPoly pfaffian_norm(const SymplecticSpace& sp, const Matrix<MultiPoly>& x);

/// N+(t I - m) for m in g+: the monic degree-n Pfaffian characteristic
/// polynomial Q with Q(t)^2 = char_poly(m).
MultiPoly pf_char_poly(const SymplecticSpace& sp, const Matrix<Scalar>& m,
                       const std::string& var = "t");

/// Interpolation route for the same polynomial: evaluate N+ at n+1 points
/// of t and Lagrange-interpolate. Kept behind its own entry point; must
/// agree with the matching route.
MultiPoly pf_char_poly_interpolated(const SymplecticSpace& sp, const Matrix<Scalar>& m,
                                    const std::string& var = "t");

/// A d x n array of scalars b[i][j] = b_j(y_i): a point of t^d.
struct CartanPoint {
  std::vector<std::vector<Scalar>> b;  // d rows of n entries

  std::size_t d() const { return b.size(); }
  std::size_t n() const { return b.empty() ? 0 : b[0].size(); }
};

/// Embed a Cartan point as d diagonal matrices diag(b1..bn, -bn..-b1).
std::vector<Matrix<Scalar>> cartan_embed(const SymplecticSpace& sp, const CartanPoint& pt);

/// Signed permutation (s, p) in {+-1}^n x S_n.
struct WeylElement {
  std::vector<int> signs;         // entries +-1
  std::vector<std::size_t> perm;  // perm[j] = image of j

  static WeylElement identity(std::size_t n);
  WeylElement compose(const WeylElement& inner) const;  // apply inner first
};

/// Diagonal action on t^d: b'[i][j] = signs[j] * b[i][perm^{-1}(j)].
CartanPoint weyl_act(const WeylElement& w, const CartanPoint& pt);

/// Product of `steps` random symplectic transvections I + c v (J v)^T with
/// small integer parameters; satisfies g^T J g = J exactly and det(g) = 1.
Matrix<Scalar> random_symplectic(const SymplecticSpace& sp, Rng& rng, unsigned steps);

enum class Parity { in_g, in_gplus, general };

/// d pairwise-commuting matrices with parity tags, verified at construction.
struct CommutingTuple {
  const SymplecticSpace* space;
  std::vector<Matrix<Scalar>> xs;
  std::vector<Parity> parity;

  CommutingTuple(const SymplecticSpace& sp, std::vector<Matrix<Scalar>> ms,
                 std::vector<Parity> tags);

  std::size_t d() const { return xs.size(); }
  bool all_in_g() const;
};

enum class SamplerKind { conjugated_cartan, single_generator, nilpotent };

SamplerKind parse_sampler_kind(const std::string& s);
std::string sampler_kind_name(SamplerKind k);

CartanPoint random_cartan_point(const SymplecticSpace& sp, std::size_t d, Rng& rng);

/// Random element of g = sp_2n: J^{-1} S for a random symmetric S.
Matrix<Scalar> random_in_g(const SymplecticSpace& sp, Rng& rng);

/// The regular nilpotent of g in the standard basis (superdiagonal +1 in
/// the first n slots, -1 after).
Matrix<Scalar> regular_nilpotent(const SymplecticSpace& sp);

/// Seeded commuting d-tuples in g:
///  - conjugated_cartan: g . cartan_embed(random point) . g^{-1}
///  - single_generator: odd-degree polynomials (zero constant term) in one
///    random element of g
///  - nilpotent: odd powers of the fixed regular nilpotent
CommutingTuple sample_commuting(const SymplecticSpace& sp, std::size_t d,
                                std::uint64_t seed, SamplerKind kind);

/// Seeded commuting pairs in g+, derived from a commuting pair in g of the
/// given sampler kind (products of commuting g-elements land in g+; scalar
/// matrices and nilpotent products give the degenerate cases).
std::pair<Matrix<Scalar>, Matrix<Scalar>> sample_gplus_pair(const SymplecticSpace& sp,
                                                            std::uint64_t seed,
                                                            SamplerKind kind);

/// Random single element of g+ (split of a random matrix).
Matrix<Scalar> sample_gplus(const SymplecticSpace& sp, Rng& rng);

}  // namespace symspec
