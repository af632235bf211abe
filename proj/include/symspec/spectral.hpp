#pragma once

#include "symspec/symplectic.hpp"

namespace symspec {

/// Exponent multi-index a = (a_1,...,a_d).
struct MultiIndex {
  std::vector<unsigned> a;

  unsigned total() const {
    unsigned s = 0;
    for (unsigned v : a) s += v;
    return s;
  }
  bool even() const { return total() % 2 == 0; }
  std::size_t d() const { return a.size(); }
};

/// All multi-indices with d components and |a| <= max_total; optionally only
/// the even ones.
std::vector<MultiIndex> enumerate_multi_indices(std::size_t d, unsigned max_total,
                                                bool even_only);

/// x_1^{a_1} ... x_d^{a_d}.
Matrix<Scalar> monomial_matrix(const std::vector<Matrix<Scalar>>& xs, const MultiIndex& a);

/// Trace generator: tr(x_1^{a_1} ... x_d^{a_d}). The trace is always
/// computed in full; for odd |a| it comes out exactly 0 and tests assert so.
Scalar phi(const MultiIndex& a, const CommutingTuple& tuple);

/// Cartan-side generator: 0 for odd |a|, else 2 sum_j prod_i b_j(y_i)^{a_i}.
Scalar psi(const MultiIndex& a, const CartanPoint& pt);

/// phi evaluated on the embedded Cartan point: the restriction map on the
/// generator family. Equals psi(a, pt).
Scalar chevalley_restrict(const SymplecticSpace& sp, const MultiIndex& a,
                          const CartanPoint& pt);

/// Substitute X_i -> xs[i] in a polynomial whose variables are named
/// "X1".."Xd"; constants map to multiples of the identity.
Matrix<Scalar> eval_poly_at_matrices(const MultiPoly& q,
                                     const std::vector<Matrix<Scalar>>& xs);

/// True when every monomial of q has even total degree (q lies in the
/// tau-fixed subalgebra S+).
bool is_tau_even(const MultiPoly& q);

/// N+(q(x_1,...,x_d)) for tau-even q and a commuting tuple in g: the value
/// of the spectral data map on the pure power q^{(x) n}.
Scalar spectral_eval_pure(const MultiPoly& q, const CommutingTuple& tuple);

/// A W-invariant element of the n-fold tensor algebra over S+, stored as a
/// combination of orbit-sums: each term is a coefficient together with a
/// sorted multiset of n block monomials (each an exponent vector of length
/// d, even total degree). The orbit-sum is the sum over the distinct
/// permutations of the blocks, which makes S_n-invariance syntactic, and
/// evenness of every block makes the sign part of W act trivially.
class InvariantElement {
 public:
  using BlockMonomial = std::vector<unsigned>;      // d exponents, even total
  using BlockTuple = std::vector<BlockMonomial>;    // n blocks, kept sorted

  InvariantElement(std::size_t n, std::size_t d, const FieldSpec& f)
      : n_(n), d_(d), field_(f) {}

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  const FieldSpec& field() const { return field_; }
  const std::map<BlockTuple, Scalar>& terms() const { return terms_; }

  void add_term(const Scalar& coeff, BlockTuple blocks);

  InvariantElement operator+(const InvariantElement& o) const;
  InvariantElement operator*(const Scalar& c) const;
  bool operator==(const InvariantElement& o) const;

  /// Transport through beta (X_{j,i} -> b_j(y_i)) and evaluate at a point
  /// of t^d.
  Scalar eval_at_cartan(const CartanPoint& pt) const;

  /// The beta-preimage of psi_a: 2 times the orbit-sum placing X^a in one
  /// block and 1 in the others.
  static InvariantElement psi_generator(std::size_t n, const MultiIndex& a,
                                        const FieldSpec& f);

 private:
  std::size_t n_, d_;
  FieldSpec field_;
  std::map<BlockTuple, Scalar> terms_;
};

/// Sum of c_k q_k^{(x) n} with every q_k tau-even.
struct PurePowerCombo {
  std::vector<std::pair<Scalar, MultiPoly>> parts;
};

/// Classical polarization over a free module: rewrite an invariant as an
/// alternating combination of n-th pure powers. Requires n! invertible
/// (char 0 or p > n).
PurePowerCombo polarize(const InvariantElement& inv);

/// Symbolic re-expansion of pure powers back into the orbit-sum basis; the
/// polarization round-trip oracle.
InvariantElement expand_pure_powers(const PurePowerCombo& combo, std::size_t n,
                                    std::size_t d, const FieldSpec& f);

/// The spectral data map at a point: polarize, then sum the Pfaffian norms
/// of the pure parts.
Scalar spectral_eval(const InvariantElement& inv, const CommutingTuple& tuple);

/// The three exactly-equal quantities behind s(psi_a) = phi_a for even a:
/// the trace of m = x^a, minus the t^{2n-1} coefficient of char_poly(m),
/// and -2 times the t^{n-1} coefficient of the Pfaffian charpoly of m.
struct RoundTripReport {
  Scalar trace_value;
  Scalar charpoly_route;
  Scalar pf_route;
  bool pass;
};

RoundTripReport round_trip_check(const MultiIndex& a, const CommutingTuple& tuple);

/// det(q(x_1,...,x_d)) for commuting matrices of any size: the GL_n
/// analogue used as a cross-check.
Scalar deligne_det_eval(const MultiPoly& q, const std::vector<Matrix<Scalar>>& xs);

}  // namespace symspec
