#include "symspec/field.hpp"

#include <sstream>

namespace symspec {

FieldSpec FieldSpec::prime(unsigned long p) {
  if (p < 3) throw std::invalid_argument("prime field modulus must be an odd prime > 2");
  mpz_class m(static_cast<long>(p));
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("prime field modulus is not prime: " + std::to_string(p));
  return FieldSpec{Kind::prime_field, p};
}

std::string FieldSpec::to_string() const {
  if (kind == Kind::rationals) return "q";
  return "fp:" + std::to_string(modulus);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "q" || s == "Q") return rationals();
  if (s.rfind("fp:", 0) == 0) {
    unsigned long p = std::stoul(s.substr(3));
    return prime(p);
  }
  throw std::invalid_argument("unrecognized field spec: " + s);
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& q) : field_(f), v_(q) {
  if (f.is_prime_field()) {
    // residue of num/den, den must be invertible mod p
    mpz_class p(static_cast<long>(f.modulus));
    mpz_class num = q.get_num() % p;
    mpz_class den = q.get_den() % p;
    if (den == 0) throw std::domain_error("denominator vanishes modulo p");
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible modulo p");
    v_ = mpq_class((num * dinv) % p);
  } else {
    v_.canonicalize();
  }
  reduce();
}

void Scalar::reduce() {
  if (field_.is_prime_field()) {
    mpz_class p(static_cast<long>(field_.modulus));
    mpz_class r = v_.get_num() % p;
    if (r < 0) r += p;
    v_ = mpq_class(r);
  } else {
    v_.canonicalize();
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

bool Scalar::is_one() const { return v_ == 1; }

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  r.v_ += o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  r.v_ -= o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(*this);
  r.v_ *= o.v_;
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r(*this);
  if (field_.is_prime_field()) {
    mpz_class p(static_cast<long>(field_.modulus)), inv;
    mpz_class n = v_.get_num();
    mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    r.v_ = mpq_class(inv);
  } else {
    r.v_ = 1 / v_;
  }
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
  Scalar acc = Scalar::one(field_);
  Scalar base(*this);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  return field_ == o.field_ && v_ == o.v_;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (field_.is_prime_field()) {
    os << v_.get_num() << " mod " << field_.modulus;
  } else {
    os << v_;
  }
  return os.str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
  std::string body = s;
  if (f.is_prime_field()) {
    auto pos = s.find(" mod ");
    if (pos != std::string::npos) {
      unsigned long p = std::stoul(s.substr(pos + 5));
      if (p != f.modulus) throw std::invalid_argument("modulus mismatch in scalar: " + s);
      body = s.substr(0, pos);
    }
  }
  mpq_class q(body);
  q.canonicalize();
  return Scalar(f, q);
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime_field()) throw std::logic_error("rational() on prime-field scalar");
  return v_;
}

}  // namespace symspec
