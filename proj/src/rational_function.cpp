#include "lienorm/rational_function.hpp"

#include "lienorm/error.hpp"

namespace lienorm {

namespace {

Polynomial quotient_or_throw(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw IdentityViolation("gcd does not divide its argument");
  return *std::move(q);
}

}  // namespace

RationalFunction::RationalFunction(std::size_t nvars) : num_(nvars), den_(Polynomial::constant(nvars, 1)) {}

RationalFunction::RationalFunction(std::size_t nvars, const Rational& c)
    : num_(Polynomial::constant(nvars, c)), den_(Polynomial::constant(nvars, 1)) {}

RationalFunction::RationalFunction(Polynomial p)
    : num_(std::move(p)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t index) {
  return RationalFunction(Polynomial::variable(nvars, index));
}

void RationalFunction::canonicalize() {
  const std::size_t nv = std::max(num_.nvars(), den_.nvars());
  if (num_.is_zero()) {
    num_ = Polynomial(nv);
    den_ = Polynomial::constant(nv, 1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = quotient_or_throw(num_, g);
      den_ = quotient_or_throw(den_, g);
    }
  }
  Rational inv = 1 / den_.leading_coefficient();
  if (inv != 1) {
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunction r(a.nvars());
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    if (!r.den_.is_constant()) r.canonicalize();
    else if (r.num_.is_zero()) r.canonicalize();
    return r;
  }
  if (a.den_.is_constant() || b.den_.is_constant()) {
    // One side is a polynomial: (a n_b + n_a d_b)/d_b stays reduced.
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    if (r.num_.is_zero()) return RationalFunction(a.nvars());
    Rational inv = 1 / r.den_.leading_coefficient();
    r.num_ *= inv;
    r.den_ *= inv;
    return r;
  }
  // Henrici: only gcd(num, g) can be non-trivial.
  Polynomial g = gcd(a.den_, b.den_);
  Polynomial ad = quotient_or_throw(a.den_, g);
  Polynomial bd = quotient_or_throw(b.den_, g);
  Polynomial num = a.num_ * bd + b.num_ * ad;
  Polynomial den = a.den_ * bd;
  if (num.is_zero()) return RationalFunction(a.nvars());
  if (!g.is_constant()) {
    Polynomial h = gcd(num, g);
    if (!h.is_constant()) {
      num = quotient_or_throw(num, h);
      den = quotient_or_throw(den, h);
    }
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  Rational inv = 1 / r.den_.leading_coefficient();
  r.num_ *= inv;
  r.den_ *= inv;
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(std::max(a.nvars(), b.nvars()));
  if (a.den_.is_constant() && b.den_.is_constant()) {
    RationalFunction r(a.num_ * b.num_);
    Rational s = 1 / (a.den_.constant_term() * b.den_.constant_term());
    r.num_ *= s;
    return r;
  }
  // Cross-cancel before multiplying.
  Polynomial g1 = gcd(a.num_, b.den_);
  Polynomial g2 = gcd(b.num_, a.den_);
  Polynomial n1 = g1.is_constant() ? a.num_ : quotient_or_throw(a.num_, g1);
  Polynomial d2 = g1.is_constant() ? b.den_ : quotient_or_throw(b.den_, g1);
  Polynomial n2 = g2.is_constant() ? b.num_ : quotient_or_throw(b.num_, g2);
  Polynomial d1 = g2.is_constant() ? a.den_ : quotient_or_throw(a.den_, g2);
  RationalFunction r(a.nvars());
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  Rational inv = 1 / r.den_.leading_coefficient();
  r.num_ *= inv;
  r.den_ *= inv;
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  RationalFunction inv(b.nvars());
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  Rational s = 1 / inv.den_.leading_coefficient();
  inv.num_ *= s;
  inv.den_ *= s;
  return a * inv;
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
  if (c == 0) return RationalFunction(a.nvars());
  RationalFunction r = a;
  r.num_ *= c;
  return r;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r(nvars());
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);  // coprime powers stay coprime; den stays monic
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_constant()) return RationalFunction(num_.derivative(var) * (1 / den_.constant_term()));
  // (n' d - n d') / d^2
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

std::optional<Rational> RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

namespace {

RationalFunction evaluate_polynomial(const Polynomial& p, std::span<const RationalFunction> values,
                                     std::size_t target_nvars) {
  // Cache powers per variable.
  std::vector<std::vector<RationalFunction>> powers(p.nvars());
  auto power = [&](std::size_t var, unsigned e) -> const RationalFunction& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(RationalFunction(target_nvars, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[var]);
    return cache[e];
  };
  // Group terms by denominator-free accumulation when all values are polynomial.
  bool all_poly = true;
  for (const auto& v : values) all_poly = all_poly && v.is_polynomial();
  if (all_poly) {
    Polynomial acc(target_nvars);
    for (const auto& t : p.terms()) {
      Polynomial term = Polynomial::constant(target_nvars, t.coeff);
      for (std::size_t i = 0; i < p.nvars(); ++i)
        if (t.mono[i]) term *= power(i, t.mono[i]).numerator() * (1 / power(i, t.mono[i]).denominator().constant_term());
      acc += term;
    }
    return RationalFunction(std::move(acc));
  }
  RationalFunction acc(target_nvars);
  for (const auto& t : p.terms()) {
    RationalFunction term(target_nvars, t.coeff);
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono[i]) term *= power(i, t.mono[i]);
    acc += term;
  }
  return acc;
}

}  // namespace

RationalFunction RationalFunction::compose(std::span<const RationalFunction> values) const {
  if (values.size() != nvars()) throw DomainError("composition needs one value per variable");
  const std::size_t target = values.empty() ? 0 : values[0].nvars();
  RationalFunction n = evaluate_polynomial(num_, values, target);
  RationalFunction d = evaluate_polynomial(den_, values, target);
  return n / d;
}

Polynomial RationalFunction::taylor(unsigned order) const {
  const Rational d0 = den_.constant_term();
  if (d0 == 0) throw DomainError("denominator vanishes at the origin");
  const std::size_t nv = nvars();
  if (den_.is_constant()) return num_.truncated(order) * (1 / d0);
  // Solve S * D = N degree by degree: S_k = (N_k - sum_{i>=1} D_i S_{k-i}) / d0.
  std::vector<Polynomial> dparts, sparts;
  for (unsigned i = 0; i <= order; ++i) dparts.push_back(den_.homogeneous_part(i));
  Polynomial result(nv);
  for (unsigned k = 0; k <= order; ++k) {
    Polynomial sk = num_.homogeneous_part(k);
    for (unsigned i = 1; i <= k; ++i)
      if (!dparts[i].is_zero()) sk -= dparts[i] * sparts[k - i];
    sk *= 1 / d0;
    result += sk;
    sparts.push_back(std::move(sk));
  }
  return result;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  if (den_.is_constant()) {
    Polynomial p = num_ * (1 / den_.constant_term());
    return p.to_string(names);
  }
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

}  // namespace lienorm
