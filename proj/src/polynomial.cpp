#include "lienorm/polynomial.hpp"

#include "lienorm/error.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace lienorm {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw DomainError("variable index exceeds supported variable count");
  if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVariables) throw DomainError("too many variables");
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DomainError("variable index out of range");
  return monomial(nvars, Monomial::variable(index), 1);
}

Polynomial Polynomial::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_less(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.back();
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.degree() == 0) return terms_.front().coeff;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grlex_less(t.mono, x); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
  return d;
}

int Polynomial::min_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

Polynomial Polynomial::coefficient_in(std::size_t var, unsigned d) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    if (t.mono[var] != d) continue;
    Monomial m = t.mono;
    m.set(var, 0);
    r.terms_.push_back({m, t.coeff});
  }
  return r;  // order preserved: every kept term lost the same factor
}

Polynomial Polynomial::leading_coefficient_in(std::size_t var) const {
  int d = degree_in(var);
  if (d < 0) return Polynomial(nvars_);
  return coefficient_in(var, static_cast<unsigned>(d));
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    if (t.mono.degree() > max_degree) break;
    r.terms_.push_back(t);
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return from_terms(nvars_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DomainError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono[i]);
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::partial_evaluate(std::span<const std::optional<Rational>> values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!values[i] || m[i] == 0) continue;
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), values[i]->get_num_mpz_t(), m[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), values[i]->get_den_mpz_t(), m[i]);
      c *= pw;
      m.set(i, 0);
    }
    out.push_back({m, c});
  }
  return from_terms(nvars_, std::move(out));
}

std::vector<Rational> Polynomial::dense_univariate(std::size_t var) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, degree_in(var))) + 1, Rational(0));
  for (const auto& t : terms_) {
    if (t.mono.degree() != t.mono[var]) throw DomainError("polynomial is not univariate");
    c[t.mono[var]] += t.coeff;
  }
  return c;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, Combine sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_less(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_less(b[j].mono, a[i].mono)) {
      out.push_back({b[j].mono, sign(b[j].coeff)});
      ++j;
    } else {
      Rational c = a[i].coeff + sign(b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return c; });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(std::max(a.nvars_, b.nvars_));
  if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial::from_terms(std::max(a.nvars_, b.nvars_), std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;  // multiplying by a monomial preserves a monomial order
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == other.terms_[i].mono) || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coeff;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (it == terms_.rbegin()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      unsigned e = it->mono[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += lienorm::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += lienorm::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and gcd

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  const std::size_t nv = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return Polynomial(nv);
  const Term& lb = b.leading_term();
  if (b.size() == 1) {
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      q.push_back({t.mono.quotient(lb.mono), t.coeff / lb.coeff});
    }
    return Polynomial::from_terms(nv, std::move(q));
  }
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono.quotient(lb.mono);
    Rational c = lr.coeff / lb.coeff;
    r -= b.mul_monomial(m, c);
    quotient.push_back({m, std::move(c)});
  }
  return Polynomial::from_terms(nv, std::move(quotient));
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_coefficient();
  return p * inv;
}

namespace {

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw IdentityViolation("expected exact polynomial division");
  return *std::move(q);
}

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Degree of the monic gcd of two dense univariate polynomials over Q.
int dense_gcd_degree(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
    // keep coefficients small
    if (!b.empty()) {
      Rational inv = 1 / b.back();
      for (auto& c : b) c *= inv;
    }
  }
  if (!a.empty()) {
    Rational inv = 1 / a.back();
    for (auto& c : a) c *= inv;
  }
  return a;
}

std::vector<bool> variables_of(const Polynomial& p) {
  std::vector<bool> used(p.nvars(), false);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (t.mono[i]) used[i] = true;
  return used;
}

/// Upper bound for deg_var gcd(a, b) from univariate images. Returns -2 when
/// no admissible specialization was found.
int gcd_degree_bound(const Polynomial& a, const Polynomial& b, std::size_t var) {
  static constexpr int kSamples[][4] = {{1, 2, 3, 5}, {-1, 3, -2, 7}, {2, -3, 5, -4}, {3, 1, -5, 2}};
  const int da = a.degree_in(var), db = b.degree_in(var);
  int best = -2;
  for (const auto& sample : kSamples) {
    std::vector<std::optional<Rational>> vals(a.nvars());
    std::size_t k = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i)
      if (i != var) vals[i] = Rational(sample[k++ % 4] + static_cast<int>(i / 4));
    Polynomial ua = a.partial_evaluate(vals), ub = b.partial_evaluate(vals);
    if (ua.degree_in(var) != da || ub.degree_in(var) != db) continue;
    int d = dense_gcd_degree(ua.dense_univariate(var), ub.dense_univariate(var));
    if (best == -2 || d < best) best = d;
    if (best == 0) break;
  }
  return best;
}

Polynomial from_dense(const Dense& c, std::size_t nvars, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(i)), c[i]});
  return Polynomial::from_terms(nvars, std::move(terms));
}

/// Subresultant remainder sequence in var for a, b primitive in var.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, std::size_t var) {
  const std::size_t nv = a.nvars();
  if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
  Polynomial g = Polynomial::constant(nv, 1);
  Polynomial h = Polynomial::constant(nv, 1);
  while (true) {
    const int delta = a.degree_in(var) - b.degree_in(var);
    Polynomial r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return Polynomial::constant(nv, 1);
    a = std::move(b);
    b = exact_quotient(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.leading_coefficient_in(var);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  return exact_quotient(b, content_in(b, var));
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  if (db < 0) throw DomainError("pseudo-remainder by zero");
  const int da = a.degree_in(var);
  if (da < db) return a;
  const Polynomial lb = b.leading_coefficient_in(var);
  const int e = da - db + 1;
  int steps = 0;
  Polynomial r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Polynomial lr = r.leading_coefficient_in(var);
    r = lb * r - (lr * b).mul_monomial(Monomial::variable(var, static_cast<unsigned>(dr - db)), 1);
    ++steps;
  }
  if (e > steps) r *= lb.pow(static_cast<unsigned>(e - steps));
  return r;
}

Polynomial content_in(const Polynomial& a, std::size_t var) {
  const int d = a.degree_in(var);
  if (d <= 0) return a;
  Polynomial c(a.nvars());
  for (int k = d; k >= 0; --k) {
    Polynomial ck = a.coefficient_in(var, static_cast<unsigned>(k));
    if (ck.is_zero()) continue;
    c = c.is_zero() ? make_monic(ck) : gcd(c, ck);
    if (c.is_constant()) return Polynomial::constant(a.nvars(), 1);
  }
  return c;
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  const std::size_t nv = std::max(a_in.nvars(), b_in.nvars());
  if (a_in.is_zero()) return make_monic(b_in);
  if (b_in.is_zero()) return make_monic(a_in);
  if (a_in.is_constant() || b_in.is_constant()) return Polynomial::constant(nv, 1);
  if (a_in == b_in) return make_monic(a_in);

  // A monomial's divisors are monomials.
  if (a_in.is_monomial() || b_in.is_monomial()) {
    const Polynomial& mono = a_in.is_monomial() ? a_in : b_in;
    const Polynomial& other = a_in.is_monomial() ? b_in : a_in;
    Monomial g = mono.leading_term().mono;
    for (const auto& t : other.terms()) g = g.gcd(t.mono);
    return Polynomial::monomial(nv, g, 1);
  }

  Polynomial a = a_in, b = b_in;
  // A variable present in only one argument cannot occur in the gcd.
  for (bool changed = true; changed;) {
    changed = false;
    auto va = variables_of(a), vb = variables_of(b);
    for (std::size_t i = 0; i < nv; ++i) {
      if (va[i] && !vb[i]) {
        a = content_in(a, i);
        changed = true;
        break;
      }
      if (vb[i] && !va[i]) {
        b = content_in(b, i);
        changed = true;
        break;
      }
    }
    if (changed) {
      if (a.is_constant() || b.is_constant()) return Polynomial::constant(nv, 1);
      if (a.is_monomial() || b.is_monomial()) return gcd(a, b);
    }
  }

  auto vars = variables_of(a);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < nv; ++i)
    if (vars[i]) active.push_back(i);

  if (active.size() == 1) {
    const std::size_t v = active[0];
    return from_dense(dense_gcd(a.dense_univariate(v), b.dense_univariate(v)), nv, v);
  }

  // Degree bounds; a zero bound removes that variable from the problem.
  std::size_t main_var = active[0];
  int main_deg = std::numeric_limits<int>::max();
  for (std::size_t v : active) {
    int bound = gcd_degree_bound(a, b, v);
    if (bound == 0) {
      return gcd(content_in(a, v), content_in(b, v));
    }
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < main_deg) {
      main_deg = d;
      main_var = v;
    }
  }

  Polynomial ca = content_in(a, main_var), cb = content_in(b, main_var);
  Polynomial pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
  Polynomial c = gcd(ca, cb);
  Polynomial g = subresultant_gcd(std::move(pa), std::move(pb), main_var);
  return make_monic(c * g);
}

// ---------------------------------------------------------------------------

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // Enumerate compositions of d into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == nvars) {
      m.set(i, remaining);
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      m.set(i, e);
      self(self, i + 1, remaining - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(nvars, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace lienorm
