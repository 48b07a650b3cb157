#include "lienorm/vector_field.hpp"

#include "lienorm/error.hpp"
#include "lienorm/parser.hpp"

#include <algorithm>

namespace lienorm {

Chart::Chart(std::vector<std::string> variables) : names_(std::move(variables)) {
  if (names_.empty()) throw InputError("a chart needs at least one variable");
  if (names_.size() > kMaxVariables) throw InputError("too many variables");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate variable '" + names_[i] + "'");
}

Chart Chart::standard(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return Chart(std::move(v));
}

RationalFunction Chart::parse(std::string_view text) const { return parse_expression(text, names_); }

void require_same_chart(const Chart& a, const Chart& b) {
  if (!(a == b)) throw ChartMismatch("operands live on different charts");
}

// ---------------------------------------------------------------------------
// VectorField

VectorField::VectorField(Chart chart, std::vector<RationalFunction> coefficients)
    : chart_(std::move(chart)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != chart_.dimension()) throw InputError("coefficient count differs from chart dimension");
}

VectorField VectorField::zero(const Chart& chart) {
  return VectorField(chart, std::vector<RationalFunction>(chart.dimension(), RationalFunction(chart.dimension())));
}

VectorField VectorField::partial(const Chart& chart, std::size_t i) {
  VectorField v = zero(chart);
  v.coeffs_[i] = RationalFunction(chart.dimension(), Rational(1));
  return v;
}

VectorField VectorField::parse(const Chart& chart, std::span<const std::string> coefficients) {
  if (coefficients.size() != chart.dimension())
    throw InputError("field has " + std::to_string(coefficients.size()) + " coefficients, chart has dimension " +
                     std::to_string(chart.dimension()));
  std::vector<RationalFunction> c;
  for (const auto& s : coefficients) c.push_back(chart.parse(s));
  return VectorField(chart, std::move(c));
}

bool VectorField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& f) { return f.is_zero(); });
}

bool VectorField::is_polynomial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& f) { return f.is_polynomial(); });
}

int VectorField::polynomial_degree() const {
  int d = -1;
  for (const auto& f : coeffs_) d = std::max(d, f.numerator().total_degree());
  return d;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& f : r.coeffs_) f = -f;
  return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_chart(a.chart_, b.chart_);
  VectorField r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same_chart(a.chart_, b.chart_);
  VectorField r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

VectorField operator*(const Rational& c, const VectorField& v) {
  VectorField r = v;
  for (auto& f : r.coeffs_) f = f * c;
  return r;
}

VectorField operator*(const RationalFunction& g, const VectorField& v) {
  VectorField r = v;
  for (auto& f : r.coeffs_) f = g * f;
  return r;
}

std::optional<QVector> VectorField::evaluate(std::span<const Rational> point) const {
  QVector out;
  for (const auto& f : coeffs_) {
    auto x = f.evaluate(point);
    if (!x) return std::nullopt;
    out.push_back(*x);
  }
  return out;
}

std::vector<std::string> VectorField::to_strings() const {
  std::vector<std::string> out;
  for (const auto& f : coeffs_) out.push_back(f.to_string(chart_.variables()));
  return out;
}

RationalFunction apply(const VectorField& v, const RationalFunction& f) {
  if (f.nvars() != v.dimension()) throw ChartMismatch("function and field use different variables");
  RationalFunction acc(v.dimension());
  if (f.is_constant()) return acc;
  for (std::size_t j = 0; j < v.dimension(); ++j)
    if (!v[j].is_zero()) acc += v[j] * f.derivative(j);
  return acc;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  require_same_chart(v.chart(), w.chart());
  std::vector<RationalFunction> c;
  c.reserve(v.dimension());
  for (std::size_t j = 0; j < v.dimension(); ++j) c.push_back(apply(v, w[j]) - apply(w, v[j]));
  return VectorField(v.chart(), std::move(c));
}

std::optional<unsigned> order_at_origin(const VectorField& v) {
  std::optional<unsigned> best;
  for (const auto& f : v.coefficients()) {
    if (f.is_zero()) continue;
    if (f.denominator().constant_term() == 0) throw DomainError("denominator vanishes at the origin");
    // The denominator is a unit at 0, so the order is that of the numerator.
    unsigned d = static_cast<unsigned>(f.numerator().min_degree());
    if (!best || d < *best) best = d;
  }
  return best;
}

VectorField pullback(const VectorField& v, const Chart& source, std::span<const RationalFunction> tau) {
  const std::size_t n = v.dimension();
  if (tau.size() != n || source.dimension() != n) throw ChartMismatch("pullback needs a map between equal dimensions");
  FMatrix jac(n, n, RationalFunction(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = tau[i].derivative(j);
  FVector rhs;
  for (std::size_t i = 0; i < n; ++i) rhs.push_back(v[i].compose(tau));
  auto sol = solve_linear(jac, rhs);
  if (!sol.particular || !sol.nullspace.empty()) throw DomainError("map is not a local diffeomorphism");
  return VectorField(source, *sol.particular);
}

VectorField recenter(const VectorField& v, std::span<const Rational> point) {
  const std::size_t n = v.dimension();
  std::vector<RationalFunction> shift;
  for (std::size_t i = 0; i < n; ++i) shift.push_back(v.chart().coordinate(i) + RationalFunction(n, point[i]));
  std::vector<RationalFunction> c;
  for (const auto& f : v.coefficients()) c.push_back(f.compose(shift));
  return VectorField(v.chart(), std::move(c));
}

// ---------------------------------------------------------------------------
// MultiVector

MultiVector::MultiVector(Chart chart, std::size_t degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree_ > chart_.dimension()) throw DomainError("multivector degree exceeds dimension");
}

RationalFunction MultiVector::component(const IndexSet& indices) const {
  auto it = comps_.find(indices);
  return it == comps_.end() ? RationalFunction(chart_.dimension()) : it->second;
}

void MultiVector::add(const RationalFunction& f, IndexSet indices) {
  if (f.is_zero()) return;
  if (indices.size() != degree_) throw DomainError("index set has wrong length");
  // insertion sort, tracking the permutation sign
  bool negative = false;
  for (std::size_t i = 1; i < indices.size(); ++i)
    for (std::size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
      std::swap(indices[j - 1], indices[j]);
      negative = !negative;
    }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i] == indices[i - 1]) return;
  auto [it, inserted] = comps_.try_emplace(indices, RationalFunction(chart_.dimension()));
  it->second += negative ? -f : f;
  if (it->second.is_zero()) comps_.erase(it);
}

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
  require_same_chart(a.chart_, b.chart_);
  if (a.degree_ != b.degree_) throw DomainError("multivector degrees differ");
  MultiVector r = a;
  for (const auto& [idx, f] : b.comps_) r.add(f, idx);
  return r;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
  require_same_chart(a.chart_, b.chart_);
  if (a.degree_ != b.degree_) throw DomainError("multivector degrees differ");
  MultiVector r = a;
  for (const auto& [idx, f] : b.comps_) r.add(-f, idx);
  return r;
}

MultiVector operator*(const RationalFunction& f, const MultiVector& m) {
  MultiVector r(m.chart_, m.degree_);
  for (const auto& [idx, g] : m.comps_) r.add(f * g, idx);
  return r;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, IndexSet& cur, std::vector<IndexSet>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MultiVector wedge(std::span<const VectorField> fields) {
  if (fields.empty()) throw DomainError("empty wedge");
  const Chart& chart = fields[0].chart();
  for (const auto& f : fields) require_same_chart(chart, f.chart());
  const std::size_t n = chart.dimension(), k = fields.size();
  MultiVector out(chart, k);
  std::vector<IndexSet> sets;
  IndexSet cur;
  subsets(n, k, 0, cur, sets);
  for (const auto& s : sets) {
    FMatrix m(k, k, RationalFunction(n));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m(r, c) = fields[r][s[c]];
    out.add(determinant(m), s);
  }
  return out;
}

MultiVector lie_derivative(const VectorField& v, const MultiVector& theta) {
  require_same_chart(v.chart(), theta.chart());
  const std::size_t n = v.dimension();
  MultiVector out(theta.chart(), theta.degree());
  // [v, d_i] = -sum_l (d_i v_l) d_l
  std::vector<std::vector<RationalFunction>> dv(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) dv[i].push_back(v[l].derivative(i));
  for (const auto& [idx, f] : theta.components()) {
    out.add(apply(v, f), idx);
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      for (std::size_t l = 0; l < n; ++l) {
        const auto& c = dv[idx[pos]][l];
        if (c.is_zero()) continue;
        IndexSet rep = idx;
        rep[pos] = l;
        out.add(-(f * c), std::move(rep));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JetField

JetField::JetField(Chart chart, unsigned order, std::vector<Polynomial> coefficients)
    : chart_(std::move(chart)), order_(order), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != chart_.dimension()) throw InputError("coefficient count differs from chart dimension");
  for (auto& p : coeffs_) p = p.truncated(order_);
}

JetField JetField::zero(const Chart& chart, unsigned order) {
  return JetField(chart, order, std::vector<Polynomial>(chart.dimension(), Polynomial(chart.dimension())));
}

bool JetField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& p) { return p.is_zero(); });
}

QVector JetField::value_at_origin() const {
  QVector v;
  for (const auto& p : coeffs_) v.push_back(p.constant_term());
  return v;
}

std::vector<Polynomial> JetField::homogeneous_part(unsigned d) const {
  std::vector<Polynomial> out;
  for (const auto& p : coeffs_) out.push_back(p.homogeneous_part(d));
  return out;
}

JetField JetField::truncated(unsigned order) const { return JetField(chart_, std::min(order, order_), coeffs_); }

VectorField JetField::to_field() const {
  std::vector<RationalFunction> c;
  for (const auto& p : coeffs_) c.emplace_back(p);
  return VectorField(chart_, std::move(c));
}

JetField operator+(const JetField& a, const JetField& b) {
  require_same_chart(a.chart_, b.chart_);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
  return JetField(a.chart_, std::min(a.order_, b.order_), std::move(c));
}

JetField operator-(const JetField& a, const JetField& b) {
  require_same_chart(a.chart_, b.chart_);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c.push_back(a.coeffs_[i] - b.coeffs_[i]);
  return JetField(a.chart_, std::min(a.order_, b.order_), std::move(c));
}

JetField operator*(const Rational& s, const JetField& v) {
  std::vector<Polynomial> c;
  for (const auto& p : v.coeffs_) c.push_back(p * s);
  return JetField(v.chart_, v.order_, std::move(c));
}

JetField truncate(const VectorField& v, unsigned k) {
  std::vector<Polynomial> c;
  for (const auto& f : v.coefficients()) c.push_back(f.taylor(k));
  return JetField(v.chart(), k, std::move(c));
}

JetField bracket(const JetField& v, const JetField& w) {
  require_same_chart(v.chart(), w.chart());
  const unsigned order = std::min(v.order(), w.order());
  const unsigned out_order = order == 0 ? 0 : order - 1;
  const std::size_t n = v.dimension();
  std::vector<Polynomial> c(n, Polynomial(n));
  if (order == 0) return JetField(v.chart(), 0, std::move(c));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].is_zero()) c[j] += (v[i] * w[j].derivative(i)).truncated(out_order);
      if (!w[i].is_zero()) c[j] -= (w[i] * v[j].derivative(i)).truncated(out_order);
    }
  return JetField(v.chart(), out_order, std::move(c));
}

std::optional<unsigned> order_at_origin(const JetField& v) {
  std::optional<unsigned> best;
  for (const auto& p : v.coefficients()) {
    if (p.is_zero()) continue;
    unsigned d = static_cast<unsigned>(p.min_degree());
    if (!best || d < *best) best = d;
  }
  return best;
}

}  // namespace lienorm
