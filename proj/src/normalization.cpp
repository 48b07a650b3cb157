#include "lienorm/normalization.hpp"

#include <algorithm>

namespace lienorm {

std::vector<std::string> RationalMap::to_strings() const {
  std::vector<std::string> out;
  for (const auto& f : entries) out.push_back(f.to_string(source.variables()));
  return out;
}

bool verify_phi_related(const VectorField& v, const RationalMap& phi, const VectorField& w) {
  require_same_chart(v.chart(), phi.source);
  require_same_chart(w.chart(), phi.target);
  for (std::size_t i = 0; i < phi.entries.size(); ++i)
    if (!(apply(v, phi.entries[i]) == w[i].compose(phi.entries))) return false;
  return true;
}

bool NormalizationResult::all_passed() const {
  bool ok = std::all_of(related.begin(), related.end(), [](bool b) { return b; });
  for (const auto& c : checks) ok = ok && c.passed;
  return ok;
}

std::string to_string(NormalizationResult::Mode mode) {
  return mode == NormalizationResult::Mode::Curve ? "curve" : "affine";
}

// ---------------------------------------------------------------------------
// Curve case

namespace {

constexpr int kCombinationRange = 2;

std::vector<QVector> pair_candidates(std::size_t m) {
  std::vector<QVector> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(unit_vector(m, i));
  // integer combinations with entries in [-1, kCombinationRange], at least two nonzero
  std::vector<QVector> combos;
  QVector cur(m, Rational(-1));
  while (true) {
    std::size_t nonzero = std::count_if(cur.begin(), cur.end(), [](const Rational& x) { return x != 0; });
    if (nonzero >= 2) combos.push_back(cur);
    std::size_t k = 0;
    while (k < m && cur[k] == kCombinationRange) cur[k++] = -1;
    if (k == m) break;
    cur[k] += 1;
  }
  auto weight = [](const QVector& v) {
    Rational w = 0;
    for (const auto& x : v) w += abs(x);
    return w;
  };
  std::stable_sort(combos.begin(), combos.end(), [&](const QVector& a, const QVector& b) { return weight(a) < weight(b); });
  out.insert(out.end(), combos.begin(), combos.end());
  return out;
}

QVector scaled(const QVector& v, const Rational& c) {
  QVector out = v;
  for (auto& x : out) x *= c;
  return out;
}

VectorField curve_standard(const Chart& target, unsigned power) {
  return VectorField(target, {RationalFunction(Polynomial::monomial(1, Monomial::variable(0, power)))});
}

}  // namespace

std::pair<QVector, QVector> find_affine_pair(const VectorFieldAlgebra& a) {
  const StructureConstants& s = a.structure();
  const std::size_t m = s.dim();
  if (center(s).is_whole()) throw NormalizationError("algebra is abelian");
  const auto cands = pair_candidates(m);
  for (const auto& c : cands) {
    QMatrix ad = s.ad(c);
    for (const auto& lambda : rational_eigenvalues(ad)) {
      if (lambda == 0) continue;
      QMatrix x = ad;
      for (std::size_t i = 0; i < m; ++i) x(i, i) -= lambda;
      auto eig = nullspace(x);
      if (eig.empty()) continue;
      QVector v1 = eig.front();
      QVector v2 = scaled(c, -1 / lambda);
      if (s.bracket(v1, v2) != v1) throw IdentityViolation("eigenvector does not satisfy [v1, v2] = v1");
      return {v1, v2};
    }
  }
  throw NormalizationError("no pair with [v1, v2] = v1 among " + std::to_string(cands.size()) +
                           " candidates with coefficients in [-1, " + std::to_string(kCombinationRange) + "]");
}

NormalizationResult normalize_curve(const VectorFieldAlgebra& a) {
  if (a.chart_dim() != 1) throw NormalizationError("curve normalization needs a one-dimensional chart");
  if (a.dim() != 2 && a.dim() != 3) throw NormalizationError("curve normalization needs dimension 2 or 3");
  const StructureConstants& s = a.structure();
  const std::size_t m = a.dim();
  auto [x1, x2] = find_affine_pair(a);
  VectorField v1 = a.element(x1), v2 = a.element(x2);
  // [v1, v2] = v1 gives a b' - b a' = a, hence v1(b/a) = 1
  NormalizationResult r;
  r.mode = NormalizationResult::Mode::Curve;
  r.sign = 1;
  r.map.source = a.chart();
  r.map.target = Chart({"z"});
  r.map.entries = {RationalFunction(v2[0] / v1[0]) * Rational(r.sign)};
  const RationalFunction& phi = r.map.entries[0];
  r.checks.push_back({"v1(phi) = 1", apply(v1, phi) == RationalFunction(1, Rational(1))});
  r.checks.push_back({"v2(phi) = phi", apply(v2, phi) == phi});
  r.triple = {x1, x2};
  std::vector<QVector> cols{x1, x2};
  if (m == 3) {
    // [v1, v3] = 2 v2 and [v2, v3] = v3
    QMatrix ad1 = s.ad(x1), ad2 = s.ad(x2);
    QMatrix sys(2 * m, m, Rational(0));
    QVector rhs(2 * m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        sys(i, j) = ad1(i, j);
        sys(m + i, j) = ad2(i, j) - (i == j ? 1 : 0);
      }
      rhs[i] = 2 * x2[i];
    }
    auto sol = solve_linear(sys, rhs);
    if (!sol.particular) throw NormalizationError("no v3 with [v1, v3] = 2 v2 and [v2, v3] = v3");
    QVector x3 = *sol.particular;
    VectorField v3 = a.element(x3);
    r.checks.push_back({"v3(phi) = phi^2", apply(v3, phi) == phi * phi});
    r.triple.push_back(x3);
    cols.push_back(x3);
  }
  auto inv = inverse(from_columns(cols, m));
  if (!inv) throw NormalizationError("v1, v2, v3 do not form a basis");
  for (std::size_t i = 0; i < m; ++i) {
    QVector coords = *inv * unit_vector(m, i);
    VectorField w = VectorField::zero(r.map.target);
    for (std::size_t k = 0; k < m; ++k)
      if (coords[k] != 0) w = w + coords[k] * curve_standard(r.map.target, static_cast<unsigned>(k));
    r.related.push_back(verify_phi_related(a.basis()[i], r.map, w));
    r.transformed_basis.push_back(std::move(w));
  }
  for (const auto& c : r.checks)
    if (!c.passed) throw NormalizationError("verification failed: " + c.name);
  return r;
}

// ---------------------------------------------------------------------------
// Affine case

MultiVector theta0(std::span<const VectorField> m_basis) {
  MultiVector t = wedge(m_basis);
  if (t.is_zero()) throw DomainError("degenerate wedge: the fields do not span the tangent space");
  return t;
}

Rational trace_on(const VectorField& v, std::span<const VectorField> m_basis) {
  std::vector<FVector> fam;
  for (const auto& f : m_basis) fam.push_back(f.coefficients());
  Rational tr = 0;
  for (std::size_t j = 0; j < m_basis.size(); ++j) {
    auto c = express_in_constant_span(fam, bracket(v, m_basis[j]).coefficients());
    if (!c) throw DomainError("[v, m] is not in the span of m");
    tr += (*c)[j];
  }
  return tr;
}

bool trace_identity_check(const VectorField& v, std::span<const VectorField> m_basis) {
  MultiVector t = theta0(m_basis);
  Rational tr = trace_on(v, m_basis);
  return lie_derivative(v, t) == RationalFunction(v.dimension(), tr) * t;
}

std::vector<RationalFunction> psi_values(std::span<const VectorField> m_basis, std::span<const VectorField> h_basis) {
  const std::size_t n = m_basis.size();
  IndexSet top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = i;
  RationalFunction det = theta0(m_basis).component(top);
  std::vector<RationalFunction> out;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& w : h_basis) {
      std::vector<VectorField> fs;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) fs.push_back(m_basis[k]);
      fs.push_back(w);
      out.push_back(wedge(fs).component(top) / det);
    }
  return out;
}

namespace {

/// Echelon basis of span_Q(fs): numerators over a common denominator,
/// reduced with monomials ordered from the grlex-largest.
std::vector<RationalFunction> echelon_functions(const std::vector<RationalFunction>& fs, std::size_t nv) {
  Polynomial common = Polynomial::constant(nv, 1);
  for (const auto& f : fs) common = lcm(common, f.denominator());
  std::vector<Polynomial> nums;
  std::vector<Monomial> monos;
  for (const auto& f : fs) {
    Polynomial p = f.numerator() * *divide_exact(common, f.denominator());
    for (const auto& t : p.terms())
      if (std::find(monos.begin(), monos.end(), t.mono) == monos.end()) monos.push_back(t.mono);
    nums.push_back(std::move(p));
  }
  std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) { return grlex_less(b, a); });
  if (monos.empty()) return {};
  QMatrix mat(nums.size(), monos.size(), Rational(0));
  for (std::size_t r = 0; r < nums.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) mat(r, c) = nums[r].coefficient(monos[c]);
  Echelon e = rref(mat);
  std::vector<RationalFunction> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    std::vector<Term> ts;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (e.reduced(r, c) != 0) ts.push_back({monos[c], e.reduced(r, c)});
    out.emplace_back(Polynomial::from_terms(nv, std::move(ts)), common);
  }
  return out;
}

}  // namespace

std::vector<RationalFunction> build_V0(std::span<const VectorField> m_basis, std::span<const VectorField> h_basis,
                                       const QVector& base_point) {
  if (h_basis.empty()) throw AbelianCase("h = 0: the affine construction needs a non-abelian pair");
  const std::size_t n = m_basis.size();
  auto v0 = echelon_functions(psi_values(m_basis, h_basis), n);
  if (v0.size() < n)
    throw NonPrimitiveDetected("dim V0 = " + std::to_string(v0.size()) + " < " + std::to_string(n) +
                               ": the algebra preserves a foliation");
  if (v0.size() > n) throw IdentityViolation("dim V0 = " + std::to_string(v0.size()) + " exceeds n");
  for (const auto& f : v0) {
    auto val = f.evaluate(base_point);
    if (!val || *val != 0) throw IdentityViolation("V0 element does not vanish at the base point");
  }
  return v0;
}

NormalizationResult normalize_affine(const VectorFieldAlgebra& a, std::uint64_t seed) {
  const std::size_t n = a.chart_dim();
  if (!is_transitive(a)) throw NormalizationError("algebra is not transitive");
  BasePoint p = pick_generic_point(a, seed);
  Subspace h = isotropy_at(a, p.coordinates);
  if (h.is_zero()) throw AbelianCase("h = 0: the affine construction needs a non-abelian pair");
  MorozovVerdict verdict = classify_morozov(a.structure(), h);
  if (verdict.tag != MorozovTag::Affine || !verdict.abelian_ideal)
    throw NormalizationError("pair is not of affine type (" + to_string(verdict.tag) + ")");
  const Subspace& mm = *verdict.abelian_ideal;
  // rebase m so that its fields evaluate to the unit vectors at p
  QMatrix ev(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto val = a.element(mm.basis()[j]).evaluate(p.coordinates);
    for (std::size_t i = 0; i < n; ++i) ev(i, j) = (*val)[i];
  }
  auto evinv = inverse(ev);
  if (!evinv) throw IdentityViolation("abelian ideal does not span the tangent space at the base point");
  NormalizationResult r;
  r.mode = NormalizationResult::Mode::Affine;
  r.base_point = p.coordinates;
  std::vector<VectorField> m_fields, h_fields;
  for (std::size_t j = 0; j < n; ++j) {
    QVector c(a.dim(), Rational(0));
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < a.dim(); ++i) c[i] += (*evinv)(k, j) * mm.basis()[k][i];
    m_fields.push_back(a.element(c));
    r.ideal_basis.push_back(std::move(c));
  }
  for (const auto& x : h.basis()) h_fields.push_back(a.element(x));

  r.map.source = a.chart();
  r.map.target = Chart::standard(n);
  r.map.entries = build_V0(m_fields, h_fields, p.coordinates);

  std::vector<FVector> span_fam{FVector{RationalFunction(n, Rational(1))}};
  for (const auto& f : r.map.entries) span_fam.push_back(FVector{f});
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const VectorField& v = a.basis()[b];
    std::vector<RationalFunction> w;
    for (std::size_t i = 0; i < n; ++i) {
      auto c = express_in_constant_span(span_fam, FVector{apply(v, r.map.entries[i])});
      if (!c) throw NormalizationError("v(phi) is not affine in phi for basis field " + std::to_string(b + 1));
      RationalFunction wi(n, (*c)[0]);
      for (std::size_t k = 0; k < n; ++k) wi += (*c)[k + 1] * r.map.target.coordinate(k);
      w.push_back(std::move(wi));
    }
    VectorField wf(r.map.target, std::move(w));
    r.related.push_back(verify_phi_related(v, r.map, wf));
    r.transformed_basis.push_back(std::move(wf));
    r.checks.push_back({"trace identity for basis field " + std::to_string(b + 1), trace_identity_check(v, m_fields)});
  }
  if (!r.all_passed()) throw NormalizationError("affine normalization failed verification");
  return r;
}

}  // namespace lienorm
