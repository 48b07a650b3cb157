#include "lienorm/stabilizer.hpp"

#include <random>

namespace lienorm {

std::size_t generic_rank(const VectorFieldAlgebra& a) {
  const std::size_t m = a.dim(), n = a.chart_dim();
  FMatrix c(m, n, RationalFunction(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = a.basis()[i][j];
  return rank(c);
}

bool is_transitive(const VectorFieldAlgebra& a) { return generic_rank(a) == a.chart_dim(); }

QMatrix evaluation_matrix(const VectorFieldAlgebra& a, const QVector& p) {
  const std::size_t m = a.dim(), n = a.chart_dim();
  if (p.size() != n) throw DomainError("point has the wrong dimension");
  QMatrix e(n, m);
  for (std::size_t i = 0; i < m; ++i) {
    auto v = a.basis()[i].evaluate(p);
    if (!v) throw DomainError("basis field " + std::to_string(i + 1) + " is singular at the point");
    for (std::size_t j = 0; j < n; ++j) e(j, i) = (*v)[j];
  }
  return e;
}

BasePoint pick_generic_point(const VectorFieldAlgebra& a, std::uint64_t seed, unsigned max_attempts) {
  const std::size_t n = a.chart_dim();
  const std::size_t target = generic_rank(a);
  std::mt19937_64 rng(seed);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    const long h = 2 + attempt / 8;
    std::uniform_int_distribution<long> num(-h, h), den(1, h);
    QVector p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(ratio(num(rng), den(rng)));
    BasePoint bp;
    bool ok = true;
    for (const auto& v : a.basis()) {
      for (const auto& f : v.coefficients()) {
        if (f.is_polynomial()) continue;
        Rational d = f.denominator().evaluate(p);
        if (d == 0) {
          ok = false;
          break;
        }
        bp.denominators.emplace_back(f.denominator().to_string(a.chart().variables()), d);
      }
      if (!ok) break;
    }
    if (!ok) continue;
    std::size_t r = rank(evaluation_matrix(a, p));
    if (r != target) continue;
    bp.coordinates = std::move(p);
    bp.seed = seed;
    bp.attempts = attempt + 1;
    bp.generic_rank = target;
    bp.point_rank = r;
    return bp;
  }
  throw DegenerateInput("no generic point found in " + std::to_string(max_attempts) + " attempts");
}

Subspace isotropy_at(const VectorFieldAlgebra& a, const QVector& p) {
  return Subspace::span(a.dim(), nullspace(evaluation_matrix(a, p)));
}

Subspace normalizer_in_g(const VectorFieldAlgebra& a, const Subspace& h) { return normalizer(a.structure(), h); }

std::size_t zero_locus_tangent(const VectorFieldAlgebra& a, const Subspace& h, const QVector& p) {
  const std::size_t n = a.chart_dim();
  std::vector<QVector> gradients;
  for (const auto& coords : h.basis()) {
    VectorField v = recenter(a.element(coords), p);
    for (const auto& f : v.coefficients()) {
      if (f.is_zero()) continue;
      const Rational d0 = f.denominator().constant_term();
      if (d0 == 0) throw DomainError("coefficient is singular at the point");
      if (f.numerator().constant_term() != 0) throw DomainError("subalgebra field does not vanish at the point");
      // numerator vanishes at 0, so the gradient of f there is grad(num) / den(0)
      QVector g;
      for (std::size_t j = 0; j < n; ++j) g.push_back(f.numerator().derivative(j).constant_term() / d0);
      gradients.push_back(std::move(g));
    }
  }
  if (gradients.empty()) return n;
  return n - rank(from_rows(gradients, n));
}

namespace {

std::vector<VectorField> polynomial_field_basis(const Chart& chart, unsigned degree_bound) {
  const std::size_t n = chart.dimension();
  std::vector<VectorField> out;
  for (const auto& mono : monomials_up_to(n, degree_bound))
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<RationalFunction> c(n, RationalFunction(n));
      c[j] = RationalFunction(Polynomial::monomial(n, mono));
      out.emplace_back(chart, std::move(c));
    }
  return out;
}

FVector concat_brackets(const VectorField& v, const VectorFieldAlgebra& a) {
  FVector out;
  for (const auto& e : a.basis()) {
    VectorField b = bracket(v, e);
    out.insert(out.end(), b.coefficients().begin(), b.coefficients().end());
  }
  return out;
}

VectorField combine(const std::vector<VectorField>& fields, const QVector& c, const Chart& chart) {
  VectorField v = VectorField::zero(chart);
  for (std::size_t u = 0; u < fields.size(); ++u)
    if (c[u] != 0) v = v + c[u] * fields[u];
  return v;
}

}  // namespace

std::vector<VectorField> centralizer_witnesses(const VectorFieldAlgebra& a, unsigned degree_bound) {
  auto candidates = polynomial_field_basis(a.chart(), degree_bound);
  std::vector<FVector> family;
  for (const auto& v : candidates) family.push_back(concat_brackets(v, a));
  std::vector<VectorField> out;
  for (const auto& rel : constant_relations(family)) out.push_back(combine(candidates, rel, a.chart()));
  return out;
}

AmbientNormalizer normalizer_in_ambient(const VectorFieldAlgebra& a, unsigned degree_bound) {
  for (const auto& v : a.basis())
    if (!v.is_polynomial()) throw DomainError("ambient normalizer needs polynomial coefficients");
  const std::size_t m = a.dim(), n = a.chart_dim();
  auto candidates = polynomial_field_basis(a.chart(), degree_bound);
  std::vector<FVector> family;
  for (const auto& v : candidates) family.push_back(concat_brackets(v, a));
  // unknown d(k, i): contributes -e_k in block i
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i) {
      FVector col(m * n, RationalFunction(n));
      for (std::size_t j = 0; j < n; ++j) col[i * n + j] = -a.basis()[k][j];
      family.push_back(std::move(col));
    }
  AmbientNormalizer out;
  out.degree_bound = degree_bound;
  const std::size_t nc = candidates.size();
  for (const auto& rel : constant_relations(family)) {
    QVector c(rel.begin(), rel.begin() + static_cast<long>(nc));
    out.fields.push_back(combine(candidates, c, a.chart()));
    QMatrix d(m, m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i) d(k, i) = rel[nc + k * m + i];
    out.induced.push_back(std::move(d));
  }
  return out;
}

StabilizerReport stabilizer_report(const VectorFieldAlgebra& a, std::uint64_t seed,
                                   std::optional<unsigned> witness_degree) {
  StabilizerReport rep;
  rep.transitive = is_transitive(a);
  if (!rep.transitive) throw DomainError("algebra is not transitive");
  rep.point = pick_generic_point(a, seed);
  rep.isotropy = isotropy_at(a, rep.point.coordinates);
  rep.normalizer = normalizer_in_g(a, rep.isotropy);
  rep.zero_locus_tangent_dim = zero_locus_tangent(a, rep.isotropy, rep.point.coordinates);
  rep.centralizer_dim = rep.normalizer.dim() - rep.isotropy.dim();
  if (rep.isotropy.dim() + a.chart_dim() != a.dim())
    throw IdentityViolation("isotropy codimension differs from the chart dimension");
  if (rep.normalizer.dim() != rep.isotropy.dim() + rep.zero_locus_tangent_dim)
    throw IdentityViolation("dim N = " + std::to_string(rep.normalizer.dim()) + " but dim h + dim T0Z = " +
                            std::to_string(rep.isotropy.dim() + rep.zero_locus_tangent_dim));
  if (witness_degree) {
    rep.witness_degree = witness_degree;
    rep.centralizer_witnesses = centralizer_witnesses(a, *witness_degree);
    if (rep.centralizer_witnesses.size() > rep.centralizer_dim)
      throw IdentityViolation("centralizer witnesses exceed dim N - dim h");
  }
  return rep;
}

}  // namespace lienorm
