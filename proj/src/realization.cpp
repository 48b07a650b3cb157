#include "lienorm/realization.hpp"

#include <string>

namespace lienorm {

namespace {

using Homogeneous = std::vector<Polynomial>;  // n components of one degree

Homogeneous zero_part(std::size_t n) { return Homogeneous(n, Polynomial(n)); }

bool is_zero_part(const Homogeneous& x) {
  for (const auto& p : x)
    if (!p.is_zero()) return false;
  return true;
}

void add_to(Homogeneous& acc, const Homogeneous& x, const Rational& c = 1) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * x[i];
}

// [X, Y]_i = X(Y_i) - Y(X_i)
Homogeneous bracket_parts(const Homogeneous& x, const Homogeneous& y) {
  const std::size_t n = x.size();
  Homogeneous out = zero_part(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero() && y[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[j].is_zero()) out[i] += x[j] * y[i].derivative(j);
      if (!y[j].is_zero()) out[i] -= y[j] * x[i].derivative(j);
    }
  }
  return out;
}

std::string render(const Homogeneous& x, const Chart& chart) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string(chart.variables());
  return s + ")";
}

}  // namespace

void RealizationProblem::validate() const {
  if (h.ambient_dim() != structure.dim()) throw InputError("h does not live in g");
  if (codimension() == 0) throw InputError("h has codimension 0");
  if (codimension() > kMaxVariables)
    throw InputError("codimension " + std::to_string(codimension()) + " exceeds " + std::to_string(kMaxVariables));
  if (order == 0) throw InputError("order must be at least 1");
  if (!is_closed(structure, h)) throw InputError("h is not a subalgebra");
}

JetField Realization::image(const QVector& x) const {
  JetField out = JetField::zero(chart, order);
  for (std::size_t a = 0; a < images.size(); ++a)
    if (x[a] != 0) out = out + x[a] * images[a];
  return out;
}

Realization realize_truncated(const RealizationProblem& p) {
  p.validate();
  const StructureConstants& s = p.structure;
  const std::size_t m = s.dim();
  const std::size_t n = p.codimension();
  const unsigned k = p.order;

  Realization out;
  out.chart = Chart::standard(n);
  out.order = k;
  out.kernel = largest_ideal_inside(s, p.h);

  // adapted basis: complement, h modulo the kernel, kernel
  std::vector<QVector> cols;
  for (std::size_t c : p.h.complement_indices()) cols.push_back(unit_vector(m, c));
  out.complement = cols;
  Subspace acc = out.kernel;
  for (const auto& v : p.h.basis()) {
    if (acc.contains(v)) continue;
    cols.push_back(v);
    acc = acc.sum(Subspace::span(m, {v}));
  }
  const std::size_t r = cols.size();
  for (const auto& v : out.kernel.basis()) cols.push_back(v);
  QMatrix b = from_columns(cols, m);
  auto binv = inverse(b);
  if (!binv) throw IdentityViolation("adapted basis is singular");
  StructureConstants q = change_basis(s, b);

  // phi[a][d]: degree-d part of the image of adapted element a < r
  std::vector<std::vector<Homogeneous>> phi(r, std::vector<Homogeneous>(k + 1, zero_part(n)));
  for (std::size_t i = 0; i < n; ++i) phi[i][0][i] = Polynomial::constant(n, 1);

  // degree d - 1 part of sum_c q(a, b, c) phi_c - [phi_a, phi_b], without the degree-d unknowns
  auto residual = [&](std::size_t a, std::size_t bb, unsigned d) {
    Homogeneous res = zero_part(n);
    for (std::size_t c = 0; c < r; ++c)
      if (q(a, bb, c) != 0) add_to(res, phi[c][d - 1], q(a, bb, c));
    for (unsigned t = 1; t < d; ++t) add_to(res, bracket_parts(phi[a][t], phi[bb][d - t]), -1);
    return res;
  };

  for (unsigned d = 1; d <= k; ++d) {
    std::vector<std::vector<Homogeneous>> rij(n, std::vector<Homogeneous>(r));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t bb = i + 1; bb < r; ++bb) rij[i][bb] = residual(i, bb, d);
    // d/dx_i phi_b^(d) = R(i, b) for b in h
    for (std::size_t bb = n; bb < r; ++bb) {
      Homogeneous x = zero_part(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < n; ++c) x[c] += Polynomial::variable(n, i) * rij[i][bb][c];
      for (auto& poly : x) poly *= Rational(1) / Rational(d);
      phi[bb][d] = std::move(x);
    }
    // d/dx_i phi_j^(d) - d/dx_j phi_i^(d) = R(i, j): radial primitive
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Homogeneous x = zero_part(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        Rational sign = i < j ? 1 : -1;
        const Homogeneous& rr = i < j ? rij[i][j] : rij[j][i];
        for (std::size_t c = 0; c < n; ++c) x[c] += sign * Polynomial::variable(n, i) * rr[c];
      }
      for (auto& poly : x) {
        poly *= Rational(1) / Rational(d + 1);
        nonzero += poly.terms().size();
      }
      phi[j][d] = std::move(x);
    }
    // every homomorphism equation in degree d - 1
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t bb = a + 1; bb < r; ++bb) {
        Homogeneous res = residual(a, bb, d);
        add_to(res, bracket_parts(phi[a][0], phi[bb][d]), -1);
        add_to(res, bracket_parts(phi[a][d], phi[bb][0]), -1);
        if (!is_zero_part(res))
          throw IdentityViolation("degree " + std::to_string(d - 1) + " system inconsistent for adapted pair (" +
                                  std::to_string(a + 1) + ", " + std::to_string(bb + 1) +
                                  "), residual " + render(res, out.chart));
      }
    out.gauge_log.push_back("degree " + std::to_string(d) + ": h parts forced, complement parts radial with " +
                            std::to_string(nonzero) + " nonzero coefficients");
  }

  std::vector<JetField> adapted;
  for (std::size_t a = 0; a < r; ++a) {
    Homogeneous sum = zero_part(n);
    for (unsigned d = 0; d <= k; ++d) add_to(sum, phi[a][d]);
    adapted.emplace_back(out.chart, k, std::move(sum));
  }
  for (std::size_t e = 0; e < m; ++e) {
    JetField img = JetField::zero(out.chart, k);
    for (std::size_t a = 0; a < r; ++a)
      if ((*binv)(a, e) != 0) img = img + (*binv)(a, e) * adapted[a];
    out.images.push_back(std::move(img));
  }
  return out;
}

RealizationCheck check_realization(const Realization& r, const RealizationProblem& p) {
  RealizationCheck out;
  const StructureConstants& s = p.structure;
  const std::size_t m = s.dim();
  if (r.images.size() != m) {
    out.failure_degree = 0;
    out.message = "expected " + std::to_string(m) + " images, got " + std::to_string(r.images.size());
    return out;
  }
  const std::size_t n = r.chart.dimension();
  if (r.complement.size() != n || !p.h.sum(Subspace::span(m, r.complement)).is_whole()) {
    out.failure_degree = 0;
    out.message = "complement does not span g / h";
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (r.image(r.complement[i]).value_at_origin() != unit_vector(n, i)) {
      out.failure_degree = 0;
      out.message = "complement element " + std::to_string(i + 1) + " is not d/dx" + std::to_string(i + 1) + " at 0";
      return out;
    }
  for (std::size_t t = 0; t < p.h.dim(); ++t)
    if (!lienorm::is_zero(r.image(p.h.basis()[t]).value_at_origin())) {
      out.failure_degree = 0;
      out.message = "h element " + std::to_string(t + 1) + " does not vanish at 0";
      return out;
    }
  if (r.order == 0) {
    out.passed = true;
    return out;
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      JetField diff = bracket(r.images[a], r.images[b]);
      for (std::size_t c = 0; c < m; ++c)
        if (s(a, b, c) != 0) diff = diff - s(a, b, c) * r.images[c].truncated(r.order - 1);
      for (unsigned d = 0; d < r.order; ++d) {
        bool bad = false;
        for (const auto& poly : diff.homogeneous_part(d)) bad = bad || !poly.is_zero();
        if (!bad) continue;
        if (!out.failure_degree || d < *out.failure_degree) {
          out.failure_degree = d;
          out.message = "bracket of basis elements " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        " fails in degree " + std::to_string(d);
        }
        break;
      }
    }
  out.passed = !out.failure_degree;
  return out;
}

Subspace isotropy_at_origin(const Realization& r) {
  const std::size_t n = r.chart.dimension();
  QMatrix ev(n, r.images.size());
  for (std::size_t a = 0; a < r.images.size(); ++a) {
    QVector v = r.images[a].value_at_origin();
    for (std::size_t i = 0; i < n; ++i) ev(i, a) = v[i];
  }
  return Subspace::span(r.images.size(), nullspace(ev));
}

}  // namespace lienorm
