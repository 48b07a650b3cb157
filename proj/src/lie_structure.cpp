#include "lienorm/lie_structure.hpp"

#include <exception>

namespace lienorm {

StructureConstants::StructureConstants(std::size_t m, std::vector<Rational> tensor) : m_(m), c_(std::move(tensor)) {
  if (c_.size() != m * m * m) throw InputError("structure tensor must have m^3 entries");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if ((*this)(i, j, k) != -(*this)(j, i, k))
          throw InputError("structure tensor is not antisymmetric in (" + std::to_string(i + 1) + ", " +
                           std::to_string(j + 1) + ")");
  // [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        for (std::size_t r = 0; r < m; ++r) {
          Rational sum = 0;
          for (std::size_t l = 0; l < m; ++l) {
            sum += (*this)(j, k, l) * (*this)(i, l, r);
            sum += (*this)(k, i, l) * (*this)(j, l, r);
            sum += (*this)(i, j, l) * (*this)(k, l, r);
          }
          if (sum != 0)
            throw InputError("structure tensor violates the Jacobi identity at (" + std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ", " + std::to_string(k + 1) + ")");
        }
}

QVector StructureConstants::bracket(const QVector& a, const QVector& b) const {
  QVector out(m_, Rational(0));
  for (std::size_t i = 0; i < m_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m_; ++j) {
      if (b[j] == 0) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < m_; ++k)
        if ((*this)(i, j, k) != 0) out[k] += ab * (*this)(i, j, k);
    }
  }
  return out;
}

QMatrix StructureConstants::ad(const QVector& x) const {
  QMatrix a(m_, m_, Rational(0));
  for (std::size_t i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m_; ++j)
      for (std::size_t k = 0; k < m_; ++k)
        if ((*this)(i, j, k) != 0) a(k, j) += x[i] * (*this)(i, j, k);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Structure constants of vector fields

namespace {

std::vector<FVector> coefficient_family(std::span<const VectorField> basis) {
  std::vector<FVector> fam;
  for (const auto& v : basis) fam.push_back(v.coefficients());
  return fam;
}

void check_basis(std::span<const VectorField> basis) {
  if (basis.empty()) throw InputError("empty basis");
  for (const auto& v : basis) require_same_chart(basis[0].chart(), v.chart());
  auto fam = coefficient_family(basis);
  if (constant_rank(fam) != basis.size()) throw NotIndependent("basis fields are linearly dependent over Q");
}

/// Coefficients of [e_i, e_j] in the basis, or nullopt when outside the span.
std::optional<QVector> pair_bracket(std::span<const VectorField> basis, const std::vector<FVector>& fam, std::size_t i,
                                    std::size_t j, VectorField& br) {
  br = bracket(basis[i], basis[j]);
  return express_in_constant_span(fam, br.coefficients());
}

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  return pairs;
}

StructureConstants assemble(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                            const std::vector<QVector>& results) {
  std::vector<Rational> c(m * m * m, Rational(0));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    for (std::size_t k = 0; k < m; ++k) {
      c[(i * m + j) * m + k] = results[p][k];
      c[(j * m + i) * m + k] = -results[p][k];
    }
  }
  return StructureConstants(m, std::move(c));
}

}  // namespace

StructureConstants structure_constants_serial(std::span<const VectorField> basis) {
  check_basis(basis);
  const std::size_t m = basis.size();
  auto fam = coefficient_family(basis);
  auto pairs = upper_pairs(m);
  std::vector<QVector> results;
  for (auto [i, j] : pairs) {
    VectorField br;
    auto c = pair_bracket(basis, fam, i, j, br);
    if (!c) throw NotClosed(i, j, br);
    results.push_back(*std::move(c));
  }
  return assemble(m, pairs, results);
}

StructureConstants structure_constants(std::span<const VectorField> basis) {
  check_basis(basis);
  const std::size_t m = basis.size();
  auto fam = coefficient_family(basis);
  auto pairs = upper_pairs(m);
  const long npairs = static_cast<long>(pairs.size());
  std::vector<std::optional<QVector>> results(pairs.size());
  std::vector<VectorField> brackets(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (long p = 0; p < npairs; ++p) {
    try {
      results[p] = pair_bracket(basis, fam, pairs[p].first, pairs[p].second, brackets[p]);
    } catch (...) {
      errors[p] = std::current_exception();
    }
  }
  std::vector<QVector> out;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (errors[p]) std::rethrow_exception(errors[p]);
    if (!results[p]) throw NotClosed(pairs[p].first, pairs[p].second, brackets[p]);
    out.push_back(*std::move(results[p]));
  }
  return assemble(m, pairs, out);
}

VectorFieldAlgebra::VectorFieldAlgebra(std::vector<VectorField> basis) : basis_(std::move(basis)) {
  sc_ = structure_constants(basis_);
}

VectorField VectorFieldAlgebra::element(const QVector& x) const {
  VectorField v = VectorField::zero(chart());
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (x[i] != 0) v = v + x[i] * basis_[i];
  return v;
}

// ---------------------------------------------------------------------------
// Subspace structure

bool is_closed(const StructureConstants& s, const Subspace& h) {
  const auto& b = h.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!h.contains(s.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const StructureConstants& s, const Subspace& k) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (const auto& v : k.basis())
      if (!k.contains(s.bracket(unit_vector(s.dim(), i), v))) return false;
  return true;
}

void require_closed(const StructureConstants& s, const Subspace& h) {
  if (h.ambient_dim() != s.dim()) throw DomainError("subalgebra lives in the wrong dimension");
  if (!is_closed(s, h)) throw DomainError("subspace is not closed under the bracket");
}

Subspace center(const StructureConstants& s) { return centralizer(s, Subspace::whole(s.dim())); }

Subspace centralizer(const StructureConstants& s, const Subspace& sub) {
  const std::size_t m = s.dim();
  // [v, a] = -ad(a) v
  std::vector<QVector> rows;
  for (const auto& a : sub.basis()) {
    QMatrix ada = s.ad(a);
    for (std::size_t r = 0; r < m; ++r) rows.push_back(ada.row(r));
  }
  if (rows.empty()) return Subspace::whole(m);
  return Subspace::span(m, nullspace(from_rows(rows, m)));
}

Subspace bracket_span(const StructureConstants& s, const Subspace& a, const Subspace& b) {
  std::vector<QVector> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) vs.push_back(s.bracket(x, y));
  return Subspace::span(s.dim(), vs);
}

Subspace derived_algebra(const StructureConstants& s) {
  Subspace g = Subspace::whole(s.dim());
  return bracket_span(s, g, g);
}

Subspace normalizer(const StructureConstants& s, const Subspace& h) {
  const std::size_t m = s.dim();
  Subspace ann = h.annihilator();
  if (ann.is_zero()) return Subspace::whole(m);
  // <y, [v, w]> = -y^T ad(w) v = 0 for y in ann(h), w in h
  std::vector<QVector> rows;
  for (const auto& w : h.basis()) {
    QMatrix adw = s.ad(w);
    for (const auto& y : ann.basis()) {
      QVector row(m, Rational(0));
      for (std::size_t r = 0; r < m; ++r)
        if (y[r] != 0)
          for (std::size_t c = 0; c < m; ++c) row[c] += y[r] * adw(r, c);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::whole(m);
  return Subspace::span(m, nullspace(from_rows(rows, m)));
}

// ---------------------------------------------------------------------------
// Derivations

bool is_derivation(const StructureConstants& s, const QMatrix& d) {
  const std::size_t m = s.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      QVector ei = unit_vector(m, i), ej = unit_vector(m, j);
      QVector lhs = d * s.bracket(ei, ej);
      QVector rhs1 = s.bracket(d.column(i), ej), rhs2 = s.bracket(ei, d.column(j));
      for (std::size_t k = 0; k < m; ++k)
        if (lhs[k] != rhs1[k] + rhs2[k]) return false;
    }
  return true;
}

std::vector<QMatrix> derivations(const StructureConstants& s) {
  const std::size_t m = s.dim();
  if (m == 0) return {};
  // unknown D(r, c) sits at column r * m + c; D e_i = sum_l D(l, i) e_l
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        QVector row(m * m, Rational(0));
        for (std::size_t l = 0; l < m; ++l) {
          row[k * m + l] += s(i, j, l);   // D[e_i, e_j]
          row[l * m + i] -= s(l, j, k);   // [D e_i, e_j]
          row[l * m + j] -= s(i, l, k);   // [e_i, D e_j]
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<QMatrix> out;
  if (rows.empty()) {
    for (std::size_t p = 0; p < m * m; ++p) out.push_back(unflatten(unit_vector(m * m, p), m, m));
    return out;
  }
  for (const auto& v : nullspace(from_rows(rows, m * m))) out.push_back(unflatten(v, m, m));
  return out;
}

CompletenessReport is_complete(const StructureConstants& s) {
  const std::size_t m = s.dim();
  CompletenessReport rep;
  rep.center_dim = center(s).dim();
  auto der = derivations(s);
  rep.derivation_dim = der.size();
  std::vector<QVector> inner;
  for (std::size_t i = 0; i < m; ++i) inner.push_back(flatten(s.ad(i)));
  Subspace inner_space = Subspace::span(m * m, inner);
  rep.inner_dim = inner_space.dim();
  if (rep.center_dim != 0) {
    rep.reason = "center has dimension " + std::to_string(rep.center_dim);
  } else if (rep.derivation_dim != m) {
    rep.reason = "Der has dimension " + std::to_string(rep.derivation_dim) + ", expected " + std::to_string(m);
  }
  if (rep.reason.empty()) {
    rep.complete = true;
    for (std::size_t i = 0; i < m; ++i) rep.witness.push_back(s.ad(i));
  } else {
    for (const auto& d : der)
      if (!inner_space.contains(flatten(d))) {
        rep.witness.push_back(d);
        break;
      }
  }
  return rep;
}

QMatrix killing_form(const StructureConstants& s) {
  const std::size_t m = s.dim();
  std::vector<QMatrix> ads;
  for (std::size_t i = 0; i < m; ++i) ads.push_back(s.ad(i));
  QMatrix k(m, m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      // Tr(A B) = sum_{r,c} A(r,c) B(c,r)
      Rational t = 0;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (ads[i](r, c) != 0 && ads[j](c, r) != 0) t += ads[i](r, c) * ads[j](c, r);
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

bool is_semisimple(const StructureConstants& s) { return s.dim() > 0 && determinant(killing_form(s)) != 0; }

Subspace largest_ideal_inside(const StructureConstants& s, const Subspace& h) {
  const std::size_t m = s.dim();
  Subspace k = h;
  while (!k.is_zero()) {
    Subspace ann = k.annihilator();
    if (ann.is_zero()) return k;
    // coefficients a over basis b_t with <y, ad(e_j) sum a_t b_t> = 0
    const auto& b = k.basis();
    std::vector<QVector> rows;
    for (std::size_t j = 0; j < m; ++j) {
      QMatrix adj = s.ad(j);
      std::vector<QVector> images;
      for (const auto& bt : b) images.push_back(adj * bt);
      for (const auto& y : ann.basis()) {
        QVector row;
        for (const auto& im : images) {
          Rational dot = 0;
          for (std::size_t r = 0; r < m; ++r)
            if (y[r] != 0 && im[r] != 0) dot += y[r] * im[r];
          row.push_back(dot);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) return k;
    auto null = nullspace(from_rows(rows, b.size()));
    std::vector<QVector> next;
    for (const auto& a : null) {
      QVector v(m, Rational(0));
      for (std::size_t t = 0; t < b.size(); ++t)
        if (a[t] != 0)
          for (std::size_t r = 0; r < m; ++r) v[r] += a[t] * b[t][r];
      next.push_back(std::move(v));
    }
    Subspace k2 = Subspace::span(m, next);
    if (k2.dim() == k.dim()) return k;
    k = std::move(k2);
  }
  return k;
}

StructureConstants subalgebra_structure(const StructureConstants& s, const Subspace& sub) {
  require_closed(s, sub);
  const auto& b = sub.basis();
  const std::size_t r = b.size();
  std::vector<Rational> c(r * r * r, Rational(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      QVector coords = sub.coordinates(s.bracket(b[i], b[j]));
      for (std::size_t k = 0; k < r; ++k) c[(i * r + j) * r + k] = coords[k];
    }
  return StructureConstants(r, std::move(c));
}

StructureConstants change_basis(const StructureConstants& s, const QMatrix& b) {
  const std::size_t m = s.dim();
  auto inv = inverse(b);
  if (!inv) throw DomainError("basis change matrix is singular");
  std::vector<Rational> c(m * m * m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      QVector coords = *inv * s.bracket(b.column(i), b.column(j));
      for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = coords[k];
    }
  return StructureConstants(m, std::move(c));
}

std::string to_string(const StructureConstants& s) {
  std::string out;
  const std::size_t m = s.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      QVector v(m);
      for (std::size_t k = 0; k < m; ++k) v[k] = s(i, j, k);
      if (is_zero(v)) continue;
      out += "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] = " + to_string(v) + "\n";
    }
  return out;
}

}  // namespace lienorm
