#include "lienorm/primitivity.hpp"

#include <algorithm>

namespace lienorm {

namespace {

std::vector<QVector> complement_vectors(const Subspace& h, ComplementConvention convention) {
  const std::size_t m = h.ambient_dim();
  std::vector<QVector> out;
  if (convention == ComplementConvention::NonPivot) {
    for (auto c : h.complement_indices()) out.push_back(unit_vector(m, c));
    return out;
  }
  Subspace acc = h;
  for (std::size_t i = m; i-- > 0;) {
    QVector e = unit_vector(m, i);
    if (acc.contains(e)) continue;
    out.push_back(e);
    acc = acc.sum(Subspace::span(m, {e}));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

IsotropyRepresentation isotropy_representation(const StructureConstants& s, const Subspace& h,
                                               ComplementConvention convention) {
  require_closed(s, h);
  const std::size_t m = s.dim();
  IsotropyRepresentation r;
  r.h_basis = h.basis();
  r.complement = complement_vectors(h, convention);
  r.dim = r.complement.size();
  // coordinates of v in the basis (h_basis, complement)
  std::vector<QVector> cols = r.h_basis;
  cols.insert(cols.end(), r.complement.begin(), r.complement.end());
  QMatrix inv = *inverse(from_columns(cols, m));
  const std::size_t k = r.h_basis.size();
  for (const auto& w : r.h_basis) {
    QMatrix a(r.dim, r.dim);
    for (std::size_t j = 0; j < r.dim; ++j) {
      QVector c = inv * s.bracket(w, r.complement[j]);
      for (std::size_t i = 0; i < r.dim; ++i) a(i, j) = c[k + i];
    }
    r.matrices.push_back(std::move(a));
  }
  return r;
}

Subspace generated_algebra(std::span<const QMatrix> matrices, std::size_t d) {
  Subspace alg = Subspace::span(d * d, {flatten(identity_matrix(d))});
  std::vector<QMatrix> frontier{identity_matrix(d)};
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : matrices) {
        QMatrix y = x * g;
        QVector fy = flatten(y);
        if (alg.contains(fy)) continue;
        alg = alg.sum(Subspace::span(d * d, {fy}));
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return alg;
}

bool is_irreducible(std::span<const QMatrix> matrices, std::size_t d) {
  if (d == 0) return false;
  return generated_algebra(matrices, d).dim() == d * d;
}

bool is_irreducible(const IsotropyRepresentation& r) { return is_irreducible(r.matrices, r.dim); }

// ---------------------------------------------------------------------------
// Intermediate subalgebras

namespace {

constexpr std::size_t kMaxWordLength = 4;
constexpr std::size_t kMaxWords = 256;

std::vector<QMatrix> words(std::span<const QMatrix> gens, std::size_t d) {
  std::vector<QMatrix> out;
  std::vector<QVector> seen;
  std::vector<QMatrix> layer{identity_matrix(d)};
  for (std::size_t len = 1; len <= kMaxWordLength && out.size() < kMaxWords; ++len) {
    std::vector<QMatrix> next;
    for (const auto& w : layer)
      for (const auto& g : gens) {
        QMatrix y = w * g;
        QVector fy = flatten(y);
        if (std::find(seen.begin(), seen.end(), fy) != seen.end()) continue;
        seen.push_back(fy);
        out.push_back(y);
        next.push_back(std::move(y));
        if (out.size() >= kMaxWords) break;
      }
    layer = std::move(next);
  }
  return out;
}

/// Smallest subspace containing v and invariant under the algebra.
Subspace cyclic(const std::vector<QMatrix>& alg_basis, const QVector& v, std::size_t d) {
  std::vector<QVector> vs;
  for (const auto& x : alg_basis) vs.push_back(x * v);
  return Subspace::span(d, vs);
}

void add_candidate(std::vector<Subspace>& cands, const Subspace& w) {
  if (w.is_zero() || w.is_whole()) return;
  if (std::find(cands.begin(), cands.end(), w) == cands.end()) cands.push_back(w);
}

Subspace preimage(const IsotropyRepresentation& r, const Subspace& w, std::size_t m) {
  std::vector<QVector> vs = r.h_basis;
  for (const auto& b : w.basis()) {
    QVector v(m, Rational(0));
    for (std::size_t j = 0; j < r.dim; ++j)
      if (b[j] != 0)
        for (std::size_t i = 0; i < m; ++i) v[i] += b[j] * r.complement[j][i];
    vs.push_back(std::move(v));
  }
  return Subspace::span(m, vs);
}

std::vector<QMatrix> unflatten_all(const Subspace& alg, std::size_t d) {
  std::vector<QMatrix> out;
  for (const auto& v : alg.basis()) out.push_back(unflatten(v, d, d));
  return out;
}

std::vector<Subspace> invariant_candidates(const IsotropyRepresentation& r) {
  const std::size_t d = r.dim;
  std::vector<QMatrix> gens_t;
  for (const auto& g : r.matrices) gens_t.push_back(g.transpose());
  const auto alg = unflatten_all(generated_algebra(r.matrices, d), d);
  const auto alg_t = unflatten_all(generated_algebra(gens_t, d), d);

  // Elements whose kernels seed cyclic submodules.
  auto shifted = [d](const std::vector<QMatrix>& ws) {
    std::vector<QMatrix> out;
    for (const auto& w : ws) {
      for (int c = -2; c <= 2; ++c) {
        QMatrix x = w;
        for (std::size_t i = 0; i < d; ++i) x(i, i) += c;
        out.push_back(std::move(x));
      }
      for (const auto& lambda : rational_eigenvalues(w)) {
        if (lambda.get_den() == 1 && lambda >= -2 && lambda <= 2) continue;
        QMatrix x = w;
        for (std::size_t i = 0; i < d; ++i) x(i, i) -= lambda;
        out.push_back(std::move(x));
      }
    }
    return out;
  };
  auto seeds = [d](const std::vector<QMatrix>& elems) {
    std::vector<QVector> out;
    for (std::size_t i = 0; i < d; ++i) out.push_back(unit_vector(d, i));
    for (const auto& x : elems)
      for (auto& v : nullspace(x))
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    return out;
  };

  std::vector<Subspace> cands;
  for (const auto& v : seeds(shifted(words(r.matrices, d)))) add_candidate(cands, cyclic(alg, v, d));
  for (const auto& v : seeds(shifted(words(gens_t, d)))) add_candidate(cands, cyclic(alg_t, v, d).annihilator());
  const std::size_t base = cands.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = i + 1; j < base; ++j) {
      add_candidate(cands, cands[i].sum(cands[j]));
      add_candidate(cands, cands[i].intersect(cands[j]));
    }
  std::stable_sort(cands.begin(), cands.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  return cands;
}

}  // namespace

IntermediateSearch find_intermediate(const StructureConstants& s, const Subspace& h) {
  if (h.is_whole()) throw DomainError("h equals g");
  IsotropyRepresentation r = isotropy_representation(s, h);
  IntermediateSearch out;
  if (is_irreducible(r)) {
    out.outcome = IntermediateSearch::Outcome::Primitive;
    out.reason = "isotropy action on g/h is absolutely irreducible";
    return out;
  }
  auto cands = invariant_candidates(r);
  for (const auto& w : cands) {
    ++out.candidates_tested;
    Subspace l = preimage(r, w, s.dim());
    if (is_closed(s, l)) {
      out.outcome = IntermediateSearch::Outcome::Witness;
      out.witness = l;
      out.reason = "preimage of an invariant subspace of dimension " + std::to_string(w.dim()) + " is closed";
      return out;
    }
  }
  out.outcome = IntermediateSearch::Outcome::Unknown;
  out.reason = "isotropy action is reducible but none of " + std::to_string(cands.size()) +
               " candidate invariant subspaces has a closed preimage";
  return out;
}

// ---------------------------------------------------------------------------
// Morozov classification

std::string to_string(MorozovTag tag) {
  switch (tag) {
    case MorozovTag::Simple: return "Simple";
    case MorozovTag::Diagonal: return "Diagonal";
    case MorozovTag::Affine: return "Affine";
    case MorozovTag::NotPrimitive: return "NotPrimitive";
    case MorozovTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::vector<QMatrix> ad_matrices(const StructureConstants& s) {
  std::vector<QMatrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(s.ad(i));
  return out;
}

/// Ideals from the eigenspaces of a centroid element with two distinct
/// rational eigenvalues.
std::optional<std::pair<Subspace, Subspace>> split_by_centroid(const StructureConstants& s,
                                                               const std::vector<QMatrix>& centroid) {
  const std::size_t m = s.dim();
  for (const auto& z : centroid) {
    auto eig = rational_eigenvalues(z);
    if (eig.size() != 2) continue;
    std::vector<Subspace> parts;
    for (const auto& lambda : eig) {
      QMatrix x = z;
      for (std::size_t i = 0; i < m; ++i) x(i, i) -= lambda;
      parts.push_back(Subspace::span(m, nullspace(x)));
    }
    if (parts[0].dim() + parts[1].dim() != m) continue;
    return std::make_pair(parts[0], parts[1]);
  }
  return std::nullopt;
}

bool reductive_with_small_center(const StructureConstants& s, const Subspace& h) {
  if (h.is_zero()) return true;
  StructureConstants sh = subalgebra_structure(s, h);
  Subspace dh = derived_algebra(sh);
  Subspace zh = center(sh);
  if (zh.dim() > 1) return false;
  if (dh.dim() + zh.dim() != sh.dim() || !dh.intersect(zh).is_zero()) return false;
  if (dh.is_zero()) return true;
  return is_semisimple(subalgebra_structure(sh, dh));
}

}  // namespace

MorozovVerdict classify_morozov(const StructureConstants& s, const Subspace& h) {
  require_closed(s, h);
  const std::size_t m = s.dim();
  MorozovVerdict v;
  v.dim_g = m;
  v.dim_h = h.dim();
  v.killing_determinant = determinant(killing_form(s));
  v.semisimple = m > 0 && v.killing_determinant != 0;
  Subspace kernel = largest_ideal_inside(s, h);
  v.effective = kernel.is_zero();
  if (h.is_whole()) {
    v.reason = "h equals g";
    return v;
  }
  IntermediateSearch inter = find_intermediate(s, h);
  if (inter.outcome == IntermediateSearch::Outcome::Witness) {
    v.tag = MorozovTag::NotPrimitive;
    v.witness = inter.witness;
    v.reason = inter.reason;
    return v;
  }
  if (inter.outcome == IntermediateSearch::Outcome::Unknown) {
    v.reason = inter.reason;
    return v;
  }
  if (!v.effective) {
    v.reason = "pair is not effective: h contains an ideal of dimension " + std::to_string(kernel.dim());
    return v;
  }
  auto ads = ad_matrices(s);
  v.ad_algebra_dim = generated_algebra(ads, m).dim();

  if (v.semisimple && m > 1 && v.ad_algebra_dim == m * m) {
    v.tag = MorozovTag::Simple;
    v.reason = "g is semisimple and its adjoint representation is absolutely irreducible";
    return v;
  }
  if (v.semisimple) {
    auto centroid = commutant(ads, m);
    if (centroid.size() == 2) {
      if (auto split = split_by_centroid(s, centroid)) {
        auto& [i1, i2] = *split;
        if (is_ideal(s, i1) && is_ideal(s, i2) && i1.dim() == h.dim() && i2.dim() == h.dim() &&
            h.intersect(i1).is_zero() && h.intersect(i2).is_zero()) {
          v.tag = MorozovTag::Diagonal;
          v.ideals = {i1, i2};
          v.reason = "g splits into two ideals of dimension dim h, each meeting h trivially";
          return v;
        }
      }
    }
    v.reason = "g is semisimple but neither simple nor of diagonal type";
    return v;
  }
  // affine: the abelian ideal is the radical (Killing-orthogonal of [g, g]) inside [g, g]
  Subspace mm;
  if (h.is_zero()) {
    mm = Subspace::whole(m);
  } else {
    Subspace dg = derived_algebra(s);
    QMatrix k = killing_form(s);
    std::vector<QVector> rows;
    for (const auto& x : dg.basis()) rows.push_back(k * x);
    Subspace rad = rows.empty() ? Subspace::whole(m) : Subspace::span(m, nullspace(from_rows(rows, m)));
    mm = rad.intersect(dg);
  }
  auto fail = [&](const std::string& why) {
    v.reason = "not of affine type: " + why;
    return v;
  };
  if (mm.dim() + h.dim() != m || !mm.intersect(h).is_zero()) return fail("no ideal complementary to h");
  if (!is_ideal(s, mm)) return fail("complement is not an ideal");
  if (!bracket_span(s, mm, mm).is_zero()) return fail("complement is not abelian");
  std::vector<QMatrix> action;
  std::vector<QVector> flat;
  for (const auto& w : h.basis()) {
    QMatrix a(mm.dim(), mm.dim());
    for (std::size_t j = 0; j < mm.dim(); ++j) {
      QVector c = mm.coordinates(s.bracket(w, mm.basis()[j]));
      for (std::size_t i = 0; i < mm.dim(); ++i) a(i, j) = c[i];
    }
    flat.push_back(flatten(a));
    action.push_back(std::move(a));
  }
  if (Subspace::span(mm.dim() * mm.dim(), flat).dim() != h.dim()) return fail("h does not act faithfully");
  if (!is_irreducible(action, mm.dim())) return fail("h does not act irreducibly");
  if (!reductive_with_small_center(s, h)) return fail("h is not semisimple plus a center of dimension <= 1");
  v.tag = MorozovTag::Affine;
  v.abelian_ideal = mm;
  v.reason = "g = h + m with m an abelian ideal on which h acts faithfully and irreducibly";
  return v;
}

}  // namespace lienorm
