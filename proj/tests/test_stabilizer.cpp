#include "lienorm/stabilizer.hpp"
#include "algebras.hpp"

#include <doctest.h>

using namespace lienorm;
using namespace lienorm::testing;

namespace {

Subspace coords(std::size_t m, std::vector<QVector> vs) { return Subspace::span(m, vs); }

}  // namespace

TEST_CASE("pick_generic_point") {
  auto tr = algebra({"x", "y"}, {{"1", "0"}, {"0", "1"}});
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    auto p = pick_generic_point(tr, seed);
    CHECK(p.point_rank == 2);
    CHECK(p.attempts == 1);
  }
  auto zdz = algebra({"z"}, {{"z"}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(pick_generic_point(zdz, seed).coordinates[0] != 0);
  CHECK(rank(evaluation_matrix(zdz, QVector{0})) == 0);
  auto lin = algebra({"x", "y"}, {{"1", "0"}, {"x", "0"}});
  auto p = pick_generic_point(lin, 5);
  CHECK(p.generic_rank == 1);
  CHECK(p.point_rank == 1);
  auto rat = algebra({"w"}, {{"1/(1+2*w)"}, {"(w+w^2)/(1+2*w)"}, {"(w+w^2)^2/(1+2*w)"}});
  auto q = pick_generic_point(rat, 3);
  CHECK(q.denominators.size() == 3);
  for (const auto& [expr, value] : q.denominators) CHECK(value != 0);
  // deterministic per seed
  CHECK(pick_generic_point(rat, 3).coordinates == q.coordinates);
}

TEST_CASE("is_transitive") {
  CHECK(is_transitive(sl2_p1()));
  CHECK(is_transitive(algebra({"z"}, {{"z"}})));
  CHECK(!is_transitive(algebra({"x", "y"}, {{"1", "0"}, {"x", "0"}})));
}

TEST_CASE("isotropy examples") {
  CHECK(isotropy_at(sl2_p1(), QVector{0}) == coords(3, {unit_vector(3, 1), unit_vector(3, 2)}));
  CHECK(isotropy_at(gl2_aff(), QVector{0, 0}) ==
        coords(6, {unit_vector(6, 2), unit_vector(6, 3), unit_vector(6, 4), unit_vector(6, 5)}));
  CHECK(isotropy_at(dx_dy_xdx(), QVector{0, 0}) == coords(3, {unit_vector(3, 2)}));
  // codimension n at generic points, equal dimension at two points
  for (auto a : {sl2_p1(), gl2_aff(), dx_dy_xdx()}) {
    auto p1 = pick_generic_point(a, 1), p2 = pick_generic_point(a, 2);
    REQUIRE(p1.coordinates != p2.coordinates);
    CHECK(isotropy_at(a, p1.coordinates).dim() == a.dim() - a.chart_dim());
    CHECK(isotropy_at(a, p1.coordinates).dim() == isotropy_at(a, p2.coordinates).dim());
  }
}

TEST_CASE("normalizer examples") {
  auto borel = coords(3, {unit_vector(3, 1), unit_vector(3, 2)});
  CHECK(normalizer_in_g(sl2_p1(), borel) == borel);
  auto ab = algebra({"x", "y"}, {{"1", "0"}, {"0", "1"}});
  CHECK(normalizer_in_g(ab, Subspace(2)).is_whole());
  CHECK(normalizer_in_g(dx_dy_xdx(), coords(3, {unit_vector(3, 2)})) ==
        coords(3, {unit_vector(3, 2), unit_vector(3, 1)}));
}

TEST_CASE("zero_locus_tangent examples") {
  CHECK(zero_locus_tangent(dx_dy_xdx(), coords(3, {unit_vector(3, 2)}), QVector{0, 0}) == 1);
  CHECK(zero_locus_tangent(sl2_p1(), coords(3, {unit_vector(3, 1), unit_vector(3, 2)}), QVector{0}) == 0);
  CHECK(zero_locus_tangent(gl2_aff(), Subspace(6), QVector{0, 0}) == 2);
  CHECK_THROWS_AS(zero_locus_tangent(sl2_p1(), coords(3, {unit_vector(3, 0)}), QVector{0}), DomainError);
}

TEST_CASE("stabilizer reports") {
  struct Case {
    VectorFieldAlgebra a;
    std::size_t h, n, t, c;
  };
  std::vector<Case> cases{{dx_dy_xdx(), 1, 2, 1, 1}, {gl2_aff(), 4, 4, 0, 0}, {sl2_p1(), 2, 2, 0, 0},
                          {aff_c1(), 1, 1, 0, 0}};
  for (const auto& cs : cases) {
    auto rep = stabilizer_report(cs.a, 7, 2);
    CHECK(rep.isotropy.dim() == cs.h);
    CHECK(rep.normalizer.dim() == cs.n);
    CHECK(rep.zero_locus_tangent_dim == cs.t);
    CHECK(rep.centralizer_dim == cs.c);
    CHECK(rep.centralizer_witnesses.size() == cs.c);
  }
  auto rep = stabilizer_report(dx_dy_xdx(), 7, 3);
  REQUIRE(rep.centralizer_witnesses.size() == 1);
  CHECK(rep.centralizer_witnesses[0] == field(Chart({"x", "y"}), {"0", "1"}));
  CHECK_THROWS_AS(stabilizer_report(algebra({"x", "y"}, {{"1", "0"}, {"x", "0"}}), 1), DomainError);
}

TEST_CASE("bounded centralizer is trivial when N = h") {
  for (auto a : {sl2_p1(), gl2_aff(), aff_c1()})
    for (unsigned d = 0; d <= 4; ++d) CHECK(centralizer_witnesses(a, d).empty());
}

TEST_CASE("normalizer_in_ambient") {
  auto sl2 = normalizer_in_ambient(sl2_p1(), 3);
  CHECK(sl2.fields.size() == 3);
  auto dx = normalizer_in_ambient(algebra({"x"}, {{"1"}}), 1);
  CHECK(dx.fields.size() == 2);
  for (const auto& v : dx.fields) CHECK(v.polynomial_degree() <= 1);
  auto ab = normalizer_in_ambient(algebra({"x", "y"}, {{"1", "0"}, {"0", "1"}}), 0);
  CHECK(ab.fields.size() == 2);
  // induced maps are derivations; their kernel is the bounded centralizer
  for (auto a : {sl2_p1(), dx_dy_xdx(), algebra({"x"}, {{"1"}}), gl2_aff()}) {
    for (unsigned d = 0; d <= 2; ++d) {
      auto amb = normalizer_in_ambient(a, d);
      std::size_t kernel = 0;
      std::vector<QVector> images;
      for (std::size_t t = 0; t < amb.fields.size(); ++t) {
        CHECK(is_derivation(a.structure(), amb.induced[t]));
        for (std::size_t i = 0; i < a.dim(); ++i)
          CHECK(bracket(amb.fields[t], a.basis()[i]) == a.element(amb.induced[t].column(i)));
        images.push_back(flatten(amb.induced[t]));
      }
      kernel = amb.fields.size() - Subspace::span(a.dim() * a.dim(), images).dim();
      CHECK(kernel == centralizer_witnesses(a, d).size());
    }
  }
}
