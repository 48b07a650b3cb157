#include "lienorm/realization.hpp"
#include "lienorm/stabilizer.hpp"
#include "algebras.hpp"

#include <doctest.h>

using namespace lienorm;
using namespace lienorm::testing;

namespace {

RealizationProblem pair_at_origin(const VectorFieldAlgebra& a, unsigned k) {
  QVector origin(a.chart_dim(), Rational(0));
  return {a.structure(), isotropy_at(a, origin), k};
}

JetField jet(const VectorFieldAlgebra& a, std::size_t i, unsigned k) {
  auto t = truncate(a.basis()[i], k);
  return JetField(Chart::standard(a.chart_dim()), k, t.coefficients());
}

}  // namespace

TEST_CASE("validate") {
  CHECK_THROWS_AS((RealizationProblem{sl2_ehf(), Subspace::whole(3), 2}.validate()), InputError);
  CHECK_THROWS_AS((RealizationProblem{sl2_ehf(), Subspace(3), 0}.validate()), InputError);
  // span{E, F} is not closed
  CHECK_THROWS_AS((RealizationProblem{sl2_ehf(), Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)}), 2}.validate()),
                  InputError);
  CHECK_NOTHROW((RealizationProblem{sl2_ehf(), Subspace(3), 2}.validate()));
}

TEST_CASE("realize_truncated examples") {
  for (unsigned k : {1u, 2u, 5u}) {
    auto r = realize_truncated({abelian(1), Subspace(1), k});
    REQUIRE(r.images.size() == 1);
    CHECK(r.images[0].coefficients()[0] == Polynomial::constant(1, 1));
  }
  // sl2 with its Borel subalgebra: exactly the standard fields
  auto sl2 = sl2_p1();
  auto p = pair_at_origin(sl2, 3);
  auto r = realize_truncated(p);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.images[i] == jet(sl2, i, 3));
  CHECK(check_realization(r, p).passed);
  CHECK(r.gauge_log.size() == 3);

  auto gl2 = gl2_aff();
  auto pg = pair_at_origin(gl2, 2);
  auto rg = realize_truncated(pg);
  for (std::size_t i = 0; i < 6; ++i) CHECK(rg.images[i] == jet(gl2, i, 2));
  CHECK(check_realization(rg, pg).passed);
}

TEST_CASE("check_realization examples") {
  auto sl2 = sl2_p1();
  auto p = pair_at_origin(sl2, 3);
  Realization direct;
  direct.chart = Chart::standard(1);
  direct.order = 3;
  for (std::size_t i = 0; i < 3; ++i) direct.images.push_back(jet(sl2, i, 3));
  direct.complement = {unit_vector(3, 0)};
  direct.kernel = Subspace(3);
  CHECK(check_realization(direct, p).passed);

  // corrupt the x^2 coefficient of the third image: [d/dx, x^2 d/dx] breaks in degree 1
  auto bad = direct;
  bad.images[2] = 2 * direct.images[2];
  auto rep = check_realization(bad, p);
  CHECK(!rep.passed);
  REQUIRE(rep.failure_degree);
  CHECK(*rep.failure_degree == 1);

  // flipping a degree-0 coefficient is caught at degree 0
  auto bad0 = direct;
  bad0.images[0] = Rational(-1) * direct.images[0];
  auto rep0 = check_realization(bad0, p);
  CHECK(!rep0.passed);
  CHECK(rep0.failure_degree == std::optional<unsigned>(0));

  // an isotropy element that does not vanish
  auto bad1 = direct;
  bad1.images[1] = direct.images[1] + direct.images[0];
  CHECK(check_realization(bad1, p).failure_degree == std::optional<unsigned>(0));
}

TEST_CASE("realization properties on a batch of pairs") {
  std::vector<std::pair<StructureConstants, Subspace>> pairs;
  for (const auto& a : {sl2_p1(), aff_c1(), gl2_aff(), sl2_aff(), sl3_p2(), dx_dy_xdx(), sl2_diagonal_c1xc1()}) {
    QVector origin(a.chart_dim(), Rational(0));
    pairs.emplace_back(a.structure(), isotropy_at(a, origin));
    auto gp = pick_generic_point(a, 5);
    if (gp.point_rank == a.chart_dim()) pairs.emplace_back(a.structure(), isotropy_at(a, gp.coordinates));
  }
  pairs.emplace_back(sl2_sum(), diagonal_of_sum());
  pairs.emplace_back(sl2_ehf(), Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)}));
  pairs.emplace_back(sl2_ehf(), Subspace::span(3, {unit_vector(3, 1)}));
  pairs.emplace_back(aff1(), Subspace(2));
  for (const auto& [s, h] : pairs) {
    for (unsigned k : {2u, 3u, 4u}) {
      RealizationProblem p{s, h, k};
      auto r = realize_truncated(p);
      auto rep = check_realization(r, p);
      CHECK_MESSAGE(rep.passed, rep.message);
      // evaluation at 0 has rank n
      CHECK(isotropy_at_origin(r).dim() == h.dim());
      CHECK(isotropy_at_origin(r) == h);
      CHECK(r.kernel == largest_ideal_inside(s, h));
    }
  }
}

TEST_CASE("non-effective pair: the kernel is the largest ideal inside h") {
  // g = <dx, dy, x dx>, h = <dy, x dx>; <dy> is an ideal inside h
  auto a = dx_dy_xdx();
  Subspace h = Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)});
  RealizationProblem p{a.structure(), h, 3};
  auto r = realize_truncated(p);
  CHECK(r.kernel == Subspace::span(3, {unit_vector(3, 1)}));
  CHECK(r.images[1].is_zero());
  CHECK(!r.images[2].is_zero());
  CHECK(check_realization(r, p).passed);
  CHECK(isotropy_at_origin(r) == h);
  // kernel of the realization map equals the largest ideal
  std::vector<QVector> kernel_vectors;
  for (const auto& x : {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)})
    if (r.image(x).is_zero()) kernel_vectors.push_back(x);
  CHECK(Subspace::span(3, kernel_vectors) == largest_ideal_inside(a.structure(), h));
}
