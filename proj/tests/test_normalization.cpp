#include "lienorm/normalization.hpp"
#include "algebras.hpp"
#include "random_fields.hpp"

#include <doctest.h>

#include <random>

using namespace lienorm;
using namespace lienorm::testing;

namespace {

const Chart kZ({"z"});
const Chart kXY({"x", "y"});

VectorFieldAlgebra conjugate(const VectorFieldAlgebra& a, const Chart& source, const std::vector<RationalFunction>& tau) {
  std::vector<VectorField> fs;
  for (const auto& v : a.basis()) fs.push_back(pullback(v, source, tau));
  return VectorFieldAlgebra(std::move(fs));
}

VectorFieldAlgebra gln_aff(std::size_t n) {
  Chart c = Chart::standard(n);
  std::vector<VectorField> fs;
  for (std::size_t i = 0; i < n; ++i) fs.push_back(VectorField::partial(c, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fs.push_back(c.coordinate(j) * VectorField::partial(c, i));
  return VectorFieldAlgebra(std::move(fs));
}

bool in_span(const std::vector<RationalFunction>& fam, const RationalFunction& f) {
  std::vector<FVector> vs;
  for (const auto& g : fam) vs.push_back(FVector{g});
  return express_in_constant_span(vs, FVector{f}).has_value();
}

/// (theta ^ w) / Theta0 with theta the given n-1 fields.
RationalFunction psi(std::vector<VectorField> theta, const VectorField& w, const std::vector<VectorField>& m) {
  const std::size_t n = m.size();
  IndexSet top(n);
  for (std::size_t i = 0; i < n; ++i) top[i] = i;
  theta.push_back(w);
  return wedge(theta).component(top) / wedge(m).component(top);
}

std::vector<VectorField> fields_of(const VectorFieldAlgebra& a, const std::vector<QVector>& xs) {
  std::vector<VectorField> out;
  for (const auto& x : xs) out.push_back(a.element(x));
  return out;
}

}  // namespace

TEST_CASE("verify_phi_related examples") {
  RationalMap id{kZ, kZ, {kZ.parse("z")}};
  CHECK(verify_phi_related(field(kZ, {"1"}), id, field(kZ, {"1"})));
  RationalMap sq{kZ, kZ, {kZ.parse("z^2")}};
  CHECK(verify_phi_related(field(kZ, {"z"}), sq, field(kZ, {"2*z"})));
  CHECK(!verify_phi_related(field(kZ, {"1"}), sq, field(kZ, {"1"})));
}

TEST_CASE("find_affine_pair examples") {
  auto [a1, a2] = find_affine_pair(aff_c1());
  CHECK(a1 == QVector{1, 0});
  CHECK(a2 == QVector{0, 1});
  auto [b1, b2] = find_affine_pair(algebra({"z"}, {{"z"}, {"z^2"}}));
  CHECK(b1 == QVector{0, 1});
  CHECK(b2 == QVector{-1, 0});
  auto [c1, c2] = find_affine_pair(sl2_p1());
  CHECK(c1 == QVector{1, 0, 0});
  CHECK(c2 == QVector{0, 1, 0});
  CHECK_THROWS_AS(find_affine_pair(algebra({"z"}, {{"1"}})), NormalizationError);
  // postcondition across a batch of algebras
  for (const auto& a : {aff_c1(), sl2_p1(), algebra({"z"}, {{"1+z"}, {"z^2 + 2*z + 1"}}),
                        algebra({"z"}, {{"1"}, {"2*z + 3"}, {"z^2 - z"}})}) {
    auto [v1, v2] = find_affine_pair(a);
    CHECK(a.structure().bracket(v1, v2) == v1);
  }
}

TEST_CASE("normalize_curve examples") {
  Chart w({"w"});
  auto sl2 = algebra({"w"}, {{"1"}, {"w"}, {"w^2"}});
  auto r = normalize_curve(sl2);
  CHECK(r.map.entries[0] == w.parse("w"));
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 3);
  CHECK(r.sign == 1);
  CHECK(r.transformed_basis[0] == field(kZ, {"1"}));
  CHECK(r.transformed_basis[1] == field(kZ, {"z"}));
  CHECK(r.transformed_basis[2] == field(kZ, {"z^2"}));

  auto aff = normalize_curve(algebra({"w"}, {{"1"}, {"w"}}));
  CHECK(aff.map.entries[0] == w.parse("w"));
  CHECK(aff.checks.size() == 2);
  CHECK(aff.all_passed());

  // sl2 conjugated by w -> w / (1 - w) recovers the Moebius map
  std::vector<RationalFunction> tau{w.parse("w/(1-w)")};
  auto conj = conjugate(sl2_p1(), w, tau);
  auto rc = normalize_curve(conj);
  CHECK(rc.map.entries[0] == tau[0]);
  CHECK(rc.all_passed());

  CHECK_THROWS_AS(normalize_curve(gl2_aff()), NormalizationError);
  CHECK_THROWS_AS(normalize_curve(algebra({"z"}, {{"1"}})), NormalizationError);
}

TEST_CASE("curve round-trip under seeded conjugations") {
  Chart w({"w"});
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> coef(-4, 4);
  int done = 0;
  while (done < 20) {
    std::vector<RationalFunction> tau;
    if (done % 2 == 0) {
      int a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
      if (a * d - b * c == 0) continue;
      tau.push_back(w.parse(std::to_string(a) + "*w + " + std::to_string(b)) /
                    w.parse(std::to_string(c) + "*w + " + std::to_string(d)));
    } else {
      int l = coef(rng);
      if (l == 0) continue;
      tau.push_back(w.parse("w + " + std::to_string(l) + "*w^2"));
    }
    for (const auto& base : {sl2_p1(), aff_c1()}) {
      auto r = normalize_curve(conjugate(base, w, tau));
      CHECK(r.all_passed());
      for (bool f : r.related) CHECK(f);
      // the standard basis pulls back to itself, so phi is tau
      CHECK(r.map.entries[0] == tau[0]);
    }
    ++done;
  }
}

TEST_CASE("theta0 and trace identity examples") {
  std::vector<VectorField> m{field(kXY, {"1", "0"}), field(kXY, {"0", "1"})};
  auto t = theta0(m);
  CHECK(t.component({0, 1}) == RationalFunction(2, Rational(1)));
  auto xdx = field(kXY, {"x", "0"});
  CHECK(trace_on(xdx, m) == -1);
  CHECK(lie_derivative(xdx, t) == RationalFunction(2, Rational(-1)) * t);
  CHECK(trace_identity_check(xdx, m));
  CHECK(trace_identity_check(m[0], m));
  CHECK(trace_on(m[0], m) == 0);
  auto xdy = field(kXY, {"0", "x"});
  CHECK(trace_on(xdy, m) == 0);
  CHECK(lie_derivative(xdy, t).is_zero());
  CHECK(trace_identity_check(xdy, m));
  std::vector<VectorField> degenerate{field(kXY, {"1", "0"}), field(kXY, {"2", "0"})};
  CHECK_THROWS_AS(theta0(degenerate), DomainError);
  CHECK_THROWS_AS(trace_on(field(kXY, {"x^2", "0"}), m), DomainError);
}

TEST_CASE("build_V0 examples") {
  QVector origin{0, 0};
  std::vector<VectorField> m{field(kXY, {"1", "0"}), field(kXY, {"0", "1"})};
  std::vector<VectorField> h{field(kXY, {"x", "0"}), field(kXY, {"y", "0"}), field(kXY, {"0", "x"}),
                             field(kXY, {"0", "y"})};
  auto v0 = build_V0(m, h, origin);
  REQUIRE(v0.size() == 2);
  CHECK(v0[0] == kXY.parse("x"));
  CHECK(v0[1] == kXY.parse("y"));

  // conjugated by sigma = (x, y + x^2)
  std::vector<RationalFunction> sigma{kXY.parse("x"), kXY.parse("y + x^2")};
  std::vector<VectorField> mc, hc;
  for (const auto& v : m) mc.push_back(pullback(v, kXY, sigma));
  for (const auto& v : h) hc.push_back(pullback(v, kXY, sigma));
  auto v0c = build_V0(mc, hc, origin);
  REQUIRE(v0c.size() == 2);
  CHECK(in_span(v0c, sigma[0]));
  CHECK(in_span(v0c, sigma[1]));

  CHECK_THROWS_AS(build_V0(m, {}, origin), AbelianCase);
  // h = <x d/dx> only preserves the foliation by horizontal lines
  std::vector<VectorField> hsmall{field(kXY, {"x", "0"})};
  CHECK_THROWS_AS(build_V0(m, hsmall, origin), NonPrimitiveDetected);
}

TEST_CASE("normalize_affine examples") {
  auto r = normalize_affine(gl2_aff(), 1);
  CHECK(r.mode == NormalizationResult::Mode::Affine);
  CHECK(r.all_passed());
  REQUIRE(r.map.entries.size() == 2);
  for (const auto& f : r.map.entries) CHECK(in_span({kXY.parse("1"), kXY.parse("x"), kXY.parse("y")}, f));
  for (const auto& w : r.transformed_basis) CHECK(w.polynomial_degree() <= 1);

  std::vector<RationalFunction> sigma{kXY.parse("x"), kXY.parse("y + x^2")};
  std::vector<RationalFunction> sigma_inv{kXY.parse("x"), kXY.parse("y - x^2")};
  auto rc = normalize_affine(conjugate(gl2_aff(), kXY, sigma), 7);
  CHECK(rc.all_passed());
  for (const auto& w : rc.transformed_basis) CHECK(w.polynomial_degree() <= 1);
  for (const auto& f : rc.map.entries) {
    auto g = f.compose(sigma_inv);
    CHECK(g.is_polynomial());
    CHECK(g.numerator().total_degree() <= 1);
  }

  CHECK_THROWS_AS(normalize_affine(algebra({"x", "y"}, {{"1", "0"}, {"0", "1"}}), 1), AbelianCase);
  CHECK_THROWS_AS(normalize_affine(sl3_p2(), 1), NormalizationError);
  CHECK_THROWS_AS(normalize_affine(dx_dy_xdx(), 1), NormalizationError);
  // sl2 x C^2 is affine type as well
  CHECK(normalize_affine(sl2_aff(), 3).all_passed());
}

TEST_CASE("affine round-trip under triangular conjugations") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rnd = [&] { return std::to_string(coef(rng)); };
  for (std::size_t n : {2u, 3u}) {
    Chart c = Chart::standard(n);
    auto base = gln_aff(n);
    const int trials = n == 2 ? 4 : 2;
    for (int t = 0; t < trials; ++t) {
      std::vector<RationalFunction> sigma, sigma_inv;
      if (n == 2) {
        std::string p = rnd() + "*x1^3 + " + rnd() + "*x1^2 + " + rnd() + "*x1";
        sigma = {c.parse("x1"), c.parse("x2 + " + p)};
        sigma_inv = {c.parse("x1"), c.parse("x2 - (" + p + ")")};
      } else {
        std::string p = rnd() + "*x1^2 + " + rnd() + "*x1";
        std::string q = rnd() + "*x1*x2 + " + rnd() + "*x2^2 + " + rnd() + "*x1^3";
        sigma = {c.parse("x1"), c.parse("x2 + " + p), c.parse("x3 + " + q)};
        // inverse: x2 -> x2 - p(x1), x3 -> x3 - q(x1, x2 - p(x1))
        RationalFunction x2b = c.parse("x2 - (" + p + ")");
        std::vector<RationalFunction> sub{c.parse("x1"), x2b, c.parse("x3")};
        sigma_inv = {c.parse("x1"), x2b, c.parse("x3") - c.parse(q).compose(sub)};
      }
      for (std::size_t i = 0; i < n; ++i) REQUIRE(sigma[i].compose(sigma_inv) == c.coordinate(i));
      auto r = normalize_affine(conjugate(base, c, sigma), static_cast<std::uint64_t>(t + 1));
      CHECK(r.map.entries.size() == n);
      CHECK(r.all_passed());
      for (bool f : r.related) CHECK(f);
      for (const auto& w : r.transformed_basis) CHECK(w.polynomial_degree() <= 1);
      for (const auto& f : r.map.entries) {
        auto g = f.compose(sigma_inv);
        CHECK(g.is_polynomial());
        CHECK(g.numerator().total_degree() <= 1);
      }
    }
  }
}

TEST_CASE("V0 vanishes at the base point, 1 lies in psi(m), module property of psi") {
  for (const auto& a : {gl2_aff(), sl2_aff(), gln_aff(3)}) {
    auto r = normalize_affine(a, 11);
    for (const auto& f : r.map.entries) CHECK(f.evaluate(r.base_point) == Rational(0));
    auto m = fields_of(a, r.ideal_basis);
    const std::size_t n = m.size();
    auto theta_without = [&](std::size_t j) {
      std::vector<VectorField> th;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) th.push_back(m[k]);
      return th;
    };
    // psi(theta_j (x) m_j) is the constant +-1
    for (std::size_t j = 0; j < n; ++j) {
      auto val = psi(theta_without(j), m[j], m);
      CHECK(val.is_polynomial());
      CHECK(val.numerator().total_degree() == 0);
    }
    for (const auto& v : a.basis()) {
      Rational tr = trace_on(v, m);
      for (std::size_t j = 0; j < n; ++j) {
        auto th = theta_without(j);
        for (const auto& w : a.basis()) {
          RationalFunction lhs = psi(th, bracket(v, w), m);
          for (std::size_t k = 0; k < th.size(); ++k) {
            auto th2 = th;
            th2[k] = bracket(v, th[k]);
            lhs += psi(th2, w, m);
          }
          auto f = psi(th, w, m);
          CHECK(lhs == apply(v, f) + tr * f);
        }
      }
    }
  }
}
