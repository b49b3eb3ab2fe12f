#include "mpweyl/classify.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "mpweyl/errors.hpp"

using namespace mpweyl;

namespace {

IdealCoordinates coords(std::vector<Scalar> mu, std::vector<Scalar> nu) {
  return IdealCoordinates{std::move(mu), std::move(nu)};
}

IdealCoordinates shifted(const IdealCoordinates& c, const std::vector<long>& k) {
  IdealCoordinates out = c;
  for (int i = 1; i <= c.rank(); ++i) {
    out.mu[i - 1] *= Scalar::r_power(i, k[i - 1]);
    out.nu[i - 1] *= Scalar::s_power(i, k[i - 1]);
  }
  return out;
}

using Matrix = std::vector<std::vector<int>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

Matrix mat_add(Matrix a, const Matrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += b[i][j];
  }
  return a;
}

bool mat_zero(const Matrix& a) {
  for (const auto& row : a) {
    for (int v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

// Sum of all left-multiplication matrices of the arrows of one kind at one
// index: the total raising (a) or lowering (b) operator.
Matrix total_arrow_matrix(const QuiverPresentation& skel, char kind, int index) {
  Matrix total(skel.dimension(), std::vector<int>(skel.dimension(), 0));
  for (const QuiverArrow& arrow : skel.arrows()) {
    if (arrow.kind == kind && arrow.index == index) {
      total = mat_add(std::move(total), skel.arrow_matrix(arrow));
    }
  }
  return total;
}

}  // namespace

TEST_CASE("break detection pins the orbit walls") {
  // A break at the input ideal itself: nu = (r/s) mu.
  auto br = detect_breaks(coords(
      {Scalar(2)}, {Scalar(2) * Scalar::param_r(1) * Scalar::param_s(1).inverse()}));
  CHECK(br.J == std::set<int>{1});
  CHECK(br.p.at(1) == 0);
  CHECK(br.sign.at(1) == 1);
  CHECK(br.designated.mu[0] == Scalar(2));
  CHECK(br.designated.nu[0] ==
        Scalar(2) * Scalar::param_r(1) * Scalar::param_s(1).inverse());

  // Equal coordinates break one step down at every index.
  br = detect_breaks(coords({Scalar::one(), Scalar::one()},
                            {Scalar::one(), Scalar::one()}));
  CHECK(br.J == std::set<int>{1, 2});
  CHECK(br.p.at(1) == -1);
  CHECK(br.p.at(2) == -1);
  CHECK(br.designated.mu[0] == Scalar::r_power(1, -1));
  CHECK(br.designated.mu[1] == Scalar::r_power(2, -1));
  CHECK(br.designated.nu[0] == Scalar::s_power(1, -1));
  // The designated ideal satisfies the one-step break criterion literally.
  CHECK(br.designated.nu[0] ==
        Scalar::param_r(1) * Scalar::param_s(1).inverse() * br.designated.mu[0]);
  CHECK(br.designated.nu[1] ==
        Scalar::param_r(2) * Scalar::param_s(2).inverse() * br.designated.mu[1]);

  // A plain r-power ratio is not of break shape.
  br = detect_breaks(coords({Scalar::one()}, {Scalar::r_power(1, 2)}));
  CHECK(br.J.empty());
  CHECK(br.designated.nu[0] == Scalar::r_power(1, 2));

  // Negative sign, shifted break.
  Scalar mu0 = Scalar(5);
  Scalar nu0 = -Scalar(5) * Scalar::r_power(1, 3) * Scalar::s_power(1, -3);
  br = detect_breaks(coords({mu0}, {nu0}));
  CHECK(br.J == std::set<int>{1});
  CHECK(br.p.at(1) == 2);
  CHECK(br.sign.at(1) == -1);
  CHECK(br.designated.mu[0] == Scalar(5) * Scalar::r_power(1, 2));
  CHECK(br.designated.nu[0] == nu0 * Scalar::s_power(1, 2));

  CHECK_THROWS_AS(detect_breaks(coords({Scalar::zero()}, {Scalar::one()})),
                  ZeroCoordinate);
  CHECK_THROWS_AS(detect_breaks(coords({Scalar::one(), Scalar::one()},
                                       {Scalar::one()})),
                  InvalidParameter);
}

TEST_CASE("break detection is shift invariant") {
  auto base = coords({Scalar(3), Scalar::parameter("mu2")},
                     {Scalar(3) * Scalar::r_power(1, -2) * Scalar::s_power(1, 2),
                      Scalar::parameter("nu2")});
  auto ref = detect_breaks(base);
  CHECK(ref.J == std::set<int>{1});
  for (long k1 = -3; k1 <= 3; ++k1) {
    for (long k2 = -3; k2 <= 3; k2 += 3) {
      auto moved = detect_breaks(shifted(base, {k1, k2}));
      CHECK(moved.J == ref.J);
      // The break-direction coordinates of the designated ideal are canonical
      // across the orbit; free directions follow the input.
      CHECK(moved.designated.mu[0] == ref.designated.mu[0]);
      CHECK(moved.designated.nu[0] == ref.designated.nu[0]);
      CHECK(moved.designated.mu[1] == ref.designated.mu[1] * Scalar::r_power(2, k2));
      CHECK(moved.p.at(1) == ref.p.at(1) - k1);
      CHECK(moved.sign.at(1) == ref.sign.at(1));
    }
  }
}

TEST_CASE("simple enumeration matches break combinatorics") {
  // Generic coordinates: one simple, free everywhere.
  auto generic = detect_breaks(coords(
      {Scalar::parameter("mu1"), Scalar::parameter("mu2")},
      {Scalar::parameter("nu1"), Scalar::parameter("nu2")}));
  auto simples = enumerate_simples(generic);
  REQUIRE(simples.size() == 1);
  CHECK(simples[0].spec.family() == Family::WeightNoBreak);
  CHECK(simples[0].alpha.empty());
  CHECK(simples[0].support_rule == "k1 free, k2 free");
  CHECK(simples[0].contains_shift({-7, 12}));

  // One broken index in rank one: the two one-sided simples.
  auto both = enumerate_simples(
      detect_breaks(coords({Scalar::one()}, {Scalar::one()})));
  REQUIRE(both.size() == 2);
  CHECK(both[0].alpha.at(1) == 0);
  CHECK(both[0].support_rule == "k1 <= -1");
  CHECK(both[1].alpha.at(1) == 1);
  CHECK(both[1].support_rule == "k1 >= 0");
  CHECK(both[0].spec.family() == Family::WeightBroken);
  CHECK(both[1].contains_shift({0}));
  CHECK(!both[1].contains_shift({-1}));
  CHECK(both[0].contains_shift({-1}));
  CHECK(!both[0].contains_shift({0}));

  // Mixed rank two: break at 1, free at 2.
  auto mixed = enumerate_simples(detect_breaks(
      coords({Scalar::one(), Scalar::parameter("mu2")},
             {Scalar::one(), Scalar::parameter("nu2")})));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].support_rule == "k1 <= -1, k2 free");
  CHECK(mixed[1].support_rule == "k1 >= 0, k2 free");
  CHECK(mixed[1].spec.breaks() == std::set<int>{1});

  // Full rank two: four corners partition every shift box.
  auto full = enumerate_simples(detect_breaks(
      coords({Scalar::one(), Scalar::one()}, {Scalar::one(), Scalar::one()})));
  REQUIRE(full.size() == 4);
  CHECK(full[2].alpha.at(1) == 1);
  CHECK(full[2].alpha.at(2) == 0);
  CHECK(full[2].support_rule == "k1 >= 0, k2 <= -1");
  for (long k1 = -3; k1 <= 3; ++k1) {
    for (long k2 = -3; k2 <= 3; ++k2) {
      int owners = 0;
      for (const auto& d : full) {
        if (d.contains_shift({k1, k2})) ++owners;
      }
      CHECK(owners == 1);
    }
  }

  // Every enumerated module satisfies the defining relations.
  for (const auto& d : full) {
    for (const auto& check : check_module_relations(d.spec, 2)) {
      INFO(check.name, " ", check.detail);
      CHECK(check.ok);
    }
  }
  for (const auto& check : check_module_relations(simples[0].spec, 2)) {
    INFO(check.name, " ", check.detail);
    CHECK(check.ok);
  }
}

TEST_CASE("skeleton quivers and their relations") {
  auto empty = skeleton({});
  CHECK(empty.object_count() == 1);
  CHECK(empty.arrow_count() == 0);
  CHECK(empty.dimension() == 1);
  CHECK(empty.to_dot().find("omega") != std::string::npos);

  auto one = skeleton({2});
  CHECK(one.object_count() == 2);
  CHECK(one.arrow_count() == 2);
  CHECK(one.dimension() == 4);
  auto arrows = one.arrows();
  REQUIRE(arrows.size() == 2);
  CHECK(arrows[0].name() == "a2[0]");
  CHECK(arrows[0].from == std::vector<int>{0});
  CHECK(arrows[0].to == std::vector<int>{1});
  CHECK(arrows[1].name() == "b2[1]");

  Matrix a = total_arrow_matrix(one, 'a', 2);
  Matrix b = total_arrow_matrix(one, 'b', 2);
  CHECK(mat_zero(mat_mul(a, b)));
  CHECK(mat_zero(mat_mul(b, a)));
  CHECK(!mat_zero(a));
  CHECK(!mat_zero(b));

  auto two = skeleton({1, 3});
  CHECK(two.object_count() == 4);
  CHECK(two.arrow_count() == 8);
  CHECK(two.dimension() == 16);
  CHECK(two.indices() == std::vector<int>{1, 3});
  std::string dot = two.to_dot();
  for (const char* node : {"\"00\"", "\"01\"", "\"10\"", "\"11\""}) {
    CHECK(dot.find(node) != std::string::npos);
  }
  CHECK(dot.find("a1") != std::string::npos);
  CHECK(dot.find("b3") != std::string::npos);

  for (int i : {1, 3}) {
    Matrix ai = total_arrow_matrix(two, 'a', i);
    Matrix bi = total_arrow_matrix(two, 'b', i);
    CHECK(mat_zero(mat_mul(ai, bi)));
    CHECK(mat_zero(mat_mul(bi, ai)));
    CHECK(mat_zero(mat_mul(ai, ai)));
  }
  // Arrows at distinct indices commute.
  for (char k1 : {'a', 'b'}) {
    for (char k2 : {'a', 'b'}) {
      Matrix m1 = total_arrow_matrix(two, k1, 1);
      Matrix m2 = total_arrow_matrix(two, k2, 3);
      CHECK(mat_mul(m1, m2) == mat_mul(m2, m1));
      CHECK(!mat_zero(mat_mul(m1, m2)));
    }
  }

  // Basis products stay in the basis (with zero), and the big skeleton keeps
  // the tensor dimension count.
  auto basis = two.basis();
  REQUIRE(basis.size() == 16);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      auto prod = two.multiply(x, y);
      if (prod) {
        CHECK(std::find(basis.begin(), basis.end(), *prod) != basis.end());
      }
    }
  }
  // Associativity over all triples of the rank-two skeleton.
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      auto xy = two.multiply(x, y);
      for (const auto& z : basis) {
        auto yz = two.multiply(y, z);
        std::optional<std::vector<int>> left, right;
        if (xy) left = two.multiply(*xy, z);
        if (yz) right = two.multiply(x, *yz);
        CHECK(left == right);
      }
    }
  }

  CHECK(skeleton({1, 2, 3}).dimension() == 64);
  CHECK(skeleton({1, 2, 3}).arrow_count() == 24);

  std::string js = two.to_json();
  CHECK(js.find("\"dimension\": 16") != std::string::npos);
  CHECK(js.find("\"a1[00]\"") != std::string::npos);
}

TEST_CASE("quiver simple count follows the corners") {
  CHECK(quiver_simples(0).size() == 1);
  auto two = quiver_simples(1);
  REQUIRE(two.size() == 2);
  CHECK(two[0].name == "S[0]");
  CHECK(two[1].name == "S[1]");
  CHECK(quiver_simples(3).size() == 8);
}

TEST_CASE("orbit equivalence walks break walls") {
  // No break anywhere: all shifts are equivalent.
  auto c1 = coords({Scalar(2)}, {Scalar(3)});
  CHECK(equivalence_check(c1, shifted(c1, {2})));
  CHECK(equivalence_check(c1, shifted(c1, {-5})));
  CHECK(equivalence_check(c1, c1));

  // Equal coordinates: the wall sits between shifts -1 and 0.
  auto cb = coords({Scalar::one()}, {Scalar::one()});
  CHECK(!equivalence_check(cb, shifted(cb, {-1})));
  CHECK(equivalence_check(cb, shifted(cb, {1})));
  CHECK(equivalence_check(shifted(cb, {-1}), shifted(cb, {-4})));
  CHECK(!equivalence_check(shifted(cb, {-1}), shifted(cb, {3})));

  // One step is allowed exactly when t_1 is not in the starting ideal.
  auto at_break = coords(
      {Scalar(7)}, {Scalar(7) * Scalar::param_r(1) * Scalar::param_s(1).inverse()});
  CHECK(!equivalence_check(at_break, shifted(at_break, {1})));  // t_1 in c
  auto off_break = shifted(at_break, {2});
  CHECK(equivalence_check(off_break, shifted(off_break, {1})));  // t_1 not in c

  // Mixed rank two: crossing only the free index is harmless.
  auto mixed = coords({Scalar::one(), Scalar::parameter("mu2")},
                      {Scalar::one(), Scalar::parameter("nu2")});
  CHECK(equivalence_check(mixed, shifted(mixed, {2, 9})));
  CHECK(!equivalence_check(mixed, shifted(mixed, {-2, 1})));

  // Different orbits are rejected.
  CHECK_THROWS_AS(equivalence_check(c1, coords({Scalar(3)}, {Scalar(3)})),
                  NotSameOrbit);
  IdealCoordinates skew = c1;
  skew.mu[0] *= Scalar::param_r(1);
  skew.nu[0] *= Scalar::s_power(1, 2);
  CHECK_THROWS_AS(equivalence_check(c1, skew), NotSameOrbit);
  IdealCoordinates wrongvar = c1;
  wrongvar.mu[0] *= Scalar::param_s(1);
  wrongvar.nu[0] *= Scalar::param_s(1);
  CHECK_THROWS_AS(equivalence_check(c1, wrongvar), NotSameOrbit);
  CHECK_THROWS_AS(equivalence_check(c1, coords({Scalar(2), Scalar(2)},
                                               {Scalar(3), Scalar(3)})),
                  InvalidParameter);
}
