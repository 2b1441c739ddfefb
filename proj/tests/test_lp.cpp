#include <doctest.h>

#include <random>

#include "chernratio/json_io.hpp"
#include "chernratio/lp.hpp"
#include "lp_checks.hpp"
#include "oracles/vertex_lp.hpp"

using namespace chernratio;
using testsupport::certificate_holds;

namespace {

HalfSpace row(std::vector<mpq_class> a, mpq_class b) { return HalfSpace{std::move(a), std::move(b)}; }
LinearFunctional functional(std::vector<mpq_class> c, mpq_class c0 = 0) { return {std::move(c), std::move(c0)}; }

}  // namespace

TEST_CASE("a single interval") {
  const std::vector<HalfSpace> rows{row({1}, 5), row({-1}, 11)};  // -5 <= x <= 11
  const auto f = functional({1});
  const auto lo = lp_optimize(rows, f, Direction::Min);
  const auto hi = lp_optimize(rows, f, Direction::Max);
  REQUIRE(lo.status == LpStatus::Optimal);
  REQUIRE(hi.status == LpStatus::Optimal);
  CHECK(lo.value == -5);
  CHECK(hi.value == 11);
  CHECK(certificate_holds(rows, f, Direction::Min, lo));
  CHECK(certificate_holds(rows, f, Direction::Max, hi));
  const auto shifted = lp_optimize(rows, functional({mpq_class(1, 12)}, mpq_class(1, 12)), Direction::Min);
  CHECK(shifted.value == mpq_class(-1, 3));
}

TEST_CASE("half-line is unbounded in one direction") {
  const std::vector<HalfSpace> rows{row({1}, 0)};
  const auto f = functional({1});
  CHECK(lp_optimize(rows, f, Direction::Min).value == 0);
  const auto up = lp_optimize(rows, f, Direction::Max);
  REQUIRE(up.status == LpStatus::Unbounded);
  CHECK(up.ray == std::vector<mpq_class>{1});
  CHECK(certificate_holds(rows, f, Direction::Max, up));
}

TEST_CASE("contradictory pair is infeasible with a Farkas certificate") {
  const std::vector<HalfSpace> rows{row({1}, -1), row({-1}, 0)};  // x >= 1, x <= 0
  const auto f = functional({1});
  for (auto dir : {Direction::Min, Direction::Max}) {
    const auto r = lp_optimize(rows, f, dir);
    REQUIRE(r.status == LpStatus::Infeasible);
    CHECK(certificate_holds(rows, f, dir, r));
  }
  const std::vector<HalfSpace> empty_box{row({1, 0}, -1), row({0, 1}, 0), row({-1, -1}, mpq_class(1, 2))};
  const auto r = lp_optimize(empty_box, functional({0, 1}), Direction::Min);
  REQUIRE(r.status == LpStatus::Infeasible);
  CHECK(certificate_holds(empty_box, functional({0, 1}), Direction::Min, r));
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(lp_optimize({}, functional({1}), Direction::Min), std::invalid_argument);
  CHECK_THROWS_AS(lp_optimize({row({1, 2}, 0)}, functional({1}), Direction::Min), std::invalid_argument);
}

TEST_CASE("degenerate vertex does not cycle") {
  // many constraints through the origin
  std::vector<HalfSpace> rows;
  for (int k = -4; k <= 4; ++k) rows.push_back(row({1, mpq_class(k)}, 0));
  rows.push_back(row({-1, 0}, 3));
  const auto f = functional({1, 1});
  for (auto dir : {Direction::Min, Direction::Max}) {
    const auto r = lp_optimize(rows, f, dir);
    CHECK(certificate_holds(rows, f, dir, r));
  }
}

TEST_CASE("random bounded programs agree with vertex enumeration") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> coeff(-6, 6);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 3;
    const int extra = 2 + trial % 4;
    std::vector<HalfSpace> rows;
    std::vector<oracle::Row> a;
    oracle::Row b;
    auto push = [&](std::vector<mpq_class> coeffs, mpq_class constant) {
      a.push_back(coeffs);
      b.push_back(constant);
      rows.push_back(row(std::move(coeffs), std::move(constant)));
    };
    for (int k = 0; k < d; ++k) {
      std::vector<mpq_class> e(d);
      e[k] = 1;
      push(e, 10);
      e[k] = -1;
      push(e, 10);
    }
    for (int k = 0; k < extra; ++k) {
      std::vector<mpq_class> c(d);
      for (auto& v : c) v = coeff(rng);
      mpq_class constant(coeff(rng), 1 + trial % 3);
      constant.canonicalize();
      push(c, constant);
    }
    std::vector<mpq_class> obj(d);
    for (auto& v : obj) v = coeff(rng);
    const auto f = functional(obj, coeff(rng));
    for (auto dir : {Direction::Min, Direction::Max}) {
      const auto r = lp_optimize(rows, f, dir);
      const auto want = oracle::vertex_optimum(a, b, obj, dir == Direction::Max);
      CAPTURE(trial);
      CHECK(certificate_holds(rows, f, dir, r));
      if (!want) {
        CHECK(r.status == LpStatus::Infeasible);
      } else {
        REQUIRE(r.status == LpStatus::Optimal);
        CHECK(r.value == *want + f.constant);
        ++solved;
      }
    }
  }
  CHECK(solved > 100);
}

TEST_CASE("result JSON") {
  const std::vector<HalfSpace> rows{row({1}, 5), row({-1}, 11)};
  const auto j = to_json(lp_optimize(rows, functional({1}), Direction::Max));
  CHECK(j.at("status") == "optimal");
  CHECK(j.at("value") == "11");
  const auto u = to_json(lp_optimize({row({1}, 0)}, functional({1}), Direction::Max));
  CHECK(u.at("status") == "unbounded");
  CHECK(u.at("ray").size() == 1);
  CHECK(status_name(LpStatus::Infeasible) == "infeasible");
}

TEST_CASE("unreduced rationals are accepted") {
  const std::vector<HalfSpace> rows{row({mpq_class(2, 2)}, mpq_class(10, 2))};
  const auto r = lp_optimize(rows, functional({mpq_class(3, 3)}, mpq_class(4, 2)), Direction::Min);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == -3);
}
