#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "spiralcover/geometry.hpp"

using namespace spiralcover;

namespace {

double signed_area(std::span<const Point> pts, const std::vector<std::size_t>& idx) {
  double a = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Point& p = pts[idx[i]];
    const Point& q = pts[idx[(i + 1) % idx.size()]];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

}  // namespace

TEST_CASE("dist") {
  CHECK(dist({0, 0}, {3, 4}) == doctest::Approx(5.0));
  CHECK(dist({1, 1}, {1, 1}) == 0.0);
  CHECK(dist({0, 0}, {1, 0}) == 1.0);
  CHECK(dist({2, -7}, {-1, 5}) == dist({-1, 5}, {2, -7}));
}

TEST_CASE("covers honours the relative tolerance") {
  const Disk unit{{0, 0}, 1.0};
  CHECK(covers(unit, {1, 0}));
  CHECK_FALSE(covers(unit, {1.000001, 0}));
  CHECK(covers(unit, {0, 0}));
  CHECK(covers(unit, {1 + 5e-10, 0}));
}

TEST_CASE("convex_hull small cases") {
  SUBCASE("triangle") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("interior point is dropped") {
    const std::vector<Point> pts{{0, 0}, {2, 0}, {1, 0.5}, {1, 2}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{0, 1, 3});
  }
  SUBCASE("single point") {
    const std::vector<Point> pts{{4, 2}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{0});
  }
  SUBCASE("two points, lower index first") {
    const std::vector<Point> pts{{5, 5}, {0, 0}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("duplicates keep the lowest index") {
    const std::vector<Point> pts{{1, 1}, {0, 0}, {2, 0}, {0, 0}, {1, 1}, {1, 3}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{1, 2, 5});
  }
  SUBCASE("collinear middle points are not extreme") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {0, 1}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{0, 2, 3, 4});
  }
  SUBCASE("all collinear") {
    const std::vector<Point> pts{{3, 3}, {1, 1}, {2, 2}, {0, 0}};
    CHECK(convex_hull(pts).indices == std::vector<std::size_t>{0, 3});
  }
  SUBCASE("start vertex is bottom-most then left-most") {
    const std::vector<Point> pts{{0, 1}, {3, 0}, {1, 0}, {2, 2}};
    CHECK(convex_hull(pts).indices.front() == 2);
  }
  CHECK_THROWS_AS(convex_hull(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("convex_hull matches the extreme-point oracle") {
  Rng rng(7);
  const auto pts = oracle::uniform_points(20, 1.0, rng);
  CHECK(convex_hull(pts).indices == oracle::naive_hull(pts));
}

TEST_CASE("convex_hull properties on random and lattice sets") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng.index(30);
    const auto pts = trial % 2 ? oracle::uniform_points(n, 10.0, rng) : oracle::grid_points(n, 6, rng);
    const auto hull = convex_hull(pts).indices;
    REQUIRE(!hull.empty());
    if (hull.size() < 3) continue;
    CHECK(signed_area(pts, hull) > 0);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Point a = pts[hull[i]], b = pts[hull[(i + 1) % hull.size()]], c = pts[hull[(i + 2) % hull.size()]];
      CHECK(cross(a, b, c) > 0);  // strictly convex, no collinear triples
      for (const Point& p : pts) CHECK(cross(a, b, p) >= -1e-9);  // containment
    }
  }
}

TEST_CASE("one_center small cases") {
  SUBCASE("diameter pair") {
    const std::vector<Point> pts{{0, 0}, {2, 0}};
    const Disk d = one_center(pts);
    CHECK(d.center.x == doctest::Approx(1.0));
    CHECK(d.center.y == doctest::Approx(0.0));
    CHECK(d.radius == doctest::Approx(1.0));
  }
  SUBCASE("equilateral triangle") {
    const std::vector<Point> pts{{0, 0}, {2, 0}, {1, std::sqrt(3.0)}};
    const Disk d = one_center(pts);
    CHECK(d.center.x == doctest::Approx(1.0));
    CHECK(d.center.y == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(d.radius == doctest::Approx(2.0 / std::sqrt(3.0)));
  }
  SUBCASE("single point and duplicates") {
    const std::vector<Point> pts{{3, 4}, {3, 4}, {3, 4}};
    const Disk d = one_center(pts);
    CHECK(d.radius == 0.0);
    CHECK(d.center == Point{3, 4});
  }
  SUBCASE("collinear points") {
    const std::vector<Point> pts{{0, 0}, {1, 0}, {4, 0}, {2, 0}};
    const Disk d = one_center(pts);
    CHECK(d.center.x == doctest::Approx(2.0));
    CHECK(d.radius == doctest::Approx(2.0));
  }
  CHECK_THROWS_AS(one_center(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("one_center matches the brute-force circle") {
  Rng rng(3);
  const auto pts = oracle::uniform_points(15, 1.0, rng);
  const Disk d = one_center(pts);
  const auto ref = oracle::brute_mec(pts);
  CHECK(d.radius == doctest::Approx(ref.r).epsilon(1e-9));
  CHECK(dist(d.center, ref.c) <= 1e-7);
}

TEST_CASE("one_center minimality and support") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.index(12);
    const auto pts = oracle::uniform_points(n, 5.0, rng);
    const EnclosingCircle mec = minimum_enclosing_circle(pts);
    for (const Point& p : pts) CHECK(covers(mec.disk, p));
    CHECK(mec.support.size() <= 3);
    CHECK(!mec.support.empty());
    if (n == 1) continue;

    const Disk shrunk{mec.disk.center, mec.disk.radius * (1 - 1e-6)};
    bool excluded = false;
    for (const Point& p : pts) excluded = excluded || dist(shrunk.center, p) > shrunk.radius;
    CHECK(excluded);

    std::vector<Point> sup;
    for (std::size_t i : mec.support) sup.push_back(pts[i]);
    const Disk again = one_center(sup);
    CHECK(again.radius == doctest::Approx(mec.disk.radius).epsilon(1e-9));
    for (const Point& p : sup) CHECK(std::abs(dist(mec.disk.center, p) - mec.disk.radius) <= 1e-9 * mec.disk.radius);
  }
}

TEST_CASE("two points farther than 2r never share a radius-r disk") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pts = oracle::uniform_points(2, 4.0, rng);
    const double r = 0.3 + rng.uniform();
    if (dist(pts[0], pts[1]) <= 2 * r) continue;
    CHECK(one_center(pts).radius > r);
    // Triangle inequality: any center c has |c-a| + |c-b| >= |a-b| > 2r.
    const Point c{rng.uniform() * 4, rng.uniform() * 4};
    CHECK(std::max(dist(c, pts[0]), dist(c, pts[1])) > r);
  }
}
