#include "spiralcover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spiralcover/rng.hpp"

namespace spiralcover {

double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double dist_sq(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool covers(const Disk& d, Point p) { return dist(d.center, p) <= Tolerance::widen(d.radius); }

bool within(Point a, Point b, double radius) { return dist(a, b) <= Tolerance::widen(radius); }

HullOrder convex_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Point& p = points[a];
    const Point& q = points[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  });
  // Duplicates are adjacent after sorting; the first one has the lowest index.
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
              order.end());

  const std::size_t n = order.size();
  if (n == 1) return {{order[0]}};

  // Andrew's monotone chain; popping on cross <= 0 keeps only strict turns.
  std::vector<std::size_t> hull(2 * n);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (h >= 2 && cross(points[hull[h - 2]], points[hull[h - 1]], points[order[i]]) <= 0) --h;
    hull[h++] = order[i];
  }
  for (std::size_t i = n - 1, lower = h + 1; i-- > 0;) {
    while (h >= lower && cross(points[hull[h - 2]], points[hull[h - 1]], points[order[i]]) <= 0) --h;
    hull[h++] = order[i];
  }
  hull.resize(h - 1);

  if (hull.size() <= 2) {
    std::sort(hull.begin(), hull.end());
    return {hull};
  }

  const auto start = std::min_element(hull.begin(), hull.end(), [&](std::size_t a, std::size_t b) {
    const Point& p = points[a];
    const Point& q = points[b];
    if (p.y != q.y) return p.y < q.y;
    return p.x < q.x;
  });
  std::rotate(hull.begin(), start, hull.end());
  return {hull};
}

Disk diameter_circle(Point a, Point b) {
  return {{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}, 0.5 * dist(a, b)};
}

namespace {

bool collinear(Point a, Point b, Point c) {
  const double scale = std::max({dist_sq(a, b), dist_sq(a, c), dist_sq(b, c)});
  return std::abs(cross(a, b, c)) <= 1e-14 * scale;
}

Disk widest_pair(Point a, Point b, Point c) {
  const double ab = dist_sq(a, b);
  const double ac = dist_sq(a, c);
  const double bc = dist_sq(b, c);
  if (ab >= ac && ab >= bc) return diameter_circle(a, b);
  if (ac >= bc) return diameter_circle(a, c);
  return diameter_circle(b, c);
}

// Slightly looser than exact containment so rounding on the rim does not
// trigger a rebuild; the final radius is re-measured afterwards.
bool inside(const Disk& d, Point p) {
  return dist(d.center, p) <= d.radius * (1.0 + 1e-12) + 1e-15;
}

}  // namespace

Disk circumcircle(Point a, Point b, Point c) {
  if (collinear(a, b, c)) return widest_pair(a, b, c);
  const double bx = b.x - a.x;
  const double by = b.y - a.y;
  const double cx = c.x - a.x;
  const double cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  const double bb = bx * bx + by * by;
  const double cc = cx * cx + cy * cy;
  const Point center{a.x + (cy * bb - by * cc) / d, a.y + (bx * cc - cx * bb) / d};
  return {center, std::max({dist(center, a), dist(center, b), dist(center, c)})};
}

EnclosingCircle minimum_enclosing_circle(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("one_center: empty point set");

  // Fixed-seed shuffle: expected linear time, reproducible output.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(0x1c3e7e5ULL);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);

  auto at = [&](std::size_t i) { return points[order[i]]; };
  EnclosingCircle best{{at(0), 0.0}, {order[0]}};
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (inside(best.disk, at(i))) continue;
    best = {{at(i), 0.0}, {order[i]}};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(best.disk, at(j))) continue;
      best = {diameter_circle(at(i), at(j)), {order[i], order[j]}};
      for (std::size_t k = 0; k < j; ++k) {
        if (inside(best.disk, at(k))) continue;
        const Point a = at(i), b = at(j), c = at(k);
        best.disk = circumcircle(a, b, c);
        if (collinear(a, b, c)) {
          const double ab = dist_sq(a, b), ac = dist_sq(a, c), bc = dist_sq(b, c);
          if (ab >= ac && ab >= bc) best.support = {order[i], order[j]};
          else if (ac >= bc) best.support = {order[i], order[k]};
          else best.support = {order[j], order[k]};
        } else {
          best.support = {order[i], order[j], order[k]};
        }
      }
    }
  }

  double reach = best.disk.radius;
  for (const Point& p : points) reach = std::max(reach, dist(best.disk.center, p));
  best.disk.radius = reach;
  std::sort(best.support.begin(), best.support.end());
  return best;
}

Disk one_center(std::span<const Point> points) { return minimum_enclosing_circle(points).disk; }

}  // namespace spiralcover
