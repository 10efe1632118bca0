#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace spiralcover {

/// Ground-plane coordinate in km.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Disk {
  Point center;
  double radius = 0.0;
};

/// Slack applied to every "within radius" test. The enclosing-circle
/// solver works in floating point and accepts points exactly on the rim.
struct Tolerance {
  static constexpr double rel = 1e-9;
  static constexpr double abs = 1e-12;

  static constexpr double widen(double radius) { return radius * (1.0 + rel) + abs; }
};

double dist(Point a, Point b);
double dist_sq(Point a, Point b);

/// Twice the signed area of (o, a, b); positive for a left turn.
double cross(Point o, Point a, Point b);

bool covers(const Disk& d, Point p);
bool within(Point a, Point b, double radius);

/// Strict convex hull as indices into the input, counterclockwise,
/// starting at the bottom-most (then left-most) vertex. Collinear
/// non-extreme points are dropped; duplicated coordinates appear once
/// under their lowest index. A two-vertex hull lists the lower index first.
struct HullOrder {
  std::vector<std::size_t> indices;
};

HullOrder convex_hull(std::span<const Point> points);

/// Minimum enclosing circle together with the (at most three) input
/// indices that determine it.
struct EnclosingCircle {
  Disk disk;
  std::vector<std::size_t> support;
};

EnclosingCircle minimum_enclosing_circle(std::span<const Point> points);

/// 1-center: the disk of least radius containing every point.
Disk one_center(std::span<const Point> points);

/// Circle through three points; falls back to the widest pair's
/// diameter circle when the triple is (numerically) collinear.
Disk circumcircle(Point a, Point b, Point c);

Disk diameter_circle(Point a, Point b);

}  // namespace spiralcover
