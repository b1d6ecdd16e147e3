#pragma once

#include <complex>
#include <vector>

namespace dirlap {

struct Point2 {
  double x = 0, y = 0;
};

// Counter-clockwise convex hull (monotone chain). Degenerate inputs collapse
// to their extreme points: a single point or a segment.
std::vector<Point2> convex_hull(std::vector<Point2> pts);

// Euclidean distance from p to the convex polygon; zero inside.
double distance_to_hull(const std::vector<Point2>& hull, Point2 p);

// Hausdorff distance between the convex hulls of two point sets. For convex
// sets the supremum is attained at hull vertices.
double hull_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b);

inline Point2 to_point(std::complex<double> z) { return {z.real(), z.imag()}; }

}  // namespace dirlap
