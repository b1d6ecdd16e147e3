#include "dirlap/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dirlap {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double segment_distance(const Point2& a, const Point2& b, const Point2& p) {
  double ex = b.x - a.x, ey = b.y - a.y;
  double len2 = ex * ex + ey * ey;
  double t = len2 > 0 ? std::clamp(((p.x - a.x) * ex + (p.y - a.y) * ey) / len2, 0.0, 1.0) : 0.0;
  double dx = p.x - (a.x + t * ex), dy = p.y - (a.y + t * ey);
  return std::hypot(dx, dy);
}

}  // namespace

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;
  std::vector<Point2> hull(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  int lower = k + 1;
  for (int i = n - 2; i >= 0; --i) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double distance_to_hull(const std::vector<Point2>& hull, Point2 p) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::hypot(p.x - hull[0].x, p.y - hull[0].y);
  double best = std::numeric_limits<double>::infinity();
  bool inside = hull.size() >= 3;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point2& a = hull[i];
    const Point2& b = hull[(i + 1) % hull.size()];
    best = std::min(best, segment_distance(a, b, p));
    if (inside && cross(a, b, p) < 0) inside = false;
  }
  return inside ? 0.0 : best;
}

double hull_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  auto ha = convex_hull(a), hb = convex_hull(b);
  double d = 0;
  for (const auto& p : ha) d = std::max(d, distance_to_hull(hb, p));
  for (const auto& p : hb) d = std::max(d, distance_to_hull(ha, p));
  return d;
}

}  // namespace dirlap
