#include "bmsa/order.hpp"

#include <algorithm>

namespace bmsa {

int total_compare(OrderKind kind, Point a, Point b) {
  if (kind == OrderKind::Lex) {
    if (a.x != b.x) return a.x < b.x ? -1 : 1;
    if (a.y != b.y) return a.y < b.y ? -1 : 1;
    return 0;
  }
  int da = a.x + a.y, db = b.x + b.y;
  if (da != db) return da < db ? -1 : 1;
  if (a.y != b.y) return a.y < b.y ? -1 : 1;
  return 0;
}

bool total_less(OrderKind kind, Point a, Point b) { return total_compare(kind, a, b) < 0; }

Point next_step(OrderKind kind, Point n, int r1, int r2) {
  (void)r1;
  if (kind == OrderKind::Lex) {
    if (n.y < r2 - 1) return {n.x, n.y + 1};
    return {n.x + 1, 0};
  }
  if (n.x > 0) return {n.x - 1, n.y + 1};
  return {n.y + 1, 0};
}

std::vector<Point> s_of_t(int t) {
  if (t < 1) throw Error(Errc::ConfigError, "capability t must be >= 1");
  std::vector<Point> pts;
  for (int j = 0; j < 2 * t; ++j) pts.push_back({0, j});
  for (int i = 1; i < 2 * t; ++i) pts.push_back({i, 0});
  for (int i = 1; i < t; ++i)
    for (int j = 1; i + j <= t; ++j) pts.push_back({i, j});
  std::sort(pts.begin(), pts.end(), PointLess{});
  return pts;
}

std::vector<Point> schedule(OrderKind kind, int t) {
  std::vector<Point> pts = s_of_t(t);
  std::sort(pts.begin(), pts.end(),
            [kind](Point a, Point b) { return total_less(kind, a, b); });
  return pts;
}

bool condition_check(const ValueMap& values, int t, ConditionKind kind) {
  auto nonzero = [&](Point n) {
    auto it = values.find(n);
    return it != values.end() && !it->second.is_zero();
  };
  if (kind == ConditionKind::L) {
    for (int j = 0; j < t; ++j)
      if (nonzero({0, j})) return true;
    return false;
  }
  return nonzero({0, 1}) || nonzero({1, 0});
}

DeltaSet::DeltaSet() : defining_{{0, 0}} {}

DeltaSet DeltaSet::from_defining_points(std::vector<Point> pts) {
  if (pts.empty()) throw Error(Errc::BadDefiningPoints, "empty defining point list");
  int d = static_cast<int>(pts.size());
  for (const Point& p : pts)
    if (p.x < 0 || p.y < 0) throw Error(Errc::BadDefiningPoints, "negative coordinate");
  if (pts[static_cast<std::size_t>(d - 1)].x != 0 || pts[0].y != 0)
    throw Error(Errc::BadDefiningPoints, "list must run from the x-axis to the y-axis");
  for (int i = 0; i + 1 < d; ++i) {
    if (pts[static_cast<std::size_t>(i)].x <= pts[static_cast<std::size_t>(i + 1)].x ||
        pts[static_cast<std::size_t>(i)].y >= pts[static_cast<std::size_t>(i + 1)].y)
      throw Error(Errc::BadDefiningPoints, "defining points out of staircase order");
  }
  DeltaSet ds;
  ds.defining_ = std::move(pts);
  ds.rebuild_heights();
  return ds;
}

void DeltaSet::rebuild_heights() {
  heights_.assign(static_cast<std::size_t>(defining_[0].x), 0);
  // height(x) = s2^(i+1) for the largest i with s1^(i) > x
  int d = static_cast<int>(defining_.size());
  for (int i = 0; i + 1 < d; ++i) {
    int lo = defining_[static_cast<std::size_t>(i + 1)].x;
    int hi = defining_[static_cast<std::size_t>(i)].x;
    for (int x = lo; x < hi; ++x) heights_[static_cast<std::size_t>(x)] = defining_[static_cast<std::size_t>(i + 1)].y;
  }
}

DeltaSet DeltaSet::down_closure(const std::vector<Point>& pts) {
  int maxx = -1;
  for (const Point& p : pts) maxx = std::max(maxx, p.x);
  std::vector<int> h(static_cast<std::size_t>(maxx + 1), 0);
  for (const Point& p : pts)
    for (int x = 0; x <= p.x; ++x)
      h[static_cast<std::size_t>(x)] = std::max(h[static_cast<std::size_t>(x)], p.y + 1);

  // Walk x upward recording staircase drops (h(-1) treated as +inf), then
  // reverse into the canonical decreasing-x order.
  std::vector<Point> drops;
  int last = -1;
  for (int x = 0; x <= maxx + 1; ++x) {
    int hx = x <= maxx ? h[static_cast<std::size_t>(x)] : 0;
    if (last == -1 || hx < last) drops.push_back({x, hx});
    last = hx;
  }
  std::reverse(drops.begin(), drops.end());
  return from_defining_points(std::move(drops));
}

bool DeltaSet::contains(Point p) const {
  if (p.x < 0 || p.y < 0) return false;
  if (p.x >= defining_[0].x) return false;
  return p.y < heights_[static_cast<std::size_t>(p.x)];
}

int DeltaSet::size() const {
  int n = 0;
  for (int hx : heights_) n += hx;
  return n;
}

std::vector<Point> DeltaSet::members() const {
  std::vector<Point> out;
  for (int x = 0; x < defining_[0].x; ++x)
    for (int y = 0; y < heights_[static_cast<std::size_t>(x)]; ++y) out.push_back({x, y});
  return out;
}

std::vector<Point> DeltaSet::corners() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i + 1 < defining_.size(); ++i)
    out.push_back({defining_[i].x - 1, defining_[i + 1].y - 1});
  return out;
}

bool Region::contains(Point m) const {
  switch (kind) {
    case Kind::SigmaS: return preceq(s, m);
    case Kind::SigmaSUptoK: return preceq(s, m) && total_less(order, m, k);
    case Kind::DeltaRect: return preceq(m, s);
  }
  return false;
}

}  // namespace bmsa
