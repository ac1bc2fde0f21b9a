#pragma once

#include <map>
#include <vector>

#include "bmsa/errors.hpp"
#include "bmsa/ff.hpp"

namespace bmsa {

// Exponent pair in Sigma_0 = N x N (also used for indexes of I = Z_r1 x Z_r2).
struct Point {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(Point, Point) = default;
  constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
};

// Storage comparator (row-major). Not a monomial order.
struct PointLess {
  constexpr bool operator()(Point a, Point b) const {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

using ValueMap = std::map<Point, FieldElement, PointLess>;

// Componentwise partial order on Sigma_0.
constexpr bool preceq(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }

enum class OrderKind { Lex, Graded };

// Lex compares X1 > X2; graded compares total degree with larger second
// coordinate breaking ties upward (X2 > X1).
int total_compare(OrderKind, Point a, Point b);
bool total_less(OrderKind, Point a, Point b);

// The recursion successor used when walking the r1 x r2 grid.
Point next_step(OrderKind, Point n, int r1, int r2);

// S(t) = {(0,j): j<2t} u {(i,0): i<2t} u {(i,j): i,j>=1, i+j<=t},
// returned sorted row-major. |S(t)| = (t^2+7t)/2 - 1.
std::vector<Point> s_of_t(int t);

// S(t) sorted by the visiting schedule of the given order.
std::vector<Point> schedule(OrderKind, int t);

enum class ConditionKind { L, G };

// l-condition: u_(0,j) != 0 for some j < t.
// g-condition: u_(i,j) != 0 for some i+j == 1.
bool condition_check(const ValueMap& values, int t, ConditionKind);

// Staircase set of exponents bounded by defining points s^(1)..s^(d) with
// s1 strictly decreasing to 0 and s2 strictly increasing from 0; the member
// set is the union of the rectangles below consecutive defining points.
class DeltaSet {
 public:
  DeltaSet();  // empty set, defining points {(0,0)}

  static DeltaSet from_defining_points(std::vector<Point> pts);  // throws BadDefiningPoints
  static DeltaSet down_closure(const std::vector<Point>& pts);   // smallest staircase containing pts

  const std::vector<Point>& defining_points() const { return defining_; }
  bool contains(Point) const;
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<Point> members() const;  // sorted row-major
  // Rectangle maxima (s1^(i)-1, s2^(i+1)-1), i = 1..d-1.
  std::vector<Point> corners() const;

  friend bool operator==(const DeltaSet& a, const DeltaSet& b) {
    return a.defining_ == b.defining_;
  }

 private:
  std::vector<Point> defining_;
  std::vector<int> heights_;  // column heights for x < defining_[0].x

  void rebuild_heights();
};

// Regions of Definition 3.
struct Region {
  enum class Kind { SigmaS, SigmaSUptoK, DeltaRect };
  Kind kind;
  Point s;
  Point k{0, 0};                    // only for SigmaSUptoK
  OrderKind order = OrderKind::Lex; // only for SigmaSUptoK

  bool contains(Point m) const;
};

}  // namespace bmsa
