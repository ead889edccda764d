#pragma once

#include "qpt/numeric.h"

#include <compare>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace qpt {

/// Point (or free vector) in the plane with exact rational coordinates.
/// mpq_class keeps values canonical, so == is structural equality.
struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

RationalPoint operator-(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator+(const RationalPoint& a, const RationalPoint& b);
RationalPoint operator*(const Rational& s, const RationalPoint& v);
std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

Rational cross(const RationalPoint& u, const RationalPoint& v);
Rational dot(const RationalPoint& u, const RationalPoint& v);

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

/// Sign of (q - p) x (r - p).
Orientation orientation(const RationalPoint& p, const RationalPoint& q,
                        const RationalPoint& r);

struct Segment {
  RationalPoint a;
  RationalPoint b;
};

struct SegmentIntersection {
  enum class Kind { kEmpty, kPoint, kOverlap };
  Kind kind = Kind::kEmpty;
  RationalPoint point;  // valid for kPoint
  Segment overlap;      // valid for kOverlap, oriented along the first segment
};

/// Exact intersection of two closed segments. Both segments must have
/// distinct endpoints.
SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// Location on a polyline: segment index plus parameter in [0, 1].
/// Canonical form puts a bend at parameter 0 of the following segment, so
/// t == 1 only occurs at the final endpoint.
struct CurvePosition {
  std::size_t segment = 0;
  Rational t;

  friend bool operator==(const CurvePosition& a, const CurvePosition& b) {
    return a.segment == b.segment && a.t == b.t;
  }
  friend bool operator<(const CurvePosition& a, const CurvePosition& b) {
    if (a.segment != b.segment) return a.segment < b.segment;
    return a.t < b.t;
  }
};

class PolylineCurve {
 public:
  /// Requires at least two points. Distinctness and simplicity are checked
  /// separately (see is_simple) so invalid input can be reported as data.
  explicit PolylineCurve(std::vector<RationalPoint> points);

  const std::vector<RationalPoint>& points() const noexcept { return points_; }
  std::size_t segment_count() const noexcept { return points_.size() - 1; }
  Segment segment(std::size_t i) const { return {points_[i], points_[i + 1]}; }
  const RationalPoint& front() const { return points_.front(); }
  const RationalPoint& back() const { return points_.back(); }

  RationalPoint point_at(const CurvePosition& pos) const;
  CurvePosition canonical(std::size_t segment, const Rational& t) const;
  bool is_endpoint(const CurvePosition& pos) const;

  /// Position of p on the curve, if the curve passes through p.
  std::optional<CurvePosition> locate(const RationalPoint& p) const;

  PolylineCurve reversed() const;

  /// The part of the curve from its first point up to pos (pos must not be
  /// the first point).
  PolylineCurve prefix(const CurvePosition& pos) const;

  /// Direction vectors from point_at(pos) towards the previous and next
  /// vertices of the polyline. pos must be interior.
  std::pair<RationalPoint, RationalPoint> local_rays(const CurvePosition& pos) const;

  friend bool operator==(const PolylineCurve& a, const PolylineCurve& b) {
    return a.points_ == b.points_;
  }

 private:
  std::vector<RationalPoint> points_;
};

bool has_distinct_consecutive_points(const PolylineCurve& curve);

/// A point where the curve meets itself other than at consecutive-segment
/// joints, or nullopt if the curve is simple. Requires distinct consecutive
/// points.
std::optional<RationalPoint> self_intersection(const PolylineCurve& curve);

inline bool is_simple(const PolylineCurve& curve) {
  return has_distinct_consecutive_points(curve) && !self_intersection(curve);
}

/// Counter-clockwise angle of u, measured from direction base into
/// [0, 2pi), is smaller than that of v.
bool angle_less(const RationalPoint& base, const RationalPoint& u, const RationalPoint& v);

/// True when direction d lies strictly inside the counter-clockwise sweep
/// from direction `from` to direction `to`. d must not be parallel to
/// `from` in the same sense.
bool in_ccw_sector(const RationalPoint& from, const RationalPoint& to,
                   const RationalPoint& d);

enum class Side { kLeft, kRight };

/// Side of the curve, traversed front to back, on which the ray from
/// point_at(pos) in direction d starts.
Side side_of(const PolylineCurve& curve, const CurvePosition& pos,
             const RationalPoint& d);

enum class ContactKind { kProperCross, kTouch };

struct CrossingRecord {
  RationalPoint point;
  ContactKind kind = ContactKind::kProperCross;
  CurvePosition on_a;
  CurvePosition on_b;
};

/// Every common point of two simple curves except endpoint-to-endpoint
/// coincidences, sorted by position along a. A point is a proper crossing
/// when it is interior to both curves and b passes from one side of a to
/// the other; everything else (including an endpoint of one curve lying on
/// the other) is a touch. Throws Error(kOverlapSegments) when the curves
/// share a piece of positive length.
std::vector<CrossingRecord> curve_crossings(const PolylineCurve& a,
                                            const PolylineCurve& b);

/// Points that are an endpoint of both curves.
std::vector<RationalPoint> shared_endpoints(const PolylineCurve& a,
                                            const PolylineCurve& b);

}  // namespace qpt
