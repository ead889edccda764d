#include "qpt/geometry.h"

#include "qpt/error.h"

#include <algorithm>
#include <map>
#include <sstream>

namespace qpt {

RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) {
  return {a.x - b.x, a.y - b.y};
}

RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) {
  return {a.x + b.x, a.y + b.y};
}

RationalPoint operator*(const Rational& s, const RationalPoint& v) {
  return {s * v.x, s * v.y};
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
  return os << '(' << format_rational(p.x) << ", " << format_rational(p.y) << ')';
}

Rational cross(const RationalPoint& u, const RationalPoint& v) {
  return u.x * v.y - u.y * v.x;
}

Rational dot(const RationalPoint& u, const RationalPoint& v) {
  return u.x * v.x + u.y * v.y;
}

Orientation orientation(const RationalPoint& p, const RationalPoint& q,
                        const RationalPoint& r) {
  const int s = sign(cross(q - p, r - p));
  if (s > 0) return Orientation::kCounterClockwise;
  if (s < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const RationalPoint r = s1.b - s1.a;
  const RationalPoint s = s2.b - s2.a;
  const RationalPoint qp = s2.a - s1.a;
  const Rational denom = cross(r, s);
  SegmentIntersection out;

  if (denom != 0) {
    const Rational t = cross(qp, s) / denom;
    const Rational u = cross(qp, r) / denom;
    if (t < 0 || t > 1 || u < 0 || u > 1) return out;
    out.kind = SegmentIntersection::Kind::kPoint;
    out.point = s1.a + t * r;
    return out;
  }
  if (cross(qp, r) != 0) return out;  // parallel, distinct lines

  const Rational rr = dot(r, r);
  const Rational t0 = dot(qp, r) / rr;
  const Rational t1 = t0 + dot(s, r) / rr;
  const Rational lo = std::max(Rational(0), std::min(t0, t1));
  const Rational hi = std::min(Rational(1), std::max(t0, t1));
  if (lo > hi) return out;
  if (lo == hi) {
    out.kind = SegmentIntersection::Kind::kPoint;
    out.point = s1.a + lo * r;
    return out;
  }
  out.kind = SegmentIntersection::Kind::kOverlap;
  out.overlap = {s1.a + lo * r, s1.a + hi * r};
  return out;
}

PolylineCurve::PolylineCurve(std::vector<RationalPoint> points)
    : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a polyline needs at least two points");
  }
}

RationalPoint PolylineCurve::point_at(const CurvePosition& pos) const {
  const Segment s = segment(pos.segment);
  return s.a + pos.t * (s.b - s.a);
}

CurvePosition PolylineCurve::canonical(std::size_t seg, const Rational& t) const {
  if (t == 1 && seg + 1 < segment_count()) return {seg + 1, Rational(0)};
  return {seg, t};
}

bool PolylineCurve::is_endpoint(const CurvePosition& pos) const {
  return (pos.segment == 0 && pos.t == 0) ||
         (pos.segment + 1 == segment_count() && pos.t == 1);
}

std::optional<CurvePosition> PolylineCurve::locate(const RationalPoint& p) const {
  for (std::size_t i = 0; i < segment_count(); ++i) {
    const RationalPoint d = points_[i + 1] - points_[i];
    const RationalPoint w = p - points_[i];
    if (cross(d, w) != 0) continue;
    const Rational t = dot(w, d) / dot(d, d);
    if (t < 0 || t > 1) continue;
    return canonical(i, t);
  }
  return std::nullopt;
}

PolylineCurve PolylineCurve::reversed() const {
  std::vector<RationalPoint> pts(points_.rbegin(), points_.rend());
  return PolylineCurve(std::move(pts));
}

PolylineCurve PolylineCurve::prefix(const CurvePosition& pos) const {
  std::vector<RationalPoint> pts(points_.begin(), points_.begin() + pos.segment + 1);
  const RationalPoint end = point_at(pos);
  if (!(pts.back() == end)) pts.push_back(end);
  return PolylineCurve(std::move(pts));
}

std::pair<RationalPoint, RationalPoint> PolylineCurve::local_rays(
    const CurvePosition& pos) const {
  const RationalPoint p = point_at(pos);
  const RationalPoint& prev = pos.t == 0 ? points_[pos.segment - 1] : points_[pos.segment];
  const RationalPoint& next = points_[pos.segment + 1];
  return {prev - p, next - p};
}

bool has_distinct_consecutive_points(const PolylineCurve& curve) {
  const auto& pts = curve.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i] == pts[i + 1]) return false;
  }
  return true;
}

std::optional<RationalPoint> self_intersection(const PolylineCurve& curve) {
  const std::size_t n = curve.segment_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const SegmentIntersection x = segment_intersection(curve.segment(i), curve.segment(j));
      if (x.kind == SegmentIntersection::Kind::kEmpty) continue;
      if (x.kind == SegmentIntersection::Kind::kOverlap) return x.overlap.a;
      if (j == i + 1 && x.point == curve.points()[j]) continue;
      return x.point;
    }
  }
  return std::nullopt;
}

namespace {

// 0 for directions in [base, base + pi), 1 for [base + pi, base + 2pi).
int half_relative_to(const RationalPoint& base, const RationalPoint& v) {
  const int c = sign(cross(base, v));
  if (c > 0) return 0;
  if (c < 0) return 1;
  return sign(dot(base, v)) > 0 ? 0 : 1;
}

}  // namespace

bool angle_less(const RationalPoint& base, const RationalPoint& u, const RationalPoint& v) {
  const int hu = half_relative_to(base, u);
  const int hv = half_relative_to(base, v);
  if (hu != hv) return hu < hv;
  return sign(cross(u, v)) > 0;
}

bool in_ccw_sector(const RationalPoint& from, const RationalPoint& to,
                   const RationalPoint& d) {
  return angle_less(from, d, to);
}

Side side_of(const PolylineCurve& curve, const CurvePosition& pos,
             const RationalPoint& d) {
  const auto [back, forward] = curve.local_rays(pos);
  // Travelling forward, the left side is swept counter-clockwise from the
  // forward ray to the backward ray.
  return in_ccw_sector(forward, back, d) ? Side::kLeft : Side::kRight;
}

std::vector<CrossingRecord> curve_crossings(const PolylineCurve& a,
                                            const PolylineCurve& b) {
  std::map<RationalPoint, std::pair<CurvePosition, CurvePosition>> found;
  for (std::size_t i = 0; i < a.segment_count(); ++i) {
    const Segment sa = a.segment(i);
    const RationalPoint da = sa.b - sa.a;
    for (std::size_t j = 0; j < b.segment_count(); ++j) {
      const Segment sb = b.segment(j);
      const SegmentIntersection x = segment_intersection(sa, sb);
      if (x.kind == SegmentIntersection::Kind::kEmpty) continue;
      if (x.kind == SegmentIntersection::Kind::kOverlap) {
        std::ostringstream where;
        where << "curves share the piece from " << x.overlap.a << " to " << x.overlap.b;
        throw Error(ErrorCode::kOverlapSegments, where.str());
      }
      if (found.count(x.point)) continue;
      const RationalPoint db = sb.b - sb.a;
      const Rational ta = dot(x.point - sa.a, da) / dot(da, da);
      const Rational tb = dot(x.point - sb.a, db) / dot(db, db);
      found.emplace(x.point, std::make_pair(a.canonical(i, ta), b.canonical(j, tb)));
    }
  }

  std::vector<CrossingRecord> out;
  out.reserve(found.size());
  for (const auto& [point, positions] : found) {
    const auto& [pa, pb] = positions;
    const bool end_a = a.is_endpoint(pa);
    const bool end_b = b.is_endpoint(pb);
    if (end_a && end_b) continue;  // shared endpoint, reported separately
    CrossingRecord rec{point, ContactKind::kTouch, pa, pb};
    if (!end_a && !end_b) {
      const auto [b_back, b_forward] = b.local_rays(pb);
      if (side_of(a, pa, b_back) != side_of(a, pa, b_forward)) {
        rec.kind = ContactKind::kProperCross;
      }
    }
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(), [](const CrossingRecord& l, const CrossingRecord& r) {
    return l.on_a < r.on_a;
  });
  return out;
}

std::vector<RationalPoint> shared_endpoints(const PolylineCurve& a,
                                            const PolylineCurve& b) {
  std::vector<RationalPoint> out;
  for (const RationalPoint* pa : {&a.front(), &a.back()}) {
    for (const RationalPoint* pb : {&b.front(), &b.back()}) {
      if (*pa == *pb && std::find(out.begin(), out.end(), *pa) == out.end()) {
        out.push_back(*pa);
      }
    }
  }
  return out;
}

}  // namespace qpt
