#include "oracles.h"
#include "support.h"

#include "qpt/error.h"
#include "qpt/generators.h"
#include "qpt/geometry.h"

#include <doctest.h>

#include <random>

using namespace qpt;
using testsupport::curve;
using testsupport::P;
using testsupport::Q;

TEST_CASE("orientation of three points") {
  CHECK(orientation(P("0", "0"), P("1", "0"), P("0", "1")) == Orientation::kCounterClockwise);
  CHECK(orientation(P("0", "0"), P("1", "0"), P("2", "0")) == Orientation::kCollinear);
  CHECK(orientation(P("0", "0"), P("1/3", "1/3"), P("1", "0")) == Orientation::kClockwise);
}

TEST_CASE("orientation flips when two arguments swap") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    RationalPoint p[3];
    for (auto& x : p) {
      x = {Rational(uniform_int(rng, -5, 5)), Rational(uniform_int(rng, -5, 5))};
    }
    const auto a = orientation(p[0], p[1], p[2]);
    const auto b = orientation(p[0], p[2], p[1]);
    CHECK(static_cast<int>(a) == -static_cast<int>(b));
  }
}

TEST_CASE("segment intersection") {
  auto x = segment_intersection({P("0", "0"), P("2", "2")}, {P("0", "2"), P("2", "0")});
  REQUIRE(x.kind == SegmentIntersection::Kind::kPoint);
  CHECK(x.point == P("1", "1"));

  x = segment_intersection({P("0", "0"), P("1", "0")}, {P("2", "0"), P("3", "0")});
  CHECK(x.kind == SegmentIntersection::Kind::kEmpty);

  x = segment_intersection({P("0", "0"), P("4", "2")}, {P("1", "0"), P("1", "3")});
  REQUIRE(x.kind == SegmentIntersection::Kind::kPoint);
  CHECK(x.point == P("1", "1/2"));

  x = segment_intersection({P("0", "0"), P("4", "0")}, {P("2", "0"), P("6", "0")});
  REQUIRE(x.kind == SegmentIntersection::Kind::kOverlap);
  CHECK(x.overlap.a == P("2", "0"));
  CHECK(x.overlap.b == P("4", "0"));
}

TEST_CASE("curve crossings on small examples") {
  auto r = curve_crossings(curve({{0, 0}, {2, 2}}), curve({{0, 2}, {2, 0}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == ContactKind::kProperCross);
  CHECK(r[0].point == P("1", "1"));

  CHECK(curve_crossings(curve({{0, 0}, {2, 0}}), curve({{0, 1}, {2, 1}})).empty());

  r = curve_crossings(curve({{0, 0}, {2, 2}, {4, 0}}), curve({{0, 1}, {4, 1}}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].point == P("1", "1"));
  CHECK(r[1].point == P("3", "1"));
  CHECK(r[0].kind == ContactKind::kProperCross);
  CHECK(r[1].kind == ContactKind::kProperCross);
}

TEST_CASE("touching at a bend and at an endpoint") {
  // b bends down to touch a from above and leaves on the same side.
  auto r = curve_crossings(curve({{0, 0}, {4, 0}}), curve({{0, 2}, {2, 0}, {4, 2}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == ContactKind::kTouch);

  r = curve_crossings(curve({{0, 0}, {4, 0}}), curve({{2, 0}, {2, 3}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == ContactKind::kTouch);

  // Shared endpoints are not reported.
  CHECK(curve_crossings(curve({{0, 0}, {4, 0}}), curve({{0, 0}, {0, 3}})).empty());
  CHECK(shared_endpoints(curve({{0, 0}, {4, 0}}), curve({{0, 0}, {0, 3}})).size() == 1);
}

TEST_CASE("a bend crossing through is proper") {
  auto r = curve_crossings(curve({{0, 0}, {4, 0}}), curve({{0, 2}, {2, 0}, {4, -2}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == ContactKind::kProperCross);
}

TEST_CASE("overlapping curves are rejected") {
  CHECK_THROWS_AS(curve_crossings(curve({{0, 0}, {4, 0}}), curve({{1, 0}, {3, 0}, {3, 3}})),
                  Error);
  try {
    curve_crossings(curve({{0, 0}, {4, 0}}), curve({{1, 0}, {3, 0}, {3, 3}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverlapSegments);
  }
}

TEST_CASE("recorded positions evaluate to the crossing point") {
  const auto a = curve({{0, 0}, {3, 5}, {6, 0}, {9, 4}});
  const auto b = curve({{0, 3}, {9, 1}});
  const auto r = curve_crossings(a, b);
  REQUIRE(r.size() == 3);
  for (const auto& c : r) {
    CHECK(a.point_at(c.on_a) == c.point);
    CHECK(b.point_at(c.on_b) == c.point);
  }
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i - 1].on_a < r[i].on_a);
}

namespace {

std::vector<RationalPoint> random_polyline(std::mt19937_64& rng) {
  while (true) {
    const auto bends = uniform_int(rng, 0, 4);
    std::vector<RationalPoint> pts;
    for (int i = 0; i < bends + 2; ++i) {
      pts.push_back({Rational(uniform_int(rng, 0, 20)), Rational(uniform_int(rng, 0, 20))});
    }
    if (oracle::simple_polyline(pts)) return pts;
  }
}

}  // namespace

TEST_CASE("curve crossings agree with the all-segment-pairs oracle") {
  std::mt19937_64 rng(2024);
  int overlaps = 0, contacts = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto pa = random_polyline(rng);
    const auto pb = random_polyline(rng);
    const PolylineCurve a(pa), b(pb);
    const auto expected = oracle::polyline_contacts(pa, pb);
    if (!expected) {
      ++overlaps;
      CHECK_THROWS_AS(curve_crossings(a, b), Error);
      continue;
    }
    auto got = curve_crossings(a, b);
    REQUIRE(got.size() == expected->size());
    std::sort(got.begin(), got.end(), [](const CrossingRecord& x, const CrossingRecord& y) {
      return oracle::point_less(x.point, y.point);
    });
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].point == (*expected)[i].point);
      CHECK((got[i].kind == ContactKind::kProperCross) == (*expected)[i].proper);
      ++contacts;
    }
  }
  CHECK(contacts > 500);
  CHECK(overlaps < 1000);
}

TEST_CASE("curve crossings are symmetric as point sets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const PolylineCurve a(random_polyline(rng)), b(random_polyline(rng));
    std::vector<CrossingRecord> ab, ba;
    try {
      ab = curve_crossings(a, b);
    } catch (const Error&) {
      CHECK_THROWS_AS(curve_crossings(b, a), Error);
      continue;
    }
    ba = curve_crossings(b, a);
    REQUIRE(ab.size() == ba.size());
    auto by_point = [](const CrossingRecord& x, const CrossingRecord& y) {
      return oracle::point_less(x.point, y.point);
    };
    std::sort(ab.begin(), ab.end(), by_point);
    std::sort(ba.begin(), ba.end(), by_point);
    for (std::size_t i = 0; i < ab.size(); ++i) {
      CHECK(ab[i].point == ba[i].point);
      CHECK(ab[i].kind == ba[i].kind);
    }
  }
}

TEST_CASE("self intersection detection") {
  CHECK(is_simple(curve({{0, 0}, {2, 0}, {2, 2}})));
  CHECK_FALSE(is_simple(curve({{0, 0}, {2, 2}, {2, 0}, {0, 2}})));
  CHECK_FALSE(is_simple(curve({{0, 0}, {2, 0}, {1, 0}})));
  CHECK_FALSE(is_simple(curve({{0, 0}, {0, 0}, {1, 0}})));
}

TEST_CASE("side of a curve") {
  const auto e = curve({{0, 0}, {10, 0}});
  const CurvePosition mid{0, Q("1/2")};
  CHECK(side_of(e, mid, P("0", "1")) == Side::kLeft);
  CHECK(side_of(e, mid, P("1", "-3")) == Side::kRight);
}

TEST_CASE("clockwise angle comparison") {
  CHECK(angle_less(P("1", "0"), P("0", "1"), P("-1", "0")));
  CHECK_FALSE(angle_less(P("1", "0"), P("0", "-1"), P("-1", "0")));
}
