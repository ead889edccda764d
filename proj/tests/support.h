#pragma once

#include "qpt/drawing.h"
#include "qpt/numeric.h"

#include <doctest.h>

#include <string>
#include <vector>

namespace testsupport {

inline qpt::Rational Q(const std::string& text) {
  qpt::Rational r;
  REQUIRE(qpt::parse_rational(text, r));
  return r;
}

inline qpt::RationalPoint P(const std::string& x, const std::string& y) { return {Q(x), Q(y)}; }

inline qpt::PolylineCurve curve(const std::vector<std::pair<long, long>>& pts) {
  std::vector<qpt::RationalPoint> v;
  for (auto [x, y] : pts) v.push_back({qpt::Rational(x), qpt::Rational(y)});
  return qpt::PolylineCurve(v);
}

inline std::string fixture(const std::string& name) {
  return std::string(QPT_FIXTURE_DIR) + "/" + name;
}

}  // namespace testsupport
