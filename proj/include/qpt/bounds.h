#pragma once

#include "qpt/numeric.h"

#include <optional>
#include <string>
#include <vector>

namespace qpt {

/// Parameters of the closed-form bounds. The constants are left open by the
/// theory they come from, so they are plain inputs with default 1; b_k
/// defaults to 2^(3k-6) a_k when unset.
struct BoundProfile {
  unsigned long n = 2;
  unsigned long k = 3;
  unsigned long t = 1;
  Rational c = 1;
  Rational c_k = 1;
  Rational a_k = 1;
  std::optional<Rational> b_k;
  Rational beta = 1;
  Rational c_prime_t = 1;

  Rational effective_b_k() const;

  /// Applies "key=value" with key in {n, k, t, c, c_k, a_k, b_k, beta,
  /// c_prime_t}; Error(kInvalidArgument) otherwise.
  void set(const std::string& assignment);

  /// "c=1;c_k=1;a_k=1;b_k=8;beta=1;c_prime_t=1"
  std::string describe() const;
};

/// ceil(2^(alpha(n)^c) n log2 n); needs n >= 2 and c >= 1.
BigInt theorem1_bound(const BoundProfile& p);

/// ceil(c_k n log2 n); needs n >= 2.
BigInt theorem2_bound(const BoundProfile& p);

/// ceil(2 beta n log2 n / c_prime_t); needs n >= 2.
BigInt reduction_bound(const BoundProfile& p);

/// 2^(3k-6); needs k >= 2.
BigInt two_side_bound(unsigned long k);

/// 2^(3k-6) a_k; needs k >= 2 and a_k >= 1.
BigInt curves_chromatic_bound(unsigned long k, const BigInt& a_k);

/// ceil((3 b + 2) n).
BigInt simple_edge_bound(unsigned long n, const Rational& b_prev);

/// 3n - 6 for n >= 3; n(n-1)/2 below that, where 3n - 6 undercounts.
BigInt planar_bound(unsigned long n);

/// ceil(n (log2 n / log2 k)^(c log2 k)); needs n >= 1, k >= 2.
BigInt fox_pach_bound(unsigned long n, unsigned long k, const Rational& c);

struct BoundRow {
  std::string name;
  std::string value;  // decimal, or "error: ..." when the bound is undefined
};

std::vector<BoundRow> bound_table(const BoundProfile& p);

/// Header comment, column line, then one row per bound.
std::string format_bound_csv(const BoundProfile& p, const std::vector<BoundRow>& rows);

}  // namespace qpt
