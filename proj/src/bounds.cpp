#include "qpt/bounds.h"

#include "qpt/error.h"
#include "qpt/sequences.h"

#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <sstream>

namespace qpt {

namespace {

// Closed interval [lo, hi] of non-negative reals with outward rounding.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  Interval(const Interval& o) : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval&) = delete;
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  static Interval of(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  Interval operator*(const Interval& o) const {
    Interval r(prec());
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
  }

  Interval operator/(const Interval& o) const {
    if (mpfr_sgn(o.lo_) <= 0) throw Error(ErrorCode::kInvalidArgument, "division by zero in bound");
    Interval r(prec());
    mpfr_div(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
  }

  // Requires lo >= 1 so that the result stays non-negative.
  Interval log2() const {
    Interval r(prec());
    mpfr_log2(r.lo_, lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  Interval exp2() const {
    Interval r(prec());
    mpfr_exp2(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp2(r.hi_, hi_, MPFR_RNDU);
    return r;
  }

  // this^e for a non-negative base and exponent; monotone in each argument
  // on every sub-range, so the extremes sit at the corners.
  Interval pow(const Interval& e) const {
    Interval r(prec());
    mpfr_t tmp;
    mpfr_init2(tmp, prec());
    bool first = true;
    for (auto b : {lo_, hi_}) {
      for (auto x : {e.lo_, e.hi_}) {
        mpfr_pow(tmp, b, x, MPFR_RNDD);
        if (first || mpfr_less_p(tmp, r.lo_)) mpfr_set(r.lo_, tmp, MPFR_RNDD);
        mpfr_pow(tmp, b, x, MPFR_RNDU);
        if (first || mpfr_greater_p(tmp, r.hi_)) mpfr_set(r.hi_, tmp, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(tmp);
    return r;
  }

  bool finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
  long magnitude_bits() const { return mpfr_zero_p(hi_) ? 0 : mpfr_get_exp(hi_); }

  BigInt ceil_lo() const { return ceil_of(lo_); }
  BigInt ceil_hi() const { return ceil_of(hi_); }

 private:
  static BigInt ceil_of(const mpfr_t x) {
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDU);
    return z;
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

// Ceiling of a real given by an interval evaluator. Precision doubles until
// both ends round up to the same integer. An exact integer value computed
// through irrational intermediates can straddle forever; past the cap the
// lower end's ceiling is returned.
BigInt certified_ceiling(const std::function<Interval(mpfr_prec_t)>& eval) {
  mpfr_prec_t prec = 128;
  mpfr_prec_t cap = 4096;
  while (true) {
    const Interval v = eval(prec);
    if (!v.finite()) throw Error(ErrorCode::kSizeOutOfRange, "bound exceeds floating range");
    cap = std::max<mpfr_prec_t>(cap, 4 * v.magnitude_bits() + 4096);
    const BigInt lo = v.ceil_lo();
    if (lo == v.ceil_hi() || prec >= cap) return lo;
    prec *= 2;
  }
}

Interval num(const Rational& q, mpfr_prec_t prec) { return Interval::of(q, prec); }
Interval num(unsigned long v, mpfr_prec_t prec) { return Interval::of(Rational(v), prec); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

std::string decimal(const Rational& q) { return format_rational(q); }

}  // namespace

Rational BoundProfile::effective_b_k() const {
  if (b_k) return *b_k;
  if (k < 2) return a_k;
  return Rational(pow2(3 * k - 6)) * a_k;
}

void BoundProfile::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "profile override must be key=value: " + assignment);
  }
  const std::string key = assignment.substr(0, eq);
  Rational value;
  if (!parse_rational(assignment.substr(eq + 1), value)) {
    throw Error(ErrorCode::kInvalidArgument, "bad value in '" + assignment + "'");
  }
  auto as_count = [&]() {
    if (value.get_den() != 1 || value < 1 || !value.get_num().fits_ulong_p()) {
      throw Error(ErrorCode::kInvalidArgument, key + " must be a positive integer");
    }
    return value.get_num().get_ui();
  };
  if (key == "n") {
    n = as_count();
  } else if (key == "k") {
    k = as_count();
  } else if (key == "t") {
    t = as_count();
  } else {
    if (value <= 0) throw Error(ErrorCode::kInvalidArgument, key + " must be positive");
    if (key == "c") {
      c = value;
    } else if (key == "c_k") {
      c_k = value;
    } else if (key == "a_k") {
      a_k = value;
    } else if (key == "b_k") {
      b_k = value;
    } else if (key == "beta") {
      beta = value;
    } else if (key == "c_prime_t") {
      c_prime_t = value;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown profile key '" + key + "'");
    }
  }
}

std::string BoundProfile::describe() const {
  std::ostringstream o;
  o << "c=" << decimal(c) << ";c_k=" << decimal(c_k) << ";a_k=" << decimal(a_k)
    << ";b_k=" << decimal(effective_b_k()) << ";beta=" << decimal(beta)
    << ";c_prime_t=" << decimal(c_prime_t);
  return o.str();
}

BigInt theorem1_bound(const BoundProfile& p) {
  require(p.n >= 2, "edge bound needs n >= 2");
  require(p.c >= 1, "edge bound needs c >= 1");
  const unsigned long alpha = inverse_ackermann(BigInt(p.n));
  return certified_ceiling([&](mpfr_prec_t prec) {
    const Interval power = num(alpha, prec).pow(num(p.c, prec)).exp2();
    return power * num(p.n, prec) * num(p.n, prec).log2();
  });
}

BigInt theorem2_bound(const BoundProfile& p) {
  require(p.n >= 2, "simple edge bound needs n >= 2");
  return certified_ceiling([&](mpfr_prec_t prec) {
    return num(p.c_k, prec) * num(p.n, prec) * num(p.n, prec).log2();
  });
}

BigInt reduction_bound(const BoundProfile& p) {
  require(p.n >= 2, "reduction bound needs n >= 2");
  require(p.c_prime_t > 0, "c_prime_t must be positive");
  require(p.beta >= 0, "beta must be non-negative");
  return certified_ceiling([&](mpfr_prec_t prec) {
    return num(Rational(2) * p.beta, prec) * num(p.n, prec) * num(p.n, prec).log2() /
           num(p.c_prime_t, prec);
  });
}

BigInt two_side_bound(unsigned long k) {
  require(k >= 2, "two-side bound needs k >= 2");
  return pow2(3 * k - 6);
}

BigInt curves_chromatic_bound(unsigned long k, const BigInt& a_k) {
  require(a_k >= 1, "a_k must be at least 1");
  return two_side_bound(k) * a_k;
}

BigInt simple_edge_bound(unsigned long n, const Rational& b_prev) {
  require(b_prev >= 0, "b must be non-negative");
  Rational v = (3 * b_prev + 2) * Rational(n);
  v.canonicalize();
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return out;
}

BigInt planar_bound(unsigned long n) {
  if (n >= 3) return BigInt(3 * n - 6);
  return BigInt(n * (n - 1) / 2);
}

BigInt fox_pach_bound(unsigned long n, unsigned long k, const Rational& c) {
  require(n >= 1, "fox-pach bound needs n >= 1");
  require(k >= 2, "fox-pach bound needs k >= 2");
  require(c > 0, "c must be positive");
  return certified_ceiling([&](mpfr_prec_t prec) {
    const Interval lk = num(k, prec).log2();
    const Interval ratio = num(n, prec).log2() / lk;
    return num(n, prec) * ratio.pow(num(c, prec) * lk);
  });
}

std::vector<BoundRow> bound_table(const BoundProfile& p) {
  std::vector<BoundRow> rows;
  auto add = [&](const std::string& name, const std::function<BigInt()>& f) {
    try {
      rows.push_back({name, f().get_str()});
    } catch (const Error& e) {
      rows.push_back({name, std::string("error: ") + e.what()});
    }
  };
  add("theorem1", [&] { return theorem1_bound(p); });
  add("theorem2", [&] { return theorem2_bound(p); });
  add("reduction", [&] { return reduction_bound(p); });
  add("two_side", [&] { return two_side_bound(p.k); });
  add("curves_chromatic", [&] {
    require(p.a_k.get_den() == 1, "a_k must be an integer");
    return curves_chromatic_bound(p.k, p.a_k.get_num());
  });
  add("simple_edge", [&] { return simple_edge_bound(p.n, p.effective_b_k()); });
  add("planar", [&] { return planar_bound(p.n); });
  add("fox_pach", [&] { return fox_pach_bound(p.n, p.k, p.c); });
  return rows;
}

std::string format_bound_csv(const BoundProfile& p, const std::vector<BoundRow>& rows) {
  std::ostringstream o;
  o << "# qpt-bounds v1\n";
  o << "n,k,t,bound,value,profile\n";
  for (const auto& r : rows) {
    std::string value = r.value;
    if (value.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char ch : value) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      value = quoted + "\"";
    }
    o << p.n << "," << p.k << "," << p.t << "," << r.name << "," << value << "," << p.describe()
      << "\n";
  }
  return o.str();
}

}  // namespace qpt
