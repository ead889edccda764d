#include "qpt/numeric.h"

#include "qpt/error.h"

#include <cctype>

namespace qpt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOverlapSegments: return "OVERLAP_SEGMENTS";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kDuplicateId: return "DUPLICATE_ID";
    case ErrorCode::kUnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::kUnknownId: return "UNKNOWN_ID";
    case ErrorCode::kInvalidDrawing: return "INVALID_DRAWING";
    case ErrorCode::kSizeOutOfRange: return "SIZE_OUT_OF_RANGE";
    case ErrorCode::kGenerationFailed: return "GENERATION_FAILED";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kKCrossingPresent: return "K_CROSSING_PRESENT";
    case ErrorCode::kPartialOrderViolation: return "PARTIAL_ORDER_VIOLATION";
    case ErrorCode::kNotAllCrossing: return "NOT_ALL_CROSSING";
    case ErrorCode::kCoincidentCrossings: return "COINCIDENT_CROSSINGS";
    case ErrorCode::kNotGrounded: return "NOT_GROUNDED";
    case ErrorCode::kHitBudget: return "HIT_BUDGET";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool parse_rational(std::string_view text, Rational& out) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return false;
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) return false;
  out = Rational(n, d);
  out.canonicalize();
  if (negative) out = -out;
  return true;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

BigInt pow2(unsigned long exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
  return out;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

unsigned long floor_log(const BigInt& value, unsigned long base) {
  if (base < 2 || value < 1) {
    throw Error(ErrorCode::kInvalidArgument, "floor_log needs base >= 2 and value >= 1");
  }
  unsigned long e = 0;
  BigInt power = base;
  while (power <= value) {
    ++e;
    power *= base;
  }
  return e;
}

}  // namespace qpt
