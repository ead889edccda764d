#pragma once

#include "qpt/numeric.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpt {

/// Symbols are compared by equality only.
using SymbolSequence = std::vector<std::string>;

/// Every window of l consecutive terms has pairwise distinct symbols.
bool is_l_regular(const SymbolSequence& s, int l);

/// Left-to-right scan keeping a term iff it differs from the last
/// min(l - 1, kept) kept terms. Returns 0-based indices of kept terms.
std::vector<std::size_t> greedy_regular_subsequence(const SymbolSequence& s, int l);

/// 0-based, strictly increasing positions of l*m selected terms: the first
/// l are pairwise distinct and the selection repeats them m times.
struct UpWitness {
  std::vector<std::size_t> indices;
};

bool is_up_type_selection(const SymbolSequence& s, const UpWitness& w, int l, int m);

/// A subsequence of type up(l, m), or nullopt. Tries every ordered l-tuple
/// of distinct symbols (in order of first occurrence) and matches the
/// repeated block greedily, leftmost first.
std::optional<UpWitness> contains_up_type(const SymbolSequence& s, int l, int m);

/// A_k(n) with A_1(n) = 2n and A_k(1) = 2, or nullopt when the value
/// exceeds `ceiling`. Requires k, n >= 1.
std::optional<BigInt> ackermann(unsigned long k, const BigInt& n, const BigInt& ceiling);

/// Least k >= 1 with A_k(k) >= n.
unsigned long inverse_ackermann(const BigInt& n);

/// n * l * 2^(lm - 3) * (10 l)^(10 alpha(n)^(lm)). Error(kSizeOutOfRange)
/// when the exponent is too large to materialize.
BigInt klazar_bound(const BigInt& n, int l, int m);

/// Length of the longest l-regular sequence over `alphabet` symbols with no
/// up(l, m) subsequence, capped at max_len. Exhaustive; alphabet <= 3,
/// l and m in 2..3, max_len <= 14.
int brute_force_extremal(int alphabet, int l, int m, int max_len);

/// One sequence per line, whitespace-separated symbols. Blank lines and
/// lines starting with '#' are skipped.
std::vector<SymbolSequence> parse_sequences(std::string_view text);
std::vector<SymbolSequence> read_sequence_file(const std::string& path);

}  // namespace qpt
