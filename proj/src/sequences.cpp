#include "qpt/sequences.h"

#include "qpt/error.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace qpt {

bool is_l_regular(const SymbolSequence& s, int l) {
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be at least 1");
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size() && j < i + static_cast<std::size_t>(l); ++j) {
      if (s[i] == s[j]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> greedy_regular_subsequence(const SymbolSequence& s, int l) {
  if (l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be at least 1");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t window = std::min(static_cast<std::size_t>(l - 1), kept.size());
    bool ok = true;
    for (std::size_t j = kept.size() - window; j < kept.size() && ok; ++j) {
      if (s[kept[j]] == s[i]) ok = false;
    }
    if (ok) kept.push_back(i);
  }
  return kept;
}

bool is_up_type_selection(const SymbolSequence& s, const UpWitness& w, int l, int m) {
  if (l < 1 || m < 1) return false;
  const auto& idx = w.indices;
  if (idx.size() != static_cast<std::size_t>(l) * static_cast<std::size_t>(m)) return false;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= s.size()) return false;
    if (i > 0 && idx[i] <= idx[i - 1]) return false;
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(l); ++i) {
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(l); ++j) {
      if (s[idx[i]] == s[idx[j]]) return false;
    }
  }
  for (std::size_t i = static_cast<std::size_t>(l); i < idx.size(); ++i) {
    if (s[idx[i]] != s[idx[i - static_cast<std::size_t>(l)]]) return false;
  }
  return true;
}

namespace {

class UpMatcher {
 public:
  UpMatcher(const SymbolSequence& s, int l, int m) : l_(l), m_(m) {
    std::map<std::string, std::size_t> id;
    std::vector<std::size_t> count;
    for (const auto& sym : s) {
      auto [it, inserted] = id.emplace(sym, id.size());
      if (inserted) count.push_back(0);
      ++count[it->second];
      codes_.push_back(it->second);
    }
    // Symbols occurring fewer than m times cannot be in the pattern.
    for (std::size_t c = 0; c < count.size(); ++c) {
      if (count[c] >= static_cast<std::size_t>(m)) usable_.push_back(c);
    }
  }

  std::optional<UpWitness> run() {
    if (static_cast<std::size_t>(l_) > usable_.size()) return std::nullopt;
    used_.assign(usable_.size(), false);
    if (extend()) return witness_;
    return std::nullopt;
  }

 private:
  bool extend() {
    if (tuple_.size() == static_cast<std::size_t>(l_)) return match();
    for (std::size_t i = 0; i < usable_.size(); ++i) {
      if (used_[i]) continue;
      used_[i] = true;
      tuple_.push_back(usable_[i]);
      if (extend()) return true;
      tuple_.pop_back();
      used_[i] = false;
    }
    return false;
  }

  bool match() {
    witness_.indices.clear();
    const std::size_t total = static_cast<std::size_t>(l_) * static_cast<std::size_t>(m_);
    std::size_t next = 0;
    for (std::size_t i = 0; i < codes_.size() && next < total; ++i) {
      if (codes_[i] == tuple_[next % tuple_.size()]) {
        witness_.indices.push_back(i);
        ++next;
      }
    }
    return next == total;
  }

  int l_;
  int m_;
  std::vector<std::size_t> codes_;
  std::vector<std::size_t> usable_;
  std::vector<bool> used_;
  std::vector<std::size_t> tuple_;
  UpWitness witness_;
};

}  // namespace

std::optional<UpWitness> contains_up_type(const SymbolSequence& s, int l, int m) {
  if (l < 1 || m < 1) throw Error(ErrorCode::kInvalidArgument, "l and m must be positive");
  if (static_cast<std::size_t>(l) * static_cast<std::size_t>(m) > s.size()) return std::nullopt;
  return UpMatcher(s, l, m).run();
}

std::optional<BigInt> ackermann(unsigned long k, const BigInt& n, const BigInt& ceiling) {
  if (k < 1 || n < 1) throw Error(ErrorCode::kInvalidArgument, "ackermann needs k, n >= 1");
  if (k == 1) {
    BigInt v = 2 * n;
    if (v > ceiling) return std::nullopt;
    return v;
  }
  BigInt value = 2;
  if (value > ceiling) return std::nullopt;
  // Values grow at least geometrically in i, so the loop leaves early once
  // the ceiling is passed even for huge n.
  for (BigInt i = 2; i <= n; ++i) {
    auto next = ackermann(k - 1, value, ceiling);
    if (!next) return std::nullopt;
    value = std::move(*next);
  }
  return value;
}

unsigned long inverse_ackermann(const BigInt& n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "inverse ackermann needs n >= 1");
  for (unsigned long k = 1;; ++k) {
    const auto v = ackermann(k, BigInt(k), n);
    if (!v || *v >= n) return k;
  }
}

BigInt klazar_bound(const BigInt& n, int l, int m) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "klazar bound needs n >= 1");
  if (l < 2 || m < 3) throw Error(ErrorCode::kInvalidArgument, "klazar bound needs l >= 2, m >= 3");
  const unsigned long alpha = inverse_ackermann(n);
  const unsigned long lm = static_cast<unsigned long>(l) * static_cast<unsigned long>(m);
  BigInt power = pow(BigInt(alpha), lm) * 10;
  constexpr unsigned long kMaxExponent = 50'000'000;
  if (power > kMaxExponent) {
    throw Error(ErrorCode::kSizeOutOfRange, "exponent 10*alpha^(lm) = " + power.get_str() + " too large");
  }
  return n * l * pow2(lm - 3) * pow(BigInt(10 * l), power.get_ui());
}

namespace {

void extremal_search(SymbolSequence& s, int alphabet, int l, int m, int max_len, int& best) {
  best = std::max(best, static_cast<int>(s.size()));
  if (best == max_len || static_cast<int>(s.size()) == max_len) return;
  for (int c = 0; c < alphabet; ++c) {
    const std::string sym(1, static_cast<char>('a' + c));
    bool ok = true;
    for (int j = 1; j < l && j <= static_cast<int>(s.size()) && ok; ++j) {
      if (s[s.size() - static_cast<std::size_t>(j)] == sym) ok = false;
    }
    if (!ok) continue;
    s.push_back(sym);
    // Containing the pattern is inherited by extensions, so such branches
    // are cut.
    if (!contains_up_type(s, l, m)) extremal_search(s, alphabet, l, m, max_len, best);
    s.pop_back();
  }
}

}  // namespace

int brute_force_extremal(int alphabet, int l, int m, int max_len) {
  if (alphabet < 1 || alphabet > 3 || l < 2 || l > 3 || m < 2 || m > 3 || max_len < 0 ||
      max_len > 14) {
    throw Error(ErrorCode::kInvalidArgument,
                "brute force needs alphabet 1..3, l and m in 2..3, max_len 0..14");
  }
  SymbolSequence s;
  int best = 0;
  extremal_search(s, alphabet, l, m, max_len, best);
  return best;
}

std::vector<SymbolSequence> parse_sequences(std::string_view text) {
  std::vector<SymbolSequence> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    SymbolSequence s;
    std::string w;
    while (words >> w) s.push_back(w);
    if (s.empty() || s.front().front() == '#') continue;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SymbolSequence> read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequences(buf.str());
}

}  // namespace qpt
