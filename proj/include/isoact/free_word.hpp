#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace isoact {

// Reduced word in F_rank.  Letter +i is a_i, -i is a_i^{-1}.
class FreeWord {
 public:
  FreeWord() = default;

  // Throws BadGeneratorIndex for 0 or |letter| > rank.
  static FreeWord reduce(std::span<const int> letters, int rank);
  static FreeWord generator(int i) { return FreeWord(std::vector<int>{i}); }

  const std::vector<int>& letters() const { return w_; }
  std::size_t length() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  int operator[](std::size_t i) const { return w_[i]; }
  int back() const { return w_.back(); }

  FreeWord inverse() const;
  FreeWord prefix(std::size_t n) const;
  FreeWord drop_last() const { return prefix(w_.size() - 1); }
  FreeWord times_letter(int letter) const;
  FreeWord power(long k) const;
  bool has_prefix(const FreeWord& p) const;
  bool has_suffix(const FreeWord& s) const;

  // Conjugate to a cyclically reduced word; returns (core, conjugator) with *this = c core c^{-1}.
  std::pair<FreeWord, FreeWord> cyclic_reduction() const;

  std::string str() const;

  friend FreeWord operator*(const FreeWord& x, const FreeWord& y);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& x, const FreeWord& y) {
    if (x.w_.size() != y.w_.size()) return x.w_.size() <=> y.w_.size();
    return x.w_ <=> y.w_;
  }

 private:
  explicit FreeWord(std::vector<int> w) : w_(std::move(w)) {}
  std::vector<int> w_;
};

FreeWord free_reduce(std::span<const int> letters, int rank);

// Letters of F_rank in a fixed order: a_1, a_1^{-1}, a_2, ...
inline int letter_code(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
inline int code_letter(int code) { return code % 2 == 0 ? code / 2 + 1 : -(code / 2 + 1); }

// All reduced words of length <= radius, shortest first.
std::vector<FreeWord> free_ball(int rank, int radius);

}  // namespace isoact
