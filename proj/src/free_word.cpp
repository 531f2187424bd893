#include "isoact/free_word.hpp"

#include <algorithm>

#include "isoact/error.hpp"

namespace isoact {

FreeWord FreeWord::reduce(std::span<const int> letters, int rank) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (x == 0 || x > rank || -x > rank)
      fail(Errc::bad_generator_index, "letter " + std::to_string(x) + " outside F_" + std::to_string(rank));
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return FreeWord(std::move(out));
}

FreeWord free_reduce(std::span<const int> letters, int rank) { return FreeWord::reduce(letters, rank); }

FreeWord FreeWord::inverse() const {
  std::vector<int> r(w_.rbegin(), w_.rend());
  for (int& x : r) x = -x;
  return FreeWord(std::move(r));
}

FreeWord FreeWord::prefix(std::size_t n) const {
  return FreeWord(std::vector<int>(w_.begin(), w_.begin() + static_cast<long>(std::min(n, w_.size()))));
}

FreeWord FreeWord::times_letter(int letter) const {
  std::vector<int> r = w_;
  if (!r.empty() && r.back() == -letter)
    r.pop_back();
  else
    r.push_back(letter);
  return FreeWord(std::move(r));
}

FreeWord operator*(const FreeWord& x, const FreeWord& y) {
  std::size_t k = 0;
  while (k < x.w_.size() && k < y.w_.size() && x.w_[x.w_.size() - 1 - k] == -y.w_[k]) ++k;
  std::vector<int> r(x.w_.begin(), x.w_.end() - static_cast<long>(k));
  r.insert(r.end(), y.w_.begin() + static_cast<long>(k), y.w_.end());
  return FreeWord(std::move(r));
}

FreeWord FreeWord::power(long k) const {
  FreeWord base = k >= 0 ? *this : inverse();
  FreeWord r;
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
  return r;
}

bool FreeWord::has_prefix(const FreeWord& p) const {
  return p.w_.size() <= w_.size() && std::equal(p.w_.begin(), p.w_.end(), w_.begin());
}

bool FreeWord::has_suffix(const FreeWord& s) const {
  return s.w_.size() <= w_.size() && std::equal(s.w_.rbegin(), s.w_.rend(), w_.rbegin());
}

std::pair<FreeWord, FreeWord> FreeWord::cyclic_reduction() const {
  std::size_t i = 0, j = w_.size();
  while (j - i >= 2 && w_[i] == -w_[j - 1]) {
    ++i;
    --j;
  }
  FreeWord core(std::vector<int>(w_.begin() + static_cast<long>(i), w_.begin() + static_cast<long>(j)));
  return {core, prefix(i)};
}

std::string FreeWord::str() const {
  if (w_.empty()) return "e";
  std::string s;
  for (int x : w_) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(x > 0 ? x : -x);
    if (x < 0) s += "^-1";
  }
  return s;
}

std::vector<FreeWord> free_ball(int rank, int radius) {
  std::vector<FreeWord> out{FreeWord()};
  std::size_t level_start = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int c = 0; c < 2 * rank; ++c) {
        int x = code_letter(c);
        if (!out[i].empty() && out[i].back() == -x) continue;
        out.push_back(out[i].times_letter(x));
      }
    }
    level_start = level_end;
  }
  return out;
}

}  // namespace isoact
