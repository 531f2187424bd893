#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "isoact/error.hpp"
#include "isoact/rational.hpp"

namespace isoact {

// Finitely supported probability measure with exact weights.  The group tag
// names the ambient group; convolution refuses to mix tags.
template <class Elem, class Less = std::less<Elem>>
class FiniteMeasure {
 public:
  using Atoms = std::map<Elem, Rational, Less>;

  FiniteMeasure(std::string group, const std::vector<std::pair<Elem, Rational>>& atoms) : group_(std::move(group)) {
    Rational total = 0;
    for (const auto& [e, w] : atoms) {
      if (w <= 0) fail(Errc::constraint_violation, "measure weights must be positive");
      atoms_[e] += w;
      total += w;
    }
    if (total != 1) fail(Errc::constraint_violation, "measure weights sum to " + total.get_str() + ", not 1");
  }

  static FiniteMeasure delta(std::string group, const Elem& e) { return FiniteMeasure(std::move(group), {{e, 1}}); }

  const std::string& group() const { return group_; }
  const Atoms& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  Rational mass(const Elem& e) const {
    auto it = atoms_.find(e);
    return it == atoms_.end() ? Rational(0) : it->second;
  }

  template <class Mul>
  FiniteMeasure convolve(const FiniteMeasure& other, Mul mul) const {
    if (group_ != other.group_) fail(Errc::group_mismatch, group_ + " vs " + other.group_);
    std::vector<std::pair<Elem, Rational>> out;
    for (const auto& [g, p] : atoms_)
      for (const auto& [h, q] : other.atoms_) out.emplace_back(mul(g, h), p * q);
    return FiniteMeasure(group_, out);
  }

  friend bool operator==(const FiniteMeasure& x, const FiniteMeasure& y) {
    return x.group_ == y.group_ && x.atoms_ == y.atoms_;
  }

 private:
  std::string group_;
  Atoms atoms_;
};

template <class Elem, class Less, class Mul>
FiniteMeasure<Elem, Less> measure_convolve(const FiniteMeasure<Elem, Less>& mu, const FiniteMeasure<Elem, Less>& nu,
                                           Mul mul) {
  return mu.convolve(nu, mul);
}

}  // namespace isoact
