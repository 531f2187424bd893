#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "isoact/error.hpp"
#include "isoact/json_io.hpp"
#include "isoact/sp.hpp"

namespace isoact {

// (p, h) with p an exchange of the 2^level dyadic cells of [0,1) (cell i is
// translated onto cell perm[i]) and h constant on each cell.
template <class G>
struct StepAutomorphism {
  static constexpr int max_level = 20;

  int level = 0;
  std::vector<int> perm;
  std::vector<G> values;

  StepAutomorphism(int level_, std::vector<int> perm_, std::vector<G> values_)
      : level(level_), perm(std::move(perm_)), values(std::move(values_)) {
    if (level < 0 || level > max_level) fail(Errc::partition_overflow, "dyadic level " + std::to_string(level));
    std::size_t n = std::size_t{1} << level;
    if (perm.size() != n || values.size() != n)
      fail(Errc::constraint_violation, "expected " + std::to_string(n) + " cells");
    std::vector<int> seen(perm);
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < n; ++i)
      if (seen[i] != static_cast<int>(i)) fail(Errc::constraint_violation, "cell map is not a permutation");
  }

  static StepAutomorphism constant(const G& g) { return StepAutomorphism(0, {0}, {g}); }

  std::size_t cells() const { return perm.size(); }

  StepAutomorphism refined(int to) const {
    if (to < level) fail(Errc::precondition_violation, "refinement cannot coarsen");
    if (to > max_level) fail(Errc::partition_overflow, "dyadic level " + std::to_string(to));
    int m = to - level;
    std::size_t k = std::size_t{1} << m;
    std::vector<int> p(cells() * k);
    std::vector<G> v;
    v.reserve(cells() * k);
    for (std::size_t i = 0; i < cells(); ++i)
      for (std::size_t j = 0; j < k; ++j) {
        p[i * k + j] = static_cast<int>(perm[i] * k + j);
        v.push_back(values[i]);
      }
    return StepAutomorphism(to, std::move(p), std::move(v));
  }
};

// Which side the shifted factor sits on in the pointwise product.
enum class ProductOrder { shifted_left, shifted_right };

// (p1 p2, h1(p2 x) h2(x)), or h2(x) h1(p2 x) with shifted_right.
template <class G, class Mul>
StepAutomorphism<G> bgroup_product(const StepAutomorphism<G>& x, const StepAutomorphism<G>& y, Mul mul,
                                   ProductOrder order = ProductOrder::shifted_left) {
  int lv = std::max(x.level, y.level);
  StepAutomorphism<G> a = x.refined(lv), b = y.refined(lv);
  std::vector<int> p(a.cells());
  std::vector<G> v;
  v.reserve(a.cells());
  for (std::size_t i = 0; i < a.cells(); ++i) {
    int j = b.perm[i];
    p[i] = a.perm[j];
    v.push_back(order == ProductOrder::shifted_left ? mul(a.values[j], b.values[i]) : mul(b.values[i], a.values[j]));
  }
  return StepAutomorphism<G>(lv, std::move(p), std::move(v));
}

template <class G, class Eq = std::equal_to<G>>
bool step_equal(const StepAutomorphism<G>& x, const StepAutomorphism<G>& y, Eq eq = {}) {
  int lv = std::max(x.level, y.level);
  StepAutomorphism<G> a = x.refined(lv), b = y.refined(lv);
  if (a.perm != b.perm) return false;
  for (std::size_t i = 0; i < a.cells(); ++i)
    if (!eq(a.values[i], b.values[i])) return false;
  return true;
}

// sum over cells of 2^{-level} tau(h1(p2 x), h2(x)).  Cells with identical
// arguments are counted together, so constant fields give tau exactly.
template <class G, class Tau, class Eq = std::equal_to<G>>
double bgroup_cocycle_with(const StepAutomorphism<G>& x, const StepAutomorphism<G>& y, Tau tau, Eq eq = {}) {
  int lv = std::max(x.level, y.level);
  StepAutomorphism<G> a = x.refined(lv), b = y.refined(lv);
  struct Term {
    const G *u, *v;
    long count;
    std::size_t cell;  // first cell carrying the pair
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < a.cells(); ++i) {
    const G& u = a.values[b.perm[i]];
    const G& v = b.values[i];
    auto it = std::find_if(terms.begin(), terms.end(), [&](const Term& t) { return eq(*t.u, u) && eq(*t.v, v); });
    if (it == terms.end())
      terms.push_back({&u, &v, 1, i});
    else
      ++it->count;
  }
  double s = 0, cells = std::ldexp(1.0, lv);
  for (const Term& t : terms) {
    double value;
    try {
      value = tau(*t.u, *t.v);
    } catch (const Error& e) {
      if (e.code() != Errc::branch_guard) throw;
      fail(Errc::branch_guard, "cell " + std::to_string(t.cell) + " of " + std::to_string(a.cells()) + ": " + e.what());
    }
    s += (double(t.count) / cells) * value;
  }
  return s;
}

struct SpEqual {
  bool operator()(const SpMatrix& x, const SpMatrix& y) const { return x.matrix() == y.matrix(); }
};
using SpStep = StepAutomorphism<SpMatrix>;

SpStep sp_step_product(const SpStep& x, const SpStep& y, ProductOrder order = ProductOrder::shifted_left);
double bgroup_cocycle(const SpStep& x, const SpStep& y);
double bgroup_cocycle_residual(const SpStep& x, const SpStep& y, const SpStep& z);
SpStep random_sp_step(std::mt19937_64& rng, int n, int max_level, double scale = 0.6);

json encode(const SpStep& x);
SpStep decode_sp_step(const json& j);

}  // namespace isoact
