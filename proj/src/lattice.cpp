#include <algorithm>
#include <optional>

#include "isoact/error.hpp"
#include "isoact/tree_core.hpp"

namespace isoact {

RatMat2 RatMat2::identity() {
  RatMat2 r;
  r.m[0][0] = 1;
  r.m[1][1] = 1;
  return r;
}

Rational RatMat2::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

RatMat2 RatMat2::inverse() const {
  Rational d = det();
  if (d == 0) fail(Errc::singular_lattice, "matrix is singular");
  RatMat2 r;
  r.m[0][0] = m[1][1] / d;
  r.m[0][1] = -m[0][1] / d;
  r.m[1][0] = -m[1][0] / d;
  r.m[1][1] = m[0][0] / d;
  return r;
}

RatMat2 operator*(const RatMat2& x, const RatMat2& y) {
  RatMat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

long lattice_distance(const RatMat2& l1, const RatMat2& l2, long p) {
  if (l1.det() == 0 || l2.det() == 0) fail(Errc::singular_lattice, "lattice basis is singular");
  RatMat2 q = l1.inverse() * l2;
  // elementary divisors p^e1, p^e2: e1 = min valuation of entries, e1 + e2 = v(det)
  std::optional<long> e1;
  for (auto& row : q.m)
    for (auto& x : row) {
      auto v = padic_valuation(x, p);
      if (v && (!e1 || *v < *e1)) e1 = v;
    }
  long vdet = *padic_valuation(q.det(), p);
  return vdet - 2 * *e1;
}

bool same_lattice_class(const RatMat2& l1, const RatMat2& l2, long p) { return lattice_distance(l1, l2, p) == 0; }

namespace {

RatMat2 from_columns(Rational u0, Rational u1, Rational w0, Rational w1) {
  RatMat2 r;
  r.m[0][0] = std::move(u0);
  r.m[1][0] = std::move(u1);
  r.m[0][1] = std::move(w0);
  r.m[1][1] = std::move(w1);
  return r;
}

// Index-p sublattices of l other than the parent class.
std::vector<RatMat2> lattice_children(const RatMat2& l, const std::optional<RatMat2>& parent, long p) {
  const Rational &u0 = l.m[0][0], &u1 = l.m[1][0], &w0 = l.m[0][1], &w1 = l.m[1][1];
  std::vector<RatMat2> out;
  for (long t = 0; t < p; ++t) out.push_back(from_columns(u0 + t * w0, u1 + t * w1, p * w0, p * w1));
  out.push_back(from_columns(p * u0, p * u1, w0, w1));
  if (parent) {
    auto it = std::find_if(out.begin(), out.end(), [&](const RatMat2& c) { return same_lattice_class(c, *parent, p); });
    if (it == out.end()) fail(Errc::constraint_violation, "parent lattice is not a neighbour");
    out.erase(it);
  }
  return out;
}

}  // namespace

RatMat2 lattice_of_address(const Address& a, long p) {
  if (!is_prime(p)) fail(Errc::constraint_violation, "p must be prime");
  RatMat2 cur = RatMat2::identity();
  std::optional<RatMat2> parent;
  for (int c : a) {
    auto kids = lattice_children(cur, parent, p);
    if (c < 0 || c >= static_cast<int>(kids.size())) fail(Errc::vertex_not_found, "address outside T_p");
    parent = cur;
    cur = kids[c];
  }
  return cur;
}

Address address_of_lattice(const RatMat2& l, long p) {
  RatMat2 cur = RatMat2::identity();
  std::optional<RatMat2> parent;
  long k = lattice_distance(cur, l, p);
  Address a;
  for (long d = 0; d < k; ++d) {
    auto kids = lattice_children(cur, parent, p);
    int pick = -1;
    for (int c = 0; c < static_cast<int>(kids.size()); ++c)
      if (lattice_distance(kids[c], l, p) == k - d - 1) {
        pick = c;
        break;
      }
    if (pick < 0) fail(Errc::constraint_violation, "lattice descent lost the target");
    a.push_back(pick);
    parent = cur;
    cur = kids[pick];
  }
  return a;
}

}  // namespace isoact
