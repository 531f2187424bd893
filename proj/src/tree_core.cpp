#include "isoact/tree_core.hpp"

#include <algorithm>
#include <set>

#include "isoact/error.hpp"

namespace isoact {

std::int64_t TreeBall::expected_vertex_count(int n, int radius) {
  std::int64_t total = 1, sphere = n + 1;
  for (int k = 1; k <= radius; ++k) {
    total += sphere;
    sphere *= n;
  }
  return total;
}

TreeBall::TreeBall(int n, int radius) : n_(n), radius_(radius) {
  if (n < 1 || radius < 0) fail(Errc::constraint_violation, "tree ball needs n >= 1 and radius >= 0");
  std::int64_t count = expected_vertex_count(n, radius);
  if (count > 20'000'000) fail(Errc::constraint_violation, "tree ball too large");
  parent_.reserve(count);
  parent_.push_back(-1);
  depth_.push_back(0);
  branch_.push_back(-1);
  for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
    if (depth_[v] == radius_) {
      first_child_.push_back(-1);
      child_count_.push_back(0);
      continue;
    }
    int k = v == 0 ? n_ + 1 : n_;
    first_child_.push_back(static_cast<int>(parent_.size()));
    child_count_.push_back(k);
    for (int c = 0; c < k; ++c) {
      parent_.push_back(v);
      depth_.push_back(depth_[v] + 1);
      branch_.push_back(c);
    }
  }
}

std::vector<int> TreeBall::neighbors(int v) const {
  std::vector<int> out;
  if (v != 0) out.push_back(parent_[v]);
  for (int c = 0; c < child_count_[v]; ++c) out.push_back(first_child_[v] + c);
  return out;
}

Address TreeBall::address(int v) const {
  Address a(depth_[v]);
  for (int u = v; u != 0; u = parent_[u]) a[depth_[u] - 1] = branch_[u];
  return a;
}

bool TreeBall::valid_address(const Address& a) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int hi = i == 0 ? n_ : n_ - 1;
    if (a[i] < 0 || a[i] > hi) return false;
  }
  return true;
}

std::optional<int> TreeBall::find(const Address& a) const {
  if (static_cast<int>(a.size()) > radius_ || !valid_address(a)) return std::nullopt;
  int v = 0;
  for (int c : a) v = first_child_[v] + c;
  return v;
}

int TreeBall::index(const Address& a) const {
  auto v = find(a);
  if (!v) fail(Errc::vertex_not_found, "vertex outside the ball");
  return *v;
}

int address_distance(const Address& u, const Address& v) {
  std::size_t l = 0;
  while (l < u.size() && l < v.size() && u[l] == v[l]) ++l;
  return static_cast<int>(u.size() + v.size() - 2 * l);
}

int tree_distance(const TreeBall& ball, const Address& u, const Address& v) {
  ball.index(u);
  ball.index(v);
  return address_distance(u, v);
}

std::optional<int> BoundaryRay::choice(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  if (zero_tail) return 0;
  return std::nullopt;
}

namespace {

// Index of the first disagreement, or nullopt when the rays coincide.
// Throws Unresolvable when the known parts agree but a tail is unknown.
std::optional<std::size_t> divergence(const BoundaryRay& x, const BoundaryRay& y) {
  std::size_t len = std::max(x.prefix.size(), y.prefix.size());
  for (std::size_t i = 0;; ++i) {
    auto cx = x.choice(i), cy = y.choice(i);
    if (!cx || !cy) fail(Errc::unresolvable, "rays agree on every known branch");
    if (*cx != *cy) return i;
    if (i >= len) return std::nullopt;  // both tails are zero from here on
  }
}

std::size_t common_prefix(const Address& s, const BoundaryRay& x) {
  std::size_t l = 0;
  while (l < s.size()) {
    auto c = x.choice(l);
    if (!c || *c != s[l]) break;
    ++l;
  }
  return l;
}

}  // namespace

Rational abs_metric(const BoundaryRay& x, const BoundaryRay& y, const TreeBall& ball, const Address& s) {
  ball.index(s);
  auto m = divergence(x, y);
  if (!m) return 0;
  if (static_cast<int>(*m) > ball.radius()) fail(Errc::unresolvable, "rays separate outside the ball");
  // distance from s to the geodesic joining x and y, which turns at depth m
  long mm = static_cast<long>(*m), depth = static_cast<long>(s.size());
  long lx = static_cast<long>(common_prefix(s, x)), ly = static_cast<long>(common_prefix(s, y));
  long gromov;
  if (lx > mm)
    gromov = depth - lx;
  else if (ly > mm)
    gromov = depth - ly;
  else {
    long l = std::min(lx, ly);
    gromov = l == mm ? depth - mm : (depth - l) + (mm - l);
  }
  return rational_pow(Rational(ball.n()), -gromov);
}

namespace {

Rational sphere_cylinder(int n, long d) {
  if (d == 0) return 1;
  return Rational(1, n + 1) * rational_pow(Rational(n), -(d - 1));
}

}  // namespace

Rational cylinder_measure(const TreeBall& ball, const Address& c, const Address& s) {
  ball.index(c);
  ball.index(s);
  if (c.empty()) return 1;
  bool s_below = s.size() >= c.size() && std::equal(c.begin(), c.end(), s.begin());
  if (!s_below) return sphere_cylinder(ball.n(), address_distance(s, c));
  Address up(c.begin(), c.end() - 1);
  return 1 - sphere_cylinder(ball.n(), address_distance(s, up));
}

Address word_to_address(const FreeWord& w, int rank) {
  Address a(w.length());
  for (std::size_t i = 0; i < w.length(); ++i) {
    int code = letter_code(w[i]);
    if (i == 0) {
      a[i] = code;
    } else {
      int back = letter_code(-w[i - 1]);
      a[i] = code < back ? code : code - 1;
    }
  }
  (void)rank;
  return a;
}

FreeWord address_to_word(const Address& a, int rank) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int code = a[i];
    if (i > 0) {
      int back = letter_code(-letters.back());
      if (code >= back) ++code;
    }
    if (code < 0 || code >= 2 * rank) fail(Errc::vertex_not_found, "address outside T_{2n-1}");
    letters.push_back(code_letter(code));
  }
  return free_reduce(letters, rank);
}

TreeAutomorphism::TreeAutomorphism(const TreeBall& domain, std::vector<Address> images)
    : domain_(domain), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.vertex_count())
    fail(Errc::constraint_violation, "automorphism table has the wrong size");
  std::set<Address> seen;
  for (int v = 0; v < domain_.vertex_count(); ++v) {
    if (!domain_.valid_address(images_[v])) fail(Errc::constraint_violation, "image is not a vertex of T_n");
    if (!seen.insert(images_[v]).second) fail(Errc::constraint_violation, "automorphism table is not injective");
    if (v != 0 && address_distance(images_[v], images_[domain_.parent(v)]) != 1)
      fail(Errc::constraint_violation, "automorphism table breaks adjacency");
  }
}

TreeAutomorphism TreeAutomorphism::from_free_word(const FreeWord& g, int rank, int radius) {
  TreeBall ball(2 * rank - 1, radius);
  std::vector<Address> images(ball.vertex_count());
  for (int v = 0; v < ball.vertex_count(); ++v)
    images[v] = word_to_address(g * address_to_word(ball.address(v), rank), rank);
  return TreeAutomorphism(ball, std::move(images));
}

TreeAutomorphism TreeAutomorphism::from_matrix(const RatMat2& g, long p, int radius) {
  if (g.det() == 0) fail(Errc::singular_lattice, "matrix is singular");
  TreeBall ball(static_cast<int>(p), radius);
  std::vector<Address> images(ball.vertex_count());
  for (int v = 0; v < ball.vertex_count(); ++v)
    images[v] = address_of_lattice(g * lattice_of_address(ball.address(v), p), p);
  return TreeAutomorphism(ball, std::move(images));
}

TreeAutomorphism TreeAutomorphism::rotation(int n, int radius, const std::vector<int>& perm) {
  TreeBall ball(n, radius);
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == n + 1;
  for (int i = 0; ok && i <= n; ++i) ok = sorted[i] == i;
  if (!ok) fail(Errc::constraint_violation, "rotation needs a permutation of the first-level branches");
  std::vector<Address> images(ball.vertex_count());
  for (int v = 0; v < ball.vertex_count(); ++v) {
    Address a = ball.address(v);
    if (!a.empty()) a[0] = perm[a[0]];
    images[v] = a;
  }
  return TreeAutomorphism(ball, std::move(images));
}

Address TreeAutomorphism::apply(const Address& a) const {
  auto v = domain_.find(a);
  if (!v) fail(Errc::unresolvable, "vertex outside the automorphism's domain");
  return images_[*v];
}

namespace {

struct RayImage {
  std::vector<Address> images;  // g of the j-th ray vertex
  std::optional<std::size_t> turn;
};

RayImage trace_ray(const TreeAutomorphism& g, const BoundaryRay& x) {
  RayImage r;
  Address s;
  for (int j = 0; j <= g.domain().radius(); ++j) {
    if (j > 0) {
      auto c = x.choice(static_cast<std::size_t>(j - 1));
      if (!c) break;
      s.push_back(*c);
    }
    r.images.push_back(g.apply(s));
    std::size_t k = r.images.size();
    if (k >= 2 && !r.turn && r.images[k - 1].size() == r.images[k - 2].size() + 1) r.turn = k - 2;
  }
  if (!r.turn) fail(Errc::unresolvable, "image of the ray has not turned outward inside the domain");
  return r;
}

}  // namespace

Rational automorphism_derivative(const TreeAutomorphism& g, const BoundaryRay& x) {
  RayImage r = trace_ray(g, x);
  long alpha = static_cast<long>(r.images[*r.turn].size()) - static_cast<long>(*r.turn);
  return rational_pow(Rational(g.domain().n()), alpha);
}

BoundaryRay image_ray(const TreeAutomorphism& g, const BoundaryRay& x) {
  RayImage r = trace_ray(g, x);
  return BoundaryRay{r.images.back(), false};
}

}  // namespace isoact
