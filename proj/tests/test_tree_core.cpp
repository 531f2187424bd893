#include <deque>
#include <random>

#include "check.hpp"
#include "isoact/tree_core.hpp"

using namespace isoact;

namespace {

std::vector<int> bfs(const TreeBall& b, int src) {
  std::vector<int> d(b.vertex_count(), -1);
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : b.neighbors(v))
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push_back(w);
      }
  }
  return d;
}

Address random_address(std::mt19937_64& rng, int n, int len) {
  Address a(len);
  for (int i = 0; i < len; ++i) a[i] = std::uniform_int_distribution<int>(0, i == 0 ? n : n - 1)(rng);
  return a;
}

}  // namespace

TEST_CASE("ball sizes") {
  TreeBall b(2, 6);
  CHECK(b.vertex_count() == 1 + 3 * (1 + 2 + 4 + 8 + 16 + 32));
  CHECK(b.edge_count() == b.vertex_count() - 1);
  CHECK(TreeBall(3, 2).vertex_count() == 1 + 4 + 12);
  CHECK(TreeBall(1, 4).vertex_count() == 9);
}

TEST_CASE("tree distance agrees with breadth-first search") {
  for (auto [n, r] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{5, 2}}) {
    TreeBall b(n, r);
    for (int u = 0; u < b.vertex_count(); ++u) {
      auto d = bfs(b, u);
      for (int v = 0; v < b.vertex_count(); ++v) CHECK(tree_distance(b, b.address(u), b.address(v)) == d[v]);
    }
    for (int v = 0; v < b.vertex_count(); ++v) CHECK(b.index(b.address(v)) == v);
  }
  TreeBall b(2, 2);
  CHECK_ERRC(tree_distance(b, {0, 0, 0}, {}), Errc::vertex_not_found);
  CHECK_ERRC(tree_distance(b, {0, 2}, {}), Errc::vertex_not_found);
}

TEST_CASE("absolute metric") {
  TreeBall b(2, 6);
  BoundaryRay x{{0, 1, 1}}, y{{0, 1, 0, 1}}, z{{1}};
  CHECK(abs_metric(x, x, b) == 0);
  CHECK(abs_metric(x, y, b) == Rational(1, 4));
  CHECK(abs_metric(x, z, b) == 1);
  CHECK(abs_metric(BoundaryRay{{0, 0}}, BoundaryRay{{0}}, b) == 0);  // same ray, zero tails
  CHECK_ERRC(abs_metric(BoundaryRay{{0, 0, 0, 0, 0, 0, 0, 1}}, BoundaryRay{{0}}, b), Errc::unresolvable);
  CHECK_ERRC(abs_metric(BoundaryRay{{0, 1}, false}, BoundaryRay{{0, 1, 1}}, b), Errc::unresolvable);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    BoundaryRay r[3];
    for (auto& q : r) q.prefix = random_address(rng, 2, 5);
    Rational dxy = abs_metric(r[0], r[1], b), dyz = abs_metric(r[1], r[2], b), dxz = abs_metric(r[0], r[2], b);
    CHECK(dxz <= (dxy > dyz ? dxy : dyz));
    CHECK(dxy == abs_metric(r[1], r[0], b));
  }
}

TEST_CASE("visual metric from another basepoint matches Gromov products") {
  TreeBall b(2, 9);
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    BoundaryRay x{random_address(rng, 2, 4)}, y{random_address(rng, 2, 4)};
    Address s = random_address(rng, 2, std::uniform_int_distribution<int>(0, 3)(rng));
    if (x.prefix == y.prefix) continue;
    // (x|y)_s from deep vertices: (d(s,x_k) + d(s,y_k) - d(x_k,y_k)) / 2
    Address xk = x.prefix, yk = y.prefix;
    xk.resize(9, 0);
    yk.resize(9, 0);
    int gromov = (address_distance(s, xk) + address_distance(s, yk) - address_distance(xk, yk)) / 2;
    CHECK(abs_metric(x, y, b, s) == rational_pow(Rational(2), -gromov));
  }
}

TEST_CASE("cylinder measure") {
  TreeBall b(2, 5);
  CHECK(cylinder_measure(b, {}) == 1);
  CHECK(cylinder_measure(b, {2}) == Rational(1, 3));
  CHECK(cylinder_measure(b, {2, 1, 0}) == Rational(1, 12));
  for (int v = 0; v < b.vertex_count(); ++v) {
    if (b.child_count(v) == 0) continue;
    Rational sum = 0;
    for (int c = 0; c < b.child_count(v); ++c) sum += cylinder_measure(b, b.address(b.first_child(v) + c));
    CHECK(sum == cylinder_measure(b, b.address(v)));
  }
}

TEST_CASE("cylinder measure from another basepoint is the sphere-counting limit") {
  TreeBall big(2, 9);
  TreeBall b(2, 4);
  for (Address s : {Address{}, Address{1}, Address{0, 1}, Address{2, 0, 1}})
    for (Address c : {Address{0}, Address{0, 1}, Address{2, 0}, Address{2, 0, 1}, Address{1, 1, 1}}) {
      int radius = 9 - static_cast<int>(s.size());
      long hits = 0, total = 0;
      for (int w = 0; w < big.vertex_count(); ++w) {
        Address a = big.address(w);
        if (address_distance(s, a) != radius) continue;
        ++total;
        if (a.size() >= c.size() && std::equal(c.begin(), c.end(), a.begin())) ++hits;
      }
      CHECK(cylinder_measure(b, c, s) == frac(hits, total));
    }
}

TEST_CASE("lattice distance") {
  RatMat2 l = RatMat2::identity(), d = RatMat2::identity();
  d.m[0][0] = 3;
  CHECK(lattice_distance(l, d, 3) == 1);
  RatMat2 pl = RatMat2::identity();
  pl.m[0][0] = 3;
  pl.m[1][1] = 3;
  CHECK(lattice_distance(l, pl, 3) == 0);
  RatMat2 sing;
  sing.m[0][0] = 1;
  CHECK_ERRC(lattice_distance(l, sing, 3), Errc::singular_lattice);
}

TEST_CASE("lattice classes reproduce tree distances") {
  for (long p : {2L, 3L}) {
    TreeBall b(static_cast<int>(p), 2);
    std::vector<RatMat2> lat;
    for (int v = 0; v < b.vertex_count(); ++v) {
      lat.push_back(lattice_of_address(b.address(v), p));
      CHECK(address_of_lattice(lat.back(), p) == b.address(v));
    }
    for (int u = 0; u < b.vertex_count(); ++u)
      for (int v = 0; v < b.vertex_count(); ++v)
        CHECK(lattice_distance(lat[u], lat[v], p) == address_distance(b.address(u), b.address(v)));
  }
}

TEST_CASE("automorphism derivative") {
  auto id = TreeAutomorphism::from_free_word(FreeWord(), 2, 5);
  CHECK(automorphism_derivative(id, BoundaryRay{{1, 2}}) == 1);
  auto g = TreeAutomorphism::from_free_word(FreeWord::generator(1), 2, 6);
  // a_1 a_1 a_1 ... is addressed by zeros, a_1^{-1} a_1^{-1} ... by 1, 0, 0, ...
  CHECK(address_to_word({0, 0, 0}, 2) == FreeWord::generator(1).power(3));
  CHECK(automorphism_derivative(g, BoundaryRay{{}}) == 3);
  CHECK(automorphism_derivative(g, BoundaryRay{{1}}) == Rational(1, 3));
  auto g3 = TreeAutomorphism::from_free_word(FreeWord::generator(2).power(2), 2, 6);
  CHECK(automorphism_derivative(g3, BoundaryRay{{2}}) == 9);
  CHECK_ERRC(automorphism_derivative(TreeAutomorphism::from_free_word(FreeWord::generator(1).power(5), 2, 4),
                                     BoundaryRay{{1}}),
             Errc::unresolvable);
}

TEST_CASE("derivative chain rule and cylinder ratios") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> let(1, 2), sgn(0, 1), len(0, 3);
  TreeBall b(3, 9);
  for (int t = 0; t < 60; ++t) {
    std::vector<int> w(len(rng));
    for (int& x : w) x = sgn(rng) ? let(rng) : -let(rng);
    FreeWord gw = free_reduce(w, 2);
    auto g = TreeAutomorphism::from_free_word(gw, 2, 8);
    auto ginv = TreeAutomorphism::from_free_word(gw.inverse(), 2, 8);
    BoundaryRay x{random_address(rng, 3, 3)};
    Rational dg = automorphism_derivative(g, x);
    CHECK(dg * automorphism_derivative(ginv, image_ray(g, x)) == 1);
    // deep cylinder around x and its image
    Address c = x.prefix;
    c.resize(5, 0);
    Address gc = g.apply(c);
    // |g| <= 3, so the image has turned outward by depth 5
    CHECK(dg == rational_pow(Rational(3), static_cast<long>(gc.size()) - 5));
    CHECK(dg == cylinder_measure(b, c) / cylinder_measure(b, gc));
  }
}

TEST_CASE("matrix automorphisms of the Bruhat-Tits tree") {
  RatMat2 g = RatMat2::identity();
  g.m[0][0] = 2;
  auto a = TreeAutomorphism::from_matrix(g, 2, 4);
  // diag(2,1) moves the standard lattice one step
  CHECK(a.apply({}).size() == 1);
  RatMat2 sing;
  CHECK_ERRC(TreeAutomorphism::from_matrix(sing, 2, 2), Errc::singular_lattice);
  auto rot = TreeAutomorphism::rotation(2, 3, {1, 2, 0});
  CHECK(rot.apply({0, 1}) == Address{1, 1});
}
