#include "isoact/tree_harmonic.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>

#include "isoact/error.hpp"

namespace isoact {

std::vector<Rational> SparseQ::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> y(rows);
  for (int r = 0; r < rows; ++r)
    for (const auto& [c, v] : entries[r]) y[r] += v * x[c];
  return y;
}

Rational SparseQ::at(int r, int c) const {
  for (const auto& [cc, v] : entries[r])
    if (cc == c) return v;
  return 0;
}

SparseQ SparseQ::transpose() const {
  SparseQ t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (const auto& [c, v] : entries[r]) t.entries[c].emplace_back(r, v);
  return t;
}

SparseQ operator*(const SparseQ& a, const SparseQ& b) {
  SparseQ out(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r) {
    std::vector<std::pair<int, Rational>> acc;
    for (const auto& [k, v] : a.entries[r])
      for (const auto& [c, w] : b.entries[k]) acc.emplace_back(c, v * w);
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [c, v] : acc) {
      if (!out.entries[r].empty() && out.entries[r].back().first == c)
        out.entries[r].back().second += v;
      else
        out.entries[r].emplace_back(c, v);
    }
    std::erase_if(out.entries[r], [](const auto& e) { return e.second == 0; });
  }
  return out;
}

HarmonicOperators operator_matrices(const TreeBall& ball) {
  if (ball.radius() < 2) fail(Errc::ball_too_small, "harmonic operators need radius >= 2");
  int nv = ball.vertex_count();
  HarmonicOperators ops{ball.n(), SparseQ(nv, nv), SparseQ(nv, nv), SparseQ(nv, nv)};
  Rational inv_p(1, ball.n());
  for (int v = 0; v < nv; ++v) {
    auto nb = ball.neighbors(v);
    std::vector<std::pair<int, Rational>> row;
    for (int w : nb) row.emplace_back(w, inv_p);
    row.emplace_back(v, -1);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    ops.laplacian.entries[v] = std::move(row);
    if (v != 0) ops.gradient.entries[v] = {{ball.parent(v), -1}, {v, 1}};
    // edges leaving v: towards the parent (reversed orientation) and towards each child
    std::vector<std::pair<int, Rational>> div;
    if (v != 0) div.emplace_back(v, -1);
    for (int c = 0; c < ball.child_count(v); ++c) div.emplace_back(ball.first_child(v) + c, 1);
    ops.divergence.entries[v] = std::move(div);
  }
  return ops;
}

VertexFunction laplacian(const TreeBall& ball, const VertexFunction& f) {
  VertexFunction out(ball.vertex_count());
  Rational inv_p(1, ball.n());
  for (int v = 0; v < ball.vertex_count(); ++v) {
    Rational s = 0;
    for (int w : ball.neighbors(v)) s += f[w];
    out[v] = inv_p * s - f[v];
  }
  return out;
}

EdgeFunction gradient(const TreeBall& ball, const VertexFunction& f) {
  EdgeFunction h(ball.vertex_count());
  for (int e = 1; e < ball.vertex_count(); ++e) h[e] = f[e] - f[ball.parent(e)];
  return h;
}

VertexFunction divergence(const TreeBall& ball, const EdgeFunction& h) {
  VertexFunction out(ball.vertex_count());
  for (int v = 0; v < ball.vertex_count(); ++v) {
    Rational s = v == 0 ? Rational(0) : Rational(-h[v]);
    for (int c = 0; c < ball.child_count(v); ++c) s += h[ball.first_child(v) + c];
    out[v] = s;
  }
  return out;
}

Rational vertex_pairing(const VertexFunction& f, const VertexFunction& g) {
  Rational s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

Rational edge_pairing(const EdgeFunction& f, const EdgeFunction& g) {
  Rational s = 0;
  for (std::size_t i = 1; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

namespace {

Rational row_residual(const SparseQ& a, const SparseQ& b, int r, const Rational& scale_b, const Rational& diag) {
  // max_c |a[r][c] - scale_b * b[r][c] - diag * [r == c]|
  std::vector<std::pair<int, Rational>> acc;
  for (const auto& [c, v] : a.entries[r]) acc.emplace_back(c, v);
  for (const auto& [c, v] : b.entries[r]) acc.emplace_back(c, -scale_b * v);
  acc.emplace_back(r, -diag);
  std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Rational worst = 0, cur = 0;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    cur += acc[i].second;
    if (i + 1 == acc.size() || acc[i + 1].first != acc[i].first) {
      worst = std::max(worst, Rational(abs(cur)));
      cur = 0;
    }
  }
  return worst;
}

}  // namespace

IdentityReport check_identities(const TreeBall& ball, std::mt19937_64& rng, int random_pairs) {
  HarmonicOperators ops = operator_matrices(ball);
  SparseQ comp = ops.divergence * ops.gradient;
  SparseQ grad_t = ops.gradient.transpose();
  Rational p(ops.p);
  IdentityReport rep;
  for (int v = 0; v < ball.vertex_count(); ++v) {
    if (!ball.is_interior(v)) continue;
    rep.composition_residual = std::max(rep.composition_residual, row_residual(comp, ops.laplacian, v, p, 0));
    rep.corrected_composition_residual =
        std::max(rep.corrected_composition_residual, row_residual(comp, ops.laplacian, v, p, -1));
    rep.adjoint_residual = std::max(rep.adjoint_residual, row_residual(ops.divergence, grad_t, v, 1, 0));
    rep.corrected_adjoint_residual =
        std::max(rep.corrected_adjoint_residual, row_residual(ops.divergence, grad_t, v, -1, 0));
  }
  std::uniform_int_distribution<int> val(-5, 5);
  for (int t = 0; t < random_pairs; ++t) {
    VertexFunction f(ball.vertex_count());
    EdgeFunction h(ball.vertex_count());
    for (int v = 0; v < ball.vertex_count(); ++v) {
      if (ball.is_interior(v)) f[v] = Rational(val(rng), 1 + std::abs(val(rng)));
      if (v != 0) h[v] = val(rng);
    }
    Rational lhs = edge_pairing(gradient(ball, f), h), rhs = vertex_pairing(f, divergence(ball, h));
    rep.pairing_residual = std::max(rep.pairing_residual, Rational(abs(lhs - rhs)));
    rep.corrected_pairing_residual = std::max(rep.corrected_pairing_residual, Rational(abs(lhs + rhs)));
  }
  return rep;
}

std::vector<int> sphere_vertices(const TreeBall& ball, int depth) {
  std::vector<int> out;
  for (int v = 0; v < ball.vertex_count(); ++v)
    if (ball.depth(v) == depth) out.push_back(v);
  return out;
}

EdgeFunction poisson_transform(const TreeBall& ball, const CylinderFunction& f, const Rational& c) {
  int k = f.depth, n = ball.n();
  if (k < 0 || ball.radius() < k + 2) fail(Errc::ball_too_small, "Poisson transform needs radius >= depth + 2");
  auto sphere = sphere_vertices(ball, k);
  if (f.values.size() != sphere.size()) fail(Errc::not_cylinder_measurable, "one value per depth-k cylinder expected");
  Rational mean = 0;
  for (const auto& x : f.values) mean += x;
  if (mean != 0) fail(Errc::not_zero_mean, "function must integrate to zero");

  int nv = ball.vertex_count();
  // value on the depth-k cylinder containing each deep vertex
  std::vector<int> slot(nv, -1);
  for (std::size_t i = 0; i < sphere.size(); ++i) slot[sphere[i]] = static_cast<int>(i);
  for (int v = 0; v < nv; ++v)
    if (ball.depth(v) > k) slot[v] = slot[ball.parent(v)];

  // out[w]: integral of f over ends beyond w seen from parent(w), under the measure based at parent(w)
  // in[v]:  integral of f over ends beyond parent(v) seen from v, under the measure based at v
  std::vector<Rational> out(nv), in(nv);
  Rational inv_n(1, n), inv_n1(1, n + 1);
  for (int w = nv - 1; w >= 1; --w) {
    if (ball.depth(w) >= k) {
      out[w] = f.values[slot[w]] * inv_n1;
    } else {
      Rational s = 0;
      for (int j = 0; j < ball.child_count(w); ++j) s += out[ball.first_child(w) + j];
      out[w] = inv_n * s;
    }
  }
  for (int v = 1; v < nv; ++v) {
    int x = ball.parent(v);
    Rational s = x == 0 ? Rational(0) : in[x];
    for (int j = 0; j < ball.child_count(x); ++j) {
      int y = ball.first_child(x) + j;
      if (y != v) s += out[y];
    }
    in[v] = inv_n * s;
  }
  EdgeFunction pf(nv);
  for (int w = 1; w < nv; ++w) {
    int u = ball.parent(w);
    // integral of f for the measure based at u
    Rational total = u == 0 ? Rational(0) : in[u];
    for (int j = 0; j < ball.child_count(u); ++j) total += out[ball.first_child(u) + j];
    // ends on u's side minus ends on w's side (each under its own basepoint)
    pf[w] = c * (total - (n + 1) * out[w]);
  }
  return pf;
}

namespace {

template <class T, class Conv>
std::vector<T> solve_tree_dirichlet(const TreeBall& ball, const std::vector<T>& rhs, int interior, Conv conv) {
  std::vector<T> d(interior, conv(-(ball.n() + 1))), b = rhs;
  for (int v = interior - 1; v >= 1; --v) {
    int p = ball.parent(v);
    d[p] -= conv(1) / d[v];
    b[p] -= b[v] / d[v];
  }
  std::vector<T> u(interior);
  u[0] = b[0] / d[0];
  for (int v = 1; v < interior; ++v) u[v] = (b[v] - u[ball.parent(v)]) / d[v];
  return u;
}

}  // namespace

H1Result h1_representative(const TreeBall& ball, const EdgeFunction& f, SolveMode mode, int exact_limit) {
  if (ball.radius() < 2) fail(Errc::ball_too_small, "H1 projection needs radius >= 2");
  int nv = ball.vertex_count();
  if (static_cast<int>(f.size()) != nv) fail(Errc::precondition_violation, "edge function has the wrong size");
  int interior = 0;
  while (interior < nv && ball.is_interior(interior)) ++interior;

  VertexFunction div_f = divergence(ball, f);
  bool exact = mode == SolveMode::exact || (mode == SolveMode::automatic && interior <= exact_limit);
  H1Result res;
  res.used_exact = exact;
  res.representative.assign(nv, 0.0);
  if (exact) {
    std::vector<Rational> rhs(div_f.begin(), div_f.begin() + interior);
    auto u = solve_tree_dirichlet<Rational>(ball, rhs, interior, [](int x) { return Rational(x); });
    EdgeFunction r = f;
    for (int e = 1; e < nv; ++e) {
      Rational ue = e < interior ? u[e] : Rational(0);
      r[e] -= ue - u[ball.parent(e)];
    }
    VertexFunction dr = divergence(ball, r);
    Rational worst = 0, norm2 = 0;
    for (int v = 0; v < interior; ++v) worst = std::max(worst, Rational(abs(dr[v])));
    for (int e = 1; e < nv; ++e) {
      res.representative[e] = r[e].get_d();
      norm2 += r[e] * r[e];
    }
    res.divergence_residual = worst.get_d();
    res.norm = std::sqrt(norm2.get_d());
    res.exact = std::move(r);
    return res;
  }
  // -div grad restricted to the interior is positive definite
  std::vector<Eigen::Triplet<double>> trips;
  for (int v = 0; v < interior; ++v) {
    trips.emplace_back(v, v, ball.n() + 1.0);
    for (int w : ball.neighbors(v))
      if (w < interior) trips.emplace_back(v, w, -1.0);
  }
  Eigen::SparseMatrix<double> a(interior, interior);
  a.setFromTriplets(trips.begin(), trips.end());
  Eigen::VectorXd rhs(interior);
  for (int v = 0; v < interior; ++v) rhs(v) = -div_f[v].get_d();
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(1e-12);
  cg.setMaxIterations(10 * interior + 100);
  cg.compute(a);
  Eigen::VectorXd u = cg.solve(rhs);
  std::vector<double> r(nv, 0.0);
  for (int e = 1; e < nv; ++e) {
    double ue = e < interior ? u(e) : 0.0;
    r[e] = f[e].get_d() - (ue - u(ball.parent(e)));
  }
  double worst = 0, norm2 = 0;
  for (int v = 0; v < interior; ++v) {
    double s = v == 0 ? 0.0 : -r[v];
    for (int j = 0; j < ball.child_count(v); ++j) s += r[ball.first_child(v) + j];
    worst = std::max(worst, std::abs(s));
  }
  for (int e = 1; e < nv; ++e) norm2 += r[e] * r[e];
  res.representative = std::move(r);
  res.divergence_residual = worst;
  res.norm = std::sqrt(norm2);
  return res;
}

namespace {

double kernel_value(const Kernel& k, int n, int m) {
  switch (k.kind) {
    case Kernel::inv_delta: return -std::pow(static_cast<double>(n), m);
    case Kernel::neg_log_delta: return m * std::log(static_cast<double>(n));
    case Kernel::neg_log_padic: return m * std::log(static_cast<double>(k.p));
  }
  return 0;
}

// Cylinder mass at the given depth for the space the kernel lives on.
double cell_mass(const Kernel& k, int n, int depth) {
  if (k.kind == Kernel::neg_log_padic) return std::pow(static_cast<double>(k.p), -depth);
  return 1.0 / ((n + 1) * std::pow(static_cast<double>(n), depth - 1));
}

}  // namespace

double cylinder_self_energy(const Kernel& k, int n, int depth, int resolution) {
  if (depth < 1 || resolution < depth) fail(Errc::ball_too_small, "need 1 <= depth <= resolution");
  double q = k.kind == Kernel::neg_log_padic ? static_cast<double>(k.p) : static_cast<double>(n);
  // mass of pairs in c x c sharing the depth-j subcylinder is a * q^{-j}
  double a = cell_mass(k, n, depth) * std::pow(q, depth) * cell_mass(k, n, depth);
  int span = resolution - depth;
  if (k.kind == Kernel::inv_delta) return -a * (1.0 + span * (1.0 - 1.0 / q));
  double lg = std::log(k.kind == Kernel::neg_log_padic ? static_cast<double>(k.p) : static_cast<double>(n));
  // summation by parts: k P(>=k) + sum_{j=k+1}^{R} P(>=j)
  double tail = std::pow(q, -(depth + 1)) * (1.0 - std::pow(q, -span)) / (1.0 - 1.0 / q);
  return lg * a * (depth * std::pow(q, -depth) + tail);
}

double cylinder_cross_energy(const Kernel& k, int n, int depth, int separation) {
  double m = cell_mass(k, n, depth);
  return m * m * kernel_value(k, n, separation);
}

GramResult kernel_gram(int depth, const TreeBall& ball, const Kernel& kernel) {
  if (depth < 1 || ball.radius() < depth + 1) fail(Errc::ball_too_small, "kernel Gram needs radius >= depth + 1");
  int n = ball.n(), res = ball.radius();
  // separation depth between cylinder i and j
  std::vector<std::vector<int>> sep;
  if (kernel.kind == Kernel::neg_log_padic) {
    if (!is_prime(kernel.p)) fail(Errc::constraint_violation, "p must be prime");
    long cells = 1;
    for (int i = 0; i < depth; ++i) cells *= kernel.p;
    sep.assign(cells, std::vector<int>(cells, depth));
    for (long a = 0; a < cells; ++a)
      for (long b = 0; b < cells; ++b)
        if (a != b) sep[a][b] = static_cast<int>(padic_valuation(Integer(a - b), kernel.p));
  } else {
    auto sphere = sphere_vertices(ball, depth);
    std::vector<Address> addr;
    for (int v : sphere) addr.push_back(ball.address(v));
    sep.assign(sphere.size(), std::vector<int>(sphere.size(), depth));
    for (std::size_t a = 0; a < sphere.size(); ++a)
      for (std::size_t b = 0; b < sphere.size(); ++b)
        if (a != b) sep[a][b] = depth - address_distance(addr[a], addr[b]) / 2;
  }
  int cells = static_cast<int>(sep.size());
  Eigen::MatrixXd energy(cells, cells);
  double self = cylinder_self_energy(kernel, n, depth, res);
  for (int a = 0; a < cells; ++a)
    for (int b = 0; b < cells; ++b) energy(a, b) = a == b ? self : cylinder_cross_energy(kernel, n, depth, sep[a][b]);
  GramResult out;
  out.cylinders = cells;
  out.gram.resize(cells - 1, cells - 1);
  for (int i = 1; i < cells; ++i)
    for (int j = 1; j < cells; ++j)
      out.gram(i - 1, j - 1) = energy(i, j) - energy(i, 0) - energy(0, j) + energy(0, 0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.gram, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  return out;
}

}  // namespace isoact
