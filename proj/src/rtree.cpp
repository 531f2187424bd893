#include "isoact/rtree.hpp"

#include <atomic>
#include <deque>

#include "isoact/error.hpp"

namespace isoact {

std::uint64_t next_space_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}

MetricTree::MetricTree(int vertex_count, const std::vector<MetricEdge>& edges)
    : id_(next_space_id()),
      parent_(vertex_count, -1),
      depth_(vertex_count, -1),
      length_(vertex_count),
      height_(vertex_count),
      adj_(vertex_count) {
  if (vertex_count < 1) fail(Errc::invalid_tree, "tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != vertex_count - 1) fail(Errc::invalid_tree, "a tree has |V| - 1 edges");
  std::vector<std::vector<std::pair<int, Rational>>> nb(vertex_count);
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count || e.u == e.v)
      fail(Errc::invalid_tree, "bad edge endpoints");
    if (e.length <= 0) fail(Errc::invalid_tree, "edge lengths must be positive");
    Rational len = e.length;
    len.canonicalize();
    nb[e.u].emplace_back(e.v, len);
    nb[e.v].emplace_back(e.u, len);
  }
  std::deque<int> q{0};
  depth_[0] = 0;
  int seen = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (const auto& [w, len] : nb[v]) {
      adj_[v].push_back(w);
      if (w == parent_[v]) continue;
      if (depth_[w] >= 0) fail(Errc::invalid_tree, "graph has a cycle");
      parent_[w] = v;
      depth_[w] = depth_[v] + 1;
      length_[w] = len;
      height_[w] = height_[v] + len;
      ++seen;
      q.push_back(w);
    }
  }
  if (seen != vertex_count) fail(Errc::invalid_tree, "graph is disconnected");
}

int MetricTree::lca(int u, int v) const {
  while (depth_[u] > depth_[v]) u = parent_[u];
  while (depth_[v] > depth_[u]) v = parent_[v];
  while (u != v) u = parent_[u], v = parent_[v];
  return u;
}

Rational MetricTree::distance(int u, int v) const { return height_[u] + height_[v] - 2 * height_[lca(u, v)]; }

std::optional<int> MetricTree::edge_between(int u, int v) const {
  if (parent_[v] == u) return v;
  if (parent_[u] == v) return u;
  return std::nullopt;
}

std::vector<int> MetricTree::path(int u, int v) const {
  int a = lca(u, v);
  std::vector<int> up, down;
  for (int x = u; x != a; x = parent_[x]) up.push_back(x);
  up.push_back(a);
  for (int x = v; x != a; x = parent_[x]) down.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

EdgeVector edge_path(const MetricTree& t, int x, int y) {
  EdgeVector e;
  e.space = t.id();
  int a = t.lca(x, y);
  for (int v = x; v != a; v = t.parent(v)) e.add(v, -1);
  for (int v = y; v != a; v = t.parent(v)) e.add(v, 1);
  return e;
}

Rational edge_pairing(const MetricTree& t, const EdgeVector& a, const EdgeVector& b) {
  if (a.space != t.id() || b.space != t.id()) fail(Errc::tree_mismatch, "edge vectors live on different trees");
  Rational s = 0;
  for (const auto& [e, x] : a.w)
    if (auto it = b.w.find(e); it != b.w.end()) s += x * it->second * t.edge_length(e);
  return s;
}

MetricIsometry::MetricIsometry(const MetricTree& t, std::vector<int> images) : t_(&t), images_(std::move(images)) {
  int n = t.vertex_count();
  if (static_cast<int>(images_.size()) != n) fail(Errc::invalid_tree, "one image per vertex expected");
  std::vector<char> hit(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || hit[v]) fail(Errc::invalid_tree, "vertex map is not a bijection");
    hit[v] = 1;
  }
  for (int e = 1; e < n; ++e) {
    auto img = t.edge_between(images_[t.parent(e)], images_[e]);
    if (!img || t.edge_length(*img) != t.edge_length(e)) fail(Errc::invalid_tree, "map does not preserve edges");
  }
}

MetricIsometry MetricIsometry::operator*(const MetricIsometry& o) const {
  if (t_ != o.t_) fail(Errc::tree_mismatch, "isometries of different trees");
  std::vector<int> c(images_.size());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = images_[o.images_[v]];
  return MetricIsometry(*t_, std::move(c));
}

EdgeVector MetricIsometry::apply(const EdgeVector& v) const {
  if (v.space != t_->id()) fail(Errc::tree_mismatch, "edge vector lives on another tree");
  EdgeVector out;
  out.space = v.space;
  for (const auto& [e, x] : v.w) {
    int a = images_[t_->parent(e)], b = images_[e];
    if (t_->parent(b) == a)
      out.add(b, x);
    else
      out.add(a, -x);
  }
  return out;
}

TranslationLength translation_length(const MetricIsometry& g, int probe) {
  const MetricTree& t = g.tree();
  Rational d1 = t.distance(probe, g(probe)), d2 = t.distance(probe, g(g(probe)));
  TranslationLength out;
  out.length = d2 > d1 ? Rational(d2 - d1) : Rational(0);
  if (out.length > 0) return out;  // cannot happen on a finite tree
  // Elliptic: the midpoint of [x, gx] is fixed.
  auto path = t.path(probe, g(probe));
  Rational half = d1 / 2, run = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (run == half) {
      out.fixed_point = TreePoint{path[i], std::nullopt};
      return out;
    }
    Rational step = t.edge_length(*t.edge_between(path[i], path[i + 1]));
    if (run + step > half) {
      out.fixed_point = TreePoint{path[i], *t.edge_between(path[i], path[i + 1])};
      return out;
    }
    run += step;
  }
  fail(Errc::solve_failure, "no fixed point found");
}

EdgeVector canonical_affine_apply(const MetricIsometry& g, const EdgeVector& v, const Rational& s, int x0) {
  return g.apply(v) + edge_path(g.tree(), x0, g(x0)) * s;
}

FreeGroupTree::FreeGroupTree(int rank, std::vector<Rational> lengths, int window)
    : id_(next_space_id()), rank_(rank), window_(window), lengths_(std::move(lengths)) {
  if (rank < 1) fail(Errc::bad_generator_index, "rank must be positive");
  if (static_cast<int>(lengths_.size()) != rank) fail(Errc::invalid_tree, "one length per generator expected");
  for (auto& l : lengths_)
    if (l.canonicalize(), l < 0) fail(Errc::invalid_tree, "edge lengths must be nonnegative");
  if (window < 0) fail(Errc::window_too_small, "negative window");
}

Rational FreeGroupTree::word_length(const FreeWord& w) const {
  Rational s = 0;
  for (int l : w.letters()) s += letter_length(l);
  return s;
}

Rational FreeGroupTree::distance(const FreeWord& x, const FreeWord& y) const {
  require_in_window(x);
  require_in_window(y);
  return word_length(x.inverse() * y);
}

void FreeGroupTree::require_in_window(const FreeWord& w) const {
  if (static_cast<int>(w.length()) > window_)
    fail(Errc::window_too_small, "word " + w.str() + " lies outside the radius-" + std::to_string(window_) + " window");
  for (int l : w.letters())
    if (std::abs(l) > rank_) fail(Errc::bad_generator_index, "letter outside the rank");
}

static std::size_t common_prefix(const FreeWord& x, const FreeWord& y) {
  std::size_t i = 0;
  while (i < x.length() && i < y.length() && x[i] == y[i]) ++i;
  return i;
}

FreeEdgeVector edge_path(const FreeGroupTree& t, const FreeWord& x, const FreeWord& y) {
  t.require_in_window(x);
  t.require_in_window(y);
  FreeEdgeVector e;
  e.space = t.id();
  std::size_t p = common_prefix(x, y);
  for (std::size_t i = p + 1; i <= x.length(); ++i) e.add(x.prefix(i), -1);
  for (std::size_t i = p + 1; i <= y.length(); ++i) e.add(y.prefix(i), 1);
  return e;
}

Rational edge_pairing(const FreeGroupTree& t, const FreeEdgeVector& a, const FreeEdgeVector& b) {
  if (a.space != t.id() || b.space != t.id()) fail(Errc::tree_mismatch, "edge vectors live on different trees");
  Rational s = 0;
  for (const auto& [k, x] : a.w)
    if (auto it = b.w.find(k); it != b.w.end()) s += x * it->second * t.letter_length(k.back());
  return s;
}

FreeEdgeVector translate(const FreeGroupTree& t, const FreeWord& g, const FreeEdgeVector& v) {
  if (v.space != t.id()) fail(Errc::tree_mismatch, "edge vector lives on another tree");
  FreeEdgeVector out;
  out.space = v.space;
  for (const auto& [k, x] : v.w) {
    FreeWord a = g * k.drop_last(), b = g * k;
    t.require_in_window(a);
    t.require_in_window(b);
    if (b.length() > a.length())
      out.add(b, x);
    else
      out.add(a, -x);
  }
  return out;
}

TranslationLength translation_length(const FreeGroupTree& t, const FreeWord& g, const FreeWord& probe) {
  FreeWord gx = g * probe, ggx = g * gx;
  Rational d1 = t.distance(probe, gx), d2 = t.distance(probe, ggx);
  TranslationLength out;
  out.length = d2 > d1 ? Rational(d2 - d1) : Rational(0);
  if (out.length == 0) {
    // the action is free, so only the identity is elliptic
    if (g.empty()) out.fixed_point = TreePoint{0, std::nullopt};
    return out;
  }
  // projection of the probe onto the axis: distance (d1 - l)/2 along [x, gx]
  Rational target = (d1 - out.length) / 2, run = 0;
  std::size_t p = common_prefix(probe, gx);
  std::vector<FreeWord> path;
  for (std::size_t i = probe.length(); i > p; --i) path.push_back(probe.prefix(i));
  path.push_back(probe.prefix(p));
  for (std::size_t i = p + 1; i <= gx.length(); ++i) path.push_back(gx.prefix(i));
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (run == target) {
      out.axis_point = path[i];
      break;
    }
    if (i + 1 < path.size()) {
      const FreeWord& far = path[i].length() > path[i + 1].length() ? path[i] : path[i + 1];
      run += t.letter_length(far.back());
    }
  }
  if (!out.axis_point) fail(Errc::solve_failure, "axis projection is not a vertex");
  return out;
}

FreeEdgeVector canonical_gamma(const FreeGroupTree& t, const FreeWord& g, const Rational& s, const FreeWord& x0) {
  return edge_path(t, x0, g * x0) * s;
}

FreeEdgeVector canonical_affine_apply(const FreeGroupTree& t, const FreeWord& g, const FreeEdgeVector& v,
                                      const Rational& s, const FreeWord& x0) {
  return translate(t, g, v) + canonical_gamma(t, g, s, x0);
}

int free_cayley_gamma(const FreeWord& g, const FreeWord& h, int alpha, int rank) {
  if (alpha < 1 || alpha >= rank) fail(Errc::bad_level, "contraction level must satisfy 1 <= alpha < rank");
  if (h.length() == 0 || h.length() > g.length() || !g.has_prefix(h)) return 0;
  int last = h.back();
  return std::abs(last) <= alpha ? (last > 0 ? 1 : -1) : 0;
}

}  // namespace isoact
