#include "isoact/traintrack.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "isoact/error.hpp"

namespace isoact {

int TrainTrack::vertex_index(const std::string& name) const {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it == vertices.end()) fail(Errc::invalid_encoding, "unknown vertex " + name);
  return static_cast<int>(it - vertices.begin());
}

std::string TrainTrack::slot_key(const Slot& s) const {
  return vertices[s.vertex] + ":" + std::to_string(s.edge) + ":" + (s.plus ? "+" : "-");
}

Slot TrainTrack::parse_slot(const std::string& key) const {
  auto c2 = key.rfind(':');
  auto c1 = c2 == std::string::npos || c2 == 0 ? std::string::npos : key.rfind(':', c2 - 1);
  if (c1 == std::string::npos) fail(Errc::invalid_encoding, "slot key must look like V:edge:sign, got " + key);
  std::string sign = key.substr(c2 + 1), edge = key.substr(c1 + 1, c2 - c1 - 1);
  if (sign != "+" && sign != "-") fail(Errc::invalid_encoding, "slot sign must be + or -: " + key);
  int e;
  try {
    std::size_t used;
    e = std::stoi(edge, &used);
    if (used != edge.size()) throw std::invalid_argument(edge);
  } catch (const std::exception&) {
    fail(Errc::invalid_encoding, "bad edge index in slot " + key);
  }
  if (e < 0 || e >= static_cast<int>(edges.size())) fail(Errc::invalid_encoding, "edge index out of range: " + key);
  return Slot{vertex_index(key.substr(0, c1)), e, sign == "+"};
}

Rational TrainTrack::width(const Slot& s) const {
  auto it = widths.find(s);
  return it == widths.end() ? Rational(0) : it->second;
}

Rational TrainTrack::strip_width(int e) const {
  int v = edges[e][0];
  return width({v, e, true}) + width({v, e, false});
}

int TrainTrack::successor(int v, int e) const {
  const auto& c = cyclic[v];
  auto it = std::find(c.begin(), c.end(), e);
  if (it == c.end()) fail(Errc::precondition_violation, "edge not in the cyclic order of its vertex");
  return ++it == c.end() ? c.front() : *it;
}

TrainTrack TrainTrack::from_json(const json& j) {
  TrainTrack tt;
  if (!j.is_object()) fail(Errc::invalid_encoding, "train track must be an object");
  for (const auto& key : j.items())
    if (key.key() != "vertices" && key.key() != "edges" && key.key() != "cyclic" && key.key() != "widths")
      fail(Errc::invalid_encoding, "unknown key " + key.key());
  const json verts = j.value("vertices", json::array()), edges = j.value("edges", json::array());
  for (const auto& v : verts) {
    if (!v.is_string()) fail(Errc::invalid_encoding, "vertex names are strings");
    tt.vertices.push_back(v.get<std::string>());
  }
  std::set<std::string> names(tt.vertices.begin(), tt.vertices.end());
  if (names.size() != tt.vertices.size()) fail(Errc::invalid_encoding, "duplicate vertex name");
  for (const auto& e : edges) {
    if (!e.is_object() || !e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2)
      fail(Errc::invalid_encoding, "edge needs two ends");
    tt.edges.push_back({tt.vertex_index(e["ends"][0].get<std::string>()), tt.vertex_index(e["ends"][1].get<std::string>())});
  }
  tt.cyclic.assign(tt.vertices.size(), {});
  const json cyc = j.value("cyclic", json::object()), wid = j.value("widths", json::object());
  for (const auto& [name, order] : cyc.items()) {
    int v = tt.vertex_index(name);
    for (const auto& e : order) {
      if (!e.is_number_integer()) fail(Errc::invalid_encoding, "cyclic orders list edge indices");
      tt.cyclic[v].push_back(e.get<int>());
    }
  }
  for (const auto& [key, w] : wid.items()) tt.widths[tt.parse_slot(key)] = rational_from_json(w);
  return tt;
}

json TrainTrack::to_json() const {
  json j;
  j["vertices"] = vertices;
  j["edges"] = json::array();
  for (const auto& e : edges) j["edges"].push_back({{"ends", {vertices[e[0]], vertices[e[1]]}}});
  j["cyclic"] = json::object();
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (!cyclic[v].empty()) j["cyclic"][vertices[v]] = cyclic[v];
  j["widths"] = json::object();
  for (const auto& [s, w] : widths) j["widths"][slot_key(s)] = rational_to_json(w);
  return j;
}

std::vector<TrackViolation> traintrack_validate(const TrainTrack& tt) {
  std::vector<TrackViolation> out;
  int nv = static_cast<int>(tt.vertices.size()), ne = static_cast<int>(tt.edges.size());
  std::vector<std::vector<int>> incident(nv);
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = tt.edges[e];
    if (a < 0 || b < 0 || a >= nv || b >= nv) {
      out.push_back({"structure", -1, e, "edge end out of range", {}});
      continue;
    }
    if (a == b) {
      out.push_back({"structure", a, e, "loop edges are not supported", {}});
      continue;
    }
    incident[a].push_back(e);
    incident[b].push_back(e);
  }
  if (static_cast<int>(tt.cyclic.size()) != nv) {
    out.push_back({"structure", -1, -1, "one cyclic order per vertex expected", {}});
    return out;
  }
  bool cyclic_ok = true;
  for (int v = 0; v < nv; ++v) {
    auto c = tt.cyclic[v], inc = incident[v];
    std::sort(c.begin(), c.end());
    std::sort(inc.begin(), inc.end());
    if (c != inc) {
      out.push_back({"structure", v, -1, "cyclic order must list each incident edge once", {}});
      cyclic_ok = false;
    }
  }
  for (const auto& [s, w] : tt.widths) {
    if (s.vertex >= nv || s.edge >= ne || (tt.edges[s.edge][0] != s.vertex && tt.edges[s.edge][1] != s.vertex))
      out.push_back({"structure", s.vertex, s.edge, "width given for a slot that does not exist", {s}});
    else if (w < 0)
      out.push_back({"structure", s.vertex, s.edge, "negative width " + to_string(w), {s}});
  }
  for (int v = 0; v < nv; ++v)
    for (int e : incident[v])
      for (bool plus : {true, false})
        if (!tt.widths.count({v, e, plus}))
          out.push_back({"structure", v, e, "missing width for " + tt.slot_key({v, e, plus}), {{v, e, plus}}});
  if (!cyclic_ok) return out;
  for (int v = 0; v < nv; ++v)
    for (int e : tt.cyclic[v]) {
      int f = tt.successor(v, e);
      Rational lhs = tt.width({v, e, true}), rhs = tt.width({v, f, false});
      if (lhs != rhs)
        out.push_back({"a", v, e, tt.slot_key({v, e, true}) + " = " + to_string(lhs) + " but " + tt.slot_key({v, f, false}) +
                                      " = " + to_string(rhs),
                       {{v, e, true}, {v, f, false}}});
    }
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = tt.edges[e];
    if (a == b || a < 0 || b < 0 || a >= nv || b >= nv) continue;
    Rational wa = tt.width({a, e, true}) + tt.width({a, e, false});
    Rational wb = tt.width({b, e, true}) + tt.width({b, e, false});
    if (wa != wb)
      out.push_back({"b", a, e, "strip width " + to_string(wa) + " at " + tt.vertices[a] + " but " + to_string(wb) +
                                    " at " + tt.vertices[b],
                       {{a, e, true}, {a, e, false}, {b, e, true}, {b, e, false}}});
  }
  return out;
}

namespace {

// tau_e = c + slope * tau_source on the source interval [lo, hi]
struct Glue {
  int src, dst;
  Rational lo, hi, c;
  int slope;
  Rational map(const Rational& t) const { return slope > 0 ? Rational(c + t) : Rational(c - t); }
};

class ParityDsu {
 public:
  explicit ParityDsu(int n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::pair<int, int> find(int x) {
    if (parent_[x] == x) return {x, 0};
    auto [r, p] = find(parent_[x]);
    parent_[x] = r;
    parity_[x] ^= p;
    return {r, parity_[x]};
  }
  // false on a parity conflict
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_, parity_;
};

}  // namespace

TrackMetric::TrackMetric(const TrainTrack& tt, std::size_t max_breakpoints) : tt_(&tt) {
  auto bad = traintrack_validate(tt);
  if (!bad.empty()) fail(Errc::precondition_violation, "invalid train track: " + bad.front().detail);
  int ne = static_cast<int>(tt.edges.size());
  std::vector<Rational> strip(ne);
  for (int e = 0; e < ne; ++e) strip[e] = tt.strip_width(e);
  // tau_v(e) = p + q tau_e, an involution
  auto frame = [&](int v, int e) { return tt.edges[e][0] == v ? std::pair{Rational(0), 1} : std::pair{strip[e], -1}; };

  std::vector<Glue> glues;
  for (int v = 0; v < static_cast<int>(tt.vertices.size()); ++v)
    for (int e : tt.cyclic[v]) {
      int f = tt.successor(v, e);
      auto [pe, qe] = frame(v, e);
      auto [pf, qf] = frame(v, f);
      Rational a = pe + qe * tt.width({v, e, false}), b = pe + qe * strip[e];
      Glue g{e, f, std::min(a, b), std::max(a, b), pf + qf * (strip[e] - pe), -qf * qe};
      glues.push_back(g);
      // inverse: tau_e = slope (tau_f - c)
      Rational ia = g.map(g.lo), ib = g.map(g.hi);
      glues.push_back(Glue{f, e, std::min(ia, ib), std::max(ia, ib), g.slope > 0 ? Rational(-g.c) : g.c, g.slope});
    }

  std::vector<std::set<Rational>> pts(ne);
  for (int e = 0; e < ne; ++e) pts[e] = {Rational(0), strip[e]};
  for (const auto& g : glues) pts[g.src].insert({g.lo, g.hi});

  for (int round = 0;; ++round) {
    if (round > 64) fail(Errc::partition_overflow, "gluing keeps folding");
    // close the cut points under the gluings
    std::vector<std::pair<int, Rational>> work;
    std::size_t total = 0;
    for (int e = 0; e < ne; ++e) {
      total += pts[e].size();
      for (const auto& t : pts[e]) work.emplace_back(e, t);
    }
    while (!work.empty()) {
      auto [e, t] = work.back();
      work.pop_back();
      for (const auto& g : glues)
        if (g.src == e && g.lo <= t && t <= g.hi) {
          Rational img = g.map(t);
          if (pts[g.dst].insert(img).second) {
            if (++total > max_breakpoints) fail(Errc::partition_overflow, "too many cut points");
            work.emplace_back(g.dst, img);
          }
        }
    }
    breaks_.assign(ne, {});
    for (int e = 0; e < ne; ++e) breaks_[e].assign(pts[e].begin(), pts[e].end());
    std::vector<int> atom_base(ne + 1, 0);
    for (int e = 0; e < ne; ++e) atom_base[e + 1] = atom_base[e] + static_cast<int>(breaks_[e].size()) - 1;
    auto index_of = [&](int e, const Rational& t) {
      return static_cast<int>(std::lower_bound(breaks_[e].begin(), breaks_[e].end(), t) - breaks_[e].begin());
    };
    ParityDsu atoms(atom_base[ne]);
    std::optional<std::pair<int, int>> folded;
    for (const auto& g : glues) {
      if (g.lo == g.hi) continue;
      int i0 = index_of(g.src, g.lo), i1 = index_of(g.src, g.hi);
      for (int i = i0; i < i1 && !folded; ++i) {
        Rational x = g.map(breaks_[g.src][i]), y = g.map(breaks_[g.src][i + 1]);
        int j = index_of(g.dst, std::min(x, y));
        if (!atoms.unite(atom_base[g.src] + i, atom_base[g.dst] + j, g.slope < 0 ? 1 : 0)) folded = {g.src, i};
      }
      if (folded) break;
    }
    if (folded) {
      auto [e, i] = *folded;
      pts[e].insert((breaks_[e][i] + breaks_[e][i + 1]) / 2);
      continue;
    }

    std::vector<int> point_base(ne + 1, 0);
    for (int e = 0; e < ne; ++e) point_base[e + 1] = point_base[e] + static_cast<int>(breaks_[e].size());
    ParityDsu points(point_base[ne]);
    for (const auto& g : glues) {
      int i0 = index_of(g.src, g.lo), i1 = index_of(g.src, g.hi);
      for (int i = i0; i <= i1; ++i)
        points.unite(point_base[g.src] + i, point_base[g.dst] + index_of(g.dst, g.map(breaks_[g.src][i])), 0);
    }
    std::map<int, int> node_id;
    break_node_.assign(ne, {});
    for (int e = 0; e < ne; ++e)
      for (std::size_t i = 0; i < breaks_[e].size(); ++i) {
        int r = points.find(point_base[e] + static_cast<int>(i)).first;
        auto [it, fresh] = node_id.try_emplace(r, static_cast<int>(node_id.size()));
        break_node_[e].push_back(it->second);
      }
    node_adj_.assign(node_id.size(), {});
    std::map<int, int> class_id;
    atom_class_.assign(ne, {});
    atom_flip_.assign(ne, {});
    class_ends_.clear();
    class_length_.clear();
    for (int e = 0; e < ne; ++e)
      for (std::size_t i = 0; i + 1 < breaks_[e].size(); ++i) {
        auto [r, par] = atoms.find(atom_base[e] + static_cast<int>(i));
        auto [it, fresh] = class_id.try_emplace(r, static_cast<int>(class_id.size()));
        if (fresh) {
          // the first atom met stands for the class, in its own orientation
          class_ends_.push_back({break_node_[e][i], break_node_[e][i + 1]});
          class_length_.push_back(breaks_[e][i + 1] - breaks_[e][i]);
        }
        atom_class_[e].push_back(it->second);
        atom_flip_[e].push_back(false);
        (void)par;
      }
    // orientation of each atom relative to its class representative
    std::vector<int> rep_parity(class_id.size(), -1);
    for (int e = 0; e < ne; ++e)
      for (std::size_t i = 0; i + 1 < breaks_[e].size(); ++i) {
        int c = atom_class_[e][i];
        int par = atoms.find(atom_base[e] + static_cast<int>(i)).second;
        if (rep_parity[c] < 0) rep_parity[c] = par;
        atom_flip_[e][i] = par != rep_parity[c];
      }
    for (std::size_t c = 0; c < class_ends_.size(); ++c) {
      auto [a, b] = class_ends_[c];
      node_adj_[a].emplace_back(b, class_length_[c]);
      node_adj_[b].emplace_back(a, class_length_[c]);
    }
    piece_classes_ = static_cast<int>(class_ends_.size());
    break;
  }
}

Rational TrackMetric::strip_coordinate(const TrackPoint& p) const {
  const auto& tt = *tt_;
  const auto& s = p.slot;
  if (s.edge < 0 || s.edge >= static_cast<int>(tt.edges.size()) || s.vertex < 0 ||
      (tt.edges[s.edge][0] != s.vertex && tt.edges[s.edge][1] != s.vertex))
    fail(Errc::invalid_coordinate, "slot does not exist");
  Rational len = tt.width(s);
  if (p.offset < 0 || p.offset > len)
    fail(Errc::invalid_coordinate, "offset " + to_string(p.offset) + " outside [0, " + to_string(len) + "]");
  Rational tv = s.plus ? Rational(tt.width({s.vertex, s.edge, false}) + p.offset) : p.offset;
  return tt.edges[s.edge][0] == s.vertex ? tv : Rational(tt.strip_width(s.edge) - tv);
}

TrackMetric::Located TrackMetric::locate(const TrackPoint& p) const {
  Rational t = strip_coordinate(p);
  int e = p.slot.edge;
  const auto& b = breaks_[e];
  auto it = std::lower_bound(b.begin(), b.end(), t);
  Located out;
  std::size_t i = it - b.begin();
  if (it != b.end() && *it == t) {
    out.ends.emplace_back(break_node_[e][i], 0);
    return out;
  }
  --i;
  int c = atom_class_[e][i];
  Rational local = t - b[i];
  out.piece = c;
  out.along = atom_flip_[e][i] ? Rational(class_length_[c] - local) : local;
  out.ends.emplace_back(class_ends_[c][0], out.along);
  out.ends.emplace_back(class_ends_[c][1], class_length_[c] - out.along);
  return out;
}

std::vector<Rational> TrackMetric::dijkstra(int source) const {
  int n = node_count();
  std::vector<std::optional<Rational>> dist(n);
  using Item = std::pair<Rational, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> q;
  dist[source] = 0;
  q.emplace(0, source);
  while (!q.empty()) {
    auto [d, v] = q.top();
    q.pop();
    if (d > *dist[v]) continue;
    for (const auto& [w, len] : node_adj_[v]) {
      Rational nd = d + len;
      if (!dist[w] || nd < *dist[w]) {
        dist[w] = nd;
        q.emplace(nd, w);
      }
    }
  }
  std::vector<Rational> out(n, Rational(-1));
  for (int v = 0; v < n; ++v)
    if (dist[v]) out[v] = *dist[v];
  return out;
}

Rational TrackMetric::distance(const TrackPoint& x, const TrackPoint& y) const {
  Located a = locate(x), b = locate(y);
  std::optional<Rational> best;
  auto offer = [&](const Rational& d) {
    if (!best || d < *best) best = d;
  };
  if (a.piece >= 0 && a.piece == b.piece) offer(abs(a.along - b.along));
  for (const auto& [na, da] : a.ends) {
    auto dist = dijkstra(na);
    for (const auto& [nb, db] : b.ends)
      if (dist[nb] >= 0) offer(dist[nb] + da + db);
  }
  if (!best) fail(Errc::unresolvable, "points lie in different components");
  return *best;
}

}  // namespace isoact

namespace isoact {

TrackGrid::TrackGrid(const TrainTrack& tt, double eps) : eps_(eps) {
  for (const auto& [s, width] : tt.widths) {
    double len = width.get_d();
    int n = static_cast<int>(std::floor(len / eps_));
    base_[s] = static_cast<int>(pos_.size());
    count_[s] = n + 1 + (n * eps_ < len - 1e-12 ? 1 : 0);
    for (int k = 0; k <= n; ++k) pos_.push_back(k * eps_);
    if (count_[s] == n + 2) pos_.push_back(len);
    adj_.resize(pos_.size());
    for (int k = base_[s]; k + 1 < base_[s] + count_[s]; ++k) link(k, k + 1, pos_[k + 1] - pos_[k]);
  }
  // vertex gluing: Delta_+(v, e) at u with Delta_-(v, A+ e) at a_+ - u
  for (int v = 0; v < static_cast<int>(tt.vertices.size()); ++v)
    for (int e : tt.cyclic[v]) {
      Slot p{v, e, true}, m{v, tt.successor(v, e), false};
      double a = tt.width(p).get_d();
      for (int k = 0; k < count_[p]; ++k) attach(base_[p] + k, m, a - pos_[base_[p] + k]);
    }
  // strip: along a horizontal coordinate, Delta_+(va) then Delta_-(va) run
  // leftwards on top, Delta_-(vb) then Delta_+(vb) rightwards below
  for (int e = 0; e < static_cast<int>(tt.edges.size()); ++e) {
    int va = tt.edges[e][0], vb = tt.edges[e][1];
    Slot tp{va, e, true}, tm{va, e, false}, bm{vb, e, false}, bp{vb, e, true};
    double ap = tt.width(tp).get_d(), w = ap + tt.width(tm).get_d(), bmlen = tt.width(bm).get_d();
    auto bottom = [&](int node, double x) {
      if (x <= bmlen) attach(node, bm, x);
      if (x >= bmlen) attach(node, bp, x - bmlen);
    };
    for (int k = 0; k < count_[tp]; ++k) bottom(base_[tp] + k, ap - pos_[base_[tp] + k]);
    for (int k = 0; k < count_[tm]; ++k) bottom(base_[tm] + k, w - pos_[base_[tm] + k]);
  }
}

double TrackGrid::distance(const TrackPoint& x, const TrackPoint& y) const {
  std::vector<double> d(adj_.size(), 1e300);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> q;
  for (auto [node, w] : nearest(x.slot, x.offset.get_d())) {
    d[node] = std::min(d[node], w);
    q.emplace(d[node], node);
  }
  while (!q.empty()) {
    auto [dv, v] = q.top();
    q.pop();
    if (dv > d[v]) continue;
    for (auto [w, len] : adj_[v])
      if (dv + len < d[w]) d[w] = dv + len, q.emplace(d[w], w);
  }
  double best = 1e300;
  for (auto [node, w] : nearest(y.slot, y.offset.get_d())) best = std::min(best, d[node] + w);
  if (x.slot == y.slot) best = std::min(best, std::abs(x.offset.get_d() - y.offset.get_d()));
  return best;
}

void TrackGrid::link(int a, int b, double w) {
  adj_[a].emplace_back(b, w);
  adj_[b].emplace_back(a, w);
}

std::vector<std::pair<int, double>> TrackGrid::nearest(const Slot& s, double o) const {
  int b = base_.at(s), n = count_.at(s);
  std::vector<std::pair<int, double>> out;
  for (int k = 0; k < n; ++k)
    if (std::abs(pos_[b + k] - o) <= eps_ + 1e-12) out.emplace_back(b + k, std::abs(pos_[b + k] - o));
  return out;
}

void TrackGrid::attach(int node, const Slot& s, double o) {
  for (auto [m, w] : nearest(s, o)) link(node, m, w);
}

}  // namespace isoact
