// The verification suites, one per acceptance criterion.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>

#include "isoact/error.hpp"
#include "isoact/fock.hpp"
#include "isoact/immobile.hpp"
#include "isoact/mobius.hpp"
#include "isoact/rtree.hpp"
#include "isoact/sp_tau.hpp"
#include "isoact/suite.hpp"
#include "isoact/traintrack.hpp"
#include "isoact/tree_harmonic.hpp"

#ifndef ISOACT_CORPUS_DIR
#define ISOACT_CORPUS_DIR "data/tracks"
#endif

namespace isoact {

namespace {

std::string numbered(const std::string& prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return prefix + buf;
}

FreeWord random_word(std::mt19937_64& rng, int rank, int max_len, int min_len = 0) {
  int len = std::uniform_int_distribution<int>(min_len, max_len)(rng);
  std::vector<int> l;
  while (static_cast<int>(l.size()) < len) {
    int a = std::uniform_int_distribution<int>(1, rank)(rng) * (rng() % 2 ? 1 : -1);
    if (!l.empty() && l.back() == -a) continue;
    l.push_back(a);
  }
  return FreeWord::reduce(l, rank);
}

MetricTree random_metric_tree(std::mt19937_64& rng, int n) {
  std::vector<MetricEdge> edges;
  for (int v = 1; v < n; ++v) {
    int p = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({v, p, frac(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 4)(rng))});
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& e : edges) e.u = perm[e.u], e.v = perm[e.v];
  return MetricTree(n, edges);
}

json su_json(const SuMatrix& g) { return encode(g); }

// ---- 1: tree operator identities

std::vector<Row> tree_identities(const SuiteContext& c) {
  std::vector<long> ns;
  if (c.params.at("n").is_array())
    ns = c.params.at("n").get<std::vector<long>>();
  else
    ns = {c.integer("n")};
  int radius = static_cast<int>(c.integer("radius"));
  std::vector<Row> rows;
  for (std::size_t k = 0; k < ns.size(); ++k) {
    int n = static_cast<int>(ns[k]);
    TreeBall ball(n, radius);
    std::mt19937_64 rng = c.rng(k);
    IdentityReport r = check_identities(ball, rng, c.trials);
    json in{{"n", n}, {"radius", radius}, {"pairs", c.trials}};
    std::string p = "n" + std::to_string(n) + "/";
    auto add = [&](const std::string& name, const Rational& res, const char* relation) {
      rows.push_back(make_row(p + name, in, json{{"relation", relation}, {"residual_exact", to_string(res)}}, res.get_d(), 0));
    };
    add("printed/composition", r.composition_residual, "div grad = p Laplacian");
    add("printed/adjoint", r.adjoint_residual, "div = grad^T");
    add("printed/pairing", r.pairing_residual, "<grad f, h> = <f, div h>");
    add("corrected/composition", r.corrected_composition_residual, "div grad = p Laplacian - I");
    add("corrected/adjoint", r.corrected_adjoint_residual, "div = -grad^T");
    add("corrected/pairing", r.corrected_pairing_residual, "<grad f, h> = -<f, div h>");
  }
  return rows;
}

// ---- 2: Bergman Gram against the closed form

std::vector<Row> bergman_gram(const SuiteContext& c) {
  int n = static_cast<int>(c.integer("N"));
  double ratio = c.real("ratio");
  return parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        SuMatrix g1 = random_su(rng, ratio), g2 = random_su(rng, ratio);
        auto v1 = bergman_gamma(g1, n), v2 = bergman_gamma(g2, n);
        cplx closed = gamma_gram(g1, g2), trunc = bergman_pairing(v1, v2);
        double self = std::abs(bergman_pairing(v1, v1) - 2 * std::log(std::abs(g1.a())));
        double cross = std::abs(trunc - closed);
        return make_row(numbered("pair/", i), json{{"g1", su_json(g1)}, {"g2", su_json(g2)}, {"N", n}},
                        json{{"closed", {closed.real(), closed.imag()}},
                             {"truncated", {trunc.real(), trunc.imag()}},
                             {"cross_residual", cross},
                             {"self_residual", self}},
                        std::max(cross, self), c.tol);
      },
      [](int i) { return numbered("pair/", i); });
}

// ---- 3: asymptotics along boosts

std::vector<Row> bergman_asymptotic(const SuiteContext& c) {
  int lo = static_cast<int>(c.integer("t_min")), hi = static_cast<int>(c.integer("t_max"));
  std::vector<Row> rows;
  std::vector<double> dev;
  for (int t = lo; t <= hi; ++t) {
    SuMatrix g = SuMatrix::boost(t);
    double delta = std::log(std::abs(g.a()) + std::abs(g.b()));
    double d = std::abs(gamma_gram(g, g).real() - 2 * delta + 2 * std::log(2.0));
    dev.push_back(d);
    rows.push_back(make_row(numbered("t/", t), json{{"t", t}}, json{{"deviation", d}, {"delta", delta}}, d, c.tol));
  }
  int rises = 0;
  for (std::size_t k = 1; k < dev.size(); ++k) rises += dev[k] >= dev[k - 1];
  rows.push_back(make_row("monotone", json{{"t_min", lo}, {"t_max", hi}}, json{{"non_decreasing_steps", rises}}, rises, 0));
  return rows;
}

// ---- 4: affine cocycle law

std::vector<Row> affine_cocycle(const SuiteContext& c) {
  FreeGroupTree t = FreeGroupTree::unit(2, 40);
  std::vector<Row> rows = parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        FreeWord g1 = random_word(rng, 2, 6), g2 = random_word(rng, 2, 6), x0 = random_word(rng, 2, 3);
        Rational s = frac(std::uniform_int_distribution<int>(1, 5)(rng), 2);
        auto gamma = [&](const FreeWord& g) { return canonical_gamma(t, g, s, x0); };
        FreeEdgeVector diff = gamma(g1 * g2) - translate(t, g1, gamma(g2)) - gamma(g1);
        Rational norm = edge_pairing(t, diff, diff);
        return make_row(numbered("tree/", i),
                        json{{"g1", g1.letters()}, {"g2", g2.letters()}, {"x0", x0.letters()}, {"s", to_string(s)}},
                        json{{"residual_exact", to_string(norm)}, {"support", diff.w.size()}}, norm.get_d(), 0);
      },
      [](int i) { return numbered("tree/", i); });
  int n = static_cast<int>(c.integer("N"));
  std::vector<Row> su = parallel_rows(
      static_cast<int>(c.integer("su_pairs")),
      [&](int i) {
        std::mt19937_64 rng = c.rng(100000 + i);
        SuMatrix g1 = random_su(rng, c.real("ratio")), g2 = random_su(rng, c.real("ratio"));
        CocycleCheck r = affine_cocycle_check(g1, g2, n);
        return make_row(numbered("su11/", i), json{{"g1", su_json(g1)}, {"g2", su_json(g2)}, {"N", n}},
                        json{{"literal_order_residual", r.literal_residual}}, r.residual, c.tol);
      },
      [](int i) { return numbered("su11/", i); });
  rows.insert(rows.end(), su.begin(), su.end());
  return rows;
}

// ---- 5: translation length

std::vector<Row> translation_lengths(const SuiteContext& c) {
  FreeGroupTree t = FreeGroupTree::unit(2, 64);
  std::vector<FreeWord> ball = free_ball(2, static_cast<int>(c.integer("window")));
  int max_len = static_cast<int>(c.integer("max_length"));
  return parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        FreeWord g = random_word(rng, 2, max_len, 1);
        Rational ell = translation_length(t, g, FreeWord()).length, best = -1;
        for (const FreeWord& x : ball) {
          Rational d = t.distance(x, g * x);
          if (best < 0 || d < best) best = d;
        }
        Rational res = abs(ell - best);
        for (int k = 2; k <= 5; ++k) res += abs(translation_length(t, g.power(k), FreeWord()).length - k * ell);
        return make_row(numbered("word/", i), json{{"g", g.letters()}},
                        json{{"length", to_string(ell)}, {"window_minimum", to_string(best)}}, res.get_d(), 0);
      },
      [](int i) { return numbered("word/", i); });
}

// ---- 6: length recovery along powers

std::vector<Row> length_recovery(const SuiteContext& c) {
  FreeGroupTree t = FreeGroupTree::unit(2, 120);
  std::vector<FreeWord> ball = free_ball(2, 5);
  Rational s = frac(3, 2);
  int nmax = static_cast<int>(c.integer("n_max"));
  return parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        FreeWord g = random_word(rng, 2, 2, 1), x0 = random_word(rng, 2, 2);
        Rational ell = translation_length(t, g, x0).length, d_axis = -1;
        for (const FreeWord& x : ball)
          if (t.distance(x, g * x) == ell) {
            Rational d = t.distance(x0, x);
            if (d_axis < 0 || d < d_axis) d_axis = d;
          }
        Rational worst = 0;
        int reached = 0;
        for (int n = 2; n <= nmax; ++n) {
          FreeWord gn = g.power(n);
          if (static_cast<int>((gn * x0).length()) > t.window()) break;
          auto v = canonical_gamma(t, gn, s, x0);
          Rational dev = abs(edge_pairing(t, v, v) - n * s * s * ell - 2 * s * s * d_axis);
          if (dev > worst) worst = dev;
          reached = n;
        }
        return make_row(numbered("word/", i), json{{"g", g.letters()}, {"x0", x0.letters()}, {"s", to_string(s)}},
                        json{{"length", to_string(ell)}, {"axis_distance", to_string(d_axis)}, {"n_reached", reached}},
                        worst.get_d(), 0);
      },
      [](int i) { return numbered("word/", i); });
}

// ---- 7: symplectic cocycle

std::vector<Row> sp_tau_suite(const SuiteContext& c) {
  std::vector<Row> rows;
  for (long n : c.params.at("dims").get<std::vector<long>>()) {
    std::string p = "sp" + std::to_string(2 * n) + "/";
    std::vector<Row> part = parallel_rows(
        c.trials,
        [&](int i) {
          std::mt19937_64 rng = c.rng(n * 1000003 + i);
          SpMatrix a = random_sp(rng, n, c.real("scale")), b = random_sp(rng, n, c.real("scale")),
                   d = random_sp(rng, n, c.real("scale"));
          double r = std::abs(sp_tau_cocycle_residual(a, b, d));
          return make_row(numbered(p, i), json{{"n", n}, {"trial", i}, {"seed", c.cfg.seed}}, json{{"tau", sp_tau(a, b)}}, r, c.tol);
        },
        [&](int i) { return numbered(p, i); });
    rows.insert(rows.end(), part.begin(), part.end());
    std::mt19937_64 rng = c.rng(n);
    double e = 0;
    for (int k = 0; k < 10; ++k) {
      SpMatrix g = random_sp(rng, n);
      e = std::max({e, std::abs(sp_tau(SpMatrix::identity(n), g)), std::abs(sp_tau(g, SpMatrix::identity(n)))});
    }
    rows.push_back(make_row(p + "identity", json{{"n", n}}, json::object(), e, 0));
  }
  return rows;
}

// ---- 8: measure cocycle

SuMeasureT random_su_measure(std::mt19937_64& rng, int max_atoms, double ratio) {
  int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  std::vector<long> w(n);
  long total = 0;
  for (long& x : w) total += (x = std::uniform_int_distribution<long>(1, 5)(rng));
  std::vector<std::pair<SuMatrix, Rational>> atoms;
  for (int i = 0; i < n; ++i) atoms.emplace_back(random_su(rng, ratio), frac(w[i], total));
  return SuMeasureT("SU(1,1)", atoms);
}

WordMeasure random_word_measure(std::mt19937_64& rng, int max_atoms) {
  int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  std::vector<std::pair<FreeWord, Rational>> atoms;
  for (int i = 0; i < n; ++i) atoms.emplace_back(random_word(rng, 2, 2), frac(1, n));
  return WordMeasure("F_2", atoms);
}

std::vector<Row> measure_cocycle(const SuiteContext& c) {
  int atoms = static_cast<int>(c.integer("max_atoms"));
  std::vector<Row> rows = parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        SuMeasureT mu = random_su_measure(rng, atoms, c.real("ratio")), nu = random_su_measure(rng, atoms, c.real("ratio")),
                   rho = random_su_measure(rng, atoms, c.real("ratio"));
        double r = sigma_su11(mu, nu) + sigma_su11(convolve_su(mu, nu), rho) - sigma_su11(nu, rho) -
                   sigma_su11(mu, convolve_su(nu, rho));
        return make_row(numbered("su11/", i), json{{"mu", encode(mu)}, {"nu", encode(nu)}, {"rho", encode(rho)}},
                        json{{"sigma_mu_nu", sigma_su11(mu, nu)}}, std::abs(r), c.tol);
      },
      [](int i) { return numbered("su11/", i); });
  FreeGroupTree t = FreeGroupTree::unit(2, 12);
  AffineModel<FreeWord> model = tree_model(t, 1, FreeWord(), 4);
  std::vector<Row> tree = parallel_rows(
      static_cast<int>(c.integer("tree_pairs")),
      [&](int i) {
        std::mt19937_64 rng = c.rng(100000 + i);
        WordMeasure mu = random_word_measure(rng, atoms), nu = random_word_measure(rng, atoms);
        double s = std::max(std::abs(sigma_measures(mu, nu, model, Side::left)),
                            std::abs(sigma_measures(mu, nu, model, Side::right)));
        return make_row(numbered("tree/", i), json{{"mu", encode(mu)}, {"nu", encode(nu)}}, json::object(), s, 0);
      },
      [](int i) { return numbered("tree/", i); });
  rows.insert(rows.end(), tree.begin(), tree.end());
  return rows;
}

// ---- 9: conditional positive definiteness and GNS

std::vector<Row> cpd_suite(const SuiteContext& c) {
  SuFunction phi = [](const SuMatrix& g) { return gamma_norm2(g); };
  int size = static_cast<int>(c.integer("sample_size"));
  return parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        std::vector<SuMatrix> s;
        json in = json::array();
        for (int k = 0; k < size; ++k) {
          s.push_back(random_su(rng, c.real("ratio")));
          in.push_back(su_json(s.back()));
        }
        CpdResult r = cpd_check(s, phi);
        Eigen::MatrixXd g = gns_from_phi(s, phi, Side::right);
        double gns = 0;
        for (int a = 0; a < size; ++a)
          for (int b = 0; b < size; ++b) gns = std::max(gns, std::abs(g(a, b) - gamma_gram(s[a], s[b]).real()));
        double res = std::max(std::max(0.0, r.max_eigenvalue), gns);
        return make_row(numbered("sample/", i), in,
                        json{{"max_hyperplane_eigenvalue", r.max_eigenvalue}, {"gns_residual", gns}, {"cpd", r.cpd}}, res,
                        c.tol);
      },
      [](int i) { return numbered("sample/", i); });
}

// ---- 10: H1 of immobile functions

std::vector<Row> h1_suite(const SuiteContext& c) {
  SolveMode mode = c.cfg.mode == "float" ? SolveMode::floating : SolveMode::automatic;
  int radius = static_cast<int>(c.integer("radius"));
  std::vector<Row> rows = parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        auto values = std::make_shared<std::map<FreeWord, Rational>>();
        json in = json::array();
        for (int k = 0; k < 8; ++k) {
          FreeWord w = random_word(rng, 2, radius - 2);
          Rational v = frac(std::uniform_int_distribution<long>(-9, 9)(rng), 7);
          (*values)[w] = v;
          in.push_back({{"word", w.letters()}, {"value", to_string(v)}});
        }
        WindowFunction r = [values](const FreeWord& m) {
          auto it = values->find(m);
          return it == values->end() ? Rational(0) : it->second;
        };
        H1Result h = immobile_h1(r, 2, radius, mode);
        return make_row(numbered("coboundary/", i), in, json{{"norm", h.norm}, {"exact", h.used_exact}}, h.norm, c.tol);
      },
      [](int i) { return numbered("coboundary/", i); });
  WindowFunction x = indicator(SetWindow::suffix(FreeWord::generator(1)));
  std::vector<double> norms;
  for (long r : c.params.at("halftree_radii").get<std::vector<long>>()) {
    H1Result h = immobile_h1(x, 2, static_cast<int>(r), mode);
    norms.push_back(h.norm);
    double floor = c.real("halftree_min_norm");
    rows.push_back(make_row(numbered("halftree/r", static_cast<int>(r)), json{{"set", {{"kind", "suffix"}, {"v", {1}}}}, {"radius", r}},
                            json{{"norm", h.norm}, {"min_norm", floor}}, floor - h.norm, 0));
  }
  double spread = *std::max_element(norms.begin(), norms.end()) - *std::min_element(norms.begin(), norms.end());
  rows.push_back(make_row("halftree/stability", c.params.at("halftree_radii"), json{{"norms", norms}}, spread, c.real("stability_tol")));
  return rows;
}

// ---- 11: train-track metric

TrackPoint random_track_point(std::mt19937_64& rng, const TrainTrack& tt, int denom) {
  std::vector<Slot> all;
  for (const auto& [s, w] : tt.widths) all.push_back(s);
  Slot s = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  Rational o = tt.width(s) * frac(std::uniform_int_distribution<int>(0, denom)(rng), denom);
  return {s, o};
}

json point_json(const TrainTrack& tt, const TrackPoint& p) { return {{"slot", tt.slot_key(p.slot)}, {"offset", to_string(p.offset)}}; }

std::vector<Row> traintrack_suite(const SuiteContext& c) {
  std::filesystem::path dir = c.text("corpus");
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") files.push_back(e.path());
  if (ec) fail(Errc::io_error, "cannot read corpus " + dir.string());
  std::sort(files.begin(), files.end());
  double eps = c.real("eps");
  std::vector<Row> rows;
  for (std::size_t f = 0; f < files.size(); ++f) {
    std::ifstream in(files[f]);
    if (!in) fail(Errc::io_error, "cannot open " + files[f].string());
    TrainTrack tt = TrainTrack::from_json(json::parse(in));
    std::string name = files[f].stem().string();
    TrackMetric m(tt);
    TrackGrid grid(tt, eps);
    std::vector<Row> q = parallel_rows(
        c.trials,
        [&](int i) {
          std::mt19937_64 rng = c.rng(f * 100000 + i);
          TrackPoint x = random_track_point(rng, tt, 7), y = random_track_point(rng, tt, 5);
          double exact = m.distance(x, y).get_d(), approx = grid.distance(x, y);
          return make_row(numbered(name + "/query/", i), json{{"x", point_json(tt, x)}, {"y", point_json(tt, y)}},
                          json{{"exact", to_string(m.distance(x, y))}, {"grid", approx}, {"eps", eps}},
                          std::abs(exact - approx), 5 * eps);
        },
        [&](int i) { return numbered(name + "/query/", i); });
    rows.insert(rows.end(), q.begin(), q.end());
    int k = 0;
    for (const auto& [slot, w] : tt.widths) {
      TrainTrack bad = tt;
      bad.widths[slot] = w + frac(1, 3);
      auto v = traintrack_validate(bad);
      bool named = std::any_of(v.begin(), v.end(), [&](const TrackViolation& x) {
        return std::find(x.slots.begin(), x.slots.end(), slot) != x.slots.end();
      });
      rows.push_back(make_row(numbered(name + "/perturb/", k++), json{{"slot", tt.slot_key(slot)}},
                              json{{"violations", v.size()}, {"slot_named", named}}, named ? 0 : 1, 0));
    }
  }
  return rows;
}

// ---- 12: Fock multiplication law

std::vector<Row> fock_suite(const SuiteContext& c) {
  std::vector<Row> rows;
  for (const json& shape : c.params.at("shapes")) {
    int d = shape.at(0).get<int>(), n = shape.at(1).get<int>();
    FockTruncation t(d, n);
    std::string p = "d" + std::to_string(d) + "N" + std::to_string(n) + "/";
    std::vector<Row> part = parallel_rows(
        c.trials,
        [&](int i) {
          std::mt19937_64 rng = c.rng(d * 1000 + n * 100000 + i);
          AffineIsometry x = random_affine_isometry(rng, d, c.real("gamma_max")),
                         y = random_affine_isometry(rng, d, c.real("gamma_max"));
          FockLawCheck r = fock_multiplication_check(x, y, t);
          return make_row(numbered(p, i), json{{"d", d}, {"N", n}, {"trial", i}, {"seed", c.cfg.seed}},
                          json{{"phase", {r.phase.real(), r.phase.imag()}}, {"gamma_norms", {x.gamma.norm(), y.gamma.norm()}}},
                          r.residual, c.tol);
        },
        [&](int i) { return numbered(p, i); });
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

// ---- 13: triangle relation

std::vector<Row> triangle_suite(const SuiteContext& c) {
  int n = static_cast<int>(c.integer("vertices"));
  return parallel_rows(
      c.trials,
      [&](int i) {
        std::mt19937_64 rng = c.rng(i);
        MetricTree t = random_metric_tree(rng, n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        int x = pick(rng), y = pick(rng), z = pick(rng);
        auto s = edge_path(t, x, y) + edge_path(t, y, z) + edge_path(t, z, x);
        Rational norm = edge_pairing(t, s, s);
        return make_row(numbered("triple/", i), json{{"trial", i}, {"seed", c.cfg.seed}, {"x", x}, {"y", y}, {"z", z}},
                        json{{"residual_exact", to_string(norm)}}, norm.get_d(), 0);
      },
      [](int i) { return numbered("triple/", i); });
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {"tree-identities", 1, "gradient/divergence/Laplacian identities on T_n balls, exact", 100, 1,
       json{{"n", {2, 3, 5}}, {"radius", 5}}, tree_identities},
      {"bergman-gram", 2, "truncated Bergman pairing against the closed form", 50, 1e-6, json{{"N", 100}, {"ratio", 0.8}},
       bergman_gram},
      {"bergman-asymptotic", 3, "self-pairing of long boosts against 2 delta - 2 ln 2", 1, 1e-3,
       json{{"t_min", 5}, {"t_max", 15}}, bergman_asymptotic},
      {"affine-cocycle", 4, "cocycle law for the tree action (exact) and the Bergman action", 100, 1e-6,
       json{{"N", 80}, {"su_pairs", 50}, {"ratio", 0.5}}, affine_cocycle},
      {"translation-length", 5, "two-step translation length against a window minimum", 100, 1,
       json{{"window", 8}, {"max_length", 6}}, translation_lengths},
      {"length-recovery", 6, "norms of gamma(g^n) against n s^2 l(g) + 2 s^2 d(x0, axis)", 20, 1, json{{"n_max", 50}},
       length_recovery},
      {"sp-tau", 7, "2-cocycle identity of tau on Sp(2n, R)", 1000, 1e-9, json{{"dims", {1, 2}}, {"scale", 0.6}},
       sp_tau_suite},
      {"measure-cocycle", 8, "2-cocycle identity of sigma on measures", 100, 1e-8,
       json{{"max_atoms", 3}, {"ratio", 0.5}, {"tree_pairs", 20}}, measure_cocycle},
      {"cpd", 9, "conditional positive definiteness of 2 ln|a| and its GNS Gram", 20, 1e-9,
       json{{"sample_size", 6}, {"ratio", 0.8}}, cpd_suite},
      {"h1", 10, "harmonic representatives of immobile functions on F_2", 5, 1e-9,
       json{{"radius", 6}, {"halftree_radii", {6, 8, 10}}, {"halftree_min_norm", 0.1}, {"stability_tol", 1e-3}}, h1_suite},
      {"traintrack", 11, "train-track metric against a discretized gluing; validator perturbations", 20, 1,
       json{{"corpus", ISOACT_CORPUS_DIR}, {"eps", 1e-3}}, traintrack_suite},
      {"fock", 12, "Fock multiplication law on the half-degree block", 20, 1e-6,
       json{{"shapes", {{1, 12}, {2, 10}}}, {"gamma_max", 0.35}}, fock_suite},
      {"triangle", 13, "e(x,y) + e(y,z) + e(z,x) has zero norm", 100, 1, json{{"vertices", 40}}, triangle_suite},
  };
  return all;
}

}  // namespace isoact
