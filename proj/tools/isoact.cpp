// isoact: suite runner and per-module query commands.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isoact/bgroup.hpp"
#include "isoact/error.hpp"
#include "isoact/fock.hpp"
#include "isoact/immobile.hpp"
#include "isoact/mobius.hpp"
#include "isoact/rng.hpp"
#include "isoact/rtree.hpp"
#include "isoact/sp_tau.hpp"
#include "isoact/suite.hpp"
#include "isoact/traintrack.hpp"
#include "isoact/tree_core.hpp"
#include "isoact/tree_harmonic.hpp"

using namespace isoact;

namespace {

// Inline JSON, or @path to read it from a file.
json load_json(const std::string& arg, const char* what) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) fail(Errc::io_error, std::string(what) + ": cannot open " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::invalid_encoding, std::string(what) + ": " + e.what());
  }
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Output {
  std::string out = "-", format = "json";
};

int finish(const Report& r, const Output& o) {
  emit_report(r, o.format, o.out);
  return r.summary().fail == 0 ? 0 : 1;
}

Report single_check(const std::string& suite, const json& cfg, std::vector<Row> rows) {
  Report r;
  r.suite = suite;
  r.config = cfg;
  r.config_digest = digest(cfg);
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  r.rows = std::move(rows);
  return r;
}

std::vector<int> parse_schedule(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(Errc::config_error, "schedule: bad radius '" + item + "'");
    }
  return out;
}

Address address_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::invalid_encoding, "address: expected an array of branch indices");
  return j.get<Address>();
}

RatMat2 ratmat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(Errc::invalid_encoding, "matrix: expected [[a,b],[c,d]]");
  RatMat2 m;
  for (int r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2) fail(Errc::invalid_encoding, "matrix: expected [[a,b],[c,d]]");
    for (int c = 0; c < 2; ++c) m.m[r][c] = rational_from_json(j[r][c]);
  }
  return m;
}

TreeAutomorphism automorphism_from_json(const json& j, int radius) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "freeword") {
    int rank = j.value("rank", 2);
    return TreeAutomorphism::from_free_word(decode_word(j.at("word"), rank), rank, radius);
  }
  if (kind == "matrix") return TreeAutomorphism::from_matrix(ratmat_from_json(j.at("entries")), j.at("p").get<long>(), radius);
  fail(Errc::invalid_encoding, "automorphism kind '" + kind + "'");
}

BoundaryRay ray_from_json(const json& j) {
  if (j.is_object()) return {address_from_json(j.at("prefix")), j.value("zero_tail", true)};
  return {address_from_json(j), true};
}

TrainTrack load_track(const std::string& arg) { return TrainTrack::from_json(load_json(arg, "track")); }

TrackPoint point_from_json(const TrainTrack& tt, const json& j) {
  return {tt.parse_slot(j.at("slot").get<std::string>()), rational_from_json(j.at("offset"))};
}

MetricTree tree_from_json(const json& j) {
  std::vector<MetricEdge> edges;
  for (const json& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), rational_from_json(e.at(2))});
  return MetricTree(j.at("vertices").get<int>(), edges);
}

std::vector<SuMatrix> sample_from_json(const json& j) {
  std::vector<SuMatrix> s;
  for (const json& g : j) s.push_back(decode_su(g));
  return s;
}

json cplx_json(cplx z) { return {z.real(), z.imag()}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isometric actions on trees, discs and Fock spaces"};
  app.require_subcommand(1);
  Output o;
  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", o.out, "output path, - for stdout");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  int code = 0;

  // run-suite / list-suites
  auto* run = app.add_subcommand("run-suite", "run a verification suite");
  std::string suite, mode, config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> tol;
  std::vector<std::string> kv;
  run->add_option("--suite", suite);
  run->add_option("--seed", seed);
  run->add_option("--trials", trials);
  run->add_option("--tol", tol);
  run->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  run->add_option("--config", config_path, "JSON config merged under the flags");
  run->add_option("--param", kv, "key=value (value parsed as JSON, else taken as a string)");
  add_output(run);
  run->callback([&] {
    json base = json::object();
    if (!config_path.empty()) base = load_json("@" + config_path, "config");
    json over = json::object();
    if (!suite.empty()) over["suite"] = suite;
    if (seed) over["seed"] = *seed;
    if (trials) over["trials"] = *trials;
    if (tol) over["tol"] = *tol;
    if (!mode.empty()) over["mode"] = mode;
    for (const std::string& p : kv) {
      auto eq = p.find('=');
      if (eq == std::string::npos) fail(Errc::config_error, p + ": expected key=value");
      std::string k = p.substr(0, eq), v = p.substr(eq + 1);
      json value = json::parse(v, nullptr, false);
      over["params"][k] = value.is_discarded() ? json(v) : value;
    }
    code = finish(run_suite(SuiteConfig::from_json(merge_config(base, over))), o);
  });

  auto* list = app.add_subcommand("list-suites", "list the registered suites");
  list->callback([&] {
    json out = json::array();
    for (const SuiteInfo& s : suites())
      out.push_back({{"name", s.name},
                     {"criterion", s.criterion},
                     {"summary", s.summary},
                     {"trials", s.default_trials},
                     {"tol", s.default_tol},
                     {"params", s.default_params}});
    print(out);
  });

  // tree
  auto* tree = app.add_subcommand("tree", "regular and Bruhat-Tits trees");
  tree->require_subcommand(1);
  int n = 2, radius = 4;
  long prime = 2;
  std::string a_arg, b_arg, s_arg = "[]", g_arg;
  auto tree_opts = [&](CLI::App* c) {
    c->add_option("--n", n, "branching: vertices have n + 1 neighbours");
    c->add_option("--radius", radius);
  };
  auto* t_ball = tree->add_subcommand("ball", "vertex and edge counts");
  tree_opts(t_ball);
  t_ball->callback([&] {
    TreeBall b(n, radius);
    print({{"n", n}, {"radius", radius}, {"vertices", b.vertex_count()}, {"edges", b.edge_count()},
           {"expected_vertices", TreeBall::expected_vertex_count(n, radius)}});
  });
  auto* t_dist = tree->add_subcommand("dist", "distance between two addresses");
  tree_opts(t_dist);
  t_dist->add_option("--u", a_arg)->required();
  t_dist->add_option("--v", b_arg)->required();
  t_dist->callback([&] {
    TreeBall b(n, radius);
    print({{"distance", tree_distance(b, address_from_json(load_json(a_arg, "u")), address_from_json(load_json(b_arg, "v")))}});
  });
  auto* t_abs = tree->add_subcommand("absmetric", "visual distance of two ends");
  tree_opts(t_abs);
  t_abs->add_option("--x", a_arg)->required();
  t_abs->add_option("--y", b_arg)->required();
  t_abs->add_option("--base", s_arg);
  t_abs->callback([&] {
    TreeBall b(n, radius);
    Rational d = abs_metric(ray_from_json(load_json(a_arg, "x")), ray_from_json(load_json(b_arg, "y")), b,
                            address_from_json(load_json(s_arg, "base")));
    print({{"delta", to_string(d)}});
  });
  auto* t_meas = tree->add_subcommand("measure", "mass of a cylinder");
  tree_opts(t_meas);
  t_meas->add_option("--cylinder", a_arg)->required();
  t_meas->add_option("--base", s_arg);
  t_meas->callback([&] {
    TreeBall b(n, radius);
    print({{"mass", to_string(cylinder_measure(b, address_from_json(load_json(a_arg, "cylinder")),
                                               address_from_json(load_json(s_arg, "base"))))}});
  });
  auto* t_lat = tree->add_subcommand("latdist", "distance between lattice classes");
  t_lat->add_option("--l1", a_arg)->required();
  t_lat->add_option("--l2", b_arg)->required();
  t_lat->add_option("--p", prime);
  t_lat->callback([&] {
    RatMat2 l1 = ratmat_from_json(load_json(a_arg, "l1")), l2 = ratmat_from_json(load_json(b_arg, "l2"));
    print({{"distance", lattice_distance(l1, l2, prime)}, {"same_class", same_lattice_class(l1, l2, prime)}});
  });
  auto* t_der = tree->add_subcommand("deriv", "derivative of an automorphism at an end");
  t_der->add_option("--radius", radius);
  t_der->add_option("--auto", g_arg, "{\"kind\":\"freeword\",\"word\":[..]} or {\"kind\":\"matrix\",\"p\":2,\"entries\":[[..]]}")
      ->required();
  t_der->add_option("--ray", a_arg)->required();
  t_der->callback([&] {
    TreeAutomorphism g = automorphism_from_json(load_json(g_arg, "auto"), radius);
    BoundaryRay x = ray_from_json(load_json(a_arg, "ray"));
    BoundaryRay gx = image_ray(g, x);
    print({{"derivative", to_string(automorphism_derivative(g, x))}, {"image_prefix", gx.prefix}});
  });

  // harmonic
  auto* harm = app.add_subcommand("harmonic", "operators on tree balls");
  harm->require_subcommand(1);
  std::string kernel = "inv_delta", set_arg;
  int depth = 1, pairs = 20;
  long hseed = 42;
  auto* h_id = harm->add_subcommand("identities", "gradient/divergence/Laplacian relations");
  tree_opts(h_id);
  h_id->add_option("--pairs", pairs);
  h_id->add_option("--seed", hseed);
  add_output(h_id);
  h_id->callback([&] {
    json cfg{{"n", {n}}, {"radius", radius}};
    code = finish(run_suite(SuiteConfig::from_json({{"suite", "tree-identities"}, {"seed", hseed}, {"trials", pairs}, {"params", cfg}})),
                  o);
  });
  auto* h_poi = harm->add_subcommand("poisson", "Poisson transform of a cylinder function");
  tree_opts(h_poi);
  h_poi->add_option("--depth", depth);
  h_poi->add_option("--values", a_arg, "one rational per depth-k vertex")->required();
  h_poi->callback([&] {
    TreeBall b(n, radius);
    json v = load_json(a_arg, "values");
    CylinderFunction f{depth, {}};
    for (const json& x : v) f.values.push_back(rational_from_json(x));
    EdgeFunction h = poisson_transform(b, f);
    json out = json::array();
    for (int e = 1; e <= b.edge_count(); ++e)
      if (h[e] != 0) out.push_back({{"edge", b.address(e)}, {"value", to_string(h[e])}});
    VertexFunction div = divergence(b, h);
    Rational worst = 0;
    for (int v = 0; v < b.vertex_count(); ++v)
      if (b.depth(v) < radius && abs(div[v]) > worst) worst = abs(div[v]);
    print({{"edges", out}, {"max_interior_divergence", to_string(worst)}});
  });
  auto* h_h1 = harm->add_subcommand("h1", "harmonic representative of an immobile set's cocycle on F_2");
  h_h1->add_option("--radius", radius);
  h_h1->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float", "auto"}));
  h_h1->add_option("--set", set_arg)->required();
  h_h1->callback([&] {
    SolveMode m = mode == "exact" ? SolveMode::exact : mode == "float" ? SolveMode::floating : SolveMode::automatic;
    H1Result r = immobile_h1(indicator(SetWindow::from_json(load_json(set_arg, "set"), 2)), 2, radius, m);
    print({{"norm", r.norm}, {"divergence_residual", r.divergence_residual}, {"exact", r.used_exact}});
  });
  auto* h_gram = harm->add_subcommand("gram", "energy Gram of depth-k cylinders");
  tree_opts(h_gram);
  h_gram->add_option("--depth", depth);
  h_gram->add_option("--kernel", kernel)->check(CLI::IsMember({"inv_delta", "neg_log_delta", "neg_log_padic"}));
  h_gram->add_option("--p", prime);
  h_gram->callback([&] {
    Kernel k{kernel == "inv_delta" ? Kernel::inv_delta : kernel == "neg_log_delta" ? Kernel::neg_log_delta : Kernel::neg_log_padic,
             prime};
    GramResult g = kernel_gram(depth, TreeBall(n, radius), k);
    print({{"cylinders", g.cylinders}, {"min_eigenvalue", g.min_eigenvalue}, {"dimension", g.gram.rows()}});
  });

  // rtree
  auto* rt = app.add_subcommand("rtree", "metric trees, train tracks, free-group trees");
  rt->require_subcommand(1);
  std::string track, x_arg, y_arg, x0_arg = "[]", sval = "1";
  int window = 40;
  auto* r_val = rt->add_subcommand("validate", "check a train track's width conditions");
  r_val->add_option("--track", track, "JSON or @file")->required();
  r_val->callback([&] {
    TrainTrack tt = load_track(track);
    json out = json::array();
    for (const TrackViolation& v : traintrack_validate(tt)) {
      json slots = json::array();
      for (const Slot& s : v.slots) slots.push_back(tt.slot_key(s));
      out.push_back({{"condition", v.condition}, {"vertex", v.vertex}, {"edge", v.edge}, {"detail", v.detail}, {"slots", slots}});
    }
    print({{"valid", out.empty()}, {"violations", out}});
    code = out.empty() ? 0 : 1;
  });
  auto* r_met = rt->add_subcommand("metric", "distance between two train-track points");
  r_met->add_option("--track", track)->required();
  r_met->add_option("--x", x_arg, "{\"slot\":\"A:0:+\",\"offset\":\"1/2\"}")->required();
  r_met->add_option("--y", y_arg)->required();
  r_met->callback([&] {
    TrainTrack tt = load_track(track);
    TrackMetric m(tt);
    Rational d = m.distance(point_from_json(tt, load_json(x_arg, "x")), point_from_json(tt, load_json(y_arg, "y")));
    print({{"distance", to_string(d)}, {"approx", d.get_d()}});
  });
  auto* r_pair = rt->add_subcommand("pairing", "<e(x1,y1), e(x2,y2)> on a metric tree");
  r_pair->add_option("--tree", track, "{\"vertices\":k,\"edges\":[[u,v,\"len\"],..]}")->required();
  r_pair->add_option("--a", x_arg, "[x,y]")->required();
  r_pair->add_option("--b", y_arg, "[x,y]")->required();
  r_pair->callback([&] {
    MetricTree t = tree_from_json(load_json(track, "tree"));
    json a = load_json(x_arg, "a"), b = load_json(y_arg, "b");
    Rational p = edge_pairing(t, edge_path(t, a.at(0).get<int>(), a.at(1).get<int>()),
                              edge_path(t, b.at(0).get<int>(), b.at(1).get<int>()));
    print({{"pairing", to_string(p)}});
  });
  auto* r_len = rt->add_subcommand("length", "translation length of a word on the Cayley tree of F_2");
  r_len->add_option("--g", g_arg)->required();
  r_len->add_option("--window", window);
  r_len->callback([&] {
    FreeGroupTree t = FreeGroupTree::unit(2, window);
    TranslationLength l = translation_length(t, decode_word(load_json(g_arg, "g"), 2), FreeWord());
    json out{{"length", to_string(l.length)}};
    if (l.axis_point) out["axis_point"] = l.axis_point->letters();
    print(out);
  });
  auto* r_gam = rt->add_subcommand("gamma", "s e(x0, g x0) and its squared norm");
  r_gam->add_option("--g", g_arg)->required();
  r_gam->add_option("--s", sval);
  r_gam->add_option("--x0", x0_arg);
  r_gam->add_option("--window", window);
  r_gam->callback([&] {
    FreeGroupTree t = FreeGroupTree::unit(2, window);
    Rational s = parse_rational(sval);
    FreeEdgeVector v = canonical_gamma(t, decode_word(load_json(g_arg, "g"), 2), s, decode_word(load_json(x0_arg, "x0"), 2));
    json edges = json::array();
    for (const auto& [w, c] : v.w) edges.push_back({{"edge", w.letters()}, {"value", to_string(c)}});
    print({{"edges", edges}, {"norm2", to_string(edge_pairing(t, v, v))}});
  });

  // mobius
  auto* mob = app.add_subcommand("mobius", "SU(1,1) and the Bergman cocycle");
  mob->require_subcommand(1);
  int big_n = 100, powers = 20;
  auto* m_gram = mob->add_subcommand("gram", "closed-form and truncated pairing of gamma(g1), gamma(g2)");
  m_gram->add_option("--g1", x_arg)->required();
  m_gram->add_option("--g2", y_arg)->required();
  m_gram->add_option("--N", big_n);
  m_gram->callback([&] {
    SuMatrix g1 = decode_su(load_json(x_arg, "g1")), g2 = decode_su(load_json(y_arg, "g2"));
    cplx c = gamma_gram(g1, g2), t = bergman_pairing(bergman_gamma(g1, big_n), bergman_gamma(g2, big_n));
    print({{"closed", cplx_json(c)}, {"truncated", cplx_json(t)}, {"residual", std::abs(c - t)}});
  });
  auto* m_coc = mob->add_subcommand("cocycle", "affine cocycle law on the half-degree block");
  m_coc->add_option("--g1", x_arg)->required();
  m_coc->add_option("--g2", y_arg)->required();
  m_coc->add_option("--N", big_n);
  m_coc->callback([&] {
    CocycleCheck r = affine_cocycle_check(decode_su(load_json(x_arg, "g1")), decode_su(load_json(y_arg, "g2")), big_n);
    print({{"residual", r.residual}, {"literal_order_residual", r.literal_residual}});
  });
  auto* m_len = mob->add_subcommand("length", "type and hyperbolic translation length");
  m_len->add_option("--g", g_arg)->required();
  m_len->callback([&] {
    HyperbolicLength h = hyperbolic_length(decode_su(load_json(g_arg, "g")));
    print({{"kind", to_string(h.kind)}, {"length", h.length}});
  });
  auto* m_cpd = mob->add_subcommand("cpd", "CPD test of 2 ln|a| on a sample");
  m_cpd->add_option("--sample", x_arg, "array of SU(1,1) elements")->required();
  m_cpd->callback([&] {
    CpdResult r = cpd_check(sample_from_json(load_json(x_arg, "sample")), [](const SuMatrix& g) { return gamma_norm2(g); });
    print({{"cpd", r.cpd}, {"max_eigenvalue", r.max_eigenvalue}});
  });
  auto* m_gns = mob->add_subcommand("gns", "Gram matrix rebuilt from 2 ln|a|");
  m_gns->add_option("--sample", x_arg)->required();
  m_gns->callback([&] {
    auto s = sample_from_json(load_json(x_arg, "sample"));
    Eigen::MatrixXd g = gns_from_phi(s, [](const SuMatrix& h) { return gamma_norm2(h); }, Side::right);
    json rows = json::array();
    double worst = 0;
    for (int i = 0; i < g.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < g.cols(); ++j) {
        row.push_back(g(i, j));
        worst = std::max(worst, std::abs(g(i, j) - gamma_gram(s[i], s[j]).real()));
      }
      rows.push_back(row);
    }
    print({{"gram", rows}, {"residual_vs_closed_form", worst}});
  });
  auto* m_probe = mob->add_subcommand("probe", "growth of ||gamma(g^k)||^2");
  m_probe->add_option("--g", g_arg)->required();
  m_probe->add_option("--powers", powers);
  m_probe->callback([&] {
    SuMatrix g = decode_su(load_json(g_arg, "g")), p;
    std::vector<double> seq;
    for (int k = 0; k < powers; ++k) {
      p = p * g;
      seq.push_back(gamma_norm2(p));
    }
    ProbeReport r = triviality_probe({seq});
    print({{"sup", r.sup}, {"slope", r.slope}, {"nontrivial", r.nontrivial}, {"verdict", r.verdict}});
  });

  // cocycle
  auto* coc = app.add_subcommand("cocycle", "2-cocycles of central extensions");
  coc->require_subcommand(1);
  int ctrials = 100;
  std::uint64_t cseed = 42;
  double ctol = 0;
  int dim = 1, level = 3;
  auto coc_opts = [&](CLI::App* c) {
    c->add_option("--trials", ctrials);
    c->add_option("--seed", cseed);
    c->add_option("--tol", ctol);
    add_output(c);
  };
  auto suite_cfg = [&](const char* name, json params) {
    json j{{"suite", name}, {"seed", cseed}, {"trials", ctrials}, {"params", std::move(params)}};
    if (ctol > 0) j["tol"] = ctol;
    return SuiteConfig::from_json(j);
  };
  auto* c_sp = coc->add_subcommand("sp-tau", "tau on Sp(2n, R)");
  coc_opts(c_sp);
  c_sp->add_option("--dim", dim, "n, for Sp(2n)");
  c_sp->callback([&] { code = finish(run_suite(suite_cfg("sp-tau", {{"dims", {dim}}})), o); });
  auto* c_meas = coc->add_subcommand("measures", "sigma on SU(1,1) measures");
  coc_opts(c_meas);
  c_meas->callback([&] { code = finish(run_suite(suite_cfg("measure-cocycle", json::object())), o); });
  auto* c_lat = coc->add_subcommand("lattice", "sigma on lattice measures, exact");
  coc_opts(c_lat);
  c_lat->add_option("--dim", dim, "n, for Z^{2n}");
  c_lat->callback([&] {
    auto random_measure = [&](std::mt19937_64& rng) {
      int atoms = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<std::pair<LatticeVector, Rational>> a;
      for (int k = 0; k < atoms; ++k) {
        LatticeVector v(2 * dim);
        for (long& x : v) x = std::uniform_int_distribution<long>(-5, 5)(rng);
        a.emplace_back(v, frac(1, atoms));
      }
      return LatticeMeasure("Z^" + std::to_string(2 * dim), a);
    };
    auto add = [](const LatticeVector& u, const LatticeVector& v) {
      LatticeVector w(u);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
      return w;
    };
    std::vector<Row> rows;
    for (int i = 0; i < ctrials; ++i) {
      std::mt19937_64 rng = trial_rng(cseed, i);
      LatticeMeasure mu = random_measure(rng), nu = random_measure(rng), rho = random_measure(rng);
      Rational r = lattice_sigma(mu, nu) + lattice_sigma(mu.convolve(nu, add), rho) - lattice_sigma(nu, rho) -
                   lattice_sigma(mu, nu.convolve(rho, add));
      char id[16];
      std::snprintf(id, sizeof id, "%04d", i);
      rows.push_back(make_row(std::string("lattice/") + id, json{{"trial", i}, {"seed", cseed}, {"dim", dim}},
                              json{{"residual_exact", to_string(r)}}, std::abs(r.get_d()), 0));
    }
    code = finish(single_check("cocycle-lattice", json{{"seed", cseed}, {"trials", ctrials}, {"dim", dim}}, rows), o);
  });
  auto* c_bg = coc->add_subcommand("bgroup", "cocycle on step automorphisms of [0,1) with values in Sp(2n)");
  coc_opts(c_bg);
  c_bg->add_option("--dim", dim);
  c_bg->add_option("--level", level, "largest dyadic level");
  c_bg->callback([&] {
    double t = ctol > 0 ? ctol : 1e-9;
    std::vector<Row> rows = parallel_rows(
        ctrials,
        [&](int i) {
          std::mt19937_64 rng = trial_rng(cseed, i);
          SpStep x = random_sp_step(rng, dim, level), y = random_sp_step(rng, dim, level), z = random_sp_step(rng, dim, level);
          double r = bgroup_cocycle_residual(x, y, z);
          char id[16];
          std::snprintf(id, sizeof id, "bgroup/%04d", i);
          return make_row(id, json{{"trial", i}, {"seed", cseed}, {"dim", dim}, {"level", level}},
                          json{{"sigma_xy", bgroup_cocycle(x, y)}}, std::abs(r), t);
        },
        [](int i) {
          char id[16];
          std::snprintf(id, sizeof id, "bgroup/%04d", i);
          return std::string(id);
        });
    code = finish(single_check("cocycle-bgroup", json{{"seed", cseed}, {"trials", ctrials}, {"dim", dim}, {"level", level}, {"tol", t}}, rows),
                  o);
  });

  // immobile
  auto* imm = app.add_subcommand("immobile", "immobile subsets and functions on F_2");
  imm->require_subcommand(1);
  std::string group = "F2", schedule = "4,6,8";
  int imm_radius = 8;
  auto imm_opts = [&](CLI::App* c) {
    c->add_option("--group", group)->check(CLI::IsMember({"F2", "F3"}));
    c->add_option("--radius", imm_radius);
    c->add_option("--schedule", schedule);
    c->add_option("--set", set_arg, "set descriptor, e.g. {\"kind\":\"suffix\",\"v\":[1]}")->required();
  };
  auto rank_of = [&] { return group == "F3" ? 3 : 2; };
  auto* i_set = imm->add_subcommand("set", "boundary edge counts along the schedule");
  imm_opts(i_set);
  i_set->callback([&] {
    CayleyWindow w(rank_of(), imm_radius);
    BoundaryReport r = boundary_edge_count(SetWindow::from_json(load_json(set_arg, "set"), rank_of()), w, parse_schedule(schedule));
    print({{"schedule", r.schedule}, {"boundary_edges", r.counts}, {"verdict", r.verdict}});
  });
  auto* i_fun = imm->add_subcommand("func", "partial energies of the indicator of a set");
  imm_opts(i_fun);
  i_fun->callback([&] {
    CayleyWindow w(rank_of(), imm_radius);
    FunctionReport r =
        immobile_function_test(indicator(SetWindow::from_json(load_json(set_arg, "set"), rank_of())), w, parse_schedule(schedule));
    json sums = json::array();
    for (const Rational& q : r.partial_sums) sums.push_back(to_string(q));
    print({{"schedule", r.schedule}, {"partial_sums", sums}, {"verdict", r.verdict}});
  });
  auto* i_coc = imm->add_subcommand("cocycle", "gamma_g of the indicator of a set");
  imm_opts(i_coc);
  i_coc->add_option("--g", g_arg, "group element as a signed letter array")->required();
  i_coc->callback([&] {
    CayleyWindow w(rank_of(), imm_radius);
    auto m = cocycle_from_function(indicator(SetWindow::from_json(load_json(set_arg, "set"), rank_of())),
                                   decode_word(load_json(g_arg, "g"), rank_of()), w);
    json support = json::array();
    for (const auto& [h, v] : m)
      if (v != 0) support.push_back({{"h", h.letters()}, {"value", to_string(v)}});
    print({{"support", support}, {"support_size", support.size()}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "isoact: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "isoact: invalid_encoding: " << e.what() << "\n";
    return 2;
  }
  return code;
}
