#include "commands.hpp"

#include "artifact/gauge.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>

namespace artifact::cli {

namespace {

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

void add_homology(Report &r, const ChainComplex &c) {
  for (const auto &[n, g] : homology(c)) r.homology.push_back({n, g.str(), ""});
}

// nonzero ambient entries with their labels, e.g. "A U[v]:[v,w]=1", at most six shown
std::string describe(const FgAbGroup &ambient, const std::vector<Int> &x) {
  std::string out;
  int nonzero = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (x[i].is_zero()) continue;
    if (++nonzero <= 6) out += (out.empty() ? "" : ", ") + ambient.label(i) + "=" + x[i].str();
  }
  if (nonzero > 6) out += ", ... (" + std::to_string(nonzero) + " nonzero entries)";
  return out.empty() ? "0" : out;
}

void finish(Report &r) {
  bool fail = false, inconclusive = false;
  for (const auto &c : r.checks) {
    fail |= c.result == "fail";
    inconclusive |= c.result == "inconclusive";
  }
  r.status = fail ? "fail" : inconclusive ? "inconclusive" : "pass";
}

void chain_map_checks(Report &r, const std::string &name, const ChainMap &f) {
  std::string why;
  bool ok = verify_chain_map(f, &why);
  r.checks.push_back({name + " is a chain map", pass_fail(ok), why});
  r.checks.push_back({name + " is a quasi-isomorphism", pass_fail(ok && quasi_iso_check(f)), ""});
}

void identity_check(Report &r, const std::string &name, const ChainMap &f, const ChainComplex &c) {
  std::string bad;
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!(f.at(n) == GroupHom::identity(c.group(n)))) bad += (bad.empty() ? "degree " : ", ") + std::to_string(n);
  r.checks.push_back({name, pass_fail(bad.empty()), bad.empty() ? "" : "differs in " + bad});
}

void homotopy_check(Report &r, const std::string &name, const ChainHomotopy &h) {
  std::string why;
  bool ok = verify_homotopy(h, &why);
  r.checks.push_back({name, pass_fail(ok), why});
}

void verify_engine(Report &r, const GaugeModel &M) {
  auto c = M.config_engine_iso();
  r.checks.push_back({"configurations: engine matches hand-built complex", pass_fail(c.ok), c.why});
  if (M.coeff().is_Z()) {
    r.checks.push_back({"observables", "info", "undefined for Z coefficients"});
    return;
  }
  auto o = M.obs_engine_iso();
  r.checks.push_back({"observables: engine matches hand-built complex", pass_fail(o.ok), o.why});
}

void verify_deligne(Report &r, const GaugeModel &M) {
  const ChainComplex &E = M.extended_config(), &D = M.deligne();
  auto he = homology(E), hd = homology(D);
  for (const auto &[n, g] : he) r.homology.push_back({n, g.str(), hd.count(n) ? hd.at(n).str() : "0"});
  r.checks.push_back({"extended configurations and Deligne complex have equal homology", pass_fail(he == hd), ""});
  ChainMap psi = M.psi();
  chain_map_checks(r, "psi", psi);
  try {
    ChainMap phi = M.phi();
    identity_check(r, "phi psi = id", compose(phi, psi), D);
    identity_check(r, "psi phi = id", compose(psi, phi), M.extended_config_direct());
  } catch (const PreconditionError &e) {
    r.checks.push_back({"phi", "info", e.what()});
  }
}

void verify_eta(Report &r, const GaugeModel &M) {
  auto et = M.eta_theta();
  chain_map_checks(r, "eta", et.eta);
  r.checks.push_back({"theta is a chain map", pass_fail(verify_chain_map(et.theta)), ""});
  identity_check(r, "theta eta = id", compose(et.theta, et.eta), et.eta.source);
  homotopy_check(r, "eta theta - id = delta h + h delta", et.h);
}

void verify_zeta(Report &r, const GaugeModel &M) {
  auto zk = M.zeta_kappa();
  chain_map_checks(r, "zeta", zk.zeta);
  r.checks.push_back({"kappa is a chain map", pass_fail(verify_chain_map(zk.kappa)), ""});
  identity_check(r, "zeta kappa = id", compose(zk.zeta, zk.kappa), zk.kappa.source);
  homotopy_check(r, "kappa zeta - id = delta k + k delta", zk.k);
}

std::vector<Int> random_element(std::mt19937_64 &rng, const FgAbGroup &g) {
  std::vector<Int> x(g.gens());
  for (int i = 0; i < g.gens(); ++i) x[i] = Int(static_cast<long long>(rng() % static_cast<std::uint64_t>(g.order_of(i).small())));
  return x;
}

void verify_pairing(Report &r, const GaugeModel &M, const RunConfig &cfg) {
  const ChainComplex &E = M.extended_config_direct(), &O = M.extended_obs_direct();
  Realization re = E.realization(0);
  std::mt19937_64 rng(cfg.seed);

  // every (generator, configuration) pair when few enough, a seeded sample of pairs otherwise
  auto rels = M.relation_generators();
  long double count = static_cast<long double>(rels.size());
  for (const auto &o : E.group(0).orders()) count *= static_cast<long double>(o.small());
  bool exhaustive = count <= static_cast<long double>(cfg.budget);
  std::string witness;
  std::uint64_t tested = 0;
  auto test = [&](const std::vector<Int> &rel, const std::vector<Int> &B) {
    ++tested;
    PairingValue v = M.pairing({0, rel}, {0, B});
    if (!v.is_zero())
      witness = "relation " + describe(O.realization(0).ambient, rel) + " pairs to " + v.str() + " with " +
                describe(re.ambient, B);
    return v.is_zero();
  };
  if (exhaustive) {
    auto orders = E.group(0).orders();
    std::vector<Int> x(orders.size(), Int(0));
    while (witness.empty()) {
      auto B = re.to_ambient(x);
      for (const auto &rel : rels)
        if (!test(rel, B)) break;
      std::size_t i = 0;
      while (i < x.size()) {
        x[i] += Int(1);
        if (x[i] < orders[i]) break;
        x[i++] = Int(0);
      }
      if (i == x.size()) break;
    }
  } else {
    std::uint64_t n = std::max<std::uint64_t>(cfg.samples, 1000);
    for (std::uint64_t s = 0; s < n && !rels.empty(); ++s) {
      const auto &rel = rels[rng() % rels.size()];
      if (!test(rel, re.to_ambient(random_element(rng, E.group(0))))) break;
    }
  }
  r.checks.push_back({"relation generators pair to zero", pass_fail(witness.empty()),
                      witness.empty() ? std::to_string(tested) + (exhaustive ? " pairs (exhaustive)" : " sampled pairs")
                                      : witness});

  // <delta* F, g> = <F, delta g> on random pairs
  auto proj = O.realization(0).quot->projection;
  int q = static_cast<int>(M.coeff().q.small());
  std::string bad;
  const int pairs = 50;
  for (int t = 0; t < pairs && bad.empty(); ++t) {
    std::vector<Int> F(M.obs_ambient0()), g(M.config_ambient1());
    for (auto &x : F) x = Int(static_cast<long long>(rng() % q));
    for (auto &x : g) x = Int(static_cast<long long>(rng() % q));
    auto dF = O.diff(0).apply(proj.apply(F));
    auto dB = re.to_ambient(E.diff(1).apply(g));
    PairingValue lhs = M.pairing({-1, dF}, {1, g}), rhs = M.pairing({0, F}, {0, dB});
    if (!(lhs == rhs)) bad = "observable " + describe(O.realization(0).ambient, F) + ": " + lhs.str() + " vs " + rhs.str();
  }
  r.checks.push_back({"adjunction <delta* F, B> = <F, delta B>", pass_fail(bad.empty()),
                      bad.empty() ? std::to_string(pairs) + " random pairs" : bad});
}

void verify_separation(Report &r, const GaugeModel &M, const RunConfig &cfg) {
  SeparationOptions opt;
  opt.budget = cfg.budget;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  auto rep = M.separation_check(opt);
  std::string result = rep.status == SeparationReport::Status::separated       ? "pass"
                       : rep.status == SeparationReport::Status::not_separated ? "fail"
                                                                               : "inconclusive";
  std::string detail = rep.detail;
  if (rep.tested) detail += ", " + std::to_string(rep.tested) + " configurations tested";
  r.checks.push_back({"every nonzero configuration is separated", result, detail});
  // one witness per degree keeps the report short
  const ChainComplex &E = M.extended_config_direct();
  for (int d : {0, 1})
    for (const auto &w : rep.witnesses)
      if (w.degree == d) {
        Realization re = E.realization(d);
        r.checks.push_back({"witness in degree " + std::to_string(d), "info",
                            describe(re.ambient, re.to_ambient(w.config)) + " pairs to " + w.value.str() +
                                " with observable generator " + std::to_string(w.observable)});
        break;
      }
}

ChainComplex homology_target(const GaugeModel &M, const std::string &which) {
  if (which == "local") return local_config_complex(Subcomplex::full(M.complex()), M.coeff());
  if (which == "local-obs") return local_obs_complex(Subcomplex::full(M.complex()), M.coeff());
  if (which == "ext-config") return M.extended_config();
  if (which == "ext-obs") return M.extended_obs();
  if (which == "deligne") return M.deligne();
  throw CLI::ValidationError("--complex", "unknown complex " + which);
}

} // namespace

Report run(const RunConfig &cfg) {
  Report r;
  r.command = cfg.command;
  r.input = cfg.input;
  r.seed = cfg.seed;
  r.budget = cfg.budget;
  CoeffGroup G = CoeffGroup::parse(cfg.coeff);
  r.coeff = G.str();
  ComplexPtr K = SimplicialComplex::load(cfg.input);

  if (cfg.command == "constant-sheaf") {
    r.target = "degree " + std::to_string(cfg.degree);
    auto P = StarPoset::build(K);
    auto shape = std::make_shared<FinitePoset>(FinitePoset::from_stars(P));
    auto h = homology(holim(constant_diagram(shape, Variance::contravariant, G.group(1), cfg.degree)));
    auto coh = simplicial_cohomology(Subcomplex::full(K), G);
    bool match = true;
    int lo = std::min(0, h.empty() ? 0 : h.begin()->first), hi = std::max(cfg.degree, h.empty() ? 0 : h.rbegin()->first);
    for (int k = lo; k <= hi; ++k) {
      FgAbGroup got = h.count(k) ? h.at(k) : FgAbGroup();
      FgAbGroup want = coh.count(cfg.degree - k) ? coh.at(cfg.degree - k) : FgAbGroup();
      r.homology.push_back({k, got.str(), want.str()});
      match &= got == want;
    }
    r.checks.push_back({"H_k of the homotopy limit equals H^(n-k) of the complex", pass_fail(match), ""});
    finish(r);
    return r;
  }

  GaugeModel M(K, G);
  if (cfg.command == "homology") {
    r.target = cfg.which;
    add_homology(r, homology_target(M, cfg.which));
    r.status = "ok";
    return r;
  }
  if (cfg.command == "verify") {
    r.target = cfg.suite;
    if (cfg.suite == "engine-vs-hand") verify_engine(r, M);
    else if (cfg.suite == "deligne-compare") verify_deligne(r, M);
    else if (cfg.suite == "eta") verify_eta(r, M);
    else if (cfg.suite == "zeta") verify_zeta(r, M);
    else if (cfg.suite == "pairing") verify_pairing(r, M, cfg);
    else if (cfg.suite == "separation") verify_separation(r, M, cfg);
    else throw CLI::ValidationError("--suite", "unknown suite " + cfg.suite);
    finish(r);
    return r;
  }
  throw CLI::ValidationError("command", "unknown command " + cfg.command);
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Discrete abelian gauge theory on simplicial complexes"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App *sub) {
    sub->add_option("--input", cfg.input, "complex file, one maximal simplex per line")->required();
    sub->add_option("--coeff", cfg.coeff, "Z or Z/q")->capture_default_str();
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--budget", cfg.budget, "largest configuration count searched exhaustively")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "random configurations when the budget is exceeded")->capture_default_str();
  };
  auto *hom = app.add_subcommand("homology", "homology of a local or extended complex");
  common(hom);
  hom->add_option("--complex,--which", cfg.which, "local, local-obs, ext-config, ext-obs or deligne")
      ->check(CLI::IsMember({"local", "local-obs", "ext-config", "ext-obs", "deligne"}))
      ->capture_default_str();
  auto *ver = app.add_subcommand("verify", "run a verification suite");
  common(ver);
  ver->add_option("--suite", cfg.suite, "engine-vs-hand, deligne-compare, eta, zeta, pairing or separation")
      ->check(CLI::IsMember({"engine-vs-hand", "deligne-compare", "eta", "zeta", "pairing", "separation"}))
      ->required();
  auto *cs = app.add_subcommand("constant-sheaf", "homotopy limit of a constant diagram against simplicial cohomology");
  common(cs);
  cs->add_option("--degree", cfg.degree, "place the coefficients in this degree")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    Report r = run(cfg);
    out << (cfg.format == "json" ? render_json(r) : render_text(r));
    return exit_code(r);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

} // namespace artifact::cli
