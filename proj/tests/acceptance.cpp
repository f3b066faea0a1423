// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "artifact/gauge.hpp"
#include "cech_oracle.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace artifact;

namespace {

std::string data(const std::string &name) { return std::string(ARTIFACT_DATA_DIR) + "/" + name; }

// first failure wins; later checks still run but do not overwrite it
struct Tally {
  std::string failure;
  int checks = 0;
  void expect(bool ok, const std::string &what) {
    ++checks;
    if (!ok && failure.empty()) failure = what;
  }
};

struct Named {
  std::string name;
  ComplexPtr K;
};

std::vector<Named> complexes(std::initializer_list<const char *> names) {
  std::vector<Named> out;
  for (const char *n : names) out.push_back({n, SimplicialComplex::load(data(std::string(n) + ".txt"))});
  return out;
}

FgAbGroup hom_at(const std::map<int, FgAbGroup> &h, int n) { return h.count(n) ? h.at(n) : FgAbGroup(); }

std::vector<Int> random_element(std::mt19937_64 &rng, const FgAbGroup &g) {
  std::vector<Int> x(g.gens());
  for (int i = 0; i < g.gens(); ++i) x[i] = Int(static_cast<long long>(rng() % static_cast<std::uint64_t>(g.order_of(i).small())));
  return x;
}

std::vector<Int> random_vector(std::mt19937_64 &rng, int n, long long q) {
  std::vector<Int> x(n);
  for (auto &v : x) v = Int(static_cast<long long>(rng() % static_cast<std::uint64_t>(q)));
  return x;
}

bool is_identity(const ChainMap &f, const ChainComplex &c) {
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (!(f.at(n) == GroupHom::identity(c.group(n)))) return false;
  return true;
}

std::string tag(const std::string &K, const CoeffGroup &G) { return K + " with " + G.str(); }

// ---------------------------------------------------------------- 1

void moore_nerve(Tally &t) {
  for (long long n : {2LL, 3LL}) {
    FgAbGroup Zn = FgAbGroup::cyclic(Int(n));
    for (long long k = 0; k < n; ++k) {
      GroupHom tau(Zn, Zn, Matrix::from_dense({{k}}));
      std::string where = "Z/" + std::to_string(n) + ", tau(1) = " + std::to_string(k);
      SimplicialGroup S = action_groupoid_nerve(Zn, Zn, tau, 3);
      std::string why;
      t.expect(S.check_identities(&why), where + ": simplicial identities: " + why);
      // faces on every element of G^2 x X: d0 drops g1, d1 adds, d2 acts on A
      oracle::for_each_element({n, n, n}, [&](const std::vector<Int> &x) {
        t.expect(S.faces[2][0].apply(x) == std::vector<Int>{x[1], x[2]}, where + ": d0");
        t.expect(S.faces[2][1].apply(x) == std::vector<Int>{mod(x[0] + x[1], Int(n)), x[2]}, where + ": d1");
        t.expect(S.faces[2][2].apply(x) == std::vector<Int>{x[0], mod(x[2] + Int(k) * x[1], Int(n))}, where + ": d2");
      });
      ChainComplex N = normalized_moore(S);
      for (int d = 2; d <= 3; ++d) t.expect(N.group(d).is_trivial(), where + ": degree " + std::to_string(d) + " is not zero");
      t.expect(N.group(0) == Zn && N.group(1) == Zn, where + ": degrees 0 and 1 are not G and X");
      Realization r1 = N.realization(1), r0 = N.realization(0);
      for (long long g = 0; g < n; ++g) {
        auto cls = r1.from_ambient({Int(g), Int(0)});
        auto img = r0.to_ambient(N.diff(1).apply(cls));
        t.expect(mod(img[0], Int(n)) == mod(Int(-k * g), Int(n)), where + ": differential is not g -> -tau(g)");
      }
    }
  }
}

// ---------------------------------------------------------------- 2

void product_identities(Tally &t) {
  for (const auto &[name, K] : complexes({"path", "sphere2"})) {
    auto P = StarPoset::build(K);
    for (long long q : {0LL, 2LL}) {
      CoeffGroup G = q ? CoeffGroup::cyclic(q) : CoeffGroup::Z();
      std::string why;
      t.expect(check_chain_product_identity(config_diagram(P, G), 3, &why), tag(name, G) + ": chain product: " + why);
      if (q) t.expect(check_chain_coproduct_identity(obs_diagram(P, G), 3, &why), tag(name, G) + ": chain coproduct: " + why);
    }
  }
}

// ---------------------------------------------------------------- 3

void constant_diagrams(Tally &t) {
  auto run = [&](const std::string &name, const ComplexPtr &K, const CoeffGroup &G, const std::vector<FgAbGroup> &expect) {
    auto P = StarPoset::build(K);
    auto shape = std::make_shared<FinitePoset>(FinitePoset::from_stars(P));
    auto h = homology(holim(constant_diagram(shape, Variance::contravariant, G.group(1), 2)));
    auto coh = simplicial_cohomology(Subcomplex::full(K), G);
    for (int k = 0; k <= 2; ++k) {
      t.expect(hom_at(h, k) == expect[k], tag(name, G) + ": H_" + std::to_string(k) + " = " + hom_at(h, k).str());
      t.expect(hom_at(h, k) == hom_at(coh, 2 - k), tag(name, G) + ": H_" + std::to_string(k) + " differs from cohomology");
    }
    for (const auto &[n, g] : h) t.expect(n <= 2 && n >= 0 ? true : g.is_trivial(), tag(name, G) + ": stray degree");
  };
  auto S = SimplicialComplex::load(data("sphere2.txt"));
  run("sphere2", S, CoeffGroup::Z(), {FgAbGroup::free(1), FgAbGroup(), FgAbGroup::free(1)});
  for (long long q : {2LL, 3LL, 6LL}) {
    FgAbGroup Zq = FgAbGroup::cyclic(Int(q));
    run("sphere2", S, CoeffGroup::cyclic(q), {Zq, FgAbGroup(), Zq});
  }
  run("torus7", SimplicialComplex::load(data("torus7.txt")), CoeffGroup::Z(),
      {FgAbGroup::free(1), FgAbGroup::free(2), FgAbGroup::free(1)});
}

// ---------------------------------------------------------------- 4

void engine_vs_hand(Tally &t) {
  for (const auto &[name, K] : complexes({"edge", "path", "simplex2", "sphere2", "torus7"}))
    for (long long q : {2LL, 6LL}) {
      GaugeModel M(K, CoeffGroup::cyclic(q));
      auto c = M.config_engine_iso();
      t.expect(c.ok, tag(name, M.coeff()) + ": configurations: " + c.why);
      auto o = M.obs_engine_iso();
      t.expect(o.ok, tag(name, M.coeff()) + ": observables: " + o.why);
    }
}

// ---------------------------------------------------------------- 5

std::vector<oracle::Cell> all_simplices(const ComplexPtr &K) {
  std::vector<oracle::Cell> out;
  for (int k = 0; k <= K->dim(); ++k)
    for (const auto &s : K->simplices(k)) out.push_back(s);
  return out;
}

void deligne_comparison(Tally &t) {
  for (const auto &[name, K] : complexes({"sphere2", "torus7"}))
    for (long long p : {2LL, 3LL}) {
      GaugeModel M(K, CoeffGroup::cyclic(p));
      std::string where = tag(name, M.coeff());
      ChainMap psi = M.psi();
      std::string why;
      t.expect(verify_chain_map(psi, &why), where + ": psi is not a chain map: " + why);
      t.expect(quasi_iso_check(psi), where + ": psi is not a quasi-isomorphism");
      auto dims = oracle::cech_deligne(all_simplices(K), p);
      auto he = homology(M.extended_config()), hd = homology(M.deligne());
      FgAbGroup h1 = FgAbGroup::homogeneous(dims.h0, Int(p)), h0 = FgAbGroup::homogeneous(dims.h1, Int(p));
      t.expect(hom_at(he, 1) == h1 && hom_at(hd, 1) == h1, where + ": H_1 differs from the Cech-Deligne oracle");
      t.expect(hom_at(he, 0) == h0 && hom_at(hd, 0) == h0, where + ": H_0 differs from the Cech-Deligne oracle");
    }
  for (const auto &[name, K] : complexes({"simplex2", "simplex3"}))
    for (long long p : {2LL, 3LL}) {
      GaugeModel M(K, CoeffGroup::cyclic(p));
      ChainMap psi = M.psi(), phi = M.phi();
      t.expect(is_identity(compose(phi, psi), M.deligne()), tag(name, M.coeff()) + ": phi psi != id");
      t.expect(is_identity(compose(psi, phi), M.extended_config_direct()), tag(name, M.coeff()) + ": psi phi != id");
    }
}

// ---------------------------------------------------------------- 6

void extension_maps(Tally &t) {
  for (const auto &[name, K] : complexes({"simplex2", "simplex3"}))
    for (long long q : {2LL, 6LL}) {
      GaugeModel M(K, CoeffGroup::cyclic(q));
      std::string where = tag(name, M.coeff()), why;
      auto et = M.eta_theta();
      t.expect(is_identity(compose(et.theta, et.eta), et.eta.source), where + ": theta eta != id");
      t.expect(verify_homotopy(et.h, &why), where + ": eta theta - id != delta h + h delta: " + why);
      t.expect(quasi_iso_check(et.eta), where + ": eta is not a quasi-isomorphism");
      auto zk = M.zeta_kappa();
      t.expect(is_identity(compose(zk.zeta, zk.kappa), zk.kappa.source), where + ": zeta kappa != id");
      t.expect(verify_homotopy(zk.k, &why), where + ": kappa zeta - id != delta k + k delta: " + why);
      t.expect(quasi_iso_check(zk.zeta), where + ": zeta is not a quasi-isomorphism");
    }
}

// ---------------------------------------------------------------- 7

void global_constants(Tally &t) {
  for (const auto &[name, K] : complexes({"edge", "path", "simplex2", "simplex3", "sphere2", "torus7"}))
    for (long long q : {2LL, 3LL, 6LL}) {
      GaugeModel M(K, CoeffGroup::cyclic(q));
      FgAbGroup h = hom_at(homology(M.extended_config()), 1);
      t.expect(h == FgAbGroup::cyclic(Int(q)), tag(name, M.coeff()) + ": H_1 = " + h.str());
    }
}

// ---------------------------------------------------------------- 8

void pairing_suite(Tally &t) {
  CoeffGroup Z2 = CoeffGroup::cyclic(2);
  std::mt19937_64 rng(2024);
  auto adjunction = [&](const GaugeModel &M, const std::string &name, int pairs) {
    const ChainComplex &E = M.extended_config_direct(), &O = M.extended_obs_direct();
    auto proj = O.realization(0).quot->projection;
    for (int i = 0; i < pairs; ++i) {
      auto F = random_vector(rng, M.obs_ambient0(), 2);
      auto g = random_vector(rng, M.config_ambient1(), 2);
      auto dF = O.diff(0).apply(proj.apply(F));
      auto dB = E.realization(0).to_ambient(E.diff(1).apply(g));
      t.expect(M.pairing({-1, dF}, {1, g}) == M.pairing({0, F}, {0, dB}), name + ": adjunction fails");
    }
  };
  for (const auto &[name, K] : complexes({"edge", "path"})) {
    GaugeModel M(K, Z2);
    const ChainComplex &E = M.extended_config_direct();
    std::vector<long long> orders;
    for (const auto &o : E.group(0).orders()) orders.push_back(o.small());
    auto rels = M.relation_generators();
    oracle::for_each_element(orders, [&](const std::vector<Int> &x) {
      auto B = E.realization(0).to_ambient(x);
      for (const auto &rel : rels) t.expect(M.pairing({0, rel}, {0, B}).is_zero(), name + ": relation pairs nontrivially");
    });
    adjunction(M, name, 50);
    auto rep = M.separation_check({});
    t.expect(rep.status == SeparationReport::Status::separated && rep.exhaustive, name + ": not separated (exhaustive)");
  }

  auto S = SimplicialComplex::load(data("sphere2.txt"));
  GaugeModel M(S, Z2);
  const ChainComplex &E = M.extended_config_direct(), &O = M.extended_obs_direct();
  auto rels = M.relation_generators();
  for (int i = 0; i < 1000; ++i) {
    auto B = E.realization(0).to_ambient(random_element(rng, E.group(0)));
    t.expect(M.pairing({0, rels[rng() % rels.size()]}, {0, B}).is_zero(), "sphere2: relation pairs nontrivially");
  }
  adjunction(M, "sphere2", 1000);

  // naturality under every vertex permutation
  std::vector<int> perm = {0, 1, 2, 3};
  do {
    auto f = SimplicialIso::make(S, S, perm);
    auto pp = pushpull_functoriality(f, M, M);
    t.expect(verify_chain_map(pp.pull) && verify_chain_map(pp.push), "sphere2: pullback or pushforward is not a chain map");
    for (int i = 0; i < 50; ++i) {
      auto F = random_vector(rng, M.obs_ambient0(), 2);
      auto Bc = random_element(rng, E.group(0));
      auto B = E.realization(0).to_ambient(Bc);
      auto pulled = E.realization(0).to_ambient(pp.pull.at(0).apply(Bc));
      auto pushed = pp.push_ambient.at(0).apply(F);
      t.expect(M.pairing({0, F}, {0, pulled}) == M.pairing({0, pushed}, {0, B}), "sphere2: naturality square fails");
      auto g = random_vector(rng, M.config_ambient1(), 2);
      auto chi = random_vector(rng, M.obs_ambient_m1(), 2);
      t.expect(M.pairing({-1, chi}, {1, pp.pull.at(1).apply(g)}) == M.pairing({-1, pp.push.at(-1).apply(chi)}, {1, g}),
               "sphere2: naturality square fails in degree 1");
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  SeparationOptions opt;
  opt.samples = 1000;
  opt.seed = 17;
  auto rep = M.separation_check(opt);
  t.expect(rep.status == SeparationReport::Status::separated, "sphere2: not separated: " + rep.detail);
  t.expect(rep.tested >= 1000 && rep.witnesses.size() == rep.tested, "sphere2: witnesses missing");
  Matrix sec = O.realization(0).quot->section;
  for (const auto &w : rep.witnesses) {
    PairingValue v;
    if (w.degree == 0) {
      std::vector<Int> F(sec.rows());
      for (const auto &[r, x] : sec.column(w.observable)) F[r] = x;
      v = M.pairing({0, F}, {0, E.realization(0).to_ambient(w.config)});
    } else {
      std::vector<Int> F(M.obs_ambient_m1());
      F[w.observable] = Int(1);
      v = M.pairing({-1, F}, {1, w.config});
    }
    t.expect(!v.is_zero() && v == w.value, "sphere2: recorded witness does not separate");
  }
}

// ---------------------------------------------------------------- 9

bool diagonal_chain(const Matrix &S) {
  for (int i = 0; i < S.rows(); ++i)
    for (const auto &[j, v] : S.row(i))
      if (i != j || v.sign() < 0) return false;
  Int prev(1);
  for (int k = 0; k < std::min(S.rows(), S.cols()); ++k) {
    Int s = S.get(k, k);
    if (!s.is_zero() && (prev.is_zero() || !(s % prev).is_zero())) return false;
    prev = s;
  }
  return true;
}

oracle::Dense dense(const Matrix &m) {
  oracle::Dense d(m.rows(), std::vector<long long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (const auto &[j, v] : m.row(i)) d[i][j] = v.small();
  return d;
}

void structural(Tally &t) {
  for (const auto &[name, K] : complexes({"edge", "path", "simplex2", "simplex3", "sphere2", "torus7"})) {
    auto P = StarPoset::build(K);
    for (int i = 0; i < P.size(); ++i) t.expect(is_acyclic(P.object(i)), name + ": star " + P.name(i) + " is not acyclic");
    for (long long q : {0LL, 2LL, 6LL}) {
      CoeffGroup G = q ? CoeffGroup::cyclic(q) : CoeffGroup::Z();
      std::string where = tag(name, G), why;
      t.expect(verify_diagram(config_diagram(P, G), &why), where + ": configuration diagram: " + why);
      GaugeModel M(K, G);
      std::vector<std::pair<std::string, const ChainComplex *>> built = {
          {"extended configurations", &M.extended_config()},
          {"hand-built configurations", &M.extended_config_direct()},
          {"Deligne complex", &M.deligne()}};
      ChainComplex local = local_config_complex(Subcomplex::full(K), G);
      built.push_back({"local configurations", &local});
      ChainComplex cochains = cochain_complex(Subcomplex::full(K), G);
      built.push_back({"cochains", &cochains});
      if (q) {
        t.expect(verify_diagram(obs_diagram(P, G), &why), where + ": observable diagram: " + why);
        built.push_back({"extended observables", &M.extended_obs()});
        built.push_back({"hand-built observables", &M.extended_obs_direct()});
      }
      ChainComplex lobs = q ? local_obs_complex(Subcomplex::full(K), G) : ChainComplex();
      if (q) built.push_back({"local observables", &lobs});
      for (const auto &[what, c] : built) t.expect(c->is_complex(), where + ": " + what + " has delta delta != 0");
    }
  }
  std::mt19937_64 rng(99);
  for (int it = 0; it < 10000; ++it) {
    int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    auto d = oracle::random_dense(rng, rows, cols, -9, 9);
    Matrix m = Matrix::from_dense(d, cols);
    auto r = smith_normal_form(m);
    bool ok = r.U * m * r.V == r.S && diagonal_chain(r.S);
    ok = ok && std::llabs(oracle::det(dense(r.U))) == 1 && std::llabs(oracle::det(dense(r.V))) == 1;
    auto inv = oracle::smith_invariants(d);
    ok = ok && inv.size() == r.diagonal.size();
    for (std::size_t k = 0; ok && k < inv.size(); ++k) ok = r.diagonal[k] == Int(inv[k]);
    t.expect(ok, "Smith normal form fails on " + m.str());
  }
}

} // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Tally &)> run;
    double limit; // seconds
  };
  std::vector<Criterion> all = {
      {1, "Moore complex of the action groupoid nerve", moore_nerve, 1},
      {2, "normalized Moore complexes match strict chain (co)products", product_identities, 10},
      {3, "constant diagrams compute simplicial cohomology", constant_diagrams, 60},
      {4, "engine and hand-built extended complexes are isomorphic", engine_vs_hand, 300},
      {5, "Deligne comparison", deligne_comparison, 300},
      {6, "extension quasi-isomorphisms", extension_maps, 30},
      {7, "global constants", global_constants, 300},
      {8, "pairing, naturality and separation", pairing_suite, 120},
      {9, "structural invariants", structural, 60},
  };
  int failed = 0;
  for (const auto &c : all) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception &e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) t.expect(false, "runtime over the " + std::to_string(static_cast<int>(c.limit)) + " s limit");
    bool ok = t.failure.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.checks << " checks, "
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!ok) std::cout << " -- " << t.failure;
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
