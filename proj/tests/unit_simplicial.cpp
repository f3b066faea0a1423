#include "artifact/simplicial.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace artifact;

namespace {
ComplexPtr make(const std::string &text) {
  std::istringstream in(text);
  return SimplicialComplex::parse(in);
}

const char *sphere = "0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
const char *torus = "0 1 3\n0 1 5\n0 2 3\n0 2 6\n0 4 5\n0 4 6\n1 2 4\n1 2 6\n1 3 4\n1 5 6\n2 3 5\n2 4 5\n3 4 6\n3 5 6\n";

// independent star oracle on label sets
using LSet = std::set<std::string>;
std::set<std::set<LSet>> oracle_stars(const std::vector<LSet> &maximal) {
  std::set<LSet> all;
  for (const auto &m : maximal) {
    std::vector<std::string> v(m.begin(), m.end());
    for (unsigned mask = 1; mask < (1u << v.size()); ++mask) {
      LSet f;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) f.insert(v[i]);
      all.insert(f);
    }
  }
  std::set<std::set<LSet>> stars;
  for (const auto &s : all) {
    std::set<LSet> star;
    for (const auto &t : all) {
      for (const auto &r : all)
        if (std::includes(r.begin(), r.end(), s.begin(), s.end()) && std::includes(r.begin(), r.end(), t.begin(), t.end())) {
          star.insert(t);
          break;
        }
    }
    stars.insert(star);
  }
  return stars;
}

std::set<LSet> as_lsets(const Subcomplex &B) {
  std::set<LSet> out;
  const auto &K = *B.complex();
  for (int k = 0; k <= B.dim(); ++k)
    for (int i : B.indices(k)) {
      LSet s;
      for (int v : K.simplex(k, i)) s.insert(K.vertex_label(v));
      out.insert(s);
    }
  return out;
}

oracle::Dense dense(const Matrix &m) {
  oracle::Dense d(m.rows(), std::vector<long long>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto &[c, v] : m.row(r)) d[r][c] = v.small();
  return d;
}
} // namespace

TEST_CASE("complex file parsing") {
  auto K = make("# comment\n\n  b a\n");
  CHECK(K->num_vertices() == 2);
  CHECK(K->dim() == 1);
  CHECK(K->vertex_label(0) == "a");
  CHECK_THROWS_AS(make("# nothing\n"), ParseError);
  CHECK_THROWS_AS(make("a a b\n"), ParseError);
  auto N = make("10 9\n9 2\n");
  CHECK(N->vertex_label(0) == "2");
  CHECK(N->vertex_label(2) == "10");
  auto S = make(sphere);
  CHECK(S->count(0) == 4);
  CHECK(S->count(1) == 6);
  CHECK(S->count(2) == 4);
}

TEST_CASE("closed stars") {
  auto E = make("v w\n");
  CHECK(closed_star(E, {0}).sub == Subcomplex::full(E));
  auto S = make(sphere);
  auto tri = closed_star(S, {0, 1, 2});
  CHECK(tri.sub.size() == 7);
  for (int k = 0; k <= S->dim(); ++k)
    for (const auto &s : S->simplices(k)) CHECK(is_acyclic(closed_star(S, s).sub));
  CHECK_THROWS_AS(closed_star(E, {0, 1, 2}), StructuralError);
  CHECK(!is_acyclic(Subcomplex::full(S)));
}

TEST_CASE("star posets") {
  auto E = make("v w\n");
  CHECK(StarPoset::build(E).size() == 1);
  CHECK(StarPoset::build(E).centers(0).size() == 3);

  auto P = StarPoset::build(make("v w\nw x\n"));
  // star of v is the closure of vw, so it merges with the star of vw
  CHECK(P.size() == 3);
  int whole = P.top();
  REQUIRE(whole >= 0);
  CHECK(P.name(whole) == "U[w]");
  for (int i = 0; i < P.size(); ++i) CHECK(P.leq(i, whole));
  CHECK(P.chains(0).size() == 3);
  CHECK(P.chains(1).size() == 2);
  CHECK(P.hasse().size() == 2);

  CHECK(StarPoset::build(make(sphere)).size() == 14);
}

TEST_CASE("star poset matches the label-set oracle") {
  for (const char *text : {"v w\nw x\n", "0 1 2\n2 3\n3 4 5\n", sphere, torus, "a b c d\nc d e\n"}) {
    auto K = make(text);
    std::vector<LSet> maximal;
    for (const auto &m : K->maximal_labels()) maximal.emplace_back(m.begin(), m.end());
    auto expect = oracle_stars(maximal);
    auto P = StarPoset::build(K);
    std::set<std::set<LSet>> got;
    for (int i = 0; i < P.size(); ++i) got.insert(as_lsets(P.object(i)));
    CHECK(got == expect);
    CHECK(static_cast<int>(got.size()) == P.size());

    // partial order axioms, chains are strict, hasse pairs are covers
    for (int a = 0; a < P.size(); ++a)
      for (int b = 0; b < P.size(); ++b) {
        if (a != b) CHECK(!(P.leq(a, b) && P.leq(b, a)));
        for (int c = 0; c < P.size(); ++c)
          if (P.leq(a, b) && P.leq(b, c)) CHECK(P.leq(a, c));
      }
    for (const auto &ch : P.chains(2))
      for (std::size_t i = 0; i + 1 < ch.size(); ++i) CHECK(P.less(ch[i], ch[i + 1]));
    std::size_t pairs = 0;
    for (int a = 0; a < P.size(); ++a)
      for (int b = 0; b < P.size(); ++b) pairs += P.less(a, b);
    CHECK(P.chains(1).size() == pairs);

    // stars cover K
    std::set<LSet> uni;
    for (int i = 0; i < P.size(); ++i)
      for (const auto &s : as_lsets(P.object(i))) uni.insert(s);
    CHECK(uni == as_lsets(Subcomplex::full(K)));
    for (int i = 0; i < P.size(); ++i) CHECK(is_acyclic(P.object(i)));
  }
}

TEST_CASE("boundary and coboundary conventions") {
  auto E = make("v w\n");
  auto B = Subcomplex::full(E);
  CoeffGroup Z;
  CHECK(boundary(B, 1, Z).apply({Int(1)}) == std::vector<Int>{Int(-1), Int(1)});
  CHECK(coboundary(B, 0, Z).apply({Int(5), Int(7)}) == std::vector<Int>{Int(2)});

  auto S = Subcomplex::full(make(sphere));
  CoeffGroup Z6 = CoeffGroup::cyclic(6);
  CHECK(compose(coboundary(S, 1, Z6), coboundary(S, 0, Z6)).is_zero());
  CHECK(compose(boundary(S, 1, Z), boundary(S, 2, Z)).is_zero());
  CHECK(boundary(S, 2, Z).matrix() == coboundary(S, 1, Z).matrix().transpose());
}

TEST_CASE("simplicial cohomology agrees with rank oracle") {
  for (auto [text, b0, b1, b2] : std::vector<std::tuple<const char *, int, int, int>>{{sphere, 1, 0, 1}, {torus, 1, 2, 1}}) {
    auto B = Subcomplex::full(make(text));
    int n0 = B.count(0), n1 = B.count(1), n2 = B.count(2);
    int r1 = oracle::rank_mod_p(dense(coboundary(B, 0, CoeffGroup::Z()).matrix()));
    int r2 = oracle::rank_mod_p(dense(coboundary(B, 1, CoeffGroup::Z()).matrix()));
    CHECK(n0 - r1 == b0);
    CHECK(n1 - r1 - r2 == b1);
    CHECK(n2 - r2 == b2);
    auto h = simplicial_cohomology(B, CoeffGroup::Z());
    CHECK(h.at(0) == FgAbGroup::free(b0));
    CHECK(h.at(1) == FgAbGroup::free(b1));
    CHECK(h.at(2) == FgAbGroup::free(b2));
    auto h5 = simplicial_cohomology(B, CoeffGroup::cyclic(5));
    CHECK(h5.at(1) == FgAbGroup::homogeneous(b1, Int(5)));
  }
}

TEST_CASE("restriction and extension") {
  auto K = make("0 1 2\n2 3\n");
  auto full = Subcomplex::full(K);
  auto mid = Subcomplex(K, {{0, 1, 2}});
  auto small = Subcomplex(K, {{1, 2}});
  CoeffGroup Z;
  for (int k = 0; k <= 1; ++k) {
    auto e1 = extend_by_zero(small, mid, k, Z), e2 = extend_by_zero(mid, full, k, Z);
    CHECK(compose(e2, e1) == extend_by_zero(small, full, k, Z));
    auto r1 = restrict_cochains(full, mid, k, Z), r2 = restrict_cochains(mid, small, k, Z);
    CHECK(compose(r2, r1) == restrict_cochains(full, small, k, Z));
    CHECK(compose(restrict_cochains(full, small, k, Z), extend_by_zero(small, full, k, Z)) == GroupHom::identity(cochain_group(small, k, Z)));
    CHECK(extend_by_zero(small, full, k, Z).apply(std::vector<Int>(small.count(k))) == std::vector<Int>(full.count(k)));
  }
  // restriction commutes with d
  CHECK(compose(coboundary(small, 0, Z), restrict_cochains(full, small, 0, Z)) ==
        compose(restrict_cochains(full, small, 1, Z), coboundary(full, 0, Z)));
  CHECK_THROWS_AS(extend_by_zero(full, small, 0, Z), StructuralError);
}

TEST_CASE("simplicial isomorphisms") {
  auto K = make(torus);
  auto f = SimplicialIso::make(K, K, {1, 2, 3, 4, 5, 6, 0});
  auto P = StarPoset::build(K);
  for (int i = 0; i < P.size(); ++i) CHECK(P.find(f.apply(P.object(i))) >= 0);
  CHECK(compose(f.inverse(), f).vertex_map == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(SimplicialIso::make(K, K, {1, 0, 2, 3, 4, 5, 6}), StructuralError);
  CHECK(f.orientation({0, 6}) == -1);
  CHECK(f.orientation({0, 1}) == 1);
}
