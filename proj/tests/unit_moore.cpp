#include "artifact/moore.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace artifact;

namespace {
SimplicialGroup constant_simplicial(const FgAbGroup &A, int N) {
  SimplicialGroup s;
  s.levels.assign(N + 1, A);
  s.faces.resize(N + 1);
  s.degeneracies.resize(N + 1);
  for (int n = 1; n <= N; ++n) s.faces[n].assign(n + 1, GroupHom::identity(A));
  for (int n = 0; n < N; ++n) s.degeneracies[n].assign(n + 1, GroupHom::identity(A));
  s.degenerate_above = true;
  return s;
}

GroupHom transpose(const GroupHom &f) { return GroupHom(f.target(), f.source(), f.matrix().transpose()); }

// Hom(S, Z) for a simplicial group with free levels
CosimplicialGroup dual(const SimplicialGroup &s) {
  CosimplicialGroup c;
  c.levels = s.levels;
  c.cofaces.resize(s.faces.size());
  c.codegeneracies.resize(s.degeneracies.size());
  for (std::size_t n = 0; n < s.faces.size(); ++n)
    for (const auto &f : s.faces[n]) c.cofaces[n].push_back(transpose(f));
  for (std::size_t n = 0; n < s.degeneracies.size(); ++n)
    for (const auto &f : s.degeneracies[n]) c.codegeneracies[n].push_back(transpose(f));
  c.degenerate_above = true;
  return c;
}

std::map<int, FgAbGroup> nontrivial(const std::map<int, FgAbGroup> &h) {
  std::map<int, FgAbGroup> out;
  for (const auto &[n, g] : h)
    if (!g.is_trivial()) out[n] = g;
  return out;
}

std::vector<Int> v(std::initializer_list<long long> xs) {
  std::vector<Int> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}
} // namespace

TEST_CASE("constant objects give the group in degree zero") {
  FgAbGroup A(1, {Int(2)});
  auto c = normalized_moore(constant_simplicial(A, 3));
  CHECK(c.group(0) == A);
  for (int n = 1; n <= 3; ++n) CHECK(c.group(n).is_trivial());
  auto cc = conormalized_moore(dual(constant_simplicial(FgAbGroup::free(2), 3)));
  CHECK(cc.group(0) == FgAbGroup::free(2));
  for (int n = 1; n <= 3; ++n) CHECK(cc.group(-n).is_trivial());
}

TEST_CASE("nerve faces and degeneracies") {
  FgAbGroup Z3 = FgAbGroup::cyclic(Int(3));
  GroupHom id = GroupHom::identity(Z3);
  auto S = action_groupoid_nerve(Z3, Z3, id);
  CHECK(S.check_identities());
  // (g, A) = (1, 1)
  CHECK(S.faces[1][0].apply(v({1, 1})) == v({1}));
  CHECK(S.faces[1][1].apply(v({1, 1})) == v({2}));
  CHECK(S.degeneracies[0][0].apply(v({2})) == v({0, 2}));

  FgAbGroup Z2 = FgAbGroup::cyclic(Int(2));
  auto T = action_groupoid_nerve(Z2, Z2, GroupHom::identity(Z2));
  oracle::for_each_element({2, 2, 2}, [&](const std::vector<Int> &x) {
    // hand evaluation: d0 d2 (g1, g2, A) = (A + g2), d1 d0 (g1, g2, A) = (A + g2)
    auto lhs = T.faces[1][0].apply(T.faces[2][2].apply(x));
    auto rhs = T.faces[1][1].apply(T.faces[2][0].apply(x));
    CHECK(lhs == rhs);
    CHECK(lhs == std::vector<Int>{mod(x[1] + x[2], Int(2))});
  });
}

TEST_CASE("normalized Moore complex of the nerve") {
  FgAbGroup Z3 = FgAbGroup::cyclic(Int(3));
  auto c = normalized_moore(action_groupoid_nerve(Z3, Z3, GroupHom::identity(Z3)));
  CHECK(c.group(0) == Z3);
  CHECK(c.group(1) == Z3);
  CHECK(c.group(2).is_trivial());
  CHECK(c.diff(1).apply(v({1})) == v({2})); // g -> -tau(g)
  for (auto &[n, g] : homology(c)) CHECK(g.is_trivial());

  auto z = normalized_moore(action_groupoid_nerve(Z3, Z3, GroupHom::zero(Z3, Z3)));
  auto h = homology(z);
  CHECK(h.at(0) == Z3);
  CHECK(h.at(1) == Z3);
  CHECK(h.at(2).is_trivial());
}

TEST_CASE("nerve Moore complex is the two-term complex G -> X") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    int g = 1 + rng() % 2, x = 1 + rng() % 2;
    FgAbGroup G = FgAbGroup::free(g), X = FgAbGroup::free(x);
    GroupHom tau(G, X, Matrix::from_dense(oracle::random_dense(rng, x, g, -3, 3)));
    auto S = action_groupoid_nerve(G, X, tau, 3);
    CHECK(S.check_identities());
    auto c = normalized_moore(S);
    CHECK(c.group(2).is_trivial());
    CHECK(c.group(3).is_trivial());
    ChainComplex expect(0, {X, G}, {-tau});
    CHECK(nontrivial(homology(c)) == nontrivial(homology(expect)));
    // dual cosimplicial object computes the cohomology of the same complex
    auto cc = conormalized_moore(dual(S));
    ChainComplex expect_dual(-1, {G, X}, {transpose(-tau)});
    CHECK(nontrivial(homology(cc)) == nontrivial(homology(expect_dual)));
    CHECK(cc.group(-2).is_trivial());
  }
}

TEST_CASE("chain-valued Moore complexes") {
  // levels: the nerve tensored with a two-term complex Z --2--> Z
  FgAbGroup Z = FgAbGroup::free(1);
  auto S = action_groupoid_nerve(Z, Z, GroupHom(Z, Z, Matrix::from_dense({{1}})), 2);
  SimplicialChainObject obj;
  obj.degenerate_above = true;
  auto lift = [&](const GroupHom &f) {
    ChainComplex a(0, {f.source(), f.source()}, {GroupHom(f.source(), f.source(), Matrix::identity(f.source().gens()).scaled(Int(2)))});
    ChainComplex b(0, {f.target(), f.target()}, {GroupHom(f.target(), f.target(), Matrix::identity(f.target().gens()).scaled(Int(2)))});
    return ChainMap{a, b, {{0, f}, {1, f}}};
  };
  for (const auto &L : S.levels)
    obj.levels.push_back(ChainComplex(0, {L, L}, {GroupHom(L, L, Matrix::identity(L.gens()).scaled(Int(2)))}));
  obj.faces.resize(S.faces.size());
  obj.degeneracies.resize(S.degeneracies.size());
  for (std::size_t n = 0; n < S.faces.size(); ++n)
    for (const auto &f : S.faces[n]) obj.faces[n].push_back(lift(f));
  for (std::size_t n = 0; n < S.degeneracies.size(); ++n)
    for (const auto &f : S.degeneracies[n]) obj.degeneracies[n].push_back(lift(f));
  auto d = normalized_moore(obj);
  CHECK(d.check());
  auto t = total_complex(d, SumMode::coproduct, Truncation::none);
  // Z --1--> Z is contractible, so the total complex is acyclic
  for (auto &[n, g] : homology(t)) CHECK(g.is_trivial());
}

TEST_CASE("Moore errors") {
  FgAbGroup Z = FgAbGroup::free(1);
  auto S = action_groupoid_nerve(Z, Z, GroupHom::identity(Z), 2);
  S.degenerate_above = false;
  CHECK_THROWS_AS(normalized_moore(S, 4), StructuralError);
  S.faces[2][1] = GroupHom::zero(S.levels[2], S.levels[1]);
  std::string why;
  CHECK(!S.check_identities(&why));
  CHECK(!why.empty());
  CHECK_THROWS_AS(normalized_moore(S), StructuralError);
}
