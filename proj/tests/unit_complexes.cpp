#include "artifact/complexes.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace artifact;

namespace {
Matrix M(const oracle::Dense &d, int cols = -1) { return Matrix::from_dense(d, cols); }

ChainComplex two_term(const Matrix &m) {
  // degree 1 -> degree 0, free groups
  FgAbGroup a = FgAbGroup::free(m.cols()), b = FgAbGroup::free(m.rows());
  return ChainComplex(0, {b, a}, {GroupHom(a, b, m)});
}

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (const auto &[j, v] : a.row(i))
      for (int r = 0; r < b.rows(); ++r)
        for (const auto &[c, w] : b.row(r)) k.set(i * b.rows() + r, j * b.cols() + c, v * w);
  return k;
}

// tensor product double complex of two free two-term complexes (degrees 0,1)
DoubleComplex tensor(const ChainComplex &A, const ChainComplex &B, bool transpose) {
  DoubleComplex d(0, 1, 0, 1);
  auto rank = [](const ChainComplex &c, int n) { return c.group(n).gens(); };
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) {
      int r = transpose ? rank(B, p) * rank(A, q) : rank(A, p) * rank(B, q);
      d.set_group(p, q, FgAbGroup::free(r));
    }
  for (int q = 0; q <= 1; ++q) {
    // vertical (1,q) -> (0,q)
    Matrix v = transpose ? kron(B.diff(1).matrix(), Matrix::identity(rank(A, q)))
                         : kron(A.diff(1).matrix(), Matrix::identity(rank(B, q)));
    d.set_vertical(1, q, GroupHom(d.group(1, q), d.group(0, q), v));
  }
  for (int p = 0; p <= 1; ++p) {
    Matrix h = transpose ? kron(Matrix::identity(rank(B, p)), A.diff(1).matrix())
                         : kron(Matrix::identity(rank(A, p)), B.diff(1).matrix());
    d.set_horizontal(p, 1, GroupHom(d.group(p, 1), d.group(p, 0), h));
  }
  return d;
}
} // namespace

TEST_CASE("homology examples") {
  auto h = homology(two_term(M({{2}})));
  CHECK(h.at(1).is_trivial());
  CHECK(h.at(0).str() == "Z/2");

  FgAbGroup z2 = FgAbGroup::cyclic(Int(2));
  ChainComplex zero(0, {z2, FgAbGroup::free(3)}, {GroupHom::zero(FgAbGroup::free(3), z2)});
  auto hz = homology(zero);
  CHECK(hz.at(0) == z2);
  CHECK(hz.at(1) == FgAbGroup::free(3));

  // 3-cycle graph: vertices a<b<c, edges ab, ac, bc
  auto cyc = homology(two_term(M({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}})));
  CHECK(cyc.at(0).str() == "Z");
  CHECK(cyc.at(1).str() == "Z");
  CHECK(homology_report(cyc) == "H_0 = Z\nH_1 = Z\n");
}

TEST_CASE("complex constructor rejects non-complexes") {
  FgAbGroup z = FgAbGroup::free(1);
  CHECK_THROWS_AS(ChainComplex(0, {z, z, z}, {GroupHom(z, z, M({{1}})), GroupHom(z, z, M({{1}}))}), StructuralError);
}

TEST_CASE("total complex examples") {
  // single column
  DoubleComplex col(0, 0, 0, 1);
  col.set_group(0, 0, FgAbGroup::free(1));
  col.set_group(0, 1, FgAbGroup::free(1));
  col.set_horizontal(0, 1, GroupHom(FgAbGroup::free(1), FgAbGroup::free(1), M({{3}})));
  auto t = total_complex(col, SumMode::product, Truncation::none);
  CHECK(homology(t).at(0).str() == "Z/3");
  CHECK(homology(t).at(1).is_trivial());

  // 2x2 square of Z with identities: acyclic
  DoubleComplex sq(0, 1, 0, 1);
  FgAbGroup z = FgAbGroup::free(1);
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) sq.set_group(p, q, z);
  sq.set_horizontal(0, 1, GroupHom::identity(z));
  sq.set_horizontal(1, 1, GroupHom::identity(z));
  sq.set_vertical(1, 0, GroupHom::identity(z));
  sq.set_vertical(1, 1, GroupHom::identity(z));
  auto ts = total_complex(sq, SumMode::product, Truncation::none);
  CHECK(ts.is_complex());
  for (auto &[n, g] : homology(ts)) CHECK(g.is_trivial());

  // non-commuting square is rejected
  DoubleComplex bad = DoubleComplex(0, 1, 0, 1);
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) bad.set_group(p, q, z);
  bad.set_horizontal(0, 1, GroupHom::identity(z));
  bad.set_horizontal(1, 1, GroupHom(z, z, M({{2}})));
  bad.set_vertical(1, 0, GroupHom::identity(z));
  bad.set_vertical(1, 1, GroupHom::identity(z));
  CHECK_THROWS_AS(total_complex(bad, SumMode::product, Truncation::none), StructuralError);
}

TEST_CASE("truncations replace degree zero by kernel or cokernel") {
  // column in degrees (0, q) for q = -1..1: Z --2--> Z --0--> Z
  DoubleComplex d(0, 0, -1, 1);
  FgAbGroup z = FgAbGroup::free(1);
  for (int q = -1; q <= 1; ++q) d.set_group(0, q, z);
  d.set_horizontal(0, 1, GroupHom(z, z, M({{2}})));
  d.set_horizontal(0, 0, GroupHom::zero(z, z));
  auto nn = total_complex(d, SumMode::product, Truncation::nonneg);
  CHECK(nn.lo() == 0);
  CHECK(nn.realization(0).kind == Realization::Kind::sub);
  CHECK(homology(nn).at(0).str() == "Z/2");
  auto np = total_complex(d, SumMode::coproduct, Truncation::nonpos);
  CHECK(np.hi() == 0);
  CHECK(np.group(0).str() == "Z/2");
  CHECK(homology(np).at(-1).str() == "Z");
}

TEST_CASE("total complex homology is invariant under transposition") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    auto a = oracle::random_dense(rng, 1 + rng() % 3, 1 + rng() % 3, -3, 3);
    auto b = oracle::random_dense(rng, 1 + rng() % 3, 1 + rng() % 3, -3, 3);
    ChainComplex A = two_term(M(a)), B = two_term(M(b));
    auto h1 = homology(total_complex(tensor(A, B, false), SumMode::product, Truncation::none));
    auto h2 = homology(total_complex(tensor(A, B, true), SumMode::product, Truncation::none));
    CHECK(h1 == h2);
  }
}

TEST_CASE("chain maps, homotopies and quasi-isomorphisms") {
  ChainComplex c = two_term(M({{1, 2}, {3, 4}}));
  CHECK(verify_chain_map(ChainMap::identity(c)));
  CHECK(verify_homotopy(ChainHomotopy{ChainMap::identity(c), ChainMap::identity(c), {}}));
  CHECK(quasi_iso_check(ChainMap::identity(c)));

  FgAbGroup z = FgAbGroup::free(1);
  ChainComplex one(0, {z}, {});
  ChainMap twice{one, one, {{0, GroupHom(z, z, M({{2}}))}}};
  CHECK(!quasi_iso_check(twice));

  ChainMap bad{c, c, {{0, GroupHom(c.group(0), c.group(0), M({{1, 0}, {0, 0}}))}}};
  CHECK(!verify_chain_map(bad));
  CHECK_THROWS_AS(quasi_iso_check(bad), StructuralError);
}

TEST_CASE("quasi_iso_check agrees with the homology oracle for multiplication maps") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 80; ++it) {
    auto a = oracle::random_dense(rng, 1 + rng() % 3, 1 + rng() % 3, -4, 4);
    ChainComplex c = two_term(M(a));
    long long k = std::vector<long long>{1, -1, 2, 3, 5}[rng() % 5];
    ChainMap f{c, c, {}};
    for (int n = 0; n <= 1; ++n) f.components[n] = GroupHom(c.group(n), c.group(n), Matrix::identity(c.group(n).gens()).scaled(Int(k)));
    bool expect = true;
    for (auto &[n, g] : homology(c)) {
      if (g.free_rank() > 0 && std::llabs(k) != 1) expect = false;
      for (auto &d : g.invariant_factors())
        if (oracle::gcdll(d.small(), k) != 1) expect = false;
    }
    CHECK(quasi_iso_check(f) == expect);
  }
}
