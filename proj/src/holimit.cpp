#include "artifact/holimit.hpp"

#include "product.hpp"

#include <algorithm>

namespace artifact {

using detail::ChainProduct;

namespace {
void require_variance(const Diagram &D, Variance v) {
  std::string why;
  if (D.variance() != v)
    throw StructuralError(v == Variance::contravariant ? "homotopy limit needs a contravariant diagram"
                                                       : "homotopy colimit needs a covariant diagram");
  if (!verify_diagram(D, &why)) throw StructuralError("invalid diagram: " + why);
}

ChainProduct product_over(const Diagram &D, const std::vector<std::vector<int>> &chains, int qlo, int qhi) {
  std::vector<int> owner;
  std::vector<std::string> names;
  for (const auto &c : chains) {
    owner.push_back(c.front());
    names.push_back(D.shape().chain_name(c));
  }
  return ChainProduct(D, chains, owner, names, qlo, qhi);
}

// coface d^i : level n-1 -> level n in degree q, concatenated coordinates
Matrix coface(const Diagram &D, const ChainProduct &src, const ChainProduct &dst, int i, int q) {
  Matrix m(dst.concat_dim(q), src.concat_dim(q));
  for (int k = 0; k < dst.size(); ++k) {
    const auto &c = dst.chain(k);
    int s = src.find(detail::drop(c, i));
    if (s < 0) continue;
    if (i == 0) m.add_block(dst.offset(q, k), src.offset(q, s), D.map(c[0], c[1]).at(q).matrix());
    else m.add_block(dst.offset(q, k), src.offset(q, s), Matrix::identity(D.value(c[0]).group(q).gens()));
  }
  return m;
}

int height(const FinitePoset &P) {
  int n = 0;
  while (!P.chains(n + 1).empty()) ++n;
  return n;
}
} // namespace

CosimplicialReplacement cosimplicial_replacement(const Diagram &D, int cutoff) {
  require_variance(D, Variance::contravariant);
  auto [qlo, qhi] = D.degree_range();
  CosimplicialReplacement R;
  std::vector<ChainProduct> levels;
  for (int n = 0; n <= cutoff; ++n) {
    R.chains.push_back(D.shape().weak_chains(n));
    levels.push_back(product_over(D, R.chains.back(), qlo, qhi));
    R.object.levels.push_back(levels.back().complex(D));
  }
  R.object.cofaces.resize(cutoff + 1);
  R.object.codegeneracies.resize(cutoff + 1);
  for (int n = 1; n <= cutoff; ++n)
    for (int i = 0; i <= n; ++i) {
      ChainMap f{R.object.levels[n - 1], R.object.levels[n], {}};
      for (int q = qlo; q <= qhi; ++q)
        f.components[q] = ChainProduct::convert(levels[n - 1], q, levels[n], q, coface(D, levels[n - 1], levels[n], i, q));
      R.object.cofaces[n].push_back(f);
    }
  for (int n = 0; n < cutoff; ++n)
    for (int j = 0; j <= n; ++j) {
      ChainMap f{R.object.levels[n + 1], R.object.levels[n], {}};
      for (int q = qlo; q <= qhi; ++q) {
        const ChainProduct &src = levels[n + 1], &dst = levels[n];
        Matrix m(dst.concat_dim(q), src.concat_dim(q));
        for (int k = 0; k < dst.size(); ++k) {
          const auto &c = dst.chain(k);
          int s = src.find(detail::repeat(c, j));
          m.add_block(dst.offset(q, k), src.offset(q, s), Matrix::identity(D.value(c[0]).group(q).gens()));
        }
        f.components[q] = ChainProduct::convert(src, q, dst, q, m);
      }
      R.object.codegeneracies[n].push_back(f);
    }
  std::string why;
  for (int q = qlo; q <= qhi; ++q)
    if (!R.object.slice(q).check_identities(&why)) throw StructuralError("cosimplicial identities fail: " + why);
  return R;
}

namespace {
struct StrictLevels {
  std::vector<ChainProduct> levels; // index n = chain length
  int qlo, qhi;
};

StrictLevels strict_levels(const Diagram &D, int max_length) {
  auto [qlo, qhi] = D.degree_range();
  StrictLevels s{{}, qlo, qhi};
  for (int n = 0; n <= max_length; ++n) s.levels.push_back(product_over(D, D.shape().chains(n), qlo, qhi));
  return s;
}

DoubleComplex strict_double(const Diagram &D, const StrictLevels &s) {
  int L = static_cast<int>(s.levels.size()) - 1;
  DoubleComplex d(-L, 0, s.qlo, s.qhi);
  for (int n = 0; n <= L; ++n) {
    const ChainProduct &P = s.levels[n];
    for (int q = s.qlo; q <= s.qhi; ++q) d.set_group(-n, q, P.group(q));
    for (int q = s.qlo + 1; q <= s.qhi; ++q) {
      Matrix m(P.concat_dim(q - 1), P.concat_dim(q));
      for (int k = 0; k < P.size(); ++k) m.add_block(P.offset(q - 1, k), P.offset(q, k), D.value(P.owner(k)).diff(q).matrix());
      d.set_horizontal(-n, q, ChainProduct::convert(P, q, P, q - 1, m));
    }
    if (n == 0) continue;
    for (int q = s.qlo; q <= s.qhi; ++q) {
      const ChainProduct &src = s.levels[n - 1];
      Matrix m(P.concat_dim(q), src.concat_dim(q));
      for (int i = 0; i <= n; ++i) {
        Matrix c = coface(D, src, P, i, q);
        m = i % 2 ? m - c : m + c;
      }
      d.set_vertical(-(n - 1), q, ChainProduct::convert(src, q, P, q, m));
    }
  }
  return d;
}
} // namespace

DoubleComplex holim_double_complex(const Diagram &D, int max_length) {
  require_variance(D, Variance::contravariant);
  return strict_double(D, strict_levels(D, max_length));
}

ChainComplex holim(const Diagram &D) {
  require_variance(D, Variance::contravariant);
  auto [qlo, qhi] = D.degree_range();
  if (qhi < qlo) return ChainComplex();
  // degree -1 of the total complex needs chains of length qhi + 1
  int L = std::min(std::max(qhi + 1, 0), height(D.shape()));
  DoubleComplex d = strict_double(D, strict_levels(D, L));
  return total_complex(d, SumMode::product, Truncation::nonneg);
}

bool check_chain_product_identity(const Diagram &D, int top, std::string *why) {
  auto fail = [&](const std::string &m) {
    if (why) *why = m;
    return false;
  };
  CosimplicialReplacement R = cosimplicial_replacement(D, top);
  DoubleComplex N = conormalized_moore(R.object, top);
  StrictLevels S = strict_levels(D, top);
  DoubleComplex P = strict_double(D, S);
  auto [qlo, qhi] = D.degree_range();
  auto full = [&](int n) { return product_over(D, R.chains[n], qlo, qhi); };
  // components kernel -> strict product, per (n, q)
  std::map<std::pair<int, int>, GroupHom> phi;
  for (int q = qlo; q <= qhi; ++q) {
    ChainComplex c = conormalized_moore(R.object.slice(q), top);
    for (int n = 0; n <= top; ++n) {
      ChainProduct F = full(n);
      const ChainProduct &T = S.levels[n];
      Matrix proj(T.concat_dim(q), F.concat_dim(q));
      for (int k = 0; k < T.size(); ++k) {
        int f = F.find(T.chain(k));
        proj.add_block(T.offset(q, k), F.offset(q, f), Matrix::identity(D.value(T.owner(k)).group(q).gens()));
      }
      GroupHom p = ChainProduct::convert(F, q, T, q, proj);
      Realization r = c.realization(-n);
      GroupHom incl = r.kind == Realization::Kind::sub ? r.sub->inclusion : GroupHom::identity(c.group(-n));
      GroupHom comp = compose(p, incl);
      if (!is_isomorphism(comp))
        return fail("bidegree (" + std::to_string(-n) + "," + std::to_string(q) + "): coordinate projection is not an isomorphism");
      phi[{-n, q}] = comp;
    }
  }
  for (int q = qlo; q <= qhi; ++q)
    for (int p = -top; p <= 0; ++p) {
      if (p > -top && !(compose(phi[{p - 1, q}], N.vertical(p, q)) == compose(P.vertical(p, q), phi[{p, q}])))
        return fail("vertical square fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      if (q > qlo && !(compose(phi[{p, q - 1}], N.horizontal(p, q)) == compose(P.horizontal(p, q), phi[{p, q}])))
        return fail("horizontal square fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  return true;
}

} // namespace artifact
