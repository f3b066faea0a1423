#include "artifact/hocolimit.hpp"

#include "product.hpp"

#include <algorithm>

namespace artifact {

using detail::ChainProduct;

namespace {
void require_covariant(const Diagram &D) {
  std::string why;
  if (D.variance() != Variance::covariant) throw StructuralError("homotopy colimit needs a covariant diagram");
  if (!verify_diagram(D, &why)) throw StructuralError("invalid diagram: " + why);
}

std::vector<std::vector<int>> decreasing(std::vector<std::vector<int>> chains) {
  for (auto &c : chains) std::reverse(c.begin(), c.end());
  return chains;
}

std::string decreasing_name(const FinitePoset &P, const std::vector<int> &c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ">" : "") + P.name(c[i]);
  return out;
}

ChainProduct sum_over(const Diagram &D, const std::vector<std::vector<int>> &chains, int qlo, int qhi) {
  std::vector<int> owner;
  std::vector<std::string> names;
  for (const auto &c : chains) {
    owner.push_back(c.back());
    names.push_back(decreasing_name(D.shape(), c));
  }
  return ChainProduct(D, chains, owner, names, qlo, qhi);
}

// face d_i : level n -> level n-1 in degree q, concatenated coordinates
Matrix face(const Diagram &D, const ChainProduct &src, const ChainProduct &dst, int i, int q) {
  Matrix m(dst.concat_dim(q), src.concat_dim(q));
  for (int k = 0; k < src.size(); ++k) {
    const auto &c = src.chain(k);
    int n = static_cast<int>(c.size()) - 1;
    int t = dst.find(detail::drop(c, i));
    if (t < 0) continue;
    if (i == n) m.add_block(dst.offset(q, t), src.offset(q, k), D.map(c[n], c[n - 1]).at(q).matrix());
    else m.add_block(dst.offset(q, t), src.offset(q, k), Matrix::identity(D.value(c[n]).group(q).gens()));
  }
  return m;
}

int height(const FinitePoset &P) {
  int n = 0;
  while (!P.chains(n + 1).empty()) ++n;
  return n;
}

struct StrictLevels {
  std::vector<ChainProduct> levels;
  int qlo, qhi;
};

StrictLevels strict_levels(const Diagram &D, int max_length) {
  auto [qlo, qhi] = D.degree_range();
  StrictLevels s{{}, qlo, qhi};
  for (int n = 0; n <= max_length; ++n) s.levels.push_back(sum_over(D, decreasing(D.shape().chains(n)), qlo, qhi));
  return s;
}

DoubleComplex strict_double(const Diagram &D, const StrictLevels &s) {
  int L = static_cast<int>(s.levels.size()) - 1;
  DoubleComplex d(0, L, s.qlo, s.qhi);
  for (int n = 0; n <= L; ++n) {
    const ChainProduct &P = s.levels[n];
    for (int q = s.qlo; q <= s.qhi; ++q) d.set_group(n, q, P.group(q));
    for (int q = s.qlo + 1; q <= s.qhi; ++q) {
      Matrix m(P.concat_dim(q - 1), P.concat_dim(q));
      for (int k = 0; k < P.size(); ++k) m.add_block(P.offset(q - 1, k), P.offset(q, k), D.value(P.owner(k)).diff(q).matrix());
      d.set_horizontal(n, q, ChainProduct::convert(P, q, P, q - 1, m));
    }
    if (n == 0) continue;
    for (int q = s.qlo; q <= s.qhi; ++q) {
      const ChainProduct &dst = s.levels[n - 1];
      Matrix m(dst.concat_dim(q), P.concat_dim(q));
      for (int i = 0; i <= n; ++i) {
        Matrix f = face(D, P, dst, i, q);
        m = i % 2 ? m - f : m + f;
      }
      d.set_vertical(n, q, ChainProduct::convert(P, q, dst, q, m));
    }
  }
  return d;
}
} // namespace

SimplicialReplacement simplicial_replacement(const Diagram &D, int cutoff) {
  require_covariant(D);
  auto [qlo, qhi] = D.degree_range();
  SimplicialReplacement R;
  std::vector<ChainProduct> levels;
  for (int n = 0; n <= cutoff; ++n) {
    R.chains.push_back(decreasing(D.shape().weak_chains(n)));
    levels.push_back(sum_over(D, R.chains.back(), qlo, qhi));
    R.object.levels.push_back(levels.back().complex(D));
  }
  R.object.faces.resize(cutoff + 1);
  R.object.degeneracies.resize(cutoff + 1);
  for (int n = 1; n <= cutoff; ++n)
    for (int i = 0; i <= n; ++i) {
      ChainMap f{R.object.levels[n], R.object.levels[n - 1], {}};
      for (int q = qlo; q <= qhi; ++q)
        f.components[q] = ChainProduct::convert(levels[n], q, levels[n - 1], q, face(D, levels[n], levels[n - 1], i, q));
      R.object.faces[n].push_back(f);
    }
  for (int n = 0; n < cutoff; ++n)
    for (int j = 0; j <= n; ++j) {
      ChainMap f{R.object.levels[n], R.object.levels[n + 1], {}};
      for (int q = qlo; q <= qhi; ++q) {
        const ChainProduct &src = levels[n], &dst = levels[n + 1];
        Matrix m(dst.concat_dim(q), src.concat_dim(q));
        for (int k = 0; k < src.size(); ++k) {
          const auto &c = src.chain(k);
          int t = dst.find(detail::repeat(c, j));
          m.add_block(dst.offset(q, t), src.offset(q, k), Matrix::identity(D.value(c.back()).group(q).gens()));
        }
        f.components[q] = ChainProduct::convert(src, q, dst, q, m);
      }
      R.object.degeneracies[n].push_back(f);
    }
  std::string why;
  for (int q = qlo; q <= qhi; ++q)
    if (!R.object.slice(q).check_identities(&why)) throw StructuralError("simplicial identities fail: " + why);
  return R;
}

DoubleComplex hocolim_double_complex(const Diagram &D, int max_length) {
  require_covariant(D);
  return strict_double(D, strict_levels(D, max_length));
}

ChainComplex hocolim(const Diagram &D) {
  require_covariant(D);
  auto [qlo, qhi] = D.degree_range();
  if (qhi < qlo) return ChainComplex();
  // degree 1 of the total complex needs chains of length 1 - qlo
  int L = std::min(std::max(1 - qlo, 0), height(D.shape()));
  DoubleComplex d = strict_double(D, strict_levels(D, L));
  return total_complex(d, SumMode::coproduct, Truncation::nonpos);
}

bool check_chain_coproduct_identity(const Diagram &D, int top, std::string *why) {
  auto fail = [&](const std::string &m) {
    if (why) *why = m;
    return false;
  };
  SimplicialReplacement R = simplicial_replacement(D, top);
  DoubleComplex N = normalized_moore(R.object, top);
  StrictLevels S = strict_levels(D, top);
  DoubleComplex P = strict_double(D, S);
  auto [qlo, qhi] = D.degree_range();
  std::map<std::pair<int, int>, GroupHom> phi;
  for (int q = qlo; q <= qhi; ++q) {
    ChainComplex c = normalized_moore(R.object.slice(q), top);
    for (int n = 0; n <= top; ++n) {
      ChainProduct F = sum_over(D, R.chains[n], qlo, qhi);
      const ChainProduct &T = S.levels[n];
      Matrix proj(T.concat_dim(q), F.concat_dim(q));
      for (int k = 0; k < T.size(); ++k) {
        int f = F.find(T.chain(k));
        proj.add_block(T.offset(q, k), F.offset(q, f), Matrix::identity(D.value(T.owner(k)).group(q).gens()));
      }
      GroupHom p = ChainProduct::convert(F, q, T, q, proj);
      Realization r = c.realization(n);
      Matrix section = r.kind == Realization::Kind::quotient ? r.quot->section : Matrix::identity(c.group(n).gens());
      GroupHom comp(c.group(n), T.group(q), p.matrix() * section);
      if (!is_isomorphism(comp))
        return fail("bidegree (" + std::to_string(n) + "," + std::to_string(q) + "): projection is not an isomorphism");
      phi[{n, q}] = comp;
    }
  }
  for (int q = qlo; q <= qhi; ++q)
    for (int p = 0; p <= top; ++p) {
      if (p > 0 && !(compose(phi[{p - 1, q}], N.vertical(p, q)) == compose(P.vertical(p, q), phi[{p, q}])))
        return fail("vertical square fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
      if (q > qlo && !(compose(phi[{p, q - 1}], N.horizontal(p, q)) == compose(P.horizontal(p, q), phi[{p, q}])))
        return fail("horizontal square fails at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  return true;
}

} // namespace artifact
