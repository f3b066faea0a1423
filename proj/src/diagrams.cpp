#include "artifact/diagrams.hpp"

#include <functional>

namespace artifact {

FinitePoset::FinitePoset(std::vector<std::string> names, std::vector<std::vector<char>> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  int n = size();
  if (static_cast<int>(leq_.size()) != n) throw StructuralError("poset: order matrix has the wrong size");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(leq_[a].size()) != n || !leq_[a][a]) throw StructuralError("poset: not reflexive");
    for (int b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw StructuralError("poset: not antisymmetric");
      for (int c = 0; c < n; ++c)
        if (leq_[a][b] && leq_[b][c] && !leq_[a][c]) throw StructuralError("poset: not transitive");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (less(a, c) && less(c, b)) cover = false;
      if (cover) hasse_.emplace_back(a, b);
    }
}

FinitePoset FinitePoset::from_stars(const StarPoset &P) {
  std::vector<std::string> names;
  std::vector<std::vector<char>> leq(P.size(), std::vector<char>(P.size()));
  for (int a = 0; a < P.size(); ++a) {
    names.push_back(P.name(a));
    for (int b = 0; b < P.size(); ++b) leq[a][b] = P.leq(a, b);
  }
  return FinitePoset(names, leq);
}

FinitePoset FinitePoset::discrete(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<char>> leq(n, std::vector<char>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back("U" + std::to_string(a));
    leq[a][a] = 1;
  }
  return FinitePoset(names, leq);
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> names;
  std::vector<std::vector<char>> leq(n, std::vector<char>(n));
  for (int a = 0; a < n; ++a) {
    names.push_back("U" + std::to_string(a));
    for (int b = a; b < n; ++b) leq[a][b] = 1;
  }
  return FinitePoset(names, leq);
}

namespace {
std::vector<std::vector<int>> enumerate(int size, int n, const std::function<bool(int, int)> &step) {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b < size; ++b)
      if (cur.empty() || step(cur.back(), b)) {
        cur.push_back(b);
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}
} // namespace

std::vector<std::vector<int>> FinitePoset::chains(int n) const {
  return enumerate(size(), n, [this](int a, int b) { return less(a, b); });
}

std::vector<std::vector<int>> FinitePoset::weak_chains(int n) const {
  return enumerate(size(), n, [this](int a, int b) { return leq(a, b); });
}

std::string FinitePoset::chain_name(const std::vector<int> &c) const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "<" : "") + name(c[i]);
  return out;
}

// ---------------------------------------------------------------- diagrams

Diagram::Diagram(std::shared_ptr<const FinitePoset> shape, Variance variance, std::vector<ChainComplex> values)
    : shape_(std::move(shape)), variance_(variance), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != shape_->size()) throw StructuralError("diagram: one value per object required");
}

void Diagram::set_hasse_map(int a, int b, ChainMap f) {
  bool cover = false;
  for (const auto &h : shape_->hasse()) cover |= h == std::make_pair(a, b);
  if (!cover) throw StructuralError("diagram: " + shape_->name(a) + " <= " + shape_->name(b) + " is not a covering relation");
  hasse_maps_[{a, b}] = std::move(f);
  cache_.clear();
}

const ChainMap &Diagram::hasse_map(int a, int b) const {
  auto it = hasse_maps_.find({a, b});
  if (it == hasse_maps_.end()) throw StructuralError("diagram: no map for " + shape_->name(a) + " <= " + shape_->name(b));
  return it->second;
}

ChainMap Diagram::map(int a, int b) const {
  if (!shape_->leq(a, b)) throw StructuralError("diagram: " + shape_->name(a) + " is not below " + shape_->name(b));
  if (a == b) return ChainMap::identity(values_[a]);
  auto it = cache_.find({a, b});
  if (it != cache_.end()) return it->second;
  // first covering step a < c with c <= b
  for (const auto &[x, c] : shape_->hasse()) {
    if (x != a || !shape_->leq(c, b)) continue;
    ChainMap first = hasse_map(a, c), rest = map(c, b);
    ChainMap out = variance_ == Variance::covariant ? compose(rest, first) : compose(first, rest);
    cache_[{a, b}] = out;
    return out;
  }
  throw StructuralError("diagram: no covering path");
}

std::pair<int, int> Diagram::degree_range() const {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto &c : values_) {
    if (c.hi() < c.lo()) continue;
    lo = any ? std::min(lo, c.lo()) : c.lo();
    hi = any ? std::max(hi, c.hi()) : c.hi();
    any = true;
  }
  return {lo, hi};
}

namespace {
bool fail(std::string *why, const std::string &msg) {
  if (why) *why = msg;
  return false;
}

bool same_map(const ChainMap &f, const ChainMap &g) {
  int lo = std::min(f.source.lo(), f.target.lo()), hi = std::max(f.source.hi(), f.target.hi());
  for (int n = lo; n <= hi; ++n)
    if (!(f.at(n).matrix() == g.at(n).matrix())) return false;
  return true;
}

bool same_complex(const ChainComplex &a, const ChainComplex &b) {
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  for (int n = lo; n <= hi; ++n)
    if (!(a.group(n) == b.group(n)) || !(a.diff(n).matrix() == b.diff(n).matrix())) return false;
  return true;
}
} // namespace

bool verify_diagram(const Diagram &D, std::string *why) {
  const FinitePoset &P = D.shape();
  for (const auto &[a, b] : P.hasse()) {
    std::string pair = P.name(a) + " <= " + P.name(b);
    ChainMap f;
    try {
      f = D.hasse_map(a, b);
    } catch (const StructuralError &e) {
      return fail(why, e.what());
    }
    int s = D.variance() == Variance::covariant ? a : b, t = D.variance() == Variance::covariant ? b : a;
    if (!same_complex(f.source, D.value(s)) || !same_complex(f.target, D.value(t)))
      return fail(why, "map for " + pair + " has the wrong source or target");
    std::string w;
    if (!verify_chain_map(f, &w)) return fail(why, "map for " + pair + " is not a chain map: " + w);
  }
  // path independence: every composable pair composes to the direct composite
  for (const auto &c : P.chains(2)) {
    int a = c[0], b = c[1], x = c[2];
    ChainMap direct = D.map(a, x);
    ChainMap via = D.variance() == Variance::covariant ? compose(D.map(b, x), D.map(a, b)) : compose(D.map(a, b), D.map(b, x));
    if (!same_map(direct, via))
      return fail(why, "composition fails for " + P.name(a) + " <= " + P.name(b) + " <= " + P.name(x));
  }
  // all covering paths agree: compare each map with the composite through every intermediate
  for (int a = 0; a < P.size(); ++a)
    for (int x = 0; x < P.size(); ++x) {
      if (!P.less(a, x)) continue;
      for (const auto &[y, b] : P.hasse()) {
        if (y != a || !P.leq(b, x)) continue;
        ChainMap via = D.variance() == Variance::covariant ? compose(D.map(b, x), D.hasse_map(a, b))
                                                         : compose(D.hasse_map(a, b), D.map(b, x));
        if (!same_map(D.map(a, x), via))
          return fail(why, "composition fails for " + P.name(a) + " <= " + P.name(b) + " <= " + P.name(x));
      }
    }
  return true;
}

bool verify_morphism(const Diagram &from, const Diagram &to, const DiagramMorphism &m, std::string *why) {
  const FinitePoset &P = from.shape();
  if (static_cast<int>(m.components.size()) != P.size()) return fail(why, "one component per object required");
  for (int i = 0; i < P.size(); ++i)
    if (!verify_chain_map(m.components[i])) return fail(why, "component at " + P.name(i) + " is not a chain map");
  for (const auto &[a, b] : P.hasse()) {
    bool cov = from.variance() == Variance::covariant;
    int s = cov ? a : b, t = cov ? b : a;
    if (!same_map(compose(to.map(a, b), m.components[s]), compose(m.components[t], from.map(a, b))))
      return fail(why, "naturality fails for " + P.name(a) + " <= " + P.name(b));
  }
  return true;
}

Diagram config_diagram(const StarPoset &P, const CoeffGroup &G) {
  auto shape = std::make_shared<FinitePoset>(FinitePoset::from_stars(P));
  std::vector<ChainComplex> values;
  for (int i = 0; i < P.size(); ++i) values.push_back(local_config_complex(P.object(i), G));
  Diagram D(shape, Variance::contravariant, values);
  for (const auto &[a, b] : shape->hasse()) D.set_hasse_map(a, b, config_restriction(P.object(b), P.object(a), G));
  return D;
}

Diagram obs_diagram(const StarPoset &P, const CoeffGroup &G) {
  if (G.is_Z()) throw StructuralError("observables are undefined for Z coefficients; use Z/q");
  auto shape = std::make_shared<FinitePoset>(FinitePoset::from_stars(P));
  std::vector<ChainComplex> values;
  for (int i = 0; i < P.size(); ++i) values.push_back(local_obs_complex(P.object(i), G));
  Diagram D(shape, Variance::covariant, values);
  for (const auto &[a, b] : shape->hasse()) D.set_hasse_map(a, b, obs_extension(P.object(a), P.object(b), G));
  return D;
}

Diagram constant_diagram(std::shared_ptr<const FinitePoset> shape, Variance variance, const FgAbGroup &A, int n) {
  ChainComplex c(n, {A}, {});
  std::vector<ChainComplex> values(shape->size(), c);
  Diagram D(shape, variance, values);
  for (const auto &[a, b] : D.shape().hasse()) D.set_hasse_map(a, b, ChainMap::identity(c));
  return D;
}

} // namespace artifact
