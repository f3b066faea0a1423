#include "artifact/simplicial.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace artifact {

CoeffGroup CoeffGroup::cyclic(long long q) {
  if (q < 2) throw StructuralError("coefficient group Z/q needs q >= 2");
  return CoeffGroup{Int(q)};
}

CoeffGroup CoeffGroup::parse(const std::string &s) {
  if (s == "Z") return Z();
  static const std::regex re(R"(Z(?:/|_)(\d+))");
  std::smatch m;
  if (std::regex_match(s, m, re)) {
    Int q = Int::parse(m[1].str());
    if (q < Int(2)) throw ParseError("coefficient group Z/q needs q >= 2: " + s);
    return CoeffGroup{q};
  }
  throw ParseError("unknown coefficient group: " + s);
}

std::string CoeffGroup::str() const { return is_Z() ? "Z" : "Z/" + q.str(); }

// ---------------------------------------------------------------- complexes

namespace {
bool all_integers(const std::vector<std::string> &labels) {
  static const std::regex re(R"(-?\d{1,18})");
  return std::all_of(labels.begin(), labels.end(), [](const std::string &s) { return std::regex_match(s, re); });
}

// visit all non-empty subsets of a sorted simplex
template <class F> void for_each_face(const Simplex &s, F &&f) {
  int n = static_cast<int>(s.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Simplex face;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) face.push_back(s[i]);
    f(face);
  }
}
} // namespace

ComplexPtr SimplicialComplex::from_maximal(const std::vector<std::vector<std::string>> &maximal) {
  if (maximal.empty()) throw ParseError("no simplices");
  std::set<std::string> seen;
  for (const auto &s : maximal) {
    if (s.empty()) throw ParseError("empty simplex");
    if (s.size() > 20) throw ParseError("simplex too large");
    seen.insert(s.begin(), s.end());
  }
  auto K = std::make_shared<SimplicialComplex>();
  K->labels_.assign(seen.begin(), seen.end());
  if (all_integers(K->labels_))
    std::stable_sort(K->labels_.begin(), K->labels_.end(),
                     [](const std::string &a, const std::string &b) { return std::stoll(a) < std::stoll(b); });
  std::map<std::string, int> id;
  for (int i = 0; i < K->num_vertices(); ++i) id[K->labels_[i]] = i;

  std::vector<std::set<Simplex>> by_dim;
  for (const auto &s : maximal) {
    Simplex v;
    for (const auto &l : s) v.push_back(id[l]);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw ParseError("repeated vertex in simplex");
    for_each_face(v, [&](const Simplex &f) {
      if (by_dim.size() < f.size()) by_dim.resize(f.size());
      by_dim[f.size() - 1].insert(f);
    });
  }
  for (auto &d : by_dim) K->simplices_.emplace_back(d.begin(), d.end());
  K->maximal_ = maximal;
  return K;
}

ComplexPtr SimplicialComplex::parse(std::istream &in) {
  std::vector<std::vector<std::string>> maximal;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<std::string> s;
    for (std::string tok; ls >> tok;) s.push_back(tok);
    std::set<std::string> uniq(s.begin(), s.end());
    if (uniq.size() != s.size()) throw ParseError("line " + std::to_string(lineno) + ": repeated vertex");
    maximal.push_back(std::move(s));
  }
  if (maximal.empty()) throw ParseError("no simplices");
  return from_maximal(maximal);
}

ComplexPtr SimplicialComplex::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse(in);
}

int SimplicialComplex::vertex_id(const std::string &label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

const std::vector<Simplex> &SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> none;
  return (k < 0 || k > dim()) ? none : simplices_[k];
}

int SimplicialComplex::index_of(const Simplex &s) const {
  int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k > dim()) return -1;
  const auto &v = simplices_[k];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  return (it != v.end() && *it == s) ? static_cast<int>(it - v.begin()) : -1;
}

std::string SimplicialComplex::simplex_label(const Simplex &s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + (s[i] >= 0 && s[i] < num_vertices() ? labels_[s[i]] : "#" + std::to_string(s[i]));
  return out + "]";
}

// ---------------------------------------------------------------- subcomplexes

Subcomplex::Subcomplex(ComplexPtr K, const std::vector<Simplex> &generators) : K_(std::move(K)) {
  std::vector<std::set<int>> sets(K_->dim() + 1);
  for (const auto &g : generators) {
    if (K_->index_of(g) < 0) throw StructuralError("simplex " + K_->simplex_label(g) + " is not in the complex");
    for_each_face(g, [&](const Simplex &f) { sets[f.size() - 1].insert(K_->index_of(f)); });
  }
  while (!sets.empty() && sets.back().empty()) sets.pop_back();
  for (auto &s : sets) idx_.emplace_back(s.begin(), s.end());
  build_positions();
}

Subcomplex Subcomplex::full(ComplexPtr K) {
  Subcomplex s;
  s.K_ = std::move(K);
  for (int k = 0; k <= s.K_->dim(); ++k) {
    std::vector<int> all(s.K_->count(k));
    for (int i = 0; i < s.K_->count(k); ++i) all[i] = i;
    s.idx_.push_back(std::move(all));
  }
  s.build_positions();
  return s;
}

void Subcomplex::build_positions() {
  pos_.assign(idx_.size(), {});
  for (std::size_t k = 0; k < idx_.size(); ++k) {
    pos_[k].assign(K_->count(static_cast<int>(k)), -1);
    for (std::size_t i = 0; i < idx_[k].size(); ++i) pos_[k][idx_[k][i]] = static_cast<int>(i);
  }
}

int Subcomplex::dim() const { return static_cast<int>(idx_.size()) - 1; }

const std::vector<int> &Subcomplex::indices(int k) const {
  static const std::vector<int> none;
  return (k < 0 || k > dim()) ? none : idx_[k];
}

bool Subcomplex::has(int k, int global) const { return position(k, global) >= 0; }

int Subcomplex::position(int k, int global) const {
  if (k < 0 || k > dim() || global < 0 || global >= static_cast<int>(pos_[k].size())) return -1;
  return pos_[k][global];
}

std::size_t Subcomplex::size() const {
  std::size_t n = 0;
  for (const auto &v : idx_) n += v.size();
  return n;
}

bool Subcomplex::subset_of(const Subcomplex &o) const {
  if (K_ != o.K_) throw StructuralError("subcomplexes of different complexes");
  if (dim() > o.dim()) return false;
  for (int k = 0; k <= dim(); ++k)
    for (int i : idx_[k])
      if (!o.has(k, i)) return false;
  return true;
}

Subcomplex Subcomplex::intersect(const Subcomplex &o) const {
  if (K_ != o.K_) throw StructuralError("subcomplexes of different complexes");
  Subcomplex s;
  s.K_ = K_;
  for (int k = 0; k <= std::min(dim(), o.dim()); ++k) {
    std::vector<int> v;
    std::set_intersection(idx_[k].begin(), idx_[k].end(), o.idx_[k].begin(), o.idx_[k].end(), std::back_inserter(v));
    if (v.empty()) break;
    s.idx_.push_back(std::move(v));
  }
  s.build_positions();
  return s;
}

std::string Subcomplex::str() const {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k <= dim(); ++k)
    for (int i : idx_[k]) {
      out += (first ? "" : " ") + K_->simplex_label(K_->simplex(k, i));
      first = false;
    }
  return out + "}";
}

Star closed_star(const ComplexPtr &K, const Simplex &sigma) {
  Simplex s = sigma;
  std::sort(s.begin(), s.end());
  if (K->index_of(s) < 0) throw StructuralError("simplex " + K->simplex_label(s) + " is not in the complex");
  std::vector<Simplex> cofaces;
  for (int k = static_cast<int>(s.size()) - 1; k <= K->dim(); ++k)
    for (const auto &t : K->simplices(k))
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) cofaces.push_back(t);
  return Star{s, Subcomplex(K, cofaces)};
}

bool is_acyclic(const Subcomplex &B) {
  if (B.empty()) return false; // reduced homology of the empty complex is Z in degree -1
  // augmented chain complex C_d -> ... -> C_0 -> Z in degrees d..-1
  CoeffGroup Z;
  std::vector<FgAbGroup> groups{FgAbGroup::free(1)};
  std::vector<GroupHom> diffs;
  for (int k = 0; k <= B.dim(); ++k) groups.push_back(cochain_group(B, k, Z));
  Matrix aug(1, B.count(0));
  for (int i = 0; i < B.count(0); ++i) aug.set(0, i, Int(1));
  diffs.emplace_back(groups[1], groups[0], aug);
  for (int k = 1; k <= B.dim(); ++k) diffs.push_back(boundary(B, k, Z));
  ChainComplex c(-1, groups, diffs);
  for (const auto &[n, g] : homology(c))
    if (!g.is_trivial()) return false;
  return true;
}

// ---------------------------------------------------------------- star poset

StarPoset StarPoset::build(const ComplexPtr &K) {
  StarPoset P;
  P.K_ = K;
  for (int k = 0; k <= K->dim(); ++k)
    for (const auto &s : K->simplices(k)) {
      Star st = closed_star(K, s);
      int found = P.find(st.sub);
      if (found >= 0) {
        P.centers_[found].push_back(s);
      } else {
        P.objects_.push_back(std::move(st.sub));
        P.centers_.push_back({s});
      }
    }
  int n = P.size();
  P.leq_.assign(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) P.leq_[a][b] = (a == b) || P.objects_[a].subset_of(P.objects_[b]);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!P.less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (P.less(a, c) && P.less(c, b)) cover = false;
      if (cover) P.hasse_.emplace_back(a, b);
    }
  return P;
}

std::string StarPoset::name(int i) const {
  std::string out = "U";
  for (const auto &c : centers_.at(i)) out += K_->simplex_label(c);
  return out;
}

std::vector<std::vector<int>> StarPoset::chains(int n) const {
  std::vector<std::vector<int>> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n + 1) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b < size(); ++b)
      if (cur.empty() || less(cur.back(), b)) {
        cur.push_back(b);
        rec();
        cur.pop_back();
      }
  };
  rec();
  return out;
}

int StarPoset::top() const {
  Subcomplex all = Subcomplex::full(K_);
  return find(all);
}

int StarPoset::find(const Subcomplex &s) const {
  for (int i = 0; i < size(); ++i)
    if (objects_[i] == s) return i;
  return -1;
}

// ---------------------------------------------------------------- cochains

FgAbGroup cochain_group(const Subcomplex &B, int k, const CoeffGroup &G) {
  const auto &K = *B.complex();
  std::vector<std::string> labels;
  for (int i : B.indices(k)) labels.push_back(K.simplex_label(K.simplex(k, i)));
  return G.group(B.count(k), std::move(labels));
}

namespace {
// (k+1)-simplices x k-simplices incidence with alternating signs
Matrix incidence(const Subcomplex &B, int k) {
  const auto &K = *B.complex();
  Matrix m(B.count(k + 1), B.count(k));
  if (k < 0) return m;
  for (int r = 0; r < B.count(k + 1); ++r) {
    const Simplex &t = K.simplex(k + 1, B.indices(k + 1)[r]);
    for (int i = 0; i <= k + 1; ++i) {
      Simplex f = t;
      f.erase(f.begin() + i);
      int c = B.position(k, K.index_of(f));
      m.set(r, c, Int(i % 2 ? -1 : 1));
    }
  }
  return m;
}

void require_subcomplex(const Subcomplex &small, const Subcomplex &big) {
  if (!small.subset_of(big)) throw StructuralError("not a subcomplex: " + small.str() + " in " + big.str());
}

Matrix coordinate_inclusion(const Subcomplex &small, const Subcomplex &big, int k) {
  Matrix m(big.count(k), small.count(k));
  for (int i = 0; i < small.count(k); ++i) m.set(big.position(k, small.indices(k)[i]), i, Int(1));
  return m;
}
} // namespace

GroupHom coboundary(const Subcomplex &B, int k, const CoeffGroup &G) {
  return GroupHom(cochain_group(B, k, G), cochain_group(B, k + 1, G), incidence(B, k), false);
}

GroupHom boundary(const Subcomplex &B, int k, const CoeffGroup &G) {
  return GroupHom(cochain_group(B, k, G), cochain_group(B, k - 1, G), incidence(B, k - 1).transpose(), false);
}

GroupHom restrict_cochains(const Subcomplex &from, const Subcomplex &to, int k, const CoeffGroup &G) {
  require_subcomplex(to, from);
  return GroupHom(cochain_group(from, k, G), cochain_group(to, k, G), coordinate_inclusion(to, from, k).transpose(), false);
}

GroupHom extend_by_zero(const Subcomplex &from, const Subcomplex &to, int k, const CoeffGroup &G) {
  require_subcomplex(from, to);
  return GroupHom(cochain_group(from, k, G), cochain_group(to, k, G), coordinate_inclusion(from, to, k), false);
}

ChainComplex cochain_complex(const Subcomplex &B, const CoeffGroup &G) {
  int d = B.dim();
  std::vector<FgAbGroup> groups;
  std::vector<GroupHom> diffs;
  // degrees -d .. 0; diffs[j] leaves degree -d + j + 1, i.e. C^{d-j-1} -> C^{d-j}
  for (int n = -d; n <= 0; ++n) groups.push_back(cochain_group(B, -n, G));
  for (int j = 0; j < d; ++j) diffs.push_back(coboundary(B, d - j - 1, G));
  return ChainComplex(-d, groups, diffs);
}

std::map<int, FgAbGroup> simplicial_cohomology(const Subcomplex &B, const CoeffGroup &G) {
  std::map<int, FgAbGroup> out;
  for (const auto &[n, g] : homology(cochain_complex(B, G))) out[-n] = g;
  return out;
}

// ---------------------------------------------------------------- isomorphisms

SimplicialIso SimplicialIso::make(ComplexPtr source, ComplexPtr target, std::vector<int> vertex_map) {
  if (static_cast<int>(vertex_map.size()) != source->num_vertices() || source->num_vertices() != target->num_vertices())
    throw StructuralError("vertex map has the wrong size");
  std::vector<int> sorted = vertex_map;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) throw StructuralError("vertex map is not a bijection");
  SimplicialIso f{std::move(source), std::move(target), std::move(vertex_map)};
  for (int k = 0; k <= f.source->dim(); ++k) {
    if (f.source->count(k) != f.target->count(k)) throw StructuralError("vertex map is not a simplicial isomorphism");
    for (const auto &s : f.source->simplices(k))
      if (f.target->index_of(f.apply(s)) < 0) throw StructuralError("vertex map is not a simplicial isomorphism");
  }
  if (f.source->dim() != f.target->dim()) throw StructuralError("vertex map is not a simplicial isomorphism");
  return f;
}

Simplex SimplicialIso::apply(const Simplex &s) const {
  Simplex t;
  for (int v : s) t.push_back(vertex_map.at(v));
  std::sort(t.begin(), t.end());
  return t;
}

Subcomplex SimplicialIso::apply(const Subcomplex &s) const {
  std::vector<Simplex> gens;
  for (int k = 0; k <= s.dim(); ++k)
    for (int i : s.indices(k)) gens.push_back(apply(source->simplex(k, i)));
  return Subcomplex(target, gens);
}

int SimplicialIso::orientation(const Simplex &s) const {
  std::vector<int> img;
  for (int v : s) img.push_back(vertex_map.at(v));
  int inversions = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

SimplicialIso SimplicialIso::inverse() const {
  std::vector<int> inv(vertex_map.size());
  for (std::size_t i = 0; i < vertex_map.size(); ++i) inv[vertex_map[i]] = static_cast<int>(i);
  return SimplicialIso{target, source, inv};
}

SimplicialIso compose(const SimplicialIso &g, const SimplicialIso &f) {
  if (f.target != g.source) throw StructuralError("isomorphisms do not compose");
  std::vector<int> m(f.vertex_map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.vertex_map[f.vertex_map[i]];
  return SimplicialIso{f.source, g.target, m};
}

} // namespace artifact
