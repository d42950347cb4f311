#include "adm/polytope.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace adm {

namespace {

std::vector<int> one_based(const std::vector<int>& I) {
  std::vector<int> out;
  out.reserve(I.size());
  for (int i : I) out.push_back(i + 1);
  return out;
}

}  // namespace

FacePoset::FacePoset(const WeylGroup& W, const Coweight& mu) : W_(W), mu_(mu) {
  const RootDatum& rd = W.datum();
  if (!rd.is_dominant(mu)) throw std::domain_error("face poset requires a dominant coweight");
  if (mu.is_zero()) throw std::domain_error("face poset is degenerate for mu = 0");
  orbit_ = W.orbit(mu);
  std::vector<int> Jmu = rd.j_mu(mu);
  std::vector<WeylElt> WJ = W.parabolic(Jmu);

  std::map<std::vector<WeylElt>, std::size_t> by_coset;
  const int n = rd.rank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) I.push_back(i);
    std::vector<WeylElt> WI = W.parabolic(I);
    for (const WeylElt& a : W.min_coset_reps(I)) {
      std::unordered_set<WeylElt> coset_set;
      for (const WeylElt& u : WI)
        for (const WeylElt& v : WJ) coset_set.insert(W.compose(W.compose(a, u), v));
      std::vector<WeylElt> coset(coset_set.begin(), coset_set.end());
      std::sort(coset.begin(), coset.end());
      auto [it, fresh] = by_coset.try_emplace(std::move(coset), faces_.size());
      if (fresh) {
        FaceHandle f;
        f.coset = it->first;
        std::unordered_set<Coweight> verts;
        for (const WeylElt& u : WI) verts.insert(W.act(W.compose(a, u), mu));
        f.vertices.assign(verts.begin(), verts.end());
        std::sort(f.vertices.begin(), f.vertices.end());
        std::vector<Vec> diffs;
        for (std::size_t k = 1; k < f.vertices.size(); ++k)
          diffs.push_back((f.vertices[k] - f.vertices[0]).v);
        f.dim = rank_of(diffs);
        faces_.push_back(std::move(f));
      }
      faces_[it->second].pairs.emplace_back(a, I);
    }
  }

  // Canonical pair: minimal (length(a), word(a), |I|, I).
  for (FaceHandle& f : faces_) {
    auto key = [&](const std::pair<WeylElt, std::vector<int>>& p) {
      return std::make_tuple(W.length(p.first), W.word(p.first), p.second.size(), p.second);
    };
    std::sort(f.pairs.begin(), f.pairs.end(),
              [&](const auto& x, const auto& y) { return key(x) < key(y); });
    f.a = f.pairs.front().first;
    f.I = f.pairs.front().second;
  }

  std::sort(faces_.begin(), faces_.end(), [](const FaceHandle& x, const FaceHandle& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.coset < y.coset;
  });

  // Order relation, through vertices and through cosets; Maxwell's poset
  // isomorphism says these coincide.
  const int N = size();
  leq_.assign(static_cast<std::size_t>(N * N), 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      bool by_vertex = std::includes(faces_[static_cast<std::size_t>(j)].vertices.begin(),
                                     faces_[static_cast<std::size_t>(j)].vertices.end(),
                                     faces_[static_cast<std::size_t>(i)].vertices.begin(),
                                     faces_[static_cast<std::size_t>(i)].vertices.end());
      bool by_coset = std::includes(faces_[static_cast<std::size_t>(j)].coset.begin(),
                                    faces_[static_cast<std::size_t>(j)].coset.end(),
                                    faces_[static_cast<std::size_t>(i)].coset.begin(),
                                    faces_[static_cast<std::size_t>(i)].coset.end());
      if (by_vertex != by_coset)
        throw std::logic_error("face order by vertices and by cosets disagree");
      leq_[static_cast<std::size_t>(i * N + j)] = by_vertex ? 1 : 0;
    }

  for (int i = 0; i < N; ++i)
    if (faces_[static_cast<std::size_t>(i)].vertices.size() == orbit_.size()) top_ = i;
  if (top_ < 0) throw std::logic_error("missing top face");
}

std::optional<int> FacePoset::intersection(int i, int j) const {
  const FaceHandle& fi = faces_[static_cast<std::size_t>(i)];
  const FaceHandle& fj = faces_[static_cast<std::size_t>(j)];
  std::vector<WeylElt> inter;
  std::set_intersection(fi.coset.begin(), fi.coset.end(), fj.coset.begin(), fj.coset.end(),
                        std::back_inserter(inter));
  if (inter.empty()) return std::nullopt;
  for (int k = 0; k < size(); ++k)
    if (faces_[static_cast<std::size_t>(k)].coset == inter) return k;
  throw std::logic_error("nonempty coset intersection is not a registered face");
}

int FacePoset::smallest_containing(const std::vector<Coweight>& S) const {
  if (S.empty()) throw std::domain_error("smallest_containing: empty vertex set");
  for (const Coweight& s : S)
    if (!std::binary_search(orbit_.begin(), orbit_.end(), s))
      throw std::domain_error("smallest_containing: " + to_string(s) + " is not in the orbit");
  std::vector<int> containing;
  for (int i = 0; i < size(); ++i) {
    const auto& verts = faces_[static_cast<std::size_t>(i)].vertices;
    bool all = true;
    for (const Coweight& s : S)
      if (!std::binary_search(verts.begin(), verts.end(), s)) all = false;
    if (all) containing.push_back(i);
  }
  std::vector<int> minimal;
  for (int i : containing) {
    bool is_min = true;
    for (int j : containing)
      if (j != i && leq(j, i)) is_min = false;
    if (is_min) minimal.push_back(i);
  }
  if (minimal.size() != 1)
    throw std::logic_error("smallest containing face is not unique");
  return minimal.front();
}

std::optional<int> FacePoset::find_pair(const WeylElt& a, const std::vector<int>& I) const {
  for (int i = 0; i < size(); ++i)
    for (const auto& [pa, pI] : faces_[static_cast<std::size_t>(i)].pairs)
      if (pa == a && pI == I) return i;
  return std::nullopt;
}

std::string FacePoset::face_name(int i) const {
  const FaceHandle& f = faces_[static_cast<std::size_t>(i)];
  std::ostringstream os;
  os << '(' << W_.to_string(f.a) << "; {";
  for (std::size_t k = 0; k < f.I.size(); ++k) {
    if (k) os << ',';
    os << (f.I[k] + 1);
  }
  os << "})";
  return os.str();
}

nlohmann::ordered_json FacePoset::face_json(int i) const {
  const FaceHandle& f = faces_[static_cast<std::size_t>(i)];
  nlohmann::ordered_json j;
  j["canonical_pair"] = {{"a", W_.to_string(f.a)}, {"I", one_based(f.I)}};
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const Coweight& v : f.vertices) {
    nlohmann::ordered_json vv = nlohmann::ordered_json::array();
    for (int k = 0; k < v.v.n; ++k) vv.push_back(v.v[k]);
    verts.push_back(vv);
  }
  j["vertices"] = verts;
  j["dim"] = f.dim;
  return j;
}

nlohmann::ordered_json FacePoset::to_json() const {
  nlohmann::ordered_json j;
  j["mu"] = nlohmann::ordered_json::array();
  for (int k = 0; k < mu_.v.n; ++k) j["mu"].push_back(mu_.v[k]);
  j["face_count"] = size();
  j["faces"] = nlohmann::ordered_json::array();
  for (int i = 0; i < size(); ++i) j["faces"].push_back(face_json(i));
  return j;
}

std::vector<std::pair<int, int>> FacePoset::hasse_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < size(); ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) edges.emplace_back(i, j);
    }
  return edges;
}

std::string FacePoset::to_dot() const {
  std::ostringstream os;
  os << "digraph faces {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < size(); ++i)
    os << "  f" << i << " [label=\"" << face_name(i) << " dim="
       << faces_[static_cast<std::size_t>(i)].dim << "\"];\n";
  for (const auto& [i, j] : hasse_edges()) os << "  f" << i << " -> f" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace adm
