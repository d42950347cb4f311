#include "adm/subsystem.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace adm {

bool SubRootSystem::contains_root(const Root& r) const {
  if (r.is_positive()) return std::binary_search(positives.begin(), positives.end(), r);
  Root neg = -r;
  return std::binary_search(positives.begin(), positives.end(), neg);
}

SubRootSystem sub_root_system(const WeylGroup& W, const WeylElt& a, std::vector<int> I) {
  const RootDatum& rd = W.datum();
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I)
    if (i < 0 || i >= rd.rank()) throw std::invalid_argument("simple index out of range");
  if (!W.is_min_rep(a, I)) throw std::domain_error("sub_root_system: a is not in W^I");

  SubRootSystem S;
  S.rd = &rd;
  S.a = a;
  S.I = I;
  S.full = a.is_identity() && static_cast<int>(I.size()) == rd.rank();

  for (int i : I) {
    S.base.push_back(W.act_root(a, rd.simple_root(i)));
    S.base_coroots.push_back(W.act(a, rd.simple_coroot(i)));
  }

  // Phi_I^+ = ambient positives supported on I; a in W^I maps it onto Phi_{a,I}^+.
  struct Entry {
    Root r;
    Coweight c;
    Vec coords;
  };
  std::vector<Entry> entries;
  for (int p = 0; p < rd.num_positive(); ++p) {
    const Root& beta = rd.positive_roots()[static_cast<std::size_t>(p)];
    bool supported = true;
    for (int i = 0; i < rd.rank(); ++i)
      if (beta.v[i] != 0 && !std::binary_search(I.begin(), I.end(), i)) supported = false;
    if (!supported) continue;
    Root img = W.act_root(a, beta);
    if (!img.is_positive()) throw std::logic_error("a(Phi_I^+) left the positive system");
    Vec coords = Vec::zero(static_cast<int>(I.size()));
    for (std::size_t k = 0; k < I.size(); ++k) coords[static_cast<int>(k)] = beta.v[I[k]];
    entries.push_back({img, W.act(a, rd.positive_coroots()[static_cast<std::size_t>(p)]), coords});
  }
  // Plain root order so contains_root can binary-search.
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.r < y.r; });
  for (const Entry& e : entries) {
    S.positives.push_back(e.r);
    S.pos_coroots.push_back(e.c);
    S.pos_base_coords.push_back(e.coords);
  }

  // Components of the sub-diagram; the Cartan pairings are a-invariant.
  const int m = static_cast<int>(I.size());
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  int nc = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<int> q{s};
    comp[static_cast<std::size_t>(s)] = nc;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < m; ++v)
        if (v != u && rd.cartan(I[static_cast<std::size_t>(u)], I[static_cast<std::size_t>(v)]) != 0 &&
            comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = nc;
          q.push_back(v);
        }
    }
    ++nc;
  }
  S.components.assign(static_cast<std::size_t>(nc), {});
  for (int s = 0; s < m; ++s) S.components[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])].push_back(s);

  for (const auto& c : S.components) {
    int best = -1;
    bool tie = false;
    for (std::size_t p = 0; p < S.positives.size(); ++p) {
      const Vec& coords = S.pos_base_coords[p];
      bool inside = true;
      for (int k = 0; k < m; ++k)
        if (coords[k] != 0 && std::find(c.begin(), c.end(), k) == c.end()) inside = false;
      if (!inside) continue;
      if (best < 0 || coords.sum() > S.pos_base_coords[static_cast<std::size_t>(best)].sum()) {
        best = static_cast<int>(p);
        tie = false;
      } else if (coords.sum() == S.pos_base_coords[static_cast<std::size_t>(best)].sum()) {
        tie = true;
      }
    }
    if (best < 0 || tie) throw std::logic_error("sub-system highest root not unique");
    S.highest.push_back(best);
  }
  return S;
}

SubRootSystem full_system(const WeylGroup& W) {
  std::vector<int> all;
  for (int i = 0; i < W.rank(); ++i) all.push_back(i);
  return sub_root_system(W, W.identity(), all);
}

}  // namespace adm
