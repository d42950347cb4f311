#pragma once

// Sub-root systems Phi_{a,I} of the ambient datum, carried with the base
// Delta_{a,I} = a(I) and the positive system Phi_{a,I} ∩ Phi^+. The ambient
// coweight lattice X_* is kept unchanged; all coordinates stay ambient.
// The full system is the special case a = e, I = Delta_0.

#include <vector>

#include "adm/weyl_group.hpp"

namespace adm {

struct SubRootSystem {
  const RootDatum* rd = nullptr;
  WeylElt a;
  std::vector<int> I;  // ambient simple indices, sorted
  bool full = false;

  std::vector<Root> base;              // a(alpha_i), i in I
  std::vector<Coweight> base_coroots;  // matching coroots; a Z-basis of Z Phi_{a,I}^vee
  std::vector<Root> positives;         // Phi_{a,I}^+ sorted by (sub-height, coords)
  std::vector<Coweight> pos_coroots;
  std::vector<Vec> pos_base_coords;    // coordinates of each positive in `base`

  std::vector<std::vector<int>> components;  // indices into base
  std::vector<int> highest;                  // positive index of the highest root per component

  bool contains_root(const Root& r) const;
  Int sub_height(int pos_idx) const { return pos_base_coords[static_cast<std::size_t>(pos_idx)].sum(); }
};

// Requires a in W^I; throws std::domain_error otherwise.
SubRootSystem sub_root_system(const WeylGroup& W, const WeylElt& a, std::vector<int> I);
SubRootSystem full_system(const WeylGroup& W);

}  // namespace adm
