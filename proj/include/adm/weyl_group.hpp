#pragma once

// The finite Weyl group W0. An element is stored as a pair of integer
// matrices: its action on X_* in the fundamental-coweight basis and its
// action on roots in the simple-root basis. The two are contragredient
// (M^T R = I), which makes inversion a pair of transpositions.

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "adm/root_datum.hpp"

namespace adm {

struct WeylElt {
  Mat m;  // action on coweights
  Mat r;  // action on roots

  bool operator==(const WeylElt& o) const { return m == o.m; }
  bool operator!=(const WeylElt& o) const { return m != o.m; }
  bool operator<(const WeylElt& o) const { return m < o.m; }
  bool is_identity() const { return m == Mat::identity(m.n); }
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& rd);

  const RootDatum& datum() const { return rd_; }
  int rank() const { return rd_.rank(); }

  const WeylElt& identity() const { return id_; }
  const WeylElt& simple(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  // s_alpha for an arbitrary root of the datum.
  WeylElt reflection(const Root& alpha) const;

  WeylElt compose(const WeylElt& a, const WeylElt& b) const { return {a.m.mul(b.m), a.r.mul(b.r)}; }
  WeylElt inverse(const WeylElt& a) const { return {a.r.transposed(), a.m.transposed()}; }
  Coweight act(const WeylElt& z, const Coweight& cw) const { return {z.m.apply(cw.v)}; }
  Root act_root(const WeylElt& z, const Root& rt) const { return {z.r.apply(rt.v)}; }

  int length(const WeylElt& z) const;
  // Greedy reduced word: always strips the smallest simple left descent.
  std::vector<int> word(const WeylElt& z) const;
  // Letters occurring in any reduced word, sorted.
  std::vector<int> support(const WeylElt& z) const;

  std::string to_string(const WeylElt& z) const;
  WeylElt parse(const std::string& s) const;

  // Full enumeration, sorted by (length, action matrix); cached.
  // Throws for groups with more than ~2e6 elements.
  const std::vector<WeylElt>& elements() const;
  std::size_t order() const { return elements().size(); }

  // Closure of the given generators, sorted like elements().
  std::vector<WeylElt> subgroup(const std::vector<WeylElt>& gens) const;
  // W_I for a set of simple indices.
  std::vector<WeylElt> parabolic(const std::vector<int>& I) const;

  // a in W^I  <=>  a maps every alpha_i, i in I, to a positive root.
  bool is_min_rep(const WeylElt& a, const std::vector<int>& I) const;
  std::vector<WeylElt> min_coset_reps(const std::vector<int>& I) const;
  // The element set of a W_I W_J; requires a in W^I.
  std::vector<WeylElt> double_coset(const WeylElt& a, const std::vector<int>& I,
                                    const std::vector<int>& J) const;

  // W0-orbit of a dominant coweight, sorted.
  std::vector<Coweight> orbit(const Coweight& mu) const;

  // If z = s_gamma for a positive root gamma, returns gamma.
  std::optional<Root> reflection_root(const WeylElt& z) const;

 private:
  bool has_left_descent(const WeylElt& z, int i) const;

  const RootDatum& rd_;
  WeylElt id_;
  std::vector<WeylElt> gens_;
  mutable std::mutex mu_;
  mutable std::vector<WeylElt> elements_;
  mutable std::vector<std::pair<WeylElt, Root>> reflections_;
};

}  // namespace adm

template <>
struct std::hash<adm::WeylElt> {
  std::size_t operator()(const adm::WeylElt& z) const noexcept { return std::hash<adm::Mat>()(z.m); }
};
