#pragma once

// The extended affine Weyl group ~W = X_* ⋊ W0 and, more generally, the
// extended affine Weyl group of any sub-root system on the same lattice:
// length, affine roots and reflections, alcove geometry, the Bruhat order
// extended across length-zero components, lower ideals and obtuse cones.
//
// Affine-root positivity follows the base alcove: (alpha, k) > 0 iff k > 0,
// or k = 0 and alpha > 0; equivalently k + <e, alpha> > 0 for e inside the
// base alcove.

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adm/subsystem.hpp"

namespace adm {

// w = t^lambda z
struct AffineElt {
  Coweight t;
  WeylElt z;

  bool operator==(const AffineElt& o) const { return t == o.t && z == o.z; }
  bool operator!=(const AffineElt& o) const { return !(*this == o); }
  bool operator<(const AffineElt& o) const { return t != o.t ? t < o.t : z < o.z; }
};

struct AffineRoot {
  Root alpha;
  Int k = 0;

  bool operator==(const AffineRoot& o) const { return alpha == o.alpha && k == o.k; }
  bool operator<(const AffineRoot& o) const { return alpha != o.alpha ? alpha < o.alpha : k < o.k; }
  bool is_positive() const { return k > 0 || (k == 0 && alpha.is_positive()); }
};

struct Alcove {
  AffineElt owner;     // sends the base alcove here
  RatVec barycenter;   // exact interior point
};

AffineElt affine_identity(const WeylGroup& W);
AffineElt translation(const WeylGroup& W, const Coweight& lambda);
AffineElt from_weyl(const WeylElt& z);
// (t^l z)(t^l' z') = t^{l + z(l')} z z'
AffineElt mult(const WeylGroup& W, const AffineElt& x, const AffineElt& y);
// (t^l z)^{-1} = t^{-z^{-1}(l)} z^{-1}
AffineElt inv(const WeylGroup& W, const AffineElt& x);
// v -> z(v) + lambda
RatVec act_point(const AffineElt& w, const RatVec& v);

std::string to_string(const WeylGroup& W, const AffineElt& w);
AffineElt parse_affine(const WeylGroup& W, const std::string& s);

// Word/length-zero decomposition of w: w = s_{i1} ... s_{ik} tau with the
// letters indexing simple_affine() and l(tau) = 0 in this system.
struct AffineDecomp {
  std::vector<int> word;
  AffineElt tau;
};

class AffineWeyl {
 public:
  AffineWeyl(const WeylGroup& W, SubRootSystem sys);

  const WeylGroup& weyl() const { return W_; }
  const SubRootSystem& system() const { return sys_; }

  // Simple affine reflections: s_beta for beta in the base, then
  // t^{theta^vee} s_theta per component.
  const std::vector<AffineElt>& simple_affine() const { return simple_affine_; }

  // l(t^l z) = sum_{g > 0, z^{-1} g > 0} |<l,g>| + sum_{g > 0, z^{-1} g < 0} |<l,g> - 1|
  // over the positive roots of this system.
  Int length(const AffineElt& w) const;

  // s_(alpha,k) = s_alpha t^{k alpha^vee} = t^{-k alpha^vee} s_alpha.
  AffineElt reflection(const AffineRoot& ar) const;

  // Exact interior point of the base alcove (same point for sub-systems).
  const RatVec& base_point() const { return base_point_; }
  Alcove alcove(const AffineElt& w) const { return {w, act_point(w, base_point_)}; }

  // Hyperplanes of this system separating the base alcove from w(a);
  // cardinality equals length(w). Roots are returned in positive form.
  std::vector<AffineRoot> separating_hyperplanes(const AffineElt& w) const;

  AffineDecomp decompose(const AffineElt& w) const;
  AffineElt length_zero_rep(const AffineElt& w) const { return decompose(w).tau; }

  // w1 and w2 lie in the same W_aff-coset of this system.
  bool same_coset(const AffineElt& w1, const AffineElt& w2) const;

  // Extended Bruhat order: false across distinct length-zero components,
  // descent recursion inside one. Memoized.
  bool bruhat_leq(const AffineElt& w1, const AffineElt& w2) const;

  // {v : v <= w}, by subword closure over one reduced word; sorted by
  // (length, serialized form).
  std::vector<AffineElt> lower_ideal(const AffineElt& w) const;

  // Membership in the combinatorial obtuse cone O(wref, z): Bruhat
  // comparison translated to an alcove deep inside z(C^-), evaluated at
  // depths N and N+1 (default N = l(wref) + 2). Disagreement between the
  // two depths raises std::runtime_error instead of guessing.
  bool obtuse_cone_member(const AffineElt& w, const AffineElt& wref, const WeylElt& z,
                          Int depth = -1) const;

  // z-part membership in the finite reflection subgroup of this system.
  bool in_finite_subgroup(const WeylElt& z) const;
  const std::vector<WeylElt>& finite_subgroup() const;

  std::vector<AffineElt> sort_elements(std::vector<AffineElt> v) const;

 private:
  struct LeqKey {
    AffineElt a, b;
    bool operator==(const LeqKey& o) const { return a == o.a && b == o.b; }
  };
  struct LeqKeyHash {
    static std::size_t one(const AffineElt& w) noexcept {
      return detail::hash_mix(std::hash<Coweight>()(w.t), std::hash<WeylElt>()(w.z));
    }
    std::size_t operator()(const LeqKey& k) const noexcept { return detail::hash_mix(one(k.a), one(k.b)); }
  };

  int first_descent(const AffineElt& w, Int len) const;

  const WeylGroup& W_;
  SubRootSystem sys_;
  std::vector<AffineElt> simple_affine_;
  RatVec base_point_;

  mutable std::mutex mu_;
  mutable std::vector<WeylElt> finite_;  // lazily enumerated (skipped when full)
  mutable std::unordered_map<LeqKey, bool, LeqKeyHash> leq_memo_;
};

}  // namespace adm

template <>
struct std::hash<adm::AffineElt> {
  std::size_t operator()(const adm::AffineElt& w) const noexcept {
    return adm::detail::hash_mix(std::hash<adm::Coweight>()(w.t), std::hash<adm::WeylElt>()(w.z));
  }
};
