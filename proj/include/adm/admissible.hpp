#pragma once

// Adm(mu) = { w : w <= t^{mu'} for some mu' in the W0-orbit of mu }, the sets
// Lambda(w), and the faces Adm(mu)_{a,I} computed by both definitions: the
// a(mu)-admissible set of the sub-affine Weyl group, and the ambient
// admissible set intersected with the coset W_{a,I,aff} t^{a(mu)}. The two
// must agree element-for-element; a mismatch is a hard logic error.

#include <unordered_set>
#include <vector>

#include "adm/affine.hpp"

namespace adm {

struct AdmissibleSet {
  Coweight mu;
  std::vector<AffineElt> elements;  // sorted by (length, serialized form)
  std::unordered_set<AffineElt> index;
  std::vector<AffineElt> maxima;  // the t^{mu'}, sorted
  AffineElt tau;                  // the length-zero element

  bool contains(const AffineElt& w) const { return index.count(w) > 0; }
};

// Requires mu dominant. ctx must be the full-system context.
AdmissibleSet admissible_set(const AffineWeyl& ctx, const Coweight& mu);

// Lambda(w) = { mu' in W0(mu) : w <= t^{mu'} }; requires w in A.
std::vector<Coweight> lambda_set(const AffineWeyl& ctx, const AdmissibleSet& A, const AffineElt& w);

// Membership in W_{a,I,aff} t^{mu_vertex} for the system of `sub`.
bool in_sub_coset(const AffineWeyl& sub, const AffineElt& w, const Coweight& mu_vertex);

// The face Adm(mu)_{a,I}. With verify_both, both definitions are computed and
// compared; otherwise only the coset filter runs. Requires a in W^I.
std::vector<AffineElt> adm_face(const AffineWeyl& ctx, const AdmissibleSet& A, const WeylElt& a,
                                const std::vector<int>& I, bool verify_both = true);

// Bruhat order of the sub-system; both elements must lie in its extended
// affine Weyl group.
bool sub_bruhat_leq(const AffineWeyl& sub, const AffineElt& w1, const AffineElt& w2);

}  // namespace adm
