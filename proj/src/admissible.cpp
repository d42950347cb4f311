#include "adm/admissible.hpp"

#include <algorithm>
#include <stdexcept>

namespace adm {

AdmissibleSet admissible_set(const AffineWeyl& ctx, const Coweight& mu) {
  const WeylGroup& W = ctx.weyl();
  if (!ctx.system().full) throw std::invalid_argument("admissible_set needs the full-system context");
  if (!W.datum().is_dominant(mu)) throw std::domain_error("admissible_set requires a dominant coweight");

  AdmissibleSet A;
  A.mu = mu;
  std::unordered_set<AffineElt> all;
  std::vector<AffineElt> maxima;
  for (const Coweight& m : W.orbit(mu)) {
    AffineElt tm = translation(W, m);
    maxima.push_back(tm);
    for (const AffineElt& v : ctx.lower_ideal(tm)) all.insert(v);
  }
  A.elements = ctx.sort_elements({all.begin(), all.end()});
  A.index = std::move(all);
  A.maxima = ctx.sort_elements(std::move(maxima));
  A.tau = ctx.length_zero_rep(translation(W, mu));
  for (const AffineElt& tm : A.maxima)
    if (ctx.length_zero_rep(tm) != A.tau)
      throw std::logic_error("orbit translations fall in different length-zero components");
  return A;
}

std::vector<Coweight> lambda_set(const AffineWeyl& ctx, const AdmissibleSet& A, const AffineElt& w) {
  if (!A.contains(w)) throw std::domain_error("lambda_set: element is not admissible");
  std::vector<Coweight> out;
  for (const AffineElt& tm : A.maxima)
    if (ctx.bruhat_leq(w, tm)) out.push_back(tm.t);
  std::sort(out.begin(), out.end());
  return out;
}

bool in_sub_coset(const AffineWeyl& sub, const AffineElt& w, const Coweight& mu_vertex) {
  return sub.same_coset(w, translation(sub.weyl(), mu_vertex));
}

std::vector<AffineElt> adm_face(const AffineWeyl& ctx, const AdmissibleSet& A, const WeylElt& a,
                                const std::vector<int>& I, bool verify_both) {
  const WeylGroup& W = ctx.weyl();
  AffineWeyl sub(W, sub_root_system(W, a, I));
  Coweight a_mu = W.act(a, A.mu);

  // Definition (ii): Adm(mu) ∩ W_{a,I,aff} t^{a(mu)}.
  std::vector<AffineElt> filtered;
  for (const AffineElt& w : A.elements)
    if (in_sub_coset(sub, w, a_mu)) filtered.push_back(w);
  filtered = ctx.sort_elements(std::move(filtered));

  if (verify_both) {
    // Definition (i): the a(mu)-admissible set of the sub-system, i.e. the
    // union of sub-order lower ideals over the W_{a,I}-orbit of a(mu).
    std::unordered_set<Coweight> orbit{a_mu};
    std::vector<Coweight> work{a_mu};
    while (!work.empty()) {
      Coweight x = work.back();
      work.pop_back();
      for (std::size_t b = 0; b < sub.system().base.size(); ++b) {
        Int p = pairing(x, sub.system().base[b]);
        Coweight y = x - sub.system().base_coroots[b] * p;
        if (orbit.insert(y).second) work.push_back(y);
      }
    }
    std::unordered_set<AffineElt> enumerated;
    for (const Coweight& m : orbit)
      for (const AffineElt& v : sub.lower_ideal(translation(W, m))) enumerated.insert(v);
    std::vector<AffineElt> route1 = ctx.sort_elements({enumerated.begin(), enumerated.end()});
    if (route1 != filtered) {
      std::string msg = "face definitions disagree for a=" + W.to_string(a) + " |I|=" +
                        std::to_string(I.size()) + ": sub-enumeration " +
                        std::to_string(route1.size()) + " elements, coset filter " +
                        std::to_string(filtered.size());
      throw std::logic_error(msg);
    }
  }
  return filtered;
}

bool sub_bruhat_leq(const AffineWeyl& sub, const AffineElt& w1, const AffineElt& w2) {
  if (!sub.in_finite_subgroup(w1.z) || !sub.in_finite_subgroup(w2.z))
    throw std::domain_error("sub_bruhat_leq: element outside the sub-affine Weyl group");
  return sub.bruhat_leq(w1, w2);
}

}  // namespace adm
