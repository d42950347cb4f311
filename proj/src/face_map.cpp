#include "adm/face_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace adm {

FaceDecomposition::FaceDecomposition(const AffineWeyl& ctx, const AdmissibleSet& A,
                                     const FacePoset& P)
    : ctx_(ctx), A_(A), P_(P) {
  const WeylGroup& W = ctx.weyl();
  adm_faces_.resize(static_cast<std::size_t>(P.size()));

  for (int i = 0; i < P.size(); ++i) {
    const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
    AdmFace& af = adm_faces_[static_cast<std::size_t>(i)];
    af.elements = adm_face(ctx, A, f.a, f.I, /*verify_both=*/true);
    if (f.pairs.size() > 1) {
      const auto& [a2, I2] = f.pairs[1];
      std::vector<AffineElt> again = adm_face(ctx, A, a2, I2, /*verify_both=*/true);
      if (again != af.elements)
        throw std::logic_error("Adm(mu)_F differs across generating pairs of face " +
                               P.face_name(i));
    }
  }

  for (int i = 0; i < P.size(); ++i) {
    AdmFace& af = adm_faces_[static_cast<std::size_t>(i)];
    std::unordered_set<AffineElt> lower;
    for (int j = 0; j < P.size(); ++j) {
      if (j == i || !P.leq(j, i)) continue;
      for (const AffineElt& w : adm_faces_[static_cast<std::size_t>(j)].elements) lower.insert(w);
    }
    for (const AffineElt& w : af.elements)
      (lower.count(w) ? af.boundary : af.interior).push_back(w);

    // Center: the unique Bruhat-minimal element of the face.
    std::vector<AffineElt> minima;
    for (const AffineElt& w : af.elements) {
      bool minimal = true;
      for (const AffineElt& v : af.elements)
        if (v != w && ctx.bruhat_leq(v, w)) minimal = false;
      if (minimal) minima.push_back(w);
    }
    if (minima.size() != 1)
      throw std::logic_error("face " + P.face_name(i) + " has " +
                             std::to_string(minima.size()) + " minimal elements");
    af.center = minima.front();

    const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
    AffineWeyl sub(W, sub_root_system(W, f.a, f.I));
    if (sub.length(af.center) != 0)
      throw std::logic_error("center of face " + P.face_name(i) + " has nonzero sub-length");
  }
}

int FaceDecomposition::face_map(const AffineElt& w) const {
  return P_.smallest_containing(lambda_set(ctx_, A_, w));
}

}  // namespace adm
