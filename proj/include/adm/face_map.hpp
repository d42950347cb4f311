#pragma once

// The faces Adm(mu)_F keyed by polytope faces, their interiors, boundaries
// and centers, and the face map w -> smallest face containing Lambda(w).
// Interiors are computed by the literal definition (subtracting all proper
// subfaces); the fiber description is then a theorem to check, not a
// tautology.

#include <vector>

#include "adm/admissible.hpp"
#include "adm/polytope.hpp"

namespace adm {

struct AdmFace {
  std::vector<AffineElt> elements;
  std::vector<AffineElt> interior;
  std::vector<AffineElt> boundary;
  AffineElt center;
};

class FaceDecomposition {
 public:
  // Builds Adm(mu)_F for every face. Each face is computed on its canonical
  // pair with the two-definition check, re-computed on one alternative
  // generating pair when the coset admits one, and the center is
  // cross-checked to have sub-system length zero.
  FaceDecomposition(const AffineWeyl& ctx, const AdmissibleSet& A, const FacePoset& P);

  const AffineWeyl& context() const { return ctx_; }
  const AdmissibleSet& admissible() const { return A_; }
  const FacePoset& poset() const { return P_; }
  const std::vector<AdmFace>& adm_faces() const { return adm_faces_; }
  const AdmFace& adm_face_for(int face_idx) const {
    return adm_faces_[static_cast<std::size_t>(face_idx)];
  }

  // |Delta|^f(w): index of the smallest face containing Lambda(w).
  int face_map(const AffineElt& w) const;

 private:
  const AffineWeyl& ctx_;
  const AdmissibleSet& A_;
  const FacePoset& P_;
  std::vector<AdmFace> adm_faces_;
};

}  // namespace adm
