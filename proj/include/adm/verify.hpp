#pragma once

// Verification suites: every theorem and proof lemma of the face-map story,
// run exhaustively on one (type, mu) case. Suites return structured reports;
// nothing is sampled, every check is exact.

#include <memory>
#include <string>
#include <vector>

#include "adm/face_map.hpp"
#include "adm/report.hpp"

namespace adm {

// One fully-built case: root datum, Weyl group, full affine context,
// admissible set, face poset, face decomposition.
struct Workspace {
  std::unique_ptr<RootDatum> rd;
  std::unique_ptr<WeylGroup> W;
  std::unique_ptr<AffineWeyl> ctx;
  Coweight mu;
  std::unique_ptr<AdmissibleSet> A;
  std::unique_ptr<FacePoset> P;           // null when mu = 0
  std::unique_ptr<FaceDecomposition> D;   // null when mu = 0

  static Workspace make(const std::string& type_label, const std::vector<Int>& mu_coords);
  std::string case_name() const;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"maxwell", "hh", "main1", "main2",
                                              "characterization", "lemmas"};
  return names;
}

Report run_suite(Workspace& ws, const std::string& suite);  // suite or "all"

// The a1/a2 cancellation lemma, exhaustive over I and positive-root pairs
// for one Cartan type; exposed separately so higher-rank types can be swept
// without building their admissible sets.
Check check_a1a2(const std::string& type_label);

}  // namespace adm
