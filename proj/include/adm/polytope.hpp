#pragma once

// Maxwell's combinatorial face poset of the coweight polytope P_mu: faces
// are the double cosets a W_I W_{J_mu}, kept literally as element sets so
// that the poset isomorphism and the intersection theorem can be checked
// word-for-word. Containment is computed both through vertex sets and
// through cosets and the two must agree.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "adm/weyl_group.hpp"

namespace adm {

struct FaceHandle {
  std::vector<WeylElt> coset;  // a W_I W_{J_mu}, sorted
  WeylElt a;                   // canonical pair: minimal (length, word, |I|, I)
  std::vector<int> I;
  std::vector<std::pair<WeylElt, std::vector<int>>> pairs;  // all generating pairs
  std::vector<Coweight> vertices;                           // a W_I (mu), sorted
  int dim = 0;
};

class FacePoset {
 public:
  // Requires mu dominant and nonzero.
  FacePoset(const WeylGroup& W, const Coweight& mu);

  const WeylGroup& weyl() const { return W_; }
  const Coweight& mu() const { return mu_; }
  const std::vector<FaceHandle>& faces() const { return faces_; }
  int size() const { return static_cast<int>(faces_.size()); }

  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i * size() + j)]; }
  // Empty when the cosets are disjoint; a nonempty intersection that is not
  // itself a registered face throws (it would falsify Maxwell's theorem).
  std::optional<int> intersection(int i, int j) const;
  // The unique leq-minimal face whose vertex set contains S; S must be a
  // nonempty subset of the orbit.
  int smallest_containing(const std::vector<Coweight>& S) const;

  int top() const { return top_; }
  std::optional<int> find_pair(const WeylElt& a, const std::vector<int>& I) const;

  std::string face_name(int i) const;  // "(a; I)" with 1-based indices
  nlohmann::ordered_json face_json(int i) const;
  nlohmann::ordered_json to_json() const;
  std::string to_dot() const;  // Hasse diagram (transitive reduction)
  std::vector<std::pair<int, int>> hasse_edges() const;

 private:
  const WeylGroup& W_;
  Coweight mu_;
  std::vector<Coweight> orbit_;
  std::vector<FaceHandle> faces_;
  std::vector<char> leq_;
  int top_ = -1;
};

}  // namespace adm
