#pragma once

// Reduced based root data for the classical and exceptional Cartan types,
// realized without any Euclidean embedding:
//   - roots carry coordinates in the simple-root basis,
//   - coweights carry coordinates in the fundamental-coweight basis,
//   - the pairing <coweight, root> is then the plain dot product.
// X_* is the full coweight lattice (Z-span of the fundamental coweights).

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "adm/linalg.hpp"

namespace adm {

struct Coweight {
  Vec v;

  bool operator==(const Coweight& o) const { return v == o.v; }
  bool operator!=(const Coweight& o) const { return v != o.v; }
  bool operator<(const Coweight& o) const { return v < o.v; }
  Coweight operator+(const Coweight& o) const { return {v + o.v}; }
  Coweight operator-(const Coweight& o) const { return {v - o.v}; }
  Coweight operator-() const { return {-v}; }
  Coweight operator*(Int c) const { return {v * c}; }
  bool is_zero() const { return v.is_zero(); }
};

struct Root {
  Vec v;

  bool operator==(const Root& o) const { return v == o.v; }
  bool operator!=(const Root& o) const { return v != o.v; }
  bool operator<(const Root& o) const { return v < o.v; }
  Root operator-() const { return {-v}; }
  // A root has uniformly signed coordinates in the simple-root basis.
  bool is_positive() const { return !v.is_zero() && v.all_nonneg(); }
};

inline Int pairing(const Coweight& cw, const Root& rt) { return dot(cw.v, rt.v); }

std::string to_string(const Coweight& cw);
std::string to_string(const Root& rt);

class RootDatum {
 public:
  // Accepts labels like "A2", "c3", "G2" (case-insensitive, no separator).
  static RootDatum build(const std::string& label);
  static RootDatum build(char type, int rank);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }

  // cartan(i, j) = <alpha_j^vee, alpha_i>
  Int cartan(int i, int j) const { return cartan_.at(i, j); }
  const Mat& cartan_matrix() const { return cartan_; }

  Root simple_root(int i) const { return {Vec::unit(rank_, i)}; }
  Coweight simple_coroot(int i) const { return {cartan_.col(i)}; }
  Coweight fundamental_coweight(int i) const { return {Vec::unit(rank_, i)}; }

  int num_positive() const { return static_cast<int>(pos_roots_.size()); }
  const std::vector<Root>& positive_roots() const { return pos_roots_; }
  const std::vector<Coweight>& positive_coroots() const { return pos_coroots_; }

  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;
  // Index into positive_roots(); the root must be positive.
  int positive_index(const Root& r) const;
  // Coroot of an arbitrary root (negative roots allowed).
  Coweight coroot(const Root& r) const;
  Int height(const Root& r) const { return r.v.sum(); }

  bool is_dominant(const Coweight& cw) const { return cw.v.all_nonneg(); }
  // Simple roots orthogonal to mu; requires mu dominant.
  std::vector<int> j_mu(const Coweight& mu) const;

  // Connected components of the Dynkin diagram, as sorted index lists.
  const std::vector<std::vector<int>>& components() const { return components_; }
  // One highest root per component, in component order.
  const std::vector<Root>& highest_roots() const { return highest_; }

  // <mu, 2 rho> = sum of <mu, alpha> over positive roots.
  Int pair_2rho(const Coweight& cw) const;

 private:
  RootDatum() = default;
  void enumerate_roots();

  std::string label_;
  int rank_ = 0;
  Mat cartan_;
  std::vector<Root> pos_roots_;
  std::vector<Coweight> pos_coroots_;
  std::unordered_map<Vec, int> pos_index_;
  std::vector<std::vector<int>> components_;
  std::vector<Root> highest_;
};

}  // namespace adm

template <>
struct std::hash<adm::Coweight> {
  std::size_t operator()(const adm::Coweight& c) const noexcept { return std::hash<adm::Vec>()(c.v); }
};

template <>
struct std::hash<adm::Root> {
  std::size_t operator()(const adm::Root& r) const noexcept { return std::hash<adm::Vec>()(r.v); }
};
