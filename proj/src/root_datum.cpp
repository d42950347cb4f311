#include "adm/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace adm {

std::string to_string(const Coweight& cw) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < cw.v.n; ++i) {
    if (i) os << ',';
    os << cw.v[i];
  }
  os << ']';
  return os.str();
}

std::string to_string(const Root& rt) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < rt.v.n; ++i) {
    if (i) os << ',';
    os << rt.v[i];
  }
  os << ')';
  return os.str();
}

namespace {

struct Edge {
  int i, j;
  Int cij;  // cartan(i, j) = <alpha_j^vee, alpha_i>
  Int cji;
};

// Cartan matrices in the convention cartan(i, j) = <alpha_j^vee, alpha_i>,
// Bourbaki numbering, 0-indexed nodes.
std::vector<Edge> edges_for(char type, int n) {
  std::vector<Edge> e;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 <= upto; ++i) e.push_back({i, i + 1, -1, -1});
  };
  switch (type) {
    case 'A':
      if (n < 1) throw std::invalid_argument("type A requires rank >= 1");
      chain(n - 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("type B requires rank >= 2");
      chain(n - 2);
      e.push_back({n - 2, n - 1, -2, -1});
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("type C requires rank >= 2");
      chain(n - 2);
      e.push_back({n - 2, n - 1, -1, -2});
      break;
    case 'D':
      if (n < 2) throw std::invalid_argument("type D requires rank >= 2");
      chain(n - 2);
      if (n >= 3) e.push_back({n - 3, n - 1, -1, -1});
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("type G requires rank 2");
      e.push_back({0, 1, -1, -3});
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("type F requires rank 4");
      e.push_back({0, 1, -1, -1});
      e.push_back({1, 2, -2, -1});
      e.push_back({2, 3, -1, -1});
      break;
    case 'E': {
      if (n < 6 || n > 8) throw std::invalid_argument("type E requires rank 6, 7 or 8");
      auto link = [&](int i, int j) { e.push_back({i, j, -1, -1}); };
      link(0, 2);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      link(1, 3);
      if (n >= 7) link(5, 6);
      if (n >= 8) link(6, 7);
      break;
    }
    default:
      throw std::invalid_argument(std::string("unsupported Cartan type '") + type + "'");
  }
  return e;
}

}  // namespace

RootDatum RootDatum::build(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad type label: " + label);
  char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  int rank = 0;
  for (std::size_t k = 1; k < label.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(label[k])))
      throw std::invalid_argument("bad type label: " + label);
    rank = rank * 10 + (label[k] - '0');
  }
  return build(type, rank);
}

RootDatum RootDatum::build(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  if (rank < 1 || rank > kMaxRank)
    throw std::invalid_argument("rank out of range (1.." + std::to_string(kMaxRank) + ")");
  RootDatum rd;
  rd.rank_ = rank;
  rd.label_ = std::string(1, type) + std::to_string(rank);
  rd.cartan_ = Mat::identity(rank);
  for (int i = 0; i < rank; ++i) rd.cartan_.at(i, i) = 2;
  for (const auto& e : edges_for(type, rank)) {
    rd.cartan_.at(e.i, e.j) = e.cij;
    rd.cartan_.at(e.j, e.i) = e.cji;
  }
  rd.enumerate_roots();
  return rd;
}

void RootDatum::enumerate_roots() {
  const int n = rank_;
  // Closure of the simple roots under simple reflections; coroots ride along
  // through the same reflections.
  std::unordered_map<Vec, Vec> all;  // root coords -> coroot coords
  std::deque<std::pair<Vec, Vec>> work;
  for (int i = 0; i < n; ++i) {
    Vec r = Vec::unit(n, i);
    Vec c = cartan_.col(i);
    all.emplace(r, c);
    work.emplace_back(r, c);
  }
  while (!work.empty()) {
    auto [r, c] = work.front();
    work.pop_front();
    for (int j = 0; j < n; ++j) {
      // s_j(alpha) = alpha - <alpha_j^vee, alpha> alpha_j
      Int p = 0;
      for (int i = 0; i < n; ++i) p += r[i] * cartan_.at(i, j);
      Vec r2 = r;
      r2[j] -= p;
      // s_j(alpha^vee) = alpha^vee - <alpha^vee, alpha_j> alpha_j^vee
      Vec c2 = c - cartan_.col(j) * c[j];
      if (all.emplace(r2, c2).second) work.emplace_back(r2, c2);
    }
  }
  for (const auto& [r, c] : all) {
    if (!r.is_zero() && r.all_nonneg()) {
      pos_roots_.push_back({r});
      pos_coroots_.push_back({c});
    }
  }
  // Sort positives by height then coordinates; keep coroots aligned.
  std::vector<int> idx(pos_roots_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    Int hx = pos_roots_[static_cast<std::size_t>(x)].v.sum();
    Int hy = pos_roots_[static_cast<std::size_t>(y)].v.sum();
    if (hx != hy) return hx < hy;
    return pos_roots_[static_cast<std::size_t>(x)].v < pos_roots_[static_cast<std::size_t>(y)].v;
  });
  std::vector<Root> pr;
  std::vector<Coweight> pc;
  pr.reserve(idx.size());
  pc.reserve(idx.size());
  for (int i : idx) {
    pr.push_back(pos_roots_[static_cast<std::size_t>(i)]);
    pc.push_back(pos_coroots_[static_cast<std::size_t>(i)]);
  }
  pos_roots_ = std::move(pr);
  pos_coroots_ = std::move(pc);
  for (std::size_t i = 0; i < pos_roots_.size(); ++i)
    pos_index_.emplace(pos_roots_[i].v, static_cast<int>(i));

  // Dynkin components.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    std::deque<int> q{i};
    comp[static_cast<std::size_t>(i)] = nc;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n; ++v)
        if (v != u && cartan_.at(u, v) != 0 && comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = nc;
          q.push_back(v);
        }
    }
    ++nc;
  }
  components_.assign(static_cast<std::size_t>(nc), {});
  for (int i = 0; i < n; ++i) components_[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);

  // Highest root per component: unique maximal height among roots supported there.
  for (const auto& c : components_) {
    const Root* best = nullptr;
    bool tie = false;
    for (const Root& r : pos_roots_) {
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if (r.v[i] != 0 && std::find(c.begin(), c.end(), i) == c.end()) inside = false;
      if (!inside) continue;
      if (!best || height(r) > height(*best)) {
        best = &r;
        tie = false;
      } else if (height(r) == height(*best)) {
        tie = true;
      }
    }
    if (!best || tie) throw std::logic_error("highest root not unique in component");
    highest_.push_back(*best);
  }
}

bool RootDatum::is_root(const Root& r) const {
  return pos_index_.count(r.v) > 0 || pos_index_.count((-r).v) > 0;
}

bool RootDatum::is_positive_root(const Root& r) const { return pos_index_.count(r.v) > 0; }

int RootDatum::positive_index(const Root& r) const {
  auto it = pos_index_.find(r.v);
  if (it == pos_index_.end()) throw std::domain_error("not a positive root: " + to_string(r));
  return it->second;
}

Coweight RootDatum::coroot(const Root& r) const {
  if (is_positive_root(r)) return pos_coroots_[static_cast<std::size_t>(positive_index(r))];
  Root neg = -r;
  return -pos_coroots_[static_cast<std::size_t>(positive_index(neg))];
}

std::vector<int> RootDatum::j_mu(const Coweight& mu) const {
  if (!is_dominant(mu)) throw std::domain_error("j_mu requires a dominant coweight");
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (mu.v[i] == 0) out.push_back(i);
  return out;
}

Int RootDatum::pair_2rho(const Coweight& cw) const {
  Int s = 0;
  for (const Root& r : pos_roots_) s += pairing(cw, r);
  return s;
}

}  // namespace adm
