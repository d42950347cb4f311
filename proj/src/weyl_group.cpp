#include "adm/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace adm {

namespace {
constexpr std::size_t kEnumLimit = 2'000'000;

std::vector<WeylElt> sorted_by_length(const WeylGroup& W, std::vector<WeylElt> v) {
  std::sort(v.begin(), v.end(), [&](const WeylElt& a, const WeylElt& b) {
    int la = W.length(a), lb = W.length(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  return v;
}
}  // namespace

WeylGroup::WeylGroup(const RootDatum& rd) : rd_(rd) {
  const int n = rd.rank();
  id_ = {Mat::identity(n), Mat::identity(n)};
  for (int i = 0; i < n; ++i) gens_.push_back(reflection(rd.simple_root(i)));
}

WeylElt WeylGroup::reflection(const Root& alpha) const {
  const int n = rd_.rank();
  if (!rd_.is_root(alpha)) throw std::domain_error("reflection: not a root");
  Coweight cv = rd_.coroot(alpha);
  Mat m = Mat::identity(n);
  Mat r = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // s(lambda) = lambda - <lambda, alpha> alpha^vee; <e_j, alpha> = alpha_j
      m.at(i, j) -= detail::narrow(__int128(cv.v[i]) * alpha.v[j]);
      // s(beta) = beta - <alpha^vee, beta> alpha; <alpha^vee, e_j> = (alpha^vee)_j
      r.at(i, j) -= detail::narrow(__int128(alpha.v[i]) * cv.v[j]);
    }
  return {m, r};
}

int WeylGroup::length(const WeylElt& z) const {
  int len = 0;
  for (const Root& alpha : rd_.positive_roots()) {
    Root img = act_root(z, alpha);
    if (!img.is_positive()) ++len;
  }
  return len;
}

bool WeylGroup::has_left_descent(const WeylElt& z, int i) const {
  // l(s_i z) < l(z)  <=>  z^{-1}(alpha_i) < 0; its coordinates are row i of z.m.
  Vec row = z.m.row(i);
  return !row.is_zero() && row.all_nonpos();
}

std::vector<int> WeylGroup::word(const WeylElt& z) const {
  std::vector<int> out;
  WeylElt x = z;
  while (!x.is_identity()) {
    int d = -1;
    for (int i = 0; i < rd_.rank(); ++i)
      if (has_left_descent(x, i)) {
        d = i;
        break;
      }
    if (d < 0) throw std::logic_error("no descent for a non-identity element");
    out.push_back(d);
    x = compose(simple(d), x);
  }
  return out;
}

std::vector<int> WeylGroup::support(const WeylElt& z) const {
  std::vector<int> w = word(z);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

std::string WeylGroup::to_string(const WeylElt& z) const {
  std::vector<int> w = word(z);
  if (w.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << '*';
    os << 's' << (w[k] + 1);
  }
  return os.str();
}

WeylElt WeylGroup::parse(const std::string& s) const {
  WeylElt z = id_;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    std::string tok = s.substr(pos, end - pos);
    if (tok == "e") {
      // identity factor
    } else if (tok.size() >= 2 && tok[0] == 's') {
      int i = 0;
      for (std::size_t k = 1; k < tok.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(tok[k])))
          throw std::invalid_argument("bad Weyl word token: " + tok);
        i = i * 10 + (tok[k] - '0');
      }
      if (i < 1 || i > rd_.rank()) throw std::invalid_argument("simple index out of range: " + tok);
      z = compose(z, simple(i - 1));
    } else {
      throw std::invalid_argument("bad Weyl word token: " + tok);
    }
    pos = end + 1;
  }
  return z;
}

const std::vector<WeylElt>& WeylGroup::elements() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!elements_.empty()) return elements_;
  std::unordered_set<WeylElt> seen{id_};
  std::deque<WeylElt> work{id_};
  while (!work.empty()) {
    WeylElt x = work.front();
    work.pop_front();
    for (const WeylElt& s : gens_) {
      WeylElt y = compose(x, s);
      if (seen.insert(y).second) {
        if (seen.size() > kEnumLimit)
          throw std::runtime_error("Weyl group too large for exhaustive enumeration");
        work.push_back(y);
      }
    }
  }
  elements_ = sorted_by_length(*this, {seen.begin(), seen.end()});
  return elements_;
}

std::vector<WeylElt> WeylGroup::subgroup(const std::vector<WeylElt>& gens) const {
  std::unordered_set<WeylElt> seen{id_};
  std::deque<WeylElt> work{id_};
  while (!work.empty()) {
    WeylElt x = work.front();
    work.pop_front();
    for (const WeylElt& s : gens) {
      WeylElt y = compose(x, s);
      if (seen.insert(y).second) {
        if (seen.size() > kEnumLimit) throw std::runtime_error("subgroup too large");
        work.push_back(y);
      }
    }
  }
  return sorted_by_length(*this, {seen.begin(), seen.end()});
}

std::vector<WeylElt> WeylGroup::parabolic(const std::vector<int>& I) const {
  std::vector<WeylElt> gens;
  for (int i : I) gens.push_back(simple(i));
  return subgroup(gens);
}

bool WeylGroup::is_min_rep(const WeylElt& a, const std::vector<int>& I) const {
  for (int i : I)
    if (!act_root(a, rd_.simple_root(i)).is_positive()) return false;
  return true;
}

std::vector<WeylElt> WeylGroup::min_coset_reps(const std::vector<int>& I) const {
  std::vector<WeylElt> out;
  for (const WeylElt& z : elements())
    if (is_min_rep(z, I)) out.push_back(z);
  return out;
}

std::vector<WeylElt> WeylGroup::double_coset(const WeylElt& a, const std::vector<int>& I,
                                             const std::vector<int>& J) const {
  if (!is_min_rep(a, I)) throw std::domain_error("double_coset: a is not in W^I");
  std::unordered_set<WeylElt> seen;
  for (const WeylElt& u : parabolic(I))
    for (const WeylElt& v : parabolic(J)) seen.insert(compose(compose(a, u), v));
  std::vector<WeylElt> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coweight> WeylGroup::orbit(const Coweight& mu) const {
  if (!rd_.is_dominant(mu)) throw std::domain_error("orbit requires a dominant coweight");
  std::unordered_set<Coweight> seen{mu};
  std::deque<Coweight> work{mu};
  while (!work.empty()) {
    Coweight x = work.front();
    work.pop_front();
    for (int i = 0; i < rd_.rank(); ++i) {
      Coweight y = x - rd_.simple_coroot(i) * x.v[i];  // s_i(x)
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  std::vector<Coweight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Root> WeylGroup::reflection_root(const WeylElt& z) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (reflections_.empty()) {
    for (const Root& alpha : rd_.positive_roots()) reflections_.emplace_back(reflection(alpha), alpha);
  }
  for (const auto& [s, alpha] : reflections_)
    if (s == z) return alpha;
  return std::nullopt;
}

}  // namespace adm
