#include "adm/affine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace adm {

AffineElt affine_identity(const WeylGroup& W) {
  return {Coweight{Vec::zero(W.rank())}, W.identity()};
}

AffineElt translation(const WeylGroup& W, const Coweight& lambda) {
  return {lambda, W.identity()};
}

AffineElt from_weyl(const WeylElt& z) { return {Coweight{Vec::zero(z.m.n)}, z}; }

AffineElt mult(const WeylGroup& W, const AffineElt& x, const AffineElt& y) {
  return {x.t + W.act(x.z, y.t), W.compose(x.z, y.z)};
}

AffineElt inv(const WeylGroup& W, const AffineElt& x) {
  WeylElt zi = W.inverse(x.z);
  return {-W.act(zi, x.t), zi};
}

RatVec act_point(const AffineElt& w, const RatVec& v) {
  return RatVec(w.z.m.apply(v.num) + w.t.v * v.den, v.den);
}

std::string to_string(const WeylGroup& W, const AffineElt& w) {
  bool zero = w.t.is_zero();
  bool ident = w.z.is_identity();
  if (zero && ident) return "e";
  if (zero) return W.to_string(w.z);
  std::ostringstream os;
  os << 't' << to_string(w.t);
  if (!ident) os << '*' << W.to_string(w.z);
  return os.str();
}

AffineElt parse_affine(const WeylGroup& W, const std::string& s) {
  std::string rest = s;
  Coweight lambda{Vec::zero(W.rank())};
  if (!rest.empty() && rest[0] == 't') {
    if (rest.size() < 3 || rest[1] != '[') throw std::invalid_argument("bad element: " + s);
    std::size_t close = rest.find(']');
    if (close == std::string::npos) throw std::invalid_argument("bad element: " + s);
    std::string body = rest.substr(2, close - 2);
    std::vector<Int> coords;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      std::string tok = body.substr(pos, comma - pos);
      if (tok.empty()) throw std::invalid_argument("bad element: " + s);
      std::size_t used = 0;
      Int val = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("bad element: " + s);
      coords.push_back(val);
      pos = comma + 1;
      if (comma == body.size()) break;
    }
    if (static_cast<int>(coords.size()) != W.rank())
      throw std::invalid_argument("translation coordinate count mismatch: " + s);
    for (int i = 0; i < W.rank(); ++i) lambda.v[i] = coords[static_cast<std::size_t>(i)];
    rest = rest.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != '*') throw std::invalid_argument("bad element: " + s);
      rest = rest.substr(1);
    }
  }
  WeylElt z = rest.empty() ? W.identity() : W.parse(rest);
  return {lambda, z};
}

AffineWeyl::AffineWeyl(const WeylGroup& W, SubRootSystem sys) : W_(W), sys_(std::move(sys)) {
  for (const Root& beta : sys_.base) simple_affine_.push_back(from_weyl(W_.reflection(beta)));
  for (int h : sys_.highest) {
    const Root& theta = sys_.positives[static_cast<std::size_t>(h)];
    const Coweight& theta_v = sys_.pos_coroots[static_cast<std::size_t>(h)];
    simple_affine_.push_back({theta_v, W_.reflection(theta)});
  }
  // rho^vee / h lies inside the ambient base alcove: <rho^vee, alpha> is the
  // height of alpha, strictly between 0 and the Coxeter bound.
  Int h = 1;
  for (const Root& r : W_.datum().positive_roots()) h = std::max(h, W_.datum().height(r) + 1);
  Vec ones = Vec::zero(W_.rank());
  for (int i = 0; i < W_.rank(); ++i) ones[i] = 1;
  base_point_ = RatVec(ones, h);
}

Int AffineWeyl::length(const AffineElt& w) const {
  Mat zinv_root = w.z.m.transposed();  // root action of z^{-1}
  Int len = 0;
  for (std::size_t p = 0; p < sys_.positives.size(); ++p) {
    const Root& gamma = sys_.positives[p];
    Root pre{zinv_root.apply(gamma.v)};
    Int pair = dot(w.t.v, gamma.v);
    if (pre.is_positive())
      len += pair < 0 ? -pair : pair;
    else
      len += pair - 1 < 0 ? 1 - pair : pair - 1;
  }
  return len;
}

AffineElt AffineWeyl::reflection(const AffineRoot& ar) const {
  Coweight cv = W_.datum().coroot(ar.alpha);
  return {-(cv * ar.k), W_.reflection(ar.alpha)};
}

std::vector<AffineRoot> AffineWeyl::separating_hyperplanes(const AffineElt& w) const {
  std::vector<AffineRoot> out;
  RatVec img = act_point(w, base_point_);
  const Int d = base_point_.den;
  for (std::size_t p = 0; p < sys_.positives.size(); ++p) {
    const Root& gamma = sys_.positives[p];
    Int s0 = dot(base_point_.num, gamma.v);
    Int s1 = dot(img.num, gamma.v);
    // H_(gamma,k) separates iff k*d + s0 and k*d + s1 have opposite signs.
    Int lo = std::min(s0, s1), hi = std::max(s0, s1);
    for (Int k = -(hi / d) - 2; k <= -(lo / d) + 2; ++k) {
      __int128 a = __int128(k) * d + s0;
      __int128 b = __int128(k) * d + s1;
      if (a == 0 || b == 0) throw std::logic_error("alcove point on a hyperplane");
      if ((a > 0) != (b > 0)) out.push_back({gamma, k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int AffineWeyl::first_descent(const AffineElt& w, Int len) const {
  for (std::size_t i = 0; i < simple_affine_.size(); ++i)
    if (length(mult(W_, simple_affine_[i], w)) < len) return static_cast<int>(i);
  return -1;
}

AffineDecomp AffineWeyl::decompose(const AffineElt& w) const {
  if (!sys_.full && !in_finite_subgroup(w.z))
    throw std::domain_error("element does not lie in this sub-affine Weyl group");
  AffineDecomp d;
  AffineElt x = w;
  Int len = length(x);
  while (len > 0) {
    int i = first_descent(x, len);
    if (i < 0) throw std::logic_error("positive length but no descent");
    d.word.push_back(i);
    x = mult(W_, simple_affine_[static_cast<std::size_t>(i)], x);
    --len;
  }
  d.tau = x;
  return d;
}

bool AffineWeyl::same_coset(const AffineElt& w1, const AffineElt& w2) const {
  AffineElt q = mult(W_, w1, inv(W_, w2));
  if (!sys_.full && !in_finite_subgroup(q.z)) return false;
  return solve_integer(
             [&] {
               std::vector<Vec> cols;
               for (const Coweight& c : sys_.base_coroots) cols.push_back(c.v);
               return cols;
             }(),
             q.t.v)
      .has_value();
}

bool AffineWeyl::bruhat_leq(const AffineElt& w1, const AffineElt& w2) const {
  if (w1 == w2) return true;
  Int l1 = length(w1), l2 = length(w2);
  if (l1 >= l2) return false;
  LeqKey key{w1, w2};
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = leq_memo_.find(key);
    if (it != leq_memo_.end()) return it->second;
  }
  // Lifting property, stripping left descents of the larger element.
  AffineElt a = w1, b = w2;
  bool result;
  for (;;) {
    if (a == b) {
      result = true;
      break;
    }
    if (l1 > l2) {
      result = false;
      break;
    }
    if (l2 == 0) {
      result = (a == b);
      break;
    }
    int i = first_descent(b, l2);
    if (i < 0) throw std::logic_error("positive length but no descent");
    const AffineElt& s = simple_affine_[static_cast<std::size_t>(i)];
    b = mult(W_, s, b);
    --l2;
    AffineElt sa = mult(W_, s, a);
    Int lsa = length(sa);
    if (lsa < l1) {
      a = sa;
      l1 = lsa;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  leq_memo_.emplace(key, result);
  return result;
}

std::vector<AffineElt> AffineWeyl::sort_elements(std::vector<AffineElt> v) const {
  std::sort(v.begin(), v.end(), [&](const AffineElt& a, const AffineElt& b) {
    Int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    return to_string(W_, a) < to_string(W_, b);
  });
  return v;
}

std::vector<AffineElt> AffineWeyl::lower_ideal(const AffineElt& w) const {
  AffineDecomp d = decompose(w);
  std::unordered_set<AffineElt> set{affine_identity(W_)};
  for (int i : d.word) {
    const AffineElt& s = simple_affine_[static_cast<std::size_t>(i)];
    std::vector<AffineElt> snapshot(set.begin(), set.end());
    for (const AffineElt& v : snapshot) set.insert(mult(W_, v, s));
  }
  std::vector<AffineElt> out;
  out.reserve(set.size());
  for (const AffineElt& v : set) out.push_back(mult(W_, v, d.tau));
  return sort_elements(std::move(out));
}

bool AffineWeyl::obtuse_cone_member(const AffineElt& w, const AffineElt& wref, const WeylElt& z,
                                    Int depth) const {
  if (!same_coset(w, wref)) return false;
  if (depth < 0) depth = length(wref) + 2;
  Vec ones = Vec::zero(W_.rank());
  for (int i = 0; i < W_.rank(); ++i) ones[i] = 1;
  auto eval = [&](Int N) {
    // b = t^{z(-N rho^vee)} places the base alcove deep inside z(C^-);
    // w(a) <=_b wref(a) is the translated Bruhat comparison b^-1 w <= b^-1 wref.
    AffineElt binv = translation(W_, W_.act(z, Coweight{ones * N}));
    return bruhat_leq(mult(W_, binv, w), mult(W_, binv, wref));
  };
  bool r1 = eval(depth);
  bool r2 = eval(depth + 1);
  if (r1 != r2)
    throw std::runtime_error("obtuse cone: depth " + std::to_string(depth) + " and " +
                             std::to_string(depth + 1) + " disagree");
  return r1;
}

bool AffineWeyl::in_finite_subgroup(const WeylElt& z) const {
  if (sys_.full) return true;
  const auto& fin = finite_subgroup();
  return std::binary_search(fin.begin(), fin.end(), z);
}

const std::vector<WeylElt>& AffineWeyl::finite_subgroup() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (finite_.empty()) {
    std::vector<WeylElt> gens;
    for (const Root& beta : sys_.base) gens.push_back(W_.reflection(beta));
    finite_ = W_.subgroup(gens);
    std::sort(finite_.begin(), finite_.end());
  }
  return finite_;
}

}  // namespace adm
