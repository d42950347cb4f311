#include "adm/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace adm {

namespace {

std::string elt(const WeylGroup& W, const AffineElt& w) { return to_string(W, w); }

// All of {w in W_aff tau : l(w) <= maxlen}, by breadth-first search over
// left multiplication by the simple affine reflections.
std::vector<AffineElt> coset_slice(const AffineWeyl& ctx, const AffineElt& tau, Int maxlen) {
  std::unordered_set<AffineElt> seen{tau};
  std::vector<AffineElt> level{tau};
  for (Int len = 1; len <= maxlen; ++len) {
    std::vector<AffineElt> next;
    for (const AffineElt& w : level)
      for (const AffineElt& s : ctx.simple_affine()) {
        AffineElt u = mult(ctx.weyl(), s, w);
        if (ctx.length(u) == len && seen.insert(u).second) next.push_back(u);
      }
    level = std::move(next);
  }
  return ctx.sort_elements({seen.begin(), seen.end()});
}

// lambda lies in the nonnegative rational cone spanned by the given coroots.
bool in_nonneg_cone(const std::vector<Coweight>& basis, const RatVec& lambda) {
  if (basis.empty()) {
    for (int i = 0; i < lambda.num.n; ++i)
      if (lambda.num[i] != 0) return false;
    return true;
  }
  std::vector<Vec> cols;
  for (const Coweight& c : basis) cols.push_back(c.v);
  auto sol = solve_columns(cols, lambda.num, lambda.den);
  if (!sol) return false;
  for (const Frac& f : *sol)
    if (f.sign() < 0) return false;
  return true;
}

RatVec displacement(const AffineWeyl& ctx, const AffineElt& w) {
  return act_point(w, ctx.base_point()) - ctx.base_point();
}

void suite_maxwell(Workspace& ws, Report& rep) {
  const FacePoset& P = *ws.P;
  const WeylGroup& W = *ws.W;

  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i)
      for (int j = 0; j < P.size() && ok; ++j) {
        const auto& fi = P.faces()[static_cast<std::size_t>(i)];
        const auto& fj = P.faces()[static_cast<std::size_t>(j)];
        bool bv = std::includes(fj.vertices.begin(), fj.vertices.end(), fi.vertices.begin(),
                                fi.vertices.end());
        bool bc = std::includes(fj.coset.begin(), fj.coset.end(), fi.coset.begin(), fi.coset.end());
        if (bv != bc) {
          ok = false;
          wit = P.face_name(i) + " vs " + P.face_name(j);
        }
      }
    rep.add("maxwell/order-isomorphism", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i)
      for (int j = 0; j < P.size() && ok; ++j) {
        try {
          auto k = P.intersection(i, j);
          if (k && !(P.leq(*k, i) && P.leq(*k, j))) {
            ok = false;
            wit = P.face_name(i) + " ∩ " + P.face_name(j);
          }
        } catch (const std::logic_error& e) {
          ok = false;
          wit = e.what();
        }
      }
    rep.add("maxwell/intersections-are-faces", ok, wit);
  }
  {
    std::size_t nv = 0;
    for (int i = 0; i < P.size(); ++i)
      if (P.faces()[static_cast<std::size_t>(i)].dim == 0) ++nv;
    std::size_t expected = W.order() / W.parabolic(W.datum().j_mu(ws.mu)).size();
    rep.add("maxwell/vertex-face-count", nv == expected,
            std::to_string(nv) + " vertex faces, expected " + std::to_string(expected));
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const auto& f = P.faces()[static_cast<std::size_t>(i)];
      if ((f.dim == 0) != (f.vertices.size() == 1)) {
        ok = false;
        wit = P.face_name(i);
      }
    }
    rep.add("maxwell/vertex-faces-are-singletons", ok, wit);
  }
  {
    int tops = 0;
    for (int i = 0; i < P.size(); ++i)
      if (P.faces()[static_cast<std::size_t>(i)].vertices.size() ==
          static_cast<std::size_t>(W.orbit(ws.mu).size()))
        ++tops;
    rep.add("maxwell/top-face-unique", tops == 1, std::to_string(tops) + " top faces");
  }
}

void suite_hh(Workspace& ws, Report& rep) {
  const AffineWeyl& ctx = *ws.ctx;
  const WeylGroup& W = *ws.W;
  const AdmissibleSet& A = *ws.A;

  {
    bool ok = true;
    std::string wit;
    for (const AffineElt& w : A.elements) {
      if (ctx.length(w) != static_cast<Int>(ctx.separating_hyperplanes(w).size())) {
        ok = false;
        wit = elt(W, w);
        break;
      }
    }
    rep.add("hh/length-equals-separating-count", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    try {
      for (const AffineElt& w : A.elements) {
        for (const WeylElt& z : W.elements()) {
          AffineElt ref = translation(W, W.act(z, A.mu));
          if (!ctx.obtuse_cone_member(w, ref, z)) {
            ok = false;
            wit = elt(W, w) + " not in O(t^{" + W.to_string(z) + "(mu)}, " + W.to_string(z) + ")";
            break;
          }
        }
        if (!ok) break;
      }
    } catch (const std::runtime_error& e) {
      ok = false;
      wit = e.what();
    }
    rep.add("hh/admissible-in-every-cone", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    try {
      Int maxlen = ctx.length(translation(W, A.mu));
      for (const AffineElt& w : coset_slice(ctx, A.tau, maxlen)) {
        bool in_all = true;
        for (const WeylElt& z : W.elements()) {
          AffineElt ref = translation(W, W.act(z, A.mu));
          if (!ctx.obtuse_cone_member(w, ref, z)) {
            in_all = false;
            break;
          }
        }
        if (in_all != A.contains(w)) {
          ok = false;
          wit = elt(W, w);
          break;
        }
      }
    } catch (const std::runtime_error& e) {
      ok = false;
      wit = e.what();
    }
    rep.add("hh/bounded-intersection-equals-admissible", ok, wit);
  }
  {
    // w(e) - e = z(mu - lambda) with lambda a nonnegative combination of
    // simple coroots, for every w and every z.
    bool ok = true;
    std::string wit;
    std::vector<Coweight> simple_coroots;
    for (int i = 0; i < W.rank(); ++i) simple_coroots.push_back(W.datum().simple_coroot(i));
    for (const AffineElt& w : A.elements) {
      RatVec disp = displacement(ctx, w);
      for (const WeylElt& z : W.elements()) {
        RatVec pulled(W.inverse(z).m.apply(disp.num), disp.den);
        RatVec lambda = RatVec(ws.mu.v * pulled.den, pulled.den) - pulled;
        if (!in_nonneg_cone(simple_coroots, lambda)) {
          ok = false;
          wit = elt(W, w) + " with z=" + W.to_string(z);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("hh/deep-point-displacement", ok, wit);
  }
}

void suite_main1(Workspace& ws, Report& rep) {
  const AffineWeyl& ctx = *ws.ctx;
  const WeylGroup& W = *ws.W;
  const AdmissibleSet& A = *ws.A;
  const FacePoset& P = *ws.P;
  const FaceDecomposition& D = *ws.D;

  {
    bool ok = true;
    std::string wit;
    try {
      for (int i = 0; i < P.size(); ++i)
        for (const auto& [a, I] : P.faces()[static_cast<std::size_t>(i)].pairs)
          adm_face(ctx, A, a, I, /*verify_both=*/true);
    } catch (const std::logic_error& e) {
      ok = false;
      wit = e.what();
    }
    rep.add("main1/def2-equivalence", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
      std::vector<AffineElt> by_lambda;
      for (const AffineElt& w : A.elements) {
        std::vector<Coweight> lam = lambda_set(ctx, A, w);
        bool inside = true;
        for (const Coweight& m : lam)
          if (!std::binary_search(f.vertices.begin(), f.vertices.end(), m)) inside = false;
        if (inside) by_lambda.push_back(w);
      }
      by_lambda = ctx.sort_elements(std::move(by_lambda));
      if (by_lambda != D.adm_face_for(i).elements) {
        ok = false;
        wit = P.face_name(i);
      }
    }
    rep.add("main1/lambda-characterization", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
      if (f.pairs.size() < 2) continue;
      for (const auto& [a, I] : f.pairs) {
        std::vector<AffineElt> again = adm_face(ctx, A, a, I, /*verify_both=*/false);
        if (again != D.adm_face_for(i).elements) {
          ok = false;
          wit = P.face_name(i) + " via a=" + W.to_string(a);
          break;
        }
      }
    }
    rep.add("main1/face-correspondence-well-defined", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i)
      for (int j = 0; j < P.size() && ok; ++j) {
        std::vector<AffineElt> ei = D.adm_face_for(i).elements;
        std::vector<AffineElt> ej = D.adm_face_for(j).elements;
        std::sort(ei.begin(), ei.end());
        std::sort(ej.begin(), ej.end());
        std::vector<AffineElt> inter;
        std::set_intersection(ei.begin(), ei.end(), ej.begin(), ej.end(),
                              std::back_inserter(inter));
        auto k = P.intersection(i, j);
        std::vector<AffineElt> expected;
        if (k) {
          expected = D.adm_face_for(*k).elements;
          std::sort(expected.begin(), expected.end());
        }
        if (inter != expected) {
          ok = false;
          wit = P.face_name(i) + " ∩ " + P.face_name(j);
        }
      }
    rep.add("main1/intersection-compatibility", ok, wit);
  }
}

void suite_main2(Workspace& ws, Report& rep) {
  const WeylGroup& W = *ws.W;
  const AdmissibleSet& A = *ws.A;
  const FacePoset& P = *ws.P;
  const FaceDecomposition& D = *ws.D;

  {
    bool ok = true;
    std::string wit;
    std::unordered_set<AffineElt> seen;
    for (int i = 0; i < P.size() && ok; ++i)
      for (const AffineElt& w : D.adm_face_for(i).interior)
        if (!seen.insert(w).second) {
          ok = false;
          wit = elt(W, w);
        }
    rep.add("main2/interiors-pairwise-disjoint", ok, wit);
    bool cover = seen.size() == A.elements.size();
    std::string cwit;
    if (!cover)
      for (const AffineElt& w : A.elements)
        if (!seen.count(w)) {
          cwit = elt(W, w);
          break;
        }
    rep.add("main2/interiors-cover", cover, cwit);
  }
  {
    bool ok = true;
    std::string wit;
    std::vector<std::vector<AffineElt>> fibers(static_cast<std::size_t>(P.size()));
    for (const AffineElt& w : A.elements)
      fibers[static_cast<std::size_t>(D.face_map(w))].push_back(w);
    for (int i = 0; i < P.size() && ok; ++i) {
      std::vector<AffineElt> fib = fibers[static_cast<std::size_t>(i)];
      std::vector<AffineElt> interior = D.adm_face_for(i).interior;
      std::sort(fib.begin(), fib.end());
      std::sort(interior.begin(), interior.end());
      if (fib != interior) {
        ok = false;
        wit = P.face_name(i);
      }
    }
    rep.add("main2/fibers-equal-interiors", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i)
      if (D.adm_face_for(i).interior.empty()) {
        ok = false;
        wit = P.face_name(i);
      }
    rep.add("main2/surjective", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const AdmFace& af = D.adm_face_for(i);
      if (std::find(af.interior.begin(), af.interior.end(), af.center) == af.interior.end()) {
        ok = false;
        wit = P.face_name(i);
      }
    }
    rep.add("main2/center-in-interior", ok, wit);
  }
}

void suite_characterization(Workspace& ws, Report& rep) {
  const AffineWeyl& ctx = *ws.ctx;
  const WeylGroup& W = *ws.W;
  const AdmissibleSet& A = *ws.A;
  const FacePoset& P = *ws.P;
  const FaceDecomposition& D = *ws.D;

  std::vector<int> fm;
  fm.reserve(A.elements.size());
  for (const AffineElt& w : A.elements) fm.push_back(D.face_map(w));
  auto index_of = [&](const AffineElt& w) {
    auto it = std::find(A.elements.begin(), A.elements.end(), w);
    return static_cast<std::size_t>(it - A.elements.begin());
  };

  {
    bool ok = true;
    std::string wit;
    for (std::size_t i = 0; i < A.elements.size() && ok; ++i)
      for (std::size_t j = 0; j < A.elements.size() && ok; ++j) {
        if (i == j) continue;
        if (ctx.bruhat_leq(A.elements[i], A.elements[j])) {
          if (!P.leq(fm[j], fm[i])) {
            ok = false;
            wit = elt(W, A.elements[i]) + " <= " + elt(W, A.elements[j]);
          }
        }
      }
    rep.add("characterization/order-reversing", ok, wit);
  }
  {
    // Cover pairs: v = s_gamma w for a separating hyperplane with length
    // drop one; every Bruhat cover inside Adm(mu) arises this way.
    bool ok = true;
    std::string wit;
    for (const AffineElt& w : A.elements) {
      for (const AffineRoot& ar : ctx.separating_hyperplanes(w)) {
        AffineElt v = mult(W, ctx.reflection(ar), w);
        if (ctx.length(v) != ctx.length(w) - 1 || !A.contains(v)) continue;
        if (!P.leq(fm[index_of(w)], fm[index_of(v)])) {
          ok = false;
          wit = elt(W, v) + " ⋖ " + elt(W, w);
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("characterization/cover-pairs-order-reversing", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i)
      if (D.face_map(D.adm_face_for(i).center) != i) {
        ok = false;
        wit = P.face_name(i);
      }
    rep.add("characterization/centers-map-back", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (std::size_t wi = 0; wi < A.elements.size() && ok; ++wi) {
      const AffineElt& w = A.elements[wi];
      std::vector<int> by_center, by_membership;
      for (int i = 0; i < P.size(); ++i) {
        if (ctx.bruhat_leq(D.adm_face_for(i).center, w)) by_center.push_back(i);
        const auto& els = D.adm_face_for(i).elements;
        if (std::find(els.begin(), els.end(), w) != els.end()) by_membership.push_back(i);
      }
      if (by_center != by_membership) {
        ok = false;
        wit = elt(W, w);
        break;
      }
      std::vector<int> minimal;
      for (int i : by_center) {
        bool m = true;
        for (int j : by_center)
          if (j != i && P.leq(j, i)) m = false;
        if (m) minimal.push_back(i);
      }
      if (minimal.size() != 1 || minimal.front() != fm[wi]) {
        ok = false;
        wit = elt(W, w);
      }
    }
    rep.add("characterization/reconstruction", ok, wit);
  }
}

void suite_lemmas(Workspace& ws, Report& rep) {
  const AffineWeyl& ctx = *ws.ctx;
  const WeylGroup& W = *ws.W;
  const AdmissibleSet& A = *ws.A;
  const FacePoset& P = *ws.P;
  const FaceDecomposition& D = *ws.D;

  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const auto& els = D.adm_face_for(i).elements;
      std::unordered_set<AffineElt> in_face(els.begin(), els.end());
      for (const AffineElt& w1 : els) {
        for (const AffineElt& w2 : A.elements)
          if (w1 != w2 && ctx.bruhat_leq(w1, w2) && !in_face.count(w2)) {
            ok = false;
            wit = P.face_name(i) + ": " + elt(W, w1) + " < " + elt(W, w2);
            break;
          }
        if (!ok) break;
      }
    }
    rep.add("lemmas/upward-closure", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
      SubRootSystem S = sub_root_system(W, f.a, f.I);
      for (const AffineElt& w : D.adm_face_for(i).elements) {
        AffineElt winv = inv(W, w);
        for (const AffineElt& v : A.elements) {
          if (ctx.length(v) <= ctx.length(w)) continue;
          AffineElt q = mult(W, v, winv);
          auto gamma = W.reflection_root(q.z);
          if (!gamma) continue;
          // q = t^{-k gamma^vee} s_gamma for integral k?
          auto k = solve_integer({W.datum().coroot(*gamma).v}, q.t.v);
          if (!k) continue;
          if (!S.contains_root(*gamma)) {
            ok = false;
            wit = P.face_name(i) + ": " + elt(W, w) + " -> " + elt(W, v);
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.add("lemmas/reflection-roots-stay-in-subsystem", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
      std::vector<Coweight> I_coroots;
      for (int s : f.I) I_coroots.push_back(W.datum().simple_coroot(s));
      for (const AffineElt& w : D.adm_face_for(i).elements) {
        RatVec disp = displacement(ctx, w);
        for (const WeylElt& u : W.parabolic(f.I)) {
          WeylElt au_inv = W.inverse(W.compose(f.a, u));
          RatVec pulled(au_inv.m.apply(disp.num), disp.den);
          RatVec lambda = RatVec(ws.mu.v * pulled.den, pulled.den) - pulled;
          if (!in_nonneg_cone(I_coroots, lambda)) {
            ok = false;
            wit = P.face_name(i) + ": " + elt(W, w) + " u=" + W.to_string(u);
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.add("lemmas/face-displacement", ok, wit);
  }
  {
    Check c = check_a1a2(W.datum().label());
    rep.add("lemmas/a1a2", c.pass, c.witness);
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < P.size() && ok; ++i) {
      const FaceHandle& f = P.faces()[static_cast<std::size_t>(i)];
      AffineWeyl sub(W, sub_root_system(W, f.a, f.I));
      const auto& els = D.adm_face_for(i).elements;
      for (const AffineElt& w1 : els) {
        for (const AffineElt& w2 : els)
          if (sub_bruhat_leq(sub, w1, w2) != ctx.bruhat_leq(w1, w2)) {
            ok = false;
            wit = P.face_name(i) + ": " + elt(W, w1) + " vs " + elt(W, w2);
            break;
          }
        if (!ok) break;
      }
    }
    rep.add("lemmas/sub-order-restriction", ok, wit);
  }
}

}  // namespace

Workspace Workspace::make(const std::string& type_label, const std::vector<Int>& mu_coords) {
  Workspace ws;
  ws.rd = std::make_unique<RootDatum>(RootDatum::build(type_label));
  if (static_cast<int>(mu_coords.size()) != ws.rd->rank())
    throw std::invalid_argument("mu must have " + std::to_string(ws.rd->rank()) + " coordinates");
  ws.W = std::make_unique<WeylGroup>(*ws.rd);
  ws.ctx = std::make_unique<AffineWeyl>(*ws.W, full_system(*ws.W));
  ws.mu = Coweight{Vec::zero(ws.rd->rank())};
  for (int i = 0; i < ws.rd->rank(); ++i) ws.mu.v[i] = mu_coords[static_cast<std::size_t>(i)];
  if (!ws.rd->is_dominant(ws.mu)) throw std::domain_error("mu must be dominant (coordinates >= 0)");
  ws.A = std::make_unique<AdmissibleSet>(admissible_set(*ws.ctx, ws.mu));
  if (!ws.mu.is_zero()) {
    ws.P = std::make_unique<FacePoset>(*ws.W, ws.mu);
    ws.D = std::make_unique<FaceDecomposition>(*ws.ctx, *ws.A, *ws.P);
  }
  return ws;
}

std::string Workspace::case_name() const { return rd->label() + " mu=" + to_string(mu); }

Report run_suite(Workspace& ws, const std::string& suite) {
  Report rep;
  rep.case_name = ws.case_name();
  rep.suite = suite;
  auto dispatch = [&](const std::string& name) {
    if ((name == "maxwell" || name == "main1" || name == "main2" ||
         name == "characterization" || name == "lemmas") &&
        !ws.P)
      throw std::domain_error("suite '" + name + "' needs mu != 0");
    if (name == "maxwell")
      suite_maxwell(ws, rep);
    else if (name == "hh")
      suite_hh(ws, rep);
    else if (name == "main1")
      suite_main1(ws, rep);
    else if (name == "main2")
      suite_main2(ws, rep);
    else if (name == "characterization")
      suite_characterization(ws, rep);
    else if (name == "lemmas")
      suite_lemmas(ws, rep);
    else
      throw std::invalid_argument("unknown suite: " + name);
  };
  if (suite == "all")
    for (const std::string& name : suite_names()) dispatch(name);
  else
    dispatch(suite);
  return rep;
}

Check check_a1a2(const std::string& type_label) {
  RootDatum rd = RootDatum::build(type_label);
  WeylGroup W(rd);
  const int n = rd.rank();
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {  // proper subsets only
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) I.push_back(i);
    std::vector<WeylElt> WI = W.parabolic(I);
    std::sort(WI.begin(), WI.end());
    std::vector<Root> outside;
    for (const Root& r : rd.positive_roots()) {
      bool supported = true;
      for (int i = 0; i < n; ++i)
        if (r.v[i] != 0 && !std::binary_search(I.begin(), I.end(), i)) supported = false;
      if (!supported) outside.push_back(r);
    }
    for (const Root& a1 : outside)
      for (const Root& a2 : outside) {
        WeylElt u = W.compose(W.reflection(a1), W.reflection(a2));
        if (std::binary_search(WI.begin(), WI.end(), u) && !(a1 == a2)) {
          return {"a1a2", false,
                  type_label + ": s(" + to_string(a1) + ") s(" + to_string(a2) + ") in W_I"};
        }
      }
  }
  return {"a1a2", true, ""};
}

}  // namespace adm
