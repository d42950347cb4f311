#include "adm/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adm {

namespace {

struct Realization {
  // Euclidean coordinates of the two simple roots (rows).
  double a1x, a1y, a2x, a2y;
};

Realization realization_for(const std::string& label) {
  if (label == "A2") return {std::sqrt(2.0), 0.0, -std::sqrt(2.0) / 2, std::sqrt(6.0) / 2};
  if (label == "B2") return {1.0, -1.0, 0.0, 1.0};
  if (label == "C2") return {1.0, -1.0, 0.0, 2.0};
  if (label == "G2") return {1.0, 0.0, -1.5, std::sqrt(3.0) / 2};
  if (label == "D2") return {std::sqrt(2.0), 0.0, 0.0, std::sqrt(2.0)};
  throw std::invalid_argument("no planar realization for type " + label);
}

struct Mapper {
  // Columns of E are the Euclidean images of the fundamental coweights.
  double e[2][2];

  explicit Mapper(const Realization& r) {
    double det = r.a1x * r.a2y - r.a1y * r.a2x;
    // E = inverse of the root-row matrix.
    e[0][0] = r.a2y / det;
    e[0][1] = -r.a2x / det;
    e[1][0] = -r.a1y / det;
    e[1][1] = r.a1x / det;
  }

  std::pair<double, double> map(const RatVec& p) const {
    double c0 = static_cast<double>(p.num[0]) / static_cast<double>(p.den);
    double c1 = static_cast<double>(p.num[1]) / static_cast<double>(p.den);
    return {e[0][0] * c0 + e[0][1] * c1, e[1][0] * c0 + e[1][1] * c1};
  }
};

RatVec reduced(const RatVec& p) {
  Int g = p.den;
  for (int i = 0; i < p.num.n; ++i) g = std::gcd(g, p.num[i] < 0 ? -p.num[i] : p.num[i]);
  if (g <= 1) return p;
  Vec n = p.num;
  for (int i = 0; i < n.n; ++i) n[i] /= g;
  return RatVec(n, p.den / g);
}

bool ratvec_less(const RatVec& a, const RatVec& b) {
  if (a.den != b.den) return a.den < b.den;
  return a.num < b.num;
}

// Corners of w(base alcove), in cyclic order.
std::vector<RatVec> alcove_corners(const Workspace& ws, const AffineElt& w) {
  const RootDatum& rd = *ws.rd;
  std::vector<RatVec> corners;
  RatVec origin(Vec::zero(2), 1);
  if (rd.components().size() == 1) {
    const Root& theta = rd.highest_roots()[0];
    corners.push_back(origin);
    for (int i = 0; i < 2; ++i)
      corners.push_back(RatVec(Vec::unit(2, i), theta.v[i]));
  } else {
    // Two A1 factors: the base alcove is the unit square in pairing coords.
    corners.push_back(origin);
    corners.push_back(RatVec(Vec::unit(2, 0), 1));
    corners.push_back(RatVec(Vec::unit(2, 0) + Vec::unit(2, 1), 1));
    corners.push_back(RatVec(Vec::unit(2, 1), 1));
  }
  for (RatVec& c : corners) c = reduced(act_point(w, c));
  return corners;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // Avoid the "-0.00" artifact so reruns are byte-identical across libm quirks.
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

}  // namespace

std::string render_svg(const Workspace& ws, std::optional<int> face_idx, bool boundary_overlay) {
  if (ws.rd->rank() != 2) throw std::invalid_argument("render is supported for rank 2 only");
  Mapper M(Mapper(realization_for(ws.rd->label())));
  const AdmissibleSet& A = *ws.A;
  const WeylGroup& W = *ws.W;

  std::map<std::string, std::vector<RatVec>> polys;  // keyed by serialized element
  for (const AffineElt& w : A.elements) polys.emplace(to_string(W, w), alcove_corners(ws, w));

  double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
  for (const auto& [name, corners] : polys)
    for (const RatVec& c : corners) {
      auto [x, y] = M.map(c);
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  double pad = 0.9;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  const double width = 720.0;
  double scale = width / (xmax - xmin);
  double height = (ymax - ymin) * scale;
  auto px = [&](double x, double y) {
    return std::make_pair((x - xmin) * scale, (ymax - y) * scale);
  };
  auto poly_path = [&](const std::vector<RatVec>& corners) {
    std::ostringstream os;
    for (std::size_t i = 0; i < corners.size(); ++i) {
      auto [x, y] = M.map(corners[i]);
      auto [sx, sy] = px(x, y);
      os << (i ? " L " : "M ") << fmt(sx) << ' ' << fmt(sy);
    }
    os << " Z";
    return os.str();
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Affine hyperplanes of every positive root across the window.
  for (int p = 0; p < ws.rd->num_positive(); ++p) {
    const Root& alpha = ws.rd->positive_roots()[static_cast<std::size_t>(p)];
    Frac pmin(0), pmax(0);
    bool first = true;
    for (const auto& [name, corners] : polys)
      for (const RatVec& c : corners) {
        Frac v = Frac(dot(c.num, alpha.v), c.den);
        if (first || v < pmin) pmin = v;
        if (first || pmax < v) pmax = v;
        first = false;
      }
    Int klo = -(pmax.num / pmax.den) - 2;
    Int khi = -(pmin.num / pmin.den) + 2;
    // A point with <v, alpha> = -k and a direction with <d, alpha> = 0;
    // alpha is positive, so its istar coordinate is > 0.
    int istar = alpha.v[0] != 0 ? 0 : 1;
    for (Int k = klo; k <= khi; ++k) {
      RatVec p0(Vec::unit(2, istar) * (-k), alpha.v[istar]);
      Vec d = Vec::zero(2);
      d[0] = -alpha.v[1];
      d[1] = alpha.v[0];
      auto [x0, y0] = M.map(p0);
      auto [dx, dy] = M.map(RatVec(d, 1));
      double norm = std::hypot(dx, dy);
      double L = (xmax - xmin) + (ymax - ymin);
      auto [ax, ay] = px(x0 - dx / norm * L, y0 - dy / norm * L);
      auto [bx, by] = px(x0 + dx / norm * L, y0 + dy / norm * L);
      svg << "<line x1=\"" << fmt(ax) << "\" y1=\"" << fmt(ay) << "\" x2=\"" << fmt(bx)
          << "\" y2=\"" << fmt(by) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
  }

  auto shade = [&](const std::vector<AffineElt>& elts, const char* color) {
    for (const AffineElt& w : elts) {
      auto it = polys.find(to_string(W, w));
      if (it == polys.end()) continue;
      svg << "<path d=\"" << poly_path(it->second) << "\" fill=\"" << color
          << "\" stroke=\"none\"/>\n";
    }
  };

  if (boundary_overlay && ws.D) {
    const AdmFace& top = ws.D->adm_face_for(ws.P->top());
    std::vector<AffineElt> boundary = top.boundary;
    shade(ws.ctx->sort_elements(std::move(boundary)), "#d9d9d9");
    std::vector<AffineElt> centers;
    for (int i = 0; i < ws.P->size(); ++i)
      if (ws.P->faces()[static_cast<std::size_t>(i)].dim == 1)
        centers.push_back(ws.D->adm_face_for(i).center);
    shade(ws.ctx->sort_elements(std::move(centers)), "#8c8c8c");
  }
  if (face_idx && ws.D) {
    const AdmFace& af = ws.D->adm_face_for(*face_idx);
    std::vector<AffineElt> b = af.boundary, in = af.interior;
    shade(ws.ctx->sort_elements(std::move(b)), "#d9d9d9");
    shade(ws.ctx->sort_elements(std::move(in)), "#8c8c8c");
  }

  // Outline of the admissible region: edges used by exactly one alcove.
  using EdgeKey = std::pair<std::pair<Vec, Int>, std::pair<Vec, Int>>;
  std::map<EdgeKey, int> edge_count;
  for (const auto& [name, corners] : polys) {
    for (std::size_t i = 0; i < corners.size(); ++i) {
      RatVec a = corners[i];
      RatVec b = corners[(i + 1) % corners.size()];
      if (ratvec_less(b, a)) std::swap(a, b);
      ++edge_count[{{a.num, a.den}, {b.num, b.den}}];
    }
  }
  for (const auto& [key, count] : edge_count) {
    if (count != 1) continue;
    auto [p, q] = key;
    auto [x0, y0] = M.map(RatVec(p.first, p.second));
    auto [x1, y1] = M.map(RatVec(q.first, q.second));
    auto [ax, ay] = px(x0, y0);
    auto [bx, by] = px(x1, y1);
    svg << "<line x1=\"" << fmt(ax) << "\" y1=\"" << fmt(ay) << "\" x2=\"" << fmt(bx)
        << "\" y2=\"" << fmt(by) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  }

  auto [ox, oy] = px(0.0, 0.0);
  svg << "<circle cx=\"" << fmt(ox) << "\" cy=\"" << fmt(oy)
      << "\" r=\"5\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace adm
