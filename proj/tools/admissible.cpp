// Command-line front door: enumerate admissible sets, export face posets,
// evaluate the face map, run verification suites, render rank-2 pictures.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adm/render.hpp"
#include "adm/verify.hpp"

namespace {

using namespace adm;

std::vector<Int> parse_mu(const std::string& s) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(pos, comma - pos);
    if (tok.empty()) throw std::invalid_argument("bad --mu: " + s);
    std::size_t used = 0;
    out.push_back(std::stoll(tok, &used));
    if (used != tok.size()) throw std::invalid_argument("bad --mu: " + s);
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  return out;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

int cmd_enumerate(const std::string& type, const std::string& mu_str, const std::string& format,
                  const std::string& out) {
  Workspace ws = Workspace::make(type, parse_mu(mu_str));
  const WeylGroup& W = *ws.W;
  std::ostringstream os;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["case"] = ws.case_name();
    j["count"] = ws.A->elements.size();
    j["tau"] = to_string(W, ws.A->tau);
    j["maxima"] = nlohmann::ordered_json::array();
    for (const AffineElt& m : ws.A->maxima) j["maxima"].push_back(to_string(W, m));
    j["elements"] = nlohmann::ordered_json::array();
    for (const AffineElt& w : ws.A->elements) {
      nlohmann::ordered_json e;
      e["length"] = ws.ctx->length(w);
      e["element"] = to_string(W, w);
      j["elements"].push_back(e);
    }
    os << j.dump(2) << '\n';
  } else {
    os << "# " << ws.case_name() << "\n";
    os << "# |Adm(mu)| = " << ws.A->elements.size() << ", maximal elements: "
       << ws.A->maxima.size() << ", tau = " << to_string(W, ws.A->tau) << "\n";
    for (const AffineElt& w : ws.A->elements)
      os << "l=" << ws.ctx->length(w) << "\t" << to_string(W, w) << "\n";
  }
  write_out(out, os.str());
  return 0;
}

int cmd_faces(const std::string& type, const std::string& mu_str, const std::string& format,
              const std::string& out) {
  Workspace ws = Workspace::make(type, parse_mu(mu_str));
  if (!ws.P) throw std::domain_error("faces requires mu != 0");
  if (format == "dot")
    write_out(out, ws.P->to_dot());
  else
    write_out(out, ws.P->to_json().dump(2) + "\n");
  return 0;
}

int cmd_face_map(const std::string& type, const std::string& mu_str, const std::string& element,
                 const std::string& out) {
  Workspace ws = Workspace::make(type, parse_mu(mu_str));
  if (!ws.D) throw std::domain_error("face-map requires mu != 0");
  const WeylGroup& W = *ws.W;
  AffineElt w = parse_affine(W, element);
  if (!ws.A->contains(w))
    throw std::domain_error("element " + to_string(W, w) + " is not in Adm(mu)");
  int f = ws.D->face_map(w);
  nlohmann::ordered_json j;
  j["case"] = ws.case_name();
  j["element"] = to_string(W, w);
  j["lambda"] = nlohmann::ordered_json::array();
  for (const Coweight& m : lambda_set(*ws.ctx, *ws.A, w)) j["lambda"].push_back(to_string(m));
  j["face"] = ws.P->face_json(f);
  write_out(out, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& type, const std::string& mu_str, const std::string& suite,
               const std::string& out) {
  bool known = suite == "all";
  for (const std::string& s : suite_names()) known = known || s == suite;
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  Workspace ws = Workspace::make(type, parse_mu(mu_str));
  Report rep = run_suite(ws, suite);
  write_out(out, rep.to_json().dump(2) + "\n");
  if (!rep.all_pass()) {
    std::cerr << "verify: " << rep.case_name << ": FAILED\n";
    return 1;
  }
  return 0;
}

int cmd_render(const std::string& type, const std::string& mu_str, const std::string& face,
               bool boundary, const std::string& out) {
  Workspace ws = Workspace::make(type, parse_mu(mu_str));
  std::optional<int> face_idx;
  if (!face.empty()) {
    if (!ws.P) throw std::domain_error("render --face requires mu != 0");
    // "word|i,j" with 1-based indices, e.g. "s2|1" or "e|" for (e, {}).
    std::size_t bar = face.find('|');
    if (bar == std::string::npos)
      throw std::invalid_argument("--face expects \"<word>|<indices>\", e.g. \"s2|1\"");
    WeylElt a = ws.W->parse(face.substr(0, bar));
    std::vector<int> I;
    for (Int v : face.substr(bar + 1).empty() ? std::vector<Int>{}
                                              : parse_mu(face.substr(bar + 1)))
      I.push_back(static_cast<int>(v) - 1);
    auto idx = ws.P->find_pair(a, I);
    if (!idx) throw std::domain_error("no face with that generating pair");
    face_idx = *idx;
  }
  write_out(out, render_svg(ws, face_idx, boundary));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Admissible sets of extended affine Weyl groups, coweight polytope faces, "
               "and the face map"};
  app.require_subcommand(1);

  std::string type, mu_str, format = "json", element, suite = "all", face, out;
  bool boundary = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "Cartan type label, e.g. A2, C2, B3")->required();
    cmd->add_option("--mu", mu_str, "dominant coweight, fundamental coordinates, e.g. 2,0")
        ->required();
    cmd->add_option("--out", out, "output file (default: stdout)");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list Adm(mu)");
  add_common(enumerate);
  enumerate->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* faces = app.add_subcommand("faces", "face poset of the coweight polytope");
  add_common(faces);
  faces->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

  CLI::App* face_map = app.add_subcommand("face-map", "evaluate the face map on one element");
  add_common(face_map);
  face_map->add_option("--element", element, "e.g. \"t[2,0]\" or \"t[1,1]*s1\"")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", suite,
                     "maxwell|hh|main1|main2|characterization|lemmas|all");

  CLI::App* render = app.add_subcommand("render", "rank-2 SVG drawing");
  add_common(render);
  render->add_option("--face", face, "face to shade, \"<word>|<indices>\" (1-based)");
  render->add_flag("--boundary", boundary, "shade the boundary of Adm(mu) and the 1-face centers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed())
      return cmd_enumerate(type, mu_str, enumerate->count("--format") ? format : "text", out);
    if (faces->parsed())
      return cmd_faces(type, mu_str, faces->count("--format") ? format : "json", out);
    if (face_map->parsed()) return cmd_face_map(type, mu_str, element, out);
    if (verify->parsed()) return cmd_verify(type, mu_str, suite, out);
    if (render->parsed()) return cmd_render(type, mu_str, face, boundary, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // an internal consistency failure here would falsify a checked theorem
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
