#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccx/complex.hpp"
#include "ccx/constructions.hpp"
#include "ccx/errors.hpp"
#include "ccx/fixtures.hpp"
#include "ccx/graph.hpp"
#include "ccx/hyperbolicity.hpp"
#include "ccx/hypgraphs.hpp"
#include "ccx/io.hpp"
#include "ccx/kernels.hpp"
#include "ccx/quasitree.hpp"
#include "ccx/wallspace.hpp"

namespace {

using namespace ccx;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty()) {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input_error("cannot open input file \"" + path + "\"");
    ss << f.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw invalid_input_error("cannot open output file \"" + path + "\"");
  f << content;
}

// Accepts "3/2", "1.5", or "2"; returns the doubled value.
int parse_delta_doubled(const std::string& s) {
  auto fail = [&]() -> int {
    throw invalid_input_error("cannot parse delta \"" + s + "\" (use N, N/2, or N.5)");
  };
  auto digits = [](const std::string& t) {
    return !t.empty() && t.find_first_not_of("0123456789") == std::string::npos && t.size() <= 6;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits(num)) return fail();
    if (den == "2") return std::stoi(num);
    if (den == "1") return 2 * std::stoi(num);
    return fail();
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (!digits(ip)) return fail();
    if (fp == "5") return 2 * std::stoi(ip) + 1;
    if (fp == "0") return 2 * std::stoi(ip);
    return fail();
  }
  if (!digits(s)) return fail();
  return 2 * std::stoi(s);
}

std::string format_delta(int doubled) {
  return doubled % 2 == 0 ? std::to_string(doubled / 2) : std::to_string(doubled) + "/2";
}

CubeComplex load_complex(const std::string& path) {
  std::string text = read_input(path);
  std::string fmt = io::sniff_format(text);
  if (fmt == "ccx-complex-v1") return io::parse_complex(text);
  if (fmt == "ccx-wallspace-v1")
    throw invalid_input_error("input is a wallspace; run `ccx cubulate` first");
  throw invalid_input_error("expected a ccx-complex-v1 document, got \"" + fmt + "\"");
}

// Emit the graph document to -o (or stdout when no --dot asked for a file),
// and the DOT rendering to --dot.
void emit_graph(const Graph& g, const std::string& out, const std::string& dot,
                const std::string& dot_text) {
  if (!dot.empty()) write_output(dot, dot_text);
  if (!out.empty() || dot.empty()) write_output(out, io::serialize_graph(g));
}

// ---- check suite ---------------------------------------------------------

struct CheckReport {
  std::vector<std::string> lines;
  std::vector<std::string> failures;
  void add(const std::string& name, bool pass, const std::string& detail) {
    std::string line = "check " + name + (pass ? ": pass" : ": FAIL");
    if (!detail.empty()) line += " — " + detail;
    lines.push_back(line);
    if (!pass) failures.push_back(name);
  }
};

void check_median_complex(const CubeComplex& x, CheckReport& rep) {
  if (x.num_vertices() > kernels::kAuditVertexLimit)
    throw resource_limit_error("median audit needs at most " +
                               std::to_string(kernels::kAuditVertexLimit) + " vertices");
  auto da = kernels::distance_audit(x);
  if (!da.ok) {
    rep.add("median", false,
            "bit-count distance " + std::to_string(da.bit_count) + " vs BFS " +
                std::to_string(da.bfs) + " at (" + std::to_string(da.u) + "," +
                std::to_string(da.v) + ")");
    return;
  }
  auto ma = kernels::median_audit(x);
  if (!ma.ok) {
    rep.add("median", false,
            "triple (" + std::to_string(ma.triple[0]) + "," + std::to_string(ma.triple[1]) + "," +
                std::to_string(ma.triple[2]) + ") has " + std::to_string(ma.count) +
                " median candidates");
    return;
  }
  rep.add("median", true,
          std::to_string(ma.triples_checked) + " triples, unique median throughout");
}

void check_median_graph(const Graph& g, CheckReport& rep) {
  ThetaResult tr = theta_classes(g);
  if (tr.complex) {
    rep.add("median", true,
            "median graph; recovered " + std::to_string(tr.complex->num_walls()) + " walls");
    return;
  }
  const ThetaRejection& rj = *tr.rejection;
  std::string detail = rj.reason;
  if (rj.reason == "not median")
    detail += ": triple (" + g.name(rj.triple[0]) + "," + g.name(rj.triple[1]) + "," +
              g.name(rj.triple[2]) + ") has " + std::to_string(rj.median_count) + " medians";
  else if (rj.wall >= 0)
    detail += " (edge class " + std::to_string(rj.wall) + ")";
  rep.add("median", false, detail);
}

void check_quasi_tree_graph(const Graph& g, int delta_doubled, CheckReport& rep) {
  auto bn = bottleneck_check(g, delta_doubled);
  if (!bn.ok) {
    rep.add("quasi-tree", false,
            "bottleneck fails at delta=" + format_delta(delta_doubled) + " for pair (" +
                g.name(bn.u) + "," + g.name(bn.v) + ")");
    return;
  }
  rep.add("quasi-tree", true, "bottleneck delta <= " + format_delta(delta_doubled));
}

void check_quasi_tree(const CubeComplex& x, const HypGraph& gamma, int delta_doubled,
                      CheckReport& rep) {
  if (x.num_walls() == 0) {
    rep.add("quasi-tree", true, "no walls");
    return;
  }
  int max_diam = 0;
  for (int b = 0; b < x.num_walls(); ++b) {
    Grading gr = grade_hyperplanes(gamma, b);
    RootTree rt = graded_root_tree(gr, gamma);  // validates treeness
    int diam = verify_root_diameter(gr, gamma);
    max_diam = std::max(max_diam, diam);
    if (diam > 4) {
      rep.add("quasi-tree", false,
              "root diameter " + std::to_string(diam) + " > 4 at base " + x.wall_name(b));
      return;
    }
    QiAudit qa = quasi_isometry_audit(gamma, rt);
    if (!qa.phi_surjective || !qa.tree_distance_below || !qa.graph_distance_bounded) {
      rep.add("quasi-tree", false, "quasi-isometry audit fails at base " + x.wall_name(b));
      return;
    }
  }
  auto bn = bottleneck_check(gamma.g, delta_doubled);
  if (!bn.ok) {
    rep.add("quasi-tree", false,
            "bottleneck fails at delta=" + format_delta(delta_doubled) + " for wall pair (" +
                gamma.g.name(bn.u) + "," + gamma.g.name(bn.v) + ")");
    return;
  }
  rep.add("quasi-tree", true,
          "max root diameter " + std::to_string(max_diam) + "; bottleneck delta <= " +
              format_delta(delta_doubled));
}

void check_precursors(const CubeComplex& x, const std::string& mode, long long geodesic_cap,
                      CheckReport& rep) {
  if (x.num_walls() == 0) {
    rep.add("precursors", true, "no walls");
    return;
  }
  HypGraph h = mode == "crossing" ? crossing_graph(x) : contact_graph(x);
  if (!h.g.connected())
    throw invalid_input_error(mode + " graph is disconnected; precursor grading undefined");
  long long enumerated = 0;
  for (int b = 0; b < x.num_walls(); ++b) {
    Grading gr = grade_hyperplanes(h, b);
    PrecursorResult pr = precursor_check(h, gr, geodesic_cap);
    enumerated += pr.geodesics_enumerated;
    if (!pr.ok) {
      rep.add("precursors", false,
              "edge (" + h.g.name(pr.u1) + "," + h.g.name(pr.u2) + ") at grade " +
                  std::to_string(pr.grade) + " from base " + x.wall_name(b) +
                  " has neither a common nor an edge precursor [mode " + mode + "]");
      return;
    }
  }
  rep.add("precursors", true,
          "all bases, mode " + mode + "; " + std::to_string(enumerated) + " geodesics enumerated");
}

void check_footprints(const CubeComplex& x, const HypGraph& gamma, long long geodesic_cap,
                      CheckReport& rep) {
  if (x.num_walls() == 0) {
    rep.add("footprints", true, "no walls");
    return;
  }
  long long pairs = 0;
  for (int b = 0; b < x.num_walls(); ++b) {
    Grading gr = grade_hyperplanes(gamma, b);
    for (int u = 0; u < x.num_walls(); ++u) {
      if (gr.grade[u] < 1) continue;
      FootprintResult fp = footprint(x, u, gamma, gr);
      if (!fp.ancestor_connected || !fp.footprint_connected) {
        rep.add("footprints", false,
                std::string(fp.ancestor_connected ? "footprint" : "ancestor") +
                    " of wall " + x.wall_name(u) + " disconnected from base " + x.wall_name(b));
        return;
      }
    }
    FootprintAdjacencyResult fa = footprint_adjacency_check(x, gamma, gr, geodesic_cap);
    pairs += fa.pairs_checked;
    if (!fa.ok) {
      rep.add("footprints", false,
              "walls " + x.wall_name(fa.u1) + "," + x.wall_name(fa.u2) + " (precursor " +
                  x.wall_name(fa.w) + ", base " + x.wall_name(b) + "): contact=" +
                  (fa.contact ? "yes" : "no") + " but footprints " +
                  (fa.contact ? "disjoint" : "meet"));
      return;
    }
  }
  rep.add("footprints", true,
          "connected ancestors/footprints; adjacency biconditional over " +
              std::to_string(pairs) + " pairs");
}

void check_helly(const CubeComplex& x, CheckReport& rep) {
  int w = x.num_walls();
  if (w == 0) {
    rep.add("helly", true, "no walls");
    return;
  }
  std::vector<Bits> carriers;
  carriers.reserve(w);
  for (int i = 0; i < w; ++i) carriers.push_back(carrier_mask(x, i));
  // Direct route: every pairwise-intersecting carrier triple meets in a point.
  long long triples = 0;
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b) {
      if (!carriers[a].intersects(carriers[b])) continue;
      for (int c = b + 1; c < w; ++c) {
        if (!carriers[a].intersects(carriers[c]) || !carriers[b].intersects(carriers[c])) continue;
        ++triples;
        if ((carriers[a] & carriers[b] & carriers[c]).none()) {
          rep.add("helly", false,
                  "pairwise-meeting carriers " + x.wall_name(a) + "," + x.wall_name(b) + "," +
                      x.wall_name(c) + " have empty total intersection");
          return;
        }
      }
    }
  // Library route on the full family: must report a genuinely disjoint pair
  // or a vertex common to all carriers.
  HellyResult hr = helly_check(x, carriers);
  if (hr.found()) {
    for (int i = 0; i < w; ++i)
      if (!carriers[i].get(hr.vertex)) {
        rep.add("helly", false,
                "reported vertex " + std::to_string(hr.vertex) + " misses carrier " +
                    x.wall_name(i));
        return;
      }
  } else if (carriers[hr.disjoint_a].intersects(carriers[hr.disjoint_b])) {
    rep.add("helly", false,
            "reported disjoint pair " + x.wall_name(hr.disjoint_a) + "," +
                x.wall_name(hr.disjoint_b) + " actually meets");
    return;
  }
  rep.add("helly", true, std::to_string(triples) + " pairwise-meeting triples verified");
}

void check_duality_roundtrip(const CubeComplex& x, int cap, CheckReport& rep) {
  Wallspace ws = to_wallspace(x);
  CubeComplex y = sageev_dual(ws, x.base_index(), cap);
  std::string sx = io::serialize_complex(x), sy = io::serialize_complex(y);
  if (sx != sy) {
    rep.add("duality-roundtrip", false,
            "re-dualized complex differs (" + std::to_string(y.num_vertices()) + " vs " +
                std::to_string(x.num_vertices()) + " vertices)");
    return;
  }
  rep.add("duality-roundtrip", true,
          "byte-identical after to_wallspace + sageev_dual (" +
              std::to_string(x.num_vertices()) + " vertices)");
}

int run_check(const std::string& which, const std::string& input, const std::string& mode,
              const std::string& delta, int cap, long long geodesic_cap) {
  int delta_doubled = parse_delta_doubled(delta);
  std::string text = read_input(input);
  std::string fmt = io::sniff_format(text);
  CheckReport rep;
  if (fmt == "ccx-graph-v1") {
    Graph g = io::parse_graph(text);
    if (which == "median") {
      check_median_graph(g, rep);
    } else if (which == "quasi-tree") {
      check_quasi_tree_graph(g, delta_doubled, rep);
    } else if (which == "all") {
      check_median_graph(g, rep);
      check_quasi_tree_graph(g, delta_doubled, rep);
    } else {
      throw invalid_input_error("check " + which + " needs a ccx-complex-v1 input");
    }
  } else if (fmt == "ccx-complex-v1") {
    CubeComplex x = io::parse_complex(text);
    bool needs_gamma = which == "quasi-tree" || which == "footprints" || which == "all";
    HypGraph gamma{HypKind::contact, Graph(0)};
    if (needs_gamma && x.num_walls() > 0) gamma = contact_graph(x);
    if (which == "median" || which == "all") check_median_complex(x, rep);
    if (which == "quasi-tree" || which == "all") check_quasi_tree(x, gamma, delta_doubled, rep);
    if (which == "precursors" || which == "all") check_precursors(x, mode, geodesic_cap, rep);
    if (which == "footprints" || which == "all") check_footprints(x, gamma, geodesic_cap, rep);
    if (which == "helly" || which == "all") check_helly(x, rep);
    if (which == "duality-roundtrip" || which == "all") check_duality_roundtrip(x, cap, rep);
  } else {
    throw invalid_input_error("check expects a complex or graph document, got \"" + fmt + "\"");
  }
  for (const auto& line : rep.lines) std::cout << line << "\n";
  nlohmann::json summary;
  summary["check"] = which;
  summary["pass"] = rep.failures.empty();
  summary["failures"] = rep.failures;
  std::cout << summary.dump() << "\n";
  return rep.failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite CAT(0) cube complex toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, dot_path;
  std::string base_elem, base_wall;
  std::string kind, params, mode = "contact", delta = "3/2", which;
  std::uint64_t seed = 0;
  int cap = kDefaultVertexCap;
  long long geodesic_cap = kDefaultGeodesicCap;
  bool overlay = false;

  auto* cubulate = app.add_subcommand("cubulate", "dual cube complex of a wallspace");
  cubulate->add_option("-i,--input", in_path, "wallspace document (default stdin)");
  cubulate->add_option("-o,--output", out_path, "complex output (default stdout)");
  cubulate->add_option("--base", base_elem, "base element id (default: first element)");
  cubulate->add_option("--cap", cap, "vertex cap");

  auto* skeleton_cmd = app.add_subcommand("skeleton", "1-skeleton of a complex");
  skeleton_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  skeleton_cmd->add_option("-o,--output", out_path, "graph output (default stdout)");
  skeleton_cmd->add_option("--dot", dot_path, "DOT output file");

  auto* contact_cmd = app.add_subcommand("contact", "contact graph of a complex");
  contact_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  contact_cmd->add_option("-o,--output", out_path, "graph output (default stdout)");
  contact_cmd->add_option("--dot", dot_path, "DOT output file");
  contact_cmd->add_flag("--overlay", overlay, "dash osculation edges in the DOT output");

  auto* crossing_cmd = app.add_subcommand("crossing", "crossing graph of a complex");
  crossing_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  crossing_cmd->add_option("-o,--output", out_path, "graph output (default stdout)");
  crossing_cmd->add_option("--dot", dot_path, "DOT output file");
  crossing_cmd->add_flag("--overlay", overlay, "also draw osculation edges, dashed");

  auto* grade_cmd = app.add_subcommand("grade", "BFS grades and roots from a base wall");
  grade_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  grade_cmd->add_option("--base", base_wall, "base wall name")->required();
  grade_cmd->add_option("-o,--output", out_path, "graded contact graph output (default stdout)");

  auto* root_tree_cmd = app.add_subcommand("root-tree", "graded root tree from a base wall");
  root_tree_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  root_tree_cmd->add_option("--base", base_wall, "base wall name")->required();
  root_tree_cmd->add_option("-o,--output", out_path, "tree document output (default stdout)");
  root_tree_cmd->add_option("--dot", dot_path, "DOT output file");

  auto* check_cmd = app.add_subcommand("check", "property check suites");
  check_cmd
      ->add_option("which", which,
                   "median|quasi-tree|precursors|footprints|helly|duality-roundtrip|all")
      ->required()
      ->check(CLI::IsMember({"median", "quasi-tree", "precursors", "footprints", "helly",
                             "duality-roundtrip", "all"}));
  check_cmd->add_option("-i,--input", in_path, "complex or graph document (default stdin)");
  check_cmd->add_option("--mode", mode, "precursor graph: contact (default) or crossing")
      ->check(CLI::IsMember({"contact", "crossing"}));
  check_cmd->add_option("--delta", delta, "bottleneck delta (default 3/2)");
  check_cmd->add_option("--cap", cap, "vertex cap for re-dualization");
  check_cmd->add_option("--geodesic-cap", geodesic_cap, "geodesic enumeration cap");

  auto* realize_cmd = app.add_subcommand("realize", "complex whose crossing graph is the input");
  realize_cmd->add_option("-i,--input", in_path, "graph document (default stdin)");
  realize_cmd->add_option("-o,--output", out_path, "complex output (default stdout)");
  realize_cmd->add_option("--cap", cap, "vertex cap");

  auto* recub_cmd = app.add_subcommand("recubulate", "complete osculations into squares");
  recub_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  recub_cmd->add_option("-o,--output", out_path, "complex output (default stdout)");
  recub_cmd->add_option("--cap", cap, "vertex cap");

  auto* gen_cmd = app.add_subcommand("gen", "deterministic corpus generator");
  gen_cmd->add_option("--kind", kind, "grid|tree|wedge|random-wallspace|fixture")->required();
  gen_cmd->add_option("--params", params, "kind-specific parameters")->required();
  gen_cmd->add_option("--seed", seed, "random seed (default 0)");
  gen_cmd->add_option("-o,--output", out_path, "complex output (default stdout)");
  gen_cmd->add_option("--cap", cap, "vertex cap");

  auto* analyze_cmd = app.add_subcommand("analyze", "bundled finite-scale indicators");
  analyze_cmd->add_option("-i,--input", in_path, "complex document (default stdin)");
  analyze_cmd->add_option("-o,--output", out_path, "report output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cap <= 0 || geodesic_cap <= 0) throw invalid_input_error("caps must be positive");
    if (cubulate->parsed()) {
      Wallspace ws = io::parse_wallspace(read_input(in_path));
      int base = 0;
      if (!base_elem.empty()) {
        base = ws.element_index(base_elem);
        if (base < 0) throw invalid_input_error("unknown base element \"" + base_elem + "\"");
      }
      write_output(out_path, io::serialize_complex(sageev_dual(ws, base, cap)));
    } else if (skeleton_cmd->parsed()) {
      CubeComplex x = load_complex(in_path);
      Graph g = skeleton(x);
      emit_graph(g, out_path, dot_path, dot_path.empty() ? "" : io::dot_graph(g));
    } else if (contact_cmd->parsed() || crossing_cmd->parsed()) {
      CubeComplex x = load_complex(in_path);
      HypGraph h = contact_cmd->parsed() ? contact_graph(x) : crossing_graph(x);
      std::string dot_text;
      if (!dot_path.empty()) {
        if (overlay) {
          dot_text = io::dot_overlay(crossing_graph(x).g, contact_graph(x).g);
        } else {
          dot_text = io::dot_graph(h.g);
        }
      }
      emit_graph(h.g, out_path, dot_path, dot_text);
    } else if (grade_cmd->parsed()) {
      CubeComplex x = load_complex(in_path);
      HypGraph gamma = contact_graph(x);
      int b = x.wall_index_by_name(base_wall);
      if (b < 0) throw invalid_input_error("unknown wall \"" + base_wall + "\"");
      write_output(out_path, io::grading_document(gamma, grade_hyperplanes(gamma, b)));
    } else if (root_tree_cmd->parsed()) {
      CubeComplex x = load_complex(in_path);
      HypGraph gamma = contact_graph(x);
      int b = x.wall_index_by_name(base_wall);
      if (b < 0) throw invalid_input_error("unknown wall \"" + base_wall + "\"");
      Grading gr = grade_hyperplanes(gamma, b);
      RootTree rt = graded_root_tree(gr, gamma);
      if (!dot_path.empty()) write_output(dot_path, io::dot_root_tree(rt, gr, gamma));
      if (!out_path.empty() || dot_path.empty())
        write_output(out_path, io::root_tree_document(rt, gr, gamma));
    } else if (check_cmd->parsed()) {
      return run_check(which, in_path, mode, delta, cap, geodesic_cap);
    } else if (realize_cmd->parsed()) {
      Graph g = io::parse_graph(read_input(in_path));
      write_output(out_path, io::serialize_complex(realize_crossing_graph(g, cap)));
    } else if (recub_cmd->parsed()) {
      CubeComplex x = load_complex(in_path);
      write_output(out_path, io::serialize_complex(recubulate(x, cap)));
    } else if (gen_cmd->parsed()) {
      write_output(out_path, io::serialize_complex(generate(kind, params, seed, cap)));
    } else if (analyze_cmd->parsed()) {
      CubeComplex x = load_complex(in_path);
      write_output(out_path, io::analysis_document(analyze(x), x));
    }
  } catch (const invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const check_violation& e) {
    std::cerr << "violation: " << e.what() << "\n";
    if (!e.witness.empty()) std::cerr << "witness: " << e.witness << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
