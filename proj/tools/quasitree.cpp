// quasitree: command line front end for cut enumeration, structure trees and treeify.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "quasitree/decompose.hpp"
#include "quasitree/errors.hpp"
#include "quasitree/io.hpp"
#include "quasitree/oracles.hpp"
#include "quasitree/structure_tree.hpp"

using namespace quasitree;
using nlohmann::json;

namespace {

constexpr int kExitCertificate = 1;
constexpr int kExitInput = 2;

struct Common {
  std::string input;
  std::string family;
  int k = 1;
  std::string filter = "ivov";
  std::uint64_t seed = 0;
  EnumerationCaps caps;
  std::string dot;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c, bool graph_input = true) {
  if (graph_input) {
    cmd->add_option("--input,-i", c.input, "GraphDocument JSON file");
    cmd->add_option("--family,-f", c.family, "family spec, e.g. grid:4x4");
  }
  cmd->add_option("-k", c.k, "boundary diameter bound")->check(CLI::NonNegativeNumber);
  cmd->add_option("--filter", c.filter, "iv or ivov")->check(CLI::IsMember({"iv", "ivov"}));
  cmd->add_option("--seed", c.seed, "seed for randomized families");
  cmd->add_option("--max-ball", c.caps.max_ball, "cap on |B(x,k)|");
  cmd->add_option("--max-components", c.caps.max_components, "cap on outer components per boundary");
  cmd->add_option("--max-cuts", c.caps.max_cuts, "cap on enumerated cuts");
  cmd->add_option("--dot", c.dot, "also write DOT to this file");
  cmd->add_option("--output,-o", c.output, "write results here instead of stdout");
}

BoundaryFilter filter_of(const Common& c) {
  return c.filter == "iv" ? BoundaryFilter::inner_only : BoundaryFilter::inner_and_outer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

Graph load(const Common& c) {
  if (!c.input.empty() && !c.family.empty()) throw ParseError("give either --input or --family");
  if (!c.input.empty()) return parse_graph(read_file(c.input));
  if (!c.family.empty()) return generate(parse_family(c.family, c.seed));
  throw ParseError("missing --input or --family");
}

json extended(const Extended& e) { return e.is_finite() ? json(e.value()) : json("inf"); }

json edges_json(const EdgeList& edges) {
  json out = json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

json cut_json(const Cut& c) {
  return {{"side", c.side()}, {"inner_boundary", c.inner_boundary()}, {"outer_boundary", c.outer_boundary()}};
}

json qi_json(const std::optional<QiConstants>& qi) {
  if (!qi) return nullptr;
  return {{"l", qi->l}, {"c", qi->c}, {"codensity", qi->codensity}};
}

json header(const Common& c, const Graph& g) {
  return {{"k", c.k}, {"filter", c.filter}, {"n", g.vertex_count()}, {"edges", g.edge_count()}};
}

void emit(const Common& c, const json& j) { write_text(c.output, j.dump(2) + "\n"); }

PipelineOptions pipeline_options(const Common& c) {
  PipelineOptions o;
  o.k = c.k;
  o.filter = filter_of(c);
  o.caps = c.caps;
  o.strict = false;
  return o;
}

json pipeline_json(const PipelineResult& p) {
  json stages = json::array();
  for (const auto& s : p.stages) {
    const auto& cert = s.certificate;
    stages.push_back({{"treeset_size", s.treeset_size},
                      {"vertices", s.subdivision.graph.vertex_count()},
                      {"max_chain", s.subdivision.max_chain},
                      {"tree_edges", s.decomposition.tree.size()},
                      {"remainder_edges", s.decomposition.remainder.size()},
                      {"r", cert.r},
                      {"measured_lipschitz", extended(cert.measured_lipschitz)},
                      {"lipschitz_bound", split_lipschitz_bound(cert.r)},
                      {"tree_acyclic", cert.split.tree_acyclic},
                      {"free_intersection", cert.split.free_intersection},
                      {"restriction_empty", cert.split.restriction_empty},
                      {"lipschitz_within_bound", cert.split.lipschitz_within_bound},
                      {"gamma_injective", cert.gamma_injective},
                      {"inclusion_qi", qi_json(cert.inclusion_qi)},
                      {"qi_error", cert.qi_error},
                      {"ok", cert.ok()}});
  }
  return {{"cuts", p.cut_count},
          {"treesets", p.treeset_count},
          {"stages", stages},
          {"final_vertices", p.final_graph.vertex_count()},
          {"accumulated_tree", edges_json(p.accumulated_tree)},
          {"final_remainder", edges_json(p.final_remainder)},
          {"composite_qi", qi_json(p.composite_qi)},
          {"composite_qi_error", p.composite_qi_error},
          {"ok", p.ok()}};
}

int run_gen(const Common& c) {
  if (c.family.empty()) throw ParseError("gen needs --family");
  GraphDocument doc{generate(parse_family(c.family, c.seed)), to_string(parse_family(c.family)), json::object()};
  doc.metadata["seed"] = c.seed;
  write_text(c.output, emit_document(doc));
  if (!c.dot.empty()) write_text(c.dot, emit_dot(doc.graph));
  return 0;
}

int run_cuts(const Common& c) {
  const auto g = load(c);
  const auto cuts = enumerate_cuts(g, c.k, filter_of(c), c.caps);
  json out = header(c, g);
  out["count"] = cuts.size();
  out["cuts"] = json::array();
  for (const auto& cut : cuts) out["cuts"].push_back(cut_json(cut));
  emit(c, out);
  if (!c.dot.empty()) write_text(c.dot, emit_dot(g));
  return 0;
}

int run_treesets(const Common& c) {
  const auto g = load(c);
  const auto cuts = enumerate_cuts(g, c.k, filter_of(c), c.caps);
  const auto parts = partition_into_treesets(g, cuts);
  json out = header(c, g);
  out["cuts"] = cuts.size();
  out["conflict_degree"] = conflict_degree(cuts);
  out["treesets"] = json::array();
  bool ok = true;
  for (const auto& ts : parts) {
    json sides = json::array();
    for (const auto& cut : ts.cuts()) sides.push_back(cut.side());
    const bool valid = std::holds_alternative<Treeset>(validate_treeset(g, ts.cuts()));
    ok = ok && valid;
    out["treesets"].push_back({{"size", ts.size()}, {"valid", valid}, {"sides", sides}});
  }
  emit(c, out);
  if (!c.dot.empty()) write_text(c.dot, emit_dot(g));
  return ok ? 0 : kExitCertificate;
}

int run_structure_tree(const Common& c) {
  const auto g = load(c);
  const auto cuts = enumerate_cuts(g, c.k, filter_of(c), c.caps);
  const auto parts = partition_into_treesets(g, cuts);
  json out = header(c, g);
  out["structure_trees"] = json::array();
  bool ok = true;
  std::optional<std::vector<std::size_t>> first_rho;
  for (const auto& ts : parts) {
    const auto st = build_structure_tree(g, ts);
    const auto report = validate_structure_tree(st, g, ts);
    ok = ok && report.ok();
    if (!first_rho) first_rho = st.rho;
    json vertices = json::array();
    for (const auto& u : st.vertices) {
      std::vector<std::size_t> members;
      for (auto i = u.cuts.find_first(); i != VertexSet::npos; i = u.cuts.find_next(i)) members.push_back(i);
      vertices.push_back({{"component", u.component}, {"cuts", members}});
    }
    json edges = json::array();
    for (const auto& e : st.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"cut", e.cut}});
    out["structure_trees"].push_back({{"vertices", vertices},
                                      {"edges", edges},
                                      {"rho", st.rho},
                                      {"report",
                                       {{"tree_per_component", report.tree_per_component},
                                        {"edge_cut_bijection", report.edge_cut_bijection},
                                        {"orientation_axioms", report.orientation_axioms},
                                        {"distance_formula", report.distance_formula},
                                        {"chains_totally_ordered", report.chains_totally_ordered},
                                        {"pairs_checked", report.pairs_checked},
                                        {"failures", report.failures}}}});
  }
  out["ok"] = ok;
  emit(c, out);
  if (!c.dot.empty()) {
    DotOptions d;
    d.rho = first_rho;
    write_text(c.dot, emit_dot(g, d));
  }
  return ok ? 0 : kExitCertificate;
}

int run_decompose(const Common& c) {
  const auto g = load(c);
  const auto p = accessibility_pipeline(g, pipeline_options(c));
  json out = header(c, g);
  out["pipeline"] = pipeline_json(p);
  emit(c, out);
  if (!c.dot.empty()) {
    DotOptions d;
    d.tree_edges = p.accumulated_tree;
    d.remainder_edges = p.final_remainder;
    write_text(c.dot, emit_dot(p.final_graph, d));
  }
  return p.ok() ? 0 : kExitCertificate;
}

int run_treeify(const Common& c) {
  const auto g = load(c);
  const auto r = treeify(g, pipeline_options(c));
  json out = header(c, g);
  out["tree"] = edges_json(r.tree);
  out["acyclic"] = r.acyclic;
  out["spans_components"] = r.spans_components;
  out["lipschitz"] = extended(r.lipschitz);
  out["combined_acyclic"] = r.combined_acyclic;
  out["combined_free_intersection"] = r.combined_free_intersection;
  out["residual_forest_edges"] = r.residual_forest.size();
  out["pipeline"] = pipeline_json(r.pipeline);
  out["ok"] = r.ok();
  emit(c, out);
  if (!c.dot.empty()) write_text(c.dot, emit_dot(Graph::from_edges(g.vertex_count(), r.tree)));
  return r.ok() ? 0 : kExitCertificate;
}

int run_modulus(const Common& c, int k_max) {
  const auto g = load(c);
  json out = header(c, g);
  auto entry_json = [&](const ModulusEntry& m) {
    return json{{"k", m.k},
                {"r", m.r},
                {"cuts", m.cut_count},
                {"witness", m.witness ? json(m.witness->side()) : json(nullptr)}};
  };
  const auto m = one_endedness_modulus(g, c.k, filter_of(c), c.caps);
  out.update(entry_json(m));
  if (k_max >= 0) {
    out["profile"] = json::array();
    for (int k = 0; k <= k_max; ++k) out["profile"].push_back(entry_json(one_endedness_modulus(g, k, filter_of(c), c.caps)));
  }
  emit(c, out);
  if (!c.dot.empty()) write_text(c.dot, emit_dot(g));
  return 0;
}

int run_verify(const Common& c, std::size_t max_component) {
  const auto g = load(c);
  json checks = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail = {}) {
    ok = ok && pass;
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
  };

  const auto cuts = enumerate_cuts(g, c.k, filter_of(c), c.caps);
  {
    std::vector<std::vector<Vertex>> fast;
    for (const auto& cut : cuts) fast.push_back(cut.side());
    std::sort(fast.begin(), fast.end());
    const auto brute = oracles::brute_cuts(g, c.k, filter_of(c), max_component);
    record("enumerate_cuts == brute_cuts", fast == brute,
           std::to_string(fast.size()) + " vs " + std::to_string(brute.size()) + " sides");
  }
  const auto parts = partition_into_treesets(g, cuts);
  {
    bool pass = true;
    for (const auto& ts : parts) {
      const auto st = build_structure_tree(g, ts);
      for (Vertex x = 0; x < static_cast<Vertex>(g.vertex_count()); ++x) {
        for (Vertex y = 0; y < static_cast<Vertex>(g.vertex_count()); ++y) {
          if (st.vertices[st.rho[static_cast<std::size_t>(x)]].component !=
              st.vertices[st.rho[static_cast<std::size_t>(y)]].component) {
            continue;
          }
          pass = pass && tree_distance(st, rho(st, x), rho(st, y)) == oracles::brute_separation_count(ts, x, y);
        }
      }
    }
    record("tree_distance == brute_separation_count", pass, std::to_string(parts.size()) + " treesets");
  }
  {
    const auto p = accessibility_pipeline(g, pipeline_options(c));
    bool pass = true;
    std::size_t compared = 0;
    for (const auto& s : p.stages) {
      const auto y = s.subdivision.graph.vertex_count();
      if (y > 12) continue;
      ++compared;
      const bool brute = !oracles::brute_alternating_words(y, s.decomposition.tree, s.decomposition.remainder, 8);
      pass = pass && brute == s.certificate.split.free_intersection;
    }
    record("free_intersection_check == brute_alternating_words", pass,
           std::to_string(compared) + " of " + std::to_string(p.stages.size()) + " stages small enough");
    record("pipeline certificates", p.ok());
  }
  json out = header(c, g);
  out["checks"] = checks;
  out["pass"] = ok;
  emit(c, out);
  return ok ? 0 : kExitCertificate;
}

const std::vector<std::string> kDefaultSweep = {
    "tree_of_triangles:2", "tree_of_triangles:5", "tree_of_triangles:10", "tree_of_triangles:20",
    "tree_of_triangles:40", "grid:4x4",           "grid:8x8",             "grid:12x12",
    "grid:16x16",           "ladder:2x8",         "ladder:2x12",          "ladder:2x16",
    "ladder:2x20"};

std::string bench_row(const Common& c, const std::string& family, bool timing) {
  const auto spec = parse_family(family, c.seed);
  const auto g = generate(spec);
  const auto start = std::chrono::steady_clock::now();
  const auto modulus = one_endedness_modulus(g, c.k, filter_of(c), c.caps);
  const auto r = treeify(g, pipeline_options(c));
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  const auto colon = family.find(':');
  std::ostringstream row;
  row << spec.name << "," << family.substr(colon + 1) << "," << c.k << "," << c.filter << "," << modulus.r << ","
      << r.lipschitz.to_string() << "," << r.pipeline.stages.size() << "," << r.pipeline.cut_count << ",";
  if (timing) row << ms;
  row << "\n";
  return row.str();
}

int run_bench(const Common& c, std::vector<std::string> families, bool timing, unsigned jobs) {
  if (families.empty()) families = kDefaultSweep;
  std::vector<std::string> rows(families.size());
  std::vector<std::string> errors(families.size());
  auto work = [&](std::size_t i) {
    try {
      rows[i] = bench_row(c, families[i], timing);
    } catch (const std::exception& e) {
      errors[i] = families[i] + ": " + e.what();
    }
  };
  jobs = std::max(1U, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < families.size(); i += jobs) work(i);
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (!e.empty()) throw ParseError(e);
  }
  std::string csv = "family,size,k,filter,modulus,treeify_lipschitz,stages,cuts,runtime_ms\n";
  for (const auto& r : rows) csv += r;
  write_text(c.output, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasitree: bounded-boundary cuts, structure trees and tree approximations of graphs"};
  app.require_subcommand(1);

  Common c;
  int k_max = -1;
  std::size_t max_component = 18;
  std::vector<std::string> bench_families;
  bool timing = false;
  unsigned jobs = 1;

  auto* gen = app.add_subcommand("gen", "write a generated family member as a GraphDocument");
  add_common(gen, c);
  auto* cuts = app.add_subcommand("cuts", "enumerate cuts with boundary diameter <= k");
  add_common(cuts, c);
  auto* treesets = app.add_subcommand("treesets", "partition the cuts into nested treesets");
  add_common(treesets, c);
  auto* stree = app.add_subcommand("structure-tree", "build and validate the structure tree of each treeset");
  add_common(stree, c);
  auto* decompose = app.add_subcommand("decompose", "run the staged T * H decomposition");
  add_common(decompose, c);
  auto* tfy = app.add_subcommand("treeify", "build an acyclic graph Lipschitz equivalent to the input");
  add_common(tfy, c);
  auto* modulus = app.add_subcommand("modulus", "one-endedness modulus r(k)");
  add_common(modulus, c);
  modulus->add_option("--k-max", k_max, "also report the profile for k = 0..k-max");
  auto* verify = app.add_subcommand("verify", "compare fast paths with the brute-force oracles");
  add_common(verify, c);
  verify->add_option("--max-component", max_component, "largest component the oracles accept");
  Common bc;
  bc.k = 2;
  auto* bench = app.add_subcommand("bench", "sweep families and print CSV");
  add_common(bench, bc, false);
  bench->add_option("--family,-f", bench_families, "family spec (repeatable); default sweep otherwise");
  bench->add_flag("--timing", timing, "fill runtime_ms");
  bench->add_option("--jobs,-j", jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen) return run_gen(c);
    if (*cuts) return run_cuts(c);
    if (*treesets) return run_treesets(c);
    if (*stree) return run_structure_tree(c);
    if (*decompose) return run_decompose(c);
    if (*tfy) return run_treeify(c);
    if (*modulus) return run_modulus(c, k_max);
    if (*verify) return run_verify(c, max_component);
    if (*bench) return run_bench(bc, bench_families, timing, jobs);
  } catch (const CertificateError& e) {
    std::cerr << "certificate violation: " << e.what() << "\n";
    return kExitCertificate;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
