// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// usage: acceptance <path to quasitree cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "quasitree/decompose.hpp"
#include "quasitree/errors.hpp"
#include "quasitree/io.hpp"
#include "quasitree/oracles.hpp"
#include "quasitree/structure_tree.hpp"

using namespace quasitree;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
}

Graph random_connected(std::mt19937_64& rng, int n, int max_degree, int extra) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  EdgeList e;
  auto add = [&](int u, int v) {
    e.emplace_back(u, v);
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  };
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (deg[static_cast<std::size_t>(u)] < max_degree) open.push_back(u);
    }
    add(open[static_cast<std::size_t>(rng() % open.size())], v);
  }
  std::set<Edge> have;
  for (const auto& x : e) have.insert(normalized(x));
  for (int i = 0; i < extra; ++i) {
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u == v || have.count(normalized({u, v})) || deg[static_cast<std::size_t>(u)] >= max_degree ||
        deg[static_cast<std::size_t>(v)] >= max_degree) {
      continue;
    }
    have.insert(normalized({u, v}));
    add(u, v);
  }
  return Graph::from_edges(static_cast<std::size_t>(n), e);
}

std::vector<std::vector<Vertex>> sides(const Cutset& cs) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cs) out.push_back(c.side());
  std::sort(out.begin(), out.end());
  return out;
}

// Fixed families plus small random graphs, each paired with the scales it is run at.
std::vector<std::pair<std::string, Graph>> corpus() {
  std::vector<std::pair<std::string, Graph>> out;
  for (const char* f : {"path:4", "path:9", "cycle:4", "cycle:7", "complete:3", "complete:4", "grid:3x3", "grid:4x4",
                        "ladder:2x8", "balanced_tree:2x3", "subdivided_tree:2x2x1", "tree_of_triangles:2",
                        "tree_of_triangles:5", "tree_of_triangles:10", "tree_with_chords:20", "free_product_ball:3"}) {
    out.emplace_back(f, generate(parse_family(f, 0)));
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + static_cast<int>(rng() % 10);
    out.emplace_back("random#" + std::to_string(i), random_connected(rng, n, 4, static_cast<int>(rng() % 5)));
  }
  return out;
}

void criterion_oracle_gate() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1);
  std::size_t runs = 0;
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 13);
    const auto g = random_connected(rng, n, 4, static_cast<int>(rng() % (n + 1)));
    for (int k = 0; k <= 2; ++k) {
      for (auto filter : {BoundaryFilter::inner_and_outer, BoundaryFilter::inner_only}) {
        ++runs;
        if (sides(enumerate_cuts(g, k, filter)) != oracles::brute_cuts(g, k, filter)) ++mismatches;
      }
    }
  }
  const double s = seconds_since(start);
  std::ostringstream d;
  d << runs << " runs on 200 graphs, " << mismatches << " mismatches, " << s << " s";
  report(1, "enumerate_cuts == brute_cuts", mismatches == 0 && s < 60.0, d.str());
}

void criterion_structure_tree() {
  std::mt19937_64 rng(2);
  std::size_t trees = 0;
  std::size_t pairs = 0;
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 59);
    const auto g = random_connected(rng, n, 4, static_cast<int>(rng() % (n / 2 + 2)));
    const int k = static_cast<int>(rng() % 3);
    for (const auto& ts : partition_into_treesets(g, enumerate_cuts(g, k))) {
      ++trees;
      const auto st = build_structure_tree(g, ts);
      const auto rep = validate_structure_tree(st, g, ts, g.vertex_count());
      if (!rep.tree_per_component || !rep.edge_cut_bijection || st.edges.size() != ts.pair_count()) ++bad;
      for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
          ++pairs;
          if (tree_distance(st, rho(st, x), rho(st, y)) != oracles::brute_separation_count(ts, x, y)) ++bad;
        }
      }
    }
  }
  std::ostringstream d;
  d << trees << " structure trees, " << pairs << " vertex pairs, " << bad << " violations";
  report(2, "structure tree is a tree, edges match cut pairs, distance identity", bad == 0, d.str());
}

void criterion_split(const std::vector<std::pair<std::string, Graph>>& graphs) {
  std::size_t stages = 0;
  std::size_t brute_compared = 0;
  std::size_t bad = 0;
  std::string first;
  for (const auto& [name, g] : graphs) {
    for (int k = 0; k <= 2; ++k) {
      PipelineOptions opt;
      opt.k = k;
      opt.strict = false;
      const auto p = accessibility_pipeline(g, opt);
      for (const auto& s : p.stages) {
        ++stages;
        const auto& dec = s.decomposition;
        const auto& sub = s.subdivision;
        const std::size_t y = sub.graph.vertex_count();
        bool ok = is_acyclic(Graph::from_edges(y, dec.tree));
        const bool fast = free_intersection_check(y, dec.tree, dec.remainder);
        ok = ok && fast;
        if (y <= 12) {
          ++brute_compared;
          ok = ok && fast == !oracles::brute_alternating_words(y, dec.tree, dec.remainder, 8).has_value();
        }
        ok = ok && restrict_cutset(sub.lifted.cuts(), Graph::from_edges(y, dec.remainder)).empty();
        ok = ok && dec.measured_lipschitz <= Extended(split_lipschitz_bound(dec.r));
        if (!ok) {
          ++bad;
          if (first.empty()) first = " (first: " + name + " k=" + std::to_string(k) + ")";
        }
      }
    }
  }
  std::ostringstream d;
  d << stages << " stages, " << brute_compared << " checked against the word oracle, " << bad
    << " violations; Lipschitz bound 3 max(r,1)" << first;
  report(3, "split certificates on every stage", bad == 0, d.str());
}

void criterion_quasi_tree_family() {
  const auto start = Clock::now();
  std::ostringstream d;
  bool ok = true;
  Extended bound = Extended::infinity();
  for (int m : {2, 5, 10, 20, 40}) {
    const auto g = generate({"tree_of_triangles", {m}, 0});
    PipelineOptions opt;
    opt.k = 2;
    try {
      const auto r = treeify(g, opt);
      if (m == 2) bound = r.lipschitz;
      const bool within = r.lipschitz <= bound;
      ok = ok && r.ok() && r.acyclic && r.tree.size() + 1 == g.vertex_count() && within;
      d << "m=" << m << ":L=" << r.lipschitz << (within ? "" : "(>L*)") << " ";
    } catch (const Error& e) {
      ok = false;
      d << "m=" << m << ":error(" << e.what() << ") ";
    }
  }
  const double s = seconds_since(start);
  d << "L*=" << bound << " " << s << " s";
  report(4, "tree_of_triangles treeify constant bounded by L* = L(m=2)", ok && s < 300.0, d.str());
}

void criterion_grid() {
  std::ostringstream d;
  bool ok = true;
  Extended previous(0);
  for (int n : {4, 8, 12, 16}) {
    PipelineOptions opt;
    opt.k = 2;
    const auto r = treeify(generate({"grid", {n, n}, 0}), opt);
    ok = ok && r.ok() && previous < r.lipschitz;
    previous = r.lipschitz;
    d << n << "x" << n << ":L=" << r.lipschitz << " ";
  }
  int bound = -1;
  int worst = 0;
  for (int n = 6; n <= 30; ++n) {
    const int r = one_endedness_modulus(generate({"grid", {n, n}, 0}), 2).r;
    if (bound < 0) bound = r;
    worst = std::max(worst, r);
  }
  ok = ok && worst <= bound;
  d << "modulus over 6..30: max " << worst << ", bound at 6: " << bound;
  report(5, "grids: treeify constant strictly increases, modulus bounded", ok, d.str());
}

void criterion_ladder() {
  std::ostringstream d;
  bool ok = true;
  for (int n : {8, 12, 16, 20}) {
    const auto g = generate({"ladder", {2, n}, 0});
    const int r = one_endedness_modulus(g, 2).r;
    ok = ok && 2 * r >= n - 4;
    d << "2x" << n << ":r=" << r;
    if (n <= 12) {
      const int brute = oracles::brute_modulus(g, 2, BoundaryFilter::inner_and_outer, 24).r;
      ok = ok && brute == r;
      d << "(oracle " << brute << ")";
    }
    d << " ";
  }
  report(6, "ladders: modulus >= n/2 - 2", ok, d.str());
}

void criterion_fixed_examples() {
  std::ostringstream d;
  bool ok = true;
  {
    PipelineOptions opt;
    opt.k = 1;
    const auto p4 = generate({"path", {4}, 0});
    const auto r = treeify(p4, opt);
    const bool pass = r.tree == p4.edges() && r.lipschitz == Extended(1);
    ok = ok && pass;
    d << "P4:" << (pass ? "ok" : "wrong") << " ";
  }
  {
    PipelineOptions opt;
    opt.k = 2;
    const auto r = treeify(generate({"tree_of_triangles", {2}, 0}), opt);
    const bool pass = r.tree.size() == 5 && r.acyclic && r.lipschitz <= Extended(3);
    ok = ok && pass;
    d << "two triangles:" << r.tree.size() << " edges, L=" << r.lipschitz << " ";
  }
  {
    const auto tri = generate({"complete", {3}, 0});
    Cutset cuts;
    for (const auto& s : std::vector<std::vector<Vertex>>{{0}, {1}, {2}, {1, 2}, {0, 2}, {0, 1}}) {
      cuts.push_back(cut_from_side(tri, s));
    }
    const auto ts = require_treeset(tri, cuts);
    const auto st = build_structure_tree(tri, ts);
    const auto tree = st.tree_graph();
    std::set<std::size_t> image(st.rho.begin(), st.rho.end());
    std::size_t centers = 0;
    bool center_outside = false;
    for (std::size_t u = 0; u < st.vertices.size(); ++u) {
      if (tree.degree(static_cast<Vertex>(u)) == 3) {
        ++centers;
        center_outside = image.count(u) == 0;
      }
    }
    const bool pass = st.vertices.size() == 4 && st.edges.size() == 3 && centers == 1 && center_outside &&
                      image.size() == 3 && validate_structure_tree(st, tri, ts).ok();
    ok = ok && pass;
    d << "triangle star: " << st.vertices.size() << " vertices, center outside rho " << (pass ? "yes" : "no");
  }
  report(7, "fixed examples", ok, d.str());
}

void criterion_census(const std::vector<std::pair<std::string, Graph>>& graphs) {
  std::size_t cutsets = 0;
  std::size_t bad = 0;
  std::size_t worst = 0;
  for (const auto& [name, g] : graphs) {
    for (int k = 0; k <= 2; ++k) {
      for (auto filter : {BoundaryFilter::inner_and_outer, BoundaryFilter::inner_only}) {
        const auto cs = enumerate_cuts(g, k, filter);
        ++cutsets;
        const int r = max_inner_boundary_diameter(g, cs);
        for (std::size_t x = 0; x < g.vertex_count(); ++x) {
          const auto count = cut_census_at_vertex(cs, static_cast<Vertex>(x));
          worst = std::max(worst, count);
          if (!within_census_bound(count, g.max_degree(), r)) ++bad;
        }
      }
    }
  }
  std::ostringstream d;
  d << cutsets << " cutsets, largest census " << worst << ", " << bad << " violations";
  report(8, "cut census <= 2^(d^(r+2))", bad == 0, d.str());
}

std::string run(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

void criterion_determinism(const std::string& cli) {
  if (cli.empty()) {
    report(9, "bench determinism", false, "no CLI path given");
    return;
  }
  int s1 = 0;
  int s2 = 0;
  const std::string command = "'" + cli + "' bench -k 2 --seed 0";
  const auto a = run(command, s1);
  const auto b = run(command, s2);
  std::size_t rows = 0;
  for (char ch : a) rows += ch == '\n';
  const bool ok = s1 == 0 && s2 == 0 && !a.empty() && a == b;
  report(9, "bench determinism", ok, std::to_string(a.size()) + " bytes, " + std::to_string(rows) + " lines, identical: " + (a == b ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const auto graphs = corpus();
  const std::vector<std::pair<int, std::function<void()>>> steps{
      {1, criterion_oracle_gate},
      {2, criterion_structure_tree},
      {3, [&] { criterion_split(graphs); }},
      {4, criterion_quasi_tree_family},
      {5, criterion_grid},
      {6, criterion_ladder},
      {7, criterion_fixed_examples},
      {8, [&] { criterion_census(graphs); }},
      {9, [&] { criterion_determinism(cli); }},
  };
  for (const auto& [id, step] : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report(id, "criterion raised", false, e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
