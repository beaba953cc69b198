#include "quasitree/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "quasitree/errors.hpp"

namespace quasitree {

VertexSet to_vertex_set(std::size_t n, std::span<const Vertex> vertices) {
  VertexSet set(n);
  for (Vertex v : vertices) set.set(static_cast<std::size_t>(v));
  return set;
}

std::vector<Vertex> to_vertex_list(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

Edge Cut::least_boundary_edge() const {
  Edge best = normalized(out_edges_.front());
  for (const auto& e : out_edges_) best = std::min(best, normalized(e));
  return best;
}

std::string to_string(const Cut& cut) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cut.side().size(); ++i) os << (i ? "," : "") << cut.side()[i];
  os << '}';
  return os.str();
}

CutBuilder::CutBuilder(const Graph& g) : graph_(&g), components_(quasitree::components(g)) {
  component_sets_.reserve(components_.count());
  for (const auto& members : components_.members) component_sets_.push_back(to_vertex_set(g.vertex_count(), members));
}

Cut CutBuilder::make(std::span<const Vertex> side) const {
  const std::size_t n = graph_->vertex_count();
  for (Vertex v : side) {
    if (!graph_->contains(v)) throw CutError("cut side contains out-of-range vertex " + std::to_string(v));
  }
  return make(to_vertex_set(n, side));
}

Cut CutBuilder::make(const VertexSet& side) const {
  const Graph& g = *graph_;
  if (side.size() != g.vertex_count()) throw CutError("cut side has the wrong universe size");
  const auto first = side.find_first();
  if (first == VertexSet::npos) throw CutError("cut side is empty");
  const int cid = components_.id[first];
  const VertexSet& component = component_sets_[static_cast<std::size_t>(cid)];
  if (!side.is_subset_of(component)) throw CutError("cut side spans several components");
  const std::size_t count = side.count();
  if (count == component.count()) throw CutError("cut side is a whole component");

  Cut cut;
  cut.component_ = cid;
  cut.component_size_ = component.count();
  cut.members_ = side;
  cut.side_ = to_vertex_list(side);
  VertexSet outer(g.vertex_count());
  for (Vertex x : cut.side_) {
    bool inner = false;
    for (Vertex y : g.neighbors(x)) {
      if (!side.test(static_cast<std::size_t>(y))) {
        inner = true;
        outer.set(static_cast<std::size_t>(y));
        cut.out_edges_.emplace_back(x, y);
      }
    }
    if (inner) cut.inner_.push_back(x);
  }
  cut.outer_ = to_vertex_list(outer);
  cut.in_edges_.reserve(cut.out_edges_.size());
  for (const auto& [x, y] : cut.out_edges_) cut.in_edges_.emplace_back(y, x);
  std::sort(cut.in_edges_.begin(), cut.in_edges_.end());
  return cut;
}

Cut CutBuilder::complement(const Cut& cut) const {
  VertexSet rest = component_sets_[static_cast<std::size_t>(cut.component())] - cut.members();
  return make(rest);
}

Cut cut_from_side(const Graph& g, std::span<const Vertex> side) { return CutBuilder(g).make(side); }

Cutset canonical_cutset(Cutset cuts) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

namespace {

// Complement of a cut as a member set within its component, expressed through sizes:
// C̄ = component ∖ C, so C̄ ∩ D̄ = ∅ iff |C ∪ D| = |component|.
bool union_covers_component(const Cut& a, const Cut& b) {
  return (a.members() | b.members()).count() == a.component_size();
}

bool is_complement_pair(const Cut& a, const Cut& b) {
  return a.component() == b.component() && a.size() + b.size() == a.component_size() &&
         !a.members().intersects(b.members());
}

// Index of each cut's complement, or npos.
std::vector<std::size_t> complement_indices(std::span<const Cut> cuts) {
  std::vector<std::size_t> out(cuts.size(), static_cast<std::size_t>(-1));
  // Candidates share the component and have complementary size.
  std::map<std::pair<int, std::size_t>, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < cuts.size(); ++i) by_size[{cuts[i].component(), cuts[i].size()}].push_back(i);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Cut& c = cuts[i];
    auto it = by_size.find({c.component(), c.component_size() - c.size()});
    if (it == by_size.end()) continue;
    for (std::size_t j : it->second) {
      if (is_complement_pair(c, cuts[j])) {
        out[i] = j;
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool is_complement_closed(std::span<const Cut> cuts) {
  const auto comp = complement_indices(cuts);
  return std::none_of(comp.begin(), comp.end(), [](std::size_t j) { return j == static_cast<std::size_t>(-1); });
}

bool is_nested(const Cut& a, const Cut& b) {
  if (a.component() != b.component()) return true;
  const VertexSet& A = a.members();
  const VertexSet& B = b.members();
  return !A.intersects(B) || A.is_subset_of(B) || B.is_subset_of(A) || union_covers_component(a, b);
}

struct CutPtrLess {
  bool operator()(const Cut* a, const Cut* b) const { return *a < *b; }
};

struct TreesetFactory {
  static Treeset make(std::vector<Cut> cuts, std::vector<std::size_t> complement, std::size_t n) {
    Treeset t;
    t.cuts_ = std::move(cuts);
    t.complement_ = std::move(complement);
    t.vertex_count_ = n;
    return t;
  }
};

TreesetCheck validate_treeset(const Graph& g, std::span<const Cut> input) {
  std::vector<Cut> cuts;
  cuts.reserve(input.size());
  {
    std::set<const Cut*, CutPtrLess> seen;
    for (const Cut& c : input) {
      if (seen.insert(&c).second) cuts.push_back(c);
    }
  }
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].members().size() != g.vertex_count()) {
      return TreesetViolation{TreesetViolation::Kind::foreign_cut, i, i,
                              "cut " + to_string(cuts[i]) + " does not belong to this graph"};
    }
  }
  const auto comp = complement_indices(cuts);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (comp[i] == static_cast<std::size_t>(-1)) {
      return TreesetViolation{TreesetViolation::Kind::missing_complement, i, i,
                              "complement of " + to_string(cuts[i]) + " is missing"};
    }
  }
  // Nestedness is invariant under complementing either cut, so one side per pair decides.
  bool nested = true;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i < comp[i]) reps.push_back(i);
  }
  for (std::size_t a = 0; a < reps.size() && nested; ++a) {
    for (std::size_t b = a + 1; b < reps.size(); ++b) {
      if (!is_nested(cuts[reps[a]], cuts[reps[b]])) {
        nested = false;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < cuts.size() && !nested; ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if (!is_nested(cuts[i], cuts[j])) {
        return TreesetViolation{TreesetViolation::Kind::not_nested, i, j,
                                to_string(cuts[i]) + " and " + to_string(cuts[j]) + " are not nested"};
      }
    }
  }
  // Finitely separating holds for every finite family.
  return TreesetFactory::make(std::move(cuts), comp, g.vertex_count());
}

Treeset require_treeset(const Graph& g, std::span<const Cut> cuts) {
  auto check = validate_treeset(g, cuts);
  if (auto* v = std::get_if<TreesetViolation>(&check)) throw CertificateError("not a treeset: " + v->message);
  return std::get<Treeset>(std::move(check));
}

namespace {

struct ConflictGraph {
  std::vector<std::size_t> representatives;       // indices into the sorted cutset
  std::vector<std::vector<std::size_t>> adjacent;  // over representative positions
};

ConflictGraph conflict_graph(std::span<const Cut> sorted) {
  ConflictGraph cg;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].is_canonical()) cg.representatives.push_back(i);
  }
  cg.adjacent.resize(cg.representatives.size());
  for (std::size_t a = 0; a < cg.representatives.size(); ++a) {
    const Cut& ca = sorted[cg.representatives[a]];
    for (std::size_t b = a + 1; b < cg.representatives.size(); ++b) {
      const Cut& cb = sorted[cg.representatives[b]];
      if (ca.component() != cb.component()) continue;
      if (!is_nested(ca, cb)) {
        cg.adjacent[a].push_back(b);
        cg.adjacent[b].push_back(a);
      }
    }
  }
  return cg;
}

}  // namespace

std::size_t conflict_degree(std::span<const Cut> cuts) {
  const Cutset sorted = canonical_cutset(Cutset(cuts.begin(), cuts.end()));
  const auto cg = conflict_graph(sorted);
  std::size_t d = 0;
  for (const auto& adj : cg.adjacent) d = std::max(d, adj.size());
  return d;
}

std::vector<Treeset> partition_into_treesets(const Graph& g, std::span<const Cut> cuts) {
  const Cutset sorted = canonical_cutset(Cutset(cuts.begin(), cuts.end()));
  const auto comp = complement_indices(sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (comp[i] == static_cast<std::size_t>(-1)) {
      throw CutError("partition_into_treesets: complement of " + to_string(sorted[i]) + " is missing");
    }
  }
  const auto cg = conflict_graph(sorted);
  const std::size_t reps = cg.representatives.size();
  std::vector<int> color(reps, -1);
  int colors = 0;
  std::vector<char> used;
  for (std::size_t a = 0; a < reps; ++a) {
    used.assign(cg.adjacent[a].size() + 1, 0);
    for (std::size_t b : cg.adjacent[a]) {
      const int c = color[b];
      if (c >= 0 && static_cast<std::size_t>(c) < used.size()) used[static_cast<std::size_t>(c)] = 1;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    color[a] = c;
    colors = std::max(colors, c + 1);
  }
  std::vector<std::vector<std::size_t>> classes(static_cast<std::size_t>(colors));
  for (std::size_t a = 0; a < reps; ++a) {
    const std::size_t i = cg.representatives[a];
    classes[static_cast<std::size_t>(color[a])].push_back(i);
    classes[static_cast<std::size_t>(color[a])].push_back(comp[i]);
  }
  std::vector<Treeset> out;
  out.reserve(classes.size());
  for (auto& members : classes) {
    std::sort(members.begin(), members.end());
    Cutset part;
    part.reserve(members.size());
    for (std::size_t i : members) part.push_back(sorted[i]);
    out.push_back(require_treeset(g, part));
  }
  return out;
}

Cutset separating_cuts(std::span<const Cut> cuts, Vertex x, Vertex y) {
  Cutset out;
  for (const Cut& c : cuts) {
    if (c.contains(x) && !c.contains(y)) out.push_back(c);
  }
  return out;
}

std::size_t cut_census_at_vertex(std::span<const Cut> cuts, Vertex x) {
  std::size_t count = 0;
  for (const Cut& c : cuts) {
    if (c.contains(x) && std::binary_search(c.inner_boundary().begin(), c.inner_boundary().end(), x)) ++count;
  }
  return count;
}

bool within_census_bound(std::size_t count, std::size_t max_degree, int r) {
  // exponent = d^(r+2); bound = 2^exponent
  long double exponent = std::pow(static_cast<long double>(max_degree), static_cast<long double>(r + 2));
  if (exponent >= 63.0L) return true;
  const auto bound = static_cast<std::uint64_t>(1) << static_cast<unsigned>(exponent);
  return count <= bound;
}

int max_inner_boundary_diameter(const Graph& g, std::span<const Cut> cuts) {
  DistanceCache dist(g);
  int r = 0;
  for (const Cut& c : cuts) {
    const int d = dist.diameter(c.inner_boundary());
    if (d == kUnreachable) throw CutError("inner boundary spans components");
    r = std::max(r, d);
  }
  return r;
}

namespace {

// Splits a vertex set along the components of the builder's graph, keeping proper parts.
void add_proper_parts(const CutBuilder& builder, const VertexSet& set, Cutset& out) {
  const auto& comps = builder.components();
  std::map<int, VertexSet> parts;
  for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) {
    const int cid = comps.id[v];
    auto [it, inserted] = parts.try_emplace(cid, set.size());
    it->second.set(v);
  }
  for (const auto& [cid, part] : parts) {
    if (part.count() < comps.members[static_cast<std::size_t>(cid)].size()) out.push_back(builder.make(part));
  }
}

}  // namespace

Cutset pullback_cutset(std::span<const Vertex> collapse, std::span<const Cut> cuts, const Graph& gY) {
  if (collapse.size() != gY.vertex_count()) throw GraphError("pullback_cutset: collapse is not total on Y");
  const CutBuilder builder(gY);
  Cutset out;
  for (const Cut& c : cuts) {
    VertexSet preimage(gY.vertex_count());
    for (std::size_t y = 0; y < collapse.size(); ++y) {
      const Vertex x = collapse[y];
      if (x < 0 || static_cast<std::size_t>(x) >= c.members().size()) {
        throw GraphError("pullback_cutset: collapse value " + std::to_string(x) + " out of range");
      }
      if (c.contains(x)) preimage.set(y);
    }
    add_proper_parts(builder, preimage, out);
  }
  return canonical_cutset(std::move(out));
}

Cutset restrict_cutset(std::span<const Cut> cuts, const Graph& h) {
  const CutBuilder builder(h);
  Cutset out;
  for (const Cut& c : cuts) {
    if (c.members().size() != h.vertex_count()) throw GraphError("restrict_cutset: subgraph has a different vertex set");
    add_proper_parts(builder, c.members(), out);
  }
  return canonical_cutset(std::move(out));
}

std::map<Edge, Cut> tree_edge_cuts(const Graph& gp, const EdgeList& tree, const EdgeList& remainder) {
  const std::size_t n = gp.vertex_count();
  const EdgeList t_norm = normalize_edges(tree);
  const EdgeList h_norm = normalize_edges(remainder);
  EdgeList both;
  std::set_union(t_norm.begin(), t_norm.end(), h_norm.begin(), h_norm.end(), std::back_inserter(both));
  EdgeList overlap;
  std::set_intersection(t_norm.begin(), t_norm.end(), h_norm.begin(), h_norm.end(), std::back_inserter(overlap));
  if (!overlap.empty() || both != gp.edges()) throw CutError("tree_edge_cuts: T and H do not partition the edges");
  if (!is_acyclic(Graph::from_edges(n, t_norm))) throw CutError("tree_edge_cuts: T is not acyclic");

  const CutBuilder builder(gp);
  std::map<Edge, Cut> out;
  std::vector<Vertex> stack;
  for (const auto& [u, v] : t_norm) {
    for (const Edge& t : {Edge{u, v}, Edge{v, u}}) {
      VertexSet seen(n);
      seen.set(static_cast<std::size_t>(t.first));
      stack.assign(1, t.first);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : gp.neighbors(x)) {
          if (x == t.first && y == t.second) continue;
          if (!seen.test(static_cast<std::size_t>(y))) {
            seen.set(static_cast<std::size_t>(y));
            stack.push_back(y);
          }
        }
      }
      if (seen.test(static_cast<std::size_t>(t.second))) {
        throw CutError("tree_edge_cuts: edge (" + std::to_string(t.first) + ", " + std::to_string(t.second) +
                       ") lies on a cycle, so its cut is not unique");
      }
      out.emplace(t, builder.make(seen));
    }
  }
  return out;
}

}  // namespace quasitree
