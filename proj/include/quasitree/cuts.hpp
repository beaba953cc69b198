#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "quasitree/extended.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/metric.hpp"

namespace quasitree {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

VertexSet to_vertex_set(std::size_t n, std::span<const Vertex> vertices);
std::vector<Vertex> to_vertex_list(const VertexSet& set);

// Which boundary must have diameter at most k for a cut to be enumerated.
//  inner_and_outer: diam(∂iv C ∪ ∂ov C) <= k (symmetric in C and its complement).
//  inner_only:      diam(∂iv C) <= k or diam(∂iv C̄) <= k, so the family stays complement-closed.
enum class BoundaryFilter { inner_only, inner_and_outer };

// One side C of a bipartition of a connected component, with its four boundaries cached.
// Identity is (component, side); boundaries are derived data.
class Cut {
 public:
  int component() const { return component_; }
  std::size_t component_size() const { return component_size_; }

  const std::vector<Vertex>& side() const { return side_; }
  const VertexSet& members() const { return members_; }
  bool contains(Vertex v) const { return members_.test(static_cast<std::size_t>(v)); }
  std::size_t size() const { return side_.size(); }

  // Vertices of C with a neighbour outside C.
  const std::vector<Vertex>& inner_boundary() const { return inner_; }
  // Vertices outside C with a neighbour in C.
  const std::vector<Vertex>& outer_boundary() const { return outer_; }
  // Directed boundary edges (inside, outside), sorted.
  const EdgeList& out_edges() const { return out_edges_; }
  // Directed boundary edges (outside, inside), sorted.
  const EdgeList& in_edges() const { return in_edges_; }

  // Lexicographically least boundary edge, normalized.
  Edge least_boundary_edge() const;

  // The canonical side of {C, C̄} contains the smaller endpoint of the least boundary edge.
  bool is_canonical() const { return contains(least_boundary_edge().first); }

  friend bool operator==(const Cut& a, const Cut& b) {
    return a.component_ == b.component_ && a.side_ == b.side_;
  }
  friend std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
    if (auto c = a.component_ <=> b.component_; c != 0) return c;
    return a.side_ <=> b.side_;
  }

 private:
  friend class CutBuilder;

  int component_ = 0;
  std::size_t component_size_ = 0;
  std::vector<Vertex> side_;
  VertexSet members_;
  std::vector<Vertex> inner_;
  std::vector<Vertex> outer_;
  EdgeList out_edges_;
  EdgeList in_edges_;
};

std::string to_string(const Cut& cut);

// Builds cuts of one graph, sharing its component decomposition.
class CutBuilder {
 public:
  explicit CutBuilder(const Graph& g);

  const Graph& graph() const { return *graph_; }
  const Components& components() const { return components_; }
  const VertexSet& component_members(int component) const {
    return component_sets_[static_cast<std::size_t>(component)];
  }

  // Throws CutError when the side is empty, a whole component, or spans components.
  Cut make(std::span<const Vertex> side) const;
  Cut make(const VertexSet& side) const;
  Cut complement(const Cut& cut) const;

 private:
  const Graph* graph_;
  Components components_;
  std::vector<VertexSet> component_sets_;
};

Cut cut_from_side(const Graph& g, std::span<const Vertex> side);

// A family of cuts. Canonical form: sorted by (component, side), no duplicates.
using Cutset = std::vector<Cut>;

Cutset canonical_cutset(Cutset cuts);
bool is_complement_closed(std::span<const Cut> cuts);

struct EnumerationCaps {
  std::size_t max_ball = 64;        // |B(x, k)| per anchor
  std::size_t max_components = 12;  // components that may go to the outer side of one boundary
  std::size_t max_cuts = 200000;
};

// All cuts passing the boundary-diameter filter at scale k, complement-closed and canonical.
// Throws CapExceeded naming the anchor vertex when a cap is hit.
Cutset enumerate_cuts(const Graph& g, int k, BoundaryFilter filter = BoundaryFilter::inner_and_outer,
                      EnumerationCaps caps = {});

// Four-corner test. Cuts on different components are nested by convention.
bool is_nested(const Cut& a, const Cut& b);

// Nested, complement-closed cutset with its complement involution.
class Treeset {
 public:
  Treeset() = default;

  const std::vector<Cut>& cuts() const { return cuts_; }
  std::size_t size() const { return cuts_.size(); }
  bool empty() const { return cuts_.empty(); }
  const Cut& operator[](std::size_t i) const { return cuts_[i]; }
  std::size_t complement_of(std::size_t i) const { return complement_[i]; }
  std::size_t pair_count() const { return cuts_.size() / 2; }
  std::size_t vertex_count() const { return vertex_count_; }

 private:
  friend struct TreesetFactory;

  std::vector<Cut> cuts_;
  std::vector<std::size_t> complement_;
  std::size_t vertex_count_ = 0;
};

struct TreesetViolation {
  enum class Kind { missing_complement, not_nested, foreign_cut };
  Kind kind;
  std::size_t first = 0;   // index into the (deduplicated) input
  std::size_t second = 0;  // second cut of a non-nested pair
  std::string message;
};

using TreesetCheck = std::variant<Treeset, TreesetViolation>;

// Input order is kept; the first violation in that order is reported.
TreesetCheck validate_treeset(const Graph& g, std::span<const Cut> cuts);

// Throws CertificateError with the violation message if the family is not a treeset.
Treeset require_treeset(const Graph& g, std::span<const Cut> cuts);

// Greedy colouring of the non-nestedness graph on canonical pair representatives,
// in ascending cut order. Throws CutError if the input is not complement-closed.
std::vector<Treeset> partition_into_treesets(const Graph& g, std::span<const Cut> cuts);

// Max degree of the conflict graph used by partition_into_treesets.
std::size_t conflict_degree(std::span<const Cut> cuts);

// {C : x ∈ C, y ∉ C}
Cutset separating_cuts(std::span<const Cut> cuts, Vertex x, Vertex y);

// |{C : x ∈ ∂iv C}|
std::size_t cut_census_at_vertex(std::span<const Cut> cuts, Vertex x);

// count <= 2^(d^(r+2)), evaluated without overflow.
bool within_census_bound(std::size_t count, std::size_t max_degree, int r);

// Max over cuts of diam_G(∂iv C); 0 for an empty family.
int max_inner_boundary_diameter(const Graph& g, std::span<const Cut> cuts);

// {λ^{-1}(C)}, split along components of gY, with empty and full sides removed.
Cutset pullback_cutset(std::span<const Vertex> collapse, std::span<const Cut> cuts, const Graph& gY);

// {C ∩ ω : ω an h-component}, keeping only nonempty proper intersections; boundaries in h.
Cutset restrict_cutset(std::span<const Cut> cuts, const Graph& h);

// For every oriented tree edge t = (a, b): the side reachable from a without crossing t,
// whose outgoing edge boundary is exactly {t}. Throws CutError when T is not acyclic,
// T and H do not partition gp's edges, or t lies on a cycle of gp.
std::map<Edge, Cut> tree_edge_cuts(const Graph& gp, const EdgeList& tree, const EdgeList& remainder);

}  // namespace quasitree
