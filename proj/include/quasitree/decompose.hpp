#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasitree/cuts.hpp"
#include "quasitree/extended.hpp"
#include "quasitree/graph.hpp"
#include "quasitree/metric.hpp"

namespace quasitree {

// g with every edge replaced by a path long enough that each new edge is separated by
// at most one lifted cut. Original vertices keep their ids; new ones are appended.
struct SubdivisionResult {
  Graph graph;
  Treeset lifted;
  std::vector<Vertex> gamma;   // X -> Y
  std::vector<Vertex> lambda;  // Y -> X, nearer endpoint, ties to the smaller id
  std::map<Edge, std::size_t> chain_lengths;  // separating cuts per edge x0 < x1, when nonzero
  std::vector<std::size_t> lift;              // treeset index -> lifted index
  std::size_t max_chain = 0;
};

// Throws CertificateError if a chain is not totally ordered or a postcondition fails.
SubdivisionResult subdivide(const Graph& g, const Treeset& ts);

struct SplitCertificate {
  bool tree_acyclic = true;
  bool free_intersection = true;
  bool restriction_empty = true;
  bool lipschitz_within_bound = true;

  bool ok() const { return tree_acyclic && free_intersection && restriction_empty && lipschitz_within_bound; }
};

struct Decomposition {
  Graph host;          // T ∪ H
  EdgeList tree;       // T
  EdgeList remainder;  // H
  int r = 0;           // max diameter of an inner boundary
  Extended measured_lipschitz = Extended(1);
  SplitCertificate certificate;
};

// Lipschitz bound checked by split: 3 max(r, 1).
std::int64_t split_lipschitz_bound(int r);

// Throws CutError if an edge is separated by more than one complement pair, and
// CertificateError on a failed postcondition when strict.
Decomposition split(const Graph& g1, const Treeset& ts, bool strict = true);

// The bipartite class multigraph (one node per E_T and per E_H class, one edge per vertex) is a forest.
bool free_intersection_check(std::size_t vertex_count, const EdgeList& tree, const EdgeList& remainder);

struct ModulusEntry {
  int k = 0;
  BoundaryFilter filter = BoundaryFilter::inner_and_outer;
  int r = 0;
  std::optional<Cut> witness;
  std::size_t cut_count = 0;
};

// max over enumerated cuts of min(diam C, diam C̄) in the ambient metric; 0 without cuts.
ModulusEntry one_endedness_modulus(const Graph& g, int k, BoundaryFilter filter = BoundaryFilter::inner_and_outer,
                                   EnumerationCaps caps = {});

struct PipelineOptions {
  int k = 1;
  BoundaryFilter filter = BoundaryFilter::inner_and_outer;
  EnumerationCaps caps;
  bool strict = true;            // throw on the first failed certificate
  bool reenumerate = false;      // debug: enumerate cuts of the current H graph at every stage
  std::size_t max_stages = 32;   // stage limit for the re-enumeration mode
  bool measure_qi = true;
  std::size_t qi_vertex_limit = 4000;
  QiGrid grid;
};

struct StageCertificate {
  SplitCertificate split;
  Extended measured_lipschitz = Extended(1);
  int r = 0;
  bool gamma_injective = true;
  std::optional<QiConstants> inclusion_qi;  // X_{i-1} -> X_i
  std::string qi_error;                     // set when the constants could not be found
  bool qi_measured = false;

  bool ok() const { return split.ok() && gamma_injective && qi_error.empty(); }
};

struct Stage {
  std::size_t treeset_size = 0;
  SubdivisionResult subdivision;
  Decomposition decomposition;
  StageCertificate certificate;
};

struct PipelineResult {
  std::size_t input_vertices = 0;
  std::size_t cut_count = 0;
  std::size_t treeset_count = 0;
  std::vector<Stage> stages;
  Graph final_graph;  // accumulated T ∪ final H
  EdgeList accumulated_tree;
  EdgeList final_remainder;
  std::vector<Vertex> gamma;   // X -> Y_final
  std::vector<Vertex> lambda;  // Y_final -> X
  std::optional<QiConstants> composite_qi;
  std::string composite_qi_error;
  bool converged = true;  // false when re-enumeration hit max_stages

  bool ok() const;
};

PipelineResult accessibility_pipeline(const Graph& g, const PipelineOptions& options = {});

// BFS spanning tree of every E_H class, rooted at its smallest vertex.
EdgeList spanning_forest_of_classes(const Graph& gY, const EdgeList& remainder);

// Nearest-image collapse along an acyclic Tp, ties to the smallest id; returns the edges of X
// joining adjacent fibers. Throws GraphError if some vertex cannot reach the image and
// CertificateError if a fiber is disconnected or the result has a cycle.
EdgeList contract(const Graph& gY, const EdgeList& tree, std::span<const Vertex> gamma);

// Nearest-image collapse itself, exposed for tests.
std::vector<Vertex> nearest_image_collapse(std::size_t vertex_count, const EdgeList& tree, std::span<const Vertex> gamma);

struct TreeifyResult {
  EdgeList tree;
  Extended lipschitz = Extended(1);
  bool acyclic = true;
  bool spans_components = true;
  bool combined_acyclic = true;
  bool combined_free_intersection = true;
  EdgeList residual_forest;  // spanning forest of the final H classes
  PipelineResult pipeline;

  bool ok() const {
    return acyclic && spans_components && combined_acyclic && combined_free_intersection && lipschitz.is_finite() &&
           pipeline.ok();
  }
};

TreeifyResult treeify(const Graph& g, const PipelineOptions& options = {});

}  // namespace quasitree
