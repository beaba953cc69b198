#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "quasitree/cuts.hpp"
#include "quasitree/errors.hpp"

namespace quasitree {

namespace {

// Enumerates cuts by their inner boundary D = ∂iv C. With D fixed, the components of
// (component ∖ D) each lie entirely on one side, so a cut is D plus the components not
// chosen for the outer side U, and ∂ov C is the union of the attachments N(D) ∩ K over K ∈ U.
class Enumerator {
 public:
  Enumerator(const Graph& g, int k, BoundaryFilter filter, EnumerationCaps caps)
      : g_(g), k_(k), filter_(filter), caps_(caps), dist_(g), in_d_(g.vertex_count(), 0),
        label_(g.vertex_count(), -1) {}

  Cutset run() {
    const CutBuilder builder(g_);
    const auto& comps = builder.components();
    for (std::size_t cid = 0; cid < comps.count(); ++cid) {
      const auto& members = comps.members[cid];
      if (members.size() < 2) continue;
      for (Vertex anchor : members) enumerate_anchor(anchor, members);
    }
    Cutset out;
    out.reserve(found_.size());
    for (const auto& side : found_) out.push_back(builder.make(side));
    return canonical_cutset(std::move(out));
  }

 private:
  void enumerate_anchor(Vertex anchor, const std::vector<Vertex>& component) {
    const auto& row = dist_.row(anchor);
    std::size_t ball_size = 0;
    std::vector<Vertex> candidates;
    for (Vertex v : component) {
      const int d = row[static_cast<std::size_t>(v)];
      if (d <= k_) {
        ++ball_size;
        if (v > anchor) candidates.push_back(v);
      }
    }
    if (ball_size > caps_.max_ball) {
      throw CapExceeded("max_ball", anchor,
                        "ball of radius " + std::to_string(k_) + " around vertex " + std::to_string(anchor) + " has " +
                            std::to_string(ball_size) + " vertices (cap " + std::to_string(caps_.max_ball) + ")");
    }
    std::vector<Vertex> boundary{anchor};
    extend_boundary(anchor, candidates, 0, boundary, component);
  }

  // Grows D through candidates pairwise within distance k of everything already chosen.
  void extend_boundary(Vertex anchor, const std::vector<Vertex>& candidates, std::size_t from,
                       std::vector<Vertex>& boundary, const std::vector<Vertex>& component) {
    process(anchor, boundary, component);
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Vertex v = candidates[i];
      const auto& row = dist_.row(v);
      const bool close = std::all_of(boundary.begin(), boundary.end(),
                                     [&](Vertex b) { return row[static_cast<std::size_t>(b)] <= k_; });
      if (!close) continue;
      boundary.push_back(v);
      extend_boundary(anchor, candidates, i + 1, boundary, component);
      boundary.pop_back();
    }
  }

  void process(Vertex anchor, const std::vector<Vertex>& boundary, const std::vector<Vertex>& component) {
    for (Vertex d : boundary) in_d_[static_cast<std::size_t>(d)] = 1;
    struct Reset {
      std::vector<char>& flags;
      const std::vector<Vertex>& vs;
      ~Reset() {
        for (Vertex v : vs) flags[static_cast<std::size_t>(v)] = 0;
      }
    } reset{in_d_, boundary};

    for (Vertex d : boundary) {
      const auto nbrs = g_.neighbors(d);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex y) { return !in_d_[static_cast<std::size_t>(y)]; })) return;
    }

    // Components of (component ∖ D).
    for (Vertex v : component) label_[static_cast<std::size_t>(v)] = -1;
    std::vector<std::vector<Vertex>> parts;
    std::vector<Vertex> stack;
    for (Vertex s : component) {
      if (in_d_[static_cast<std::size_t>(s)] || label_[static_cast<std::size_t>(s)] != -1) continue;
      const int id = static_cast<int>(parts.size());
      auto& part = parts.emplace_back();
      label_[static_cast<std::size_t>(s)] = id;
      stack.assign(1, s);
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        part.push_back(x);
        for (Vertex y : g_.neighbors(x)) {
          if (!in_d_[static_cast<std::size_t>(y)] && label_[static_cast<std::size_t>(y)] == -1) {
            label_[static_cast<std::size_t>(y)] = id;
            stack.push_back(y);
          }
        }
      }
    }

    // Attachments N(D) ∩ K per component.
    std::vector<std::vector<Vertex>> attach(parts.size());
    for (Vertex d : boundary) {
      for (Vertex y : g_.neighbors(d)) {
        if (!in_d_[static_cast<std::size_t>(y)]) attach[static_cast<std::size_t>(label_[static_cast<std::size_t>(y)])].push_back(y);
      }
    }
    for (auto& a : attach) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    // Components allowed on the outer side.
    std::vector<std::size_t> eligible;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (filter_ == BoundaryFilter::inner_only || within_k(boundary, attach[j])) eligible.push_back(j);
    }

    // Every d ∈ D needs a neighbour on the outer side.
    std::vector<std::uint64_t> need;
    need.reserve(boundary.size());
    std::vector<int> position(parts.size(), -1);
    for (std::size_t e = 0; e < eligible.size(); ++e) position[eligible[e]] = static_cast<int>(e);
    for (Vertex d : boundary) {
      std::uint64_t mask = 0;
      bool any = false;
      for (Vertex y : g_.neighbors(d)) {
        if (in_d_[static_cast<std::size_t>(y)]) continue;
        const int p = position[static_cast<std::size_t>(label_[static_cast<std::size_t>(y)])];
        if (p >= 0) {
          any = true;
          if (p < 64) mask |= std::uint64_t{1} << p;
        }
      }
      if (!any) return;
      need.push_back(mask);
    }

    if (eligible.size() > caps_.max_components || eligible.size() > 63) {
      throw CapExceeded("max_components", anchor,
                        "boundary anchored at vertex " + std::to_string(anchor) + " leaves " +
                            std::to_string(eligible.size()) + " free components (cap " +
                            std::to_string(caps_.max_components) + ")");
    }

    const std::size_t e = eligible.size();
    std::vector<std::uint64_t> compatible(e, 0);
    for (std::size_t a = 0; a < e; ++a) {
      for (std::size_t b = 0; b < e; ++b) {
        if (a == b || filter_ == BoundaryFilter::inner_only || within_k(attach[eligible[a]], attach[eligible[b]])) {
          compatible[a] |= std::uint64_t{1} << b;
        }
      }
    }

    const std::uint64_t limit = std::uint64_t{1} << e;
    for (std::uint64_t outer = 1; outer < limit; ++outer) {
      bool ok = true;
      for (std::size_t a = 0; a < e && ok; ++a) {
        if ((outer >> a & 1U) && (outer & ~compatible[a]) != 0) ok = false;
      }
      for (std::size_t i = 0; i < need.size() && ok; ++i) {
        if ((need[i] & outer) == 0) ok = false;
      }
      if (!ok) continue;

      std::vector<char> outside(parts.size(), 0);
      for (std::size_t a = 0; a < e; ++a) {
        if (outer >> a & 1U) outside[eligible[a]] = 1;
      }
      std::vector<Vertex> side;
      std::vector<Vertex> rest;
      for (Vertex v : component) {
        const bool out = !in_d_[static_cast<std::size_t>(v)] && outside[static_cast<std::size_t>(label_[static_cast<std::size_t>(v)])];
        (out ? rest : side).push_back(v);
      }
      record(anchor, std::move(side));
      if (filter_ == BoundaryFilter::inner_only) record(anchor, std::move(rest));
    }
  }

  bool within_k(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a) {
      const auto& row = dist_.row(x);
      for (Vertex y : b) {
        if (row[static_cast<std::size_t>(y)] > k_) return false;
      }
    }
    return within_self(b);
  }

  bool within_self(const std::vector<Vertex>& a) { return dist_.diameter_at_most(a, k_); }

  void record(Vertex anchor, std::vector<Vertex> side) {
    found_.insert(std::move(side));
    if (found_.size() > caps_.max_cuts) {
      throw CapExceeded("max_cuts", anchor,
                        "more than " + std::to_string(caps_.max_cuts) + " cuts (reached at anchor " +
                            std::to_string(anchor) + ")");
    }
  }

  const Graph& g_;
  int k_;
  BoundaryFilter filter_;
  EnumerationCaps caps_;
  DistanceCache dist_;
  std::vector<char> in_d_;
  std::vector<int> label_;
  std::set<std::vector<Vertex>> found_;
};

}  // namespace

Cutset enumerate_cuts(const Graph& g, int k, BoundaryFilter filter, EnumerationCaps caps) {
  if (k < 0) throw CutError("enumerate_cuts: k must be non-negative");
  return Enumerator(g, k, filter, caps).run();
}

}  // namespace quasitree
