#include <map>
#include <random>
#include <string>

#include "quasitree/errors.hpp"
#include "quasitree/io.hpp"

namespace quasitree {

FamilySpec parse_family(const std::string& text, std::uint64_t seed) {
  FamilySpec spec;
  spec.seed = seed;
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw ParseError("family spec '" + text + "': expected name:params");
  spec.name = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (true) {
    const auto x = rest.find('x', pos);
    const std::string part = rest.substr(pos, x == std::string::npos ? std::string::npos : x - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9) {
      throw ParseError("family spec '" + text + "': bad parameter '" + part + "'");
    }
    spec.params.push_back(std::stoi(part));
    if (x == std::string::npos) break;
    pos = x + 1;
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = spec.name + ":";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(spec.params[i]);
  }
  return out;
}

std::vector<int> random_binary_tree_parents(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> parent(static_cast<std::size_t>(std::max(m, 0)), -1);
  std::vector<int> children(parent.size(), 0);
  std::vector<int> open;
  for (int i = 1; i < m; ++i) {
    open.clear();
    for (int j = 0; j < i; ++j) {
      if (children[static_cast<std::size_t>(j)] < 2) open.push_back(j);
    }
    const int p = open[static_cast<std::size_t>(rng() % open.size())];
    parent[static_cast<std::size_t>(i)] = p;
    ++children[static_cast<std::size_t>(p)];
  }
  return parent;
}

namespace {

void need(const FamilySpec& spec, std::size_t count, int minimum) {
  if (spec.params.size() != count) {
    throw GraphError("family " + spec.name + ": expected " + std::to_string(count) + " parameter(s)");
  }
  for (int p : spec.params) {
    if (p < minimum) throw GraphError("family " + spec.name + ": parameter below " + std::to_string(minimum));
  }
}

Graph grid(int rows, int cols) {
  EdgeList e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(rows * cols), e);
}

// BFS numbering; level by level, children in order.
EdgeList balanced_tree_edges(int branching, int depth, int& count) {
  EdgeList e;
  count = 1;
  int level_start = 0;
  int level_size = 1;
  for (int d = 0; d < depth; ++d) {
    for (int i = 0; i < level_size; ++i) {
      for (int b = 0; b < branching; ++b) e.emplace_back(level_start + i, count++);
    }
    level_start += level_size;
    level_size *= branching;
  }
  return e;
}

// Cayley graph of <a | a^2> * <b | b^3> with generators a, b; reduced words over a, b, B = b^-1.
Graph free_product_ball(int radius) {
  std::vector<std::string> words{""};
  std::map<std::string, int> id{{"", 0}};
  auto times_a = [](const std::string& w) { return !w.empty() && w.back() == 'a' ? w.substr(0, w.size() - 1) : w + "a"; };
  auto times_b = [](const std::string& w) {
    if (!w.empty() && w.back() == 'b') return w.substr(0, w.size() - 1) + "B";
    if (!w.empty() && w.back() == 'B') return w.substr(0, w.size() - 1);
    return w + "b";
  };
  auto times_B = [](const std::string& w) {
    if (!w.empty() && w.back() == 'B') return w.substr(0, w.size() - 1) + "b";
    if (!w.empty() && w.back() == 'b') return w.substr(0, w.size() - 1);
    return w + "B";
  };
  std::size_t head = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t end = words.size();
    for (; head < end; ++head) {
      const std::string w = words[head];
      for (const std::string& next : {times_a(w), times_b(w), times_B(w)}) {
        if (id.emplace(next, static_cast<int>(words.size())).second) words.push_back(next);
      }
    }
  }
  EdgeList e;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const std::string& next : {times_a(words[i]), times_b(words[i])}) {
      auto it = id.find(next);
      if (it != id.end() && it->second != static_cast<int>(i)) e.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return Graph::from_edges(words.size(), e);
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  if (spec.name == "path") {
    need(spec, 1, 1);
    EdgeList e;
    for (int i = 0; i + 1 < p[0]; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(static_cast<std::size_t>(p[0]), e);
  }
  if (spec.name == "cycle") {
    need(spec, 1, 3);
    EdgeList e;
    for (int i = 0; i < p[0]; ++i) e.emplace_back(i, (i + 1) % p[0]);
    return Graph::from_edges(static_cast<std::size_t>(p[0]), e);
  }
  if (spec.name == "grid") {
    need(spec, 2, 1);
    return grid(p[0], p[1]);
  }
  if (spec.name == "ladder") {
    if (p.size() == 1) return generate({"ladder", {2, p[0]}, spec.seed});
    need(spec, 2, 1);
    if (p[0] != 2) throw GraphError("family ladder: expected 2xN");
    return grid(2, p[1]);
  }
  if (spec.name == "complete") {
    need(spec, 1, 1);
    EdgeList e;
    for (int i = 0; i < p[0]; ++i) {
      for (int j = i + 1; j < p[0]; ++j) e.emplace_back(i, j);
    }
    return Graph::from_edges(static_cast<std::size_t>(p[0]), e);
  }
  if (spec.name == "balanced_tree") {
    need(spec, 2, 0);
    if (p[0] < 1) throw GraphError("family balanced_tree: branching must be positive");
    int count = 0;
    const auto e = balanced_tree_edges(p[0], p[1], count);
    return Graph::from_edges(static_cast<std::size_t>(count), e);
  }
  if (spec.name == "subdivided_tree") {
    need(spec, 3, 0);
    if (p[0] < 1) throw GraphError("family subdivided_tree: branching must be positive");
    int count = 0;
    const auto tree = balanced_tree_edges(p[0], p[1], count);
    EdgeList e;
    for (const auto& [u, v] : tree) {
      int prev = u;
      for (int s = 0; s < p[2]; ++s) {
        e.emplace_back(prev, count);
        prev = count++;
      }
      e.emplace_back(prev, v);
    }
    return Graph::from_edges(static_cast<std::size_t>(count), e);
  }
  if (spec.name == "tree_of_triangles") {
    need(spec, 1, 1);
    const int m = p[0];
    const auto parent = random_binary_tree_parents(m, spec.seed);
    std::vector<int> children(static_cast<std::size_t>(m), 0);
    EdgeList e;
    for (int i = 0; i < m; ++i) {
      e.emplace_back(3 * i, 3 * i + 1);
      e.emplace_back(3 * i + 1, 3 * i + 2);
      e.emplace_back(3 * i, 3 * i + 2);
      if (i > 0) {
        const int par = parent[static_cast<std::size_t>(i)];
        const int j = children[static_cast<std::size_t>(par)]++;
        e.emplace_back(3 * par + 2 - j, 3 * i);
      }
    }
    return Graph::from_edges(static_cast<std::size_t>(3 * m), e);
  }
  if (spec.name == "tree_with_chords") {
    need(spec, 1, 1);
    const int m = p[0];
    const auto parent = random_binary_tree_parents(m, spec.seed);
    std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
    EdgeList e;
    for (int i = 1; i < m; ++i) {
      const int par = parent[static_cast<std::size_t>(i)];
      e.emplace_back(par, i);
      const int grand = parent[static_cast<std::size_t>(par)];
      if (rng() % 2 == 1 && grand >= 0) e.emplace_back(grand, i);
    }
    return Graph::from_edges(static_cast<std::size_t>(m), e);
  }
  if (spec.name == "free_product_ball") {
    need(spec, 1, 0);
    return free_product_ball(p[0]);
  }
  throw GraphError("unknown family '" + spec.name + "'");
}

}  // namespace quasitree
