#pragma once

#include <algorithm>
#include <vector>

#include "hyperarena/sets.hpp"

namespace hyperarena {

// Simple digraph on at most 64 vertices; out-neighbourhoods as bitsets.
struct SimpleDigraph {
  int n = 0;
  std::vector<VertexSet> out;

  explicit SimpleDigraph(int vertex_count = 0) : n(vertex_count), out(static_cast<std::size_t>(vertex_count)) {}

  bool has_arc(VertexId u, VertexId v) const { return out[u.index].contains(v); }
  void add_arc(VertexId u, VertexId v) { out[u.index].insert(v); }

  std::size_t arc_count() const {
    std::size_t c = 0;
    for (auto s : out) c += static_cast<std::size_t>(s.size());
    return c;
  }
};

// Tarjan's algorithm. Returns a component index per vertex; components are
// numbered in reverse topological order of the condensation.
inline std::vector<int> strong_components(const SimpleDigraph& g) {
  const auto n = static_cast<std::size_t>(g.n);
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  int next_index = 0;
  int next_comp = 0;

  auto visit = [&](auto&& self, std::uint32_t v) -> void {
    index[v] = low[v] = next_index++;
    stack.push_back(v);
    on_stack[v] = true;
    g.out[v].for_each([&](VertexId w) {
      if (index[w.index] < 0) {
        self(self, w.index);
        low[v] = std::min(low[v], low[w.index]);
      } else if (on_stack[w.index]) {
        low[v] = std::min(low[v], index[w.index]);
      }
    });
    if (low[v] == index[v]) {
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = next_comp;
      } while (w != v);
      ++next_comp;
    }
  };

  for (std::uint32_t v = 0; v < n; ++v)
    if (index[v] < 0) visit(visit, v);
  return comp;
}

inline bool is_strongly_connected(const SimpleDigraph& g) {
  if (g.n <= 1) return true;
  auto comp = strong_components(g);
  return std::all_of(comp.begin(), comp.end(), [&](int c) { return c == comp.front(); });
}

}  // namespace hyperarena
