#pragma once

#include <functional>
#include <vector>

#include "gfgmin/core.hpp"

namespace gfgmin {
namespace detail {

/// Tarjan over an adjacency list, iterative so that product graphs with a few
/// hundred thousand nodes stay within the stack. Component ids are assigned
/// in topological order: every cross-component edge goes from a lower id to a
/// higher id, so ergodic (sink) components get the largest ids.
inline int tarjan_scc(int n, const std::vector<std::vector<int>>& adj, std::vector<int>& comp_of) {
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::pair<int, size_t>> frames;  // (node, next child index)
  comp_of.assign(static_cast<size_t>(n), -1);
  int next_index = 0, count = 0;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<size_t>(root)] >= 0)
      continue;
    frames.emplace_back(root, 0);
    index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = true;
    while (!frames.empty()) {
      int v = frames.back().first;
      size_t ci = frames.back().second;
      if (ci < adj[static_cast<size_t>(v)].size()) {
        ++frames.back().second;
        int w = adj[static_cast<size_t>(v)][ci];
        if (index[static_cast<size_t>(w)] < 0) {
          index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[static_cast<size_t>(w)]) {
          low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
        }
        continue;
      }
      if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = false;
          comp_of[static_cast<size_t>(w)] = count;
          if (w == v) break;
        }
        ++count;
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[static_cast<size_t>(parent)] = std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(v)]);
      }
    }
  }
  // flip so that edges go from lower to higher component id
  for (auto& c : comp_of)
    c = count - 1 - c;
  return count;
}

}  // namespace detail

/// Partition of the state set into safe components (SCCs of the automaton
/// restricted to non-alpha transitions) plus the component DAG.
struct SafeDecomposition {
  std::vector<int> component_of;              // state -> component id
  std::vector<std::vector<StateId>> components;  // component id -> sorted states
  std::vector<std::pair<int, int>> dag_edges;    // cross-component non-alpha edges (deduplicated)

  int num_components() const { return static_cast<int>(components.size()); }
};

inline SafeDecomposition safe_components(const TNCW& a) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(a.num_states()));
  for (const auto& t : a.transitions())
    if (!t.in_alpha)
      adj[static_cast<size_t>(t.src)].push_back(t.dst);
  SafeDecomposition d;
  int count = detail::tarjan_scc(a.num_states(), adj, d.component_of);
  d.components.assign(static_cast<size_t>(count), {});
  for (StateId q = 0; q < a.num_states(); ++q)
    d.components[static_cast<size_t>(d.component_of[static_cast<size_t>(q)])].push_back(q);
  for (const auto& t : a.transitions()) {
    if (t.in_alpha) continue;
    int cs = d.component_of[static_cast<size_t>(t.src)];
    int cd = d.component_of[static_cast<size_t>(t.dst)];
    if (cs != cd)
      d.dag_edges.emplace_back(cs, cd);
  }
  std::sort(d.dag_edges.begin(), d.dag_edges.end());
  d.dag_edges.erase(std::unique(d.dag_edges.begin(), d.dag_edges.end()), d.dag_edges.end());
  return d;
}

/// No non-alpha transition connects two different safe components.
inline bool is_normal(const TNCW& a) {
  return safe_components(a).dag_edges.empty();
}

/// Reclassifies every non-alpha transition that crosses safe components as an
/// alpha-transition, recomputing components until a fixpoint. Accepting runs
/// traverse such transitions only finitely often, so the language is kept.
inline TNCW normalize(const TNCW& a) {
  TNCW cur = a;
  while (true) {
    SafeDecomposition d = safe_components(cur);
    if (d.dag_edges.empty())
      return cur;
    std::vector<Transition> ts = cur.transitions();
    for (auto& t : ts)
      if (!t.in_alpha && d.component_of[static_cast<size_t>(t.src)] != d.component_of[static_cast<size_t>(t.dst)])
        t.in_alpha = true;
    cur = TNCW(cur.alphabet(), cur.num_states(), cur.initial(), std::move(ts));
  }
}

inline StructuralReport structural_report(const TNCW& a) {
  StructuralReport r;
  r.deterministic = is_deterministic(a);
  r.safe_deterministic = is_safe_deterministic(a);
  r.alpha_homogeneous = is_alpha_homogeneous(a);
  r.normal = is_normal(a);
  r.total = is_total(a);
  r.all_reachable = all_states_reachable(a);
  return r;
}

/// One representative component per ergodic SCC of the directed graph whose
/// vertices are safe components and whose edges are given by `h` (an
/// |components| x |components| relation matrix). The representative of an
/// ergodic SCC is its component containing the smallest state id.
inline std::vector<int> ergodic_components(const SafeDecomposition& d, const std::vector<std::vector<bool>>& h) {
  int n = d.num_components();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && h[static_cast<size_t>(i)][static_cast<size_t>(j)])
        adj[static_cast<size_t>(i)].push_back(j);
  std::vector<int> scc_of;
  int scc_count = detail::tarjan_scc(n, adj, scc_of);

  std::vector<bool> has_out(static_cast<size_t>(scc_count), false);
  for (int i = 0; i < n; ++i)
    for (int j : adj[static_cast<size_t>(i)])
      if (scc_of[static_cast<size_t>(i)] != scc_of[static_cast<size_t>(j)])
        has_out[static_cast<size_t>(scc_of[static_cast<size_t>(i)])] = true;

  // smallest state id per component is components[c][0] (sorted)
  std::vector<int> rep(static_cast<size_t>(scc_count), -1);
  for (int c = 0; c < n; ++c) {
    int s = scc_of[static_cast<size_t>(c)];
    if (has_out[static_cast<size_t>(s)]) continue;
    if (rep[static_cast<size_t>(s)] < 0 ||
        d.components[static_cast<size_t>(c)][0] < d.components[static_cast<size_t>(rep[static_cast<size_t>(s)])][0])
      rep[static_cast<size_t>(s)] = c;
  }
  std::vector<int> result;
  for (int s = 0; s < scc_count; ++s)
    if (rep[static_cast<size_t>(s)] >= 0)
      result.push_back(rep[static_cast<size_t>(s)]);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace gfgmin
