#pragma once

#include "gfgmin/core.hpp"
#include "gfgmin/hoa.hpp"
#include "gfgmin/minimizer.hpp"
#include "gfgmin/oracle.hpp"
#include "gfgmin/safe_structure.hpp"

namespace gfgmin {

/// A triple (q, sigma, s) not in Delta is allowed when some existing
/// sigma-transition of q leads to a state language-equivalent to s. Adding
/// allowed triples as alpha-transitions preserves the language and niceness.
inline std::vector<Transition> allowed_transitions(const TNCW& a, const StateRelations& r) {
  std::vector<Transition> out;
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s)
      for (StateId dst = 0; dst < a.num_states(); ++dst) {
        if (a.find(q, s, dst) != nullptr)
          continue;
        for (const auto& t : a.out(q, s))
          if (r.equiv[static_cast<size_t>(t.dst)][static_cast<size_t>(dst)]) {
            out.push_back({q, s, dst, true});
            break;
          }
      }
  return out;
}

inline std::vector<Transition> allowed_transitions(const TNCW& a) {
  return allowed_transitions(a, compute_relations(a));
}

/// Adds every allowed non-transition as an alpha-transition. One pass
/// suffices: saturation creates no new allowed triples.
inline TNCW alpha_maximize(const TNCW& a) {
  std::vector<Transition> ts = a.transitions();
  for (const auto& t : allowed_transitions(a))
    ts.push_back(t);
  return TNCW(a.alphabet(), a.num_states(), a.initial(), std::move(ts));
}

/// Like alpha_maximize, but only on (state, symbol) pairs with no non-alpha
/// transition, so alpha-homogeneity is preserved.
inline TNCW alpha_maximize_homogeneous(const TNCW& a) {
  if (!is_alpha_homogeneous(a))
    throw std::invalid_argument("alpha_maximize_homogeneous requires an alpha-homogeneous automaton");
  std::vector<Transition> ts = a.transitions();
  for (const auto& t : allowed_transitions(a)) {
    bool has_safe = false;
    for (const auto& o : a.out(t.src, t.symbol))
      if (!o.in_alpha) {
        has_safe = true;
        break;
      }
    if (!has_safe)
      ts.push_back(t);
  }
  return TNCW(a.alphabet(), a.num_states(), a.initial(), std::move(ts));
}

inline bool is_alpha_maximal(const TNCW& a) { return allowed_transitions(a).empty(); }

inline bool is_alpha_maximal_up_to_homogeneity(const TNCW& a) {
  if (!is_alpha_homogeneous(a))
    return false;
  for (const auto& t : allowed_transitions(a)) {
    bool has_safe = false;
    for (const auto& o : a.out(t.src, t.symbol))
      if (!o.in_alpha) {
        has_safe = true;
        break;
      }
    if (!has_safe)
      return false;
  }
  return true;
}

namespace detail {

// Deterministic BFS of a component's non-alpha skeleton from a seed. Local
// indices in visit order; the signature records, per visited state and
// symbol, the local target index, -1 for no safe move, -2 for a safe move
// leaving the component.
struct ComponentLabeling {
  std::vector<StateId> order;  // local index -> state
  std::vector<int> signature;
};

inline ComponentLabeling component_bfs(const TNCW& a, const SafeDecomposition& d, StateId seed) {
  int comp = d.component_of[static_cast<size_t>(seed)];
  ComponentLabeling lab;
  std::vector<int> local(static_cast<size_t>(a.num_states()), -1);
  lab.order.push_back(seed);
  local[static_cast<size_t>(seed)] = 0;
  for (size_t head = 0; head < lab.order.size(); ++head) {
    StateId q = lab.order[head];
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      int code = -1;
      for (const auto& t : a.out(q, s)) {
        if (t.in_alpha) continue;
        if (d.component_of[static_cast<size_t>(t.dst)] != comp) {
          code = -2;
          break;
        }
        if (local[static_cast<size_t>(t.dst)] < 0) {
          local[static_cast<size_t>(t.dst)] = static_cast<int>(lab.order.size());
          lab.order.push_back(t.dst);
        }
        code = local[static_cast<size_t>(t.dst)];
        break;  // safe-deterministic: at most one
      }
      lab.signature.push_back(code);
    }
  }
  return lab;
}

}  // namespace detail

/// Deterministic renumbering of a safe-deterministic automaton so that
/// isomorphic automata serialize to identical bytes. Safe components are
/// ordered by (size, smallest safe-skeleton signature); within a component,
/// states are numbered by BFS in symbol order from a smallest-signature seed.
/// Residual ties (safe-skeleton automorphisms) are resolved by taking the
/// candidate relabeling whose serialization is lexicographically smallest.
inline TNCW canonical_relabel(const TNCW& a) {
  if (!is_safe_deterministic(a))
    throw std::invalid_argument("canonical_relabel requires a safe-deterministic automaton");
  SafeDecomposition d = safe_components(a);
  int nc = d.num_components();

  struct CompInfo {
    int comp;
    size_t size;
    std::vector<int> best_sig;
    std::vector<std::vector<StateId>> seed_orders;  // BFS orders of all best-signature seeds
  };
  std::vector<CompInfo> infos;
  for (int c = 0; c < nc; ++c) {
    CompInfo info;
    info.comp = c;
    info.size = d.components[static_cast<size_t>(c)].size();
    for (StateId seed : d.components[static_cast<size_t>(c)]) {
      auto lab = detail::component_bfs(a, d, seed);
      if (info.seed_orders.empty() || lab.signature < info.best_sig) {
        info.best_sig = lab.signature;
        info.seed_orders = {lab.order};
      } else if (lab.signature == info.best_sig) {
        info.seed_orders.push_back(lab.order);
      }
    }
    infos.push_back(std::move(info));
  }
  auto key_less = [](const CompInfo& x, const CompInfo& y) {
    if (x.size != y.size) return x.size < y.size;
    return x.best_sig < y.best_sig;
  };
  std::stable_sort(infos.begin(), infos.end(), key_less);

  // enumerate candidate labelings: permutations of key-tied component groups
  // times the seed choices per component
  std::optional<TNCW> best;
  std::string best_bytes;
  std::vector<size_t> group_start;
  for (size_t i = 0; i < infos.size(); ++i)
    if (i == 0 || key_less(infos[i - 1], infos[i]))
      group_start.push_back(i);
  group_start.push_back(infos.size());

  std::vector<size_t> comp_order(infos.size());
  for (size_t i = 0; i < infos.size(); ++i) comp_order[i] = i;

  std::function<void(size_t)> per_group = [&](size_t g) {
    if (g + 1 >= group_start.size()) {
      // component order fixed; iterate seed choices with an odometer
      std::vector<size_t> pick(infos.size(), 0);
      while (true) {
        std::vector<StateId> perm(static_cast<size_t>(a.num_states()), -1);
        int next = 0;
        for (size_t i = 0; i < comp_order.size(); ++i)
          for (StateId q : infos[comp_order[i]].seed_orders[pick[comp_order[i]]])
            perm[static_cast<size_t>(q)] = next++;
        TNCW cand = relabel_states(a, perm);
        std::string bytes = emit_hoa(cand);
        if (!best || bytes < best_bytes) {
          best = cand;
          best_bytes = bytes;
        }
        size_t i = pick.size();
        bool carried = true;
        while (i > 0 && carried) {
          --i;
          carried = ++pick[i] >= infos[i].seed_orders.size();
          if (carried) pick[i] = 0;
        }
        if (carried) break;
      }
      return;
    }
    size_t lo = group_start[g], hi = group_start[g + 1];
    std::sort(comp_order.begin() + static_cast<long>(lo), comp_order.begin() + static_cast<long>(hi));
    do {
      per_group(g + 1);
    } while (std::next_permutation(comp_order.begin() + static_cast<long>(lo),
                                   comp_order.begin() + static_cast<long>(hi)));
  };
  per_group(0);
  return *best;
}

}  // namespace gfgmin
