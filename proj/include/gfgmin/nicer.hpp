#pragma once

#include <optional>

#include "gfgmin/core.hpp"
#include "gfgmin/oracle.hpp"
#include "gfgmin/safe_structure.hpp"

namespace gfgmin {

/// An automaton is nice when all states are reachable and good-for-games and
/// the automaton is normal, safe-deterministic, and semantically
/// deterministic. The GFG flag is the expensive one and is optional.
struct NicenessReport {
  bool reachable = false;
  bool normal = false;
  bool safe_deterministic = false;
  bool semantically_deterministic = false;
  std::optional<bool> all_states_gfg;

  bool nice() const {
    return reachable && normal && safe_deterministic && semantically_deterministic &&
           all_states_gfg.value_or(false);
  }
};

inline bool is_semantically_deterministic(const TNCW& a, const std::vector<std::vector<bool>>& contains) {
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      auto succs = a.out(q, s);
      for (size_t i = 0; i < succs.size(); ++i)
        for (size_t j = i + 1; j < succs.size(); ++j) {
          size_t x = static_cast<size_t>(succs[i].dst), y = static_cast<size_t>(succs[j].dst);
          if (!contains[x][y] || !contains[y][x])
            return false;
        }
    }
  return true;
}

inline bool is_semantically_deterministic(const TNCW& a) {
  if (is_deterministic(a))
    return true;
  return is_semantically_deterministic(a, lang_containment_matrix(a));
}

inline NicenessReport validate_nice(const TNCW& a, bool check_gfg = true) {
  NicenessReport r;
  r.reachable = all_states_reachable(a);
  r.normal = is_normal(a);
  r.safe_deterministic = is_safe_deterministic(a);
  r.semantically_deterministic = is_semantically_deterministic(a);
  if (check_gfg) {
    if (is_deterministic(a)) {
      r.all_states_gfg = true;
    } else {
      bool all = true;
      for (StateId q = 0; q < a.num_states() && all; ++q)
        all = gfg_check(a, q).first;
      r.all_states_gfg = all;
    }
  }
  return r;
}

/// Keeps, per (state, symbol), exactly the covering transitions: those whose
/// target's language contains the language of every sibling target. On an
/// automaton whose states are all GFG, at least one covering transition
/// exists for every (state, symbol), and the result is semantically
/// deterministic.
inline TNCW semantically_determinize(const TNCW& a) {
  if (is_deterministic(a))
    return a;
  auto contains = lang_containment_matrix(a);
  std::vector<Transition> ts;
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      auto succs = a.out(q, s);
      bool kept_one = false;
      for (const auto& t : succs) {
        bool covering = true;
        for (const auto& o : succs)
          if (!contains[static_cast<size_t>(o.dst)][static_cast<size_t>(t.dst)]) {
            covering = false;
            break;
          }
        if (covering) {
          ts.push_back(t);
          kept_one = true;
        }
      }
      if (!kept_one && !succs.empty())
        throw std::logic_error("no covering transition; input states are not all GFG");
    }
  return TNCW(a.alphabet(), a.num_states(), a.initial(), std::move(ts));
}

/// Deletes states that are not good-for-games and restores totality with a
/// rejecting sink when needed. Language is preserved when the automaton
/// itself is GFG, since a witnessing strategy only uses GFG states.
inline TNCW remove_non_gfg_states(const TNCW& a) {
  if (is_deterministic(a))
    return a;  // every state of a deterministic automaton is GFG
  std::vector<bool> keep(static_cast<size_t>(a.num_states()), false);
  bool all = true;
  for (StateId q = 0; q < a.num_states(); ++q) {
    keep[static_cast<size_t>(q)] = gfg_check(a, q).first;
    all = all && keep[static_cast<size_t>(q)];
  }
  if (all)
    return a;
  if (!keep[static_cast<size_t>(a.initial())])
    throw std::invalid_argument("initial state is not GFG");
  std::vector<StateId> renum(static_cast<size_t>(a.num_states()), -1);
  int next = 0;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (keep[static_cast<size_t>(q)])
      renum[static_cast<size_t>(q)] = next++;
  std::vector<Transition> ts;
  for (const auto& t : a.transitions())
    if (renum[static_cast<size_t>(t.src)] >= 0 && renum[static_cast<size_t>(t.dst)] >= 0)
      ts.push_back({renum[static_cast<size_t>(t.src)], t.symbol, renum[static_cast<size_t>(t.dst)], t.in_alpha});
  TNCW pruned(a.alphabet(), next, renum[static_cast<size_t>(a.initial())], std::move(ts));
  return ensure_total(pruned);
}

struct MakeNiceOptions {
  /// Apply breakpoint_determinize first when the input is not
  /// safe-deterministic (or not GFG). The determinized automaton is
  /// deterministic, hence GFG, and language-equivalent.
  bool determinize = false;
};

/// Turns a total automaton into an equivalent nice one:
/// [optional determinize] -> remove_non_gfg_states -> semantically_determinize
/// -> restrict_to_reachable -> normalize. Without the determinize fallback the
/// input must be safe-deterministic and its initial state GFG.
inline TNCW make_nice(const TNCW& a, const MakeNiceOptions& opts = {}) {
  if (!is_total(a))
    throw std::invalid_argument("make_nice requires a total automaton");
  TNCW cur = a;
  if (!is_safe_deterministic(cur)) {
    if (!opts.determinize)
      throw std::invalid_argument("input not safe-deterministic (enable determinization to proceed)");
    cur = breakpoint_determinize(cur);
  }
  if (!gfg_check(cur).first) {
    if (!opts.determinize)
      throw std::invalid_argument("input is not good-for-games (enable determinization to proceed)");
    cur = breakpoint_determinize(cur);
  }
  cur = remove_non_gfg_states(cur);
  cur = semantically_determinize(cur);
  cur = restrict_to_reachable(cur);
  cur = normalize(cur);
  return cur;
}

}  // namespace gfgmin
