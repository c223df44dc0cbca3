#pragma once

#include <map>

#include "gfgmin/core.hpp"
#include "gfgmin/nicer.hpp"
#include "gfgmin/oracle.hpp"
#include "gfgmin/safe_structure.hpp"

namespace gfgmin {

/// Memoized language and safe-language relations between the states of one
/// automaton. subsafe and strong are derived views.
struct StateRelations {
  std::vector<std::vector<bool>> equiv;    // L(a^q) == L(a^s)
  std::vector<std::vector<bool>> safe_le;  // Lsafe(a^q) subseteq Lsafe(a^s)

  bool subsafe(StateId q, StateId s) const {
    return equiv[static_cast<size_t>(q)][static_cast<size_t>(s)] &&
           safe_le[static_cast<size_t>(q)][static_cast<size_t>(s)];
  }
  bool strong(StateId q, StateId s) const { return subsafe(q, s) && subsafe(s, q); }
};

inline StateRelations compute_relations(const TNCW& a) {
  if (!is_total(a))
    throw std::invalid_argument("compute_relations requires a total automaton");
  if (!is_safe_deterministic(a))
    throw std::invalid_argument("compute_relations requires a safe-deterministic automaton");
  size_t n = static_cast<size_t>(a.num_states());
  StateRelations r;
  auto contains = lang_containment_matrix(a);
  r.equiv.assign(n, std::vector<bool>(n, false));
  for (size_t q = 0; q < n; ++q)
    for (size_t s = 0; s < n; ++s)
      r.equiv[q][s] = contains[q][s] && contains[s][q];
  r.safe_le = safe_le_matrix(a);
  return r;
}

/// The subsafe relation lifted to safe components: H(S, S') iff some q in S
/// and q' in S' have q subsafe-equivalent to q'. Transitive on nice automata;
/// verified after construction.
struct HRelation {
  std::vector<std::vector<bool>> rel;
};

inline HRelation compute_H(const TNCW& a, const SafeDecomposition& d, const StateRelations& r) {
  (void)a;
  size_t nc = static_cast<size_t>(d.num_components());
  HRelation h;
  h.rel.assign(nc, std::vector<bool>(nc, false));
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j) {
      for (StateId q : d.components[i]) {
        for (StateId s : d.components[j])
          if (r.subsafe(q, s)) {
            h.rel[i][j] = true;
            break;
          }
        if (h.rel[i][j]) break;
      }
    }
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j)
      for (size_t k = 0; k < nc; ++k)
        if (h.rel[i][j] && h.rel[j][k] && !h.rel[i][k])
          throw std::logic_error("H relation is not transitive; input is not nice");
  return h;
}

/// A frontier: one representative component per ergodic SCC of <components, H>.
/// Every component H-reaches a member, members are pairwise H-incomparable,
/// and every frontier has this size (the number of ergodic SCCs).
inline std::vector<int> choose_frontier(const HRelation& h, const SafeDecomposition& d) {
  std::vector<int> frontier = ergodic_components(d, h.rel);
  for (int c1 : frontier)
    for (int c2 : frontier)
      if (c1 != c2 && h.rel[static_cast<size_t>(c1)][static_cast<size_t>(c2)])
        throw std::logic_error("frontier members are H-comparable");
  return frontier;
}

/// Safe centralization: restricts the automaton to the frontier components,
/// keeps their non-alpha transitions, and redirects each alpha-successor to
/// every frontier state language-equivalent to some original alpha-successor.
/// The initial state becomes the smallest frontier state the original initial
/// state is subsafe-equivalent to (itself when it survives). The result is
/// total, alpha-homogeneous, nice, safe-centralized, and equivalent.
inline TNCW build_centralized(const TNCW& a, const std::vector<int>& frontier, const SafeDecomposition& d,
                              const StateRelations& r) {
  std::vector<StateId> kept;
  for (int c : frontier)
    kept.insert(kept.end(), d.components[static_cast<size_t>(c)].begin(),
                d.components[static_cast<size_t>(c)].end());
  std::sort(kept.begin(), kept.end());
  std::vector<StateId> renum(static_cast<size_t>(a.num_states()), -1);
  for (size_t i = 0; i < kept.size(); ++i)
    renum[static_cast<size_t>(kept[i])] = static_cast<StateId>(i);

  StateId initial = -1;
  if (renum[static_cast<size_t>(a.initial())] >= 0) {
    initial = renum[static_cast<size_t>(a.initial())];
  } else {
    for (StateId q : kept)
      if (r.subsafe(a.initial(), q)) {
        initial = renum[static_cast<size_t>(q)];
        break;
      }
    if (initial < 0)
      throw std::logic_error("no frontier state covers the initial state");
  }

  std::vector<Transition> ts;
  for (StateId q : kept) {
    StateId qn = renum[static_cast<size_t>(q)];
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      bool has_safe = false;
      for (const auto& t : a.out(q, s))
        if (!t.in_alpha) {
          if (renum[static_cast<size_t>(t.dst)] < 0)
            throw std::logic_error("non-alpha transition leaves the frontier; input is not normal");
          ts.push_back({qn, s, renum[static_cast<size_t>(t.dst)], false});
          has_safe = true;
        }
      if (has_safe)
        continue;
      bool any = false;
      for (StateId cand : kept) {
        bool hit = false;
        for (const auto& t : a.out(q, s))
          if (t.in_alpha && r.equiv[static_cast<size_t>(t.dst)][static_cast<size_t>(cand)]) {
            hit = true;
            break;
          }
        if (hit) {
          ts.push_back({qn, s, renum[static_cast<size_t>(cand)], true});
          any = true;
        }
      }
      if (!any)
        throw std::logic_error("no redirect target for an alpha-transition; input is not nice");
    }
  }
  return TNCW(a.alphabet(), static_cast<int>(kept.size()), initial, std::move(ts));
}

inline TNCW build_centralized(const TNCW& a, const std::vector<int>& frontier) {
  return build_centralized(a, frontier, safe_components(a), compute_relations(a));
}

/// Merges strongly-equivalent states. Requires an alpha-homogeneous input so
/// that the lifted acceptance marks are well defined. Class ids follow the
/// smallest member state id.
inline TNCW quotient(const TNCW& b, const StateRelations& r) {
  if (!is_alpha_homogeneous(b))
    throw std::invalid_argument("quotient requires an alpha-homogeneous automaton");
  size_t n = static_cast<size_t>(b.num_states());
  std::vector<int> class_of(n, -1);
  int classes = 0;
  for (size_t q = 0; q < n; ++q) {
    if (class_of[q] >= 0) continue;
    class_of[q] = classes;
    for (size_t s = q + 1; s < n; ++s)
      if (class_of[s] < 0 && r.strong(static_cast<StateId>(q), static_cast<StateId>(s)))
        class_of[s] = classes;
    ++classes;
  }

  std::map<std::tuple<int, SymbolId, int>, bool> lifted;
  for (const auto& t : b.transitions()) {
    auto key = std::make_tuple(class_of[static_cast<size_t>(t.src)], t.symbol, class_of[static_cast<size_t>(t.dst)]);
    auto [it, fresh] = lifted.try_emplace(key, t.in_alpha);
    if (!fresh && it->second != t.in_alpha)
      throw std::logic_error("quotient acceptance is ill-defined; input is not alpha-homogeneous per class");
  }
  std::vector<Transition> ts;
  for (const auto& [key, in_alpha] : lifted)
    ts.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), in_alpha});
  return TNCW(b.alphabet(), classes, class_of[static_cast<size_t>(b.initial())], std::move(ts));
}

inline TNCW quotient(const TNCW& b) { return quotient(b, compute_relations(b)); }

struct MinimizeOptions {
  bool determinize = false;  // forwarded to make_nice
};

/// Full minimization pipeline: make_nice, safe-centralize on a frontier, then
/// quotient by strong equivalence. The result is a minimal GFG-tNCW for the
/// input's language; it is also nice, safe-centralized, safe-minimal,
/// alpha-homogeneous, and alpha-maximal up to homogeneity.
inline TNCW minimize(const TNCW& a, const MinimizeOptions& opts = {}) {
  TNCW nice = make_nice(a, {opts.determinize});
  SafeDecomposition d = safe_components(nice);
  StateRelations r = compute_relations(nice);
  HRelation h = compute_H(nice, d, r);
  std::vector<int> frontier = choose_frontier(h, d);
  TNCW centralized = build_centralized(nice, frontier, d, r);
  return quotient(centralized, compute_relations(centralized));
}

}  // namespace gfgmin
