#pragma once

#include <optional>

#include "gfgmin/core.hpp"

namespace gfgmin {

/// A state-to-state bijection witnessing (safe) isomorphism.
struct Bijection {
  std::vector<StateId> forward;
  std::vector<StateId> inverse;
};

namespace detail {

// (symbol, alpha-flag) in/out degree profile; a cheap isomorphism invariant
inline std::vector<int> degree_profile(const TNCW& a, StateId q, bool respect_alpha) {
  std::vector<int> prof;
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    int out_safe = 0, out_alpha = 0;
    for (const auto& t : a.out(q, s))
      (t.in_alpha ? out_alpha : out_safe)++;
    prof.push_back(out_safe);
    if (respect_alpha) prof.push_back(out_alpha);
  }
  std::vector<int> in_safe(static_cast<size_t>(a.num_symbols()), 0);
  std::vector<int> in_alpha(static_cast<size_t>(a.num_symbols()), 0);
  for (const auto& t : a.transitions())
    if (t.dst == q)
      (t.in_alpha ? in_alpha : in_safe)[static_cast<size_t>(t.symbol)]++;
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    prof.push_back(in_safe[static_cast<size_t>(s)]);
    if (respect_alpha) prof.push_back(in_alpha[static_cast<size_t>(s)]);
  }
  return prof;
}

// Backtracking search for a transition-respecting bijection, assigning states
// of `a` in id order and trying candidates in id order, so the first hit is
// the lexicographically smallest bijection. Exponential in the worst case;
// fine at the sizes this library works with.
inline std::optional<Bijection> find_bijection(const TNCW& a, const TNCW& b, bool respect_alpha) {
  if (a.num_states() != b.num_states() || !(a.alphabet() == b.alphabet()))
    return std::nullopt;
  int n = a.num_states();

  std::vector<std::vector<int>> prof_a, prof_b;
  for (StateId q = 0; q < n; ++q) {
    prof_a.push_back(degree_profile(a, q, respect_alpha));
    prof_b.push_back(degree_profile(b, q, respect_alpha));
  }

  std::vector<StateId> fwd(static_cast<size_t>(n), -1), inv(static_cast<size_t>(n), -1);

  auto edge_kind = [&](const TNCW& m, StateId x, SymbolId s, StateId y) -> int {
    const Transition* t = m.find(x, s, y);
    if (t == nullptr) return 0;
    return t->in_alpha ? 2 : 1;
  };
  auto consistent = [&](StateId q, StateId cand) {
    for (StateId p = 0; p <= q; ++p) {
      if (fwd[static_cast<size_t>(p)] < 0 && p != q) continue;
      StateId pm = (p == q) ? cand : fwd[static_cast<size_t>(p)];
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        int k1 = edge_kind(a, q, s, p), m1 = edge_kind(b, cand, s, pm);
        int k2 = edge_kind(a, p, s, q), m2 = edge_kind(b, pm, s, cand);
        if (respect_alpha) {
          if (k1 != m1 || k2 != m2) return false;
        } else {
          if ((k1 == 1) != (m1 == 1) || (k2 == 1) != (m2 == 1)) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(StateId)> search = [&](StateId q) -> bool {
    if (q == n)
      return true;
    for (StateId cand = 0; cand < n; ++cand) {
      if (inv[static_cast<size_t>(cand)] >= 0) continue;
      if (prof_a[static_cast<size_t>(q)] != prof_b[static_cast<size_t>(cand)]) continue;
      if (!consistent(q, cand)) continue;
      fwd[static_cast<size_t>(q)] = cand;
      inv[static_cast<size_t>(cand)] = q;
      if (search(q + 1))
        return true;
      fwd[static_cast<size_t>(q)] = -1;
      inv[static_cast<size_t>(cand)] = -1;
    }
    return false;
  };

  if (!search(0))
    return std::nullopt;
  return Bijection{std::move(fwd), std::move(inv)};
}

}  // namespace detail

/// A bijection inducing a bijection between the non-alpha transitions, if one
/// exists. The lexicographically smallest (by forward map) is returned.
inline std::optional<Bijection> safe_isomorphic(const TNCW& a, const TNCW& b) {
  return detail::find_bijection(a, b, false);
}

/// A bijection respecting both the alpha- and non-alpha transitions.
inline std::optional<Bijection> isomorphic(const TNCW& a, const TNCW& b) {
  return detail::find_bijection(a, b, true);
}

}  // namespace gfgmin
