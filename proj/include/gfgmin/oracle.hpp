#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "gfgmin/core.hpp"
#include "gfgmin/parity_game.hpp"
#include "gfgmin/safe_structure.hpp"

namespace gfgmin {

/// Ultimately periodic word prefix . period^omega. The test vector for all
/// semantic checks.
struct LassoWord {
  std::vector<SymbolId> prefix;
  std::vector<SymbolId> period;

  LassoWord() = default;
  LassoWord(std::vector<SymbolId> u, std::vector<SymbolId> v) : prefix(std::move(u)), period(std::move(v)) {
    if (period.empty())
      throw std::invalid_argument("lasso period must be non-empty");
  }

  size_t length() const { return prefix.size() + period.size(); }
  SymbolId at(size_t phase) const { return phase < prefix.size() ? prefix[phase] : period[phase - prefix.size()]; }
  size_t next_phase(size_t phase) const { return phase + 1 < length() ? phase + 1 : prefix.size(); }

  std::string str(const Alphabet& sigma) const {
    std::ostringstream out;
    for (SymbolId s : prefix) out << sigma.name(s);
    out << "(";
    for (SymbolId s : period) out << sigma.name(s);
    out << ")^w";
    return out.str();
  }
};

namespace detail {

// Search over (state, lasso-phase) nodes: the word is accepted iff some node
// in the period part, reachable from (from, 0), lies on a cycle of non-alpha
// edges. `safe_only` additionally restricts the reaching path to non-alpha
// edges, which decides membership in the safe language instead.
inline bool lasso_run_exists(const TNCW& a, StateId from, const LassoWord& w, bool safe_only) {
  const size_t len = w.length();
  const size_t nodes = static_cast<size_t>(a.num_states()) * len;
  auto id = [&](StateId q, size_t phase) { return static_cast<size_t>(q) * len + phase; };

  std::vector<bool> reach(nodes, false);
  std::vector<size_t> queue;
  reach[id(from, 0)] = true;
  queue.push_back(id(from, 0));
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t node = queue[head];
    StateId q = static_cast<StateId>(node / len);
    size_t phase = node % len;
    size_t nphase = w.next_phase(phase);
    for (const auto& t : a.out(q, w.at(phase))) {
      if (safe_only && t.in_alpha) continue;
      size_t nid = id(t.dst, nphase);
      if (!reach[nid]) {
        reach[nid] = true;
        queue.push_back(nid);
      }
    }
  }

  // non-alpha subgraph over period nodes only (phases >= |prefix| are closed
  // under next_phase)
  std::vector<std::vector<int>> adj(nodes);
  for (StateId q = 0; q < a.num_states(); ++q)
    for (size_t phase = w.prefix.size(); phase < len; ++phase) {
      size_t nphase = w.next_phase(phase);
      for (const auto& t : a.out(q, w.at(phase)))
        if (!t.in_alpha)
          adj[id(q, phase)].push_back(static_cast<int>(id(t.dst, nphase)));
    }
  std::vector<int> scc;
  tarjan_scc(static_cast<int>(nodes), adj, scc);

  std::vector<bool> scc_reached(nodes, false);
  std::vector<bool> scc_multi(nodes, false);
  std::vector<int> scc_seen(nodes, -1);
  for (size_t v = 0; v < nodes; ++v) {
    size_t c = static_cast<size_t>(scc[v]);
    if (reach[v]) scc_reached[c] = true;
    if (scc_seen[c] >= 0) scc_multi[c] = true;
    scc_seen[c] = static_cast<int>(v);
  }
  for (size_t v = 0; v < nodes; ++v) {
    size_t c = static_cast<size_t>(scc[v]);
    if (!scc_reached[c]) continue;
    if (scc_multi[c])
      return true;
    for (int u : adj[v])
      if (static_cast<size_t>(u) == v)
        return true;  // non-alpha self-loop (period length 1)
  }
  return false;
}

}  // namespace detail

/// Does some run of `a` on the lasso word accept (traverse alpha-transitions
/// only finitely often)?
inline bool accepts(const TNCW& a, const LassoWord& w) {
  return detail::lasso_run_exists(a, a.initial(), w, false);
}
inline bool accepts_from(const TNCW& a, StateId q, const LassoWord& w) {
  return detail::lasso_run_exists(a, q, w, false);
}

/// Membership in the safe language: some run from `q` reads the whole word
/// without ever traversing an alpha-transition.
inline bool safe_accepts_from(const TNCW& a, StateId q, const LassoWord& w) {
  return detail::lasso_run_exists(a, q, w, true);
}

/// Subset + breakpoint determinization for co-Buchi automata. Macro-states
/// are pairs (S, O): S the set of states reachable on the input so far, O the
/// subset still on some alpha-free run since the last breakpoint. A step with
/// empty O' is a breakpoint: the transition is in alpha and O resets to S'.
/// The result is a deterministic TNCW with the same language, macro-states
/// numbered in BFS discovery order. A deterministic input only ever has
/// singleton macro-states, which collapses to reachable-restriction.
inline TNCW breakpoint_determinize(const TNCW& a, StateId from) {
  if (!is_total(a))
    throw std::invalid_argument("breakpoint_determinize requires a total automaton");
  if (is_deterministic(a))
    return restrict_to_reachable(a.with_initial(from));

  const size_t words = static_cast<size_t>(a.num_states() + 63) / 64;
  using Macro = std::vector<uint64_t>;  // S words, then O words
  auto get = [&](const Macro& m, size_t off, StateId q) {
    return (m[off + static_cast<size_t>(q) / 64] >> (static_cast<size_t>(q) % 64) & 1) != 0;
  };
  auto set = [&](Macro& m, size_t off, StateId q) {
    m[off + static_cast<size_t>(q) / 64] |= uint64_t{1} << (static_cast<size_t>(q) % 64);
  };

  std::map<Macro, StateId> ids;
  std::vector<Macro> order;
  Macro init(2 * words, 0);
  set(init, 0, from);
  set(init, words, from);
  ids[init] = 0;
  order.push_back(init);
  std::vector<Transition> ts;

  for (size_t head = 0; head < order.size(); ++head) {
    Macro m = order[head];
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      Macro nxt(2 * words, 0);
      for (StateId q = 0; q < a.num_states(); ++q) {
        if (!get(m, 0, q)) continue;
        bool in_o = get(m, words, q);
        for (const auto& t : a.out(q, s)) {
          set(nxt, 0, t.dst);
          if (in_o && !t.in_alpha)
            set(nxt, words, t.dst);
        }
      }
      bool breakpoint = true;
      for (size_t w = 0; w < words; ++w)
        breakpoint = breakpoint && nxt[words + w] == 0;
      if (breakpoint)
        for (size_t w = 0; w < words; ++w)
          nxt[words + w] = nxt[w];
      auto [it, fresh] = ids.try_emplace(std::move(nxt), static_cast<StateId>(order.size()));
      if (fresh)
        order.push_back(it->first);
      ts.push_back({static_cast<StateId>(head), s, it->second, breakpoint});
    }
  }
  return TNCW(a.alphabet(), static_cast<int>(order.size()), 0, std::move(ts));
}

inline TNCW breakpoint_determinize(const TNCW& a) { return breakpoint_determinize(a, a.initial()); }

namespace detail {

inline StateId dsucc(const TNCW& d, StateId q, SymbolId s) { return d.out(q, s)[0].dst; }
inline bool dalpha(const TNCW& d, StateId q, SymbolId s) { return d.out(q, s)[0].in_alpha; }

struct ContainsResult {
  bool contained = true;
  std::optional<LassoWord> witness;  // accepted by the left side, rejected by the right
};

// L(a^qa) subseteq L(D)? D deterministic; its complement is read off by
// dualizing acceptance. Containment fails iff the product reaches a cycle
// that uses only non-alpha transitions of `a` and traverses at least one
// alpha-transition of D.
inline ContainsResult lang_contains_det(const TNCW& a, StateId qa, const TNCW& d) {
  const size_t nd = static_cast<size_t>(d.num_states());
  const size_t nodes = static_cast<size_t>(a.num_states()) * nd;
  auto id = [&](StateId x, StateId y) { return static_cast<size_t>(x) * nd + static_cast<size_t>(y); };

  size_t start = id(qa, d.initial());
  std::vector<int> pred(nodes, -1);
  std::vector<SymbolId> pred_sym(nodes, -1);
  std::vector<bool> reach(nodes, false);
  std::vector<size_t> queue;
  reach[start] = true;
  queue.push_back(start);
  for (size_t head = 0; head < queue.size(); ++head) {
    size_t node = queue[head];
    StateId x = static_cast<StateId>(node / nd), y = static_cast<StateId>(node % nd);
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      StateId yn = dsucc(d, y, s);
      for (const auto& t : a.out(x, s)) {
        size_t nid = id(t.dst, yn);
        if (!reach[nid]) {
          reach[nid] = true;
          pred[nid] = static_cast<int>(node);
          pred_sym[nid] = s;
          queue.push_back(nid);
        }
      }
    }
  }

  struct Edge { size_t to; SymbolId sym; bool d_alpha; };
  std::vector<std::vector<Edge>> safe_adj(nodes);
  std::vector<std::vector<int>> plain_adj(nodes);
  for (size_t node = 0; node < nodes; ++node) {
    if (!reach[node]) continue;
    StateId x = static_cast<StateId>(node / nd), y = static_cast<StateId>(node % nd);
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      StateId yn = dsucc(d, y, s);
      bool da = dalpha(d, y, s);
      for (const auto& t : a.out(x, s)) {
        if (t.in_alpha) continue;
        size_t nid = id(t.dst, yn);
        safe_adj[node].push_back({nid, s, da});
        plain_adj[node].push_back(static_cast<int>(nid));
      }
    }
  }
  std::vector<int> scc;
  tarjan_scc(static_cast<int>(nodes), plain_adj, scc);

  for (size_t node = 0; node < nodes; ++node) {
    if (!reach[node]) continue;
    for (const Edge& e : safe_adj[node]) {
      if (!e.d_alpha || scc[node] != scc[e.to]) continue;
      // witness: reach `node`, then loop node -> e.to -> ... -> node inside
      // the SCC using only non-alpha transitions of `a`
      std::vector<SymbolId> u;
      for (size_t v = node; pred[v] >= 0; v = static_cast<size_t>(pred[v]))
        u.push_back(pred_sym[v]);
      std::reverse(u.begin(), u.end());

      std::vector<SymbolId> v{e.sym};
      if (e.to != node) {
        std::vector<int> bpred(nodes, -1);
        std::vector<SymbolId> bsym(nodes, -1);
        std::vector<size_t> bq{e.to};
        std::vector<bool> bseen(nodes, false);
        bseen[e.to] = true;
        while (!bq.empty() && !bseen[node]) {
          size_t cur = bq.back();
          bq.pop_back();
          for (const Edge& f : safe_adj[cur]) {
            if (scc[f.to] != scc[node] || bseen[f.to]) continue;
            bseen[f.to] = true;
            bpred[f.to] = static_cast<int>(cur);
            bsym[f.to] = f.sym;
            bq.push_back(f.to);
          }
        }
        std::vector<SymbolId> back;
        for (size_t cur = node; bpred[cur] >= 0; cur = static_cast<size_t>(bpred[cur]))
          back.push_back(bsym[cur]);
        std::reverse(back.begin(), back.end());
        v.insert(v.end(), back.begin(), back.end());
      }
      return {false, LassoWord(std::move(u), std::move(v))};
    }
  }
  return {true, std::nullopt};
}

// For every pair (x, y) of an a-state and a d-state: can (x, y) reach, in the
// synchronized product, a cycle of non-alpha a-transitions traversing at
// least one alpha-transition of the deterministic observer d? Exactly the
// pairs where L(a^x) is NOT contained in L(d^y). One pass serves all pairs.
inline std::vector<std::vector<bool>> product_noncontainment(const TNCW& a, const TNCW& d) {
  const size_t na = static_cast<size_t>(a.num_states()), nd = static_cast<size_t>(d.num_states());
  const size_t nodes = na * nd;
  std::vector<std::vector<int>> safe_adj(nodes), rev_full(nodes);
  struct SEdge { size_t from, to; };
  std::vector<SEdge> marked_safe_edges;  // safe a-edge under an observer alpha-edge
  for (size_t x = 0; x < na; ++x)
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      auto succs = a.out(static_cast<StateId>(x), s);
      for (size_t y = 0; y < nd; ++y) {
        size_t from = x * nd + y;
        StateId yn = dsucc(d, static_cast<StateId>(y), s);
        bool da = dalpha(d, static_cast<StateId>(y), s);
        for (const auto& t : succs) {
          size_t to = static_cast<size_t>(t.dst) * nd + static_cast<size_t>(yn);
          rev_full[to].push_back(static_cast<int>(from));
          if (!t.in_alpha) {
            safe_adj[from].push_back(static_cast<int>(to));
            if (da)
              marked_safe_edges.push_back({from, to});
          }
        }
      }
    }
  std::vector<int> scc;
  tarjan_scc(static_cast<int>(nodes), safe_adj, scc);
  std::vector<bool> bad(nodes, false);
  std::vector<bool> bad_scc(nodes, false);
  for (const auto& e : marked_safe_edges)
    if (scc[e.from] == scc[e.to])
      bad_scc[static_cast<size_t>(scc[e.from])] = true;
  std::vector<size_t> queue;
  for (size_t v = 0; v < nodes; ++v)
    if (bad_scc[static_cast<size_t>(scc[v])]) {
      bad[v] = true;
      queue.push_back(v);
    }
  for (size_t head = 0; head < queue.size(); ++head)
    for (int p : rev_full[queue[head]])
      if (!bad[static_cast<size_t>(p)]) {
        bad[static_cast<size_t>(p)] = true;
        queue.push_back(static_cast<size_t>(p));
      }
  std::vector<std::vector<bool>> out(na, std::vector<bool>(nd, false));
  for (size_t x = 0; x < na; ++x)
    for (size_t y = 0; y < nd; ++y)
      out[x][y] = bad[x * nd + y];
  return out;
}

}  // namespace detail

/// L(a^qa) subseteq L(b^qb)?
inline bool lang_contains(const TNCW& a, StateId qa, const TNCW& b, StateId qb) {
  return detail::lang_contains_det(a, qa, breakpoint_determinize(b, qb)).contained;
}
inline bool lang_contains(const TNCW& a, StateId qa, StateId qb) { return lang_contains(a, qa, a, qb); }

inline bool state_equiv(const TNCW& a, StateId q, const TNCW& b, StateId s) {
  return lang_contains(a, q, b, s) && lang_contains(b, s, a, q);
}
inline bool state_equiv(const TNCW& a, StateId q, StateId s) { return state_equiv(a, q, a, s); }

/// contains[q][s] == L(a^q) subseteq L(a^s), for all state pairs. One batched
/// product analysis per observer; a deterministic automaton is its own
/// observer, so a single pass covers the whole matrix.
inline std::vector<std::vector<bool>> lang_containment_matrix(const TNCW& a) {
  int n = a.num_states();
  std::vector<std::vector<bool>> m(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  if (is_deterministic(a)) {
    auto bad = detail::product_noncontainment(a, a);
    for (StateId q = 0; q < n; ++q)
      for (StateId s = 0; s < n; ++s)
        m[static_cast<size_t>(q)][static_cast<size_t>(s)] = !bad[static_cast<size_t>(q)][static_cast<size_t>(s)];
    return m;
  }
  for (StateId s = 0; s < n; ++s) {
    TNCW d = breakpoint_determinize(a, s);
    auto bad = detail::product_noncontainment(a, d);
    for (StateId q = 0; q < n; ++q)
      m[static_cast<size_t>(q)][static_cast<size_t>(s)] = !bad[static_cast<size_t>(q)][0];
  }
  return m;
}

struct EquivResult {
  bool equivalent = true;
  std::optional<LassoWord> witness;  // accepted by exactly one side
  bool witness_in_first = false;     // true: witness accepted by `a` only
};

inline EquivResult equivalent(const TNCW& a, const TNCW& b) {
  auto ab = detail::lang_contains_det(a, a.initial(), breakpoint_determinize(b));
  if (!ab.contained)
    return {false, ab.witness, true};
  auto ba = detail::lang_contains_det(b, b.initial(), breakpoint_determinize(a));
  if (!ba.contained)
    return {false, ba.witness, false};
  return {};
}

namespace detail {

// states admitting an infinite run of non-alpha transitions
inline std::vector<bool> safe_live_states(const TNCW& a) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(a.num_states()));
  for (const auto& t : a.transitions())
    if (!t.in_alpha)
      adj[static_cast<size_t>(t.src)].push_back(t.dst);
  std::vector<int> scc;
  int count = tarjan_scc(a.num_states(), adj, scc);
  std::vector<int> scc_size(static_cast<size_t>(count), 0);
  for (StateId q = 0; q < a.num_states(); ++q)
    ++scc_size[static_cast<size_t>(scc[static_cast<size_t>(q)])];
  std::vector<bool> live(static_cast<size_t>(a.num_states()), false);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (scc_size[static_cast<size_t>(scc[static_cast<size_t>(q)])] > 1)
      live[static_cast<size_t>(q)] = true;
    for (int w : adj[static_cast<size_t>(q)])
      if (w == q)
        live[static_cast<size_t>(q)] = true;
  }
  // backward closure over non-alpha edges
  bool changed = true;
  while (changed) {
    changed = false;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (live[static_cast<size_t>(q)]) continue;
      for (int w : adj[static_cast<size_t>(q)])
        if (live[static_cast<size_t>(w)]) {
          live[static_cast<size_t>(q)] = true;
          changed = true;
          break;
        }
    }
  }
  return live;
}

}  // namespace detail

/// Lsafe(a^qa) subseteq Lsafe(b^qb), for safe-deterministic automata. Safe
/// languages are the safety languages of the non-alpha transition graphs
/// restricted to states with some infinite safe run, so containment is a
/// product reachability check: it fails iff some reachable pair has a live
/// safe move on the left with no matching one on the right.
inline bool safe_contains(const TNCW& a, StateId qa, const TNCW& b, StateId qb) {
  if (!is_safe_deterministic(a) || !is_safe_deterministic(b))
    throw std::invalid_argument("safe_contains requires safe-deterministic automata");
  std::vector<bool> live_a = detail::safe_live_states(a);
  std::vector<bool> live_b = detail::safe_live_states(b);
  if (!live_a[static_cast<size_t>(qa)])
    return true;
  if (!live_b[static_cast<size_t>(qb)])
    return false;

  auto safe_move = [](const TNCW& m, const std::vector<bool>& live, StateId q, SymbolId s) -> StateId {
    for (const auto& t : m.out(q, s))
      if (!t.in_alpha && live[static_cast<size_t>(t.dst)])
        return t.dst;
    return -1;
  };

  const size_t nb = static_cast<size_t>(b.num_states());
  std::vector<bool> seen(static_cast<size_t>(a.num_states()) * nb, false);
  std::vector<std::pair<StateId, StateId>> queue{{qa, qb}};
  seen[static_cast<size_t>(qa) * nb + static_cast<size_t>(qb)] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      StateId xn = safe_move(a, live_a, x, s);
      if (xn < 0) continue;
      StateId yn = safe_move(b, live_b, y, s);
      if (yn < 0)
        return false;
      size_t nid = static_cast<size_t>(xn) * nb + static_cast<size_t>(yn);
      if (!seen[nid]) {
        seen[nid] = true;
        queue.emplace_back(xn, yn);
      }
    }
  }
  return true;
}

inline bool safe_contains(const TNCW& a, StateId q, StateId s) { return safe_contains(a, q, a, s); }

/// m[q][s] == Lsafe(a^q) subseteq Lsafe(a^s), for all state pairs, via one
/// backward closure on the pair graph of live safe moves.
inline std::vector<std::vector<bool>> safe_le_matrix(const TNCW& a) {
  if (!is_safe_deterministic(a))
    throw std::invalid_argument("safe_le_matrix requires a safe-deterministic automaton");
  const size_t n = static_cast<size_t>(a.num_states());
  std::vector<bool> live = detail::safe_live_states(a);
  auto safe_move = [&](StateId q, SymbolId s) -> StateId {
    for (const auto& t : a.out(q, s))
      if (!t.in_alpha && live[static_cast<size_t>(t.dst)])
        return t.dst;
    return -1;
  };
  std::vector<std::vector<int>> rev(n * n);
  std::vector<bool> bad(n * n, false);
  std::vector<size_t> queue;
  for (size_t x = 0; x < n; ++x) {
    if (!live[x]) continue;
    for (size_t y = 0; y < n; ++y) {
      if (!live[y]) continue;
      size_t from = x * n + y;
      for (SymbolId s = 0; s < a.num_symbols(); ++s) {
        StateId xn = safe_move(static_cast<StateId>(x), s);
        if (xn < 0) continue;
        StateId yn = safe_move(static_cast<StateId>(y), s);
        if (yn < 0) {
          if (!bad[from]) {
            bad[from] = true;
            queue.push_back(from);
          }
        } else {
          rev[static_cast<size_t>(xn) * n + static_cast<size_t>(yn)].push_back(static_cast<int>(from));
        }
      }
    }
  }
  for (size_t head = 0; head < queue.size(); ++head)
    for (int p : rev[queue[head]])
      if (!bad[static_cast<size_t>(p)]) {
        bad[static_cast<size_t>(p)] = true;
        queue.push_back(static_cast<size_t>(p));
      }
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (size_t q = 0; q < n; ++q)
    for (size_t s = 0; s < n; ++s)
      m[q][s] = !live[q] || (live[s] && !bad[q * n + s]);
  return m;
}

/// A positional strategy resolving the automaton's nondeterminism, realized
/// on the product of the automaton with a deterministic observer for its
/// language. move[p][s] is the chosen successor state of the automaton.
struct Strategy {
  TNCW observer;
  std::vector<std::pair<StateId, StateId>> arena;  // arena id -> (automaton state, observer state)
  int initial = 0;
  std::vector<std::vector<StateId>> move;          // arena id x symbol -> automaton successor, -1 off-region
  std::vector<std::vector<int>> arena_next;        // arena id x symbol -> next arena id, -1 off-region
};

/// Decides whether a^from is good-for-games by solving the letter game on the
/// product with breakpoint_determinize(a^from): the adversary picks a letter,
/// the protagonist picks a transition of `a`, the observer moves
/// deterministically. The protagonist wins a play iff it traverses finitely
/// many alpha-transitions of `a` or infinitely many alpha-transitions of the
/// observer. Encoded as a max-parity game (observer alpha -> 2, automaton
/// alpha -> 1, else 0) and solved by the recursive algorithm; the positional
/// winning strategy is returned on success.
inline std::pair<bool, std::optional<Strategy>> gfg_check(const TNCW& a, StateId from) {
  if (!is_total(a))
    throw std::invalid_argument("gfg_check requires a total automaton");
  TNCW d = breakpoint_determinize(a, from);
  const int k = a.num_symbols();

  std::map<std::pair<StateId, StateId>, int> pair_id;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = pair_id.try_emplace({x, y}, static_cast<int>(pairs.size()));
    if (fresh)
      pairs.emplace_back(x, y);
    return it->second;
  };
  intern(from, 0);
  for (size_t head = 0; head < pairs.size(); ++head) {
    auto [x, y] = pairs[head];
    for (SymbolId s = 0; s < k; ++s) {
      StateId yn = detail::dsucc(d, y, s);
      for (const auto& t : a.out(x, s))
        intern(t.dst, yn);
    }
  }

  const int np = static_cast<int>(pairs.size());
  ParityGame game;
  // base nodes: adversary picks a letter
  for (int p = 0; p < np; ++p)
    game.add_node(1, 0);
  // letter nodes: protagonist picks a transition
  auto letter_node = [&](int p, SymbolId s) { return np + p * k + s; };
  for (int p = 0; p < np; ++p)
    for (SymbolId s = 0; s < k; ++s) {
      game.add_node(0, 0);
      game.add_edge(p, letter_node(p, s));
    }
  // clone nodes carry the move's priority, then fall through to the base node
  std::map<std::pair<int, int>, int> clone_id;
  auto clone = [&](int p, int prio) {
    auto it = clone_id.find({p, prio});
    if (it != clone_id.end())
      return it->second;
    int node = game.add_node(0, prio);
    game.add_edge(node, p);
    clone_id[{p, prio}] = node;
    return node;
  };
  for (int p = 0; p < np; ++p) {
    auto [x, y] = pairs[p];
    for (SymbolId s = 0; s < k; ++s) {
      StateId yn = detail::dsucc(d, y, s);
      bool da = detail::dalpha(d, y, s);
      for (const auto& t : a.out(x, s)) {
        int prio = da ? 2 : (t.in_alpha ? 1 : 0);
        game.add_edge(letter_node(p, s), clone(intern(t.dst, yn), prio));
      }
    }
  }

  GameSolution sol = solve_parity_game(game);
  if (sol.winner[0] != 0)
    return {false, std::nullopt};

  Strategy strat{std::move(d), pairs, 0, {}, {}};
  strat.move.assign(static_cast<size_t>(np), std::vector<StateId>(static_cast<size_t>(k), -1));
  strat.arena_next.assign(static_cast<size_t>(np), std::vector<int>(static_cast<size_t>(k), -1));
  // invert clone ids to recover the chosen pair
  std::map<int, int> clone_to_pair;
  for (const auto& [key, node] : clone_id)
    clone_to_pair[node] = key.first;
  for (int p = 0; p < np; ++p) {
    if (sol.winner[static_cast<size_t>(p)] != 0) continue;
    for (SymbolId s = 0; s < k; ++s) {
      int choice = sol.strategy[static_cast<size_t>(letter_node(p, s))];
      if (choice < 0) continue;
      int target = clone_to_pair.at(choice);
      strat.move[static_cast<size_t>(p)][static_cast<size_t>(s)] = pairs[static_cast<size_t>(target)].first;
      strat.arena_next[static_cast<size_t>(p)][static_cast<size_t>(s)] = target;
    }
  }
  return {true, std::move(strat)};
}

inline std::pair<bool, std::optional<Strategy>> gfg_check(const TNCW& a) { return gfg_check(a, a.initial()); }

/// Runs the strategy on a lasso word and reports whether the induced run of
/// `a` is accepting. Deterministic, so the run lassos on (arena state,
/// word phase); accepting iff the cycle is alpha-free.
inline bool strategy_run_accepts(const TNCW& a, const Strategy& strat, const LassoWord& w) {
  const size_t len = w.length();
  std::map<std::pair<int, size_t>, size_t> seen;  // (arena, phase) -> step index
  std::vector<bool> step_alpha;
  int aid = strat.initial;
  size_t phase = 0;
  while (true) {
    auto key = std::make_pair(aid, phase);
    auto it = seen.find(key);
    if (it != seen.end()) {
      for (size_t i = it->second; i < step_alpha.size(); ++i)
        if (step_alpha[i])
          return false;
      return true;
    }
    seen[key] = step_alpha.size();
    SymbolId s = w.at(phase);
    StateId x = strat.arena[static_cast<size_t>(aid)].first;
    StateId xn = strat.move[static_cast<size_t>(aid)][static_cast<size_t>(s)];
    if (xn < 0)
      return false;  // off the winning region
    const Transition* t = a.find(x, s, xn);
    if (t == nullptr)
      throw std::logic_error("strategy move is not a transition");
    step_alpha.push_back(t->in_alpha);
    aid = strat.arena_next[static_cast<size_t>(aid)][static_cast<size_t>(s)];
    phase = w.next_phase(phase);
    (void)len;
  }
}

/// Every way of keeping exactly one transition per (state, symbol), in
/// deterministic odometer order. Total automata stay total; the caller
/// filters by language.
class PruningStream {
public:
  explicit PruningStream(TNCW a) : base_(std::move(a)) {
    for (StateId q = 0; q < base_.num_states(); ++q)
      for (SymbolId s = 0; s < base_.num_symbols(); ++s) {
        slots_.emplace_back(q, s);
        if (base_.out(q, s).empty())
          throw std::invalid_argument("enumerate_prunings requires a total automaton");
      }
    choice_.assign(slots_.size(), 0);
  }

  size_t total_count() const {
    size_t n = 1;
    for (const auto& [q, s] : slots_)
      n *= base_.out(q, s).size();
    return n;
  }

  std::optional<TNCW> next() {
    if (done_)
      return std::nullopt;
    std::vector<Transition> ts;
    for (size_t i = 0; i < slots_.size(); ++i) {
      auto [q, s] = slots_[i];
      ts.push_back(base_.out(q, s)[choice_[i]]);
    }
    // advance odometer
    size_t i = slots_.size();
    while (i > 0) {
      --i;
      auto [q, s] = slots_[i];
      if (++choice_[i] < base_.out(q, s).size())
        break;
      choice_[i] = 0;
      if (i == 0)
        done_ = true;
    }
    if (slots_.empty())
      done_ = true;
    return TNCW(base_.alphabet(), base_.num_states(), base_.initial(), std::move(ts));
  }

private:
  TNCW base_;
  std::vector<std::pair<StateId, SymbolId>> slots_;
  std::vector<size_t> choice_;
  bool done_ = false;
};

inline std::vector<TNCW> enumerate_prunings(const TNCW& a) {
  PruningStream stream(a);
  std::vector<TNCW> out;
  while (auto p = stream.next())
    out.push_back(std::move(*p));
  return out;
}

/// Seeded pseudo-random lassos for differential testing. A fixed seed yields
/// an identical sequence.
inline std::vector<LassoWord> random_lassos(const Alphabet& sigma, int count, int max_len, uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
  std::vector<LassoWord> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    int ulen = uniform(max_len + 1);
    int vlen = 1 + uniform(std::max(1, max_len));
    std::vector<SymbolId> u, v;
    for (int j = 0; j < ulen; ++j) u.push_back(uniform(sigma.size()));
    for (int j = 0; j < vlen; ++j) v.push_back(uniform(sigma.size()));
    out.emplace_back(std::move(u), std::move(v));
  }
  return out;
}

}  // namespace gfgmin
