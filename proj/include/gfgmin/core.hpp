#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfgmin {

using StateId = int;
using SymbolId = int;

/// Finite input alphabet. Symbol order is fixed at construction and used for
/// all deterministic iteration and tie-breaking throughout the library.
class Alphabet {
public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
      throw std::invalid_argument("alphabet must be non-empty");
    for (const auto& s : symbols_) {
      if (s.empty())
        throw std::invalid_argument("alphabet symbol must be non-empty");
      for (char c : s)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
          throw std::invalid_argument("alphabet symbol must not contain whitespace: '" + s + "'");
    }
    auto sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("alphabet has duplicate symbols");
  }

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& name(SymbolId i) const { return symbols_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  /// Returns -1 when the name is unknown.
  SymbolId index_of(std::string_view name) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name)
        return static_cast<SymbolId>(i);
    return -1;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
  std::vector<std::string> symbols_;
};

/// One labeled edge. `in_alpha` marks membership in the acceptance set: a run
/// is accepting iff it traverses such transitions only finitely often.
struct Transition {
  StateId src = 0;
  SymbolId symbol = 0;
  StateId dst = 0;
  bool in_alpha = false;

  friend bool operator==(const Transition& a, const Transition& b) {
    return a.src == b.src && a.symbol == b.symbol && a.dst == b.dst && a.in_alpha == b.in_alpha;
  }
};

inline bool triple_less(const Transition& a, const Transition& b) {
  if (a.src != b.src) return a.src < b.src;
  if (a.symbol != b.symbol) return a.symbol < b.symbol;
  return a.dst < b.dst;
}

/// Transition-based co-Buchi word automaton over dense integer state ids.
/// Immutable after construction; transitions are kept sorted by
/// (src, symbol, dst), and a (src, symbol, dst) triple occurs at most once.
/// Totality is a property of most inputs but is not enforced here; see
/// is_total() and ensure_total().
class TNCW {
public:
  TNCW(Alphabet alphabet, int num_states, StateId initial, std::vector<Transition> transitions)
      : alphabet_(std::move(alphabet)),
        num_states_(num_states),
        initial_(initial),
        transitions_(std::move(transitions)) {
    if (num_states_ <= 0)
      throw std::invalid_argument("automaton needs at least one state");
    if (initial_ < 0 || initial_ >= num_states_)
      throw std::invalid_argument("initial state out of range");
    for (const auto& t : transitions_) {
      if (t.src < 0 || t.src >= num_states_ || t.dst < 0 || t.dst >= num_states_)
        throw std::invalid_argument("transition endpoint out of range");
      if (t.symbol < 0 || t.symbol >= alphabet_.size())
        throw std::invalid_argument("transition symbol out of range");
    }
    std::sort(transitions_.begin(), transitions_.end(), triple_less);
    for (size_t i = 1; i < transitions_.size(); ++i) {
      const auto& p = transitions_[i - 1];
      const auto& t = transitions_[i];
      if (p.src == t.src && p.symbol == t.symbol && p.dst == t.dst)
        throw std::invalid_argument("duplicate transition triple (" + std::to_string(t.src) + ", " +
                                    alphabet_.name(t.symbol) + ", " + std::to_string(t.dst) + ")");
    }
    build_index();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return num_states_; }
  int num_symbols() const { return alphabet_.size(); }
  StateId initial() const { return initial_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  size_t num_transitions() const { return transitions_.size(); }
  size_t num_alpha_transitions() const {
    size_t n = 0;
    for (const auto& t : transitions_) n += t.in_alpha ? 1 : 0;
    return n;
  }

  /// All transitions leaving (q, symbol), in dst order.
  std::span<const Transition> out(StateId q, SymbolId symbol) const {
    size_t slot = static_cast<size_t>(q) * static_cast<size_t>(alphabet_.size()) + static_cast<size_t>(symbol);
    return {transitions_.data() + offsets_[slot], transitions_.data() + offsets_[slot + 1]};
  }

  /// The transition record for the triple, or nullptr if absent.
  const Transition* find(StateId q, SymbolId symbol, StateId dst) const {
    for (const auto& t : out(q, symbol))
      if (t.dst == dst)
        return &t;
    return nullptr;
  }

  TNCW with_initial(StateId q) const { return TNCW(alphabet_, num_states_, q, transitions_); }

  friend bool operator==(const TNCW& a, const TNCW& b) {
    return a.alphabet_ == b.alphabet_ && a.num_states_ == b.num_states_ && a.initial_ == b.initial_ &&
           a.transitions_ == b.transitions_;
  }

private:
  void build_index() {
    size_t slots = static_cast<size_t>(num_states_) * static_cast<size_t>(alphabet_.size());
    offsets_.assign(slots + 1, 0);
    for (const auto& t : transitions_)
      ++offsets_[static_cast<size_t>(t.src) * alphabet_.size() + t.symbol + 1];
    for (size_t i = 1; i <= slots; ++i)
      offsets_[i] += offsets_[i - 1];
  }

  Alphabet alphabet_;
  int num_states_;
  StateId initial_;
  std::vector<Transition> transitions_;
  std::vector<size_t> offsets_;
};

/// Convenience for assembling automata transition by transition.
class TncwBuilder {
public:
  TncwBuilder(Alphabet alphabet, int num_states, StateId initial)
      : alphabet_(std::move(alphabet)), num_states_(num_states), initial_(initial) {}

  TncwBuilder& add(StateId src, SymbolId symbol, StateId dst, bool in_alpha) {
    transitions_.push_back({src, symbol, dst, in_alpha});
    return *this;
  }

  TncwBuilder& add(StateId src, std::string_view symbol, StateId dst, bool in_alpha) {
    SymbolId s = alphabet_.index_of(symbol);
    if (s < 0)
      throw std::invalid_argument("unknown symbol: " + std::string(symbol));
    return add(src, s, dst, in_alpha);
  }

  TNCW build() const { return TNCW(alphabet_, num_states_, initial_, transitions_); }

private:
  Alphabet alphabet_;
  int num_states_;
  StateId initial_;
  std::vector<Transition> transitions_;
};

inline bool is_total(const TNCW& a) {
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s)
      if (a.out(q, s).empty())
        return false;
  return true;
}

inline bool is_deterministic(const TNCW& a) {
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s)
      if (a.out(q, s).size() != 1)
        return false;
  return true;
}

inline bool is_safe_deterministic(const TNCW& a) {
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      int nonalpha = 0;
      for (const auto& t : a.out(q, s))
        nonalpha += t.in_alpha ? 0 : 1;
      if (nonalpha > 1)
        return false;
    }
  return true;
}

inline bool is_alpha_homogeneous(const TNCW& a) {
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      bool saw_alpha = false, saw_nonalpha = false;
      for (const auto& t : a.out(q, s))
        (t.in_alpha ? saw_alpha : saw_nonalpha) = true;
      if (saw_alpha && saw_nonalpha)
        return false;
    }
  return true;
}

/// States reachable from the initial state, in BFS discovery order with
/// symbol order (then dst order) breaking ties.
inline std::vector<StateId> reachable_states(const TNCW& a) {
  std::vector<bool> seen(static_cast<size_t>(a.num_states()), false);
  std::vector<StateId> order;
  order.push_back(a.initial());
  seen[static_cast<size_t>(a.initial())] = true;
  for (size_t head = 0; head < order.size(); ++head) {
    StateId q = order[head];
    for (SymbolId s = 0; s < a.num_symbols(); ++s)
      for (const auto& t : a.out(q, s))
        if (!seen[static_cast<size_t>(t.dst)]) {
          seen[static_cast<size_t>(t.dst)] = true;
          order.push_back(t.dst);
        }
  }
  return order;
}

inline bool all_states_reachable(const TNCW& a) {
  return static_cast<int>(reachable_states(a).size()) == a.num_states();
}

/// If `a` is not total, appends one rejecting sink (alpha self-loops on every
/// symbol) and routes every missing (state, symbol) to it with an
/// alpha-transition. Total inputs are returned unchanged.
inline TNCW ensure_total(const TNCW& a) {
  if (is_total(a))
    return a;
  StateId sink = a.num_states();
  std::vector<Transition> ts = a.transitions();
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s)
      if (a.out(q, s).empty())
        ts.push_back({q, s, sink, true});
  for (SymbolId s = 0; s < a.num_symbols(); ++s)
    ts.push_back({sink, s, sink, true});
  return TNCW(a.alphabet(), a.num_states() + 1, a.initial(), std::move(ts));
}

/// Drops states unreachable from the initial state and renumbers the rest in
/// BFS discovery order. Reachable states keep all their outgoing transitions,
/// so a total automaton stays total.
inline TNCW restrict_to_reachable(const TNCW& a) {
  std::vector<StateId> order = reachable_states(a);
  if (static_cast<int>(order.size()) == a.num_states()) {
    bool identity = true;
    for (size_t i = 0; i < order.size(); ++i)
      if (order[i] != static_cast<StateId>(i)) { identity = false; break; }
    if (identity)
      return a;
  }
  std::vector<StateId> renum(static_cast<size_t>(a.num_states()), -1);
  for (size_t i = 0; i < order.size(); ++i)
    renum[static_cast<size_t>(order[i])] = static_cast<StateId>(i);
  std::vector<Transition> ts;
  for (const auto& t : a.transitions())
    if (renum[static_cast<size_t>(t.src)] >= 0 && renum[static_cast<size_t>(t.dst)] >= 0)
      ts.push_back({renum[static_cast<size_t>(t.src)], t.symbol, renum[static_cast<size_t>(t.dst)], t.in_alpha});
  return TNCW(a.alphabet(), static_cast<int>(order.size()), renum[static_cast<size_t>(a.initial())], std::move(ts));
}

/// Applies a state permutation: state q of `a` becomes perm[q].
inline TNCW relabel_states(const TNCW& a, const std::vector<StateId>& perm) {
  if (static_cast<int>(perm.size()) != a.num_states())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Transition> ts;
  ts.reserve(a.num_transitions());
  for (const auto& t : a.transitions())
    ts.push_back({perm[static_cast<size_t>(t.src)], t.symbol, perm[static_cast<size_t>(t.dst)], t.in_alpha});
  return TNCW(a.alphabet(), a.num_states(), perm[static_cast<size_t>(a.initial())], std::move(ts));
}

struct StructuralReport {
  bool deterministic = false;
  bool safe_deterministic = false;
  bool alpha_homogeneous = false;
  bool normal = false;
  bool total = false;
  bool all_reachable = false;
};

// structural_report lives in safe_structure.hpp (the normal flag needs the
// safe-component decomposition).

}  // namespace gfgmin
