#pragma once

// Shared corpus for the test suites. The named automata are built
// programmatically here; the .hoa files under fixtures/ must parse to these
// exact structures (checked in test_hoa.cpp).

#include <fstream>
#include <sstream>
#include <string>

#include "gfgmin/gfgmin.hpp"

namespace fixtures {

using namespace gfgmin;

// 2-state tDCW for (a+b)* a^w; nice but neither safe-minimal nor
// safe-centralized, so it minimizes to a single state.
inline TNCW fm() {
  return TncwBuilder(Alphabet({"a", "b"}), 2, 0)
      .add(0, "a", 1, true)
      .add(0, "b", 0, true)
      .add(1, "a", 1, false)
      .add(1, "b", 0, true)
      .build();
}

// 3-state tDCW whose states are all equivalent but have pairwise different
// safe languages; safe components {q0,q1} and {q2}, with Lsafe(q2) = {a^w}
// contained in Lsafe(q0).
inline TNCW tri() {
  return TncwBuilder(Alphabet({"a", "b", "c"}), 3, 0)
      .add(0, "a", 0, false)
      .add(0, "b", 1, false)
      .add(0, "c", 2, true)
      .add(1, "b", 0, false)
      .add(1, "a", 0, true)
      .add(1, "c", 2, true)
      .add(2, "a", 2, false)
      .add(2, "b", 0, true)
      .add(2, "c", 0, true)
      .build();
}

// Safe centralization of tri() on the frontier {{q0, q1}}: every letter with
// no safe move gets alpha-transitions to both states.
inline TNCW bs() {
  return TncwBuilder(Alphabet({"a", "b", "c"}), 2, 0)
      .add(0, "a", 0, false)
      .add(0, "b", 1, false)
      .add(0, "c", 0, true)
      .add(0, "c", 1, true)
      .add(1, "a", 0, true)
      .add(1, "a", 1, true)
      .add(1, "b", 0, false)
      .add(1, "c", 0, true)
      .add(1, "c", 1, true)
      .build();
}

// Token automaton over {σ, π, #}: states are the nonempty subsets of three
// token positions, encoded as masks 1..7 mapped to ids 0..6. σ rotates the
// positions, π swaps positions 1 and 2, # chops the token at position 1,
// with a breakpoint edge {1} -#-> {2,3}. Cross-component edges become alpha
// by normalization.
inline TNCW tok_full() {
  auto act = [](int mask, int letter) {
    if (letter == 0) {
      int out = 0;
      for (int v = 0; v < 3; ++v)
        if (mask >> v & 1) out |= 1 << ((v + 1) % 3);
      return out;
    }
    if (letter == 1) {
      int out = mask & 4;
      if (mask & 1) out |= 2;
      if (mask & 2) out |= 1;
      return out;
    }
    return mask == 1 ? 6 : (mask & ~1);
  };
  TncwBuilder b(Alphabet({"σ", "π", "#"}), 7, 0);
  for (int mask = 1; mask <= 7; ++mask)
    for (int letter = 0; letter < 3; ++letter)
      b.add(mask - 1, letter, act(mask, letter) - 1, mask == 1 && letter == 2);
  return normalize(b.build());
}

// The 6 states reachable from {1}.
inline TNCW tok() { return restrict_to_reachable(tok_full()); }

// Safe centralization of tok() on its singleton-components frontier; the
// minimal GFG-tNCW for the token language.
inline TNCW min3() {
  return TncwBuilder(Alphabet({"σ", "π", "#"}), 3, 0)
      .add(0, "σ", 1, false)
      .add(0, "π", 1, false)
      .add(0, "#", 0, true)
      .add(0, "#", 1, true)
      .add(0, "#", 2, true)
      .add(1, "σ", 2, false)
      .add(1, "π", 0, false)
      .add(1, "#", 1, false)
      .add(2, "σ", 0, false)
      .add(2, "π", 2, false)
      .add(2, "#", 2, false)
      .build();
}

// Two equivalent minimal nice tDCWs for (b+c)* (bc)^w with identical safe
// skeletons but different alpha edges; safe isomorphic, not isomorphic.
inline TNCW dp1() {
  return TncwBuilder(Alphabet({"b", "c"}), 2, 0)
      .add(0, "b", 1, false)
      .add(0, "c", 0, true)
      .add(1, "c", 0, false)
      .add(1, "b", 1, true)
      .build();
}

inline TNCW dp2() {
  return TncwBuilder(Alphabet({"b", "c"}), 2, 0)
      .add(0, "b", 1, false)
      .add(0, "c", 1, true)
      .add(1, "c", 0, false)
      .add(1, "b", 1, true)
      .build();
}

inline std::vector<std::pair<std::string, TNCW>> corpus() {
  return {{"fm", fm()},   {"tri", tri()},   {"bs", bs()},  {"tok", tok()},
          {"min3", min3()}, {"dp1", dp1()}, {"dp2", dp2()}};
}

inline LassoWord lasso(const Alphabet& sigma, const std::vector<std::string>& prefix,
                       const std::vector<std::string>& period) {
  std::vector<SymbolId> u, v;
  for (const auto& s : prefix) u.push_back(sigma.index_of(s));
  for (const auto& s : period) v.push_back(sigma.index_of(s));
  return LassoWord(std::move(u), std::move(v));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(GFGMIN_FIXTURES_DIR) + "/" + name;
}

// Independent oracle: the structural flags recomputed by naive double loops
// over states and symbols, straight from their definitions.
inline StructuralReport naive_structural_report(const TNCW& a) {
  StructuralReport r;
  r.deterministic = r.safe_deterministic = r.alpha_homogeneous = r.total = true;
  for (StateId q = 0; q < a.num_states(); ++q)
    for (SymbolId s = 0; s < a.num_symbols(); ++s) {
      int n = 0, safe = 0, alpha = 0;
      for (const auto& t : a.transitions())
        if (t.src == q && t.symbol == s) {
          ++n;
          (t.in_alpha ? alpha : safe)++;
        }
      if (n != 1) r.deterministic = false;
      if (safe > 1) r.safe_deterministic = false;
      if (safe > 0 && alpha > 0) r.alpha_homogeneous = false;
      if (n == 0) r.total = false;
    }
  SafeDecomposition d = safe_components(a);
  r.normal = true;
  for (const auto& t : a.transitions())
    if (!t.in_alpha && d.component_of[static_cast<size_t>(t.src)] != d.component_of[static_cast<size_t>(t.dst)])
      r.normal = false;
  r.all_reachable = static_cast<int>(reachable_states(a).size()) == a.num_states();
  return r;
}

// Independent acceptance oracle for deterministic automata: follow the unique
// run until (state, phase) repeats and inspect the cycle's marks.
inline bool det_run_accepts(const TNCW& a, const LassoWord& w) {
  std::vector<int> seen_at(static_cast<size_t>(a.num_states()) * w.length(), -1);
  std::vector<bool> marks;
  StateId q = a.initial();
  size_t phase = 0;
  while (true) {
    size_t key = static_cast<size_t>(q) * w.length() + phase;
    if (seen_at[key] >= 0) {
      for (size_t i = static_cast<size_t>(seen_at[key]); i < marks.size(); ++i)
        if (marks[i])
          return false;
      return true;
    }
    seen_at[key] = static_cast<int>(marks.size());
    auto succs = a.out(q, w.at(phase));
    if (succs.size() != 1)
      throw std::logic_error("det_run_accepts needs a deterministic automaton");
    marks.push_back(succs[0].in_alpha);
    q = succs[0].dst;
    phase = w.next_phase(phase);
  }
}

// bs() with both c-labeled alpha-edges of q0 redirected to a fresh rejecting
// sink; any resolver must eventually sit in q0 on a safe run and then dies on
// c, so the automaton is no longer good-for-games.
inline TNCW bs_broken() {
  return TncwBuilder(Alphabet({"a", "b", "c"}), 3, 0)
      .add(0, "a", 0, false)
      .add(0, "b", 1, false)
      .add(0, "c", 2, true)
      .add(1, "a", 0, true)
      .add(1, "a", 1, true)
      .add(1, "b", 0, false)
      .add(1, "c", 0, true)
      .add(1, "c", 1, true)
      .add(2, "a", 2, true)
      .add(2, "b", 2, true)
      .add(2, "c", 2, true)
      .build();
}

}  // namespace fixtures
