#pragma once

#include <random>

#include "gfgmin/core.hpp"

namespace gfgmin {

/// Default alphabet for generated automata: a, b, c, ...
inline Alphabet letters_alphabet(int k) {
  if (k < 1 || k > 26)
    throw std::invalid_argument("letters_alphabet supports 1..26 symbols");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

struct GenOptions {
  bool deterministic = false;
};

/// Seeded random total tNCW. Output is always safe-deterministic and
/// alpha-homogeneous (one non-alpha edge, or one or two alpha edges, per
/// state and symbol) so that generated automata exercise the minimization
/// pipeline's main path. Fixed seed, fixed output.
inline TNCW random_tncw(int num_states, const Alphabet& sigma, uint64_t seed, const GenOptions& opts = {}) {
  if (num_states < 1)
    throw std::invalid_argument("need at least one state");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };

  std::vector<Transition> ts;
  for (StateId q = 0; q < num_states; ++q)
    for (SymbolId s = 0; s < sigma.size(); ++s) {
      if (opts.deterministic) {
        ts.push_back({q, s, uniform(num_states), uniform(4) == 0});
        continue;
      }
      if (uniform(8) < 5) {
        ts.push_back({q, s, uniform(num_states), false});
      } else {
        int first = uniform(num_states);
        ts.push_back({q, s, first, true});
        if (uniform(2) == 0 && num_states > 1) {
          int second = uniform(num_states - 1);
          if (second >= first) ++second;
          ts.push_back({q, s, second, true});
        }
      }
    }
  return TNCW(sigma, num_states, 0, std::move(ts));
}

}  // namespace gfgmin
