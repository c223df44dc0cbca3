#pragma once

#include <stdexcept>
#include <vector>

namespace gfgmin {

/// Max-parity game with node priorities. Player 0 wins a play iff the highest
/// priority seen infinitely often is even. Every node must have at least one
/// successor.
struct ParityGame {
  std::vector<int> owner;                  // 0 or 1
  std::vector<int> priority;               // >= 0
  std::vector<std::vector<int>> succ;

  int add_node(int own, int prio) {
    owner.push_back(own);
    priority.push_back(prio);
    succ.emplace_back();
    return static_cast<int>(owner.size()) - 1;
  }
  void add_edge(int from, int to) { succ[static_cast<size_t>(from)].push_back(to); }
  int size() const { return static_cast<int>(owner.size()); }
};

struct GameSolution {
  std::vector<int> winner;    // node -> winning player
  std::vector<int> strategy;  // node -> chosen successor when owner wins there, else -1
};

namespace detail {

class ZielonkaSolver {
public:
  explicit ZielonkaSolver(const ParityGame& g) : g_(g), pred_(static_cast<size_t>(g.size())) {
    for (int v = 0; v < g.size(); ++v) {
      if (g.succ[static_cast<size_t>(v)].empty())
        throw std::invalid_argument("parity game node without successors");
      for (int w : g.succ[static_cast<size_t>(v)])
        pred_[static_cast<size_t>(w)].push_back(v);
    }
    sol_.winner.assign(static_cast<size_t>(g.size()), -1);
    sol_.strategy.assign(static_cast<size_t>(g.size()), -1);
  }

  GameSolution solve() {
    std::vector<bool> alive(static_cast<size_t>(g_.size()), true);
    recurse(alive);
    return sol_;
  }

private:
  // Attractor of `target` for `player` inside `alive`; records the attracting
  // player's strategy edges into sol_.strategy. Nodes already in `target`
  // keep whatever strategy the caller assigns them.
  std::vector<bool> attractor(int player, const std::vector<bool>& alive, const std::vector<bool>& target) {
    std::vector<bool> in_attr = target;
    std::vector<int> degree(static_cast<size_t>(g_.size()), 0);
    std::vector<int> queue;
    for (int v = 0; v < g_.size(); ++v) {
      if (!alive[static_cast<size_t>(v)]) continue;
      if (in_attr[static_cast<size_t>(v)]) queue.push_back(v);
      int d = 0;
      for (int w : g_.succ[static_cast<size_t>(v)])
        if (alive[static_cast<size_t>(w)]) ++d;
      degree[static_cast<size_t>(v)] = d;
    }
    for (size_t head = 0; head < queue.size(); ++head) {
      int w = queue[head];
      for (int v : pred_[static_cast<size_t>(w)]) {
        if (!alive[static_cast<size_t>(v)] || in_attr[static_cast<size_t>(v)]) continue;
        if (g_.owner[static_cast<size_t>(v)] == player) {
          in_attr[static_cast<size_t>(v)] = true;
          sol_.strategy[static_cast<size_t>(v)] = w;
          queue.push_back(v);
        } else if (--degree[static_cast<size_t>(v)] == 0) {
          in_attr[static_cast<size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
    return in_attr;
  }

  void recurse(const std::vector<bool>& alive) {
    int max_prio = -1;
    for (int v = 0; v < g_.size(); ++v)
      if (alive[static_cast<size_t>(v)])
        max_prio = std::max(max_prio, g_.priority[static_cast<size_t>(v)]);
    if (max_prio < 0)
      return;
    int player = max_prio % 2;

    std::vector<bool> top(static_cast<size_t>(g_.size()), false);
    for (int v = 0; v < g_.size(); ++v)
      if (alive[static_cast<size_t>(v)] && g_.priority[static_cast<size_t>(v)] == max_prio)
        top[static_cast<size_t>(v)] = true;
    std::vector<bool> attr = attractor(player, alive, top);

    std::vector<bool> rest = alive;
    for (int v = 0; v < g_.size(); ++v)
      if (attr[static_cast<size_t>(v)])
        rest[static_cast<size_t>(v)] = false;
    recurse(rest);

    bool opponent_wins_some = false;
    for (int v = 0; v < g_.size(); ++v)
      if (rest[static_cast<size_t>(v)] && sol_.winner[static_cast<size_t>(v)] == 1 - player) {
        opponent_wins_some = true;
        break;
      }

    if (!opponent_wins_some) {
      // `player` wins everywhere in `alive`: attractor strategy on attr, the
      // sub-solution elsewhere. Top nodes owned by `player` without a
      // strategy yet may take any alive successor.
      for (int v = 0; v < g_.size(); ++v) {
        if (!alive[static_cast<size_t>(v)]) continue;
        if (attr[static_cast<size_t>(v)]) {
          sol_.winner[static_cast<size_t>(v)] = player;
          if (g_.owner[static_cast<size_t>(v)] == player && top[static_cast<size_t>(v)]) {
            for (int w : g_.succ[static_cast<size_t>(v)])
              if (alive[static_cast<size_t>(w)]) {
                sol_.strategy[static_cast<size_t>(v)] = w;
                break;
              }
          }
        }
      }
      return;
    }

    std::vector<bool> opp_region(static_cast<size_t>(g_.size()), false);
    for (int v = 0; v < g_.size(); ++v)
      if (rest[static_cast<size_t>(v)] && sol_.winner[static_cast<size_t>(v)] == 1 - player)
        opp_region[static_cast<size_t>(v)] = true;
    std::vector<bool> opp_attr = attractor(1 - player, alive, opp_region);

    std::vector<bool> remaining = alive;
    for (int v = 0; v < g_.size(); ++v)
      if (opp_attr[static_cast<size_t>(v)])
        remaining[static_cast<size_t>(v)] = false;
    recurse(remaining);

    for (int v = 0; v < g_.size(); ++v)
      if (opp_attr[static_cast<size_t>(v)])
        sol_.winner[static_cast<size_t>(v)] = 1 - player;
  }

  const ParityGame& g_;
  std::vector<std::vector<int>> pred_;
  GameSolution sol_;
};

}  // namespace detail

inline GameSolution solve_parity_game(const ParityGame& g) {
  return detail::ZielonkaSolver(g).solve();
}

}  // namespace gfgmin
