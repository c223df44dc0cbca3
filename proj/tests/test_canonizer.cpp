#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace gfgmin;

namespace {

TNCW drop_transition(const TNCW& a, StateId src, const std::string& sym, StateId dst) {
  std::vector<Transition> ts;
  SymbolId s = a.alphabet().index_of(sym);
  for (const auto& t : a.transitions())
    if (!(t.src == src && t.symbol == s && t.dst == dst))
      ts.push_back(t);
  return TNCW(a.alphabet(), a.num_states(), a.initial(), ts);
}

// bs minus one c-labeled alpha-transition of q0, two ways
TNCW c1() { return drop_transition(fixtures::bs(), 0, "c", 1); }
TNCW c2() { return drop_transition(fixtures::bs(), 0, "c", 0); }

bool has_alpha(const TNCW& a, StateId src, const std::string& sym, StateId dst) {
  const Transition* t = a.find(src, a.alphabet().index_of(sym), dst);
  return t != nullptr && t->in_alpha;
}

}  // namespace

TEST_CASE("allowed transitions") {
  SECTION("bs allows the missing sibling edges") {
    auto allowed = allowed_transitions(fixtures::bs());
    // q0 -a-> q0 exists and q0 ~ q1, so (q0, a, q1) is allowed
    bool found = false;
    for (const auto& t : allowed)
      found = found || (t.src == 0 && t.symbol == 0 && t.dst == 1);
    CHECK(found);
    // bs has 9 of the 12 possible triples
    CHECK(allowed.size() == 3);
  }
  SECTION("c1 allows re-adding exactly the dropped edge and the rest") {
    auto allowed = allowed_transitions(c1());
    bool found = false;
    for (const auto& t : allowed)
      found = found || (t.src == 0 && t.symbol == 2 && t.dst == 1);
    CHECK(found);
  }
  SECTION("deterministic automaton without equivalent states allows nothing") {
    // q0 accepts only a^w, q1 accepts nothing
    TNCW a = TncwBuilder(Alphabet({"a", "b"}), 2, 0)
                 .add(0, "a", 0, false)
                 .add(0, "b", 1, true)
                 .add(1, "a", 1, true)
                 .add(1, "b", 1, true)
                 .build();
    REQUIRE_FALSE(state_equiv(a, 0, 1));
    CHECK(allowed_transitions(a).empty());
  }
}

TEST_CASE("alpha_maximize") {
  SECTION("bs saturates to all twelve triples") {
    TNCW m = alpha_maximize(fixtures::bs());
    CHECK(m.num_transitions() == 12);
    CHECK(m.num_alpha_transitions() == 9);
    for (StateId q = 0; q < 2; ++q)
      for (SymbolId s = 0; s < 3; ++s)
        CHECK(m.out(q, s).size() == 2);
    CHECK(equivalent(m, fixtures::bs()).equivalent);
    CHECK(validate_nice(m).nice());
  }
  SECTION("idempotent") {
    TNCW m = alpha_maximize(fixtures::bs());
    CHECK(alpha_maximize(m) == m);
    CHECK(is_alpha_maximal(m));
  }
  SECTION("c1 and c2 saturate to identical automata") {
    CHECK(alpha_maximize(c1()) == alpha_maximize(c2()));
  }
  SECTION("language preserved across the corpus minima") {
    for (const auto& [name, a] : fixtures::corpus()) {
      INFO(name);
      TNCW m = minimize(a, {true});
      TNCW sat = alpha_maximize(m);
      CHECK(equivalent(sat, m).equivalent);
      for (const auto& w : random_lassos(a.alphabet(), 100, 8, 23))
        CHECK(accepts(sat, w) == accepts(m, w));
    }
  }
}

TEST_CASE("alpha_maximize_homogeneous") {
  SECTION("minimize outputs are already alpha-maximal up to homogeneity") {
    for (const auto& [name, a] : fixtures::corpus()) {
      INFO(name);
      TNCW m = minimize(a, {true});
      CHECK(is_alpha_maximal_up_to_homogeneity(m));
      CHECK(alpha_maximize_homogeneous(m) == m);
    }
  }
  SECTION("c1 saturates back to bs") {
    CHECK(alpha_maximize_homogeneous(c1()) == fixtures::bs());
    CHECK(alpha_maximize_homogeneous(c2()) == fixtures::bs());
  }
  SECTION("single-state minimal automaton is untouched") {
    TNCW one = minimize(fixtures::fm());
    REQUIRE(one.num_states() == 1);
    CHECK(alpha_maximize_homogeneous(one) == one);
  }
  SECTION("rejects non-homogeneous input") {
    TNCW bad = alpha_maximize(fixtures::bs());
    REQUIRE_FALSE(is_alpha_homogeneous(bad));
    CHECK_THROWS_AS(alpha_maximize_homogeneous(bad), std::invalid_argument);
  }
  SECTION("homogeneous saturation preserves language and niceness") {
    int tested = 0;
    for (uint64_t seed = 1; seed <= 40 && tested < 8; ++seed) {
      TNCW a = random_tncw(6, letters_alphabet(2), seed);
      if (!gfg_check(a).first) continue;
      TNCW m = minimize(a);
      TNCW sat = alpha_maximize_homogeneous(m);
      CHECK(is_alpha_homogeneous(sat));
      CHECK(is_alpha_maximal_up_to_homogeneity(sat));
      CHECK(alpha_maximize_homogeneous(sat) == sat);
      CHECK(equivalent(sat, m).equivalent);
      ++tested;
    }
  }
}

TEST_CASE("canonical_relabel") {
  SECTION("undoes a state renaming") {
    TNCW a = fixtures::bs();
    TNCW renamed = relabel_states(a, {1, 0});
    REQUIRE_FALSE(renamed == a);
    CHECK(emit_hoa(canonical_relabel(renamed)) == emit_hoa(canonical_relabel(a)));
  }
  SECTION("maximized c1 and c2 serialize identically") {
    CHECK(emit_hoa(canonical_relabel(alpha_maximize(c1()))) ==
          emit_hoa(canonical_relabel(alpha_maximize(c2()))));
  }
  SECTION("dp1 and dp2 stay different") {
    CHECK(emit_hoa(canonical_relabel(fixtures::dp1())) != emit_hoa(canonical_relabel(fixtures::dp2())));
  }
  SECTION("stable under every relabeling of min3") {
    TNCW base = fixtures::min3();
    std::string expect = emit_hoa(canonical_relabel(base));
    std::vector<StateId> perm{0, 1, 2};
    do {
      CHECK(emit_hoa(canonical_relabel(relabel_states(base, perm))) == expect);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("saturated equivalent minimal variants become isomorphic") {
  // Fig-6 style variants of bs: equal language, nice, minimal, but different
  // alpha sets
  std::vector<TNCW> variants{fixtures::bs(), c1(), c2(), relabel_states(fixtures::bs(), {1, 0})};
  for (const auto& v : variants) {
    REQUIRE(equivalent(v, fixtures::bs()).equivalent);
    REQUIRE(validate_nice(v).nice());
  }
  CHECK_FALSE(isomorphic(c1(), c2()).has_value());
  for (const auto& v : variants)
    for (const auto& w : variants) {
      CHECK(isomorphic(alpha_maximize(v), alpha_maximize(w)).has_value());
      CHECK(safe_isomorphic(v, w).has_value());
    }
  CHECK(has_alpha(alpha_maximize(c1()), 0, "c", 1));
}
