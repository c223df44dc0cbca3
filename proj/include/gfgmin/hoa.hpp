#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gfgmin/core.hpp"

namespace gfgmin {

/// Error raised on malformed input, with 1-based line/column of the offender.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

struct ParseOptions {
  /// Complete non-total automata with a rejecting sink instead of erroring.
  bool complete_with_sink = false;
};

namespace detail {

struct Tok {
  std::string text;
  int col = 0;
};

inline std::vector<Tok> tokenize_line(const std::string& line) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') { ++i; continue; }
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return toks;
}

inline int parse_int(const Tok& t, int line_no, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(t.text, &pos);
    if (pos != t.text.size() || v < 0)
      throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line_no, t.col, std::string("expected non-negative integer for ") + what + ", got '" + t.text + "'");
  }
}

}  // namespace detail

/// Parses the HOA-v1 subset used by this tool:
///   HOA: v1
///   States: <n>
///   Start: <i>
///   acc-name: co-Buchi
///   Acceptance: 1 Fin(0)
///   symbols: <s0> <s1> ...        (also accepted: "Alphabet:", "AP: n "s0" ...",
///                                  or one "Alias: @name <index>" line per symbol)
///   --BODY--
///   State: <q>
///   [<symbol-index>] <dst>        (with trailing "{0}" for alpha-transitions)
///   --END--
/// Unknown header lines are ignored. Input bytes are treated as 8-bit clean;
/// CRLF line endings are accepted.
inline TNCW parse_hoa(const std::string& text, const ParseOptions& opts = {}) {
  using detail::Tok;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
  }

  bool saw_hoa = false, saw_body = false, saw_end = false;
  std::optional<int> num_states;
  std::optional<int> start;
  bool acceptance_ok = false;
  std::vector<std::string> symbols;
  std::vector<std::pair<int, std::string>> alias_symbols;
  std::vector<Transition> transitions;
  std::optional<StateId> cur_state;

  int line_no = 0;
  for (const auto& line : lines) {
    ++line_no;
    auto toks = detail::tokenize_line(line);
    if (toks.empty())
      continue;
    const Tok& head = toks[0];

    if (!saw_body) {
      if (head.text == "--BODY--") {
        if (!saw_hoa) throw ParseError(line_no, head.col, "missing 'HOA: v1' header");
        if (!num_states) throw ParseError(line_no, head.col, "missing 'States:' header");
        if (!start) throw ParseError(line_no, head.col, "missing 'Start:' header");
        if (!acceptance_ok) throw ParseError(line_no, head.col, "missing 'Acceptance: 1 Fin(0)' header");
        if (!alias_symbols.empty()) {
          if (!symbols.empty())
            throw ParseError(line_no, head.col, "both Alias: and an explicit symbol list given");
          std::sort(alias_symbols.begin(), alias_symbols.end());
          for (size_t i = 0; i < alias_symbols.size(); ++i) {
            if (alias_symbols[i].first != static_cast<int>(i))
              throw ParseError(line_no, head.col, "Alias: symbol indices must cover 0..k-1");
            symbols.push_back(alias_symbols[i].second);
          }
        }
        if (symbols.empty())
          throw ParseError(line_no, head.col, "no alphabet declared (use 'symbols:', 'Alphabet:', 'AP:' or 'Alias:')");
        saw_body = true;
        continue;
      }
      if (head.text == "HOA:") {
        if (toks.size() != 2 || toks[1].text != "v1")
          throw ParseError(line_no, head.col, "expected 'HOA: v1'");
        saw_hoa = true;
      } else if (head.text == "States:") {
        if (toks.size() != 2) throw ParseError(line_no, head.col, "expected 'States: <n>'");
        num_states = detail::parse_int(toks[1], line_no, "States:");
      } else if (head.text == "Start:") {
        if (start) throw ParseError(line_no, head.col, "multiple 'Start:' headers (one initial state supported)");
        if (toks.size() != 2) throw ParseError(line_no, head.col, "expected 'Start: <state>'");
        start = detail::parse_int(toks[1], line_no, "Start:");
      } else if (head.text == "acc-name:") {
        if (toks.size() != 2 || toks[1].text != "co-Buchi")
          throw ParseError(line_no, head.col, "non-co-Buchi acceptance: acc-name must be 'co-Buchi'");
      } else if (head.text == "Acceptance:") {
        if (toks.size() != 3 || toks[1].text != "1" || toks[2].text != "Fin(0)")
          throw ParseError(line_no, head.col, "non-co-Buchi acceptance: expected 'Acceptance: 1 Fin(0)'");
        acceptance_ok = true;
      } else if (head.text == "symbols:" || head.text == "Alphabet:") {
        for (size_t i = 1; i < toks.size(); ++i)
          symbols.push_back(toks[i].text);
      } else if (head.text == "AP:") {
        if (toks.size() < 2) throw ParseError(line_no, head.col, "expected 'AP: <n> \"s\"...'");
        int n = detail::parse_int(toks[1], line_no, "AP:");
        if (static_cast<int>(toks.size()) != n + 2)
          throw ParseError(line_no, head.col, "AP: count does not match listed names");
        for (size_t i = 2; i < toks.size(); ++i) {
          std::string s = toks[i].text;
          if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
            s = s.substr(1, s.size() - 2);
          symbols.push_back(s);
        }
      } else if (head.text == "Alias:") {
        if (toks.size() != 3 || toks[1].text.size() < 2 || toks[1].text[0] != '@')
          throw ParseError(line_no, head.col, "expected 'Alias: @name <symbol-index>'");
        alias_symbols.emplace_back(detail::parse_int(toks[2], line_no, "Alias:"), toks[1].text.substr(1));
      }
      // other headers are ignored
      continue;
    }

    if (head.text == "--END--") {
      saw_end = true;
      break;
    }
    if (head.text == "State:") {
      if (toks.size() != 2) throw ParseError(line_no, head.col, "expected 'State: <id>'");
      int q = detail::parse_int(toks[1], line_no, "State:");
      if (q >= *num_states) throw ParseError(line_no, toks[1].col, "state id out of range");
      cur_state = q;
      continue;
    }
    if (!head.text.empty() && head.text.front() == '[') {
      if (!cur_state)
        throw ParseError(line_no, head.col, "edge before any 'State:' line");
      if (head.text.back() != ']')
        throw ParseError(line_no, head.col, "malformed symbol index, expected '[<i>]'");
      Tok idx{head.text.substr(1, head.text.size() - 2), head.col + 1};
      int sym = detail::parse_int(idx, line_no, "symbol index");
      if (sym >= static_cast<int>(symbols.size()))
        throw ParseError(line_no, head.col, "symbol index out of range");
      if (toks.size() < 2 || toks.size() > 3)
        throw ParseError(line_no, head.col, "expected '[<i>] <dst>' or '[<i>] <dst> {0}'");
      int dst = detail::parse_int(toks[1], line_no, "destination");
      if (dst >= *num_states) throw ParseError(line_no, toks[1].col, "destination state out of range");
      bool in_alpha = false;
      if (toks.size() == 3) {
        if (toks[2].text != "{0}")
          throw ParseError(line_no, toks[2].col, "only acceptance mark '{0}' is supported");
        in_alpha = true;
      }
      for (const auto& t : transitions)
        if (t.src == *cur_state && t.symbol == sym && t.dst == dst)
          throw ParseError(line_no, head.col, "duplicate transition triple");
      transitions.push_back({*cur_state, sym, dst, in_alpha});
      continue;
    }
    throw ParseError(line_no, head.col, "unexpected token '" + head.text + "' in body");
  }

  if (!saw_body)
    throw ParseError(line_no, 1, "missing '--BODY--'");
  if (!saw_end)
    throw ParseError(line_no, 1, "missing '--END--'");
  if (*start >= *num_states)
    throw ParseError(1, 1, "Start: state out of range");

  TNCW a(Alphabet(symbols), *num_states, *start, std::move(transitions));
  if (!is_total(a)) {
    if (!opts.complete_with_sink)
      throw ParseError(line_no, 1, "automaton is not total (pass the sink-completion option to complete it)");
    a = ensure_total(a);
  }
  return a;
}

/// Canonical serialization: fixed header order, states in id order, edges per
/// state in (symbol index, dst id) order, '\n' line endings. Structurally
/// equal automata produce identical bytes, and parse_hoa(emit_hoa(a)) == a.
inline std::string emit_hoa(const TNCW& a) {
  std::ostringstream out;
  out << "HOA: v1\n";
  out << "States: " << a.num_states() << "\n";
  out << "Start: " << a.initial() << "\n";
  out << "acc-name: co-Buchi\n";
  out << "Acceptance: 1 Fin(0)\n";
  out << "symbols:";
  for (const auto& s : a.alphabet().symbols())
    out << " " << s;
  out << "\n--BODY--\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "State: " << q << "\n";
    for (SymbolId s = 0; s < a.num_symbols(); ++s)
      for (const auto& t : a.out(q, s)) {
        out << "[" << s << "] " << t.dst;
        if (t.in_alpha)
          out << " {0}";
        out << "\n";
      }
  }
  out << "--END--\n";
  return out.str();
}

/// Graphviz rendering; alpha-transitions are dashed.
inline std::string to_dot(const TNCW& a, const std::string& name = "tncw") {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  init [shape=point];\n";
  out << "  init -> " << a.initial() << ";\n";
  for (const auto& t : a.transitions()) {
    out << "  " << t.src << " -> " << t.dst << " [label=\"" << a.alphabet().name(t.symbol) << "\"";
    if (t.in_alpha)
      out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gfgmin
