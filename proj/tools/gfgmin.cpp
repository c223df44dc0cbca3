// gfgmin: minimize and canonize good-for-games transition-based co-Buchi
// automata, plus the semantic checks (equivalence, isomorphism, GFGness)
// backing them. Exit codes: 0 success / positive decision, 1 negative
// decision (equiv, iso), 2 usage error, 3 parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gfgmin/gfgmin.hpp"

namespace {

using namespace gfgmin;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TNCW load(const std::string& path, bool sink) {
  ParseOptions opts;
  opts.complete_with_sink = sink;
  return parse_hoa(read_file(path), opts);
}

void write_output(const TNCW& a, const std::string& out_path, bool dot) {
  std::string bytes = dot ? to_dot(a) : emit_hoa(a);
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + out_path);
    out << bytes;
  }
}

uint64_t default_seed() {
  if (const char* env = std::getenv("GFGMIN_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

void print_flag(const char* key, bool v) { std::cout << key << "=" << (v ? "true" : "false") << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimization and canonization of GFG transition-based co-Buchi automata"};
  app.require_subcommand(1);

  std::string in_path, in_path2, out_path, mode;
  bool sink = false, determinize = false, dot = false, safe_only = false, gen_det = false;
  int lassos = 0, gen_states = 4, gen_symbols = 2;
  uint64_t seed = default_seed();

  auto* cmd_min = app.add_subcommand("minimize", "minimize a GFG-tNCW");
  cmd_min->add_option("input", in_path)->required();
  cmd_min->add_option("-o,--output", out_path);
  cmd_min->add_flag("--sink", sink, "complete non-total input with a rejecting sink");
  cmd_min->add_flag("--determinize", determinize,
                    "determinize first when the input is not safe-deterministic or not GFG "
                    "(the result is still a minimal GFG-tNCW for the language)");
  cmd_min->add_flag("--dot", dot, "emit graphviz instead of HOA");

  auto* cmd_can = app.add_subcommand("canonize", "canonical minimal form (alpha-saturated, relabeled)");
  cmd_can->add_option("input", in_path)->required();
  cmd_can->add_option("--mode", mode, "max | hom")->required()->check(CLI::IsMember({"max", "hom"}));
  cmd_can->add_option("-o,--output", out_path);
  cmd_can->add_flag("--sink", sink);
  cmd_can->add_flag("--determinize", determinize);
  cmd_can->add_flag("--dot", dot);

  auto* cmd_val = app.add_subcommand("validate", "print structural and niceness flags");
  cmd_val->add_option("input", in_path)->required();
  cmd_val->add_flag("--sink", sink);

  auto* cmd_eq = app.add_subcommand("equiv", "decide language equivalence");
  cmd_eq->add_option("a", in_path)->required();
  cmd_eq->add_option("b", in_path2)->required();
  cmd_eq->add_option("--lassos", lassos, "additional random-lasso differential checks");
  cmd_eq->add_option("--seed", seed);
  cmd_eq->add_flag("--sink", sink);

  auto* cmd_iso = app.add_subcommand("iso", "decide (safe) isomorphism, print the bijection");
  cmd_iso->add_option("a", in_path)->required();
  cmd_iso->add_option("b", in_path2)->required();
  cmd_iso->add_flag("--safe", safe_only, "only require the non-alpha skeletons to match");
  cmd_iso->add_flag("--sink", sink);

  auto* cmd_det = app.add_subcommand("determinize", "breakpoint determinization");
  cmd_det->add_option("input", in_path)->required();
  cmd_det->add_option("-o,--output", out_path);
  cmd_det->add_flag("--sink", sink);
  cmd_det->add_flag("--dot", dot);

  auto* cmd_info = app.add_subcommand("info", "sizes and safe-component summary");
  cmd_info->add_option("input", in_path)->required();
  cmd_info->add_flag("--sink", sink);
  cmd_info->add_flag("--dot", dot, "print graphviz instead of the summary");

  auto* cmd_gen = app.add_subcommand("gen", "generate a random total tNCW (test harness)");
  cmd_gen->add_option("--states", gen_states)->check(CLI::PositiveNumber);
  cmd_gen->add_option("--symbols", gen_symbols)->check(CLI::Range(1, 26));
  cmd_gen->add_option("--seed", seed);
  cmd_gen->add_flag("--deterministic", gen_det);
  cmd_gen->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_min->parsed()) {
      TNCW a = load(in_path, sink);
      TNCW m = minimize(a, {determinize});
      std::cout << a.num_states() << " -> " << m.num_states() << " states\n";
      write_output(m, out_path, dot);
      return 0;
    }
    if (cmd_can->parsed()) {
      TNCW a = load(in_path, sink);
      TNCW m = minimize(a, {determinize});
      TNCW saturated = mode == "max" ? alpha_maximize(m) : alpha_maximize_homogeneous(m);
      write_output(canonical_relabel(saturated), out_path, dot);
      return 0;
    }
    if (cmd_val->parsed()) {
      TNCW a = load(in_path, sink);
      StructuralReport sr = structural_report(a);
      print_flag("total", sr.total);
      print_flag("all_reachable", sr.all_reachable);
      print_flag("deterministic", sr.deterministic);
      print_flag("safe_deterministic", sr.safe_deterministic);
      print_flag("alpha_homogeneous", sr.alpha_homogeneous);
      print_flag("normal", sr.normal);
      NicenessReport nr = validate_nice(a);
      print_flag("semantically_deterministic", nr.semantically_deterministic);
      print_flag("all_states_gfg", *nr.all_states_gfg);
      print_flag("nice", nr.nice());
      return 0;
    }
    if (cmd_eq->parsed()) {
      TNCW a = load(in_path, sink);
      TNCW b = load(in_path2, sink);
      if (!(a.alphabet() == b.alphabet())) {
        std::cout << "not equivalent: different alphabets\n";
        return 1;
      }
      EquivResult res = equivalent(a, b);
      if (!res.equivalent) {
        std::cout << "not equivalent; distinguishing lasso " << res.witness->str(a.alphabet())
                  << " accepted only by " << (res.witness_in_first ? in_path : in_path2) << "\n";
        return 1;
      }
      for (const auto& w : random_lassos(a.alphabet(), lassos, 12, seed))
        if (accepts(a, w) != accepts(b, w)) {
          std::cout << "not equivalent; lasso " << w.str(a.alphabet()) << " disagrees\n";
          return 1;
        }
      std::cout << "equivalent\n";
      return 0;
    }
    if (cmd_iso->parsed()) {
      TNCW a = load(in_path, sink);
      TNCW b = load(in_path2, sink);
      std::optional<Bijection> k = safe_only ? safe_isomorphic(a, b) : isomorphic(a, b);
      if (!k) {
        std::cout << (safe_only ? "not safe-isomorphic\n" : "not isomorphic\n");
        return 1;
      }
      for (size_t q = 0; q < k->forward.size(); ++q)
        std::cout << q << "->" << k->forward[q] << "\n";
      return 0;
    }
    if (cmd_det->parsed()) {
      TNCW a = load(in_path, sink);
      write_output(breakpoint_determinize(a), out_path, dot);
      return 0;
    }
    if (cmd_info->parsed()) {
      TNCW a = load(in_path, sink);
      if (dot) {
        write_output(a, out_path, true);
        return 0;
      }
      SafeDecomposition d = safe_components(a);
      std::cout << "states=" << a.num_states() << "\n";
      std::cout << "transitions=" << a.num_transitions() << "\n";
      std::cout << "alpha_transitions=" << a.num_alpha_transitions() << "\n";
      std::cout << "safe_components=" << d.num_components() << "\n";
      std::cout << "component_sizes=";
      for (int c = 0; c < d.num_components(); ++c)
        std::cout << (c ? " " : "") << d.components[static_cast<size_t>(c)].size();
      std::cout << "\n";
      return 0;
    }
    if (cmd_gen->parsed()) {
      TNCW a = random_tncw(gen_states, letters_alphabet(gen_symbols), seed, {gen_det});
      write_output(a, out_path, false);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
