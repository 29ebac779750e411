#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ordac/atoms.hpp"
#include "ordac/codec.hpp"
#include "ordac/compile.hpp"
#include "ordac/enumerate.hpp"
#include "ordac/tree.hpp"
#include "ordac/wmso.hpp"

using namespace ordac;

namespace {

enum ExitCode {
  EXIT_DECIDED = 0,
  EXIT_COUNTEREXAMPLE = 1,
  EXIT_SYNTAX = 2,
  EXIT_RESOURCE = 3,
  EXIT_IO = 4,
};

struct Session {
  std::string theory = "fo";
  int level = 1;
  std::size_t max_states = 1'000'000;
  std::uint64_t seed = 0;
  std::string format = "text";  // text | records
  std::string formula;
  std::string formula_file;

  bool records() const { return format == "records"; }

  CompileOptions options() const {
    CompileOptions o;
    o.level = theory == "wmso" ? level - 1 : level;
    o.max_states = max_states;
    return o;
  }

  std::string input_text() const {
    if (formula_file.empty()) {
      if (!formula.empty()) return formula;
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      return ss.str();
    }
    std::ifstream in(formula_file);
    if (!in) throw std::ios_base::failure("cannot open " + formula_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

void add_common(CLI::App* cmd, Session& s, bool with_formula = true) {
  cmd->add_option("--theory", s.theory)->check(CLI::IsMember({"fo", "wmso"}));
  cmd->add_option("-k,--level", s.level);
  cmd->add_option("--max-states", s.max_states);
  cmd->add_option("--seed", s.seed);
  cmd->add_option("--format", s.format)
      ->check(CLI::IsMember({"text", "records"}));
  if (with_formula) {
    cmd->add_option("formula", s.formula, "formula text");
    cmd->add_option("-f,--file", s.formula_file, "read the formula from a file");
  }
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path);
  out << data;
  if (!out) throw std::ios_base::failure("cannot write " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string set_literal(const std::vector<Ordinal>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += ord_format(set[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// decide

int cmd_decide(Session& s, const std::string& expect) {
  auto start = std::chrono::steady_clock::now();
  CompileStats stats;
  bool verdict;
  if (s.theory == "wmso") {
    WmsoPtr f = parse_wmso(s.input_text());
    if (!f->free_individuals.empty() || !f->free_sets.empty())
      throw UnboundVariable("WMSO sentence has free variables");
    CompileOptions opts = s.options();
    FormulaPtr g = translate(*f, s.level);
    verdict = !is_empty(compile(*g, opts, &stats).automaton);
  } else {
    FormulaPtr f = parse_fo(s.input_text());
    if (!f->free_vars.empty()) {
      std::string names;
      for (const auto& v : f->free_vars)
        names += (names.empty() ? "" : ", ") + v;
      throw UnboundVariable("sentence has free variables: " + names);
    }
    verdict = !is_empty(compile(*f, s.options(), &stats).automaton);
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (s.records()) {
    std::cout << "verdict=" << (verdict ? "true" : "false") << "\n"
              << "peak_states=" << stats.peak_states << "\n";
  } else {
    std::cout << "verdict: " << (verdict ? "true" : "false") << "\n"
              << "peak states: " << stats.peak_states << "\n"
              << "time: " << ms << " ms\n";
  }
  if (!expect.empty() && expect != (verdict ? "true" : "false"))
    return EXIT_COUNTEREXAMPLE;
  return EXIT_DECIDED;
}

// ---------------------------------------------------------------------------
// witness

int cmd_witness(Session& s, const std::string& expect) {
  bool sat;
  std::vector<std::pair<std::string, std::string>> bindings;
  if (s.theory == "wmso") {
    WmsoPtr f = parse_wmso(s.input_text());
    auto w = find_witness_wmso(*f, s.level, s.options());
    sat = w.has_value();
    if (sat) {
      for (const auto& [x, val] : w->individuals)
        bindings.emplace_back(x, ord_format(val));
      for (const auto& [X, set] : w->sets)
        bindings.emplace_back(X, set_literal(set));
    }
  } else {
    FormulaPtr f = parse_fo(s.input_text());
    auto w = find_witness(*f, s.options());
    sat = w.has_value();
    if (sat)
      for (const auto& [x, val] : *w) bindings.emplace_back(x, ord_format(val));
  }
  if (s.records()) {
    std::cout << "sat=" << (sat ? "true" : "false") << "\n";
    for (const auto& [name, val] : bindings)
      std::cout << name << "=" << val << "\n";
  } else if (sat) {
    for (const auto& [name, val] : bindings)
      std::cout << name << " = " << val << "\n";
  } else {
    std::cout << "UNSAT\n";
  }
  if (!expect.empty() && expect != (sat ? "sat" : "unsat"))
    return EXIT_COUNTEREXAMPLE;
  return EXIT_DECIDED;
}

// ---------------------------------------------------------------------------
// compile

int cmd_compile(Session& s, const std::string& out_path,
                const std::string& dot_path) {
  FormulaPtr f = s.theory == "wmso" ? translate(*parse_wmso(s.input_text()), s.level)
                                    : parse_fo(s.input_text());
  Compiled c = compile(*f, s.options());
  std::string text = serialize(c.automaton);
  std::string header = "# tracks:";
  for (const auto& v : c.order) header += " " + v;
  text = header + "\n" + text;
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  if (!dot_path.empty()) write_file(dot_path, automaton_to_dot(c.automaton));
  return EXIT_DECIDED;
}

// ---------------------------------------------------------------------------
// run

int cmd_run(Session& s, const std::string& automaton_path,
            const std::string& tree_path, const std::string& expect) {
  std::string text = read_file(automaton_path);
  // skip the optional "# tracks" header
  if (text.rfind("# ", 0) == 0) text = text.substr(text.find('\n') + 1);
  TreeAutomaton a = deserialize(text);
  LabeledTree t = LabeledTree::from_sexpr(read_file(tree_path));
  bool acc = accepts(a, t);
  std::cout << (s.records() ? "accepts=" : "accepts: ")
            << (acc ? "true" : "false") << "\n";
  if (!expect.empty() && expect != (acc ? "true" : "false"))
    return EXIT_COUNTEREXAMPLE;
  return EXIT_DECIDED;
}

// ---------------------------------------------------------------------------
// encode / decode

int cmd_encode(Session& s, const std::string& literal,
               const std::string& out_path, const std::string& dot_path) {
  LabeledTree t = encode(ord_parse(literal), s.level);
  std::string text = t.to_sexpr() + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  if (!dot_path.empty()) write_file(dot_path, t.to_dot());
  return EXIT_DECIDED;
}

int cmd_decode(Session& s, const std::string& tree_path) {
  std::string text =
      tree_path.empty() ? [&] {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
      }()
                        : read_file(tree_path);
  std::cout << ord_format(decode(LabeledTree::from_sexpr(text), s.level))
            << "\n";
  return EXIT_DECIDED;
}

// ---------------------------------------------------------------------------
// oracle-sweep

struct SweepReport {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::string first;

  void add(bool ok, const std::string& what) {
    ++checks;
    if (!ok && mismatches++ == 0) first = what;
  }
};

std::vector<Ordinal> perturbations(const Ordinal& z, int level) {
  std::vector<Ordinal> cands;
  if (level == 0) {
    cands = {ord_add(z, Ordinal(1)), ord_add(z, Ordinal(2)),
             ord_add(z, Ordinal(3))};
  } else {
    const Ordinal w = Ordinal::omega();
    cands = {ord_add(z, Ordinal(1)), ord_add(z, w),
             ord_add(z, omega_power(Ordinal(2))), ord_add(Ordinal(1), z),
             ord_add(w, z)};
  }
  std::vector<Ordinal> out;
  for (const auto& c : cands) {
    if (c == z) continue;
    if (std::find(out.begin(), out.end(), c) != out.end()) continue;
    out.push_back(c);
    if (out.size() == 3) break;
  }
  return out;
}

int cmd_oracle_sweep(Session& s, int degree, int coeff, int samples,
                     bool inject_bug) {
  const int k = s.level;
  std::vector<Ordinal> vals =
      ordinal_enumeration(sweep_exponents(k, degree), Nat(coeff));
  SweepReport rep;

  TreeAutomaton add = addition_automaton(k);
  if (inject_bug) {
    // mutation check: drop the carry-creating transitions for (1,1,0)
    std::erase_if(add.transitions,
                  [](const TreeAutomaton::Transition& t) { return t.sym == "110"; });
  }
  TreeAutomaton lt = less_automaton(k);
  TreeAutomaton le = less_equal_automaton(k);
  TreeAutomaton eq = equal_automaton(k);
  TreeAutomaton er = erel_automaton(k);

  for (const auto& x : vals)
    for (const auto& y : vals) {
      Ordinal z = ord_add(x, y);
      const std::string pair = ord_format(x) + " , " + ord_format(y);
      rep.add(accepts(add, convolve({encode(x, k), encode(y, k), encode(z, k)})),
              "addition accepts " + pair);
      for (const auto& zp : perturbations(z, k))
        rep.add(!accepts(add,
                         convolve({encode(x, k), encode(y, k), encode(zp, k)})),
                "addition rejects " + pair + " -> " + ord_format(zp));
      LabeledTree c2 = convolve({encode(x, k), encode(y, k)});
      Order o = ord_cmp(x, y);
      rep.add(accepts(lt, c2) == (o == Order::LT), "lt " + pair);
      rep.add(accepts(le, c2) == (o != Order::GT), "leq " + pair);
      rep.add(accepts(eq, c2) == (o == Order::EQ), "eq " + pair);
      rep.add(accepts(er, c2) == e_relation(x, y), "erel " + pair);
    }

  // quantifier-free templates vs the semantic evaluator
  const char* templates[] = {
      "x + y = z", "x < y | y <= x", "x = y & y = z -> x = z",
      "x < y -> !(y < x)", "x + y = z -> x <= z", "E(x, y) -> 0 < x",
      "x <= y & y <= x <-> x = y"};
  CompileOptions opts = s.options();
  std::mt19937_64 rng(s.seed);
  for (const char* tpl : templates) {
    FormulaPtr f = parse_fo(tpl);
    Compiled c = compile(*f, opts);
    for (int i = 0; i < samples; ++i) {
      Valuation v;
      std::vector<LabeledTree> tracks;
      for (const auto& var : c.order) {
        const Ordinal& val = vals[rng() % vals.size()];
        v[var] = val;
        tracks.push_back(encode(val, k));
      }
      Tri truth = eval_oracle(*f, v, {});
      if (truth == Tri::Unknown) continue;
      bool acc = accepts(c.automaton, convolve(tracks));
      std::string what = std::string("template '") + tpl + "' at";
      for (const auto& [var, val] : v) what += " " + var + "=" + ord_format(val);
      rep.add(acc == (truth == Tri::True), what);
    }
  }

  if (s.records()) {
    std::cout << "checks=" << rep.checks << "\n"
              << "mismatches=" << rep.mismatches << "\n";
    if (rep.mismatches) std::cout << "first=" << rep.first << "\n";
  } else {
    std::cout << "checks: " << rep.checks << "\n"
              << "mismatches: " << rep.mismatches << "\n";
    if (rep.mismatches) std::cout << "first counterexample: " << rep.first << "\n";
  }
  return rep.mismatches ? EXIT_COUNTEREXAMPLE : EXIT_DECIDED;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for ordinal arithmetic via tree automata"};
  app.require_subcommand(1);

  Session s;
  std::string expect, out_path, dot_path, automaton_path, tree_path, literal;
  int degree = 2, coeff = 3, samples = 50;
  bool inject_bug = false;

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide a closed sentence");
  add_common(decide_cmd, s);
  decide_cmd->add_option("--expect", expect)
      ->check(CLI::IsMember({"true", "false"}));

  CLI::App* witness_cmd = app.add_subcommand("witness", "find a satisfying valuation");
  add_common(witness_cmd, s);
  witness_cmd->add_option("--expect", expect)
      ->check(CLI::IsMember({"sat", "unsat"}));

  CLI::App* compile_cmd = app.add_subcommand("compile", "compile a formula to an automaton");
  add_common(compile_cmd, s);
  compile_cmd->add_option("-o,--out", out_path);
  compile_cmd->add_option("--dot", dot_path);

  CLI::App* run_cmd = app.add_subcommand("run", "run a serialized automaton on a tree");
  add_common(run_cmd, s, false);
  run_cmd->add_option("automaton", automaton_path)->required();
  run_cmd->add_option("tree", tree_path)->required();
  run_cmd->add_option("--expect", expect)
      ->check(CLI::IsMember({"true", "false"}));

  CLI::App* encode_cmd = app.add_subcommand("encode", "encode an ordinal literal as a tree");
  add_common(encode_cmd, s, false);
  encode_cmd->add_option("ordinal", literal)->required();
  encode_cmd->add_option("-o,--out", out_path);
  encode_cmd->add_option("--dot", dot_path);

  CLI::App* decode_cmd = app.add_subcommand("decode", "decode a tree file to an ordinal");
  add_common(decode_cmd, s, false);
  decode_cmd->add_option("tree", tree_path);

  CLI::App* sweep_cmd = app.add_subcommand("oracle-sweep", "differential test against ordinal-core");
  add_common(sweep_cmd, s, false);
  sweep_cmd->add_option("--degree", degree);
  sweep_cmd->add_option("--coeff", coeff);
  sweep_cmd->add_option("--samples", samples);
  sweep_cmd->add_flag("--inject-bug", inject_bug,
                      "mutate the addition automaton (self-test)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide_cmd->parsed()) return cmd_decide(s, expect);
    if (witness_cmd->parsed()) return cmd_witness(s, expect);
    if (compile_cmd->parsed()) return cmd_compile(s, out_path, dot_path);
    if (run_cmd->parsed()) return cmd_run(s, automaton_path, tree_path, expect);
    if (encode_cmd->parsed()) return cmd_encode(s, literal, out_path, dot_path);
    if (decode_cmd->parsed()) return cmd_decode(s, tree_path);
    if (sweep_cmd->parsed())
      return cmd_oracle_sweep(s, degree, coeff, samples, inject_bug);
  } catch (const ResourceBudgetExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return EXIT_RESOURCE;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return EXIT_IO;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_SYNTAX;
  }
  return EXIT_DECIDED;
}
