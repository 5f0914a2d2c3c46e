// Command-line front end: braid-word queries (projection, minimality,
// boundary sets, factorization), certified reduction to minimal words,
// monoid equality, coherence of diagram cells, confluence reports, and
// numerical verification of the cube homotopies.  Every verb prints a plain
// text answer by default or a structured envelope with --json.
//
// Exit codes: 0 = success / positive answer, 1 = well-formed negative
// answer, 2 = malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braid/cubes.hpp"
#include "braid/errors.hpp"
#include "braid/marking.hpp"
#include "braid/monoid.hpp"
#include "braid/rewrite.hpp"
#include "braid/term.hpp"

using json = nlohmann::ordered_json;
using namespace braid;

namespace {

std::string set_text(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int i : s) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

void emit(bool as_json, const json& envelope, const std::string& text) {
  if (as_json) {
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json confluence_json(const ConfluenceReport& rep) {
  json branches = json::array();
  for (const ConfluenceBranch& b : rep.branches) {
    branches.push_back({{"step", to_text(b.first)},
                        {"target", to_text(b.target)},
                        {"v", b.v_count}});
  }
  return {{"word", to_text(rep.word)},
          {"redexes", rep.branches.size()},
          {"branches", branches},
          {"v_count", rep.v_count},
          {"targets_equal", rep.targets_equal},
          {"v_counts_equal", rep.v_counts_equal},
          {"diamonds_ok", rep.diamonds_ok},
          {"pairs_checked", rep.pairs_checked},
          {"partial", rep.partial},
          {"confluent", rep.confluent()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive braid rewriting and coherence toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a structured JSON envelope");

  std::string word_arg, word_arg2, path_arg, trace_arg;
  int budget = kDefaultBudget;
  int grid = 64;
  double side = 0;
  double tol = 1e-9;

  CLI::App* perm = app.add_subcommand("perm", "permutation of a braid word");
  perm->add_option("word", word_arg, "braid word, e.g. \"3: s1 s2 s1\"")
      ->required();

  CLI::App* minimal = app.add_subcommand("minimal", "is the word minimal?");
  minimal->add_option("word", word_arg)->required();

  CLI::App* startset =
      app.add_subcommand("startset", "generators that can start the braid");
  startset->add_option("word", word_arg)->required();

  CLI::App* finishset =
      app.add_subcommand("finishset", "generators that can end the braid");
  finishset->add_option("word", word_arg)->required();

  CLI::App* factor =
      app.add_subcommand("factor", "left-weighted factorization tau * omega");
  factor->add_option("word", word_arg)->required();

  CLI::App* reduce =
      app.add_subcommand("reduce", "certified reduction to a minimal word");
  reduce->add_option("word", word_arg)->required();
  reduce->add_option("--trace", trace_arg,
                     "write the reduction trace to PATH, or '-' for stdout");
  reduce->add_option("--budget", budget, "step budget");

  CLI::App* eq = app.add_subcommand("eq", "equality in the positive monoid");
  eq->add_option("a", word_arg)->required();
  eq->add_option("b", word_arg2)->required();

  CLI::App* coherent_cmd =
      app.add_subcommand("coherent", "decide coherence of two parallel cells");
  coherent_cmd->add_option("f", word_arg)->required();
  coherent_cmd->add_option("g", word_arg2)->required();
  coherent_cmd->add_option("--budget", budget, "step budget");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "replay a reduction trace");
  verify_cmd->add_option("path", path_arg, "trace file, or '-' for stdin")
      ->required();

  CLI::App* confluence_cmd =
      app.add_subcommand("confluence", "one-step branch rejoining report");
  confluence_cmd->add_option("word", word_arg)->required();
  confluence_cmd->add_option("--budget", budget, "step budget");

  CLI::App* cubes_cmd =
      app.add_subcommand("cubes", "verify a cube configuration homotopy");
  cubes_cmd->add_option("id", path_arg, "path id, e.g. m, Ra_Rb, K, Phi")
      ->required();
  cubes_cmd->add_option("--grid", grid, "samples per parameter axis");
  cubes_cmd->add_option("--side", side, "full cube side length");
  cubes_cmd->add_option("--tol", tol, "comparison tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (perm->parsed()) {
      BraidWord w = word_from_text(word_arg);
      std::string text = to_text(underlying_permutation(w));
      emit(as_json,
           {{"verb", "perm"}, {"input", word_arg}, {"result", text}},
           text + "\n");
      return 0;
    }

    if (minimal->parsed()) {
      bool ok = is_minimal(word_from_text(word_arg));
      emit(as_json, {{"verb", "minimal"}, {"input", word_arg}, {"result", ok}},
           ok ? "minimal\n" : "not minimal\n");
      return ok ? 0 : 1;
    }

    if (startset->parsed() || finishset->parsed()) {
      bool start = startset->parsed();
      BraidWord w = word_from_text(word_arg);
      std::string text = set_text(start ? starting_set(w) : finishing_set(w));
      emit(as_json,
           {{"verb", start ? "startset" : "finishset"},
            {"input", word_arg},
            {"result", text}},
           text + "\n");
      return 0;
    }

    if (factor->parsed()) {
      auto [tau, omega] = left_weighted_factorization(word_from_text(word_arg));
      emit(as_json,
           {{"verb", "factor"},
            {"input", word_arg},
            {"result", {{"tau", to_text(tau)}, {"omega", to_text(omega)}}}},
           "tau: " + to_text(tau) + "\nomega: " + to_text(omega) + "\n");
      return 0;
    }

    if (reduce->parsed()) {
      ReductionTrace t = complete_reduce(word_from_text(word_arg), budget);
      std::string target = to_text(t.target);
      std::string trace_text = to_text(t);
      if (!trace_arg.empty() && trace_arg != "-") {
        std::ofstream out(trace_arg);
        if (!out) throw Error("cannot write trace file: " + trace_arg);
        out << trace_text;
      }
      json result = {{"target", target}};
      if (!trace_arg.empty()) result["trace"] = trace_text;
      std::string text = trace_arg == "-" ? trace_text : target + "\n";
      emit(as_json,
           {{"verb", "reduce"}, {"input", word_arg}, {"result", result}},
           text);
      return 0;
    }

    if (eq->parsed()) {
      bool equal = monoid_equal(word_from_text(word_arg),
                                word_from_text(word_arg2));
      emit(as_json,
           {{"verb", "eq"},
            {"input", {word_arg, word_arg2}},
            {"result", equal}},
           equal ? "equal\n" : "not equal\n");
      return equal ? 0 : 1;
    }

    if (coherent_cmd->parsed()) {
      CellPtr f = cell_from_text(word_arg);
      CellPtr g = cell_from_text(word_arg2);
      auto cert = coherent(f, g, budget);
      if (!cert) {
        emit(as_json,
             {{"verb", "coherent"},
              {"input", {word_arg, word_arg2}},
              {"result",
               {{"coherent", false}, {"reason", "permutations differ"}}}},
             "NOT COHERENT: permutations differ\n");
        return 1;
      }
      emit(as_json,
           {{"verb", "coherent"},
            {"input", {word_arg, word_arg2}},
            {"result",
             {{"coherent", true},
              {"common", to_text(cert->common_target)},
              {"trace_f", to_text(cert->trace_f)},
              {"trace_g", to_text(cert->trace_g)}}}},
           "COHERENT\n" + to_text(*cert));
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::string text;
      if (path_arg == "-") {
        text = read_stream(std::cin);
      } else {
        std::ifstream in(path_arg);
        if (!in) throw Error("cannot read trace file: " + path_arg);
        text = read_stream(in);
      }
      ReductionTrace t = trace_from_text(text);
      TraceCheck check = verify_trace_detail(t);
      emit(as_json,
           {{"verb", "verify"},
            {"input", path_arg},
            {"result", {{"ok", check.ok}, {"reason", check.reason}}}},
           check.ok ? "OK\n" : "FAIL " + check.reason + "\n");
      return check.ok ? 0 : 1;
    }

    if (confluence_cmd->parsed()) {
      ConfluenceReport rep =
          check_confluence(word_from_text(word_arg), budget);
      emit(as_json,
           {{"verb", "confluence"},
            {"input", word_arg},
            {"result", confluence_json(rep)}},
           to_text(rep));
      return rep.confluent() ? 0 : 1;
    }

    if (cubes_cmd->parsed()) {
      HomotopyReport rep = verify_homotopy(path_from_text(path_arg), grid,
                                           side, tol);
      std::string text = to_text(rep);
      json lines = json::array();
      std::istringstream split(text);
      for (std::string line; std::getline(split, line);) lines.push_back(line);
      emit(as_json,
           {{"verb", "cubes"},
            {"input", path_arg},
            {"result",
             {{"id", to_text(rep.id)},
              {"grid", rep.grid},
              {"side", rep.side},
              {"tol", rep.tol},
              {"all_pass", rep.all_pass},
              {"min_sep", rep.min_sep},
              {"lines", lines}}}},
           text);
      return rep.all_pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
