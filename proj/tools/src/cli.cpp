#include "puiseux_tools/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "puiseux/dsl/eval.hpp"
#include "puiseux/dsl/format.hpp"
#include "puiseux/dsl/parser.hpp"
#include "puiseux/error.hpp"
#include "puiseux_tools/paper.hpp"

namespace puiseux::tools {
namespace {

struct Flags {
  bool json = false;
  std::uint64_t window = 10;
  std::uint64_t den_bound = 12;
  std::int64_t box = 10;
  std::uint64_t budget = 10'000'000;
  CLI::Option* window_opt = nullptr;
  CLI::Option* den_bound_opt = nullptr;
  CLI::Option* box_opt = nullptr;
};

void add_flags(CLI::App& app, Flags& f) {
  app.add_flag("--json", f.json, "Emit JSON");
  f.window_opt = app.add_option("--window", f.window, "Truncation size K")->check(CLI::PositiveNumber);
  f.den_bound_opt =
      app.add_option("--den-bound", f.den_bound, "Denominator bound D")->check(CLI::PositiveNumber);
  f.box_opt = app.add_option("--box", f.box, "Lattice box half-width B")->check(CLI::PositiveNumber);
  app.add_option("--budget", f.budget, "Search node budget")->check(CLI::PositiveNumber);
}

// Bounds reach the evaluator only when given; the DSL never defaults them.
dsl::EvalOptions eval_options(const Flags& f) {
  dsl::EvalOptions o;
  if (f.window_opt->count()) o.window = f.window;
  if (f.den_bound_opt->count()) o.den_bound = f.den_bound;
  if (f.box_opt->count()) o.box = f.box;
  o.budget = Budget::nodes(f.budget);
  return o;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kBudgetExceeded: return kExitBudget;
    case ErrorCode::kInternal: return kExitClaimFailed;
    default: return kExitUsage;
  }
}

void print_results(const std::vector<dsl::QueryResult>& results, bool json, std::ostream& out) {
  auto mode = json ? dsl::OutputMode::kJson : dsl::OutputMode::kText;
  for (const auto& r : results) out << dsl::format(r, mode) << "\n";
}

std::string load_program(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream file(arg);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int run_eval(const std::string& program, const Flags& f, std::ostream& out, std::ostream& err) {
  try {
    dsl::Session session(eval_options(f));
    // Statement by statement, so results before a failing query are kept.
    for (const auto& statement : dsl::parse(load_program(program))) {
      print_results(session.run(dsl::Program{statement}), f.json, out);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e);
  }
}

int run_repl(const Flags& f, std::istream& in, std::ostream& out, std::ostream& err) {
  dsl::Session session(eval_options(f));
  std::string line;
  out << "> " << std::flush;
  while (std::getline(in, line)) {
    if (line == ":quit" || line == ":q") return kExitOk;
    if (line == ":env") {
      for (const auto& b : session.bindings()) out << b << "\n";
    } else if (line == ":help") {
      out << "statements end with ';' or a newline; :env lists bindings, :quit exits\n";
    } else if (!line.empty()) {
      try {
        print_results(session.run(line), f.json, out);
      } catch (const Error& e) {
        err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
      }
    }
    out << "> " << std::flush;
  }
  out << "\n";
  return kExitOk;
}

int run_paper(const std::string& id, const Flags& f, std::ostream& out, std::ostream& err) {
  PaperOptions o;
  o.window = f.window;
  o.den_bound = f.den_bound;
  o.box = f.box;
  o.budget = Budget::nodes(f.budget);
  try {
    PaperReport report = run_paper_example(id, o);
    out << (f.json ? report.to_json() + "\n" : report.to_text());
    return report.ok() ? kExitOk : kExitClaimFailed;
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Factorization queries on Puiseux monoids", "puiseux"};
  app.require_subcommand(1);

  Flags eval_flags, repl_flags, paper_flags;
  std::string program, example;

  auto* eval = app.add_subcommand("eval", "Evaluate a program given inline or as a file");
  eval->add_option("program", program, "Program text or path")->required();
  add_flags(*eval, eval_flags);

  auto* repl = app.add_subcommand("repl", "Interactive session (:env, :quit)");
  add_flags(*repl, repl_flags);

  auto* paper = app.add_subcommand("paper", "Recompute the claims of one worked example");
  paper->add_option("id", example, "3.2, 3.3, 4.2, 4.3, 4.4 or 5")->required();
  add_flags(*paper, paper_flags);

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (eval->parsed()) return run_eval(program, eval_flags, out, err);
  if (repl->parsed()) return run_repl(repl_flags, in, out, err);
  return run_paper(example, paper_flags, out, err);
}

}  // namespace puiseux::tools
