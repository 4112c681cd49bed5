//
// semirank - ranks of finite Rees matrix and transformation semigroups
// Copyright (C) 2026 the semirank authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

// Command line frontend.

#include <fstream>   // for ifstream
#include <iostream>  // for cout, cerr, cin
#include <iterator>  // for istreambuf_iterator
#include <sstream>   // for ostringstream
#include <string>    // for string

#include "CLI11.hpp"

#include "criteria.hpp"
#include "semirank/runner.hpp"

namespace {

  // `-` reads standard input.
  bool slurp(std::string const& path, std::string& out) {
    std::ostringstream buf;
    if (path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(path);
      if (!in) {
        return false;
      }
      buf << in.rdbuf();
    }
    out = buf.str();
    return true;
  }

}  // namespace

int main(int argc, char** argv) {
  using semirank::Command;

  CLI::App app{"Ranks of Rees matrix semigroups and transformation semigroups S(A,B)"};
  app.require_subcommand(1);
  app.fallthrough();

  semirank::RunRequest req;
  size_t               max_search = 0;
  app.add_option("--max-closure", req.options.max_closure,
                 "Largest semigroup the oracle tabulates")
      ->capture_default_str();
  app.add_option("--max-search", max_search,
                 "Search budget for exact searches (default: per search)");

  std::string input, witness;
  Command     command = Command::rank;

  auto job_command = [&](CLI::App* parent, char const* name, char const* help, Command c) {
    auto* sub = parent->add_subcommand(name, help);
    sub->add_option("file", input, "Job file, - for standard input")->required();
    sub->callback([&command, c] { command = c; });
    return sub;
  };

  job_command(&app, "rank", "Rank report with a witness", Command::rank);
  job_command(&app, "gens", "Minimal generating set, one element per line", Command::gens);
  job_command(&app, "graph", "Graham--Houghton or transversal graph in DOT", Command::graph);
  job_command(&app, "normalize", "Graham normal form as an rms job", Command::normalize);

  auto* sab = app.add_subcommand("sab", "S(A,B) commands");
  sab->require_subcommand(1);
  job_command(sab, "rank", "Rank of S(A,B) from the transversal graph", Command::sab_rank);
  job_command(sab, "gens", "Minimal generating set of S(A,B)", Command::sab_gens);
  job_command(sab, "graph", "Transversal graph in DOT", Command::sab_graph);

  auto* oracle = app.add_subcommand("oracle", "Brute-force verification");
  oracle->require_subcommand(1);
  job_command(oracle, "rank", "Exact rank by exhaustive search", Command::oracle_rank);
  job_command(oracle, "check", "Check that a witness file generates", Command::oracle_check)
      ->add_option("witness", witness, "Witness file, one element per line")
      ->required();

  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("criteria", only, "Criterion numbers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    // --help and --version exit 0; usage errors are input errors
    return app.exit(e) == 0 ? semirank::exit_ok : semirank::exit_input;
  }

  if (selftest->parsed()) {
    return semirank::acceptance::run_criteria(std::cout, only) ? 0 : 1;
  }
  if (max_search != 0) {
    req.options.max_search = max_search;
  }
  req.command = command;

  std::string text;
  if (!slurp(input, text)) {
    std::cerr << "error: cannot read " << input << '\n';
    return semirank::exit_input;
  }
  if (command == Command::oracle_check && !slurp(witness, req.witness_text)) {
    std::cerr << "error: cannot read " << witness << '\n';
    return semirank::exit_input;
  }
  auto const result = semirank::run_text(text, req);
  std::cout << result.output;
  std::cerr << result.diagnostic;
  return result.exit_code;
}
