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

#include <fstream>   // for ifstream
#include <sstream>   // for ostringstream
#include <string>    // for string

#include "catch_amalgamated.hpp"

#include "semirank/runner.hpp"

namespace semirank {

  namespace {
    std::string slurp(std::string const& name) {
      std::ifstream in(std::string(SEMIRANK_DATA_DIR) + "/" + name);
      REQUIRE(in);
      std::ostringstream out;
      out << in.rdbuf();
      return out.str();
    }

    RunResult run_file(std::string const& name, Command c, RunOptions opts = {}) {
      RunRequest req;
      req.command = c;
      req.options = opts;
      return run_text(slurp(name + ".txt"), req);
    }

    std::string last_line(std::string const& s) {
      auto const end   = s.find_last_not_of('\n');
      auto const start = s.rfind('\n', end);
      return s.substr(start == std::string::npos ? 0 : start + 1, end - start);
    }

    struct Golden {
      char const* job;
      Command     command;
      char const* suffix;
    };
  }  // namespace

  TEST_CASE("golden outputs", "[runner]") {
    std::vector<Golden> cases;
    for (auto job : {"brandt-s3", "c2-forest", "sym4-disjoint", "zero-matrix"}) {
      cases.push_back({job, Command::rank, "rank"});
      cases.push_back({job, Command::gens, "gens"});
      cases.push_back({job, Command::graph, "graph"});
      cases.push_back({job, Command::normalize, "normalize"});
    }
    cases.push_back({"sab-n7", Command::sab_rank, "sab-rank"});
    cases.push_back({"sab-n7", Command::sab_gens, "sab-gens"});
    cases.push_back({"sab-n7", Command::sab_graph, "sab-graph"});
    cases.push_back({"k32", Command::oracle_rank, "oracle-rank"});
    cases.push_back({"s4-subset", Command::oracle_rank, "oracle-rank"});
    for (auto const& c : cases) {
      INFO(c.job << " " << c.suffix);
      auto const r = run_file(c.job, c.command);
      CHECK(r.exit_code == exit_ok);
      CHECK(r.output == slurp(std::string("golden/") + c.job + "." + c.suffix + ".txt"));
      // deterministic across runs
      CHECK(run_file(c.job, c.command).output == r.output);
    }
  }

  TEST_CASE("machine lines", "[runner]") {
    CHECK(last_line(run_file("sab-n7", Command::sab_rank).output)
          == "rank=6 case=MD>=2 v0=2 v_plus_A=4 v_plus_B=2 max_degree=3");
    CHECK(last_line(run_file("sab-n7", Command::rank).output).rfind("rank=6 ", 0) == 0);
    CHECK(last_line(run_file("brandt-s3", Command::rank).output)
          == "rank=4 n=3 sigma_min=2 isolated_I=0 isolated_L=0");
    CHECK(last_line(run_file("zero-matrix", Command::rank).output)
          == "rank=12 n=0 sigma_min=0 isolated_I=2 isolated_L=2");
    CHECK(last_line(run_file("brandt-s3", Command::oracle_rank).output)
          == "rank=4 size=55 lower_bound=4");
    CHECK(last_line(run_file("s4-subset", Command::rank).output) == "rank=1");
  }

  TEST_CASE("gens output passes the oracle check", "[runner]") {
    for (auto job : {"brandt-s3", "c2-forest", "sym4-disjoint", "zero-matrix", "sab-n7"}) {
      INFO(job);
      RunRequest req;
      req.command      = std::string(job) == "sab-n7" ? Command::sab_gens : Command::gens;
      auto const text  = slurp(std::string(job) + ".txt");
      auto const gens  = run_text(text, req);
      REQUIRE(gens.exit_code == exit_ok);
      req.command      = Command::oracle_check;
      req.witness_text = gens.output;
      auto const check = run_text(text, req);
      CHECK(check.exit_code == exit_ok);
      CHECK(check.output.rfind("check=pass", 0) == 0);
    }
  }

  TEST_CASE("oracle check rejects a short witness", "[runner]") {
    RunRequest req;
    req.command      = Command::oracle_check;
    req.witness_text = "1 () 1\n2 () 2\n";
    auto const r     = run_text(slurp("brandt-s3.txt"), req);
    CHECK(r.exit_code == exit_input);
    CHECK(r.output.rfind("check=fail", 0) == 0);
  }

  TEST_CASE("normalize output is a job in normal form", "[runner]") {
    for (auto job : {"brandt-s3", "c2-forest", "sym4-disjoint", "zero-matrix"}) {
      INFO(job);
      auto const once = run_file(job, Command::normalize);
      REQUIRE(once.exit_code == exit_ok);
      RunRequest req;
      req.command      = Command::normalize;
      auto const again = run_text(once.output, req);
      CHECK(again.output == once.output);
      req.command = Command::rank;
      CHECK(last_line(run_text(once.output, req).output)
            == last_line(run_file(job, Command::rank).output));
    }
  }

  TEST_CASE("exit codes", "[runner]") {
    RunRequest req;
    SECTION("input errors") {
      auto r = run_text("", req);
      CHECK(r.exit_code == exit_input);
      CHECK(r.output.empty());
      CHECK(r.diagnostic.find("line 1") != std::string::npos);
      r = run_text("rms\ngroup sym 3\nmatrix 1 1\n(1 4)\n", req);
      CHECK(r.exit_code == exit_input);
      CHECK(run_file("k32", Command::rank).exit_code == exit_input);
      req.command = Command::sab_rank;
      CHECK(run_text(slurp("brandt-s3.txt"), req).exit_code == exit_input);
      req.command      = Command::oracle_check;
      req.witness_text = "9 () 1\n";
      CHECK(run_text(slurp("brandt-s3.txt"), req).exit_code == exit_input);
    }
    SECTION("budgets") {
      RunOptions small;
      small.max_closure = 50;
      CHECK(run_file("brandt-s3", Command::oracle_rank, small).exit_code == exit_budget);
      RunOptions tight;
      tight.max_search = 10;
      auto const r = run_file("sab-n7", Command::oracle_rank, tight);
      CHECK(r.exit_code == exit_budget);
      CHECK_FALSE(r.diagnostic.empty());
    }
  }

}  // namespace semirank
