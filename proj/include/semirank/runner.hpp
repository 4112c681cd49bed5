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

// Command dispatch shared by the command line tool and the tests.

#ifndef SEMIRANK_RUNNER_HPP_
#define SEMIRANK_RUNNER_HPP_

#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view

#include "io.hpp"
#include "oracle.hpp"

namespace semirank {

  enum class Command {
    rank,
    gens,
    graph,
    normalize,
    sab_rank,
    sab_gens,
    sab_graph,
    oracle_rank,
    oracle_check
  };

  //! Exit codes.
  constexpr int exit_ok       = 0;
  constexpr int exit_input    = 1;  // bad input, unsupported job, failed check
  constexpr int exit_budget   = 2;  // BudgetError or SizeError
  constexpr int exit_internal = 3;  // InternalError

  struct RunOptions {
    //! Largest semigroup the oracle tabulates.
    size_t max_closure = default_max_table;
    //! Search budget shared by exact_rank, sigma_min and the generating set
    //! fallback; their own defaults when unset.
    std::optional<size_t> max_search;
  };

  struct RunRequest {
    Command     command = Command::rank;
    std::string witness_text;  // oracle_check only
    RunOptions  options;
  };

  struct RunResult {
    std::string output;      // stdout
    std::string diagnostic;  // stderr
    int         exit_code = exit_ok;
  };

  //! Execute \p request on a parsed job. Library errors are caught and
  //! mapped to exit codes; the output is deterministic.
  RunResult run(JobSpec const& job, RunRequest const& request);

  //! Parse \p text and run; parse errors give exit_input.
  RunResult run_text(std::string_view text, RunRequest const& request);

}  // namespace semirank

#endif  // SEMIRANK_RUNNER_HPP_
