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

// The acceptance criteria, shared by the acceptance binary and `selftest`.

#ifndef SEMIRANK_TESTS_ACCEPTANCE_CRITERIA_HPP_
#define SEMIRANK_TESTS_ACCEPTANCE_CRITERIA_HPP_

#include <functional>  // for function
#include <ostream>     // for ostream
#include <string>      // for string
#include <vector>      // for vector

namespace semirank::acceptance {

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  struct Criterion {
    int                      id;
    std::string              title;
    double                   limit_seconds;  // wall clock; exceeding it fails
    std::function<Outcome()> body;
  };

  std::vector<Criterion> criteria();

  //! Runs the criteria whose ids are in \p only (all when empty), printing
  //! one PASS/FAIL line each; true iff all pass.
  bool run_criteria(std::ostream& out, std::vector<int> const& only = {});

}  // namespace semirank::acceptance

#endif  // SEMIRANK_TESTS_ACCEPTANCE_CRITERIA_HPP_
