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

// Text formats: job files, element literals, witness files and DOT graphs.
//
// A job file is line oriented; `#` starts a comment. The first line names the
// job:
//
//   rms                     sab                   group             trans
//   group sym 3             n 7                   group sym 4       n 4
//   matrix 2 3              images                subset (1 2)      gens
//   () 0 (1 2)              1,2,3                                   [2 3 1 1]
//   (1 2 3) () 0            kernels
//                           1,4,7|2,5|3,6
//
// Groups are `sym <r>`, `cyc <m>` or `table <k>` followed by k rows of k
// 0-based element indices. Element literals: `e` in any group; cycles
// `(1 2 3)(4 5)`, `()` or one-line `[2 3 1]` in sym; `a` and `a^k` in cyc;
// `g<k>` in table. Cycle products are read left to right. Matrix entries are
// `0` or a literal; rows and columns are numbered from 1 in every format.

#ifndef SEMIRANK_IO_HPP_
#define SEMIRANK_IO_HPP_

#include <cstddef>      // for size_t
#include <memory>       // for shared_ptr
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "group.hpp"
#include "rees.hpp"
#include "sab.hpp"
#include "transformation.hpp"

namespace semirank {

  enum class JobKind { rms, sab, group, trans };

  //! A parsed job file.
  struct JobSpec {
    JobKind                            kind = JobKind::rms;
    std::shared_ptr<FiniteGroup const> group;  // rms and group jobs
    std::optional<ReesMatrixSemigroup> rms;
    bool                               has_subset = false;  // group jobs
    std::vector<element_index>         subset;
    SabInput                           sab;
    size_t                             degree = 0;  // trans jobs
    std::vector<Transformation>        transformations;
  };

  struct ParseOptions {
    size_t max_group_order = default_max_group_order;
  };

  //! Throws ParseError for malformed text and SemanticError for well formed
  //! text naming something invalid, both located at the offending token.
  JobSpec parse_input(std::string_view text, ParseOptions const& opts = {});

  //! Canonical text; parse_input(serialize(job)) serializes to the same bytes.
  std::string serialize(JobSpec const& job);

  //! Canonical literal: cycles by least point for sym, `e`/`a`/`a^k` for
  //! cyc, `g<k>` for table.
  std::string format_element(FiniteGroup const& G, element_index x);

  //! Throws UsageError for malformed or invalid literals.
  element_index parse_element(FiniteGroup const& G, std::string_view literal);

  //! `<i> <literal> <lambda>` (1-based) or `0`.
  std::string format_rms_element(ReesMatrixSemigroup const& S, RmsElement const& x);

  //! One element per line in format_rms_element notation.
  std::vector<RmsElement> parse_rms_witness(ReesMatrixSemigroup const& S, std::string_view text);

  //! One transformation per line, `[2 3 1 1]` or `2 3 1 1`.
  std::vector<Transformation> parse_transformation_witness(size_t n, std::string_view text);

  //! One group literal per line.
  std::vector<element_index> parse_group_witness(FiniteGroup const& G, std::string_view text);

  //! `1,2,3`
  std::string format_set(std::vector<point> const& set);

  //! Graham--Houghton graph: rows as boxes `i<k>`, columns as circles
  //! `l<k>`, one edge per non-zero entry labelled by the entry, row-major.
  std::string gh_dot(ReesMatrixSemigroup const& S);

  //! Transversal graph: kernels as boxes `b<k>`, images as circles `a<k>`.
  std::string transversal_dot(SabInput const& in);

}  // namespace semirank

#endif  // SEMIRANK_IO_HPP_
