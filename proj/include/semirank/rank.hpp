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

// Ranks of Rees matrix semigroups over groups, and minimal generating sets.

#ifndef SEMIRANK_RANK_HPP_
#define SEMIRANK_RANK_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "graham.hpp"
#include "group.hpp"
#include "rees.hpp"

namespace semirank {

  struct SigmaMinOptions {
    //! Conjugator tuples evaluated before BudgetError is thrown.
    size_t max_tuples = 10'000'000;
    //! Skip conjugators giving a conjugate already seen for the same H_k.
    bool               prune = true;
    GroupSearchOptions group;
  };

  struct SigmaMinResult {
    size_t                     value = 0;
    std::vector<element_index> conjugators;  // g_1 = identity first
    GroupSubset                complement;   // X
  };

  //! min over g_2, ..., g_n of rank(G : H_1 u g_2 H_2 g_2^-1 u ...), with
  //! the lexicographically first optimal tuple and its least complement X.
  //!
  //! Pruning keeps, for each k, only the first g giving each conjugate of
  //! H_k; the first optimal tuple is unchanged by this.
  SigmaMinResult sigma_min(FiniteGroup const&              G,
                           std::vector<GroupSubset> const& H,
                           SigmaMinOptions const&          opts = {});

  enum class RankCase { zero_matrix, general };

  std::string to_string(RankCase c);

  struct RankIngredients {
    size_t rows          = 0;  // |I \ I'|
    size_t columns       = 0;  // |Lambda \ Lambda'|
    size_t components    = 0;  // n
    size_t sigma_min     = 0;
    size_t isolated_rows = 0;  // |I'|
    size_t isolated_cols = 0;  // |Lambda'|
  };

  struct RankReport {
    size_t                  value = 0;
    RankCase                rank_case;
    RankIngredients         ingredients;
    SigmaMinResult          sigma;
    std::vector<RmsElement> witness;  // empty unless requested
  };

  struct RankOptions {
    SigmaMinOptions sigma;
    //! Also build and verify a minimal generating set.
    bool with_witness = false;
    //! Subsets tried by the exhaustive fallback of minimal_generating_set.
    size_t max_search = 5'000'000;
  };

  //! |G||I||Lambda| for the zero matrix, otherwise
  //! max(|I \ I'|, |Lambda \ Lambda'|, sigma_min + n - 1) + |I'| + |Lambda'|
  //! computed from the Graham normal form.
  RankReport rank_rms(ReesMatrixSemigroup const& S, RankOptions const& opts = {});

  //! A generating set of size rank_rms(S).value, verified by closure.
  //!
  //! The regular part is built from arcs i -> lambda chosen so that, with the
  //! arcs lambda -> j at non-zero entries, every vertex reaches every other;
  //! labels are then chosen so that closed walks realise the conjugated H_k
  //! and the complement X. Isolated columns and rows are reached through a
  //! fixed regular row i* and column lambda*. If the construction fails to
  //! verify, covering subsets of the right size are searched exhaustively;
  //! InternalError is thrown if that fails too.
  std::vector<RmsElement> minimal_generating_set(ReesMatrixSemigroup const& S,
                                                 RankOptions const&         opts = {});

  //! Rank of a semigroup generated by a regular maximal J-class with i
  //! R-classes, j L-classes and maximal subgroup H: max(i, j) when
  //! rank(H) <= 1; when rank(H) = 2, max(i, j) + 1 if i = j and each R- and
  //! L-class holds exactly one idempotent, else max(i, j). Throws
  //! UnsupportedError when rank(H) > 2.
  size_t rank_via_unique_max_jclass(size_t             i,
                                    size_t             j,
                                    FiniteGroup const& H,
                                    bool               one_idempotent_per_row_and_column);

}  // namespace semirank

#endif  // SEMIRANK_RANK_HPP_
