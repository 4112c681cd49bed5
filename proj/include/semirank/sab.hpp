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

// The semigroups S(A, B) generated by all maps of rank r with image in A and
// kernel in B, their transversal graphs, and related extremal families.

#ifndef SEMIRANK_SAB_HPP_
#define SEMIRANK_SAB_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include "rank.hpp"
#include "rees.hpp"
#include "transformation.hpp"

namespace semirank {

  //! Degree n, a list A of r-subsets (images) and a list B of partitions of
  //! weight r (kernels).
  struct SabInput {
    size_t                          n = 0;
    std::vector<std::vector<point>> images;   // each sorted
    std::vector<KernelPartition>    kernels;

    //! Common size r of the images and weight of the kernels. Throws
    //! UsageError if the lists are empty, ragged, or contain duplicates or
    //! points out of range.
    size_t weight() const;
  };

  //! Throws UnsupportedError unless 2 < r < n.
  void require_rank_range(SabInput const& in);

  //! For each kernel b (outer) and image a (inner), the r! maps sending the
  //! classes of b bijectively onto a, permutations in lexicographic order.
  std::vector<Transformation> sab_generators(SabInput const& in);

  //! a ~ b iff a is a transversal of b.
  struct TransversalGraph {
    std::vector<std::vector<bool>> adjacent;  // [image][kernel]
    std::vector<size_t>            image_degree;
    std::vector<size_t>            kernel_degree;
    size_t                         edge_count = 0;
    size_t                         v0         = 0;  // isolated vertices of A u B
    size_t                         v_plus_A   = 0;  // non-isolated images
    size_t                         v_plus_B   = 0;  // non-isolated kernels
    size_t                         max_degree = 0;
  };

  TransversalGraph transversal_graph(SabInput const& in);

  enum class SabCase { md_at_least_2, md_1, md_0 };

  std::string to_string(SabCase c);

  struct SabRank {
    size_t           value;
    SabCase          sab_case;
    TransversalGraph graph;
  };

  //! MD >= 2: max(v+(A), v+(B)) + v0; MD = 1: one more; MD = 0: |A||B|r!.
  SabRank sab_rank(SabInput const& in);

  //! M0[S_r; B, A; P]: row b, column a, p_{a b} the permutation
  //! t -> class of a[t] in b when a is a transversal of b, zero otherwise.
  //! Classes are ordered by minimum point and image points increasingly.
  ReesMatrixSemigroup sab_principal_rms(SabInput const& in);

  //! (b, s, a) -> the map sending class t of b to a[s(t)].
  Transformation sab_lift(SabInput const& in, RmsElement const& x);

  //! A generating set of size sab_rank(in).value, lifted from the principal
  //! Rees matrix semigroup.
  std::vector<Transformation> sab_minimal_generators(SabInput const&    in,
                                                     RankOptions const& opts = {});

  //! Largest degree accepted by knr and inverse_extremal.
  constexpr size_t max_desk_degree = 6;

  //! All maps of rank exactly r on n points, lexicographic; they generate
  //! K(n, r). Requires 1 < r < n <= max_desk_degree.
  std::vector<Transformation> knr(size_t n, size_t r);

  //! Stirling numbers of the second kind.
  std::uint64_t stirling2(size_t n, size_t r);

  std::uint64_t binomial(size_t n, size_t k);

  //! For each r-subset D in lexicographic order: all six permutations of D
  //! when r = 3, otherwise the floor(r/2) transpositions (d0 d1), (d2 d3), ...
  //! of D fixing the rest of D. Requires 2 < r <= n <= max_desk_degree.
  std::vector<PartialInjection> inverse_extremal(size_t n, size_t r);

  //! C(n, r) * max(2, floor(r/2))
  std::uint64_t inverse_rank_bound(size_t n, size_t r);

}  // namespace semirank

#endif  // SEMIRANK_SAB_HPP_
