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

// Random instances and small helpers shared by the unit and acceptance tests.

#ifndef SEMIRANK_TESTS_SUPPORT_HPP_
#define SEMIRANK_TESTS_SUPPORT_HPP_

#include <algorithm>  // for shuffle, next_permutation
#include <memory>     // for shared_ptr
#include <numeric>    // for gcd, iota
#include <random>     // for mt19937_64
#include <string>     // for string
#include <vector>     // for vector

#include "semirank/group.hpp"
#include "semirank/oracle.hpp"
#include "semirank/rees.hpp"
#include "semirank/sab.hpp"
#include "semirank/transformation.hpp"

namespace semirank::test {

  using Rng = std::mt19937_64;

  inline size_t uniform(Rng& rng, size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
  }

  //! Every group of order at most 8 used by the randomized suites.
  inline std::vector<std::shared_ptr<FiniteGroup const>> small_groups() {
    std::vector<std::shared_ptr<FiniteGroup const>> out;
    for (size_t r = 1; r <= 3; ++r) {
      out.push_back(std::make_shared<FiniteGroup const>(build_symmetric(r)));
    }
    for (size_t m = 1; m <= 8; ++m) {
      out.push_back(std::make_shared<FiniteGroup const>(build_cyclic(m)));
    }
    return out;
  }

  //! Each entry is zero with probability \p zero_rate.
  inline StructureMatrix random_matrix(Rng& rng, FiniteGroup const& G, size_t L, size_t I,
                                       double zero_rate) {
    StructureMatrix                  P(L, I);
    std::bernoulli_distribution      zero(zero_rate);
    for (size_t l = 0; l < L; ++l) {
      for (size_t i = 0; i < I; ++i) {
        if (!zero(rng)) {
          P.set(l, i, static_cast<element_index>(uniform(rng, 0, G.order() - 1)));
        }
      }
    }
    return P;
  }

  inline ReesMatrixSemigroup random_rms(Rng& rng, size_t max_dim = 5) {
    static auto const groups = small_groups();
    auto const        G      = groups[uniform(rng, 0, groups.size() - 1)];
    auto const        L      = uniform(rng, 1, max_dim);
    auto const        I      = uniform(rng, 1, max_dim);
    double const      rate   = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
    return ReesMatrixSemigroup(G, random_matrix(rng, *G, L, I, rate));
  }

  //! A random automorphism of G: conjugation for symmetric groups,
  //! x -> x^k with k a unit for cyclic groups; as an index map.
  inline std::vector<element_index> random_automorphism(Rng& rng, FiniteGroup const& G) {
    std::vector<element_index> out(G.order());
    if (G.kind() == GroupKind::cyclic && G.order() > 1) {
      size_t const m = G.order();
      size_t       k = 0;
      do {
        k = uniform(rng, 1, m - 1);
      } while (std::gcd(k, m) != 1);
      for (size_t x = 0; x < m; ++x) {
        out[x] = static_cast<element_index>(x * k % m);
      }
      return out;
    }
    auto const g = static_cast<element_index>(uniform(rng, 0, G.order() - 1));
    for (element_index x = 0; x < G.order(); ++x) {
      out[x] = G.conjugate(x, g);
    }
    return out;
  }

  //! P with rows and columns permuted: entry (l, i) moves to
  //! (row_perm[l], col_perm[i]).
  inline StructureMatrix permuted(StructureMatrix const&     P,
                                  std::vector<size_t> const& row_perm,
                                  std::vector<size_t> const& col_perm) {
    StructureMatrix Q(P.lambda_count(), P.i_count());
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      for (size_t i = 0; i < P.i_count(); ++i) {
        Q.set(row_perm[l], col_perm[i], P.at(l, i));
      }
    }
    return Q;
  }

  inline std::vector<size_t> random_permutation(Rng& rng, size_t n) {
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  //! The I x Lambda matrix with entries inverted; the result is
  //! anti-isomorphic to the input.
  inline StructureMatrix transposed(FiniteGroup const& G, StructureMatrix const& P) {
    StructureMatrix Q(P.i_count(), P.lambda_count());
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      for (size_t i = 0; i < P.i_count(); ++i) {
        if (auto const& p = P.at(l, i)) {
          Q.set(i, l, G.inverse(*p));
        }
      }
    }
    return Q;
  }

  inline StructureMatrix identity_matrix(FiniteGroup const& G, size_t n) {
    StructureMatrix P(n, n);
    for (size_t k = 0; k < n; ++k) {
      P.set(k, k, G.identity());
    }
    return P;
  }

  //! All r-subsets of {0, ..., n - 1}, lexicographic.
  inline std::vector<std::vector<point>> all_subsets(size_t n, size_t r) {
    std::vector<std::vector<point>> out;
    std::vector<bool>               mask(n, false);
    std::fill(mask.begin(), mask.begin() + r, true);
    do {
      std::vector<point> s;
      for (point p = 0; p < n; ++p) {
        if (mask[p]) {
          s.push_back(p);
        }
      }
      out.push_back(std::move(s));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
  }

  //! All partitions of {0, ..., n - 1} into exactly r classes, by
  //! restricted growth strings.
  inline std::vector<KernelPartition> all_partitions(size_t n, size_t r) {
    std::vector<KernelPartition> out;
    std::vector<point>           labels(n, 0);
    auto                         rec = [&](auto&& self, size_t k, point used) -> void {
      if (k == n) {
        if (used == r) {
          out.emplace_back(labels);
        }
        return;
      }
      for (point c = 0; c <= used && c < r; ++c) {
        labels[k] = c;
        self(self, k + 1, std::max<point>(used, c + 1));
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  //! A random S(A, B) instance of weight r on n points.
  inline SabInput random_sab(Rng& rng, size_t n, size_t r) {
    auto     subsets    = all_subsets(n, r);
    auto     partitions = all_partitions(n, r);
    SabInput in;
    in.n = n;
    std::shuffle(subsets.begin(), subsets.end(), rng);
    std::shuffle(partitions.begin(), partitions.end(), rng);
    subsets.resize(uniform(rng, 1, std::min<size_t>(5, subsets.size())));
    partitions.resize(uniform(rng, 1, std::min<size_t>(4, partitions.size())));
    in.images  = std::move(subsets);
    in.kernels = std::move(partitions);
    return in;
  }

  //! The S(A, B) instance with n = 7 whose transversal graph has two
  //! isolated vertices.
  inline SabInput sab_n7() {
    SabInput in;
    in.n      = 7;
    in.images = {{0, 1, 2}, {0, 5, 6}, {4, 5, 6}, {1, 3, 5}, {0, 1, 4}};
    in.kernels
        = {KernelPartition::from_classes(7, {{0, 3, 6}, {1, 4}, {2, 5}}),
           KernelPartition::from_classes(7, {{0, 1, 2}, {3, 4, 5}, {6}}),
           KernelPartition::from_classes(7, {{0, 1}, {3, 5, 6}, {2, 4}})};
    return in;
  }

  template <typename T>
  std::vector<T> closure_of(std::vector<T> const& gens, size_t cap = default_max_closure) {
    return closure(gens, [](T const& x, T const& y) { return compose(x, y); }, cap);
  }

}  // namespace semirank::test

#endif  // SEMIRANK_TESTS_SUPPORT_HPP_
