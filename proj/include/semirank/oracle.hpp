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

// Brute-force ground truth: closures, Green's relations, principal factors
// and exact ranks of small finite semigroups.

#ifndef SEMIRANK_ORACLE_HPP_
#define SEMIRANK_ORACLE_HPP_

#include <algorithm>  // for sort, unique
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <map>        // for map
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "errors.hpp"
#include "rees.hpp"

namespace semirank {

  //! Cap on the number of elements any closure may produce.
  constexpr size_t default_max_closure = 2'000'000;

  //! Cap on the order of a semigroup stored as a full table.
  constexpr size_t default_max_table = 4096;

  //! <generators> by breadth-first right multiplication; sorted, duplicates
  //! removed. Throws SizeError when more than \p cap elements appear.
  template <typename T, typename Multiply>
  std::vector<T> closure(std::vector<T> const& generators,
                         Multiply&&            multiply,
                         size_t                cap = default_max_closure) {
    std::map<T, bool> seen;
    std::vector<T>    list;
    auto              add = [&](T const& x) {
      if (seen.emplace(x, true).second) {
        if (list.size() == cap) {
          throw SizeError("closure exceeds " + std::to_string(cap) + " elements");
        }
        list.push_back(x);
      }
    };
    for (auto const& a : generators) {
      add(a);
    }
    for (size_t k = 0; k < list.size(); ++k) {
      for (auto const& a : generators) {
        add(multiply(list[k], a));
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  }

  //! A finite semigroup given by its full multiplication table.
  class AbstractSemigroup {
   public:
    using id = std::uint32_t;

    //! \p table is row-major: table[x * n + y] = xy. \p generators may be
    //! empty, in which case every element counts as a generator.
    AbstractSemigroup(size_t               n,
                      std::vector<id>      table,
                      std::optional<id>    zero,
                      std::vector<id>      generators = {});

    //! Close \p generators under \p multiply and tabulate the result;
    //! element ids follow the sorted order of the returned element list.
    //! When \p zero is given it is adjoined and flagged as free.
    template <typename T, typename Multiply>
    static std::pair<AbstractSemigroup, std::vector<T>>
    from_generators(std::vector<T> const&   generators,
                    Multiply&&              multiply,
                    std::optional<T> const& zero = std::nullopt,
                    size_t                  cap  = default_max_table) {
      auto elts = closure(generators, multiply, cap + 1);
      if (zero && !std::binary_search(elts.begin(), elts.end(), *zero)) {
        elts.insert(std::lower_bound(elts.begin(), elts.end(), *zero), *zero);
      }
      if (elts.size() > cap) {
        throw SizeError("semigroup has more than " + std::to_string(cap) + " elements");
      }
      std::map<T, id> index;
      for (size_t k = 0; k < elts.size(); ++k) {
        index.emplace(elts[k], static_cast<id>(k));
      }
      size_t const    n = elts.size();
      std::vector<id> table(n * n);
      for (size_t x = 0; x < n; ++x) {
        for (size_t y = 0; y < n; ++y) {
          table[x * n + y] = index.at(multiply(elts[x], elts[y]));
        }
      }
      std::vector<id> gens;
      for (auto const& a : generators) {
        gens.push_back(index.at(a));
      }
      std::optional<id> z;
      if (zero) {
        z = index.at(*zero);
      }
      return {AbstractSemigroup(n, std::move(table), z, std::move(gens)), std::move(elts)};
    }

    //! Every element of \p S, ids given by S.to_index; the zero is free.
    static AbstractSemigroup from_rms(ReesMatrixSemigroup const& S,
                                      size_t                     cap = default_max_table);

    size_t size() const noexcept {
      return _n;
    }

    id product(id x, id y) const noexcept {
      return _table[static_cast<size_t>(x) * _n + y];
    }

    //! The zero, if the semigroup is flagged as having one; it is granted
    //! for free in every closure.
    std::optional<id> zero() const noexcept {
      return _zero;
    }

    std::vector<id> const& generators() const noexcept {
      return _generators;
    }

    bool is_idempotent(id x) const noexcept {
      return product(x, x) == x;
    }

    bool is_associative() const;

    //! <X>, plus the zero when flagged; sorted.
    std::vector<id> closure_of(std::span<id const> X) const;

   private:
    size_t            _n;
    std::vector<id>   _table;
    std::optional<id> _zero;
    std::vector<id>   _generators;
  };

  //! Green's R-, L- and J-classes of an abstract semigroup.
  struct GreenStructure {
    struct JClass {
      std::vector<AbstractSemigroup::id> elements;
      std::vector<std::uint32_t>         r_classes;  // sorted R-class ids inside J
      std::vector<std::uint32_t>         l_classes;  // sorted L-class ids inside J
      std::vector<size_t>                idempotents_per_r;  // aligned with r_classes
      std::vector<size_t>                idempotents_per_l;  // aligned with l_classes
      size_t                             idempotents = 0;
      bool                               regular     = false;
      bool                               maximal     = false;
      bool                               is_zero     = false;
    };

    std::vector<std::uint32_t> r_class;  // per element
    std::vector<std::uint32_t> l_class;
    std::vector<std::uint32_t> j_class;
    size_t                     r_count = 0;
    size_t                     l_count = 0;
    std::vector<JClass>        jclasses;  // indexed by J-class id
  };

  //! R, L and J as strongly connected components of the right, left and
  //! two-sided Cayley graphs (with an identity adjoined). A J-class is
  //! maximal when no other class lies above it.
  GreenStructure green_structure(AbstractSemigroup const& S);

  //! J with a zero adjoined: st if s, t, st all lie in J, else 0. Element 0
  //! of the result is the zero; element k + 1 is J.elements[k].
  AbstractSemigroup principal_factor(AbstractSemigroup const& S,
                                     GreenStructure const&    green,
                                     size_t                   j);

  //! An isomorphism from a regular principal factor onto a Rees matrix
  //! semigroup over the maximal subgroup at an idempotent of J.
  struct Coordinatization {
    ReesMatrixSemigroup rms;
    //! rms.to_index(x) -> element of S, for x non-zero; entry 0 unused.
    std::vector<AbstractSemigroup::id> lift;
    //! Element of the maximal subgroup for each group index.
    std::vector<AbstractSemigroup::id> group_elements;
  };

  //! nullopt when J contains no idempotent.
  std::optional<Coordinatization> coordinatize(AbstractSemigroup const& S,
                                               GreenStructure const&    green,
                                               size_t                   j);

  //! Sum over the maximal non-zero J-classes J_k of rank(J_k*): |J_k| when
  //! J_k is not regular, the Rees matrix rank of its coordinatization
  //! otherwise.
  size_t maximal_jclass_lower_bound(AbstractSemigroup const& S);

  //! Union over the maximal non-zero J-classes of a minimal generating set
  //! of each principal factor, lifted back to S (all of J when J is not
  //! regular); sorted. Its size is maximal_jclass_lower_bound(S).
  std::vector<AbstractSemigroup::id> maximal_jclass_witness(AbstractSemigroup const& S);

  struct ExactRankOptions {
    size_t max_nodes = 50'000'000;
  };

  struct ExactRank {
    size_t                             value = 0;
    std::vector<AbstractSemigroup::id> witness;  // sorted
  };

  //! Least k <= hint_upper such that some k-subset generates S (the zero
  //! being free when flagged), with the lexicographically first witness;
  //! nullopt if there is none up to hint_upper.
  //!
  //! Sizes are tried upwards from a bound that needs only the Green
  //! structure: every R- and L-class of a maximal J-class meets each
  //! generating set, and indecomposable elements are forced. Candidates
  //! already in the closure of earlier choices are skipped. Throws
  //! BudgetError after \p opts.max_nodes search nodes.
  std::optional<ExactRank> exact_rank(AbstractSemigroup const& S,
                                      size_t                   hint_upper,
                                      ExactRankOptions const&  opts = {});

  //! The coverage and indecomposability bound used by exact_rank.
  size_t coverage_lower_bound(AbstractSemigroup const& S, GreenStructure const& green);

  //! <X> = S, the zero being free when flagged.
  bool verify_generates(AbstractSemigroup const& S, std::span<AbstractSemigroup::id const> X);

  //! <X> = S in a Rees matrix semigroup, the zero being free. Throws
  //! UsageError if X contains foreign elements.
  bool verify_generates(ReesMatrixSemigroup const& S, std::span<RmsElement const> X);

  //! Size of <X> u {0} in a Rees matrix semigroup.
  size_t rms_closure_size(ReesMatrixSemigroup const& S, std::span<RmsElement const> X);

}  // namespace semirank

#endif  // SEMIRANK_ORACLE_HPP_
