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

// Finite groups given by multiplication tables, subgroup closure, and exact
// (relative) ranks by exhaustive search.
//
// Products are written left to right: for permutations x * y is "first x,
// then y", so (x * y)(p) = y(x(p)).

#ifndef SEMIRANK_GROUP_HPP_
#define SEMIRANK_GROUP_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <memory>   // for shared_ptr
#include <span>     // for span
#include <string>   // for string
#include <vector>   // for vector

namespace semirank {

  //! Index of an element of a FiniteGroup, in the range [0, order).
  using element_index = std::uint32_t;

  //! Groups larger than this are refused unless the caller raises the cap.
  constexpr size_t default_max_group_order = 5040;

  //! How a group was built; decides how elements are printed and parsed.
  enum class GroupKind { symmetric, cyclic, table };

  //! A finite group stored as a full multiplication table.
  //!
  //! Values are immutable after construction. Element 0 is not assumed to be
  //! the identity for groups built from tables, but it is for every group
  //! made by build_symmetric and build_cyclic.
  class FiniteGroup {
   public:
    //! Validate and adopt a multiplication table (row x, column y holds
    //! x * y). Throws UsageError if the table is not a group, SizeError if
    //! the order exceeds \p max_order.
    static FiniteGroup from_table(std::vector<std::vector<element_index>> const& rows,
                                  std::string name,
                                  size_t max_order = default_max_group_order);

    size_t order() const noexcept {
      return _order;
    }

    element_index product(element_index x, element_index y) const noexcept {
      return _table[static_cast<size_t>(x) * _order + y];
    }

    element_index identity() const noexcept {
      return _identity;
    }

    element_index inverse(element_index x) const noexcept {
      return _inverse[x];
    }

    //! g * x * g^-1
    element_index conjugate(element_index x, element_index g) const noexcept {
      return product(product(g, x), inverse(g));
    }

    std::string const& name() const noexcept {
      return _name;
    }

    GroupKind kind() const noexcept {
      return _kind;
    }

    //! Degree r for symmetric groups, order m for cyclic groups, the order
    //! otherwise.
    size_t parameter() const noexcept {
      return _parameter;
    }

    bool is_valid(element_index x) const noexcept {
      return x < _order;
    }

    //! One-line notation (0-based images) of element \p x of a symmetric
    //! group. Throws UsageError for other kinds.
    std::vector<std::uint32_t> permutation(element_index x) const;

    //! Index of the permutation with 0-based one-line notation \p images in
    //! a symmetric group of matching degree.
    element_index index_of_permutation(std::span<std::uint32_t const> images) const;

    //! Exhaustive associativity check; only sensible for small orders.
    bool is_associative() const;

   private:
    friend FiniteGroup build_symmetric(size_t, size_t);
    friend FiniteGroup build_cyclic(size_t, size_t);

    FiniteGroup() = default;
    void finish(element_index identity);

    size_t                     _order = 0;
    std::vector<element_index> _table;
    element_index              _identity = 0;
    std::vector<element_index> _inverse;
    std::string                _name;
    GroupKind                  _kind      = GroupKind::table;
    size_t                     _parameter = 0;
  };

  //! The symmetric group on \p r points, elements in lexicographic order of
  //! their one-line notation (so element 0 is the identity).
  //!
  //! Throws SizeError unless 1 <= r <= 8 and r! <= \p max_order.
  FiniteGroup build_symmetric(size_t r, size_t max_order = default_max_group_order);

  //! The cyclic group of order \p m; element k is a^k.
  FiniteGroup build_cyclic(size_t m, size_t max_order = default_max_group_order);

  //! A subset of a finite group, stored as a membership bitmap.
  //!
  //! The subgroup flag is only ever set by operations that verified closure.
  class GroupSubset {
   public:
    GroupSubset() = default;

    explicit GroupSubset(size_t universe) : _members(universe, false) {}

    static GroupSubset from_elements(size_t universe, std::span<element_index const> elts);

    bool contains(element_index x) const noexcept {
      return x < _members.size() && _members[x];
    }

    //! Clears the subgroup flag when the insertion is new.
    void insert(element_index x);

    size_t size() const noexcept {
      return _count;
    }

    size_t universe() const noexcept {
      return _members.size();
    }

    bool empty() const noexcept {
      return _count == 0;
    }

    bool is_subgroup() const noexcept {
      return _is_subgroup;
    }

    //! Sorted list of members.
    std::vector<element_index> elements() const;

    //! Union of memberships; the result is not flagged as a subgroup.
    GroupSubset& operator|=(GroupSubset const& that);

    //! Equality of membership only.
    bool operator==(GroupSubset const& that) const noexcept {
      return _members == that._members;
    }

    //! Lexicographic comparison of the sorted member lists.
    bool operator<(GroupSubset const& that) const;

   private:
    friend GroupSubset subgroup_closure(FiniteGroup const&, GroupSubset const&);
    friend GroupSubset conjugate_subset(FiniteGroup const&, GroupSubset const&, element_index);
    friend class ClosureState;

    std::vector<bool> _members;
    size_t            _count       = 0;
    bool              _is_subgroup = false;
  };

  //! Smallest subgroup containing \p seed and the identity.
  GroupSubset subgroup_closure(FiniteGroup const& G, GroupSubset const& seed);

  //! { g a g^-1 : a in A }; keeps the subgroup flag of \p A.
  GroupSubset conjugate_subset(FiniteGroup const& G, GroupSubset const& A, element_index g);

  //! Result of a (relative) rank search.
  struct RankWitness {
    size_t      value = 0;
    GroupSubset witness;
  };

  //! Limits for exhaustive group searches. Exceeding one throws BudgetError.
  struct GroupSearchOptions {
    size_t max_closures = 50'000'000;
  };

  //! Minimal |X| with <A u X> = G, and the lexicographically first such X.
  //!
  //! Subsets are explored by increasing size, candidates in increasing index
  //! order; a candidate already inside the closure of A and the earlier
  //! choices is skipped (a minimal X never contains such an element).
  RankWitness relative_rank(FiniteGroup const&        G,
                            GroupSubset const&        A,
                            GroupSearchOptions const& opts = {});

  //! rank(G) = relative_rank(G, {}); the trivial group has rank 0.
  RankWitness group_rank(FiniteGroup const& G, GroupSearchOptions const& opts = {});

  //! All subgroups of G, sorted by their member lists. Cyclic subgroups are
  //! joined pairwise until nothing new appears; desk scale only.
  std::vector<GroupSubset> all_subgroups(FiniteGroup const& G);

  //! Incrementally grown subgroup closure with a short generating list.
  class ClosureState {
   public:
    explicit ClosureState(FiniteGroup const& G);

    //! Adjoin \p x; returns false when x was already a member.
    bool extend(element_index x);

    void extend(GroupSubset const& A);

    GroupSubset const& subgroup() const noexcept {
      return _set;
    }

    size_t size() const noexcept {
      return _set.size();
    }

    std::vector<element_index> const& generators() const noexcept {
      return _gens;
    }

   private:
    FiniteGroup const*         _group;
    GroupSubset                _set;
    std::vector<element_index> _list;
    std::vector<element_index> _gens;
  };

}  // namespace semirank

#endif  // SEMIRANK_GROUP_HPP_
