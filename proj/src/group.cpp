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

#include "semirank/group.hpp"

#include <algorithm>  // for next_permutation, sort
#include <numeric>    // for iota
#include <set>        // for set

#include "semirank/errors.hpp"

namespace semirank {

  namespace {
    size_t factorial(size_t r) {
      size_t f = 1;
      for (size_t i = 2; i <= r; ++i) {
        f *= i;
      }
      return f;
    }

    // Lexicographic rank via the Lehmer code.
    element_index lex_rank(std::span<std::uint32_t const> perm) {
      size_t const r    = perm.size();
      size_t       rank = 0;
      for (size_t i = 0; i < r; ++i) {
        size_t smaller = 0;
        for (size_t j = i + 1; j < r; ++j) {
          if (perm[j] < perm[i]) {
            ++smaller;
          }
        }
        rank += smaller * factorial(r - 1 - i);
      }
      return static_cast<element_index>(rank);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  void FiniteGroup::finish(element_index identity) {
    _identity = identity;
    _inverse.assign(_order, 0);
    for (element_index x = 0; x < _order; ++x) {
      for (element_index y = 0; y < _order; ++y) {
        if (product(x, y) == identity) {
          _inverse[x] = y;
          break;
        }
      }
    }
  }

  FiniteGroup FiniteGroup::from_table(std::vector<std::vector<element_index>> const& rows,
                                      std::string                                    name,
                                      size_t max_order) {
    size_t const n = rows.size();
    if (n == 0) {
      throw UsageError("a group table must have at least one row");
    }
    if (n > max_order) {
      throw SizeError("group order " + std::to_string(n) + " exceeds the cap "
                      + std::to_string(max_order));
    }
    FiniteGroup G;
    G._order     = n;
    G._name      = std::move(name);
    G._kind      = GroupKind::table;
    G._parameter = n;
    G._table.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw UsageError("group table is not square");
      }
      std::vector<bool> seen(n, false);
      for (auto v : row) {
        if (v >= n || seen[v]) {
          throw UsageError("group table row is not a permutation of the elements");
        }
        seen[v] = true;
        G._table.push_back(v);
      }
    }
    // Columns must be permutations too (Latin square).
    for (size_t y = 0; y < n; ++y) {
      std::vector<bool> seen(n, false);
      for (size_t x = 0; x < n; ++x) {
        auto v = G._table[x * n + y];
        if (seen[v]) {
          throw UsageError("group table column is not a permutation of the elements");
        }
        seen[v] = true;
      }
    }
    element_index identity = n;
    for (element_index e = 0; e < n; ++e) {
      bool ok = true;
      for (element_index x = 0; x < n && ok; ++x) {
        ok = G.product(e, x) == x && G.product(x, e) == x;
      }
      if (ok) {
        identity = e;
        break;
      }
    }
    if (identity == n) {
      throw UsageError("group table has no two-sided identity");
    }
    if (!G.is_associative()) {
      throw UsageError("group table is not associative");
    }
    G.finish(identity);
    return G;
  }

  std::vector<std::uint32_t> FiniteGroup::permutation(element_index x) const {
    if (_kind != GroupKind::symmetric) {
      throw UsageError(_name + " is not a symmetric group");
    }
    // Unrank the Lehmer code.
    size_t const               r = _parameter;
    std::vector<std::uint32_t> pool(r);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint32_t> out;
    out.reserve(r);
    size_t rest = x;
    for (size_t i = 0; i < r; ++i) {
      size_t f = factorial(r - 1 - i);
      size_t d = rest / f;
      rest %= f;
      out.push_back(pool[d]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return out;
  }

  element_index FiniteGroup::index_of_permutation(std::span<std::uint32_t const> images) const {
    if (_kind != GroupKind::symmetric) {
      throw UsageError(_name + " is not a symmetric group");
    }
    if (images.size() != _parameter) {
      throw UsageError("permutation has degree " + std::to_string(images.size())
                       + ", expected " + std::to_string(_parameter));
    }
    std::vector<bool> seen(_parameter, false);
    for (auto v : images) {
      if (v >= _parameter || seen[v]) {
        throw UsageError("not a permutation");
      }
      seen[v] = true;
    }
    return lex_rank(images);
  }

  bool FiniteGroup::is_associative() const {
    for (element_index x = 0; x < _order; ++x) {
      for (element_index y = 0; y < _order; ++y) {
        auto xy = product(x, y);
        for (element_index z = 0; z < _order; ++z) {
          if (product(xy, z) != product(x, product(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  FiniteGroup build_symmetric(size_t r, size_t max_order) {
    if (r < 1 || r > 8) {
      throw SizeError("symmetric group degree must be in [1, 8], found " + std::to_string(r));
    }
    size_t const n = factorial(r);
    if (n > max_order) {
      throw SizeError("S_" + std::to_string(r) + " has order " + std::to_string(n)
                      + ", above the cap " + std::to_string(max_order));
    }
    std::vector<std::vector<std::uint32_t>> perms;
    perms.reserve(n);
    std::vector<std::uint32_t> p(r);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    FiniteGroup G;
    G._order     = n;
    G._name      = "S_" + std::to_string(r);
    G._kind      = GroupKind::symmetric;
    G._parameter = r;
    G._table.resize(n * n);
    std::vector<std::uint32_t> xy(r);
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        for (size_t q = 0; q < r; ++q) {
          xy[q] = perms[y][perms[x][q]];
        }
        G._table[x * n + y] = lex_rank(xy);
      }
    }
    G.finish(0);
    return G;
  }

  FiniteGroup build_cyclic(size_t m, size_t max_order) {
    if (m < 1) {
      throw SizeError("cyclic group order must be positive");
    }
    if (m > max_order) {
      throw SizeError("C_" + std::to_string(m) + " exceeds the cap " + std::to_string(max_order));
    }
    FiniteGroup G;
    G._order     = m;
    G._name      = "C_" + std::to_string(m);
    G._kind      = GroupKind::cyclic;
    G._parameter = m;
    G._table.resize(m * m);
    for (size_t x = 0; x < m; ++x) {
      for (size_t y = 0; y < m; ++y) {
        G._table[x * m + y] = static_cast<element_index>((x + y) % m);
      }
    }
    G.finish(0);
    return G;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupSubset
  ////////////////////////////////////////////////////////////////////////

  GroupSubset GroupSubset::from_elements(size_t universe, std::span<element_index const> elts) {
    GroupSubset A(universe);
    for (auto x : elts) {
      if (x >= universe) {
        throw UsageError("element index " + std::to_string(x) + " out of range");
      }
      A.insert(x);
    }
    return A;
  }

  void GroupSubset::insert(element_index x) {
    if (!_members[x]) {
      _members[x] = true;
      ++_count;
      _is_subgroup = false;
    }
  }

  std::vector<element_index> GroupSubset::elements() const {
    std::vector<element_index> out;
    out.reserve(_count);
    for (size_t x = 0; x < _members.size(); ++x) {
      if (_members[x]) {
        out.push_back(static_cast<element_index>(x));
      }
    }
    return out;
  }

  GroupSubset& GroupSubset::operator|=(GroupSubset const& that) {
    for (size_t x = 0; x < that._members.size(); ++x) {
      if (that._members[x]) {
        insert(static_cast<element_index>(x));
      }
    }
    _is_subgroup = false;
    return *this;
  }

  bool GroupSubset::operator<(GroupSubset const& that) const {
    return elements() < that.elements();
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  ClosureState::ClosureState(FiniteGroup const& G) : _group(&G), _set(G.order()) {
    _set.insert(G.identity());
    _set._is_subgroup = true;
    _list.push_back(G.identity());
  }

  bool ClosureState::extend(element_index x) {
    if (_set.contains(x)) {
      return false;
    }
    _gens.push_back(x);
    // In a finite group the submonoid generated is the subgroup generated,
    // so right multiplication by generators from the identity reaches all.
    for (size_t i = 0; i < _list.size(); ++i) {
      for (auto s : _gens) {
        auto y = _group->product(_list[i], s);
        if (!_set.contains(y)) {
          _set.insert(y);
          _list.push_back(y);
        }
      }
    }
    _set._is_subgroup = true;
    return true;
  }

  void ClosureState::extend(GroupSubset const& A) {
    for (size_t x = 0; x < A.universe(); ++x) {
      if (A.contains(static_cast<element_index>(x))) {
        extend(static_cast<element_index>(x));
      }
    }
  }

  GroupSubset subgroup_closure(FiniteGroup const& G, GroupSubset const& seed) {
    if (seed.universe() != G.order()) {
      throw UsageError("subset does not belong to " + G.name());
    }
    ClosureState state(G);
    state.extend(seed);
    return state.subgroup();
  }

  GroupSubset conjugate_subset(FiniteGroup const& G, GroupSubset const& A, element_index g) {
    GroupSubset out(G.order());
    for (size_t x = 0; x < A.universe(); ++x) {
      if (A.contains(static_cast<element_index>(x))) {
        out.insert(G.conjugate(static_cast<element_index>(x), g));
      }
    }
    out._is_subgroup = A.is_subgroup();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ranks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct RelativeRankSearch {
      FiniteGroup const&         G;
      std::vector<element_index> candidates;
      std::vector<element_index> chosen;
      size_t                     closures = 0;
      size_t                     budget;

      // Depth-first over increasing candidate positions. Each frame owns the
      // closure of the base together with the choices so far.
      bool search(ClosureState const& state, size_t start, size_t remaining) {
        if (remaining == 0) {
          return state.size() == G.order();
        }
        for (size_t p = start; p + remaining <= candidates.size(); ++p) {
          auto x = candidates[p];
          if (state.subgroup().contains(x)) {
            continue;
          }
          if (++closures > budget) {
            throw BudgetError("relative rank search in " + G.name() + " exceeded "
                              + std::to_string(budget) + " closures");
          }
          ClosureState next = state;
          next.extend(x);
          chosen.push_back(x);
          if (search(next, p + 1, remaining - 1)) {
            return true;
          }
          chosen.pop_back();
        }
        return false;
      }
    };
  }  // namespace

  RankWitness relative_rank(FiniteGroup const&        G,
                            GroupSubset const&        A,
                            GroupSearchOptions const& opts) {
    if (A.universe() != G.order()) {
      throw UsageError("subset does not belong to " + G.name());
    }
    ClosureState base(G);
    base.extend(A);
    if (base.size() == G.order()) {
      return {0, GroupSubset(G.order())};
    }
    RelativeRankSearch search{G, {}, {}, 0, opts.max_closures};
    for (element_index x = 0; x < G.order(); ++x) {
      if (!base.subgroup().contains(x)) {
        search.candidates.push_back(x);
      }
    }
    for (size_t k = 1;; ++k) {
      search.chosen.clear();
      if (search.search(base, 0, k)) {
        return {k, GroupSubset::from_elements(G.order(), search.chosen)};
      }
    }
  }

  RankWitness group_rank(FiniteGroup const& G, GroupSearchOptions const& opts) {
    return relative_rank(G, GroupSubset(G.order()), opts);
  }

  std::vector<GroupSubset> all_subgroups(FiniteGroup const& G) {
    std::set<std::vector<element_index>> seen;
    std::vector<GroupSubset>             found;
    auto                                 add = [&](GroupSubset const& H) {
      if (seen.insert(H.elements()).second) {
        found.push_back(H);
      }
    };
    for (element_index x = 0; x < G.order(); ++x) {
      ClosureState c(G);
      c.extend(x);
      add(c.subgroup());
    }
    for (size_t i = 0; i < found.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        ClosureState c(G);
        c.extend(found[i]);
        c.extend(found[j]);
        add(c.subgroup());
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

}  // namespace semirank
