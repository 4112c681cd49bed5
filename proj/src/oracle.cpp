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

#include "semirank/oracle.hpp"

#include <algorithm>  // for sort, min, max
#include <limits>     // for numeric_limits
#include <memory>     // for make_shared

#include "semirank/group.hpp"
#include "semirank/rank.hpp"

namespace semirank {

  using id = AbstractSemigroup::id;

  ////////////////////////////////////////////////////////////////////////
  // AbstractSemigroup
  ////////////////////////////////////////////////////////////////////////

  AbstractSemigroup::AbstractSemigroup(size_t            n,
                                       std::vector<id>   table,
                                       std::optional<id> zero,
                                       std::vector<id>   generators)
      : _n(n), _table(std::move(table)), _zero(zero), _generators(std::move(generators)) {
    if (_table.size() != n * n) {
      throw UsageError("multiplication table has the wrong size");
    }
    for (auto v : _table) {
      if (v >= n) {
        throw UsageError("multiplication table entry out of range");
      }
    }
    if (_zero && *_zero >= n) {
      throw UsageError("zero out of range");
    }
    std::sort(_generators.begin(), _generators.end());
    _generators.erase(std::unique(_generators.begin(), _generators.end()), _generators.end());
    if (_generators.empty()) {
      for (id x = 0; x < n; ++x) {
        _generators.push_back(x);
      }
    }
  }

  AbstractSemigroup AbstractSemigroup::from_rms(ReesMatrixSemigroup const& S, size_t cap) {
    size_t const n = S.size();
    if (n > cap) {
      throw SizeError("semigroup has more than " + std::to_string(cap) + " elements");
    }
    std::vector<id> table(n * n);
    for (size_t x = 0; x < n; ++x) {
      auto a = S.from_index(x);
      for (size_t y = 0; y < n; ++y) {
        table[x * n + y] = static_cast<id>(S.to_index(S.multiply(a, S.from_index(y))));
      }
    }
    return AbstractSemigroup(n, std::move(table), id(0));
  }

  bool AbstractSemigroup::is_associative() const {
    for (id x = 0; x < _n; ++x) {
      for (id y = 0; y < _n; ++y) {
        auto xy = product(x, y);
        for (id z = 0; z < _n; ++z) {
          if (product(xy, z) != product(x, product(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<id> AbstractSemigroup::closure_of(std::span<id const> X) const {
    std::vector<bool> seen(_n, false);
    std::vector<id>   list;
    std::vector<id>   gens;
    auto              add = [&](id x) {
      if (!seen[x]) {
        seen[x] = true;
        list.push_back(x);
      }
    };
    for (auto x : X) {
      if (x >= _n) {
        throw UsageError("element id out of range");
      }
      gens.push_back(x);
      add(x);
    }
    if (_zero) {
      add(*_zero);
    }
    for (size_t k = 0; k < list.size(); ++k) {
      for (auto a : gens) {
        add(product(list[k], a));
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Tarjan's algorithm without recursion; next(v, k) is the k-th
    // out-neighbour of v, for k < degree.
    template <typename Next>
    std::vector<std::uint32_t> strong_components(size_t n, size_t degree, Next&& next) {
      constexpr auto             unset = std::numeric_limits<std::uint32_t>::max();
      std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
      std::vector<bool>          on_stack(n, false);
      std::vector<id>            stack;
      std::vector<std::pair<id, size_t>> frames;
      std::uint32_t                      counter = 0, comps = 0;
      for (id root = 0; root < n; ++root) {
        if (index[root] != unset) {
          continue;
        }
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
          auto& [v, k] = frames.back();
          if (k < degree) {
            id w = next(v, k++);
            if (index[w] == unset) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              frames.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
            continue;
          }
          id const done = v;
          frames.pop_back();
          if (!frames.empty()) {
            auto parent = frames.back().first;
            low[parent] = std::min(low[parent], low[done]);
          }
          if (low[done] == index[done]) {
            id w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp[w]     = comps;
            } while (w != done);
            ++comps;
          }
        }
      }
      return comp;
    }

    // Renumber component labels in order of their smallest member.
    size_t canonical_labels(std::vector<std::uint32_t>& label) {
      constexpr auto             unset = std::numeric_limits<std::uint32_t>::max();
      std::vector<std::uint32_t> fresh(label.size(), unset);
      std::uint32_t              count = 0;
      for (auto& l : label) {
        if (fresh[l] == unset) {
          fresh[l] = count++;
        }
        l = fresh[l];
      }
      return count;
    }
  }  // namespace

  GreenStructure green_structure(AbstractSemigroup const& S) {
    auto const&    gens = S.generators();
    size_t const   n    = S.size();
    size_t const   g    = gens.size();
    GreenStructure out;
    out.r_class = strong_components(n, g, [&](id v, size_t k) { return S.product(v, gens[k]); });
    out.l_class = strong_components(n, g, [&](id v, size_t k) { return S.product(gens[k], v); });
    out.j_class = strong_components(n, 2 * g, [&](id v, size_t k) {
      return k < g ? S.product(v, gens[k]) : S.product(gens[k - g], v);
    });
    out.r_count    = canonical_labels(out.r_class);
    out.l_count    = canonical_labels(out.l_class);
    size_t j_count = canonical_labels(out.j_class);

    out.jclasses.resize(j_count);
    for (id x = 0; x < n; ++x) {
      auto& J = out.jclasses[out.j_class[x]];
      J.elements.push_back(x);
      J.r_classes.push_back(out.r_class[x]);
      J.l_classes.push_back(out.l_class[x]);
    }
    std::vector<bool> entered(j_count, false);
    for (id x = 0; x < n; ++x) {
      for (auto a : gens) {
        for (auto y : {S.product(x, a), S.product(a, x)}) {
          if (out.j_class[y] != out.j_class[x]) {
            entered[out.j_class[y]] = true;
          }
        }
      }
    }
    for (size_t j = 0; j < j_count; ++j) {
      auto& J = out.jclasses[j];
      for (auto* v : {&J.r_classes, &J.l_classes}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
      }
      J.idempotents_per_r.assign(J.r_classes.size(), 0);
      J.idempotents_per_l.assign(J.l_classes.size(), 0);
      for (auto x : J.elements) {
        if (S.is_idempotent(x)) {
          ++J.idempotents;
          auto r = std::lower_bound(J.r_classes.begin(), J.r_classes.end(), out.r_class[x]);
          auto l = std::lower_bound(J.l_classes.begin(), J.l_classes.end(), out.l_class[x]);
          ++J.idempotents_per_r[r - J.r_classes.begin()];
          ++J.idempotents_per_l[l - J.l_classes.begin()];
        }
      }
      J.regular = J.idempotents > 0;
      J.maximal = !entered[j];
      J.is_zero = S.zero() && J.elements.size() == 1 && J.elements[0] == *S.zero();
    }
    return out;
  }

  AbstractSemigroup principal_factor(AbstractSemigroup const& S,
                                     GreenStructure const&    green,
                                     size_t                   j) {
    auto const&  elts = green.jclasses.at(j).elements;
    size_t const m    = elts.size() + 1;
    std::vector<id> position(S.size(), 0);
    for (size_t k = 0; k < elts.size(); ++k) {
      position[elts[k]] = static_cast<id>(k + 1);
    }
    std::vector<id> table(m * m, 0);
    for (size_t a = 1; a < m; ++a) {
      for (size_t b = 1; b < m; ++b) {
        auto st = S.product(elts[a - 1], elts[b - 1]);
        if (green.j_class[st] == j) {
          table[a * m + b] = position[st];
        }
      }
    }
    return AbstractSemigroup(m, std::move(table), id(0));
  }

  std::optional<Coordinatization> coordinatize(AbstractSemigroup const& S,
                                               GreenStructure const&    green,
                                               size_t                   j) {
    auto const&       J = green.jclasses.at(j);
    std::optional<id> e;
    for (auto x : J.elements) {
      if (S.is_idempotent(x)) {
        e = x;
        break;
      }
    }
    if (!e) {
      return std::nullopt;
    }
    auto const re = green.r_class[*e];
    auto const le = green.l_class[*e];

    std::vector<id> H;
    for (auto x : J.elements) {
      if (green.r_class[x] == re && green.l_class[x] == le) {
        H.push_back(x);
      }
    }
    std::vector<id> h_index(S.size(), 0);
    for (size_t k = 0; k < H.size(); ++k) {
      h_index[H[k]] = static_cast<id>(k);
    }
    std::vector<std::vector<element_index>> rows(H.size(), std::vector<element_index>(H.size()));
    for (size_t a = 0; a < H.size(); ++a) {
      for (size_t b = 0; b < H.size(); ++b) {
        rows[a][b] = h_index[S.product(H[a], H[b])];
      }
    }
    auto G = std::make_shared<FiniteGroup const>(
        FiniteGroup::from_table(rows, "H", std::max(H.size(), default_max_group_order)));

    auto position = [](std::vector<std::uint32_t> const& v, std::uint32_t c) {
      return static_cast<size_t>(std::lower_bound(v.begin(), v.end(), c) - v.begin());
    };
    size_t const    I = J.r_classes.size(), L = J.l_classes.size();
    std::vector<id> r(I), q(L);
    std::vector<bool> has_r(I, false), has_q(L, false);
    for (auto x : J.elements) {
      if (green.l_class[x] == le) {
        auto i = position(J.r_classes, green.r_class[x]);
        if (!has_r[i]) {
          r[i]     = x;
          has_r[i] = true;
        }
      }
      if (green.r_class[x] == re) {
        auto l = position(J.l_classes, green.l_class[x]);
        if (!has_q[l]) {
          q[l]     = x;
          has_q[l] = true;
        }
      }
    }
    StructureMatrix P(L, I);
    for (size_t l = 0; l < L; ++l) {
      for (size_t i = 0; i < I; ++i) {
        auto p = S.product(q[l], r[i]);
        if (green.r_class[p] == re && green.l_class[p] == le) {
          P.set(l, i, h_index[p]);
        }
      }
    }
    ReesMatrixSemigroup rms(G, std::move(P));
    std::vector<id>     lift(rms.size(), 0);
    for (std::uint32_t i = 0; i < I; ++i) {
      for (element_index h = 0; h < H.size(); ++h) {
        for (std::uint32_t l = 0; l < L; ++l) {
          lift[rms.to_index(RmsElement(i, h, l))] = S.product(S.product(r[i], H[h]), q[l]);
        }
      }
    }
    return Coordinatization{std::move(rms), std::move(lift), std::move(H)};
  }

  size_t maximal_jclass_lower_bound(AbstractSemigroup const& S) {
    auto   green = green_structure(S);
    size_t total = 0;
    for (size_t j = 0; j < green.jclasses.size(); ++j) {
      auto const& J = green.jclasses[j];
      if (!J.maximal || J.is_zero) {
        continue;
      }
      if (auto c = coordinatize(S, green, j)) {
        total += rank_rms(c->rms).value;
      } else {
        total += J.elements.size();
      }
    }
    return total;
  }

  std::vector<id> maximal_jclass_witness(AbstractSemigroup const& S) {
    auto            green = green_structure(S);
    std::vector<id> out;
    for (size_t j = 0; j < green.jclasses.size(); ++j) {
      auto const& J = green.jclasses[j];
      if (!J.maximal || J.is_zero) {
        continue;
      }
      if (auto c = coordinatize(S, green, j)) {
        for (auto const& x : minimal_generating_set(c->rms)) {
          out.push_back(c->lift[c->rms.to_index(x)]);
        }
      } else {
        out.insert(out.end(), J.elements.begin(), J.elements.end());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Exact rank
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<bool> indecomposable(AbstractSemigroup const& S) {
      std::vector<bool> hit(S.size(), false);
      for (id x = 0; x < S.size(); ++x) {
        for (id y = 0; y < S.size(); ++y) {
          hit[S.product(x, y)] = true;
        }
      }
      hit.flip();
      if (S.zero()) {
        hit[*S.zero()] = false;
      }
      return hit;
    }

    class RankSearch {
     public:
      RankSearch(AbstractSemigroup const& S, GreenStructure const& green, size_t max_nodes)
          : _S(S), _green(green), _max_nodes(max_nodes) {
        for (size_t j = 0; j < green.jclasses.size(); ++j) {
          auto const& J = green.jclasses[j];
          if (J.maximal && !J.is_zero) {
            _top.push_back(j);
          }
        }
        _r_hits.assign(green.r_count, 0);
        _l_hits.assign(green.l_count, 0);
      }

      void cover(id x, int delta) {
        auto const& J = _green.jclasses[_green.j_class[x]];
        if (J.maximal && !J.is_zero) {
          _r_hits[_green.r_class[x]] += delta;
          _l_hits[_green.l_class[x]] += delta;
        }
      }

      // Generators still needed to meet every R- and L-class on top.
      size_t shortfall() const {
        size_t need = 0;
        for (auto j : _top) {
          auto const& J = _green.jclasses[j];
          size_t      r = 0, l = 0;
          for (auto c : J.r_classes) {
            r += _r_hits[c] == 0;
          }
          for (auto c : J.l_classes) {
            l += _l_hits[c] == 0;
          }
          need += std::max(r, l);
        }
        return need;
      }

      struct Level {
        std::vector<bool> member;
        std::vector<id>   list;
      };

      // <old u {c}> from the closed set old and the generator list gens,
      // which already contains c.
      Level extend(Level const& old, id c) const {
        Level next = old;
        auto  add  = [&](id x) {
          if (!next.member[x]) {
            next.member[x] = true;
            next.list.push_back(x);
          }
        };
        size_t const first = next.list.size();
        add(c);
        for (auto y : old.list) {
          add(_S.product(y, c));
        }
        for (size_t k = first; k < next.list.size(); ++k) {
          for (auto a : _gens) {
            add(_S.product(next.list[k], a));
          }
        }
        return next;
      }

      bool search(Level const& level, size_t start, size_t remaining) {
        if (++_nodes > _max_nodes) {
          throw BudgetError("exact rank search exceeded " + std::to_string(_max_nodes)
                            + " nodes");
        }
        if (remaining == 0) {
          return level.list.size() == _S.size();
        }
        if (shortfall() > remaining) {
          return false;
        }
        for (size_t k = start; k + remaining <= _candidates.size(); ++k) {
          id c = _candidates[k];
          if (level.member[c]) {
            continue;
          }
          _gens.push_back(c);
          cover(c, +1);
          auto next = extend(level, c);
          if (search(next, k + 1, remaining - 1)) {
            return true;
          }
          cover(c, -1);
          _gens.pop_back();
        }
        return false;
      }

      AbstractSemigroup const& _S;
      GreenStructure const&    _green;
      size_t                   _max_nodes;
      size_t                   _nodes = 0;
      std::vector<size_t>      _top;
      std::vector<int>         _r_hits, _l_hits;
      std::vector<id>          _gens;
      std::vector<id>          _candidates;
    };
  }  // namespace

  size_t coverage_lower_bound(AbstractSemigroup const& S, GreenStructure const& green) {
    auto   forced = indecomposable(S);
    size_t total  = 0;
    for (auto const& J : green.jclasses) {
      size_t f = 0;
      for (auto x : J.elements) {
        f += forced[x];
      }
      if (J.maximal && !J.is_zero) {
        total += std::max({J.r_classes.size(), J.l_classes.size(), f});
      } else {
        total += f;
      }
    }
    return total;
  }

  std::optional<ExactRank> exact_rank(AbstractSemigroup const& S,
                                      size_t                   hint_upper,
                                      ExactRankOptions const&  opts) {
    auto       green  = green_structure(S);
    auto       forced = indecomposable(S);
    RankSearch search(S, green, opts.max_nodes);

    RankSearch::Level base{std::vector<bool>(S.size(), false), {}};
    if (S.zero()) {
      base.member[*S.zero()] = true;
      base.list.push_back(*S.zero());
    }
    std::vector<id> fixed;
    for (id x = 0; x < S.size(); ++x) {
      if (forced[x]) {
        fixed.push_back(x);
        search._gens.push_back(x);
        search.cover(x, +1);
        base = search.extend(base, x);
      }
    }
    for (id x = 0; x < S.size(); ++x) {
      if (!forced[x] && x != S.zero()) {
        search._candidates.push_back(x);
      }
    }
    size_t const lower = std::max(coverage_lower_bound(S, green), fixed.size());
    size_t const upper = std::min(hint_upper, fixed.size() + search._candidates.size());
    for (size_t k = lower; k <= upper; ++k) {
      if (search.search(base, 0, k - fixed.size())) {
        ExactRank out{k, search._gens};
        std::sort(out.witness.begin(), out.witness.end());
        return out;
      }
    }
    return std::nullopt;
  }

  bool verify_generates(AbstractSemigroup const& S, std::span<id const> X) {
    return S.closure_of(X).size() == S.size();
  }

  size_t rms_closure_size(ReesMatrixSemigroup const& S, std::span<RmsElement const> X) {
    for (auto const& x : X) {
      if (!S.contains(x)) {
        throw UsageError("element does not belong to the semigroup");
      }
    }
    std::vector<bool>       seen(S.size(), false);
    std::vector<RmsElement> list{RmsElement::zero()};
    seen[0] = true;
    for (auto const& x : X) {
      if (!seen[S.to_index(x)]) {
        seen[S.to_index(x)] = true;
        list.push_back(x);
      }
    }
    for (size_t k = 1; k < list.size(); ++k) {
      for (auto const& a : X) {
        auto y   = S.multiply(list[k], a);
        auto idx = S.to_index(y);
        if (!seen[idx]) {
          seen[idx] = true;
          list.push_back(y);
        }
      }
    }
    return list.size();
  }

  bool verify_generates(ReesMatrixSemigroup const& S, std::span<RmsElement const> X) {
    return rms_closure_size(S, X) == S.size();
  }

}  // namespace semirank
