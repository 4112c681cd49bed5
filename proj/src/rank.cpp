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

#include "semirank/rank.hpp"

#include <algorithm>  // for max, sort
#include <deque>      // for deque
#include <map>        // for map
#include <optional>   // for optional
#include <utility>    // for pair

#include "semirank/errors.hpp"
#include "semirank/oracle.hpp"

namespace semirank {

  ////////////////////////////////////////////////////////////////////////
  // sigma_min
  ////////////////////////////////////////////////////////////////////////

  SigmaMinResult sigma_min(FiniteGroup const&              G,
                           std::vector<GroupSubset> const& H,
                           SigmaMinOptions const&          opts) {
    if (H.empty()) {
      throw UsageError("sigma_min needs at least one subgroup");
    }
    for (auto const& h : H) {
      if (h.universe() != G.order() || !h.is_subgroup()) {
        throw UsageError("sigma_min expects verified subgroups of " + G.name());
      }
    }
    size_t const n = H.size();
    // choices[k]: admissible (g, g H_k g^-1) for k >= 1, g increasing.
    std::vector<std::vector<std::pair<element_index, GroupSubset>>> choices(n);
    for (size_t k = 1; k < n; ++k) {
      std::vector<GroupSubset> seen;
      for (element_index g = 0; g < G.order(); ++g) {
        auto conj = conjugate_subset(G, H[k], g);
        if (opts.prune) {
          if (std::find(seen.begin(), seen.end(), conj) != seen.end()) {
            continue;
          }
          seen.push_back(conj);
        }
        choices[k].emplace_back(g, std::move(conj));
      }
    }

    std::map<GroupSubset, RankWitness> cache;
    std::optional<SigmaMinResult>      best;
    std::vector<size_t>                odometer(n, 0);
    size_t                             tuples = 0;
    while (true) {
      if (++tuples > opts.max_tuples) {
        throw BudgetError("sigma_min exceeded " + std::to_string(opts.max_tuples)
                          + " conjugator tuples");
      }
      ClosureState U(G);
      U.extend(H[0]);
      for (size_t k = 1; k < n; ++k) {
        U.extend(choices[k][odometer[k]].second);
      }
      auto it = cache.find(U.subgroup());
      if (it == cache.end()) {
        it = cache.emplace(U.subgroup(), relative_rank(G, U.subgroup(), opts.group)).first;
      }
      if (!best || it->second.value < best->value) {
        SigmaMinResult r{it->second.value, {G.identity()}, it->second.witness};
        for (size_t k = 1; k < n; ++k) {
          r.conjugators.push_back(choices[k][odometer[k]].first);
        }
        best = std::move(r);
        if (best->value == 0) {
          break;
        }
      }
      // Advance the last coordinate fastest, giving lexicographic order.
      bool   exhausted = true;
      size_t k         = n;
      while (k-- > 1) {
        if (++odometer[k] < choices[k].size()) {
          exhausted = false;
          break;
        }
        odometer[k] = 0;
      }
      if (exhausted) {
        break;
      }
    }
    return *best;
  }

  ////////////////////////////////////////////////////////////////////////
  // rank_rms
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(RankCase c) {
    return c == RankCase::zero_matrix ? "zero-matrix" : "general";
  }

  namespace {
    RankReport formula(ReesMatrixSemigroup const& S,
                       GrahamNormalForm const*    gnf,
                       RankOptions const&         opts) {
      RankReport r;
      if (S.matrix().is_zero_matrix()) {
        r.value                     = S.size() - 1;
        r.rank_case                 = RankCase::zero_matrix;
        r.ingredients.isolated_rows = S.i_count();
        r.ingredients.isolated_cols = S.lambda_count();
        return r;
      }
      std::vector<GroupSubset> H;
      for (auto const& b : gnf->blocks()) {
        H.push_back(b.subgroup);
      }
      r.rank_case = RankCase::general;
      r.sigma     = sigma_min(S.group(), H, opts.sigma);
      auto& in    = r.ingredients;
      in.isolated_rows = gnf->isolated_i_count();
      in.isolated_cols = gnf->isolated_lambda_count();
      in.rows          = S.i_count() - in.isolated_rows;
      in.columns       = S.lambda_count() - in.isolated_cols;
      in.components    = H.size();
      in.sigma_min     = r.sigma.value;
      r.value = std::max({in.rows, in.columns, in.sigma_min + in.components - 1})
                + in.isolated_rows + in.isolated_cols;
      return r;
    }
  }  // namespace

  RankReport rank_rms(ReesMatrixSemigroup const& S, RankOptions const& opts) {
    RankReport r;
    if (S.matrix().is_zero_matrix()) {
      r = formula(S, nullptr, opts);
    } else {
      auto gnf = graham_normal_form(S);
      r        = formula(S, &gnf, opts);
    }
    if (opts.with_witness) {
      r.witness = minimal_generating_set(S, opts);
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // minimal_generating_set
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Arc = std::pair<std::uint32_t, std::uint32_t>;  // (row, column)

    // The regular part of a normalized matrix: rows [0, A), columns [0, B).
    struct RegularPart {
      StructureMatrix const&                  Q;
      size_t                                  A, B;
      std::vector<std::vector<std::uint32_t>> rows_of;  // column -> adjacent rows

      RegularPart(StructureMatrix const& q, size_t a, size_t b) : Q(q), A(a), B(b), rows_of(b) {
        for (size_t l = 0; l < B; ++l) {
          for (size_t i = 0; i < A; ++i) {
            if (Q.at(l, i)) {
              rows_of[l].push_back(static_cast<std::uint32_t>(i));
            }
          }
        }
      }

      // Rows are vertices [0, A), columns [A, A + B).
      bool strongly_connected(std::vector<Arc> const& arcs) const {
        size_t const                    V = A + B;
        std::vector<std::vector<size_t>> fwd(V), bwd(V);
        for (auto [i, l] : arcs) {
          fwd[i].push_back(A + l);
          bwd[A + l].push_back(i);
        }
        for (size_t l = 0; l < B; ++l) {
          for (auto i : rows_of[l]) {
            fwd[A + l].push_back(i);
            bwd[i].push_back(A + l);
          }
        }
        auto reaches_all = [&](std::vector<std::vector<size_t>> const& adj) {
          std::vector<bool>  seen(V, false);
          std::deque<size_t> queue{A};
          seen[A]      = true;
          size_t count = 1;
          while (!queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            for (auto w : adj[v]) {
              if (!seen[w]) {
                seen[w] = true;
                ++count;
                queue.push_back(w);
              }
            }
          }
          return count == V;
        };
        return reaches_all(fwd) && reaches_all(bwd);
      }
    };

    // max(A, B) arcs meeting every row and column whose digraph, together
    // with the non-zero entries, is strongly connected.
    std::optional<std::vector<Arc>> find_pattern(RegularPart const& T, size_t max_nodes) {
      size_t const m0 = std::max(T.A, T.B);
      for (size_t t = 0; t < m0; ++t) {
        std::vector<Arc> arcs;
        for (size_t s = 0; s < m0; ++s) {
          arcs.emplace_back(static_cast<std::uint32_t>(s % T.A),
                            static_cast<std::uint32_t>((s + t) % T.B));
        }
        if (T.strongly_connected(arcs)) {
          return arcs;
        }
      }
      // Assign each vertex of the larger side a partner on the smaller side,
      // hitting every vertex of the smaller side.
      bool const          rows_small = T.A <= T.B;
      size_t const        big = rows_small ? T.B : T.A, small = rows_small ? T.A : T.B;
      std::vector<size_t> partner(big, 0), hits(small, 0);
      size_t              missing = small, nodes = 0;
      std::vector<Arc>    arcs(big);
      auto                search  = [&](auto&& self, size_t k) -> bool {
        if (++nodes > max_nodes) {
          throw BudgetError("generating pattern search exceeded " + std::to_string(max_nodes)
                            + " nodes");
        }
        if (k == big) {
          for (size_t s = 0; s < big; ++s) {
            auto a  = static_cast<std::uint32_t>(s);
            auto b  = static_cast<std::uint32_t>(partner[s]);
            arcs[s] = rows_small ? Arc{b, a} : Arc{a, b};
          }
          return T.strongly_connected(arcs);
        }
        if (missing > big - k) {
          return false;
        }
        for (size_t p = 0; p < small; ++p) {
          partner[k] = p;
          missing -= hits[p]++ == 0;
          if (self(self, k + 1)) {
            return true;
          }
          missing += --hits[p] == 0;
        }
        return false;
      };
      if (search(search, 0)) {
        return arcs;
      }
      return std::nullopt;
    }

    std::optional<std::vector<RmsElement>> construct(GrahamNormalForm const& gnf,
                                                     RankReport const&       report,
                                                     RankOptions const&      opts) {
      auto const&  T = gnf.normalized();
      auto const&  G = T.group();
      auto const&  Q = T.matrix();
      size_t const A = report.ingredients.rows, B = report.ingredients.columns;
      size_t const n = report.ingredients.components;
      size_t const m = std::max({A, B, report.sigma.value + n - 1});

      RegularPart part(Q, A, B);
      auto        pattern = find_pattern(part, opts.max_search);
      if (!pattern) {
        return std::nullopt;
      }
      std::vector<Arc> arcs = *pattern;
      {
        std::vector<bool> used(A * B, false);
        for (auto [i, l] : arcs) {
          used[i * B + l] = true;
        }
        for (size_t k = 0; arcs.size() < m; k = (k + 1) % (A * B)) {
          if (!used[k] || std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
            used[k] = true;
            arcs.emplace_back(static_cast<std::uint32_t>(k / B), static_cast<std::uint32_t>(k % B));
          }
        }
      }

      // Out-arborescence from column 0; rows are entered along non-zero
      // entries and columns along arcs.
      std::vector<std::optional<std::uint32_t>> row_parent(A), col_parent_arc(B);
      std::vector<bool>                         col_seen(B, false), row_seen(A, false);
      std::deque<std::pair<bool, std::uint32_t>> queue{{false, 0}};
      col_seen[0] = true;
      while (!queue.empty()) {
        auto [is_row, v] = queue.front();
        queue.pop_front();
        if (!is_row) {
          for (auto i : part.rows_of[v]) {
            if (!row_seen[i]) {
              row_seen[i]   = true;
              row_parent[i] = v;
              queue.emplace_back(true, i);
            }
          }
        } else {
          for (std::uint32_t a = 0; a < arcs.size(); ++a) {
            auto l = arcs[a].second;
            if (arcs[a].first == v && !col_seen[l]) {
              col_seen[l]       = true;
              col_parent_arc[l] = a;
              queue.emplace_back(false, l);
            }
          }
        }
      }

      // Free slots: arcs off the arborescence, then every column but the
      // first of its block.
      std::vector<bool> tree_arc(arcs.size(), false);
      for (size_t l = 0; l < B; ++l) {
        if (col_parent_arc[l]) {
          tree_arc[*col_parent_arc[l]] = true;
        }
      }
      std::vector<element_index> column_conj(B, G.identity());
      std::vector<bool>          base_column(B, false);
      for (size_t k = 0; k < gnf.blocks().size(); ++k) {
        auto const& b = gnf.blocks()[k];
        for (size_t l = b.lambda_begin; l < b.lambda_end; ++l) {
          column_conj[l] = report.sigma.conjugators[k];
        }
        base_column[b.lambda_begin] = true;
      }
      auto                       X = report.sigma.complement.elements();
      size_t                     next_x = 0;
      auto                       take   = [&]() -> std::optional<element_index> {
        if (next_x < X.size()) {
          return X[next_x++];
        }
        return std::nullopt;
      };
      std::vector<std::optional<element_index>> arc_value(arcs.size());
      for (size_t a = 0; a < arcs.size(); ++a) {
        if (!tree_arc[a]) {
          arc_value[a] = take();
        }
      }
      std::vector<element_index> c(B);
      for (size_t l = 0; l < B; ++l) {
        auto y = base_column[l] ? std::nullopt : take();
        c[l]   = G.product(y.value_or(G.identity()), column_conj[l]);
      }
      if (next_x < X.size()) {
        throw InternalError("too few free slots for the complement");
      }
      std::vector<element_index> pi(A);
      for (size_t i = 0; i < A; ++i) {
        auto p = *row_parent[i];
        pi[i]  = G.product(c[p], *Q.at(p, i));
      }

      std::vector<RmsElement> gens;
      auto                    present = [&](RmsElement const& x) {
        return std::find(gens.begin(), gens.end(), x) != gens.end();
      };
      for (size_t a = 0; a < arcs.size(); ++a) {
        auto [i, l] = arcs[a];
        auto label  = [&](element_index y) {
          return RmsElement(i, G.product(G.product(G.inverse(pi[i]), y), c[l]), l);
        };
        if (tree_arc[a] || arc_value[a]) {
          gens.push_back(label(tree_arc[a] ? G.identity() : *arc_value[a]));
          continue;
        }
        // Filler: any contribution will do, so pick one not yet present.
        for (element_index y = 0; y < G.order(); ++y) {
          if (!present(label(y))) {
            gens.push_back(label(y));
            break;
          }
        }
      }
      for (size_t l = B; l < T.lambda_count(); ++l) {
        gens.emplace_back(0, G.identity(), static_cast<std::uint32_t>(l));
      }
      for (size_t i = A; i < T.i_count(); ++i) {
        gens.emplace_back(static_cast<std::uint32_t>(i), G.identity(), 0);
      }
      for (auto& x : gens) {
        x = gnf.from_normal(x);
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      return gens;
    }

    // Lexicographically first generating set of size k meeting every row
    // and column.
    std::optional<std::vector<RmsElement>> exhaustive(ReesMatrixSemigroup const& S,
                                                      size_t                     k,
                                                      size_t                     max_nodes) {
      auto elts = enumerate_elements(S);
      elts.erase(elts.begin());
      std::vector<RmsElement> chosen;
      std::vector<int>        row_hits(S.i_count(), 0), col_hits(S.lambda_count(), 0);
      size_t                  nodes = 0;
      auto uncovered = [&] {
        size_t r = 0, l = 0;
        for (auto h : row_hits) {
          r += h == 0;
        }
        for (auto h : col_hits) {
          l += h == 0;
        }
        return std::max(r, l);
      };
      auto search = [&](auto&& self, size_t start) -> bool {
        if (++nodes > max_nodes) {
          throw BudgetError("generating set search exceeded " + std::to_string(max_nodes)
                            + " nodes");
        }
        if (chosen.size() == k) {
          return verify_generates(S, chosen);
        }
        if (uncovered() > k - chosen.size()) {
          return false;
        }
        for (size_t e = start; e + (k - chosen.size()) <= elts.size(); ++e) {
          auto const& x = elts[e];
          chosen.push_back(x);
          ++row_hits[x.i()];
          ++col_hits[x.lambda()];
          if (self(self, e + 1)) {
            return true;
          }
          --row_hits[x.i()];
          --col_hits[x.lambda()];
          chosen.pop_back();
        }
        return false;
      };
      if (search(search, 0)) {
        return chosen;
      }
      return std::nullopt;
    }
  }  // namespace

  std::vector<RmsElement> minimal_generating_set(ReesMatrixSemigroup const& S,
                                                 RankOptions const&         opts) {
    if (S.matrix().is_zero_matrix()) {
      auto all = enumerate_elements(S);
      all.erase(all.begin());
      return all;
    }
    auto gnf    = graham_normal_form(S);
    auto report = formula(S, &gnf, opts);
    if (auto gens = construct(gnf, report, opts)) {
      if (gens->size() == report.value && verify_generates(S, *gens)) {
        return *gens;
      }
    }
    if (auto gens = exhaustive(S, report.value, opts.max_search)) {
      return *gens;
    }
    throw InternalError("no generating set of size " + std::to_string(report.value)
                        + " exists; the rank formula is contradicted");
  }

  ////////////////////////////////////////////////////////////////////////
  // Unique maximal J-class
  ////////////////////////////////////////////////////////////////////////

  size_t rank_via_unique_max_jclass(size_t             i,
                                    size_t             j,
                                    FiniteGroup const& H,
                                    bool               one_idempotent_per_row_and_column) {
    auto const r = group_rank(H).value;
    if (r <= 1) {
      return std::max(i, j);
    }
    if (r == 2) {
      return std::max(i, j) + (i == j && one_idempotent_per_row_and_column ? 1 : 0);
    }
    throw UnsupportedError("maximal subgroup of rank " + std::to_string(r)
                           + " is not covered; use rank_rms on the principal factor");
  }

}  // namespace semirank
