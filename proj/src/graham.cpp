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

#include "semirank/graham.hpp"

#include <algorithm>  // for sort, shuffle
#include <deque>      // for deque
#include <random>     // for mt19937_64

#include "semirank/errors.hpp"

namespace semirank {

  ////////////////////////////////////////////////////////////////////////
  // GHGraph
  ////////////////////////////////////////////////////////////////////////

  GHGraph::GHGraph(size_t i_count, size_t lambda_count)
      : _i_count(i_count), _lambda_count(lambda_count), _arcs(i_count + lambda_count) {}

  void GHGraph::add_edge(std::uint32_t lambda,
                         std::uint32_t i,
                         element_index label,
                         element_index inverse) {
    _edges.push_back({lambda, i, label});
    auto l = lambda_vertex(lambda);
    auto v = i_vertex(i);
    auto by_target = [](Arc const& a, Arc const& b) { return a.target < b.target; };
    auto insert    = [&](std::vector<Arc>& list, Arc arc) {
      list.insert(std::upper_bound(list.begin(), list.end(), arc, by_target), arc);
    };
    insert(_arcs[l], {v, label});
    insert(_arcs[v], {l, inverse});
  }

  GHGraph build_graph(ReesMatrixSemigroup const& S) {
    auto const& P = S.matrix();
    auto const& G = S.group();
    GHGraph     graph(P.i_count(), P.lambda_count());
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      for (size_t i = 0; i < P.i_count(); ++i) {
        if (auto const& p = P.at(l, i)) {
          graph.add_edge(static_cast<std::uint32_t>(l),
                         static_cast<std::uint32_t>(i),
                         *p,
                         G.inverse(*p));
        }
      }
    }
    return graph;
  }

  ////////////////////////////////////////////////////////////////////////
  // Components and forests
  ////////////////////////////////////////////////////////////////////////

  ComponentDecomposition decompose(GHGraph const& graph) {
    ComponentDecomposition out;
    out.component_of.assign(graph.vertex_count(), std::nullopt);
    // Every non-trivial component meets Lambda, so starting a search at each
    // unvisited column in turn orders components by their smallest column.
    for (size_t l = 0; l < graph.lambda_count(); ++l) {
      auto start = graph.lambda_vertex(l);
      if (out.component_of[start] || graph.degree(start) == 0) {
        continue;
      }
      size_t const                       index = out.components.size();
      ComponentDecomposition::Component  comp;
      std::deque<vertex_index>           queue{start};
      out.component_of[start] = index;
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (graph.is_i_vertex(v)) {
          comp.is.push_back(graph.label_of(v));
        } else {
          comp.lambdas.push_back(graph.label_of(v));
        }
        for (auto const& arc : graph.arcs(v)) {
          if (!out.component_of[arc.target]) {
            out.component_of[arc.target] = index;
            queue.push_back(arc.target);
          }
        }
      }
      std::sort(comp.is.begin(), comp.is.end());
      std::sort(comp.lambdas.begin(), comp.lambdas.end());
      out.components.push_back(std::move(comp));
    }
    for (size_t i = 0; i < graph.i_count(); ++i) {
      if (graph.degree(graph.i_vertex(i)) == 0) {
        out.isolated_i.push_back(static_cast<std::uint32_t>(i));
      }
    }
    for (size_t l = 0; l < graph.lambda_count(); ++l) {
      if (graph.degree(graph.lambda_vertex(l)) == 0) {
        out.isolated_lambda.push_back(static_cast<std::uint32_t>(l));
      }
    }
    return out;
  }

  size_t SpanningForest::edge_count() const noexcept {
    size_t n = 0;
    for (auto const& p : parent) {
      n += p.has_value();
    }
    return n;
  }

  namespace {
    template <typename Order>
    SpanningForest bfs_forest(GHGraph const&                graph,
                              ComponentDecomposition const& decomp,
                              std::vector<vertex_index> const& roots,
                              Order&&                          order) {
      SpanningForest forest;
      forest.roots = roots;
      forest.parent.assign(graph.vertex_count(), std::nullopt);
      std::vector<bool> seen(graph.vertex_count(), false);
      for (auto root : roots) {
        std::deque<vertex_index> queue{root};
        seen[root] = true;
        while (!queue.empty()) {
          auto v = queue.front();
          queue.pop_front();
          for (auto w : order(v)) {
            if (!seen[w]) {
              seen[w]          = true;
              forest.parent[w] = v;
              queue.push_back(w);
            }
          }
        }
      }
      (void) decomp;
      return forest;
    }
  }  // namespace

  SpanningForest spanning_forest(GHGraph const& graph, ComponentDecomposition const& decomp) {
    std::vector<vertex_index> roots;
    for (auto const& comp : decomp.components) {
      roots.push_back(graph.i_vertex(comp.is.front()));
    }
    return bfs_forest(graph, decomp, roots, [&graph](vertex_index v) {
      std::vector<vertex_index> out;
      for (auto const& arc : graph.arcs(v)) {
        out.push_back(arc.target);
      }
      return out;
    });
  }

  SpanningForest random_spanning_forest(GHGraph const&                graph,
                                        ComponentDecomposition const& decomp,
                                        std::uint64_t                 seed) {
    std::mt19937_64           rng(seed);
    std::vector<vertex_index> roots;
    for (auto const& comp : decomp.components) {
      std::vector<vertex_index> vertices;
      for (auto i : comp.is) {
        vertices.push_back(graph.i_vertex(i));
      }
      for (auto l : comp.lambdas) {
        vertices.push_back(graph.lambda_vertex(l));
      }
      std::uniform_int_distribution<size_t> pick(0, vertices.size() - 1);
      roots.push_back(vertices[pick(rng)]);
    }
    return bfs_forest(graph, decomp, roots, [&graph, &rng](vertex_index v) {
      std::vector<vertex_index> out;
      for (auto const& arc : graph.arcs(v)) {
        out.push_back(arc.target);
      }
      std::shuffle(out.begin(), out.end(), rng);
      return out;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalization
  ////////////////////////////////////////////////////////////////////////

  RmsElement NormalizationWitness::apply(FiniteGroup const& G,
                                         size_t             i_count,
                                         RmsElement const&  x) const {
    if (x.is_zero()) {
      return x;
    }
    auto pi = phi[x.i()];
    auto pl = phi[i_count + x.lambda()];
    return RmsElement(x.i(), G.product(G.product(pi, x.g()), G.inverse(pl)), x.lambda());
  }

  RmsElement NormalizationWitness::invert(FiniteGroup const& G,
                                          size_t             i_count,
                                          RmsElement const&  x) const {
    if (x.is_zero()) {
      return x;
    }
    auto pi = phi[x.i()];
    auto pl = phi[i_count + x.lambda()];
    return RmsElement(x.i(), G.product(G.product(G.inverse(pi), x.g()), pl), x.lambda());
  }

  namespace {
    NormalizationWitness potential(ReesMatrixSemigroup const& S, SpanningForest const& forest) {
      auto const&          G = S.group();
      auto const&          P = S.matrix();
      size_t const         n = S.i_count() + S.lambda_count();
      NormalizationWitness w;
      if (forest.parent.size() != n) {
        throw UsageError("spanning forest does not match the semigroup");
      }
      w.phi.assign(n, G.identity());
      std::vector<bool> done(n, false);
      // Resolve each vertex after its parent; depth is bounded by n.
      auto resolve = [&](auto&& self, vertex_index v) -> element_index {
        if (done[v]) {
          return w.phi[v];
        }
        done[v]     = true;
        auto parent = forest.parent[v];
        if (!parent) {
          return w.phi[v];
        }
        auto up = self(self, *parent);
        if (v < S.i_count()) {
          // parent lambda -> child i: phi(i) = phi(lambda) p_{lambda i}
          auto const& p = P.at(*parent - S.i_count(), v);
          if (!p) {
            throw UsageError("spanning forest uses a non-edge");
          }
          w.phi[v] = G.product(up, *p);
        } else {
          // parent i -> child lambda: phi(lambda) = phi(i) p_{lambda i}^-1
          auto const& p = P.at(v - S.i_count(), *parent);
          if (!p) {
            throw UsageError("spanning forest uses a non-edge");
          }
          w.phi[v] = G.product(up, G.inverse(*p));
        }
        return w.phi[v];
      };
      for (vertex_index v = 0; v < n; ++v) {
        resolve(resolve, v);
      }
      return w;
    }
  }  // namespace

  std::pair<ReesMatrixSemigroup, NormalizationWitness>
  normalize(ReesMatrixSemigroup const& S, SpanningForest const& forest) {
    auto        w = potential(S, forest);
    auto const& G = S.group();
    auto const& P = S.matrix();
    StructureMatrix Q(P.lambda_count(), P.i_count());
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      for (size_t i = 0; i < P.i_count(); ++i) {
        if (auto const& p = P.at(l, i)) {
          auto pl = w.phi[S.i_count() + l];
          Q.set(l, i, G.product(G.product(pl, *p), G.inverse(w.phi[i])));
        }
      }
    }
    return {ReesMatrixSemigroup(S.group_ptr(), std::move(Q)), std::move(w)};
  }

  ////////////////////////////////////////////////////////////////////////
  // GrahamNormalForm
  ////////////////////////////////////////////////////////////////////////

  namespace {
    ReesMatrixSemigroup reorder(ReesMatrixSemigroup const&       S,
                                NormalizationWitness const&      w,
                                std::vector<std::uint32_t> const& i_order,
                                std::vector<std::uint32_t> const& lambda_order) {
      auto const&     G = S.group();
      auto const&     P = S.matrix();
      StructureMatrix Q(P.lambda_count(), P.i_count());
      for (size_t nl = 0; nl < lambda_order.size(); ++nl) {
        for (size_t ni = 0; ni < i_order.size(); ++ni) {
          auto l = lambda_order[nl];
          auto i = i_order[ni];
          if (auto const& p = P.at(l, i)) {
            auto pl = w.phi[S.i_count() + l];
            Q.set(nl, ni, G.product(G.product(pl, *p), G.inverse(w.phi[i])));
          }
        }
      }
      return ReesMatrixSemigroup(S.group_ptr(), std::move(Q));
    }

    std::vector<std::uint32_t> invert_order(std::vector<std::uint32_t> const& order) {
      std::vector<std::uint32_t> pos(order.size());
      for (size_t k = 0; k < order.size(); ++k) {
        pos[order[k]] = static_cast<std::uint32_t>(k);
      }
      return pos;
    }

    std::vector<std::uint32_t> concat_order(ComponentDecomposition const& d, bool rows) {
      std::vector<std::uint32_t> out;
      for (auto const& comp : d.components) {
        auto const& part = rows ? comp.is : comp.lambdas;
        out.insert(out.end(), part.begin(), part.end());
      }
      auto const& rest = rows ? d.isolated_i : d.isolated_lambda;
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    }
  }  // namespace

  GrahamNormalForm::GrahamNormalForm(ReesMatrixSemigroup const& S, SpanningForest const& forest)
      : _original(S),
        _graph(build_graph(S)),
        _decomp(decompose(_graph)),
        _forest(forest),
        _witness(potential(S, forest)),
        _i_order(concat_order(_decomp, true)),
        _lambda_order(concat_order(_decomp, false)),
        _i_position(invert_order(_i_order)),
        _lambda_position(invert_order(_lambda_order)),
        _normalized(reorder(S, _witness, _i_order, _lambda_order)) {
    auto const& G  = S.group();
    auto const& Q  = _normalized.matrix();
    size_t      ib = 0, lb = 0;
    for (auto const& comp : _decomp.components) {
      Block b{ib, ib + comp.is.size(), lb, lb + comp.lambdas.size(), GroupSubset(G.order())};
      GroupSubset entries(G.order());
      for (size_t l = b.lambda_begin; l < b.lambda_end; ++l) {
        for (size_t i = b.i_begin; i < b.i_end; ++i) {
          if (auto const& q = Q.at(l, i)) {
            entries.insert(*q);
          }
        }
      }
      b.subgroup = subgroup_closure(G, entries);
      ib         = b.i_end;
      lb         = b.lambda_end;
      _blocks.push_back(std::move(b));
    }
  }

  RmsElement GrahamNormalForm::to_normal(RmsElement const& x) const {
    if (x.is_zero()) {
      return x;
    }
    auto y = _witness.apply(_original.group(), _original.i_count(), x);
    return RmsElement(_i_position[y.i()], y.g(), _lambda_position[y.lambda()]);
  }

  RmsElement GrahamNormalForm::from_normal(RmsElement const& x) const {
    if (x.is_zero()) {
      return x;
    }
    RmsElement y(_i_order[x.i()], x.g(), _lambda_order[x.lambda()]);
    return _witness.invert(_original.group(), _original.i_count(), y);
  }

  GrahamNormalForm graham_normal_form(ReesMatrixSemigroup const& S) {
    auto graph  = build_graph(S);
    auto decomp = decompose(graph);
    return GrahamNormalForm(S, spanning_forest(graph, decomp));
  }

  ////////////////////////////////////////////////////////////////////////
  // <E(S)>
  ////////////////////////////////////////////////////////////////////////

  bool IdempotentGenerated::contains(RmsElement const& x) const {
    if (x.is_zero()) {
      return true;
    }
    auto y = _gnf->to_normal(x);
    for (auto const& b : _gnf->blocks()) {
      if (y.i() >= b.i_begin && y.i() < b.i_end) {
        return y.lambda() >= b.lambda_begin && y.lambda() < b.lambda_end
               && b.subgroup.contains(y.g());
      }
    }
    return false;
  }

  std::vector<RmsElement> IdempotentGenerated::elements() const {
    std::vector<RmsElement> out{RmsElement::zero()};
    for (auto const& b : _gnf->blocks()) {
      auto hs = b.subgroup.elements();
      for (size_t i = b.i_begin; i < b.i_end; ++i) {
        for (size_t l = b.lambda_begin; l < b.lambda_end; ++l) {
          for (auto h : hs) {
            out.push_back(_gnf->from_normal(RmsElement(
                static_cast<std::uint32_t>(i), h, static_cast<std::uint32_t>(l))));
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  size_t IdempotentGenerated::size() const {
    size_t n = 1;
    for (auto const& b : _gnf->blocks()) {
      n += b.i_size() * b.lambda_size() * b.subgroup.size();
    }
    return n;
  }

}  // namespace semirank
