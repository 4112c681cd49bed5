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

#include <set>  // for set

#include "catch_amalgamated.hpp"

#include "semirank/errors.hpp"
#include "semirank/graham.hpp"
#include "semirank/oracle.hpp"

#include "support.hpp"

namespace semirank {

  namespace {
    std::shared_ptr<FiniteGroup const> cyc(size_t m) {
      return std::make_shared<FiniteGroup const>(build_cyclic(m));
    }

    std::shared_ptr<FiniteGroup const> sym(size_t r) {
      return std::make_shared<FiniteGroup const>(build_symmetric(r));
    }

    StructureMatrix full(FiniteGroup const& G, size_t L, size_t I) {
      StructureMatrix P(L, I);
      for (size_t l = 0; l < L; ++l) {
        for (size_t i = 0; i < I; ++i) {
          P.set(l, i, G.identity());
        }
      }
      return P;
    }

    bool conjugate(FiniteGroup const& G, GroupSubset const& A, GroupSubset const& B) {
      for (element_index g = 0; g < G.order(); ++g) {
        if (conjugate_subset(G, A, g) == B) {
          return true;
        }
      }
      return false;
    }

    // Labels of all walks from vertex u to vertex v, by breadth-first search
    // over (vertex, label) states.
    std::set<element_index> walk_labels(GHGraph const& graph, FiniteGroup const& G,
                                        vertex_index u, vertex_index v) {
      std::set<std::pair<vertex_index, element_index>> seen{{u, G.identity()}};
      std::vector<std::pair<vertex_index, element_index>> queue{{u, G.identity()}};
      for (size_t k = 0; k < queue.size(); ++k) {
        auto const [w, g] = queue[k];
        for (auto const& arc : graph.arcs(w)) {
          std::pair<vertex_index, element_index> next{arc.target, G.product(g, arc.label)};
          if (seen.insert(next).second) {
            queue.push_back(next);
          }
        }
      }
      std::set<element_index> out;
      for (auto const& [w, g] : seen) {
        if (w == v) {
          out.insert(g);
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("graph of the zero matrix is edgeless", "[graham]") {
    auto const          G = cyc(2);
    ReesMatrixSemigroup S(G, StructureMatrix(2, 3));
    auto const          graph = build_graph(S);
    CHECK(graph.edges().empty());
    auto const d = decompose(graph);
    CHECK(d.components.empty());
    CHECK(d.isolated_i.size() == 3);
    CHECK(d.isolated_lambda.size() == 2);
  }

  TEST_CASE("graph edges and labels", "[graham]") {
    test::Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      auto const  S     = test::random_rms(rng);
      auto const& G     = S.group();
      auto const  graph = build_graph(S);
      CHECK(graph.edges().size() == S.matrix().nonzero_count());
      CHECK(graph.edges().size() == idempotents(S).size());
      for (auto const& e : graph.edges()) {
        CHECK(S.matrix().at(e.lambda, e.i) == e.label);
      }
      size_t arcs = 0;
      for (vertex_index v = 0; v < graph.vertex_count(); ++v) {
        for (auto const& a : graph.arcs(v)) {
          ++arcs;
          CHECK(graph.is_i_vertex(v) != graph.is_i_vertex(a.target));
          auto const lv = graph.is_i_vertex(v) ? a.target : v;
          auto const iv = graph.is_i_vertex(v) ? v : a.target;
          auto const p  = *S.matrix().at(graph.label_of(lv), graph.label_of(iv));
          CHECK(a.label == (graph.is_i_vertex(v) ? G.inverse(p) : p));
        }
      }
      CHECK(arcs == 2 * graph.edges().size());
      auto const d = decompose(graph);
      CHECK((d.isolated_i.empty() && d.isolated_lambda.empty()) == is_regular_matrix(S.matrix()));
    }
  }

  TEST_CASE("components", "[graham]") {
    auto const G = sym(3);
    auto const B = decompose(build_graph(ReesMatrixSemigroup(G, test::identity_matrix(*G, 4))));
    REQUIRE(B.components.size() == 4);
    for (std::uint32_t k = 0; k < 4; ++k) {
      CHECK(B.components[k].is == std::vector<std::uint32_t>{k});
      CHECK(B.components[k].lambdas == std::vector<std::uint32_t>{k});
    }
    CHECK(decompose(build_graph(ReesMatrixSemigroup(G, full(*G, 3, 4)))).components.size() == 1);
  }

  TEST_CASE("components of the n = 7 S(A,B) instance", "[graham]") {
    auto const S = sab_principal_rms(test::sab_n7());
    auto const d = decompose(build_graph(S));
    CHECK(d.components.size() == 2);
    // kernel 1,2|3,5|4,6,7 and image 1,2,5 are isolated
    CHECK(d.isolated_i == std::vector<std::uint32_t>{2});
    CHECK(d.isolated_lambda == std::vector<std::uint32_t>{4});
  }

  TEST_CASE("components partition the non-isolated vertices", "[graham]") {
    test::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      auto const S = test::random_rms(rng);
      auto const d = decompose(build_graph(S));
      size_t     is = d.isolated_i.size(), ls = d.isolated_lambda.size();
      for (auto const& c : d.components) {
        CHECK(!c.is.empty());
        CHECK(!c.lambdas.empty());
        is += c.is.size();
        ls += c.lambdas.size();
      }
      CHECK(is == S.i_count());
      CHECK(ls == S.lambda_count());
      for (size_t k = 1; k < d.components.size(); ++k) {
        CHECK(d.components[k - 1].lambdas.front() < d.components[k].lambdas.front());
      }
    }
  }

  TEST_CASE("spanning forests", "[graham]") {
    auto const G = cyc(3);
    SECTION("single edge") {
      ReesMatrixSemigroup S(G, full(*G, 1, 1));
      auto const          graph = build_graph(S);
      auto const          F     = spanning_forest(graph, decompose(graph));
      CHECK(F.edge_count() == 1);
      CHECK(F.roots == std::vector<vertex_index>{graph.i_vertex(0)});
    }
    SECTION("full matrix") {
      for (size_t k = 1; k <= 4; ++k) {
        ReesMatrixSemigroup S(G, full(*G, k, k));
        auto const          graph = build_graph(S);
        CHECK(spanning_forest(graph, decompose(graph)).edge_count() == 2 * k - 1);
      }
    }
    SECTION("random instances") {
      test::Rng rng(6);
      for (int trial = 0; trial < 50; ++trial) {
        auto const S     = test::random_rms(rng);
        auto const graph = build_graph(S);
        auto const d     = decompose(graph);
        for (auto const& F : {spanning_forest(graph, d), random_spanning_forest(graph, d, trial)}) {
          size_t vertices = 0;
          for (auto const& c : d.components) {
            vertices += c.is.size() + c.lambdas.size();
          }
          CHECK(F.edge_count() == vertices - d.components.size());
          CHECK(F.roots.size() == d.components.size());
          for (vertex_index v = 0; v < F.parent.size(); ++v) {
            if (F.parent[v]) {
              auto const& arcs = graph.arcs(v);
              CHECK(std::any_of(arcs.begin(), arcs.end(),
                                [&](auto const& a) { return a.target == *F.parent[v]; }));
              // following parents reaches a root
              auto   w     = v;
              size_t steps = 0;
              while (F.parent[w] && steps <= F.parent.size()) {
                w = *F.parent[w];
                ++steps;
              }
              CHECK(std::find(F.roots.begin(), F.roots.end(), w) != F.roots.end());
            }
          }
        }
        for (size_t k = 0; k < d.components.size(); ++k) {
          CHECK(spanning_forest(graph, d).roots[k] == graph.i_vertex(d.components[k].is.front()));
        }
      }
    }
  }

  TEST_CASE("normalization", "[graham]") {
    auto const G = cyc(2);
    SECTION("identity labels on a tree are kept") {
      StructureMatrix P(2, 2);
      P.set(0, 0, 0);
      P.set(0, 1, 0);
      P.set(1, 0, 0);
      ReesMatrixSemigroup S(G, P);
      auto const          graph = build_graph(S);
      auto const [N, w]         = normalize(S, spanning_forest(graph, decompose(graph)));
      CHECK(N.matrix() == P);
      for (auto phi : w.phi) {
        CHECK(phi == G->identity());
      }
    }
    SECTION("a chosen tree over C_2") {
      StructureMatrix P(2, 2);
      P.set(0, 0, 0);
      P.set(0, 1, 0);
      P.set(1, 0, 0);
      P.set(1, 1, 1);
      ReesMatrixSemigroup S(G, P);
      auto const          graph = build_graph(S);
      SpanningForest      F;
      F.roots  = {graph.i_vertex(0)};
      F.parent = std::vector<std::optional<vertex_index>>(graph.vertex_count());
      F.parent[graph.lambda_vertex(0)] = graph.i_vertex(0);
      F.parent[graph.i_vertex(1)]      = graph.lambda_vertex(0);
      F.parent[graph.lambda_vertex(1)] = graph.i_vertex(0);
      auto const [N, w]                = normalize(S, F);
      CHECK(N.matrix() == P);
    }
    SECTION("a forest with a non-edge is rejected") {
      ReesMatrixSemigroup S(G, test::identity_matrix(*G, 2));
      auto const          graph = build_graph(S);
      SpanningForest      F;
      F.roots  = {graph.i_vertex(0), graph.i_vertex(1)};
      F.parent = std::vector<std::optional<vertex_index>>(graph.vertex_count());
      F.parent[graph.lambda_vertex(1)] = graph.i_vertex(0);
      F.parent[graph.lambda_vertex(0)] = graph.i_vertex(1);
      CHECK_THROWS_AS(normalize(S, F), UsageError);
    }
  }

  TEST_CASE("the normalization witness is an isomorphism", "[graham]") {
    test::Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      auto const S     = test::random_rms(rng, 4);
      auto const graph = build_graph(S);
      auto const d     = decompose(graph);
      auto const F     = random_spanning_forest(graph, d, trial);
      auto const [N, w] = normalize(S, F);
      auto const& G     = S.group();
      // the unlabelled graph is unchanged
      for (size_t l = 0; l < S.lambda_count(); ++l) {
        for (size_t i = 0; i < S.i_count(); ++i) {
          CHECK(S.matrix().at(l, i).has_value() == N.matrix().at(l, i).has_value());
        }
      }
      for (auto root : F.roots) {
        CHECK(w.phi[root] == G.identity());
      }
      auto const elts = enumerate_elements(S);
      for (auto const& x : elts) {
        CHECK(w.invert(G, S.i_count(), w.apply(G, S.i_count(), x)) == x);
        for (auto const& y : elts) {
          REQUIRE(w.apply(G, S.i_count(), S.multiply(x, y))
                  == N.multiply(w.apply(G, S.i_count(), x), w.apply(G, S.i_count(), y)));
        }
      }
    }
  }

  TEST_CASE("Graham normal form shape", "[graham]") {
    SECTION("zero matrix") {
      auto const gnf = graham_normal_form(ReesMatrixSemigroup(cyc(2), StructureMatrix(2, 3)));
      CHECK(gnf.blocks().empty());
      CHECK(gnf.isolated_i_count() == 3);
      CHECK(gnf.isolated_lambda_count() == 2);
    }
    SECTION("Brandt identity matrix") {
      auto const G   = sym(3);
      auto const gnf = graham_normal_form(ReesMatrixSemigroup(G, test::identity_matrix(*G, 4)));
      REQUIRE(gnf.blocks().size() == 4);
      for (auto const& b : gnf.blocks()) {
        CHECK(b.i_size() == 1);
        CHECK(b.lambda_size() == 1);
        CHECK(b.subgroup.size() == 1);
      }
    }
    SECTION("random instances") {
      test::Rng rng(8);
      for (int trial = 0; trial < 60; ++trial) {
        auto const  S   = test::random_rms(rng);
        auto const& G   = S.group();
        auto const  gnf = graham_normal_form(S);
        auto const& Q   = gnf.normalized().matrix();
        auto const& bs  = gnf.blocks();
        auto block_of = [&](size_t l, size_t i) -> std::optional<size_t> {
          for (size_t k = 0; k < bs.size(); ++k) {
            if (bs[k].lambda_begin <= l && l < bs[k].lambda_end && bs[k].i_begin <= i
                && i < bs[k].i_end) {
              return k;
            }
          }
          return std::nullopt;
        };
        std::vector<GroupSubset> entries(bs.size(), GroupSubset(G.order()));
        for (size_t l = 0; l < Q.lambda_count(); ++l) {
          for (size_t i = 0; i < Q.i_count(); ++i) {
            auto const k = block_of(l, i);
            if (Q.at(l, i)) {
              REQUIRE(k);
              entries[*k].insert(*Q.at(l, i));
            }
          }
        }
        size_t rows = 0, cols = 0;
        for (size_t k = 0; k < bs.size(); ++k) {
          CHECK(bs[k].subgroup == subgroup_closure(G, entries[k]));
          // each block is a connected regular matrix
          StructureMatrix C(bs[k].lambda_size(), bs[k].i_size());
          for (size_t l = 0; l < C.lambda_count(); ++l) {
            for (size_t i = 0; i < C.i_count(); ++i) {
              C.set(l, i, Q.at(bs[k].lambda_begin + l, bs[k].i_begin + i));
            }
          }
          CHECK(is_regular_matrix(C));
          CHECK(decompose(build_graph(ReesMatrixSemigroup(S.group_ptr(), C))).components.size()
                == 1);
          rows += bs[k].i_size();
          cols += bs[k].lambda_size();
        }
        CHECK(rows + gnf.isolated_i_count() == S.i_count());
        CHECK(cols + gnf.isolated_lambda_count() == S.lambda_count());
        // to_normal and from_normal are inverse
        for (auto const& x : enumerate_elements(S)) {
          CHECK(gnf.from_normal(gnf.to_normal(x)) == x);
        }
      }
    }
  }

  TEST_CASE("subgroups are conjugate across spanning forests", "[graham]") {
    test::Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      auto const S     = test::random_rms(rng);
      auto const graph = build_graph(S);
      auto const d     = decompose(graph);
      auto const a     = graham_normal_form(S);
      GrahamNormalForm b(S, random_spanning_forest(graph, d, trial + 100));
      REQUIRE(a.blocks().size() == b.blocks().size());
      for (size_t k = 0; k < a.blocks().size(); ++k) {
        CHECK(a.blocks()[k].i_size() == b.blocks()[k].i_size());
        CHECK(a.blocks()[k].lambda_size() == b.blocks()[k].lambda_size());
        CHECK(conjugate(S.group(), a.blocks()[k].subgroup, b.blocks()[k].subgroup));
      }
    }
  }

  TEST_CASE("idempotent generated part", "[graham]") {
    SECTION("connected with identity entries") {
      auto const          G = sym(3);
      ReesMatrixSemigroup S(G, full(*G, 3, 2));
      auto const          gnf = graham_normal_form(S);
      auto const          E   = idempotent_generated(gnf);
      CHECK(E.size() == 2 * 3 + 1);
    }
    SECTION("Brandt identity matrix") {
      auto const          G = sym(3);
      ReesMatrixSemigroup S(G, test::identity_matrix(*G, 3));
      auto const          gnf  = graham_normal_form(S);
      auto const          elts = idempotent_generated(gnf).elements();
      auto                expected = idempotents(S);
      expected.insert(expected.begin(), RmsElement::zero());
      CHECK(elts == expected);
    }
    SECTION("random instances against the closure of the idempotents") {
      test::Rng rng(10);
      for (int trial = 0; trial < 60; ++trial) {
        auto const S    = test::random_rms(rng);
        auto const gnf  = graham_normal_form(S);
        auto const E    = idempotent_generated(gnf);
        auto       seed = idempotents(S);
        seed.push_back(RmsElement::zero());
        auto const expected = closure(seed, [&](RmsElement const& x, RmsElement const& y) {
          return S.multiply(x, y);
        });
        auto const elts = E.elements();
        CHECK(elts == expected);
        CHECK(E.size() == elts.size());
        for (auto const& x : enumerate_elements(S)) {
          CHECK(E.contains(x) == std::binary_search(elts.begin(), elts.end(), x));
        }
        for (auto const& x : elts) {
          for (auto const& y : elts) {
            CHECK(E.contains(S.multiply(x, y)));
          }
        }
      }
    }
  }

  TEST_CASE("walk labels match the idempotent generated part", "[graham]") {
    test::Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      auto const  S     = test::random_rms(rng, 4);
      auto const& G     = S.group();
      auto const  graph = build_graph(S);
      auto const  d     = decompose(graph);
      auto const  gnf   = graham_normal_form(S);
      auto const  elts  = idempotent_generated(gnf).elements();
      for (auto const& c : d.components) {
        for (auto i : c.is) {
          for (auto l : c.lambdas) {
            std::set<element_index> middle;
            for (auto const& x : elts) {
              if (!x.is_zero() && x.i() == i && x.lambda() == l) {
                middle.insert(x.g());
              }
            }
            CHECK(walk_labels(graph, G, graph.i_vertex(i), graph.lambda_vertex(l)) == middle);
          }
        }
      }
    }
  }

}  // namespace semirank
