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

#include "catch_amalgamated.hpp"

#include "semirank/errors.hpp"
#include "semirank/oracle.hpp"
#include "semirank/rank.hpp"
#include "semirank/sab.hpp"

#include "support.hpp"

namespace semirank {

  namespace {
    // A = {{1,2,3}}, B = {1|2|3,4} on 4 points: one transversal edge.
    SabInput single_edge() {
      SabInput in;
      in.n       = 4;
      in.images  = {{0, 1, 2}};
      in.kernels = {KernelPartition::from_classes(4, {{0}, {1}, {2, 3}})};
      return in;
    }

    // No image is a transversal of any kernel.
    SabInput no_edges() {
      SabInput in;
      in.n       = 4;
      in.images  = {{0, 1, 2}, {0, 1, 3}};
      in.kernels = {KernelPartition::from_classes(4, {{0, 1}, {2}, {3}})};
      return in;
    }

    std::vector<Transformation> rank_r(std::vector<Transformation> const& xs, size_t r) {
      std::vector<Transformation> out;
      for (auto const& x : xs) {
        if (x.rank() == r) {
          out.push_back(x);
        }
      }
      return out;
    }
  }  // namespace

  TEST_CASE("input validation", "[sab]") {
    auto in = test::sab_n7();
    CHECK(in.weight() == 3);
    CHECK_NOTHROW(require_rank_range(in));

    auto ragged = in;
    ragged.images.push_back({0, 1});
    CHECK_THROWS_AS(ragged.weight(), UsageError);

    auto repeated = in;
    repeated.kernels.push_back(repeated.kernels.front());
    CHECK_THROWS_AS(repeated.weight(), UsageError);

    SabInput small;
    small.n       = 4;
    small.images  = {{0, 1}};
    small.kernels = {KernelPartition::from_classes(4, {{0, 1}, {2, 3}})};
    CHECK_THROWS_AS(require_rank_range(small), UnsupportedError);
    CHECK_THROWS_AS(sab_rank(small), UnsupportedError);

    SabInput full;
    full.n       = 3;
    full.images  = {{0, 1, 2}};
    full.kernels = {KernelPartition::from_classes(3, {{0}, {1}, {2}})};
    CHECK_THROWS_AS(require_rank_range(full), UnsupportedError);
  }

  TEST_CASE("generators of S(A,B)", "[sab]") {
    auto const in   = test::sab_n7();
    auto const gens = sab_generators(in);
    CHECK(gens.size() == 90);
    for (auto const& g : gens) {
      auto const ik = image_and_kernel(g);
      CHECK(ik.rank == 3);
      CHECK(std::find(in.images.begin(), in.images.end(), ik.image) != in.images.end());
      CHECK(std::find(in.kernels.begin(), in.kernels.end(), ik.kernel) != in.kernels.end());
    }
    CHECK(std::set<Transformation>(gens.begin(), gens.end()).size() == 90);
    CHECK(sab_generators(single_edge()).size() == 6);
  }

  TEST_CASE("rank r part of the closure is the generating set", "[sab]") {
    auto const in   = test::sab_n7();
    auto       gens = sab_generators(in);
    auto const all  = test::closure_of(gens);
    std::sort(gens.begin(), gens.end());
    CHECK(rank_r(all, 3) == gens);
  }

  TEST_CASE("transversal graph", "[sab]") {
    auto const g = transversal_graph(test::sab_n7());
    CHECK(g.v0 == 2);
    CHECK(g.v_plus_A == 4);
    CHECK(g.v_plus_B == 2);
    CHECK(g.max_degree == 3);
    CHECK(g.edge_count == 4);
    CHECK(g.adjacent[0][0]);  // 1,2,3 ~ 1,4,7|2,5|3,6

    auto const s = transversal_graph(single_edge());
    CHECK(s.edge_count == 1);
    CHECK(s.max_degree == 1);
    CHECK(s.v0 == 0);
  }

  TEST_CASE("S(A,B) ranks", "[sab]") {
    auto const a = sab_rank(test::sab_n7());
    CHECK(a.value == 6);
    CHECK(a.sab_case == SabCase::md_at_least_2);
    CHECK(to_string(a.sab_case) == "MD>=2");

    auto const b = sab_rank(single_edge());
    CHECK(b.value == 2);
    CHECK(b.sab_case == SabCase::md_1);

    auto const c = sab_rank(no_edges());
    CHECK(c.value == 2 * 1 * 6);
    CHECK(c.sab_case == SabCase::md_0);
  }

  TEST_CASE("small S(A,B) instances against the oracle", "[sab]") {
    for (auto const& in : {single_edge(), no_edges()}) {
      auto [S, elts] = AbstractSemigroup::from_generators(
          sab_generators(in),
          [](Transformation const& x, Transformation const& y) { return compose(x, y); });
      auto const r = exact_rank(S, S.size());
      REQUIRE(r);
      CHECK(r->value == sab_rank(in).value);
    }
    // the single edge case closes into a copy of S_3
    CHECK(test::closure_of(sab_generators(single_edge())).size() == 6);
  }

  TEST_CASE("principal Rees matrix semigroup", "[sab]") {
    auto const in = test::sab_n7();
    auto const S  = sab_principal_rms(in);
    auto const g  = transversal_graph(in);
    CHECK(S.group().order() == 6);
    CHECK(S.i_count() == in.kernels.size());
    CHECK(S.lambda_count() == in.images.size());
    for (size_t a = 0; a < in.images.size(); ++a) {
      for (size_t b = 0; b < in.kernels.size(); ++b) {
        CHECK(S.matrix().at(a, b).has_value() == g.adjacent[a][b]);
      }
    }
    CHECK(rank_rms(S).value == 6);

    for (auto const& e : idempotents(S)) {
      auto const x  = sab_lift(in, e);
      auto const ik = image_and_kernel(x);
      CHECK(compose(x, x) == x);
      CHECK(ik.kernel == in.kernels[e.i()]);
      CHECK(ik.image == in.images[e.lambda()]);
    }
    // lifting is a homomorphism on products that stay in rank r
    for (auto const& x : enumerate_elements(S)) {
      for (auto const& y : enumerate_elements(S)) {
        if (x.is_zero() || y.is_zero()) {
          continue;
        }
        auto const xy = S.multiply(x, y);
        auto const p  = compose(sab_lift(in, x), sab_lift(in, y));
        if (xy.is_zero()) {
          CHECK(p.rank() < 3);
        } else {
          CHECK(p == sab_lift(in, xy));
        }
      }
    }
    CHECK_THROWS_AS(sab_lift(in, RmsElement::zero()), UsageError);
  }

  TEST_CASE("minimal generators of S(A,B)", "[sab]") {
    auto const check = [](SabInput const& in) {
      auto const X = sab_minimal_generators(in);
      CHECK(X.size() == sab_rank(in).value);
      CHECK(test::closure_of(X) == test::closure_of(sab_generators(in)));
      return X;
    };
    CHECK(check(test::sab_n7()).size() == 6);
    CHECK(check(single_edge()).size() == 2);
    auto X    = check(no_edges());
    auto gens = sab_generators(no_edges());
    std::sort(gens.begin(), gens.end());
    CHECK(X == gens);
  }

  TEST_CASE("random S(A,B) instances", "[sab]") {
    test::Rng rng(16);
    for (int trial = 0; trial < 40; ++trial) {
      auto const n  = test::uniform(rng, 4, 6);
      auto const in = test::random_sab(rng, n, 3);
      auto const r  = sab_rank(in);
      auto const& g = r.graph;
      CHECK(g.v0 + g.v_plus_A + g.v_plus_B == in.images.size() + in.kernels.size());
      CHECK((g.max_degree == 0) == (g.edge_count == 0));
      CHECK(r.value == rank_rms(sab_principal_rms(in)).value);
      auto const X = sab_minimal_generators(in);
      CHECK(X.size() == r.value);
      CHECK(test::closure_of(X) == test::closure_of(sab_generators(in)));
    }
  }

  TEST_CASE("Stirling numbers and binomials", "[sab]") {
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 3) == 25);
    CHECK(stirling2(0, 0) == 1);
    for (size_t n = 1; n <= 6; ++n) {
      CHECK(stirling2(n, n) == 1);
      CHECK(stirling2(n, 0) == 0);
      for (size_t r = 1; r <= n; ++r) {
        CHECK(stirling2(n, r) == test::all_partitions(n, r).size());
        CHECK(binomial(n, r) == test::all_subsets(n, r).size());
      }
    }
  }

  TEST_CASE("K(n,r)", "[sab]") {
    auto const gens = knr(4, 2);
    CHECK(gens.size() == 7 * 6 * 2);
    for (auto const& x : gens) {
      CHECK(x.rank() == 2);
    }
    CHECK(test::closure_of(gens).size() == 84 + 4);
    CHECK_THROWS_AS(knr(7, 2), SizeError);
    CHECK_THROWS_AS(knr(4, 4), UsageError);
    CHECK_THROWS_AS(knr(4, 1), UsageError);
  }

  TEST_CASE("inverse extremal families", "[sab]") {
    auto const xs = inverse_extremal(4, 3);
    CHECK(xs.size() == 4 * 6);
    CHECK(inverse_rank_bound(4, 3) == 8);
    for (auto const& x : xs) {
      CHECK(x.rank() == 3);
      CHECK(x.domain() == x.image());
    }
    auto const y = inverse_extremal(5, 4);
    CHECK(y.size() == 5 * 2);
    CHECK(inverse_rank_bound(6, 6) == 3);

    // r = n: one J-class, a group generated by disjoint transpositions
    for (size_t n : {4, 5, 6}) {
      auto [S, elts] = AbstractSemigroup::from_generators(
          inverse_extremal(n, n),
          [](PartialInjection const& a, PartialInjection const& b) { return compose(a, b); });
      CHECK(inverse_rank_bound(n, n) == std::max<size_t>(2, n / 2));
      CHECK(maximal_jclass_lower_bound(S) == inverse_rank_bound(n, n));
    }
    CHECK_THROWS_AS(inverse_extremal(4, 2), UsageError);
    CHECK_THROWS_AS(inverse_extremal(7, 3), SizeError);
  }

}  // namespace semirank
