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

// Graham--Houghton graphs of Rees matrix semigroups and Graham normal form.
//
// Vertices of the graph are numbered I first: i in [0, |I|) is vertex i and
// lambda in [0, |Lambda|) is vertex |I| + lambda.

#ifndef SEMIRANK_GRAHAM_HPP_
#define SEMIRANK_GRAHAM_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t, uint64_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "group.hpp"
#include "rees.hpp"

namespace semirank {

  using vertex_index = std::uint32_t;

  //! A positively oriented edge (lambda, i) labelled p_{lambda i}; its
  //! partner (i, lambda) carries the inverse label.
  struct GHEdge {
    std::uint32_t lambda;
    std::uint32_t i;
    element_index label;

    bool operator==(GHEdge const&) const = default;
  };

  //! The G-labelled bipartite graph on I u Lambda with an edge wherever the
  //! structure matrix is non-zero.
  class GHGraph {
   public:
    struct Arc {
      vertex_index  target;
      element_index label;
    };

    GHGraph(size_t i_count, size_t lambda_count);

    size_t i_count() const noexcept {
      return _i_count;
    }

    size_t lambda_count() const noexcept {
      return _lambda_count;
    }

    size_t vertex_count() const noexcept {
      return _i_count + _lambda_count;
    }

    vertex_index i_vertex(size_t i) const noexcept {
      return static_cast<vertex_index>(i);
    }

    vertex_index lambda_vertex(size_t lambda) const noexcept {
      return static_cast<vertex_index>(_i_count + lambda);
    }

    bool is_i_vertex(vertex_index v) const noexcept {
      return v < _i_count;
    }

    //! Row or column label of a vertex.
    std::uint32_t label_of(vertex_index v) const noexcept {
      return is_i_vertex(v) ? v : static_cast<std::uint32_t>(v - _i_count);
    }

    //! Positively oriented edges in row-major order of P.
    std::vector<GHEdge> const& edges() const noexcept {
      return _edges;
    }

    //! Out-arcs of \p v sorted by target, each with the label of the arc
    //! leaving \p v.
    std::vector<Arc> const& arcs(vertex_index v) const noexcept {
      return _arcs[v];
    }

    size_t degree(vertex_index v) const noexcept {
      return _arcs[v].size();
    }

    void add_edge(std::uint32_t lambda, std::uint32_t i, element_index label, element_index inverse);

   private:
    size_t                        _i_count;
    size_t                        _lambda_count;
    std::vector<GHEdge>           _edges;
    std::vector<std::vector<Arc>> _arcs;
  };

  //! l(lambda, i) = p_{lambda i} and l(i, lambda) = p_{lambda i}^-1.
  GHGraph build_graph(ReesMatrixSemigroup const& S);

  //! The non-trivial connected components and the isolated vertices.
  struct ComponentDecomposition {
    struct Component {
      std::vector<std::uint32_t> is;       // sorted row labels
      std::vector<std::uint32_t> lambdas;  // sorted column labels
    };
    std::vector<Component>     components;  // ordered by smallest lambda
    std::vector<std::uint32_t> isolated_i;
    std::vector<std::uint32_t> isolated_lambda;

    //! Index of the component containing a vertex, nullopt if isolated.
    std::vector<std::optional<size_t>> component_of;
  };

  ComponentDecomposition decompose(GHGraph const& graph);

  //! A spanning tree for each component, given by parent pointers.
  struct SpanningForest {
    std::vector<vertex_index>                roots;   // one per component
    std::vector<std::optional<vertex_index>> parent;  // per vertex

    //! Number of geometric edges in the forest.
    size_t edge_count() const noexcept;
  };

  //! Breadth-first trees rooted at the smallest row of each component,
  //! neighbours visited in increasing vertex order.
  SpanningForest spanning_forest(GHGraph const& graph, ComponentDecomposition const& decomp);

  //! A uniformly shuffled breadth-first forest with random roots; used to
  //! check that nothing downstream depends on the choice of forest.
  SpanningForest random_spanning_forest(GHGraph const&                graph,
                                        ComponentDecomposition const& decomp,
                                        std::uint64_t                 seed);

  //! A potential phi on the vertices; the map
  //! (i, g, lambda) -> (i, phi(i) g phi(lambda)^-1, lambda) is an
  //! isomorphism from the original semigroup onto the normalized one.
  struct NormalizationWitness {
    std::vector<element_index> phi;  // indexed by vertex

    RmsElement apply(FiniteGroup const& G, size_t i_count, RmsElement const& x) const;
    RmsElement invert(FiniteGroup const& G, size_t i_count, RmsElement const& x) const;
  };

  //! Rescale P so that every forest edge is labelled by the identity:
  //! q_{lambda i} = phi(lambda) p_{lambda i} phi(i)^-1. Index sets are kept.
  std::pair<ReesMatrixSemigroup, NormalizationWitness>
  normalize(ReesMatrixSemigroup const& S, SpanningForest const& forest);

  //! The normalized, reordered presentation of a Rees matrix semigroup.
  //!
  //! In the reordered indices the matrix is block diagonal: the component
  //! blocks C_1, ..., C_n first, then the isolated rows and columns, which
  //! only meet zero entries.
  class GrahamNormalForm {
   public:
    struct Block {
      size_t      i_begin, i_end;            // rows [i_begin, i_end) in new order
      size_t      lambda_begin, lambda_end;  // columns likewise
      GroupSubset subgroup;                  // H_k: generated by the block entries

      size_t i_size() const noexcept {
        return i_end - i_begin;
      }

      size_t lambda_size() const noexcept {
        return lambda_end - lambda_begin;
      }
    };

    GrahamNormalForm(ReesMatrixSemigroup const& S, SpanningForest const& forest);

    //! Original semigroup.
    ReesMatrixSemigroup const& original() const noexcept {
      return _original;
    }

    //! M0[G; I, Lambda; C_R + C_N] in the new index order.
    ReesMatrixSemigroup const& normalized() const noexcept {
      return _normalized;
    }

    GHGraph const& graph() const noexcept {
      return _graph;
    }

    ComponentDecomposition const& decomposition() const noexcept {
      return _decomp;
    }

    SpanningForest const& forest() const noexcept {
      return _forest;
    }

    //! Potential in original indices.
    NormalizationWitness const& witness() const noexcept {
      return _witness;
    }

    std::vector<Block> const& blocks() const noexcept {
      return _blocks;
    }

    //! new position -> original label
    std::vector<std::uint32_t> const& i_order() const noexcept {
      return _i_order;
    }

    std::vector<std::uint32_t> const& lambda_order() const noexcept {
      return _lambda_order;
    }

    //! |I'| and |Lambda'|
    size_t isolated_i_count() const noexcept {
      return _decomp.isolated_i.size();
    }

    size_t isolated_lambda_count() const noexcept {
      return _decomp.isolated_lambda.size();
    }

    //! Original element -> element of normalized().
    RmsElement to_normal(RmsElement const& x) const;

    //! Element of normalized() -> original element.
    RmsElement from_normal(RmsElement const& x) const;

   private:
    ReesMatrixSemigroup        _original;
    GHGraph                    _graph;
    ComponentDecomposition     _decomp;
    SpanningForest             _forest;
    NormalizationWitness       _witness;
    std::vector<std::uint32_t> _i_order, _lambda_order;
    std::vector<std::uint32_t> _i_position, _lambda_position;
    ReesMatrixSemigroup        _normalized;
    std::vector<Block>         _blocks;
  };

  //! Graham normal form with the default breadth-first forest.
  GrahamNormalForm graham_normal_form(ReesMatrixSemigroup const& S);

  //! <E(S)>: triples whose row and column lie in one component k and whose
  //! middle entry lies in H_k (in normalized coordinates), plus the zero.
  class IdempotentGenerated {
   public:
    //! Keeps a reference to \p gnf, which must outlive this object.
    explicit IdempotentGenerated(GrahamNormalForm const& gnf) : _gnf(&gnf) {}
    explicit IdempotentGenerated(GrahamNormalForm&&) = delete;

    bool contains(RmsElement const& x) const;

    //! Sorted, zero first, original coordinates.
    std::vector<RmsElement> elements() const;

    size_t size() const;

   private:
    GrahamNormalForm const* _gnf;
  };

  inline IdempotentGenerated idempotent_generated(GrahamNormalForm const& gnf) {
    return IdempotentGenerated(gnf);
  }

  IdempotentGenerated idempotent_generated(GrahamNormalForm&&) = delete;

}  // namespace semirank

#endif  // SEMIRANK_GRAHAM_HPP_
