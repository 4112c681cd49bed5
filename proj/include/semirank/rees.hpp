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

// Rees matrix semigroups M0[G; I, Lambda; P] over a finite group.
//
// Row and column labels are 0-based here; every text format is 1-based.

#ifndef SEMIRANK_REES_HPP_
#define SEMIRANK_REES_HPP_

#include <compare>   // for strong_ordering
#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <memory>    // for shared_ptr
#include <optional>  // for optional
#include <vector>    // for vector

#include "group.hpp"

namespace semirank {

  //! An entry of a structure matrix: std::nullopt is the zero of G^0.
  using MatrixEntry = std::optional<element_index>;

  //! A |Lambda| x |I| matrix over G^0, stored row-major (row = lambda).
  class StructureMatrix {
   public:
    StructureMatrix() = default;

    //! All-zero matrix; both dimensions must be positive.
    StructureMatrix(size_t lambda_count, size_t i_count);

    size_t lambda_count() const noexcept {
      return _lambda_count;
    }

    size_t i_count() const noexcept {
      return _i_count;
    }

    MatrixEntry const& at(size_t lambda, size_t i) const;

    void set(size_t lambda, size_t i, MatrixEntry value);

    bool is_zero_matrix() const noexcept;

    size_t nonzero_count() const noexcept;

    bool operator==(StructureMatrix const&) const = default;

   private:
    size_t                   _lambda_count = 0;
    size_t                   _i_count      = 0;
    std::vector<MatrixEntry> _entries;
  };

  //! True iff every row and every column has a non-zero entry.
  bool is_regular_matrix(StructureMatrix const& P);

  //! Either the zero or a triple (i, g, lambda).
  class RmsElement {
   public:
    //! The zero.
    constexpr RmsElement() = default;

    constexpr RmsElement(std::uint32_t i, element_index g, std::uint32_t lambda)
        : _zero(false), _i(i), _g(g), _lambda(lambda) {}

    static constexpr RmsElement zero() {
      return RmsElement();
    }

    constexpr bool is_zero() const noexcept {
      return _zero;
    }

    constexpr std::uint32_t i() const noexcept {
      return _i;
    }

    constexpr element_index g() const noexcept {
      return _g;
    }

    constexpr std::uint32_t lambda() const noexcept {
      return _lambda;
    }

    // Zero first, then triples lexicographically.
    constexpr std::strong_ordering operator<=>(RmsElement const& that) const noexcept {
      if (_zero || that._zero) {
        return that._zero <=> _zero;
      }
      if (auto c = _i <=> that._i; c != 0) {
        return c;
      }
      if (auto c = _g <=> that._g; c != 0) {
        return c;
      }
      return _lambda <=> that._lambda;
    }

    constexpr bool operator==(RmsElement const& that) const noexcept {
      return (*this <=> that) == 0;
    }

   private:
    bool          _zero   = true;
    std::uint32_t _i      = 0;
    element_index _g      = 0;
    std::uint32_t _lambda = 0;
  };

  //! Elements beyond this count are not enumerated without an explicit cap.
  constexpr size_t default_max_semigroup_size = 2'000'000;

  //! M0[G; I, Lambda; P]. The zero is always a member.
  class ReesMatrixSemigroup {
   public:
    ReesMatrixSemigroup(std::shared_ptr<FiniteGroup const> G, StructureMatrix P);

    FiniteGroup const& group() const noexcept {
      return *_group;
    }

    std::shared_ptr<FiniteGroup const> const& group_ptr() const noexcept {
      return _group;
    }

    StructureMatrix const& matrix() const noexcept {
      return _matrix;
    }

    size_t i_count() const noexcept {
      return _matrix.i_count();
    }

    size_t lambda_count() const noexcept {
      return _matrix.lambda_count();
    }

    //! |I| * |G| * |Lambda| + 1
    size_t size() const noexcept {
      return i_count() * group().order() * lambda_count() + 1;
    }

    bool contains(RmsElement const& x) const noexcept;

    //! (i, g, lambda) (j, h, mu) = (i, g p_{lambda j} h, mu) when
    //! p_{lambda j} is non-zero, the zero otherwise.
    RmsElement multiply(RmsElement const& x, RmsElement const& y) const;

    //! Position in enumerate_elements order: 0 for the zero.
    size_t to_index(RmsElement const& x) const noexcept;

    RmsElement from_index(size_t k) const noexcept;

   private:
    std::shared_ptr<FiniteGroup const> _group;
    StructureMatrix                    _matrix;
  };

  //! Same as S.multiply(x, y); throws UsageError for elements of another
  //! semigroup.
  RmsElement rms_multiply(ReesMatrixSemigroup const& S, RmsElement const& x, RmsElement const& y);

  //! All non-zero idempotents (i, p_{lambda i}^-1, lambda), row-major in P.
  std::vector<RmsElement> idempotents(ReesMatrixSemigroup const& S);

  //! Zero first, then triples in (i, g, lambda) order. Throws SizeError when
  //! |S| exceeds \p cap.
  std::vector<RmsElement> enumerate_elements(ReesMatrixSemigroup const& S,
                                             size_t cap = default_max_semigroup_size);

}  // namespace semirank

#endif  // SEMIRANK_REES_HPP_
