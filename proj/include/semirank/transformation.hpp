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

// Total transformations and partial injections of {0, ..., n - 1}.
//
// Points are 0-based in memory and 1-based in every text format. Composition
// is left to right: (x * y)(p) = y(x(p)).

#ifndef SEMIRANK_TRANSFORMATION_HPP_
#define SEMIRANK_TRANSFORMATION_HPP_

#include <compare>  // for strong_ordering
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <limits>   // for numeric_limits
#include <string>   // for string
#include <vector>   // for vector

namespace semirank {

  using point = std::uint32_t;

  //! A partition of {0, ..., n - 1}; classes are numbered by their minimum
  //! point, so class 0 contains 0.
  class KernelPartition {
   public:
    KernelPartition() = default;

    //! Relabel an arbitrary class assignment into the canonical numbering.
    explicit KernelPartition(std::vector<std::uint32_t> const& labels);

    //! Build from explicit classes; throws UsageError unless they partition
    //! {0, ..., n - 1}.
    static KernelPartition from_classes(size_t n, std::vector<std::vector<point>> const& classes);

    size_t degree() const noexcept {
      return _class_of.size();
    }

    //! The weight.
    size_t class_count() const noexcept {
      return _count;
    }

    std::uint32_t class_of(point p) const noexcept {
      return _class_of[p];
    }

    //! Classes in canonical order, points increasing within each.
    std::vector<std::vector<point>> classes() const;

    //! True iff \p set meets every class exactly once.
    bool is_transversal(std::vector<point> const& set) const;

    //! `1,4,7|2,5|3,6`
    std::string to_string() const;

    auto operator<=>(KernelPartition const&) const = default;

   private:
    std::vector<std::uint32_t> _class_of;
    size_t                     _count = 0;
  };

  //! A total map on {0, ..., n - 1}.
  class Transformation {
   public:
    Transformation() = default;

    //! Throws UsageError if some image is out of range.
    explicit Transformation(std::vector<point> images);

    static Transformation identity(size_t n);

    size_t degree() const noexcept {
      return _images.size();
    }

    point operator[](point p) const noexcept {
      return _images[p];
    }

    std::vector<point> const& images() const noexcept {
      return _images;
    }

    //! Sorted image set.
    std::vector<point> image() const;

    KernelPartition kernel() const;

    //! |image|
    size_t rank() const;

    //! One-line notation, 1-based: `[2 3 1 1]`.
    std::string to_string() const;

    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<point> _images;
  };

  //! x then y; throws UsageError on a degree mismatch.
  Transformation compose(Transformation const& x, Transformation const& y);

  struct ImageAndKernel {
    std::vector<point> image;
    KernelPartition    kernel;
    size_t             rank;
  };

  ImageAndKernel image_and_kernel(Transformation const& x);

  //! An injective partial map on {0, ..., n - 1}.
  class PartialInjection {
   public:
    static constexpr point undefined = std::numeric_limits<point>::max();

    PartialInjection() = default;

    //! Throws UsageError if two defined values coincide or one is out of
    //! range.
    explicit PartialInjection(std::vector<point> values);

    size_t degree() const noexcept {
      return _values.size();
    }

    point operator[](point p) const noexcept {
      return _values[p];
    }

    std::vector<point> const& values() const noexcept {
      return _values;
    }

    std::vector<point> domain() const;

    std::vector<point> image() const;

    size_t rank() const;

    PartialInjection inverse() const;

    //! 1-based with `-` for undefined points: `[2 1 - 4]`.
    std::string to_string() const;

    auto operator<=>(PartialInjection const&) const = default;

   private:
    std::vector<point> _values;
  };

  //! x then y, defined where both steps are.
  PartialInjection compose(PartialInjection const& x, PartialInjection const& y);

}  // namespace semirank

#endif  // SEMIRANK_TRANSFORMATION_HPP_
