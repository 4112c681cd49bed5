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

#include "semirank/transformation.hpp"

#include <algorithm>  // for sort, unique

#include "semirank/errors.hpp"

namespace semirank {

  ////////////////////////////////////////////////////////////////////////
  // KernelPartition
  ////////////////////////////////////////////////////////////////////////

  KernelPartition::KernelPartition(std::vector<std::uint32_t> const& labels)
      : _class_of(labels.size()) {
    std::vector<std::uint32_t> fresh;
    std::vector<std::uint32_t> seen;
    for (size_t p = 0; p < labels.size(); ++p) {
      auto it = std::find(seen.begin(), seen.end(), labels[p]);
      if (it == seen.end()) {
        seen.push_back(labels[p]);
        _class_of[p] = static_cast<std::uint32_t>(seen.size() - 1);
      } else {
        _class_of[p] = static_cast<std::uint32_t>(it - seen.begin());
      }
    }
    _count = seen.size();
  }

  KernelPartition KernelPartition::from_classes(size_t                                 n,
                                                std::vector<std::vector<point>> const& classes) {
    constexpr auto             none = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> labels(n, none);
    for (size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].empty()) {
        throw UsageError("empty class in partition");
      }
      for (auto p : classes[c]) {
        if (p >= n) {
          throw UsageError("point " + std::to_string(p + 1) + " out of range");
        }
        if (labels[p] != none) {
          throw UsageError("point " + std::to_string(p + 1) + " occurs in two classes");
        }
        labels[p] = static_cast<std::uint32_t>(c);
      }
    }
    for (size_t p = 0; p < n; ++p) {
      if (labels[p] == none) {
        throw UsageError("point " + std::to_string(p + 1) + " is in no class");
      }
    }
    return KernelPartition(labels);
  }

  std::vector<std::vector<point>> KernelPartition::classes() const {
    std::vector<std::vector<point>> out(_count);
    for (point p = 0; p < _class_of.size(); ++p) {
      out[_class_of[p]].push_back(p);
    }
    return out;
  }

  bool KernelPartition::is_transversal(std::vector<point> const& set) const {
    if (set.size() != _count) {
      return false;
    }
    std::vector<bool> hit(_count, false);
    for (auto p : set) {
      if (p >= _class_of.size() || hit[_class_of[p]]) {
        return false;
      }
      hit[_class_of[p]] = true;
    }
    return true;
  }

  std::string KernelPartition::to_string() const {
    std::string out;
    for (auto const& c : classes()) {
      if (!out.empty()) {
        out += '|';
      }
      for (size_t k = 0; k < c.size(); ++k) {
        out += (k ? "," : "") + std::to_string(c[k] + 1);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<point> images) : _images(std::move(images)) {
    for (auto v : _images) {
      if (v >= _images.size()) {
        throw UsageError("transformation image " + std::to_string(v + 1) + " out of range");
      }
    }
  }

  Transformation Transformation::identity(size_t n) {
    std::vector<point> images(n);
    for (point p = 0; p < n; ++p) {
      images[p] = p;
    }
    return Transformation(std::move(images));
  }

  std::vector<point> Transformation::image() const {
    std::vector<point> out(_images);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  KernelPartition Transformation::kernel() const {
    return KernelPartition(_images);
  }

  size_t Transformation::rank() const {
    return image().size();
  }

  std::string Transformation::to_string() const {
    std::string out = "[";
    for (size_t p = 0; p < _images.size(); ++p) {
      out += (p ? " " : "") + std::to_string(_images[p] + 1);
    }
    return out + "]";
  }

  Transformation compose(Transformation const& x, Transformation const& y) {
    if (x.degree() != y.degree()) {
      throw UsageError("cannot compose transformations of degrees " + std::to_string(x.degree())
                       + " and " + std::to_string(y.degree()));
    }
    std::vector<point> images(x.degree());
    for (point p = 0; p < x.degree(); ++p) {
      images[p] = y[x[p]];
    }
    return Transformation(std::move(images));
  }

  ImageAndKernel image_and_kernel(Transformation const& x) {
    auto im = x.image();
    auto r  = im.size();
    return {std::move(im), x.kernel(), r};
  }

  ////////////////////////////////////////////////////////////////////////
  // PartialInjection
  ////////////////////////////////////////////////////////////////////////

  PartialInjection::PartialInjection(std::vector<point> values) : _values(std::move(values)) {
    std::vector<bool> used(_values.size(), false);
    for (auto v : _values) {
      if (v == undefined) {
        continue;
      }
      if (v >= _values.size()) {
        throw UsageError("partial map value " + std::to_string(v + 1) + " out of range");
      }
      if (used[v]) {
        throw UsageError("partial map is not injective");
      }
      used[v] = true;
    }
  }

  std::vector<point> PartialInjection::domain() const {
    std::vector<point> out;
    for (point p = 0; p < _values.size(); ++p) {
      if (_values[p] != undefined) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::vector<point> PartialInjection::image() const {
    std::vector<point> out;
    for (auto v : _values) {
      if (v != undefined) {
        out.push_back(v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  size_t PartialInjection::rank() const {
    return domain().size();
  }

  PartialInjection PartialInjection::inverse() const {
    std::vector<point> out(_values.size(), undefined);
    for (point p = 0; p < _values.size(); ++p) {
      if (_values[p] != undefined) {
        out[_values[p]] = p;
      }
    }
    return PartialInjection(std::move(out));
  }

  std::string PartialInjection::to_string() const {
    std::string out = "[";
    for (size_t p = 0; p < _values.size(); ++p) {
      out += p ? " " : "";
      out += _values[p] == undefined ? std::string("-") : std::to_string(_values[p] + 1);
    }
    return out + "]";
  }

  PartialInjection compose(PartialInjection const& x, PartialInjection const& y) {
    if (x.degree() != y.degree()) {
      throw UsageError("cannot compose partial maps of different degrees");
    }
    std::vector<point> out(x.degree(), PartialInjection::undefined);
    for (point p = 0; p < x.degree(); ++p) {
      if (x[p] != PartialInjection::undefined) {
        out[p] = y[x[p]];
      }
    }
    return PartialInjection(std::move(out));
  }

}  // namespace semirank
