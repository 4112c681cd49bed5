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

#include "semirank/rees.hpp"

#include <string>  // for to_string

#include "semirank/errors.hpp"

namespace semirank {

  StructureMatrix::StructureMatrix(size_t lambda_count, size_t i_count)
      : _lambda_count(lambda_count), _i_count(i_count), _entries(lambda_count * i_count) {
    if (lambda_count == 0 || i_count == 0) {
      throw UsageError("structure matrix dimensions must be positive");
    }
  }

  MatrixEntry const& StructureMatrix::at(size_t lambda, size_t i) const {
    if (lambda >= _lambda_count || i >= _i_count) {
      throw UsageError("structure matrix index out of range");
    }
    return _entries[lambda * _i_count + i];
  }

  void StructureMatrix::set(size_t lambda, size_t i, MatrixEntry value) {
    if (lambda >= _lambda_count || i >= _i_count) {
      throw UsageError("structure matrix index out of range");
    }
    _entries[lambda * _i_count + i] = value;
  }

  bool StructureMatrix::is_zero_matrix() const noexcept {
    return nonzero_count() == 0;
  }

  size_t StructureMatrix::nonzero_count() const noexcept {
    size_t n = 0;
    for (auto const& e : _entries) {
      n += e.has_value();
    }
    return n;
  }

  bool is_regular_matrix(StructureMatrix const& P) {
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      bool hit = false;
      for (size_t i = 0; i < P.i_count() && !hit; ++i) {
        hit = P.at(l, i).has_value();
      }
      if (!hit) {
        return false;
      }
    }
    for (size_t i = 0; i < P.i_count(); ++i) {
      bool hit = false;
      for (size_t l = 0; l < P.lambda_count() && !hit; ++l) {
        hit = P.at(l, i).has_value();
      }
      if (!hit) {
        return false;
      }
    }
    return true;
  }

  ReesMatrixSemigroup::ReesMatrixSemigroup(std::shared_ptr<FiniteGroup const> G,
                                           StructureMatrix                    P)
      : _group(std::move(G)), _matrix(std::move(P)) {
    if (!_group) {
      throw UsageError("a Rees matrix semigroup needs a group");
    }
    for (size_t l = 0; l < _matrix.lambda_count(); ++l) {
      for (size_t i = 0; i < _matrix.i_count(); ++i) {
        auto const& e = _matrix.at(l, i);
        if (e && !_group->is_valid(*e)) {
          throw UsageError("structure matrix entry " + std::to_string(*e)
                           + " is not an element of " + _group->name());
        }
      }
    }
  }

  bool ReesMatrixSemigroup::contains(RmsElement const& x) const noexcept {
    return x.is_zero()
           || (x.i() < i_count() && x.lambda() < lambda_count() && group().is_valid(x.g()));
  }

  RmsElement ReesMatrixSemigroup::multiply(RmsElement const& x, RmsElement const& y) const {
    if (x.is_zero() || y.is_zero()) {
      return RmsElement::zero();
    }
    auto const& p = _matrix.at(x.lambda(), y.i());
    if (!p) {
      return RmsElement::zero();
    }
    auto const& G = group();
    return RmsElement(x.i(), G.product(G.product(x.g(), *p), y.g()), y.lambda());
  }

  size_t ReesMatrixSemigroup::to_index(RmsElement const& x) const noexcept {
    if (x.is_zero()) {
      return 0;
    }
    return 1 + (static_cast<size_t>(x.i()) * group().order() + x.g()) * lambda_count()
           + x.lambda();
  }

  RmsElement ReesMatrixSemigroup::from_index(size_t k) const noexcept {
    if (k == 0) {
      return RmsElement::zero();
    }
    --k;
    auto lambda = k % lambda_count();
    k /= lambda_count();
    auto g = k % group().order();
    auto i = k / group().order();
    return RmsElement(static_cast<std::uint32_t>(i),
                      static_cast<element_index>(g),
                      static_cast<std::uint32_t>(lambda));
  }

  RmsElement rms_multiply(ReesMatrixSemigroup const& S, RmsElement const& x, RmsElement const& y) {
    if (!S.contains(x) || !S.contains(y)) {
      throw UsageError("element does not belong to this Rees matrix semigroup");
    }
    return S.multiply(x, y);
  }

  std::vector<RmsElement> idempotents(ReesMatrixSemigroup const& S) {
    std::vector<RmsElement> out;
    auto const&             P = S.matrix();
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      for (size_t i = 0; i < P.i_count(); ++i) {
        if (auto const& p = P.at(l, i)) {
          out.emplace_back(static_cast<std::uint32_t>(i),
                           S.group().inverse(*p),
                           static_cast<std::uint32_t>(l));
        }
      }
    }
    return out;
  }

  std::vector<RmsElement> enumerate_elements(ReesMatrixSemigroup const& S, size_t cap) {
    if (S.size() > cap) {
      throw SizeError("Rees matrix semigroup has " + std::to_string(S.size())
                      + " elements, above the cap " + std::to_string(cap));
    }
    std::vector<RmsElement> out;
    out.reserve(S.size());
    for (size_t k = 0; k < S.size(); ++k) {
      out.push_back(S.from_index(k));
    }
    return out;
  }

}  // namespace semirank
