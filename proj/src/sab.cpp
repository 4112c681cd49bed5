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

#include "semirank/sab.hpp"

#include <algorithm>  // for sort, next_permutation
#include <memory>     // for make_shared

#include "semirank/errors.hpp"

namespace semirank {

  size_t SabInput::weight() const {
    if (images.empty() || kernels.empty()) {
      throw UsageError("S(A, B) needs at least one image and one kernel");
    }
    size_t const r = images.front().size();
    for (auto const& a : images) {
      if (a.size() != r) {
        throw UsageError("images have different sizes");
      }
      for (size_t k = 0; k < a.size(); ++k) {
        if (a[k] >= n || (k > 0 && a[k] <= a[k - 1])) {
          throw UsageError("image must be an increasing list of points in 1.." + std::to_string(n));
        }
      }
    }
    for (auto const& b : kernels) {
      if (b.degree() != n) {
        throw UsageError("kernel is not a partition of 1.." + std::to_string(n));
      }
      if (b.class_count() != r) {
        throw UsageError("kernel weight " + std::to_string(b.class_count())
                         + " differs from image size " + std::to_string(r));
      }
    }
    auto distinct = [](auto v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(images) || !distinct(kernels)) {
      throw UsageError("repeated image or kernel");
    }
    return r;
  }

  void require_rank_range(SabInput const& in) {
    auto r = in.weight();
    if (r <= 2) {
      throw UnsupportedError("r = " + std::to_string(r)
                             + " is not supported: S_2 is cyclic, so the formula differs");
    }
    if (r >= in.n) {
      throw UnsupportedError("r must be smaller than n");
    }
  }

  std::vector<Transformation> sab_generators(SabInput const& in) {
    auto const               r = in.weight();
    std::vector<Transformation> out;
    std::vector<point>          perm(r);
    for (auto const& b : in.kernels) {
      for (auto const& a : in.images) {
        for (point t = 0; t < r; ++t) {
          perm[t] = t;
        }
        do {
          std::vector<point> images(in.n);
          for (point p = 0; p < in.n; ++p) {
            images[p] = a[perm[b.class_of(p)]];
          }
          out.emplace_back(std::move(images));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
    return out;
  }

  TransversalGraph transversal_graph(SabInput const& in) {
    in.weight();
    TransversalGraph g;
    g.adjacent.assign(in.images.size(), std::vector<bool>(in.kernels.size(), false));
    g.image_degree.assign(in.images.size(), 0);
    g.kernel_degree.assign(in.kernels.size(), 0);
    for (size_t a = 0; a < in.images.size(); ++a) {
      for (size_t b = 0; b < in.kernels.size(); ++b) {
        if (in.kernels[b].is_transversal(in.images[a])) {
          g.adjacent[a][b] = true;
          ++g.image_degree[a];
          ++g.kernel_degree[b];
          ++g.edge_count;
        }
      }
    }
    for (auto d : g.image_degree) {
      (d == 0 ? g.v0 : g.v_plus_A) += 1;
      g.max_degree = std::max(g.max_degree, d);
    }
    for (auto d : g.kernel_degree) {
      (d == 0 ? g.v0 : g.v_plus_B) += 1;
      g.max_degree = std::max(g.max_degree, d);
    }
    return g;
  }

  std::string to_string(SabCase c) {
    switch (c) {
      case SabCase::md_at_least_2:
        return "MD>=2";
      case SabCase::md_1:
        return "MD=1";
      default:
        return "MD=0";
    }
  }

  SabRank sab_rank(SabInput const& in) {
    require_rank_range(in);
    auto g    = transversal_graph(in);
    auto base = std::max(g.v_plus_A, g.v_plus_B) + g.v0;
    if (g.max_degree >= 2) {
      return {base, SabCase::md_at_least_2, std::move(g)};
    }
    if (g.max_degree == 1) {
      return {base + 1, SabCase::md_1, std::move(g)};
    }
    size_t fact = 1;
    for (size_t k = 2; k <= in.weight(); ++k) {
      fact *= k;
    }
    return {in.images.size() * in.kernels.size() * fact, SabCase::md_0, std::move(g)};
  }

  ReesMatrixSemigroup sab_principal_rms(SabInput const& in) {
    require_rank_range(in);
    auto const r = in.weight();
    auto       G = std::make_shared<FiniteGroup const>(build_symmetric(r));
    StructureMatrix P(in.images.size(), in.kernels.size());
    std::vector<point> kappa(r);
    for (size_t a = 0; a < in.images.size(); ++a) {
      for (size_t b = 0; b < in.kernels.size(); ++b) {
        if (in.kernels[b].is_transversal(in.images[a])) {
          for (size_t t = 0; t < r; ++t) {
            kappa[t] = in.kernels[b].class_of(in.images[a][t]);
          }
          P.set(a, b, G->index_of_permutation(kappa));
        }
      }
    }
    return ReesMatrixSemigroup(G, std::move(P));
  }

  Transformation sab_lift(SabInput const& in, RmsElement const& x) {
    if (x.is_zero()) {
      throw UsageError("the zero has no lift");
    }
    auto const  r = in.weight();
    auto const  G = build_symmetric(r);
    auto const  s = G.permutation(x.g());
    auto const& b = in.kernels.at(x.i());
    auto const& a = in.images.at(x.lambda());
    std::vector<point> images(in.n);
    for (point p = 0; p < in.n; ++p) {
      images[p] = a[s[b.class_of(p)]];
    }
    return Transformation(std::move(images));
  }

  std::vector<Transformation> sab_minimal_generators(SabInput const& in, RankOptions const& opts) {
    auto S = sab_principal_rms(in);
    std::vector<Transformation> out;
    for (auto const& x : minimal_generating_set(S, opts)) {
      out.push_back(sab_lift(in, x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Transformation> knr(size_t n, size_t r) {
    if (n > max_desk_degree) {
      throw SizeError("K(n, r) is only built for n <= " + std::to_string(max_desk_degree));
    }
    if (!(1 < r && r < n)) {
      throw UsageError("K(n, r) needs 1 < r < n");
    }
    std::vector<Transformation> out;
    std::vector<point>          images(n, 0);
    while (true) {
      Transformation x(images);
      if (x.rank() == r) {
        out.push_back(std::move(x));
      }
      size_t k = n;
      while (k > 0 && images[k - 1] == n - 1) {
        images[--k] = 0;
      }
      if (k == 0) {
        break;
      }
      ++images[k - 1];
    }
    return out;
  }

  std::uint64_t stirling2(size_t n, size_t r) {
    std::vector<std::uint64_t> row(r + 1, 0);
    row[0] = 1;
    for (size_t m = 1; m <= n; ++m) {
      for (size_t k = std::min(m, r); k >= 1; --k) {
        row[k] = k * row[k] + row[k - 1];
      }
      row[0] = 0;
    }
    return row[r];
  }

  std::uint64_t binomial(size_t n, size_t k) {
    if (k > n) {
      return 0;
    }
    std::uint64_t out = 1;
    for (size_t j = 1; j <= k; ++j) {
      out = out * (n - k + j) / j;
    }
    return out;
  }

  std::vector<PartialInjection> inverse_extremal(size_t n, size_t r) {
    if (n > max_desk_degree) {
      throw SizeError("inverse extremal family is only built for n <= "
                      + std::to_string(max_desk_degree));
    }
    if (!(2 < r && r <= n)) {
      throw UsageError("inverse extremal family needs 2 < r <= n");
    }
    std::vector<PartialInjection> out;
    std::vector<bool>             pick(n, false);
    std::fill(pick.begin(), pick.begin() + r, true);
    do {
      std::vector<point> D;
      for (point p = 0; p < n; ++p) {
        if (pick[p]) {
          D.push_back(p);
        }
      }
      auto with = [&](std::vector<point> const& images) {
        std::vector<point> values(n, PartialInjection::undefined);
        for (size_t k = 0; k < r; ++k) {
          values[D[k]] = images[k];
        }
        out.emplace_back(std::move(values));
      };
      if (r == 3) {
        auto images = D;
        do {
          with(images);
        } while (std::next_permutation(images.begin(), images.end()));
      } else {
        for (size_t k = 0; k + 1 < r; k += 2) {
          auto images = D;
          std::swap(images[k], images[k + 1]);
          with(images);
        }
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
  }

  std::uint64_t inverse_rank_bound(size_t n, size_t r) {
    return binomial(n, r) * std::max<std::uint64_t>(2, r / 2);
  }

}  // namespace semirank
