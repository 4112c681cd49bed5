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

#include "semirank/runner.hpp"

#include <algorithm>   // for sort, lower_bound
#include <functional>  // for function
#include <memory>      // for shared_ptr
#include <sstream>     // for ostringstream

#include "semirank/errors.hpp"
#include "semirank/graham.hpp"
#include "semirank/oracle.hpp"
#include "semirank/rank.hpp"

namespace semirank {

  namespace {

    using id = AbstractSemigroup::id;

    RankOptions rank_options(RunOptions const& opts) {
      RankOptions ro;
      if (opts.max_search) {
        ro.max_search                    = *opts.max_search;
        ro.sigma.max_tuples              = *opts.max_search;
        ro.sigma.group.max_closures      = *opts.max_search;
      }
      return ro;
    }

    ExactRankOptions exact_options(RunOptions const& opts) {
      ExactRankOptions eo;
      if (opts.max_search) {
        eo.max_nodes = *opts.max_search;
      }
      return eo;
    }

    GroupSearchOptions group_options(RunOptions const& opts) {
      GroupSearchOptions go;
      if (opts.max_search) {
        go.max_closures = *opts.max_search;
      }
      return go;
    }

    // The Rees matrix semigroup a job denotes: the job itself, or the
    // principal factor of S(A, B).
    ReesMatrixSemigroup rms_of(JobSpec const& job) {
      if (job.kind == JobKind::rms) {
        return *job.rms;
      }
      if (job.kind == JobKind::sab) {
        job.sab.weight();
        return sab_principal_rms(job.sab);
      }
      throw UsageError("this command needs an rms or sab job");
    }

    SabInput const& sab_of(JobSpec const& job) {
      if (job.kind != JobKind::sab) {
        throw UsageError("this command needs a sab job");
      }
      require_rank_range(job.sab);
      return job.sab;
    }

    std::string join(std::vector<std::string> const& parts, char const* sep) {
      std::string out;
      for (size_t k = 0; k < parts.size(); ++k) {
        out += (k ? sep : "") + parts[k];
      }
      return out;
    }

    std::string range(size_t begin, size_t end) {
      if (begin == end) {
        return "none";
      }
      if (end == begin + 1) {
        return std::to_string(begin + 1);
      }
      return std::to_string(begin + 1) + "-" + std::to_string(end);
    }

    std::string labels(std::vector<std::uint32_t> const& order) {
      std::vector<std::string> parts;
      for (auto x : order) {
        parts.push_back(std::to_string(x + 1));
      }
      return join(parts, " ");
    }

    ////////////////////////////////////////////////////////////////////////
    // Rees matrix commands
    ////////////////////////////////////////////////////////////////////////

    std::string rank_report(ReesMatrixSemigroup const& S, RunOptions const& opts) {
      auto ro         = rank_options(opts);
      ro.with_witness = true;
      auto const  r   = rank_rms(S, ro);
      auto const& in  = r.ingredients;
      auto const& G   = S.group();

      std::ostringstream out;
      out << "semigroup: M0[" << G.name() << "; " << S.i_count() << " rows, "
          << S.lambda_count() << " columns], " << S.size() << " elements\n";
      out << "case: " << to_string(r.rank_case) << '\n';
      out << "rank: " << r.value << '\n';
      if (r.rank_case == RankCase::general) {
        std::vector<std::string> conj, comp;
        for (auto g : r.sigma.conjugators) {
          conj.push_back(format_element(G, g));
        }
        for (auto x : r.sigma.complement.elements()) {
          comp.push_back(format_element(G, x));
        }
        out << "non-isolated rows: " << in.rows << '\n';
        out << "non-isolated columns: " << in.columns << '\n';
        out << "components: " << in.components << '\n';
        out << "sigma_min: " << in.sigma_min << '\n';
        out << "conjugators: " << join(conj, " ") << '\n';
        out << "complement: " << (comp.empty() ? "none" : join(comp, " ")) << '\n';
        out << "isolated rows: " << in.isolated_rows << '\n';
        out << "isolated columns: " << in.isolated_cols << '\n';
      }
      out << "witness:\n";
      for (auto const& x : r.witness) {
        out << "  " << format_rms_element(S, x) << '\n';
      }
      out << "rank=" << r.value << " n=" << in.components << " sigma_min=" << in.sigma_min
          << " isolated_I=" << in.isolated_rows << " isolated_L=" << in.isolated_cols << '\n';
      return out.str();
    }

    std::string gens_report(ReesMatrixSemigroup const& S, RunOptions const& opts) {
      auto               X = minimal_generating_set(S, rank_options(opts));
      std::ostringstream out;
      out << "# " << X.size() << " generators\n";
      for (auto const& x : X) {
        out << format_rms_element(S, x) << '\n';
      }
      return out.str();
    }

    std::string normalize_report(ReesMatrixSemigroup const& S) {
      auto const         gnf = graham_normal_form(S);
      auto const&        N   = gnf.normalized();
      std::ostringstream out;
      out << "# Graham normal form\n";
      out << "# row order: " << labels(gnf.i_order()) << '\n';
      out << "# column order: " << labels(gnf.lambda_order()) << '\n';
      size_t k = 0;
      for (auto const& b : gnf.blocks()) {
        out << "# block " << ++k << ": rows " << range(b.i_begin, b.i_end) << ", columns "
            << range(b.lambda_begin, b.lambda_end) << ", subgroup order " << b.subgroup.size()
            << '\n';
      }
      out << "# isolated rows: " << range(S.i_count() - gnf.isolated_i_count(), S.i_count())
          << '\n';
      out << "# isolated columns: "
          << range(S.lambda_count() - gnf.isolated_lambda_count(), S.lambda_count()) << '\n';
      JobSpec job;
      job.kind  = JobKind::rms;
      job.group = N.group_ptr();
      job.rms.emplace(N);
      out << serialize(job);
      return out.str();
    }

    ////////////////////////////////////////////////////////////////////////
    // S(A, B) commands
    ////////////////////////////////////////////////////////////////////////

    std::string sab_rank_report(SabInput const& in) {
      auto const         r = sab_rank(in);
      auto const&        g = r.graph;
      std::ostringstream out;
      out << "degree: " << in.n << '\n';
      out << "weight: " << in.weight() << '\n';
      out << "images: " << in.images.size() << '\n';
      out << "kernels: " << in.kernels.size() << '\n';
      out << "transversal edges: " << g.edge_count << '\n';
      out << "isolated vertices: " << g.v0 << '\n';
      out << "non-isolated images: " << g.v_plus_A << '\n';
      out << "non-isolated kernels: " << g.v_plus_B << '\n';
      out << "max degree: " << g.max_degree << '\n';
      out << "rank: " << r.value << '\n';
      out << "rank=" << r.value << " case=" << to_string(r.sab_case) << " v0=" << g.v0
          << " v_plus_A=" << g.v_plus_A << " v_plus_B=" << g.v_plus_B
          << " max_degree=" << g.max_degree << '\n';
      return out.str();
    }

    std::string transformations_text(std::vector<Transformation> const& X) {
      std::ostringstream out;
      out << "# " << X.size() << " generators\n";
      for (auto const& x : X) {
        out << x.to_string() << '\n';
      }
      return out.str();
    }

    ////////////////////////////////////////////////////////////////////////
    // Oracle commands
    ////////////////////////////////////////////////////////////////////////

    // A tabulated semigroup with a printer for its elements.
    struct Tabulated {
      AbstractSemigroup                  S;
      std::function<std::string(id)>     name;
      std::function<std::vector<id>(std::string_view)> parse_witness;
    };

    template <typename T, typename Multiply>
    Tabulated tabulate(std::vector<T> const& gens, Multiply mult, RunOptions const& opts,
                       std::function<std::vector<T>(std::string_view)> parse) {
      auto [S, elts] = AbstractSemigroup::from_generators(gens, mult, std::optional<T>(),
                                                          opts.max_closure);
      auto shared = std::make_shared<std::vector<T>>(std::move(elts));
      return Tabulated{
          std::move(S),
          [shared](id x) { return (*shared)[x].to_string(); },
          [shared, parse](std::string_view text) {
            std::vector<id> out;
            for (auto const& x : parse(text)) {
              auto it = std::lower_bound(shared->begin(), shared->end(), x);
              if (it == shared->end() || !(*it == x)) {
                throw UsageError("witness element " + x.to_string()
                                 + " does not lie in the semigroup");
              }
              out.push_back(static_cast<id>(it - shared->begin()));
            }
            return out;
          }};
    }

    // Group elements wrapped so that tabulate can print them.
    struct GroupElement {
      FiniteGroup const* G;
      element_index      x;

      std::string to_string() const {
        return format_element(*G, x);
      }

      bool operator==(GroupElement const& that) const {
        return x == that.x;
      }

      bool operator<(GroupElement const& that) const {
        return x < that.x;
      }
    };

    Tabulated tabulate(JobSpec const& job, RunOptions const& opts) {
      switch (job.kind) {
        case JobKind::rms: {
          auto const& R = *job.rms;
          if (R.size() > opts.max_closure) {
            throw SizeError("semigroup has " + std::to_string(R.size())
                            + " elements, more than --max-closure");
          }
          auto shared = std::make_shared<ReesMatrixSemigroup>(R);
          return Tabulated{AbstractSemigroup::from_rms(R, opts.max_closure),
                           [shared](id x) {
                             return format_rms_element(*shared, shared->from_index(x));
                           },
                           [shared](std::string_view text) {
                             std::vector<id> out;
                             for (auto const& x : parse_rms_witness(*shared, text)) {
                               out.push_back(static_cast<id>(shared->to_index(x)));
                             }
                             return out;
                           }};
        }
        case JobKind::sab: {
          job.sab.weight();
          auto const n = job.sab.n;
          return tabulate(
              sab_generators(job.sab),
              [](Transformation const& x, Transformation const& y) { return compose(x, y); },
              opts,
              std::function<std::vector<Transformation>(std::string_view)>(
                  [n](std::string_view text) { return parse_transformation_witness(n, text); }));
        }
        case JobKind::trans: {
          auto const n = job.degree;
          return tabulate(
              job.transformations,
              [](Transformation const& x, Transformation const& y) { return compose(x, y); },
              opts,
              std::function<std::vector<Transformation>(std::string_view)>(
                  [n](std::string_view text) { return parse_transformation_witness(n, text); }));
        }
        case JobKind::group: {
          FiniteGroup const*        G = job.group.get();
          std::vector<GroupElement> all;
          for (element_index x = 0; x < G->order(); ++x) {
            all.push_back({G, x});
          }
          return tabulate(
              all,
              [G](GroupElement const& x, GroupElement const& y) {
                return GroupElement{G, G->product(x.x, y.x)};
              },
              opts,
              std::function<std::vector<GroupElement>(std::string_view)>(
                  [G](std::string_view text) {
                    std::vector<GroupElement> out;
                    for (auto x : parse_group_witness(*G, text)) {
                      out.push_back({G, x});
                    }
                    return out;
                  }));
        }
      }
      throw InternalError("unknown job kind");
    }

    std::string oracle_rank_report(JobSpec const& job, RunOptions const& opts) {
      auto               T     = tabulate(job, opts);
      auto const         bound = maximal_jclass_lower_bound(T.S);
      auto const         r     = exact_rank(T.S, T.S.size(), exact_options(opts));
      std::ostringstream out;
      if (!r) {
        throw InternalError("no generating subset found");
      }
      out << "size: " << T.S.size() << '\n';
      out << "maximal J-class bound: " << bound << '\n';
      out << "rank: " << r->value << '\n';
      out << "witness:\n";
      for (auto x : r->witness) {
        out << "  " << T.name(x) << '\n';
      }
      out << "rank=" << r->value << " size=" << T.S.size() << " lower_bound=" << bound << '\n';
      return out.str();
    }

    std::pair<std::string, bool> oracle_check_report(JobSpec const& job,
                                                     std::string_view witness,
                                                     RunOptions const& opts) {
      std::ostringstream out;
      if (job.kind == JobKind::group) {
        auto const& G = *job.group;
        auto        X = parse_group_witness(G, witness);
        auto        A = GroupSubset::from_elements(G.order(), job.subset);
        for (auto x : X) {
          A.insert(x);
        }
        auto const size = subgroup_closure(G, A).size();
        bool const ok   = size == G.order();
        out << "check=" << (ok ? "pass" : "fail") << " witness=" << X.size()
            << " generated=" << size << " size=" << G.order() << '\n';
        return {out.str(), ok};
      }
      auto       T    = tabulate(job, opts);
      auto       X    = T.parse_witness(witness);
      auto const gen  = T.S.closure_of(X);
      bool const ok   = verify_generates(T.S, X);
      out << "check=" << (ok ? "pass" : "fail") << " witness=" << X.size()
          << " generated=" << gen.size() << " size=" << T.S.size() << '\n';
      return {out.str(), ok};
    }

    std::string group_rank_report(JobSpec const& job, RunOptions const& opts) {
      auto const&        G = *job.group;
      auto const         A = GroupSubset::from_elements(G.order(), job.subset);
      auto const         r = relative_rank(G, A, group_options(opts));
      std::ostringstream out;
      std::vector<std::string> parts;
      for (auto x : r.witness.elements()) {
        parts.push_back(format_element(G, x));
      }
      out << "group: " << G.name() << ", order " << G.order() << '\n';
      if (job.has_subset) {
        out << "relative to: " << job.subset.size() << " elements\n";
      }
      out << "witness: " << (parts.empty() ? "none" : join(parts, " ")) << '\n';
      out << "rank=" << r.value << '\n';
      return out.str();
    }

    std::string group_gens_report(JobSpec const& job, RunOptions const& opts) {
      auto const& G = *job.group;
      auto const  A = GroupSubset::from_elements(G.order(), job.subset);
      auto const  r = relative_rank(G, A, group_options(opts));
      std::ostringstream out;
      out << "# " << r.value << " generators\n";
      for (auto x : r.witness.elements()) {
        out << format_element(G, x) << '\n';
      }
      return out.str();
    }

    RunResult dispatch(JobSpec const& job, RunRequest const& req) {
      auto const& opts = req.options;
      RunResult   res;
      switch (req.command) {
        case Command::rank:
          res.output = job.kind == JobKind::group ? group_rank_report(job, opts)
                                                  : rank_report(rms_of(job), opts);
          break;
        case Command::gens:
          if (job.kind == JobKind::group) {
            res.output = group_gens_report(job, opts);
          } else if (job.kind == JobKind::sab) {
            res.output = transformations_text(
                sab_minimal_generators(sab_of(job), rank_options(opts)));
          } else {
            res.output = gens_report(rms_of(job), opts);
          }
          break;
        case Command::graph:
          res.output = job.kind == JobKind::sab ? transversal_dot(job.sab)
                                                : gh_dot(rms_of(job));
          break;
        case Command::normalize:
          res.output = normalize_report(rms_of(job));
          break;
        case Command::sab_rank:
          res.output = sab_rank_report(sab_of(job));
          break;
        case Command::sab_gens:
          res.output = transformations_text(
              sab_minimal_generators(sab_of(job), rank_options(opts)));
          break;
        case Command::sab_graph:
          if (job.kind != JobKind::sab) {
            throw UsageError("this command needs a sab job");
          }
          job.sab.weight();
          res.output = transversal_dot(job.sab);
          break;
        case Command::oracle_rank:
          res.output = oracle_rank_report(job, opts);
          break;
        case Command::oracle_check: {
          auto [text, ok] = oracle_check_report(job, req.witness_text, opts);
          res.output      = std::move(text);
          if (!ok) {
            res.diagnostic = "error: the witness does not generate the semigroup\n";
            res.exit_code  = exit_input;
          }
          break;
        }
      }
      return res;
    }

    RunResult failure(int code, std::string const& what) {
      RunResult res;
      res.diagnostic = "error: " + what + "\n";
      res.exit_code  = code;
      return res;
    }

  }  // namespace

  RunResult run(JobSpec const& job, RunRequest const& request) {
    try {
      return dispatch(job, request);
    } catch (BudgetError const& e) {
      return failure(exit_budget, e.what());
    } catch (SizeError const& e) {
      return failure(exit_budget, e.what());
    } catch (InternalError const& e) {
      return failure(exit_internal, e.what());
    } catch (Error const& e) {
      return failure(exit_input, e.what());
    }
  }

  RunResult run_text(std::string_view text, RunRequest const& request) {
    JobSpec job;
    try {
      job = parse_input(text);
    } catch (Error const& e) {
      return failure(exit_input, e.what());
    }
    return run(job, request);
  }

}  // namespace semirank
