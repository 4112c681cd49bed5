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

#include "semirank/io.hpp"

#include <algorithm>     // for sort
#include <charconv>      // for from_chars
#include <sstream>       // for ostringstream
#include <system_error>  // for errc

#include "semirank/errors.hpp"

namespace semirank {

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Lexing
    ////////////////////////////////////////////////////////////////////////

    struct Token {
      std::string text;
      size_t      column;  // 1-based
    };

    struct Line {
      size_t             number;  // 1-based
      std::vector<Token> tokens;
    };

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r';
    }

    // Bracketed literals keep their inner spaces: `[2 3 1]` and
    // `(1 2)(3 4)` are single tokens.
    std::vector<Token> tokenize(std::string_view text, size_t number) {
      std::vector<Token> out;
      size_t             k = 0;
      while (k < text.size()) {
        if (is_space(text[k])) {
          ++k;
          continue;
        }
        size_t const start = k;
        while (k < text.size() && !is_space(text[k])) {
          if (text[k] == '[' || text[k] == '(') {
            char const close = text[k] == '[' ? ']' : ')';
            auto       end   = text.find(close, k);
            if (end == std::string_view::npos) {
              throw ParseError(std::string("missing '") + close + "'", number, k + 1);
            }
            k = end + 1;
          } else {
            ++k;
          }
        }
        out.push_back({std::string(text.substr(start, k - start)), start + 1});
      }
      return out;
    }

    std::vector<Line> split_lines(std::string_view text) {
      std::vector<Line> out;
      size_t            number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        auto eol  = text.find('\n');
        auto line = text.substr(0, eol);
        text      = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
          line = line.substr(0, hash);
        }
        auto tokens = tokenize(line, number);
        if (!tokens.empty()) {
          out.push_back({number, std::move(tokens)});
        }
        if (eol == std::string_view::npos) {
          break;
        }
      }
      return out;
    }

    std::optional<size_t> to_number(std::string_view s) {
      size_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        return std::nullopt;
      }
      return value;
    }

    size_t number_at(Line const& line, Token const& t) {
      auto v = to_number(t.text);
      if (!v) {
        throw ParseError("expected a number, found '" + t.text + "'", line.number, t.column);
      }
      return *v;
    }

    // Comma separated 1-based points, converted to 0-based.
    std::vector<point> points_of(std::string_view s, Line const& line, size_t column) {
      std::vector<point> out;
      size_t             start = 0;
      while (start <= s.size()) {
        auto end  = s.find(',', start);
        auto part = s.substr(start, end == std::string_view::npos ? end : end - start);
        auto v    = to_number(part);
        if (!v) {
          throw ParseError("expected a point, found '" + std::string(part) + "'",
                           line.number,
                           column + start);
        }
        if (*v == 0) {
          throw SemanticError("points are numbered from 1", line.number, column + start);
        }
        out.push_back(static_cast<point>(*v - 1));
        if (end == std::string_view::npos) {
          break;
        }
        start = end + 1;
      }
      return out;
    }

    std::string joined(Line const& line) {
      std::string out;
      for (auto const& t : line.tokens) {
        out += t.text;
      }
      return out;
    }

    std::vector<size_t> numbers_in(std::string_view s) {
      std::vector<size_t> out;
      size_t              k = 0;
      while (k < s.size()) {
        if (is_space(s[k]) || s[k] == ',') {
          ++k;
          continue;
        }
        size_t start = k;
        while (k < s.size() && !is_space(s[k]) && s[k] != ',') {
          ++k;
        }
        auto v = to_number(s.substr(start, k - start));
        if (!v) {
          throw UsageError("expected a number, found '" + std::string(s.substr(start, k - start))
                           + "'");
        }
        out.push_back(*v);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Parser
    ////////////////////////////////////////////////////////////////////////

    class Parser {
     public:
      Parser(std::string_view text, ParseOptions const& opts)
          : _lines(split_lines(text)), _opts(opts) {}

      JobSpec parse() {
        if (_lines.empty()) {
          throw ParseError("empty input", 1, 1);
        }
        auto const& head = next();
        require_arity(head, 1);
        JobSpec     job;
        auto const& kind = head.tokens[0].text;
        if (kind == "rms") {
          job.kind  = JobKind::rms;
          job.group = parse_group();
          job.rms.emplace(job.group, parse_matrix(*job.group));
        } else if (kind == "sab") {
          job.kind = JobKind::sab;
          job.sab  = parse_sab();
        } else if (kind == "group") {
          job.kind  = JobKind::group;
          job.group = parse_group();
          if (!done() && peek().tokens[0].text == "subset") {
            auto const& line = next();
            job.has_subset   = true;
            for (size_t k = 1; k < line.tokens.size(); ++k) {
              job.subset.push_back(element(*job.group, line, line.tokens[k]));
            }
          }
        } else if (kind == "trans") {
          job.kind   = JobKind::trans;
          job.degree = parse_degree();
          keyword("gens");
          while (!done()) {
            job.transformations.push_back(transformation(job.degree, next()));
          }
          if (job.transformations.empty()) {
            throw ParseError("expected at least one transformation", last_line() + 1, 1);
          }
        } else {
          throw ParseError("unknown job '" + kind + "', expected rms, sab, group or trans",
                           head.number,
                           head.tokens[0].column);
        }
        if (!done()) {
          auto const& extra = peek();
          throw ParseError("unexpected '" + extra.tokens[0].text + "'",
                           extra.number,
                           extra.tokens[0].column);
        }
        return job;
      }

      static element_index element(FiniteGroup const& G, Line const& line, Token const& t) {
        try {
          return parse_element(G, t.text);
        } catch (UsageError const& e) {
          throw SemanticError(e.what(), line.number, t.column);
        }
      }

      static Transformation transformation(size_t n, Line const& line) {
        std::string body = joined_with_spaces(line);
        if (!body.empty() && body.front() == '[') {
          if (body.back() != ']') {
            throw ParseError("expected ']'", line.number, line.tokens.back().column);
          }
          body = body.substr(1, body.size() - 2);
        }
        std::vector<size_t> values;
        try {
          values = numbers_in(body);
        } catch (UsageError const& e) {
          throw ParseError(e.what(), line.number, line.tokens[0].column);
        }
        if (values.size() != n) {
          throw ParseError("expected " + std::to_string(n) + " images, found "
                               + std::to_string(values.size()),
                           line.number,
                           line.tokens[0].column);
        }
        std::vector<point> images;
        for (auto v : values) {
          if (v == 0 || v > n) {
            throw SemanticError("image " + std::to_string(v) + " out of range 1.."
                                    + std::to_string(n),
                                line.number,
                                line.tokens[0].column);
          }
          images.push_back(static_cast<point>(v - 1));
        }
        return Transformation(std::move(images));
      }

     private:
      static std::string joined_with_spaces(Line const& line) {
        std::string out;
        for (auto const& t : line.tokens) {
          out += (out.empty() ? "" : " ") + t.text;
        }
        return out;
      }

      bool done() const {
        return _pos == _lines.size();
      }

      size_t last_line() const {
        return _lines.empty() ? 0 : _lines[_pos == 0 ? 0 : _pos - 1].number;
      }

      Line const& peek() const {
        return _lines[_pos];
      }

      Line const& next() {
        if (done()) {
          throw ParseError("unexpected end of input", last_line() + 1, 1);
        }
        return _lines[_pos++];
      }

      static void require_arity(Line const& line, size_t n) {
        if (line.tokens.size() != n) {
          auto const& t = line.tokens[std::min(n, line.tokens.size() - 1)];
          throw ParseError("expected " + std::to_string(n) + " field" + (n == 1 ? "" : "s")
                               + " on this line, found " + std::to_string(line.tokens.size()),
                           line.number,
                           t.column);
        }
      }

      Line const& keyword(std::string const& kw) {
        auto const& line = next();
        if (line.tokens[0].text != kw) {
          throw ParseError("expected '" + kw + "', found '" + line.tokens[0].text + "'",
                           line.number,
                           line.tokens[0].column);
        }
        return line;
      }

      std::shared_ptr<FiniteGroup const> parse_group() {
        auto const& line = keyword("group");
        require_arity(line, 3);
        auto const& kind  = line.tokens[1];
        auto const& param = line.tokens[2];
        auto const  k     = number_at(line, param);
        try {
          if (kind.text == "sym") {
            return std::make_shared<FiniteGroup const>(build_symmetric(k, _opts.max_group_order));
          }
          if (kind.text == "cyc") {
            return std::make_shared<FiniteGroup const>(build_cyclic(k, _opts.max_group_order));
          }
        } catch (Error const& e) {
          throw SemanticError(e.what(), line.number, param.column);
        }
        if (kind.text != "table") {
          throw ParseError("unknown group '" + kind.text + "', expected sym, cyc or table",
                           line.number,
                           kind.column);
        }
        if (k == 0) {
          throw SemanticError("a group table needs at least one row", line.number, param.column);
        }
        if (k > _opts.max_group_order) {
          throw SemanticError("group order " + std::to_string(k) + " exceeds the cap "
                                  + std::to_string(_opts.max_group_order),
                              line.number,
                              param.column);
        }
        std::vector<std::vector<element_index>> rows;
        for (size_t r = 0; r < k; ++r) {
          auto const& row = next();
          require_arity(row, k);
          rows.emplace_back();
          for (auto const& t : row.tokens) {
            auto v = number_at(row, t);
            if (v >= k) {
              throw SemanticError("table entry out of range", row.number, t.column);
            }
            rows.back().push_back(static_cast<element_index>(v));
          }
        }
        try {
          return std::make_shared<FiniteGroup const>(
              FiniteGroup::from_table(rows, "T_" + std::to_string(k), _opts.max_group_order));
        } catch (Error const& e) {
          throw SemanticError(e.what(), line.number, kind.column);
        }
      }

      StructureMatrix parse_matrix(FiniteGroup const& G) {
        auto const& line = keyword("matrix");
        require_arity(line, 3);
        auto L = number_at(line, line.tokens[1]);
        auto I = number_at(line, line.tokens[2]);
        if (L == 0 || I == 0) {
          throw SemanticError("matrix dimensions must be positive", line.number,
                              line.tokens[L == 0 ? 1 : 2].column);
        }
        StructureMatrix P(L, I);
        for (size_t l = 0; l < L; ++l) {
          auto const& row = next();
          require_arity(row, I);
          for (size_t i = 0; i < I; ++i) {
            auto const& t = row.tokens[i];
            if (t.text != "0") {
              P.set(l, i, element(G, row, t));
            }
          }
        }
        return P;
      }

      size_t parse_degree() {
        auto const& line = keyword("n");
        require_arity(line, 2);
        auto n = number_at(line, line.tokens[1]);
        if (n == 0) {
          throw SemanticError("degree must be positive", line.number, line.tokens[1].column);
        }
        return n;
      }

      SabInput parse_sab() {
        SabInput in;
        in.n = parse_degree();
        keyword("images");
        std::optional<size_t> r;
        auto                  check_size = [&](size_t size, Line const& line) {
          if (!r) {
            r = size;
          } else if (*r != size) {
            throw SemanticError("expected " + std::to_string(*r) + " points, found "
                                    + std::to_string(size),
                                line.number,
                                line.tokens[0].column);
          }
        };
        while (!done() && peek().tokens[0].text != "kernels") {
          auto const& line = next();
          auto        set  = points_of(joined(line), line, line.tokens[0].column);
          for (auto p : set) {
            if (p >= in.n) {
              throw SemanticError("point " + std::to_string(p + 1) + " out of range",
                                  line.number,
                                  line.tokens[0].column);
            }
          }
          std::sort(set.begin(), set.end());
          if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
            throw SemanticError("repeated point in image", line.number, line.tokens[0].column);
          }
          if (std::find(in.images.begin(), in.images.end(), set) != in.images.end()) {
            throw SemanticError("repeated image", line.number, line.tokens[0].column);
          }
          check_size(set.size(), line);
          in.images.push_back(std::move(set));
        }
        if (in.images.empty()) {
          throw ParseError("expected at least one image", last_line() + 1, 1);
        }
        keyword("kernels");
        while (!done()) {
          auto const&                     line = next();
          auto                            text = joined(line);
          std::vector<std::vector<point>> classes;
          size_t                          start = 0;
          while (true) {
            auto end = text.find('|', start);
            classes.push_back(
                points_of(std::string_view(text).substr(start, end == std::string::npos
                                                                   ? end
                                                                   : end - start),
                          line,
                          line.tokens[0].column + start));
            if (end == std::string::npos) {
              break;
            }
            start = end + 1;
          }
          KernelPartition b;
          try {
            b = KernelPartition::from_classes(in.n, classes);
          } catch (UsageError const& e) {
            throw SemanticError(e.what(), line.number, line.tokens[0].column);
          }
          if (std::find(in.kernels.begin(), in.kernels.end(), b) != in.kernels.end()) {
            throw SemanticError("repeated kernel", line.number, line.tokens[0].column);
          }
          check_size(b.class_count(), line);
          in.kernels.push_back(std::move(b));
        }
        if (in.kernels.empty()) {
          throw ParseError("expected at least one kernel", last_line() + 1, 1);
        }
        return in;
      }

      std::vector<Line> _lines;
      size_t            _pos = 0;
      ParseOptions      _opts;
    };

    std::string format_permutation_cycles(std::vector<std::uint32_t> const& perm) {
      std::string       out;
      std::vector<bool> seen(perm.size(), false);
      for (std::uint32_t p = 0; p < perm.size(); ++p) {
        if (seen[p] || perm[p] == p) {
          continue;
        }
        out += '(';
        for (auto q = p; !seen[q]; q = perm[q]) {
          seen[q] = true;
          out += (q == p ? "" : " ") + std::to_string(q + 1);
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Element literals
  ////////////////////////////////////////////////////////////////////////

  std::string format_element(FiniteGroup const& G, element_index x) {
    switch (G.kind()) {
      case GroupKind::symmetric:
        return format_permutation_cycles(G.permutation(x));
      case GroupKind::cyclic:
        return x == 0 ? "e" : x == 1 ? "a" : "a^" + std::to_string(x);
      default:
        return "g" + std::to_string(x);
    }
  }

  element_index parse_element(FiniteGroup const& G, std::string_view s) {
    if (s == "e") {
      return G.identity();
    }
    auto bad = [&](std::string const& why) {
      return UsageError("invalid element '" + std::string(s) + "' of " + G.name() + ": " + why);
    };
    switch (G.kind()) {
      case GroupKind::symmetric: {
        size_t const r = G.parameter();
        if (s.front() == '[') {
          if (s.back() != ']') {
            throw bad("expected ']'");
          }
          auto values = numbers_in(s.substr(1, s.size() - 2));
          if (values.size() != r) {
            throw bad("expected " + std::to_string(r) + " images");
          }
          std::vector<std::uint32_t> images;
          std::vector<bool>          seen(r + 1, false);
          for (auto v : values) {
            if (v == 0 || v > r || seen[v]) {
              throw bad("not a permutation of 1.." + std::to_string(r));
            }
            seen[v] = true;
            images.push_back(static_cast<std::uint32_t>(v - 1));
          }
          return G.index_of_permutation(images);
        }
        if (s.front() != '(') {
          throw bad("expected cycles or one-line notation");
        }
        element_index result = G.identity();
        size_t        k      = 0;
        while (k < s.size()) {
          if (s[k] != '(') {
            throw bad("expected '('");
          }
          auto end = s.find(')', k);
          if (end == std::string_view::npos) {
            throw bad("expected ')'");
          }
          auto                       cycle = numbers_in(s.substr(k + 1, end - k - 1));
          std::vector<std::uint32_t> images(r);
          for (std::uint32_t p = 0; p < r; ++p) {
            images[p] = p;
          }
          std::vector<bool> seen(r + 1, false);
          for (size_t t = 0; t < cycle.size(); ++t) {
            auto v = cycle[t];
            if (v == 0 || v > r) {
              throw bad("point " + std::to_string(v) + " out of range 1.." + std::to_string(r));
            }
            if (seen[v]) {
              throw bad("point " + std::to_string(v) + " repeated in a cycle");
            }
            seen[v]        = true;
            images[v - 1] = static_cast<std::uint32_t>(cycle[(t + 1) % cycle.size()] - 1);
          }
          result = G.product(result, G.index_of_permutation(images));
          k      = end + 1;
        }
        return result;
      }
      case GroupKind::cyclic: {
        size_t const m = G.parameter();
        if (s == "a") {
          return static_cast<element_index>(1 % m);
        }
        if (s.substr(0, 2) == "a^") {
          if (auto k = to_number(s.substr(2))) {
            return static_cast<element_index>(*k % m);
          }
        }
        throw bad("expected e, a or a^k");
      }
      default: {
        if (s.front() == 'g') {
          if (auto k = to_number(s.substr(1))) {
            if (*k < G.order()) {
              return static_cast<element_index>(*k);
            }
            throw bad("index out of range");
          }
        }
        throw bad("expected g<k>");
      }
    }
  }

  std::string format_rms_element(ReesMatrixSemigroup const& S, RmsElement const& x) {
    if (x.is_zero()) {
      return "0";
    }
    return std::to_string(x.i() + 1) + " " + format_element(S.group(), x.g()) + " "
           + std::to_string(x.lambda() + 1);
  }

  std::vector<RmsElement> parse_rms_witness(ReesMatrixSemigroup const& S, std::string_view text) {
    std::vector<RmsElement> out;
    for (auto const& line : split_lines(text)) {
      if (line.tokens.size() == 1 && line.tokens[0].text == "0") {
        out.push_back(RmsElement::zero());
        continue;
      }
      if (line.tokens.size() != 3) {
        throw ParseError("expected '<i> <element> <lambda>' or '0'", line.number,
                         line.tokens[0].column);
      }
      auto i = number_at(line, line.tokens[0]);
      auto l = number_at(line, line.tokens[2]);
      if (i == 0 || i > S.i_count()) {
        throw SemanticError("row out of range", line.number, line.tokens[0].column);
      }
      if (l == 0 || l > S.lambda_count()) {
        throw SemanticError("column out of range", line.number, line.tokens[2].column);
      }
      out.emplace_back(static_cast<std::uint32_t>(i - 1),
                       Parser::element(S.group(), line, line.tokens[1]),
                       static_cast<std::uint32_t>(l - 1));
    }
    return out;
  }

  std::vector<Transformation> parse_transformation_witness(size_t n, std::string_view text) {
    std::vector<Transformation> out;
    for (auto const& line : split_lines(text)) {
      out.push_back(Parser::transformation(n, line));
    }
    return out;
  }

  std::vector<element_index> parse_group_witness(FiniteGroup const& G, std::string_view text) {
    std::vector<element_index> out;
    for (auto const& line : split_lines(text)) {
      for (auto const& t : line.tokens) {
        out.push_back(Parser::element(G, line, t));
      }
    }
    return out;
  }

  JobSpec parse_input(std::string_view text, ParseOptions const& opts) {
    return Parser(text, opts).parse();
  }

  ////////////////////////////////////////////////////////////////////////
  // Serialization
  ////////////////////////////////////////////////////////////////////////

  std::string format_set(std::vector<point> const& set) {
    std::string out;
    for (size_t k = 0; k < set.size(); ++k) {
      out += (k ? "," : "") + std::to_string(set[k] + 1);
    }
    return out;
  }

  namespace {
    void write_group(std::ostringstream& out, FiniteGroup const& G) {
      switch (G.kind()) {
        case GroupKind::symmetric:
          out << "group sym " << G.parameter() << '\n';
          return;
        case GroupKind::cyclic:
          out << "group cyc " << G.parameter() << '\n';
          return;
        default:
          out << "group table " << G.order() << '\n';
          for (element_index x = 0; x < G.order(); ++x) {
            for (element_index y = 0; y < G.order(); ++y) {
              out << (y ? " " : "") << G.product(x, y);
            }
            out << '\n';
          }
      }
    }
  }  // namespace

  std::string serialize(JobSpec const& job) {
    std::ostringstream out;
    switch (job.kind) {
      case JobKind::rms: {
        auto const& S = *job.rms;
        auto const& P = S.matrix();
        out << "rms\n";
        write_group(out, S.group());
        out << "matrix " << P.lambda_count() << ' ' << P.i_count() << '\n';
        for (size_t l = 0; l < P.lambda_count(); ++l) {
          for (size_t i = 0; i < P.i_count(); ++i) {
            auto const& p = P.at(l, i);
            out << (i ? " " : "") << (p ? format_element(S.group(), *p) : "0");
          }
          out << '\n';
        }
        break;
      }
      case JobKind::sab:
        out << "sab\nn " << job.sab.n << "\nimages\n";
        for (auto const& a : job.sab.images) {
          out << format_set(a) << '\n';
        }
        out << "kernels\n";
        for (auto const& b : job.sab.kernels) {
          out << b.to_string() << '\n';
        }
        break;
      case JobKind::group:
        out << "group\n";
        write_group(out, *job.group);
        if (job.has_subset) {
          out << "subset";
          for (auto x : job.subset) {
            out << ' ' << format_element(*job.group, x);
          }
          out << '\n';
        }
        break;
      case JobKind::trans:
        out << "trans\nn " << job.degree << "\ngens\n";
        for (auto const& x : job.transformations) {
          out << x.to_string() << '\n';
        }
        break;
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  std::string gh_dot(ReesMatrixSemigroup const& S) {
    std::ostringstream out;
    auto const&        P = S.matrix();
    out << "graph gh {\n  node [shape=box];\n";
    for (size_t i = 0; i < S.i_count(); ++i) {
      out << "  i" << i + 1 << ";\n";
    }
    out << "  node [shape=circle];\n";
    for (size_t l = 0; l < S.lambda_count(); ++l) {
      out << "  l" << l + 1 << ";\n";
    }
    for (size_t l = 0; l < P.lambda_count(); ++l) {
      for (size_t i = 0; i < P.i_count(); ++i) {
        if (auto const& p = P.at(l, i)) {
          out << "  l" << l + 1 << " -- i" << i + 1 << " [label=\""
              << format_element(S.group(), *p) << "\"];\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string transversal_dot(SabInput const& in) {
    auto               g = transversal_graph(in);
    std::ostringstream out;
    out << "graph transversal {\n  node [shape=box];\n";
    for (size_t b = 0; b < in.kernels.size(); ++b) {
      out << "  b" << b + 1 << " [label=\"" << in.kernels[b].to_string() << "\"];\n";
    }
    out << "  node [shape=circle];\n";
    for (size_t a = 0; a < in.images.size(); ++a) {
      out << "  a" << a + 1 << " [label=\"" << format_set(in.images[a]) << "\"];\n";
    }
    for (size_t a = 0; a < in.images.size(); ++a) {
      for (size_t b = 0; b < in.kernels.size(); ++b) {
        if (g.adjacent[a][b]) {
          out << "  a" << a + 1 << " -- b" << b + 1 << ";\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace semirank
