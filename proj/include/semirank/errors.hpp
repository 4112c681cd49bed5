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

// Exception types shared by every module.

#ifndef SEMIRANK_ERRORS_HPP_
#define SEMIRANK_ERRORS_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace semirank {

  //! Base class of all exceptions thrown by semirank.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An object would exceed a configured size cap.
  class SizeError : public Error {
   public:
    using Error::Error;
  };

  //! An exhaustive search ran out of budget. Never replaced by an estimate.
  class BudgetError : public Error {
   public:
    using Error::Error;
  };

  //! Arguments that violate a documented precondition.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  //! The inputs are outside the cases covered by a closed formula.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  //! A computed result contradicts a verified invariant.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

  //! Malformed input text; carries a 1-based location.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, size_t line, size_t column)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    size_t line() const noexcept {
      return _line;
    }

    size_t column() const noexcept {
      return _column;
    }

   private:
    size_t _line;
    size_t _column;
  };

  //! Well-formed input that names something invalid (bad permutation, point
  //! out of range, ...).
  class SemanticError : public ParseError {
   public:
    using ParseError::ParseError;
  };

}  // namespace semirank

#endif  // SEMIRANK_ERRORS_HPP_
