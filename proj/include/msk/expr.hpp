#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "msk/ratfun.hpp"

namespace msk {

/// Syntax or name-resolution failure in an expression, with the 0-based
/// character offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an expression of the grammar in docs/grammar.md over the given
/// variable table. Division by non-constant expressions yields a genuine
/// rational function.
RatFun parse_ratfun(std::string_view text, const VarTable::Ptr& table);

/// As parse_ratfun, but rejects non-constant denominators.
Poly parse_poly(std::string_view text, const VarTable::Ptr& table);

}  // namespace msk
