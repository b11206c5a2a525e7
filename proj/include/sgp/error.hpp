#pragma once

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <vector>     // for vector

namespace sgp {

  enum class ErrorCode {
    out_of_range_entry,
    associativity_violation,
    unsupported_size,
    malformed_partition,
    not_a_congruence,
    entry_out_of_range,
    dimension_mismatch,
    ill_formed,
    not_an_embedding,
    unsupported_property,
    size_cap_exceeded,
    parse_error,
    invalid_argument
  };

  char const* error_code_name(ErrorCode code) noexcept;

  // Every failure raised by the library. `where()` holds the offending
  // indices (cell, triple, line number, ...) when the code has any.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what, std::vector<std::size_t> where = {});

    ErrorCode code() const noexcept {
      return _code;
    }

    std::vector<std::size_t> const& where() const noexcept {
      return _where;
    }

   private:
    ErrorCode                _code;
    std::vector<std::size_t> _where;
  };

}  // namespace sgp
