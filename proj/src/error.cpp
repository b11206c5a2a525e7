#include "sgp/error.hpp"

#include <utility>  // for move

namespace sgp {

  char const* error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::out_of_range_entry:
        return "OutOfRangeEntry";
      case ErrorCode::associativity_violation:
        return "AssociativityViolation";
      case ErrorCode::unsupported_size:
        return "UnsupportedSize";
      case ErrorCode::malformed_partition:
        return "MalformedPartition";
      case ErrorCode::not_a_congruence:
        return "NotACongruence";
      case ErrorCode::entry_out_of_range:
        return "EntryOutOfRange";
      case ErrorCode::dimension_mismatch:
        return "DimensionMismatch";
      case ErrorCode::ill_formed:
        return "IllFormed";
      case ErrorCode::not_an_embedding:
        return "NotAnEmbedding";
      case ErrorCode::unsupported_property:
        return "UnsupportedProperty";
      case ErrorCode::size_cap_exceeded:
        return "SizeCapExceeded";
      case ErrorCode::parse_error:
        return "ParseError";
      case ErrorCode::invalid_argument:
        return "InvalidArgument";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& what, std::vector<std::size_t> where)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        _code(code),
        _where(std::move(where)) {}

}  // namespace sgp
