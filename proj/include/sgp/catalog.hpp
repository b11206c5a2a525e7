#pragma once

#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "sgp/core.hpp"

namespace sgp {

  // The least row-major serialization of a table over all relabelings (and
  // over the relabelings of the transpose when that was requested). Equal keys
  // mean isomorphic (resp. isomorphic or anti-isomorphic) semigroups.
  struct CanonicalKey {
    std::string bytes;

    friend auto operator<=>(CanonicalKey const&, CanonicalKey const&) = default;
  };

  inline constexpr std::size_t max_canonical_order = 6;

  // Throws Error(size_cap_exceeded) above max_canonical_order.
  CanonicalKey canonical_form(Semigroup const& S, bool include_transpose = false);

  // The relabeling of S (or its transpose) whose serialization is the key.
  Semigroup canonical_representative(Semigroup const& S, bool include_transpose = false);

  enum class EnumerationMode { labeled, up_to_iso, up_to_iso_anti };

  std::string_view               mode_name(EnumerationMode mode) noexcept;
  std::optional<EnumerationMode> mode_from_name(std::string_view name) noexcept;

  inline constexpr std::size_t max_enumeration_order = 4;

  // All associative tables of order n by cell-wise backtracking with
  // associativity checked as soon as a triple is fully determined. In the
  // deduplicated modes each class is represented by its canonical
  // representative, and the output is sorted by key; labeled output is in
  // lexicographic table order. n = 5 needs allow_order_five. Throws
  // Error(size_cap_exceeded) otherwise.
  std::vector<Semigroup> enumerate_semigroups(std::size_t     n,
                                              EnumerationMode mode,
                                              bool            allow_order_five = false);

}  // namespace sgp
