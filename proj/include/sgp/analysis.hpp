#pragma once

#include <optional>     // for optional
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "sgp/core.hpp"

namespace sgp {

  enum class Property {
    right_simple,
    left_simple,
    simple,
    left_cancellative,
    right_cancellative,
    right_group,
    left_equalizer_simple,
    idempotent_free,
    completely_simple
  };

  std::string_view        property_name(Property p) noexcept;
  std::optional<Property> property_from_name(std::string_view name) noexcept;
  std::vector<Property>   all_properties();

  // Definitional brute-force evaluation:
  //   right_simple          sS = S for every s
  //   left_simple           Ss = S for every s
  //   simple                SaS = S for every a
  //   left_cancellative     ab = ac implies b = c
  //   right_cancellative    ba = ca implies b = c
  //   right_group           right_simple and left_cancellative
  //   left_equalizer_simple x0 a = x0 b for some x0 implies xa = xb for all x
  //   idempotent_free       no e with ee = e
  //   completely_simple     simple and some idempotent is primitive
  bool check_property(Semigroup const& S, Property p);

  // Left and right simple at once, which for a semigroup means a group.
  bool is_group(Semigroup const& S);

  // Idempotents e with no other idempotent f satisfying ef = fe = f.
  std::vector<element_id> primitive_idempotents(Semigroup const& S);

  // {s} together with Ss, sorted.
  std::vector<element_id> principal_left_ideal(Semigroup const& S, element_id s);

  bool is_left_ideal(Semigroup const& S, std::vector<element_id> const& subset);

  // The inclusion-minimal left ideals, each sorted, in increasing order of
  // their least element. Every minimal left ideal is principal, so these are
  // the minimal members of the family of principal left ideals.
  std::vector<std::vector<element_id>> minimal_left_ideals(Semigroup const& S);

}  // namespace sgp
