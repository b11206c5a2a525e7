#pragma once

#include <cstddef>      // for size_t
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "sgp/core.hpp"

namespace sgp {

  enum class MorphismKind { hom, embedding, iso };

  std::string_view morphism_kind_name(MorphismKind kind) noexcept;

  // An element-wise map from a semigroup of order source_order() into one of
  // order target_order(). The kind is only a claim about the shape of the
  // map: an iso claim requires a bijection and an embedding claim requires an
  // injection, both enforced on construction. Whether the map respects
  // multiplication is decided by is_homomorphism.
  class Morphism {
   public:
    // Throws Error(dimension_mismatch) on a zero-sized codomain,
    // Error(out_of_range_entry) on an image outside [0, target_order) and
    // Error(ill_formed) if the map does not have the shape the kind claims.
    Morphism(std::size_t             target_order,
             std::vector<element_id> map,
             MorphismKind            kind = MorphismKind::hom);

    static Morphism identity(std::size_t n);

    std::size_t source_order() const noexcept {
      return _map.size();
    }

    std::size_t target_order() const noexcept {
      return _target_order;
    }

    element_id operator()(element_id a) const noexcept {
      return _map[a];
    }

    std::vector<element_id> const& map() const noexcept {
      return _map;
    }

    MorphismKind kind_claim() const noexcept {
      return _kind;
    }

    bool is_injective() const;
    bool is_surjective() const;

    friend bool operator==(Morphism const&, Morphism const&) = default;

   private:
    std::size_t             _target_order;
    std::vector<element_id> _map;
    MorphismKind            _kind;
  };

  // g after f.
  Morphism compose(Morphism const& g, Morphism const& f);

}  // namespace sgp
