#include "sgp/morphism.hpp"

#include <numeric>  // for iota
#include <string>   // for to_string
#include <utility>  // for move

#include "sgp/error.hpp"

namespace sgp {

  std::string_view morphism_kind_name(MorphismKind kind) noexcept {
    switch (kind) {
      case MorphismKind::hom:
        return "hom";
      case MorphismKind::embedding:
        return "embedding";
      case MorphismKind::iso:
        return "iso";
    }
    return "unknown";
  }

  Morphism::Morphism(std::size_t target_order, std::vector<element_id> map, MorphismKind kind)
      : _target_order(target_order), _map(std::move(map)), _kind(kind) {
    if (_target_order == 0 || _map.empty()) {
      throw Error(ErrorCode::dimension_mismatch, "morphisms act between nonempty semigroups");
    }
    for (std::size_t a = 0; a < _map.size(); ++a) {
      if (_map[a] >= _target_order) {
        throw Error(ErrorCode::out_of_range_entry,
                    "image " + std::to_string(_map[a]) + " of " + std::to_string(a)
                        + " is not in [0," + std::to_string(_target_order) + ")",
                    {a});
      }
    }
    if (_kind == MorphismKind::embedding && !is_injective()) {
      throw Error(ErrorCode::ill_formed, "map claimed as an embedding is not injective");
    }
    if (_kind == MorphismKind::iso && !(is_injective() && is_surjective())) {
      throw Error(ErrorCode::ill_formed, "map claimed as an isomorphism is not bijective");
    }
  }

  Morphism Morphism::identity(std::size_t n) {
    std::vector<element_id> map(n);
    std::iota(map.begin(), map.end(), element_id(0));
    return Morphism(n, std::move(map), MorphismKind::iso);
  }

  bool Morphism::is_injective() const {
    std::vector<bool> hit(_target_order, false);
    for (auto v : _map) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  bool Morphism::is_surjective() const {
    std::vector<bool> hit(_target_order, false);
    std::size_t       count = 0;
    for (auto v : _map) {
      if (!hit[v]) {
        hit[v] = true;
        ++count;
      }
    }
    return count == _target_order;
  }

  Morphism compose(Morphism const& g, Morphism const& f) {
    if (f.target_order() != g.source_order()) {
      throw Error(ErrorCode::dimension_mismatch, "cannot compose: codomain and domain differ");
    }
    std::vector<element_id> map(f.source_order());
    for (element_id a = 0; a < f.source_order(); ++a) {
      map[a] = g(f(a));
    }
    MorphismKind kind = MorphismKind::hom;
    if (f.kind_claim() == MorphismKind::iso && g.kind_claim() == MorphismKind::iso) {
      kind = MorphismKind::iso;
    } else if (f.kind_claim() != MorphismKind::hom && g.kind_claim() != MorphismKind::hom) {
      kind = MorphismKind::embedding;
    }
    return Morphism(g.target_order(), std::move(map), kind);
  }

}  // namespace sgp
