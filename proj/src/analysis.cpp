#include "sgp/analysis.hpp"

#include <algorithm>  // for sort, unique, includes
#include <array>      // for array
#include <utility>    // for pair

namespace sgp {

  namespace {
    constexpr std::array<std::pair<Property, std::string_view>, 9> property_names{
        {{Property::right_simple, "right_simple"},
         {Property::left_simple, "left_simple"},
         {Property::simple, "simple"},
         {Property::left_cancellative, "left_cancellative"},
         {Property::right_cancellative, "right_cancellative"},
         {Property::right_group, "right_group"},
         {Property::left_equalizer_simple, "left_equalizer_simple"},
         {Property::idempotent_free, "idempotent_free"},
         {Property::completely_simple, "completely_simple"}}};

    bool covers(std::vector<bool> const& hit) {
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

    bool right_simple(Semigroup const& S) {
      std::size_t const n = S.order();
      for (element_id s = 0; s < n; ++s) {
        std::vector<bool> hit(n, false);
        for (element_id x = 0; x < n; ++x) {
          hit[S.product(s, x)] = true;
        }
        if (!covers(hit)) {
          return false;
        }
      }
      return true;
    }

    bool left_simple(Semigroup const& S) {
      std::size_t const n = S.order();
      for (element_id s = 0; s < n; ++s) {
        std::vector<bool> hit(n, false);
        for (element_id x = 0; x < n; ++x) {
          hit[S.product(x, s)] = true;
        }
        if (!covers(hit)) {
          return false;
        }
      }
      return true;
    }

    bool simple(Semigroup const& S) {
      std::size_t const n = S.order();
      for (element_id a = 0; a < n; ++a) {
        std::vector<bool> hit(n, false);
        for (element_id x = 0; x < n; ++x) {
          element_id const xa = S.product(x, a);
          for (element_id y = 0; y < n; ++y) {
            hit[S.product(xa, y)] = true;
          }
        }
        if (!covers(hit)) {
          return false;
        }
      }
      return true;
    }

    bool left_cancellative(Semigroup const& S) {
      std::size_t const n = S.order();
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = 0; b < n; ++b) {
          for (element_id c = b + 1; c < n; ++c) {
            if (S.product(a, b) == S.product(a, c)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool right_cancellative(Semigroup const& S) {
      std::size_t const n = S.order();
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = 0; b < n; ++b) {
          for (element_id c = b + 1; c < n; ++c) {
            if (S.product(b, a) == S.product(c, a)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    bool left_equalizer_simple(Semigroup const& S) {
      std::size_t const n = S.order();
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = a + 1; b < n; ++b) {
          bool some = false;
          bool all  = true;
          for (element_id x = 0; x < n; ++x) {
            if (S.product(x, a) == S.product(x, b)) {
              some = true;
            } else {
              all = false;
            }
          }
          if (some && !all) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  std::string_view property_name(Property p) noexcept {
    for (auto const& [q, name] : property_names) {
      if (q == p) {
        return name;
      }
    }
    return "unknown";
  }

  std::optional<Property> property_from_name(std::string_view name) noexcept {
    for (auto const& [q, n] : property_names) {
      if (n == name) {
        return q;
      }
    }
    return std::nullopt;
  }

  std::vector<Property> all_properties() {
    std::vector<Property> out;
    for (auto const& entry : property_names) {
      out.push_back(entry.first);
    }
    return out;
  }

  std::vector<element_id> primitive_idempotents(Semigroup const& S) {
    auto const              E = idempotents(S);
    std::vector<element_id> out;
    for (auto e : E) {
      bool primitive = true;
      for (auto f : E) {
        if (f != e && S.product(e, f) == f && S.product(f, e) == f) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        out.push_back(e);
      }
    }
    return out;
  }

  bool check_property(Semigroup const& S, Property p) {
    switch (p) {
      case Property::right_simple:
        return right_simple(S);
      case Property::left_simple:
        return left_simple(S);
      case Property::simple:
        return simple(S);
      case Property::left_cancellative:
        return left_cancellative(S);
      case Property::right_cancellative:
        return right_cancellative(S);
      case Property::right_group:
        return right_simple(S) && left_cancellative(S);
      case Property::left_equalizer_simple:
        return left_equalizer_simple(S);
      case Property::idempotent_free:
        return idempotents(S).empty();
      case Property::completely_simple:
        return simple(S) && !primitive_idempotents(S).empty();
    }
    return false;
  }

  bool is_group(Semigroup const& S) {
    return right_simple(S) && left_simple(S);
  }

  std::vector<element_id> principal_left_ideal(Semigroup const& S, element_id s) {
    std::vector<element_id> out{s};
    for (element_id x = 0; x < S.order(); ++x) {
      out.push_back(S.product(x, s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool is_left_ideal(Semigroup const& S, std::vector<element_id> const& subset) {
    std::vector<bool> member(S.order(), false);
    for (auto a : subset) {
      member[a] = true;
    }
    for (auto a : subset) {
      for (element_id x = 0; x < S.order(); ++x) {
        if (!member[S.product(x, a)]) {
          return false;
        }
      }
    }
    return !subset.empty();
  }

  std::vector<std::vector<element_id>> minimal_left_ideals(Semigroup const& S) {
    std::vector<std::vector<element_id>> principal;
    for (element_id s = 0; s < S.order(); ++s) {
      principal.push_back(principal_left_ideal(S, s));
    }
    std::sort(principal.begin(), principal.end());
    principal.erase(std::unique(principal.begin(), principal.end()), principal.end());

    std::vector<std::vector<element_id>> out;
    for (auto const& L : principal) {
      bool minimal = true;
      for (auto const& K : principal) {
        if (K.size() < L.size() && std::includes(L.begin(), L.end(), K.begin(), K.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(L);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace sgp
