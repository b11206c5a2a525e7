#include "sgp/core.hpp"

#include <algorithm>  // for min
#include <array>      // for array
#include <string>     // for string, to_string
#include <utility>    // for move

#include "sgp/error.hpp"

namespace sgp {

  namespace {
    constexpr std::array<std::pair<FamilyKind, std::string_view>, 6> family_names{
        {{FamilyKind::left_zero, "left_zero"},
         {FamilyKind::right_zero, "right_zero"},
         {FamilyKind::null, "null"},
         {FamilyKind::cyclic_group, "cyclic_group"},
         {FamilyKind::nilpotent_cyclic, "nilpotent_cyclic"},
         {FamilyKind::semilattice_chain, "semilattice_chain"}}};

    std::string triple_string(std::size_t a, std::size_t b, std::size_t c) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)
             + ")";
    }
  }  // namespace

  Semigroup Semigroup::from_flat(std::size_t n, std::vector<element_id> table) {
    if (n == 0) {
      throw Error(ErrorCode::unsupported_size, "a semigroup must have at least one element");
    }
    if (table.size() != n * n) {
      throw Error(ErrorCode::dimension_mismatch,
                  "expected " + std::to_string(n * n) + " table entries, found "
                      + std::to_string(table.size()));
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a * n + b] >= n) {
          throw Error(ErrorCode::out_of_range_entry,
                      "entry " + std::to_string(table[a * n + b]) + " at ("
                          + std::to_string(a) + "," + std::to_string(b)
                          + ") is not in [0," + std::to_string(n) + ")",
                      {a, b});
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t const ab = table[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t const bc = table[b * n + c];
          if (table[ab * n + c] != table[a * n + bc]) {
            throw Error(ErrorCode::associativity_violation,
                        "(ab)c != a(bc) for (a,b,c) = " + triple_string(a, b, c),
                        {a, b, c});
          }
        }
      }
    }
    return Semigroup(n, std::move(table));
  }

  Semigroup Semigroup::from_table(std::vector<std::vector<std::size_t>> const& table) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::unsupported_size, "a semigroup must have at least one element");
    }
    std::vector<element_id> flat;
    flat.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw Error(ErrorCode::dimension_mismatch,
                    "row " + std::to_string(a) + " has " + std::to_string(table[a].size())
                        + " entries, expected " + std::to_string(n),
                    {a});
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          throw Error(ErrorCode::out_of_range_entry,
                      "entry " + std::to_string(table[a][b]) + " at (" + std::to_string(a)
                          + "," + std::to_string(b) + ") is not in [0," + std::to_string(n)
                          + ")",
                      {a, b});
        }
        flat.push_back(static_cast<element_id>(table[a][b]));
      }
    }
    return from_flat(n, std::move(flat));
  }

  std::vector<std::vector<std::size_t>> Semigroup::table() const {
    std::vector<std::vector<std::size_t>> out(_order, std::vector<std::size_t>(_order));
    for (std::size_t a = 0; a < _order; ++a) {
      for (std::size_t b = 0; b < _order; ++b) {
        out[a][b] = _table[a * _order + b];
      }
    }
    return out;
  }

  Semigroup new_semigroup(std::vector<std::vector<std::size_t>> const& table) {
    return Semigroup::from_table(table);
  }

  bool is_idempotent(Semigroup const& S, element_id e) noexcept {
    return S.product(e, e) == e;
  }

  std::vector<element_id> idempotents(Semigroup const& S) {
    std::vector<element_id> out;
    for (element_id e = 0; e < S.order(); ++e) {
      if (is_idempotent(S, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  std::string_view family_name(FamilyKind kind) noexcept {
    for (auto const& [k, name] : family_names) {
      if (k == kind) {
        return name;
      }
    }
    return "unknown";
  }

  std::optional<FamilyKind> family_from_name(std::string_view name) noexcept {
    for (auto const& [k, n] : family_names) {
      if (n == name) {
        return k;
      }
    }
    return std::nullopt;
  }

  std::vector<FamilyKind> all_families() {
    std::vector<FamilyKind> out;
    for (auto const& entry : family_names) {
      out.push_back(entry.first);
    }
    return out;
  }

  Semigroup family(FamilyKind kind, std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::unsupported_size,
                  std::string(family_name(kind)) + " is undefined for order 0");
    }
    std::vector<element_id> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t v = 0;
        switch (kind) {
          case FamilyKind::left_zero:
            v = x;
            break;
          case FamilyKind::right_zero:
            v = y;
            break;
          case FamilyKind::null:
            v = 0;
            break;
          case FamilyKind::cyclic_group:
            v = (x + y) % n;
            break;
          case FamilyKind::nilpotent_cyclic:
            // a^(x+1) a^(y+1) = a^(x+y+2), capped at the zero a^n
            v = std::min(x + y + 1, n - 1);
            break;
          case FamilyKind::semilattice_chain:
            v = std::min(x, y);
            break;
        }
        table[x * n + y] = static_cast<element_id>(v);
      }
    }
    return Semigroup::from_flat(n, std::move(table));
  }

  Semigroup relabel(Semigroup const& S, std::span<element_id const> perm) {
    std::size_t const n = S.order();
    if (perm.size() != n) {
      throw Error(ErrorCode::dimension_mismatch, "relabeling has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw Error(ErrorCode::dimension_mismatch, "relabeling is not a permutation");
      }
      seen[p] = true;
    }
    std::vector<element_id> table(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        table[perm[a] * n + perm[b]] = perm[S.product(a, b)];
      }
    }
    return Semigroup::from_flat(n, std::move(table));
  }

  Semigroup transpose(Semigroup const& S) {
    std::size_t const       n = S.order();
    std::vector<element_id> table(n * n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id b = 0; b < n; ++b) {
        table[a * n + b] = S.product(b, a);
      }
    }
    return Semigroup::from_flat(n, std::move(table));
  }

}  // namespace sgp
