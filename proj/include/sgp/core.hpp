#pragma once

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <optional>     // for optional
#include <span>         // for span
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

namespace sgp {

  // Index of an element in [0, n) for a semigroup of order n.
  using element_id = std::uint32_t;

  // A finite semigroup given by its Cayley table. Instances are only obtained
  // through validating factories, so every table is associative and every
  // entry lies in [0, order()).
  class Semigroup {
   public:
    // Validates squareness, entry ranges and all n^3 associativity triples.
    // Throws Error with code out_of_range_entry (where = {a, b}) or
    // associativity_violation (where = {a, b, c}, the lexicographically first
    // failing triple).
    static Semigroup from_table(std::vector<std::vector<std::size_t>> const& table);

    // Same as from_table, but on a row-major flattened table of size n*n.
    static Semigroup from_flat(std::size_t n, std::vector<element_id> table);

    std::size_t order() const noexcept {
      return _order;
    }

    element_id product(element_id a, element_id b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _order + b];
    }

    std::span<element_id const> row(element_id a) const noexcept {
      return {_table.data() + static_cast<std::size_t>(a) * _order, _order};
    }

    std::span<element_id const> flat() const noexcept {
      return _table;
    }

    std::vector<std::vector<std::size_t>> table() const;

    friend bool operator==(Semigroup const&, Semigroup const&) = default;

   private:
    Semigroup(std::size_t n, std::vector<element_id> table)
        : _order(n), _table(std::move(table)) {}

    std::size_t             _order;
    std::vector<element_id> _table;
  };

  // Free-function spelling of Semigroup::from_table.
  Semigroup new_semigroup(std::vector<std::vector<std::size_t>> const& table);

  inline element_id product(Semigroup const& S, element_id a, element_id b) noexcept {
    return S.product(a, b);
  }

  // Sorted list of e with e * e = e.
  std::vector<element_id> idempotents(Semigroup const& S);

  bool is_idempotent(Semigroup const& S, element_id e) noexcept;

  enum class FamilyKind {
    left_zero,
    right_zero,
    null,
    cyclic_group,
    nilpotent_cyclic,
    semilattice_chain
  };

  std::string_view           family_name(FamilyKind kind) noexcept;
  std::optional<FamilyKind>  family_from_name(std::string_view name) noexcept;
  std::vector<FamilyKind>    all_families();

  // Named semigroups of order n:
  //   left_zero         x * y = x
  //   right_zero        x * y = y
  //   null              x * y = 0
  //   cyclic_group      x * y = (x + y) mod n
  //   nilpotent_cyclic  {a, a^2, ..., a^n}, element i is a^(i+1), a^n is zero
  //   semilattice_chain x * y = min(x, y)
  // Throws Error(unsupported_size) for n == 0.
  Semigroup family(FamilyKind kind, std::size_t n);

  // The semigroup with table T[perm[a]][perm[b]] = perm[S[a][b]], i.e. the
  // image of S under the bijection perm. Throws Error(dimension_mismatch) if
  // perm is not a permutation of [0, order).
  Semigroup relabel(Semigroup const& S, std::span<element_id const> perm);

  // The opposite semigroup: a *' b = b * a.
  Semigroup transpose(Semigroup const& S);

}  // namespace sgp
