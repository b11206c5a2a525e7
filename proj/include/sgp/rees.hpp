#pragma once

#include <cstddef>  // for size_t
#include <vector>   // for vector

#include "sgp/core.hpp"

namespace sgp {

  // The map Lambda -> S of a single-row Rees matrix semigroup, with
  // Lambda = {0, ..., lambda_size() - 1}.
  class SandwichVector {
   public:
    // Throws Error(entry_out_of_range) if an entry is not an element of S
    // and Error(dimension_mismatch) if entries is empty.
    SandwichVector(Semigroup const& S, std::vector<element_id> entries);

    std::size_t lambda_size() const noexcept {
      return _entries.size();
    }

    element_id operator[](std::size_t lambda) const noexcept {
      return _entries[lambda];
    }

    std::vector<element_id> const& entries() const noexcept {
      return _entries;
    }

    friend bool operator==(SandwichVector const&, SandwichVector const&) = default;

   private:
    std::vector<element_id> _entries;
  };

  struct ReesPair {
    element_id  s;
    std::size_t lambda;

    friend bool operator==(ReesPair const&, ReesPair const&) = default;
  };

  // M(S; Lambda; P) with (s, l)(t, m) = (s P(l) t, m). Element (s, l) has
  // index s * |Lambda| + l in semigroup().
  class ReesSemigroup {
   public:
    ReesSemigroup(Semigroup base, SandwichVector sandwich);

    Semigroup const& base() const noexcept {
      return _base;
    }

    SandwichVector const& sandwich() const noexcept {
      return _sandwich;
    }

    Semigroup const& semigroup() const noexcept {
      return _product;
    }

    std::size_t lambda_size() const noexcept {
      return _sandwich.lambda_size();
    }

    element_id encode(element_id s, std::size_t lambda) const noexcept {
      return static_cast<element_id>(s * _sandwich.lambda_size() + lambda);
    }

    ReesPair decode(element_id e) const noexcept {
      return {static_cast<element_id>(e / _sandwich.lambda_size()), e % _sandwich.lambda_size()};
    }

    // L_lambda = {(s, lambda) : s in S}, sorted.
    std::vector<element_id> column_set(std::size_t lambda) const;

   private:
    Semigroup      _base;
    SandwichVector _sandwich;
    Semigroup      _product;
  };

  // Builds the product table and re-validates it as a semigroup.
  ReesSemigroup rees(Semigroup const& S, SandwichVector const& P);

  // The Lambda x I matrix of the general construction, entry (lambda, i).
  class GeneralSandwichMatrix {
   public:
    // entries[lambda][i]; throws Error(entry_out_of_range) or
    // Error(dimension_mismatch) for a ragged or empty matrix.
    GeneralSandwichMatrix(Semigroup const& S, std::vector<std::vector<element_id>> entries);

    std::size_t i_size() const noexcept {
      return _i_size;
    }

    std::size_t lambda_size() const noexcept {
      return _entries.size() / _i_size;
    }

    element_id at(std::size_t lambda, std::size_t i) const noexcept {
      return _entries[lambda * _i_size + i];
    }

   private:
    std::size_t             _i_size;
    std::vector<element_id> _entries;
  };

  // Index of (i, s, lambda) in rees_general(S, P).
  inline element_id general_rees_index(std::size_t      base_order,
                                       std::size_t      lambda_size,
                                       std::size_t      i,
                                       element_id       s,
                                       std::size_t      lambda) noexcept {
    return static_cast<element_id>((i * base_order + s) * lambda_size + lambda);
  }

  // M(S; I, Lambda; P) with (i, s, l)(j, t, m) = (i, s p(l, j) t, m).
  Semigroup rees_general(Semigroup const& S, GeneralSandwichMatrix const& P);

}  // namespace sgp
