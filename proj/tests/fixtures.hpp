#pragma once

#include <functional>  // for function
#include <string>      // for string
#include <vector>      // for vector

#include "catch_amalgamated.hpp"

#include "sgp/catalog.hpp"
#include "sgp/core.hpp"
#include "sgp/error.hpp"

namespace sgp::test {

  inline Semigroup L(std::size_t n) {
    return family(FamilyKind::left_zero, n);
  }
  inline Semigroup R(std::size_t n) {
    return family(FamilyKind::right_zero, n);
  }
  inline Semigroup Z(std::size_t n) {
    return family(FamilyKind::cyclic_group, n);
  }
  inline Semigroup N(std::size_t n) {
    return family(FamilyKind::null, n);
  }
  inline Semigroup C(std::size_t n) {
    return family(FamilyKind::semilattice_chain, n);
  }
  inline Semigroup N3() {
    return new_semigroup({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}});
  }
  inline Semigroup M2() {
    return C(2);
  }

  // Every isomorphism class of order 1 to max_order.
  inline std::vector<Semigroup> corpus(std::size_t max_order) {
    std::vector<Semigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      for (auto& S : enumerate_semigroups(n, EnumerationMode::up_to_iso)) {
        out.push_back(std::move(S));
      }
    }
    return out;
  }

  inline ErrorCode code_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no sgp::Error thrown");
    return ErrorCode::invalid_argument;
  }

  inline std::vector<std::size_t> where_of(std::function<void()> const& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.where();
    }
    FAIL("no sgp::Error thrown");
    return {};
  }

}  // namespace sgp::test
