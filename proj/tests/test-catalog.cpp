#include <algorithm>  // for shuffle
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <set>        // for set

#include "fixtures.hpp"
#include "oracles.hpp"

#include "sgp/catalog.hpp"
#include "sgp/morphisms.hpp"

namespace sgp {
  using namespace test;

  namespace {
    // Classes found by pairwise exhaustive search, optionally allowing the
    // transpose as well.
    std::size_t oracle_class_count(std::vector<oracle::Table> const& tables, bool anti) {
      std::vector<oracle::Table> reps;
      for (auto const& t : tables) {
        bool found = false;
        for (auto const& r : reps) {
          if (oracle::exhaustive_iso(t, r)
              || (anti && oracle::exhaustive_iso(oracle::transposed(t), r))) {
            found = true;
            break;
          }
        }
        if (!found) {
          reps.push_back(t);
        }
      }
      return reps.size();
    }
  }  // namespace

  TEST_CASE("labeled counts", "[catalog]") {
    REQUIRE(enumerate_semigroups(1, EnumerationMode::labeled).size() == 1);
    REQUIRE(enumerate_semigroups(2, EnumerationMode::labeled).size() == 8);
    REQUIRE(enumerate_semigroups(3, EnumerationMode::labeled).size() == 113);
    REQUIRE(enumerate_semigroups(4, EnumerationMode::labeled).size() == 3492);
  }

  TEST_CASE("class counts", "[catalog]") {
    std::vector<std::size_t> iso, anti;
    for (std::size_t n = 1; n <= 4; ++n) {
      iso.push_back(enumerate_semigroups(n, EnumerationMode::up_to_iso).size());
      anti.push_back(enumerate_semigroups(n, EnumerationMode::up_to_iso_anti).size());
    }
    REQUIRE(iso == std::vector<std::size_t>{1, 5, 24, 188});
    REQUIRE(anti == std::vector<std::size_t>{1, 4, 18, 126});
  }

  TEST_CASE("labeled enumeration matches the generate-and-filter oracle", "[catalog][property]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const expected = oracle::all_associative_tables(n);
      auto const found    = enumerate_semigroups(n, EnumerationMode::labeled);
      std::vector<oracle::Table> tables;
      for (auto const& S : found) {
        tables.push_back(oracle::table_of(S));
      }
      std::sort(tables.begin(), tables.end());
      REQUIRE(tables == expected);
      REQUIRE(oracle_class_count(expected, false)
              == enumerate_semigroups(n, EnumerationMode::up_to_iso).size());
      REQUIRE(oracle_class_count(expected, true)
              == enumerate_semigroups(n, EnumerationMode::up_to_iso_anti).size());
    }
  }

  TEST_CASE("size caps", "[catalog]") {
    REQUIRE(code_of([] { enumerate_semigroups(5, EnumerationMode::labeled); })
            == ErrorCode::size_cap_exceeded);
    REQUIRE(code_of([] { enumerate_semigroups(0, EnumerationMode::labeled); })
            == ErrorCode::size_cap_exceeded);
    REQUIRE(code_of([] { canonical_form(Z(7)); }) == ErrorCode::size_cap_exceeded);
    REQUIRE(mode_from_name("iso-anti") == EnumerationMode::up_to_iso_anti);
    REQUIRE_FALSE(mode_from_name("anti"));
  }

  TEST_CASE("canonical_form examples", "[catalog]") {
    std::vector<element_id> swap = {1, 0};
    REQUIRE(canonical_form(L(2)) == canonical_form(relabel(L(2), swap)));
    REQUIRE(canonical_form(L(2)) != canonical_form(R(2)));
    REQUIRE(canonical_form(L(2), true) == canonical_form(R(2), true));
    auto const labeled = enumerate_semigroups(2, EnumerationMode::labeled);
    std::set<CanonicalKey> keys;
    for (auto const& S : labeled) {
      keys.insert(canonical_form(S));
    }
    REQUIRE(keys.size() == 5);
  }

  TEST_CASE("canonical_form is invariant under relabeling", "[catalog][property]") {
    std::mt19937_64 rng(3);
    for (auto const& S : corpus(4)) {
      std::vector<element_id> perm(S.order());
      std::iota(perm.begin(), perm.end(), 0);
      for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_form(relabel(S, perm)) == canonical_form(S));
        REQUIRE(canonical_form(transpose(relabel(S, perm)), true) == canonical_form(S, true));
      }
      REQUIRE(canonical_form(canonical_representative(S)) == canonical_form(S));
      REQUIRE(find_isomorphism(canonical_representative(S), S));
    }
  }

  TEST_CASE("keys agree with find_isomorphism pairwise", "[catalog][property]") {
    std::vector<Semigroup> all;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto& S : enumerate_semigroups(n, EnumerationMode::labeled)) {
        all.push_back(std::move(S));
      }
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a; b < all.size(); ++b) {
        bool const same_key = canonical_form(all[a]) == canonical_form(all[b]);
        REQUIRE(same_key == find_isomorphism(all[a], all[b]).has_value());
      }
    }
  }

  TEST_CASE("classes are sorted by key", "[catalog]") {
    auto const classes = enumerate_semigroups(3, EnumerationMode::up_to_iso);
    for (std::size_t k = 1; k < classes.size(); ++k) {
      REQUIRE(canonical_form(classes[k - 1]) < canonical_form(classes[k]));
      REQUIRE(canonical_form(classes[k]) == canonical_form(canonical_representative(classes[k])));
    }
  }

}  // namespace sgp
