#include "fixtures.hpp"
#include "oracles.hpp"

#include "sgp/analysis.hpp"
#include "sgp/morphisms.hpp"
#include "sgp/rees.hpp"
#include "sgp/theorems.hpp"

namespace sgp {
  using namespace test;

  TEST_CASE("rees over R2 is right zero of order 4", "[rees]") {
    auto const M = rees(R(2), SandwichVector(R(2), {0, 1}));
    REQUIRE(M.semigroup().order() == 4);
    REQUIRE(M.semigroup() == R(4));
    REQUIRE(find_isomorphism(M.semigroup(), R(4)));
  }

  TEST_CASE("rees over Z2 with one row is Z2", "[rees]") {
    auto const M = rees(Z(2), SandwichVector(Z(2), {0}));
    REQUIRE(find_isomorphism(M.semigroup(), Z(2)));
  }

  TEST_CASE("rees over N3 multiplies by the sandwich law", "[rees]") {
    auto const M = rees(N3(), SandwichVector(N3(), {0, 1}));
    REQUIRE(M.semigroup().order() == 6);
    // (0,l0)(0,l0) = (0*0*0, l0) = (2, l0)
    REQUIRE(M.decode(M.semigroup().product(M.encode(0, 0), M.encode(0, 0)))
            == ReesPair{2, 0});
    REQUIRE(M.semigroup().table() == oracle::rees_table(oracle::table_of(N3()), {0, 1}));
    REQUIRE(pair_string(M, M.encode(1, 1)) == "(1,1)");
  }

  TEST_CASE("sandwich entries are validated", "[rees]") {
    REQUIRE(code_of([] { SandwichVector(N3(), {0, 3}); }) == ErrorCode::entry_out_of_range);
    REQUIRE(where_of([] { SandwichVector(N3(), {0, 3}); }) == std::vector<std::size_t>{1});
    REQUIRE(code_of([] { SandwichVector(N3(), {}); }) == ErrorCode::dimension_mismatch);
    REQUIRE(code_of([] { rees(Z(2), SandwichVector(N3(), {2})); }) == ErrorCode::entry_out_of_range);
  }

  TEST_CASE("encode and decode are inverse", "[rees]") {
    auto const M = rees(Z(3), SandwichVector(Z(3), {0, 1, 2}));
    for (element_id s = 0; s < 3; ++s) {
      for (std::size_t l = 0; l < 3; ++l) {
        REQUIRE(M.encode(s, l) == s * 3 + l);
        REQUIRE(M.decode(M.encode(s, l)) == ReesPair{s, l});
      }
    }
    REQUIRE(M.column_set(1) == std::vector<element_id>{1, 4, 7});
  }

  TEST_CASE("product law and associativity over the corpus", "[rees][property]") {
    for (auto const& S : corpus(3)) {
      auto const t = oracle::table_of(S);
      for (auto const& P : sandwich_sweep(S, {1, 2, 3}, 0)) {
        auto const                     M = rees(S, P);
        std::vector<std::size_t> const p(P.entries().begin(), P.entries().end());
        REQUIRE(M.semigroup().table() == oracle::rees_table(t, p));
        REQUIRE(oracle::associative(oracle::table_of(M.semigroup())));
        for (element_id x = 0; x < M.semigroup().order(); ++x) {
          for (element_id y = 0; y < M.semigroup().order(); ++y) {
            auto const [s, l]  = M.decode(x);
            auto const [u, m]  = M.decode(y);
            auto const product = M.decode(M.semigroup().product(x, y));
            REQUIRE(product.s == S.product(S.product(s, P[l]), u));
            REQUIRE(product.lambda == m);
          }
        }
        if (check_property(M.semigroup(), Property::left_simple)) {
          REQUIRE(P.lambda_size() == 1);
        }
      }
    }
  }

  TEST_CASE("rees_general with one row matches rees", "[rees]") {
    for (auto const& S : corpus(3)) {
      for (auto const& P : sandwich_sweep(S, {1, 2}, 0)) {
        std::vector<std::vector<element_id>> rows;
        for (auto e : P.entries()) {
          rows.push_back({e});
        }
        auto const G = rees_general(S, GeneralSandwichMatrix(S, rows));
        REQUIRE(G == rees(S, P).semigroup());
      }
    }
  }

  TEST_CASE("rees_general over Z2 with |I| = 2", "[rees]") {
    auto const S = Z(2);
    auto const G = rees_general(S, GeneralSandwichMatrix(S, {{0, 0}}));
    REQUIRE(G.order() == 4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (element_id s = 0; s < 2; ++s) {
        for (std::size_t j = 0; j < 2; ++j) {
          for (element_id t = 0; t < 2; ++t) {
            REQUIRE(G.product(general_rees_index(2, 1, i, s, 0), general_rees_index(2, 1, j, t, 0))
                    == general_rees_index(2, 1, i, (s + t) % 2, 0));
          }
        }
      }
    }
  }

  TEST_CASE("rees_general over L2 keeps the left index", "[rees]") {
    auto const S = L(2);
    auto const G = rees_general(S, GeneralSandwichMatrix(S, {{0, 1}, {1, 0}}));
    REQUIRE(G.order() == 8);
    for (element_id x = 0; x < 8; ++x) {
      for (element_id y = 0; y < 8; ++y) {
        REQUIRE(G.product(x, y) / 4 == x / 4);
      }
    }
    REQUIRE(code_of([&] { GeneralSandwichMatrix(S, {{0, 1}, {1}}); })
            == ErrorCode::dimension_mismatch);
  }

}  // namespace sgp
