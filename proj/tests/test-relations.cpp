#include "fixtures.hpp"
#include "oracles.hpp"

#include "sgp/analysis.hpp"
#include "sgp/morphisms.hpp"
#include "sgp/relations.hpp"

namespace sgp {
  using namespace test;

  namespace {
    std::vector<std::size_t> counts(Tower const& t) {
      std::vector<std::size_t> out;
      for (auto const& level : t.levels) {
        out.push_back(level.class_count());
      }
      return out;
    }
  }  // namespace

  TEST_CASE("Congruence normalizes labels by first occurrence", "[relations]") {
    Congruence a({1, 0, 0});
    REQUIRE(a.labels() == std::vector<std::size_t>{0, 1, 1});
    REQUIRE(a.class_count() == 2);
    REQUIRE(a.related(1, 2));
    REQUIRE_FALSE(a.related(0, 1));
    REQUIRE(code_of([] { Congruence({}); }) == ErrorCode::malformed_partition);
    REQUIRE(code_of([] { Congruence({0, 2, 2}); }) == ErrorCode::malformed_partition);
    REQUIRE(code_of([] { Congruence({0, 3, 1}); }) == ErrorCode::malformed_partition);
  }

  TEST_CASE("identity and universal congruences", "[relations]") {
    REQUIRE(identity_congruence(L(2)).classes()
            == std::vector<std::vector<element_id>>{{0}, {1}});
    REQUIRE(universal_congruence(N3()).classes()
            == std::vector<std::vector<element_id>>{{0, 1, 2}});
    REQUIRE(identity_congruence(L(1)) == universal_congruence(L(1)));
  }

  TEST_CASE("is_congruence examples", "[relations]") {
    std::vector<std::size_t> all = {0, 0}, a_bc = {0, 1, 1}, ab_c = {0, 0, 1};
    REQUIRE(is_congruence(M2(), all));
    REQUIRE(is_congruence(N3(), a_bc));
    REQUIRE_FALSE(is_congruence(N3(), ab_c));
    std::vector<std::size_t> gap = {0, 2, 2}, short_ = {0, 1};
    REQUIRE(code_of([&] { is_congruence(N3(), gap); }) == ErrorCode::malformed_partition);
    REQUIRE(code_of([&] { is_congruence(N3(), short_); }) == ErrorCode::malformed_partition);
    REQUIRE(code_of([] { make_congruence(N3(), {0, 0, 1}); }) == ErrorCode::not_a_congruence);
  }

  TEST_CASE("theta examples", "[relations]") {
    REQUIRE(theta(L(2)) == universal_congruence(L(2)));
    REQUIRE(theta(R(2)) == identity_congruence(R(2)));
    REQUIRE(theta(N3()).labels() == std::vector<std::size_t>{0, 1, 1});
  }

  TEST_CASE("step_congruence examples", "[relations]") {
    REQUIRE(step_congruence(N3(), theta(N3())) == universal_congruence(N3()));
    REQUIRE(step_congruence(Z(3), universal_congruence(Z(3))) == universal_congruence(Z(3)));
    REQUIRE(step_congruence(M2(), identity_congruence(M2())) == identity_congruence(M2()));
    REQUIRE(theta(M2()) == identity_congruence(M2()));
    REQUIRE(code_of([] { step_congruence(N3(), Congruence({0, 0, 1})); })
            == ErrorCode::not_a_congruence);
  }

  TEST_CASE("tower examples", "[relations]") {
    auto t = tower(N3(), theta(N3()), 2);
    REQUIRE(counts(t) == std::vector<std::size_t>{2, 1, 1});
    REQUIRE(t.stabilization_index == 1);

    t = tower(M2(), identity_congruence(M2()), 3);
    REQUIRE(counts(t) == std::vector<std::size_t>{2, 2, 2, 2});
    REQUIRE(t.stabilization_index == 0);

    t = tower(N3(), universal_congruence(N3()), 4);
    REQUIRE(counts(t) == std::vector<std::size_t>{1, 1, 1, 1, 1});
    REQUIRE(t.stabilization_index == 0);
    REQUIRE_THROWS_AS(tower(N3(), theta(N3()), max_tower_depth + 1), Error);
  }

  TEST_CASE("step_congruence agrees with the pairwise definition", "[relations][property]") {
    for (auto const& S : corpus(4)) {
      auto const t = oracle::table_of(S);
      for (std::size_t k = 0; k <= 3; ++k) {
        auto const alpha = theta_power(S, k);
        REQUIRE(step_congruence(S, alpha).labels() == oracle::step(t, alpha.labels()));
      }
      REQUIRE(theta(S).labels() == oracle::step(t, oracle::identity_labels(S.order())));
      REQUIRE(oracle::compatible(t, theta(S).labels()));
    }
  }

  TEST_CASE("tower laws over the order 4 corpus", "[relations][property]") {
    for (auto const& S : corpus(4)) {
      std::size_t const n     = S.order();
      auto const        iota  = tower(S, identity_congruence(S), n + 1);
      auto const        th    = tower(S, theta(S), n);
      REQUIRE(iota.stabilization_index < n);
      for (std::size_t i = 0; i + 1 < iota.levels.size(); ++i) {
        REQUIRE(iota.levels[i].refines(iota.levels[i + 1]));
        if (iota.levels[i] == iota.levels[i + 1]) {
          REQUIRE(iota.levels.back() == iota.levels[i]);
        }
      }
      for (std::size_t i = 0; i < th.levels.size(); ++i) {
        REQUIRE(th.levels[i] == iota.levels[i + 1]);
      }
      if (check_property(S, Property::left_cancellative)) {
        REQUIRE(theta(S) == identity_congruence(S));
      }
    }
  }

  TEST_CASE("quotient examples", "[relations]") {
    auto const q = quotient(N3(), theta(N3()));
    REQUIRE(q.semigroup.table() == oracle::Table{{1, 1}, {1, 1}});
    REQUIRE(q.projection.map() == std::vector<element_id>{0, 1, 1});
    REQUIRE(find_isomorphism(q.semigroup, N(2)));

    auto const same = quotient(N3(), identity_congruence(N3()));
    REQUIRE(is_isomorphism(same.projection, N3(), same.semigroup));
    REQUIRE(quotient(N3(), universal_congruence(N3())).semigroup.order() == 1);
  }

  TEST_CASE("quotient projections over the corpus", "[relations][property]") {
    for (auto const& S : corpus(3)) {
      for (std::size_t k = 0; k <= 2; ++k) {
        auto const alpha = theta_power(S, k);
        auto const q     = quotient(S, alpha);
        REQUIRE(is_homomorphism(q.projection, S, q.semigroup));
        REQUIRE(q.projection.is_surjective());
        REQUIRE(kernel(q.projection, S) == alpha);
      }
    }
  }

  TEST_CASE("sections examples", "[relations]") {
    auto const th  = theta(N3());
    auto const min = sections(N3(), th, SectionPolicy::min_index);
    REQUIRE(min.size() == 1);
    REQUIRE(min[0].representative == std::vector<element_id>{0, 1});
    auto const all = sections(N3(), th, SectionPolicy::all);
    REQUIRE(all.size() == 2);
    REQUIRE(all[1].representative == std::vector<element_id>{0, 2});
    auto const id = sections(Z(3), identity_congruence(Z(3)), SectionPolicy::all);
    REQUIRE(id.size() == 1);
    REQUIRE(id[0].representative == std::vector<element_id>{0, 1, 2});
  }

  TEST_CASE("section counts are products of class sizes", "[relations][property]") {
    for (auto const& S : corpus(4)) {
      auto const  th       = theta(S);
      std::size_t expected = 1;
      for (auto const& c : th.classes()) {
        expected *= c.size();
      }
      auto const all = sections(S, th, SectionPolicy::all);
      REQUIRE(all.size() == expected);
      for (std::size_t k = 0; k < all.size(); ++k) {
        REQUIRE(is_section(th, all[k].representative));
        if (k > 0) {
          REQUIRE(all[k - 1].representative < all[k].representative);
        }
      }
    }
  }

}  // namespace sgp
