#include "fixtures.hpp"
#include "oracles.hpp"

#include "sgp/analysis.hpp"
#include "sgp/morphisms.hpp"
#include "sgp/relations.hpp"
#include "sgp/theorems.hpp"

namespace sgp {
  using namespace test;

  namespace {
    bool check_passed(Report const& r, std::string const& name) {
      for (auto const& c : r.checks()) {
        if (c.name == name) {
          return c.status == Status::pass;
        }
      }
      return false;
    }

    bool check_skipped(Report const& r, std::string const& name) {
      for (auto const& c : r.checks()) {
        if (c.name == name) {
          return c.status == Status::skipped_precondition;
        }
      }
      return false;
    }
  }  // namespace

  TEST_CASE("Report status and witness", "[theorems]") {
    Report r("t", "in");
    REQUIRE(r.status() == Status::skipped_precondition);
    r.skip("a", "why");
    REQUIRE(r.status() == Status::skipped_precondition);
    REQUIRE(r.check("b", true, "unused"));
    REQUIRE(r.status() == Status::pass);
    REQUIRE_FALSE(r.witness());
    REQUIRE_FALSE(r.check("c", false, "x=1"));
    REQUIRE(r.check("d", false, "x=2") == false);
    REQUIRE(r.status() == Status::fail);
    REQUIRE(r.witness() == std::optional<std::string>("x=1"));
  }

  TEST_CASE("verify_sequence examples", "[theorems]") {
    REQUIRE(verify_sequence(N3(), 2).passed());
    REQUIRE(verify_sequence(Z(2), 3).passed());
    for (std::size_t k = 0; k <= 3; ++k) {
      REQUIRE(theta_power(Z(2), k) == identity_congruence(Z(2)));
    }
    REQUIRE(code_of([] { verify_sequence(N3(), 0); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("verify_sequence over the order 3 corpus", "[theorems][property]") {
    for (auto const& S : corpus(3)) {
      auto const r = verify_sequence(S, 2);
      INFO(r.inputs_summary() << " " << r.witness().value_or(""));
      REQUIRE(r.passed());
      REQUIRE(verify_sequence_corollaries(S, 3).status() != Status::fail);
    }
  }

  TEST_CASE("verify_hereditary examples", "[theorems]") {
    auto r = verify_hereditary(Property::right_simple, R(2), SandwichVector(R(2), {0, 1}));
    REQUIRE(r.passed());
    REQUIRE(check_property(rees(R(2), SandwichVector(R(2), {0, 1})).semigroup(),
                           Property::right_simple));

    r = verify_hereditary(Property::simple, N(2), SandwichVector(N(2), {0, 0}));
    REQUIRE(r.passed());
    REQUIRE_FALSE(check_property(rees(N(2), SandwichVector(N(2), {0, 0})).semigroup(),
                                 Property::simple));

    r = verify_hereditary(Property::right_group, Z(2), SandwichVector(Z(2), {0, 1}));
    REQUIRE(r.passed());
    REQUIRE(check_property(rees(Z(2), SandwichVector(Z(2), {0, 1})).semigroup(),
                           Property::right_group));

    REQUIRE(code_of([] {
              verify_hereditary(Property::left_simple, Z(2), SandwichVector(Z(2), {0}));
            })
            == ErrorCode::unsupported_property);
  }

  TEST_CASE("verify_hereditary over the corpus", "[theorems][property]") {
    for (auto const& S : corpus(3)) {
      for (auto const& P : sandwich_sweep(S, {1, 2}, 0)) {
        for (auto p : hereditary_properties()) {
          REQUIRE(verify_hereditary(p, S, P).passed());
        }
      }
    }
  }

  TEST_CASE("left cancellation over a right simple base", "[theorems]") {
    // R2 is right simple but not left cancellative; the Rees product is R4
    auto const r = verify_hereditary(Property::left_cancellative, R(2), SandwichVector(R(2), {0, 1}));
    REQUIRE(r.passed());
    REQUIRE(check_passed(r, "over right simple S: M left_cancellative iff S left_cancellative"));
    auto const s = verify_hereditary(Property::left_cancellative, N3(), SandwichVector(N3(), {0}));
    REQUIRE(check_skipped(s, "over right simple S: M left_cancellative iff S left_cancellative"));
  }

  TEST_CASE("verify_equalizer examples", "[theorems]") {
    auto r = verify_equalizer(L(2));
    REQUIRE(r.passed());
    REQUIRE(check_passed(r, "theta^(1) = theta"));

    r = verify_equalizer(M2());
    REQUIRE(r.passed());
    REQUIRE(check_skipped(r, "theta^(1) = theta"));
    REQUIRE_FALSE(check_property(quotient(M2(), theta(M2())).semigroup, Property::left_cancellative));

    r = verify_equalizer(N3());
    REQUIRE(r.passed());
    REQUIRE_FALSE(check_property(N3(), Property::left_equalizer_simple));
    REQUIRE_FALSE(check_property(quotient(N3(), theta(N3())).semigroup, Property::left_cancellative));
  }

  TEST_CASE("verify_equalizer over the order 4 corpus", "[theorems][property]") {
    for (auto const& S : corpus(4)) {
      REQUIRE(verify_equalizer(S).passed());
      if (check_property(S, Property::left_equalizer_simple)) {
        auto const t = oracle::table_of(S);
        auto const th = oracle::step(t, oracle::identity_labels(S.order()));
        REQUIRE(oracle::step(t, th) == th);
      }
    }
  }

  TEST_CASE("verify_embedding examples", "[theorems]") {
    auto r = verify_embedding(Z(2), Z(4), Morphism(4, {0, 2}), SandwichVector(Z(2), {0, 1}));
    REQUIRE(r.passed());
    REQUIRE(check_passed(r, "M(T;S;tau) completely simple"));

    r = verify_embedding(L(2), L(3), Morphism(3, {0, 1}), SandwichVector(L(2), {0, 1}));
    REQUIRE(r.passed());
    REQUIRE(check_passed(r, "M(T;Lambda;P') simple"));
    REQUIRE(check_passed(r, "L_0 minimal left ideal"));
    REQUIRE(check_passed(r, "L_1 minimal left ideal"));

    r = verify_embedding(N3(), N3(), Morphism::identity(3), SandwichVector(N3(), {1, 2}));
    REQUIRE(r.passed());
    REQUIRE(code_of([] {
              verify_embedding(Z(2), Z(4), Morphism(4, {0, 1}), SandwichVector(Z(2), {0}));
            })
            == ErrorCode::not_an_embedding);
  }

  TEST_CASE("Rees products over left zero targets have the L_lambda as minimal left ideals",
            "[theorems][property]") {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& P : sandwich_sweep(L(n), {1, 2}, 0)) {
        auto const M        = rees(L(n), P);
        auto const expected = oracle::minimal_left_ideals(oracle::table_of(M.semigroup()));
        REQUIRE(expected.size() == P.lambda_size());
        for (std::size_t l = 0; l < P.lambda_size(); ++l) {
          auto const L = M.column_set(l);
          REQUIRE(expected.count(std::vector<std::size_t>(L.begin(), L.end())) == 1);
        }
      }
    }
  }

  TEST_CASE("embedding catalog", "[theorems]") {
    auto const cases = embedding_catalog();
    REQUIRE(cases.size() >= 4);
    for (auto const& c : cases) {
      for (auto const& P : sandwich_sweep(c.source, {1, 2}, 0)) {
        auto const r = verify_embedding(c.source, c.target, c.tau, P);
        INFO(c.name << " " << r.witness().value_or(""));
        REQUIRE(r.passed());
      }
    }
  }

  TEST_CASE("sandwich sweep is exhaustive for small bases and seeded otherwise", "[theorems]") {
    REQUIRE(sandwich_sweep(N3(), {1, 2}, 0).size() == 3 + 9);
    REQUIRE(sandwich_sweep(Z(4), {1}, 0).size() == 4);
    auto const a = sandwich_sweep(Z(5), {1, 2, 3}, 42);
    auto const b = sandwich_sweep(Z(5), {1, 2, 3}, 42);
    REQUIRE(a.size() == 5 + 25 + sampled_sandwich_count);
    for (std::size_t k = 0; k < a.size(); ++k) {
      REQUIRE(a[k].entries() == b[k].entries());
    }
  }

}  // namespace sgp
