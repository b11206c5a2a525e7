#include "sgp/theorems.hpp"

#include <algorithm>  // for find
#include <random>     // for mt19937_64
#include <string>     // for string, to_string
#include <utility>    // for move

#include "sgp/error.hpp"
#include "sgp/morphisms.hpp"
#include "sgp/relations.hpp"

namespace sgp {

  namespace {
    std::string str(std::size_t v) {
      return std::to_string(v);
    }

    std::string list_string(std::vector<element_id> const& v) {
      std::string out = "[";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out += (k == 0 ? "" : " ") + str(v[k]);
      }
      return out + "]";
    }

    std::vector<element_id> inverse(Morphism const& f) {
      std::vector<element_id> inv(f.target_order(), 0);
      for (element_id a = 0; a < f.source_order(); ++a) {
        inv[f(a)] = a;
      }
      return inv;
    }

    std::vector<element_id> identity_entries(std::size_t n) {
      std::vector<element_id> out(n);
      for (element_id a = 0; a < n; ++a) {
        out[a] = a;
      }
      return out;
    }

    // One level of the locally-right-regular check. Q = S_k, the maps
    // identify Q/theta_Q with S_{k+1} and Q/theta^(1)_Q with S_{k+2}.
    void verify_level(Report&           report,
                      std::size_t       level,
                      Semigroup const&  Q,
                      Semigroup const&  next_next,
                      Morphism const&   to_lambda,
                      Morphism const&   to_base) {
      Congruence const theta_Q  = theta(Q);
      Congruence const theta1_Q = theta_power(Q, 1);
      auto const       inv      = inverse(to_lambda);
      std::size_t const lambda_size = to_lambda.target_order();

      for (auto const& sec : sections(Q, theta_Q, SectionPolicy::all)) {
        std::string const prefix
            = "level " + str(level) + " P=" + list_string(sec.representative) + ": ";
        PhiResult const ph = phi(Q, sec);
        report.merge(ph.report, prefix);

        // P_{k+1,k} : S_{k+1} -> S_k and P_{k+1,k+2} : S_{k+1} -> S_{k+2}
        std::vector<element_id> down(lambda_size), up(lambda_size);
        for (std::size_t l = 0; l < lambda_size; ++l) {
          down[l] = sec.representative[inv[l]];
          up[l]   = to_base(ph.M_prime.sandwich()[inv[l]]);
        }
        ReesSemigroup const A = rees(Q, SandwichVector(Q, down));
        ReesSemigroup const B = rees(next_next, SandwichVector(next_next, up));
        Congruence const    theta_A = theta(A.semigroup());
        Quotient const      A_rr    = quotient(A.semigroup(), theta_A);

        std::vector<element_id> map(theta_A.class_count(), 0);
        std::vector<bool>       seen(theta_A.class_count(), false);
        std::string             ill_defined;
        for (element_id e = 0; e < A.semigroup().order(); ++e) {
          auto const [a, l] = A.decode(e);
          element_id const v
              = B.encode(to_base(static_cast<element_id>(theta1_Q.class_of(a))), l);
          std::size_t const c = theta_A.class_of(e);
          if (!seen[c]) {
            seen[c] = true;
            map[c]  = v;
          } else if (map[c] != v && ill_defined.empty()) {
            ill_defined = "theta-class of " + pair_string(A, e) + " has two images";
          }
        }
        report.check(prefix + "isomorphism well-defined", ill_defined.empty(), ill_defined);
        if (ill_defined.empty()) {
          Morphism const xi(B.semigroup().order(), map, MorphismKind::hom);
          report.check(prefix + "M(S_k;S_k+1;P)/theta iso M(S_k+2;S_k+1;P')",
                       is_isomorphism(xi, A_rr.semigroup, B.semigroup()),
                       prefix + "map " + list_string(map) + " is not an isomorphism");
        }
        check_left_simple_remark(report, A, prefix + "M(S_k;S_k+1;P)");
        check_left_simple_remark(report, B, prefix + "M(S_k+2;S_k+1;P')");
      }
    }
  }  // namespace

  Report verify_sequence(Semigroup const& S, std::size_t depth) {
    if (depth == 0) {
      throw Error(ErrorCode::invalid_argument, "sequence depth must be at least 1");
    }
    Report report("sequence", "order=" + str(S.order()) + " depth=" + str(depth));
    for (std::size_t level = 1; level <= depth; ++level) {
      if (level == 1) {
        Quotient const S2 = quotient(S, theta(S));
        Quotient const S3 = quotient(S, theta_power(S, 1));
        verify_level(report,
                     level,
                     S,
                     S3.semigroup,
                     Morphism::identity(S2.semigroup.order()),
                     Morphism::identity(S3.semigroup.order()));
        continue;
      }
      std::size_t const m  = level - 2;
      KappaResult const k0 = kappa(S, m, 0);
      KappaResult const k1 = kappa(S, m, 1);
      report.merge(k0.report, "level " + str(level) + " kappa(" + str(m) + ",0): ");
      report.merge(k1.report, "level " + str(level) + " kappa(" + str(m) + ",1): ");
      if (!k0.induced || !k1.induced) {
        report.skip("level " + str(level), "levels could not be identified");
        continue;
      }
      verify_level(report, level, k0.source, k1.target, *k0.induced, *k1.induced);
    }
    return report;
  }

  Report verify_sequence_corollaries(Semigroup const& S, std::size_t depth) {
    Report                 report("sequence-corollaries",
                  "order=" + str(S.order()) + " depth=" + str(depth));
    std::vector<Semigroup> seq{S};
    Tower const            tw = tower(S, theta(S), depth);
    for (auto const& level : tw.levels) {
      seq.push_back(quotient(S, level).semigroup);
    }
    for (auto p : {Property::right_simple, Property::simple, Property::right_group}) {
      std::string const name(property_name(p));
      if (!check_property(seq[0], p) || !check_property(seq[1], p)) {
        report.skip(name, "S_1 and S_2 are not both " + name);
        continue;
      }
      for (std::size_t k = 2; k < seq.size(); ++k) {
        report.check(name + " S_" + str(k + 1),
                     check_property(seq[k], p),
                     "S_" + str(k + 1) + " is not " + name);
      }
    }
    return report;
  }

  std::vector<Property> hereditary_properties() {
    return {Property::right_simple,
            Property::simple,
            Property::left_cancellative,
            Property::right_group};
  }

  Report verify_hereditary(Property p, Semigroup const& S, SandwichVector const& P) {
    auto const props = hereditary_properties();
    if (std::find(props.begin(), props.end(), p) == props.end()) {
      throw Error(ErrorCode::unsupported_property,
                  std::string(property_name(p)) + " is not covered by the hereditary results");
    }
    std::string const name(property_name(p));
    Report            report("hereditary:" + name,
                  "order=" + str(S.order()) + " P=" + list_string(P.entries()));
    ReesSemigroup const M   = rees(S, P);
    bool const          lhs = check_property(M.semigroup(), p);
    check_left_simple_remark(report, M, "M");

    if (p != Property::left_cancellative) {
      bool const rhs = check_property(S, p);
      report.check("M " + name + " iff S " + name,
                   lhs == rhs,
                   "M " + name + "=" + (lhs ? "true" : "false") + " but S " + name + "="
                       + (rhs ? "true" : "false"));
      return report;
    }

    // aP(l)b = aP(l)c implies b = c
    std::string sandwich_witness;
    for (element_id a = 0; a < S.order() && sandwich_witness.empty(); ++a) {
      for (std::size_t l = 0; l < P.lambda_size() && sandwich_witness.empty(); ++l) {
        element_id const ap = S.product(a, P[l]);
        for (element_id b = 0; b < S.order() && sandwich_witness.empty(); ++b) {
          for (element_id c = b + 1; c < S.order(); ++c) {
            if (S.product(ap, b) == S.product(ap, c)) {
              sandwich_witness = "a=" + str(a) + " l=" + str(l) + " b=" + str(b)
                                 + " c=" + str(c);
              break;
            }
          }
        }
      }
    }
    bool const sandwich_condition = sandwich_witness.empty();
    report.check("M left_cancellative iff sandwich condition",
                 lhs == sandwich_condition,
                 std::string("M left_cancellative=") + (lhs ? "true" : "false")
                     + " but sandwich condition "
                     + (sandwich_condition ? "holds" : "fails at " + sandwich_witness));

    bool const s_lc = check_property(S, Property::left_cancellative);
    if (s_lc) {
      report.check("S left_cancellative implies M left_cancellative",
                   lhs,
                   "S is left cancellative but M is not");
    } else {
      report.skip("S left_cancellative implies M left_cancellative",
                  "S is not left cancellative");
    }
    if (check_property(S, Property::right_simple)) {
      report.check("over right simple S: M left_cancellative iff S left_cancellative",
                   lhs == s_lc,
                   std::string("M left_cancellative=") + (lhs ? "true" : "false")
                       + " but S left_cancellative=" + (s_lc ? "true" : "false"));
    } else {
      report.skip("over right simple S: M left_cancellative iff S left_cancellative",
                  "S is not right simple");
    }
    return report;
  }

  Report verify_equalizer(Semigroup const& S) {
    Report           report("equalizer", "order=" + str(S.order()));
    Congruence const th  = theta(S);
    Quotient const   rr  = quotient(S, th);
    bool const       les = check_property(S, Property::left_equalizer_simple);
    bool const       lc  = check_property(rr.semigroup, Property::left_cancellative);
    report.check("left equalizer simple iff S/theta left cancellative",
                 les == lc,
                 std::string("left_equalizer_simple=") + (les ? "true" : "false")
                     + " but S/theta left_cancellative=" + (lc ? "true" : "false"));
    if (!les) {
      report.skip("theta^(1) = theta", "S is not left equalizer simple");
      report.skip("M(S;S/theta;P) left equalizer simple", "S is not left equalizer simple");
      return report;
    }
    Congruence const th1 = theta_power(S, 1);
    report.check("theta^(1) = theta",
                 th1 == th,
                 "theta^(1) " + list_string({th1.labels().begin(), th1.labels().end()})
                     + " differs from theta "
                     + list_string({th.labels().begin(), th.labels().end()}));
    for (auto const& sec : sections(S, th, SectionPolicy::all)) {
      ReesSemigroup const M = rees(S, SandwichVector(S, sec.representative));
      std::string const   p = "P=" + list_string(sec.representative);
      report.check("M(S;S/theta;" + p + ") left equalizer simple",
                   check_property(M.semigroup(), Property::left_equalizer_simple),
                   "M(S;S/theta;" + p + ") is not left equalizer simple");
      check_left_simple_remark(report, M, "M(S;S/theta;" + p + ")");
    }
    return report;
  }

  Report verify_embedding(Semigroup const&      S,
                          Semigroup const&      T,
                          Morphism const&       tau,
                          SandwichVector const& P) {
    Report report("embedding",
                  "|S|=" + str(S.order()) + " |T|=" + str(T.order()) + " tau="
                      + list_string(tau.map()) + " P=" + list_string(P.entries()));
    PsiResult const main = psi(S, T, tau, P);
    report.merge(main.report, "");

    if (is_group(T)) {
      PsiResult const canonical
          = psi(S, T, tau, SandwichVector(S, identity_entries(S.order())));
      report.merge(canonical.report, "M(S;S;id) into M(T;S;tau): ");
      report.check("M(T;S;tau) completely simple",
                   check_property(canonical.M_prime.semigroup(), Property::completely_simple),
                   "M(T;S;tau) is not completely simple");
    } else {
      report.skip("M(T;S;tau) completely simple", "T is not a group");
    }

    if (check_property(T, Property::left_simple)) {
      Semigroup const& Mp = main.M_prime.semigroup();
      report.check("M(T;Lambda;P') simple",
                   check_property(Mp, Property::simple),
                   "M(T;Lambda;P') is not simple");
      auto const minimal = minimal_left_ideals(Mp);
      for (std::size_t l = 0; l < main.M_prime.lambda_size(); ++l) {
        auto const L = main.M_prime.column_set(l);
        report.check("L_" + str(l) + " minimal left ideal",
                     std::find(minimal.begin(), minimal.end(), L) != minimal.end(),
                     "L_" + str(l) + " = " + list_string(L) + " is not a minimal left ideal");
      }
    } else {
      report.skip("M(T;Lambda;P') simple with minimal left ideals L_lambda",
                  "T is not left simple");
    }
    return report;
  }

  std::vector<SandwichVector> sandwich_sweep(Semigroup const&                S,
                                             std::vector<std::size_t> const& lambda_sizes,
                                             std::uint64_t                   seed) {
    std::size_t const           n = S.order();
    std::vector<SandwichVector> out;
    std::mt19937_64             rng(seed);
    for (auto size : lambda_sizes) {
      if (size == 0) {
        throw Error(ErrorCode::invalid_argument, "Lambda must be nonempty");
      }
      std::size_t count     = 1;
      bool        exhaustive = true;
      for (std::size_t k = 0; k < size; ++k) {
        count *= n;
        if (count > sampled_sandwich_count) {
          exhaustive = false;
          break;
        }
      }
      if (exhaustive || n <= 3) {
        std::vector<element_id> entries(size, 0);
        while (true) {
          out.emplace_back(S, entries);
          std::size_t pos = size;
          while (pos > 0 && ++entries[pos - 1] == n) {
            entries[pos - 1] = 0;
            --pos;
          }
          if (pos == 0) {
            break;
          }
        }
      } else {
        for (std::size_t k = 0; k < sampled_sandwich_count; ++k) {
          std::vector<element_id> entries(size);
          for (auto& e : entries) {
            e = static_cast<element_id>(rng() % n);
          }
          out.emplace_back(S, std::move(entries));
        }
      }
    }
    return out;
  }

  std::vector<EmbeddingCase> embedding_catalog() {
    auto Z = [](std::size_t n) { return family(FamilyKind::cyclic_group, n); };
    auto L = [](std::size_t n) { return family(FamilyKind::left_zero, n); };
    auto R = [](std::size_t n) { return family(FamilyKind::right_zero, n); };
    auto emb = [](std::size_t target, std::vector<element_id> map) {
      return Morphism(target, std::move(map), MorphismKind::embedding);
    };
    std::vector<EmbeddingCase> out;
    out.push_back({"Z2->Z4", Z(2), Z(4), emb(4, {0, 2})});
    out.push_back({"Z3->Z6", Z(3), Z(6), emb(6, {0, 2, 4})});
    out.push_back({"L2->L3", L(2), L(3), emb(3, {0, 1})});
    out.push_back({"R2->R3", R(2), R(3), emb(3, {0, 1})});
    for (auto kind : all_families()) {
      for (std::size_t n : {1, 2, 3}) {
        Semigroup S = family(kind, n);
        out.push_back({"id " + std::string(family_name(kind)) + " " + str(n),
                       S,
                       S,
                       Morphism(n, identity_entries(n), MorphismKind::iso)});
      }
    }
    return out;
  }

}  // namespace sgp
