#include "sgp/morphisms.hpp"

#include <algorithm>  // for sort
#include <string>     // for string, to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "sgp/analysis.hpp"
#include "sgp/error.hpp"

namespace sgp {

  namespace {
    constexpr element_id unset = static_cast<element_id>(-1);

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

    void require_dimensions(Morphism const& f, Semigroup const& S, Semigroup const& T) {
      if (f.source_order() != S.order() || f.target_order() != T.order()) {
        throw Error(ErrorCode::dimension_mismatch,
                    "map of shape " + str(f.source_order()) + "->" + str(f.target_order())
                        + " does not go from order " + str(S.order()) + " to order "
                        + str(T.order()));
      }
    }

    // Returns {a, b} with f(ab) != f(a)f(b), or nothing.
    std::optional<std::pair<element_id, element_id>>
    homomorphism_failure(Morphism const& f, Semigroup const& S, Semigroup const& T) {
      for (element_id a = 0; a < S.order(); ++a) {
        for (element_id b = 0; b < S.order(); ++b) {
          if (f(S.product(a, b)) != T.product(f(a), f(b))) {
            return std::make_pair(a, b);
          }
        }
      }
      return std::nullopt;
    }

    // Multiplicities of the values in a row (or column), sorted.
    struct ElementProfile {
      bool                     idempotent;
      std::vector<std::size_t> row;
      std::vector<std::size_t> column;

      friend auto operator<=>(ElementProfile const&, ElementProfile const&) = default;
    };

    std::vector<ElementProfile> profiles(Semigroup const& S) {
      std::size_t const           n = S.order();
      std::vector<ElementProfile> out;
      for (element_id a = 0; a < n; ++a) {
        std::vector<std::size_t> row(n, 0), column(n, 0);
        for (element_id x = 0; x < n; ++x) {
          ++row[S.product(a, x)];
          ++column[S.product(x, a)];
        }
        std::erase(row, 0);
        std::erase(column, 0);
        std::sort(row.begin(), row.end());
        std::sort(column.begin(), column.end());
        out.push_back({is_idempotent(S, a), std::move(row), std::move(column)});
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(Semigroup const& S, Semigroup const& T)
          : _S(S),
            _T(T),
            _n(S.order()),
            _map(_n, unset),
            _used(_n, false),
            _candidates(_n) {
        auto const ps = profiles(S);
        auto const pt = profiles(T);
        for (element_id a = 0; a < _n; ++a) {
          for (element_id t = 0; t < _n; ++t) {
            if (ps[a] == pt[t]) {
              _candidates[a].push_back(t);
            }
          }
        }
      }

      std::optional<Morphism> run() {
        if (extend(0)) {
          return Morphism(_n, _map, MorphismKind::iso);
        }
        return std::nullopt;
      }

     private:
      // every pair of mapped elements involving a must be consistent
      bool consistent(element_id a) const {
        for (element_id b = 0; b < _n; ++b) {
          if (_map[b] == unset) {
            continue;
          }
          if (!pair_ok(a, b) || !pair_ok(b, a)) {
            return false;
          }
        }
        return true;
      }

      bool pair_ok(element_id a, element_id b) const {
        element_id const c = _S.product(a, b);
        element_id const d = _T.product(_map[a], _map[b]);
        if (_map[c] != unset) {
          return _map[c] == d;
        }
        // d is reserved for c, so nobody else may hold it
        return !_used[d];
      }

      bool extend(element_id a) {
        if (a == _n) {
          // pairs (a, b) whose product was mapped after both factors
          for (element_id x = 0; x < _n; ++x) {
            if (!consistent(x)) {
              return false;
            }
          }
          return true;
        }
        for (element_id t : _candidates[a]) {
          if (_used[t]) {
            continue;
          }
          _map[a]  = t;
          _used[t] = true;
          if (consistent(a) && extend(a + 1)) {
            return true;
          }
          _map[a]  = unset;
          _used[t] = false;
        }
        return false;
      }

      Semigroup const&                     _S;
      Semigroup const&                     _T;
      std::size_t                          _n;
      std::vector<element_id>              _map;
      std::vector<bool>                    _used;
      std::vector<std::vector<element_id>> _candidates;
    };

    PhiResult phi_impl(Semigroup const&      S,
                       SandwichVector const& P,
                       Congruence const&     theta_S,
                       std::string           theorem_id,
                       std::string           inputs) {
      Report        report(std::move(theorem_id), std::move(inputs));
      ReesSemigroup M = rees(S, P);

      Congruence const theta_star = theta(M.semigroup());
      Semigroup        right_reg  = quotient(M.semigroup(), theta_star).semigroup;

      Congruence const theta1    = theta_power(S, 1);
      Quotient const   S1        = quotient(S, theta1);
      auto const       theta_cls = theta_S.classes();

      // P'([a]_theta) = [a]_theta^(1)
      std::vector<element_id> p_prime(theta_cls.size());
      for (std::size_t l = 0; l < theta_cls.size(); ++l) {
        p_prime[l] = static_cast<element_id>(theta1.class_of(theta_cls[l].front()));
        for (auto a : theta_cls[l]) {
          if (theta1.class_of(a) != p_prime[l]) {
            throw Error(ErrorCode::ill_formed,
                        "P' is not well defined: " + str(theta_cls[l].front()) + " and "
                            + str(a) + " are theta-related but not theta^(1)-related",
                        {theta_cls[l].front(), a});
          }
        }
      }
      ReesSemigroup M_prime(S1.semigroup, SandwichVector(S1.semigroup, std::move(p_prime)));

      // Phi([(a, l)]_theta*) = ([a]_theta^(1), l)
      std::size_t const       k = theta_star.class_count();
      std::vector<element_id> image(k, unset);
      std::string             ill_defined;
      for (element_id e = 0; e < M.semigroup().order(); ++e) {
        auto const [a, l]  = M.decode(e);
        element_id const v = M_prime.encode(static_cast<element_id>(theta1.class_of(a)), l);
        auto&            slot = image[theta_star.class_of(e)];
        if (slot == unset) {
          slot = v;
        } else if (slot != v && ill_defined.empty()) {
          ill_defined = "class of " + pair_string(M, e) + " has images "
                        + pair_string(M_prime, slot) + " and " + pair_string(M_prime, v);
        }
      }
      report.check("Phi well-defined", ill_defined.empty(), ill_defined);

      Morphism map(M_prime.semigroup().order(), image, MorphismKind::hom);
      bool const bijective = map.is_injective() && map.is_surjective();
      report.check("Phi surjective", map.is_surjective(), "image misses an element of M'");
      report.check("Phi injective",
                   map.is_injective(),
                   "two theta*-classes share an image in M' (" + str(k) + " classes, |M'| = "
                       + str(M_prime.semigroup().order()) + ")");
      auto const fail = homomorphism_failure(map, right_reg, M_prime.semigroup());
      report.check("Phi homomorphism",
                   !fail,
                   fail ? "Phi(xy) != Phi(x)Phi(y) for theta*-classes x=" + str(fail->first)
                              + " y=" + str(fail->second)
                        : std::string());
      check_left_simple_remark(report, M, "M");
      check_left_simple_remark(report, M_prime, "M'");

      if (bijective && !fail) {
        map = Morphism(M_prime.semigroup().order(), image, MorphismKind::iso);
      }
      return PhiResult{std::move(map),
                       std::move(report),
                       std::move(M),
                       std::move(right_reg),
                       std::move(M_prime)};
    }
  }  // namespace

  bool is_homomorphism(Morphism const& f, Semigroup const& S, Semigroup const& T) {
    require_dimensions(f, S, T);
    return !homomorphism_failure(f, S, T);
  }

  bool is_isomorphism(Morphism const& f, Semigroup const& S, Semigroup const& T) {
    require_dimensions(f, S, T);
    return f.is_injective() && f.is_surjective() && !homomorphism_failure(f, S, T);
  }

  Congruence kernel(Morphism const& f, Semigroup const& S) {
    if (f.source_order() != S.order()) {
      throw Error(ErrorCode::dimension_mismatch, "map source does not match the semigroup");
    }
    std::vector<std::size_t> labels(f.map().begin(), f.map().end());
    std::vector<std::size_t> renumber(f.target_order(), f.target_order());
    std::size_t              next = 0;
    for (auto& l : labels) {
      if (renumber[l] == f.target_order()) {
        renumber[l] = next++;
      }
      l = renumber[l];
    }
    return make_congruence(S, std::move(labels));
  }

  std::optional<Morphism> find_isomorphism(Semigroup const& S, Semigroup const& T) {
    if (S.order() != T.order() || idempotents(S).size() != idempotents(T).size()) {
      return std::nullopt;
    }
    auto ps = profiles(S);
    auto pt = profiles(T);
    std::sort(ps.begin(), ps.end());
    std::sort(pt.begin(), pt.end());
    if (ps != pt) {
      return std::nullopt;
    }
    auto result = IsoSearch(S, T).run();
    if (result && !is_isomorphism(*result, S, T)) {
      throw Error(ErrorCode::ill_formed, "isomorphism search produced an invalid witness");
    }
    return result;
  }

  std::string pair_string(ReesSemigroup const& M, element_id e) {
    auto const [s, l] = M.decode(e);
    return "(" + str(s) + "," + str(l) + ")";
  }

  void check_left_simple_remark(Report& report, ReesSemigroup const& M, std::string const& label) {
    bool const left_simple = check_property(M.semigroup(), Property::left_simple);
    report.check(label + " " + left_simple_remark_check,
                 !left_simple || M.lambda_size() == 1,
                 label + " is left simple with |Lambda| = " + str(M.lambda_size()));
  }

  KappaResult kappa(Semigroup const& S, std::size_t i, std::size_t j) {
    Tower const       tw = tower(S, theta(S), i + j + 1);
    Congruence const& lo = tw.levels[i];
    Congruence const& hi = tw.levels[i + j + 1];
    Quotient          Qi = quotient(S, lo);
    Quotient          Qh = quotient(S, hi);

    std::vector<element_id> map(lo.class_count(), unset);
    for (element_id a = 0; a < S.order(); ++a) {
      auto const v    = static_cast<element_id>(hi.class_of(a));
      auto&      slot = map[lo.class_of(a)];
      if (slot == unset) {
        slot = v;
      } else if (slot != v) {
        throw Error(ErrorCode::ill_formed,
                    "kappa is not well defined: theta^(" + str(i) + ")-class of " + str(a)
                        + " meets two theta^(" + str(i + j + 1) + ")-classes",
                    {a});
      }
    }
    Morphism k(Qh.semigroup.order(), std::move(map), MorphismKind::hom);

    Report report("kappa", "i=" + str(i) + " j=" + str(j) + " order=" + str(S.order()));
    auto const fail = homomorphism_failure(k, Qi.semigroup, Qh.semigroup);
    report.check("kappa homomorphism",
                 !fail,
                 fail ? "kappa(xy) != kappa(x)kappa(y) for x=" + str(fail->first)
                            + " y=" + str(fail->second)
                      : std::string());
    report.check("kappa surjective", k.is_surjective(), "kappa misses a class");

    // kernel as a plain partition first; it is a congruence iff kappa is a hom
    std::vector<std::size_t> labels(k.map().begin(), k.map().end());
    Congruence const         ker(std::move(labels));
    Congruence const         expected = theta_power(Qi.semigroup, j);
    report.check("kernel equals theta^(j) of S/theta^(i)",
                 ker == expected,
                 "kernel " + list_string({ker.labels().begin(), ker.labels().end()})
                     + " vs theta^(j) "
                     + list_string({expected.labels().begin(), expected.labels().end()}));

    std::optional<Morphism> induced;
    if (!fail) {
      Quotient const          K = quotient(Qi.semigroup, ker);
      std::vector<element_id> imap(K.semigroup.order(), unset);
      for (element_id c = 0; c < Qi.semigroup.order(); ++c) {
        imap[ker.class_of(c)] = k(c);
      }
      Morphism   candidate(Qh.semigroup.order(), imap, MorphismKind::hom);
      bool const iso = is_isomorphism(candidate, K.semigroup, Qh.semigroup);
      report.check("induced map is an isomorphism", iso, "induced map " + list_string(imap));
      if (iso) {
        induced = Morphism(Qh.semigroup.order(), std::move(imap), MorphismKind::iso);
      }
    } else {
      report.skip("induced map is an isomorphism", "kappa is not a homomorphism");
    }
    return KappaResult{std::move(k),
                       std::move(report),
                       std::move(Qi.semigroup),
                       std::move(Qh.semigroup),
                       std::move(induced)};
  }

  PhiResult phi(Semigroup const& S, Section const& sec) {
    Congruence const theta_S = theta(S);
    if (!(sec.congruence == theta_S) || !is_section(theta_S, sec.representative)) {
      throw Error(ErrorCode::ill_formed, "P must be a theta_S-preserving map S/theta -> S");
    }
    return phi_impl(S,
                    SandwichVector(S, sec.representative),
                    theta_S,
                    "phi",
                    "order=" + str(S.order()) + " P=" + list_string(sec.representative));
  }

  PhiResult phi_experiment(Semigroup const& S, SandwichVector const& P) {
    Congruence const theta_S = theta(S);
    if (P.lambda_size() != theta_S.class_count()) {
      throw Error(ErrorCode::dimension_mismatch, "P must be indexed by the classes of theta_S");
    }
    return phi_impl(S,
                    P,
                    theta_S,
                    "phi-experiment",
                    "order=" + str(S.order()) + " P=" + list_string(P.entries()));
  }

  PsiResult psi(Semigroup const& S, Semigroup const& T, Morphism const& tau, SandwichVector const& P) {
    require_dimensions(tau, S, T);
    if (!tau.is_injective() || !is_homomorphism(tau, S, T)) {
      throw Error(ErrorCode::not_an_embedding, "tau must be an injective homomorphism S -> T");
    }
    ReesSemigroup           M = rees(S, P);
    std::vector<element_id> p_prime;
    for (auto p : P.entries()) {
      p_prime.push_back(tau(p));
    }
    ReesSemigroup M_prime(T, SandwichVector(T, std::move(p_prime)));

    std::vector<element_id> map(M.semigroup().order());
    for (element_id e = 0; e < map.size(); ++e) {
      auto const [a, l] = M.decode(e);
      map[e]            = M_prime.encode(tau(a), l);
    }
    Morphism f(M_prime.semigroup().order(), map, MorphismKind::hom);

    Report report("psi",
                  "|S|=" + str(S.order()) + " |T|=" + str(T.order()) + " tau="
                      + list_string(tau.map()) + " P=" + list_string(P.entries()));
    report.check("Psi injective", f.is_injective(), "Psi identifies two pairs");
    auto const fail = homomorphism_failure(f, M.semigroup(), M_prime.semigroup());
    report.check("Psi homomorphism",
                 !fail,
                 fail ? "Psi(xy) != Psi(x)Psi(y) for x=" + pair_string(M, fail->first)
                            + " y=" + pair_string(M, fail->second)
                      : std::string());
    check_left_simple_remark(report, M, "M");
    check_left_simple_remark(report, M_prime, "M'");
    if (report.passed()) {
      f = Morphism(M_prime.semigroup().order(), std::move(map), MorphismKind::embedding);
    }
    return PsiResult{std::move(f), std::move(report), std::move(M), std::move(M_prime)};
  }

}  // namespace sgp
