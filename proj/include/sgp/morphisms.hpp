#pragma once

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <string>    // for string

#include "sgp/core.hpp"
#include "sgp/morphism.hpp"
#include "sgp/rees.hpp"
#include "sgp/relations.hpp"
#include "sgp/report.hpp"

namespace sgp {

  // f(a b) = f(a) f(b) for all a, b. Throws Error(dimension_mismatch) if f
  // does not go from S to T.
  bool is_homomorphism(Morphism const& f, Semigroup const& S, Semigroup const& T);

  // Bijective homomorphism.
  bool is_isomorphism(Morphism const& f, Semigroup const& S, Semigroup const& T);

  // The partition of the source by equal images, validated as a congruence
  // on S (throws Error(not_a_congruence) if f is not a homomorphism).
  Congruence kernel(Morphism const& f, Semigroup const& S);

  // Backtracking search for an isomorphism S -> T. Source elements are mapped
  // in increasing order, targets tried in increasing order; candidates are
  // pruned by idempotency and by the multisets of value multiplicities in the
  // element's row and column. Any returned witness passes is_isomorphism.
  std::optional<Morphism> find_isomorphism(Semigroup const& S, Semigroup const& T);

  // "(s,l)" for an element of a Rees semigroup, used in witnesses.
  std::string pair_string(ReesSemigroup const& M, element_id e);

  // Name of the check recording that a left simple M(S; Lambda; P) has a
  // single row; reports carry it once per constructed Rees semigroup.
  inline constexpr char const* left_simple_remark_check = "left-simple-remark";

  // Adds the check left_simple(M) => |Lambda| = 1 to report.
  void check_left_simple_remark(Report& report, ReesSemigroup const& M, std::string const& label);

  struct KappaResult {
    Morphism  kappa;   // S/theta^(i) -> S/theta^(i+j+1)
    Report    report;
    Semigroup source;  // S/theta^(i)
    Semigroup target;  // S/theta^(i+j+1)
    // The bijection (S/theta^(i))/theta^(j) -> S/theta^(i+j+1) induced by
    // kappa, present when kappa is a homomorphism.
    std::optional<Morphism> induced;
  };

  // Builds [a]_theta^(i) -> [a]_theta^(i+j+1) and checks that it is a
  // surjective homomorphism with kernel theta^(j) of S/theta^(i) inducing an
  // isomorphism. Throws Error(ill_formed) if some theta^(i)-class is split by
  // theta^(i+j+1).
  KappaResult kappa(Semigroup const& S, std::size_t i, std::size_t j);

  struct PhiResult {
    Morphism      phi;            // M/theta* -> M'
    Report        report;
    ReesSemigroup M;              // M(S; S/theta; P)
    Semigroup     right_regular;  // M/theta*
    ReesSemigroup M_prime;        // M(S/theta^(1); S/theta; P')
  };

  // For a theta_S-preserving section P builds M = M(S; S/theta; P), the
  // right regular representation M/theta*, P'([a]_theta) = [a]_theta^(1),
  // M' = M(S/theta^(1); S/theta; P') and
  //   Phi([(a, [b]_theta)]_theta*) = ([a]_theta^(1), [b]_theta),
  // then checks that Phi is well defined, bijective and a homomorphism.
  // Throws Error(ill_formed) if sec is not a section of theta(S) or if P' is
  // not well defined.
  PhiResult phi(Semigroup const& S, Section const& sec);

  // The same construction with an arbitrary P : S/theta -> S. Nothing
  // guarantees the result, so the report is informational.
  PhiResult phi_experiment(Semigroup const& S, SandwichVector const& P);

  struct PsiResult {
    Morphism      psi;  // M(S; Lambda; P) -> M(T; Lambda; tau P)
    Report        report;
    ReesSemigroup M;
    ReesSemigroup M_prime;
  };

  // Psi(a, l) = (tau(a), l) with P'(l) = tau(P(l)); checks that Psi is an
  // injective homomorphism. Throws Error(not_an_embedding) if tau is not an
  // injective homomorphism S -> T.
  PsiResult psi(Semigroup const& S, Semigroup const& T, Morphism const& tau, SandwichVector const& P);

}  // namespace sgp
