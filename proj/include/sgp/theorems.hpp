#pragma once

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string
#include <vector>   // for vector

#include "sgp/analysis.hpp"
#include "sgp/core.hpp"
#include "sgp/morphism.hpp"
#include "sgp/rees.hpp"
#include "sgp/report.hpp"

namespace sgp {

  // Checks, for k = 1..depth, that the canonical sequence
  //   S_1 = S, S_2 = S/theta^(0), S_3 = S/theta^(1), ...
  // satisfies M(S_k; S_{k+1}; P)/theta = M(S_{k+2}; S_{k+1}; P') up to
  // isomorphism for every theta-preserving P at that level. Levels are
  // identified through kappa and the isomorphism is built from Phi.
  Report verify_sequence(Semigroup const& S, std::size_t depth);

  // On the same sequence: whenever S_1 and S_2 are both right simple (simple,
  // right groups), every S_k up to S_{depth+1} is as well.
  Report verify_sequence_corollaries(Semigroup const& S, std::size_t depth);

  // Properties accepted by verify_hereditary.
  std::vector<Property> hereditary_properties();

  // Compares p on M(S; Lambda; P) with p on S (right_simple, simple,
  // right_group), or for left_cancellative with the sandwich condition
  // aP(l)b = aP(l)c => b = c, and with S itself when S is right simple.
  // Throws Error(unsupported_property) for any other p.
  Report verify_hereditary(Property p, Semigroup const& S, SandwichVector const& P);

  // (1) S left equalizer simple iff S/theta left cancellative; if S is left
  // equalizer simple also (2) theta^(1) = theta and (3) M(S; S/theta; P) is
  // left equalizer simple for every theta-preserving P.
  Report verify_equalizer(Semigroup const& S);

  // Psi embeds M(S; Lambda; P) into M(T; Lambda; tau P). For a group T also
  // M(S; S; id) embeds into M(T; S; tau), which is completely simple. For a
  // left simple T the target is simple and every L_lambda is a minimal left
  // ideal. Throws Error(not_an_embedding) if tau is not an embedding.
  Report verify_embedding(Semigroup const&      S,
                          Semigroup const&      T,
                          Morphism const&       tau,
                          SandwichVector const& P);

  // Sandwich vectors for sweeps over Lambda of the given sizes: all of them
  // when S has order at most 3 or there are at most 64 for that size,
  // otherwise 64 drawn from a generator seeded with seed.
  std::vector<SandwichVector> sandwich_sweep(Semigroup const&                S,
                                             std::vector<std::size_t> const& lambda_sizes,
                                             std::uint64_t                   seed);

  inline constexpr std::size_t sampled_sandwich_count = 64;

  struct EmbeddingCase {
    std::string name;
    Semigroup   source;
    Semigroup   target;
    Morphism    tau;
  };

  // Z2 -> Z4, Z3 -> Z6, L2 -> L3, R2 -> R3 and identity embeddings.
  std::vector<EmbeddingCase> embedding_catalog();

}  // namespace sgp
