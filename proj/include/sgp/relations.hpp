#pragma once

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "sgp/core.hpp"
#include "sgp/morphism.hpp"

namespace sgp {

  // A partition of [0, n) stored as class labels normalized by first
  // occurrence: element 0 has label 0, the next element outside class 0 has
  // label 1, and so on. Two congruences are equal iff their label arrays are.
  //
  // The type only guarantees the partition shape; compatibility with a
  // particular semigroup is checked by make_congruence and by every operation
  // that takes a congruence as input.
  class Congruence {
   public:
    // Accepts any labeling whose labels are exactly {0, ..., k-1} and
    // normalizes it. Throws Error(malformed_partition) otherwise.
    explicit Congruence(std::vector<std::size_t> labels);

    std::size_t owner_order() const noexcept {
      return _labels.size();
    }

    std::size_t class_count() const noexcept {
      return _class_count;
    }

    std::size_t class_of(element_id a) const noexcept {
      return _labels[a];
    }

    bool related(element_id a, element_id b) const noexcept {
      return _labels[a] == _labels[b];
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }

    // Members of each class, each sorted, classes in label order.
    std::vector<std::vector<element_id>> classes() const;

    // True if every class of *this lies inside a class of other.
    bool refines(Congruence const& other) const;

    friend bool operator==(Congruence const&, Congruence const&) = default;

   private:
    std::vector<std::size_t> _labels;
    std::size_t              _class_count;
  };

  Congruence identity_congruence(Semigroup const& S);
  Congruence universal_congruence(Semigroup const& S);

  // Throws Error(malformed_partition) if labels has the wrong length or its
  // labels are not contiguous.
  bool is_congruence(Semigroup const& S, std::span<std::size_t const> labels);
  bool is_congruence(Semigroup const& S, Congruence const& alpha);

  // Validating factory. Throws Error(not_a_congruence) with where = {a, b, x}
  // for the first compatibility failure found.
  Congruence make_congruence(Semigroup const& S, std::vector<std::size_t> labels);

  // a ~ b iff x * a = x * b for every x.
  Congruence theta(Semigroup const& S);

  // a ~ b iff (x * a, x * b) in alpha for every x.
  Congruence step_congruence(Semigroup const& S, Congruence const& alpha);

  struct Tower {
    // levels[i] is alpha^(i); levels.size() == depth + 1
    std::vector<Congruence> levels;
    // least i with alpha^(i) == alpha^(i+1); always < order
    std::size_t stabilization_index;
  };

  inline constexpr std::size_t max_tower_depth = 4096;

  // levels[0] = base and levels[i+1] = step_congruence(S, levels[i]). The
  // stabilization index is computed even if it exceeds depth. Throws
  // Error(not_a_congruence) or Error(invalid_argument) for depth above
  // max_tower_depth.
  Tower tower(Semigroup const& S, Congruence const& base, std::size_t depth);

  // theta^(k) of S, that is the k-th level of the tower over theta(S).
  Congruence theta_power(Semigroup const& S, std::size_t k);

  struct Quotient {
    Semigroup semigroup;
    Morphism  projection;
  };

  // The factor semigroup on class labels and the canonical surjection.
  Quotient quotient(Semigroup const& S, Congruence const& alpha);

  // A choice of one representative per class: representative[c] is in c.
  struct Section {
    Congruence              congruence;
    std::vector<element_id> representative;

    friend bool operator==(Section const&, Section const&) = default;
  };

  enum class SectionPolicy { min_index, all };

  inline constexpr std::size_t max_section_count = std::size_t(1) << 20;

  // min_index: the single section of least members. all: every section, in
  // lexicographic order of representative tuples. Throws
  // Error(size_cap_exceeded) if more than max_section_count would be made.
  std::vector<Section> sections(Semigroup const& S, Congruence const& alpha, SectionPolicy policy);

  bool is_section(Congruence const& alpha, std::span<element_id const> representative);

}  // namespace sgp
