#include "sgp/relations.hpp"

#include <algorithm>  // for max
#include <cstddef>    // for ptrdiff_t
#include <map>        // for map
#include <string>     // for to_string
#include <utility>    // for move

#include "sgp/error.hpp"

namespace sgp {

  namespace {
    // Returns {a, b, x} of the first compatibility failure, or an empty vector.
    std::vector<std::size_t> compatibility_failure(Semigroup const&              S,
                                                   std::span<std::size_t const> labels) {
      std::size_t const n = S.order();
      for (element_id a = 0; a < n; ++a) {
        for (element_id b = a + 1; b < n; ++b) {
          if (labels[a] != labels[b]) {
            continue;
          }
          for (element_id x = 0; x < n; ++x) {
            if (labels[S.product(x, a)] != labels[S.product(x, b)]
                || labels[S.product(a, x)] != labels[S.product(b, x)]) {
              return {a, b, x};
            }
          }
        }
      }
      return {};
    }

    void require_congruence(Semigroup const& S, Congruence const& alpha) {
      if (alpha.owner_order() != S.order()) {
        throw Error(ErrorCode::not_a_congruence,
                    "partition of " + std::to_string(alpha.owner_order())
                        + " elements used on a semigroup of order "
                        + std::to_string(S.order()));
      }
      auto w = compatibility_failure(S, alpha.labels());
      if (!w.empty()) {
        std::string const what = "elements " + std::to_string(w[0]) + " and "
                                 + std::to_string(w[1])
                                 + " are related but separated by multiplying with "
                                 + std::to_string(w[2]);
        throw Error(ErrorCode::not_a_congruence, what, std::move(w));
      }
    }

    void require_partition_shape(Semigroup const& S, std::span<std::size_t const> labels) {
      if (labels.size() != S.order()) {
        throw Error(ErrorCode::malformed_partition,
                    "expected " + std::to_string(S.order()) + " labels, found "
                        + std::to_string(labels.size()));
      }
    }
  }  // namespace

  Congruence::Congruence(std::vector<std::size_t> labels) : _labels(), _class_count(0) {
    if (labels.empty()) {
      throw Error(ErrorCode::malformed_partition, "a partition needs at least one element");
    }
    std::size_t max_label = 0;
    for (auto l : labels) {
      max_label = std::max(max_label, l);
    }
    if (max_label >= labels.size()) {
      throw Error(ErrorCode::malformed_partition,
                  "label " + std::to_string(max_label) + " exceeds the number of elements");
    }
    std::vector<bool> used(max_label + 1, false);
    for (auto l : labels) {
      used[l] = true;
    }
    for (std::size_t l = 0; l <= max_label; ++l) {
      if (!used[l]) {
        throw Error(ErrorCode::malformed_partition,
                    "labels are not contiguous: " + std::to_string(l) + " is missing",
                    {l});
      }
    }
    std::vector<std::size_t> renumber(max_label + 1, labels.size());
    for (auto& l : labels) {
      if (renumber[l] == labels.size()) {
        renumber[l] = _class_count++;
      }
      l = renumber[l];
    }
    _labels = std::move(labels);
  }

  std::vector<std::vector<element_id>> Congruence::classes() const {
    std::vector<std::vector<element_id>> out(_class_count);
    for (element_id a = 0; a < _labels.size(); ++a) {
      out[_labels[a]].push_back(a);
    }
    return out;
  }

  bool Congruence::refines(Congruence const& other) const {
    if (other.owner_order() != owner_order()) {
      return false;
    }
    // each class of *this must map to a single class of other
    std::vector<std::size_t> image(_class_count, _labels.size());
    for (std::size_t a = 0; a < _labels.size(); ++a) {
      auto& slot = image[_labels[a]];
      if (slot == _labels.size()) {
        slot = other._labels[a];
      } else if (slot != other._labels[a]) {
        return false;
      }
    }
    return true;
  }

  Congruence identity_congruence(Semigroup const& S) {
    std::vector<std::size_t> labels(S.order());
    for (std::size_t a = 0; a < labels.size(); ++a) {
      labels[a] = a;
    }
    return Congruence(std::move(labels));
  }

  Congruence universal_congruence(Semigroup const& S) {
    return Congruence(std::vector<std::size_t>(S.order(), 0));
  }

  bool is_congruence(Semigroup const& S, std::span<std::size_t const> labels) {
    require_partition_shape(S, labels);
    // shape check only, normalization is irrelevant for compatibility
    [[maybe_unused]] Congruence const shape(std::vector<std::size_t>(labels.begin(), labels.end()));
    return compatibility_failure(S, labels).empty();
  }

  bool is_congruence(Semigroup const& S, Congruence const& alpha) {
    return is_congruence(S, std::span<std::size_t const>(alpha.labels()));
  }

  Congruence make_congruence(Semigroup const& S, std::vector<std::size_t> labels) {
    require_partition_shape(S, labels);
    Congruence alpha(std::move(labels));
    require_congruence(S, alpha);
    return alpha;
  }

  Congruence theta(Semigroup const& S) {
    return step_congruence(S, identity_congruence(S));
  }

  Congruence step_congruence(Semigroup const& S, Congruence const& alpha) {
    require_congruence(S, alpha);
    // a ~ b iff the columns x -> [x * a] and x -> [x * b] agree
    std::size_t const                             n = S.order();
    std::map<std::vector<std::size_t>, std::size_t> signature_label;
    std::vector<std::size_t>                      labels(n);
    std::vector<std::size_t>                      signature(n);
    for (element_id a = 0; a < n; ++a) {
      for (element_id x = 0; x < n; ++x) {
        signature[x] = alpha.class_of(S.product(x, a));
      }
      auto [it, inserted] = signature_label.emplace(signature, signature_label.size());
      labels[a]           = it->second;
    }
    return Congruence(std::move(labels));
  }

  Tower tower(Semigroup const& S, Congruence const& base, std::size_t depth) {
    if (depth > max_tower_depth) {
      throw Error(ErrorCode::invalid_argument,
                  "tower depth " + std::to_string(depth) + " exceeds the cap of "
                      + std::to_string(max_tower_depth));
    }
    require_congruence(S, base);
    Tower result{{base}, 0};
    bool  stable = false;
    while (!stable) {
      if (result.levels.size() > S.order()) {
        throw Error(ErrorCode::ill_formed, "tower failed to stabilize within the order");
      }
      Congruence next = step_congruence(S, result.levels.back());
      if (next == result.levels.back()) {
        stable                     = true;
        result.stabilization_index = result.levels.size() - 1;
      } else {
        result.levels.push_back(std::move(next));
      }
    }
    // pad or truncate to the requested depth; levels are constant once stable
    if (result.levels.size() > depth + 1) {
      result.levels.erase(result.levels.begin() + static_cast<std::ptrdiff_t>(depth + 1),
                          result.levels.end());
    }
    while (result.levels.size() < depth + 1) {
      result.levels.push_back(result.levels.back());
    }
    return result;
  }

  Congruence theta_power(Semigroup const& S, std::size_t k) {
    return tower(S, theta(S), k).levels[k];
  }

  Quotient quotient(Semigroup const& S, Congruence const& alpha) {
    require_congruence(S, alpha);
    std::size_t const       k = alpha.class_count();
    std::size_t const       n = S.order();
    std::vector<element_id> rep(k, 0);
    std::vector<bool>       seen(k, false);
    for (element_id a = 0; a < n; ++a) {
      if (!seen[alpha.class_of(a)]) {
        seen[alpha.class_of(a)] = true;
        rep[alpha.class_of(a)]  = a;
      }
    }
    std::vector<element_id> table(k * k);
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t d = 0; d < k; ++d) {
        table[c * k + d] = static_cast<element_id>(alpha.class_of(S.product(rep[c], rep[d])));
      }
    }
    std::vector<element_id> projection(n);
    for (element_id a = 0; a < n; ++a) {
      projection[a] = static_cast<element_id>(alpha.class_of(a));
    }
    return Quotient{Semigroup::from_flat(k, std::move(table)),
                    Morphism(k, std::move(projection), MorphismKind::hom)};
  }

  bool is_section(Congruence const& alpha, std::span<element_id const> representative) {
    if (representative.size() != alpha.class_count()) {
      return false;
    }
    for (std::size_t c = 0; c < representative.size(); ++c) {
      if (representative[c] >= alpha.owner_order() || alpha.class_of(representative[c]) != c) {
        return false;
      }
    }
    return true;
  }

  std::vector<Section> sections(Semigroup const&  S,
                                Congruence const& alpha,
                                SectionPolicy     policy) {
    require_congruence(S, alpha);
    auto const classes = alpha.classes();
    if (policy == SectionPolicy::min_index) {
      std::vector<element_id> rep;
      for (auto const& cls : classes) {
        rep.push_back(cls.front());
      }
      return {Section{alpha, std::move(rep)}};
    }
    std::size_t count = 1;
    for (auto const& cls : classes) {
      count *= cls.size();
      if (count > max_section_count) {
        throw Error(ErrorCode::size_cap_exceeded,
                    "more than " + std::to_string(max_section_count) + " sections");
      }
    }
    std::vector<Section>     out;
    std::vector<std::size_t> choice(classes.size(), 0);
    out.reserve(count);
    // odometer with the last class varying fastest gives lexicographic order
    while (true) {
      std::vector<element_id> rep(classes.size());
      for (std::size_t c = 0; c < classes.size(); ++c) {
        rep[c] = classes[c][choice[c]];
      }
      out.push_back(Section{alpha, std::move(rep)});
      std::size_t pos = classes.size();
      while (pos > 0) {
        --pos;
        if (++choice[pos] < classes[pos].size()) {
          break;
        }
        choice[pos] = 0;
        if (pos == 0) {
          return out;
        }
      }
    }
  }

}  // namespace sgp
