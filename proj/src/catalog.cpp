#include "sgp/catalog.hpp"

#include <algorithm>  // for next_permutation, sort
#include <array>      // for array
#include <map>        // for map
#include <numeric>    // for iota
#include <string>     // for to_string
#include <utility>    // for move, pair

#include "sgp/error.hpp"

namespace sgp {

  namespace {
    constexpr element_id unset = static_cast<element_id>(-1);

    constexpr std::array<std::pair<EnumerationMode, std::string_view>, 3> mode_names{
        {{EnumerationMode::labeled, "labeled"},
         {EnumerationMode::up_to_iso, "iso"},
         {EnumerationMode::up_to_iso_anti, "iso-anti"}}};

    // Least relabeled serialization of S; returns the key and the permutation.
    std::pair<std::string, std::vector<element_id>> least_relabeling(Semigroup const& S) {
      std::size_t const       n = S.order();
      std::vector<element_id> perm(n);
      std::iota(perm.begin(), perm.end(), element_id(0));
      std::string best;
      std::vector<element_id> best_perm;
      std::string candidate(n * n + 1, '\0');
      candidate[0] = static_cast<char>(n);
      do {
        for (element_id a = 0; a < n; ++a) {
          for (element_id b = 0; b < n; ++b) {
            candidate[1 + perm[a] * n + perm[b]] = static_cast<char>(perm[S.product(a, b)]);
          }
        }
        if (best.empty() || candidate < best) {
          best      = candidate;
          best_perm = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return {std::move(best), std::move(best_perm)};
    }

    void require_canonical_order(Semigroup const& S) {
      if (S.order() > max_canonical_order) {
        throw Error(ErrorCode::size_cap_exceeded,
                    "canonical forms are limited to order "
                        + std::to_string(max_canonical_order));
      }
    }

    class Enumerator {
     public:
      explicit Enumerator(std::size_t n) : _n(n), _table(n * n, unset) {}

      std::vector<std::vector<element_id>> run() {
        fill(0);
        return std::move(_found);
      }

     private:
      element_id at(std::size_t a, std::size_t b) const {
        return _table[a * _n + b];
      }

      // (pq)r = p(qr) on every triple completed by setting cell (a, b)
      bool triple_ok(std::size_t p, std::size_t q, std::size_t r) const {
        element_id const pq = at(p, q);
        element_id const qr = at(q, r);
        if (pq == unset || qr == unset) {
          return true;
        }
        element_id const left  = at(pq, r);
        element_id const right = at(p, qr);
        return left == unset || right == unset || left == right;
      }

      bool consistent(std::size_t a, std::size_t b) const {
        for (std::size_t x = 0; x < _n; ++x) {
          // cell as pq, as qr
          if (!triple_ok(a, b, x) || !triple_ok(x, a, b)) {
            return false;
          }
        }
        for (std::size_t p = 0; p < _n; ++p) {
          for (std::size_t q = 0; q < _n; ++q) {
            // cell as (pq)r with pq = a and r = b, and as p(qr) with p = a, qr = b
            if ((at(p, q) == a && !triple_ok(p, q, b)) || (at(p, q) == b && !triple_ok(a, p, q))) {
              return false;
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        if (cell == _n * _n) {
          _found.push_back(_table);
          return;
        }
        std::size_t const a = cell / _n;
        std::size_t const b = cell % _n;
        for (element_id v = 0; v < _n; ++v) {
          _table[cell] = v;
          if (consistent(a, b)) {
            fill(cell + 1);
          }
        }
        _table[cell] = unset;
      }

      std::size_t                          _n;
      std::vector<element_id>              _table;
      std::vector<std::vector<element_id>> _found;
    };
  }  // namespace

  CanonicalKey canonical_form(Semigroup const& S, bool include_transpose) {
    require_canonical_order(S);
    std::string key = least_relabeling(S).first;
    if (include_transpose) {
      key = std::min(key, least_relabeling(transpose(S)).first);
    }
    return CanonicalKey{std::move(key)};
  }

  Semigroup canonical_representative(Semigroup const& S, bool include_transpose) {
    require_canonical_order(S);
    auto best = least_relabeling(S);
    if (include_transpose) {
      Semigroup const St = transpose(S);
      auto            alt = least_relabeling(St);
      if (alt.first < best.first) {
        return relabel(St, alt.second);
      }
    }
    return relabel(S, best.second);
  }

  std::string_view mode_name(EnumerationMode mode) noexcept {
    for (auto const& [m, name] : mode_names) {
      if (m == mode) {
        return name;
      }
    }
    return "unknown";
  }

  std::optional<EnumerationMode> mode_from_name(std::string_view name) noexcept {
    for (auto const& [m, n] : mode_names) {
      if (n == name) {
        return m;
      }
    }
    return std::nullopt;
  }

  std::vector<Semigroup> enumerate_semigroups(std::size_t     n,
                                              EnumerationMode mode,
                                              bool            allow_order_five) {
    std::size_t const cap = allow_order_five ? 5 : max_enumeration_order;
    if (n == 0 || n > cap) {
      throw Error(ErrorCode::size_cap_exceeded,
                  "enumeration supports orders 1.." + std::to_string(cap) + ", got "
                      + std::to_string(n));
    }
    std::vector<Semigroup> labeled;
    for (auto& table : Enumerator(n).run()) {
      labeled.push_back(Semigroup::from_flat(n, std::move(table)));
    }
    if (mode == EnumerationMode::labeled) {
      return labeled;
    }
    bool const                           anti = mode == EnumerationMode::up_to_iso_anti;
    std::map<CanonicalKey, Semigroup>    classes;
    for (auto const& S : labeled) {
      CanonicalKey key = canonical_form(S, anti);
      if (classes.find(key) == classes.end()) {
        classes.emplace(std::move(key), canonical_representative(S, anti));
      }
    }
    std::vector<Semigroup> out;
    for (auto& entry : classes) {
      out.push_back(std::move(entry.second));
    }
    return out;
  }

}  // namespace sgp
