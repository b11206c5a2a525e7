#include "sgp/rees.hpp"

#include <string>   // for to_string
#include <utility>  // for move

#include "sgp/error.hpp"

namespace sgp {

  namespace {
    void check_entry(Semigroup const& S, element_id e, std::size_t where) {
      if (e >= S.order()) {
        throw Error(ErrorCode::entry_out_of_range,
                    "sandwich entry " + std::to_string(e) + " at position "
                        + std::to_string(where) + " is not an element of a semigroup of order "
                        + std::to_string(S.order()),
                    {where});
      }
    }

    Semigroup build_product(Semigroup const& S, SandwichVector const& P) {
      std::size_t const       lambda_size = P.lambda_size();
      std::size_t const       m           = S.order() * lambda_size;
      std::vector<element_id> table(m * m);
      for (element_id s = 0; s < S.order(); ++s) {
        for (std::size_t l = 0; l < lambda_size; ++l) {
          element_id const sp = S.product(s, P[l]);
          for (element_id t = 0; t < S.order(); ++t) {
            element_id const spt = S.product(sp, t);
            for (std::size_t mu = 0; mu < lambda_size; ++mu) {
              table[(s * lambda_size + l) * m + t * lambda_size + mu]
                  = static_cast<element_id>(spt * lambda_size + mu);
            }
          }
        }
      }
      return Semigroup::from_flat(m, std::move(table));
    }
  }  // namespace

  SandwichVector::SandwichVector(Semigroup const& S, std::vector<element_id> entries)
      : _entries(std::move(entries)) {
    if (_entries.empty()) {
      throw Error(ErrorCode::dimension_mismatch, "Lambda must be nonempty");
    }
    for (std::size_t l = 0; l < _entries.size(); ++l) {
      check_entry(S, _entries[l], l);
    }
  }

  ReesSemigroup::ReesSemigroup(Semigroup base, SandwichVector sandwich)
      : _base(std::move(base)),
        _sandwich(std::move(sandwich)),
        _product(build_product(_base, _sandwich)) {}

  std::vector<element_id> ReesSemigroup::column_set(std::size_t lambda) const {
    std::vector<element_id> out;
    for (element_id s = 0; s < _base.order(); ++s) {
      out.push_back(encode(s, lambda));
    }
    return out;
  }

  ReesSemigroup rees(Semigroup const& S, SandwichVector const& P) {
    // entries may come from a vector built against another semigroup
    for (std::size_t l = 0; l < P.lambda_size(); ++l) {
      check_entry(S, P[l], l);
    }
    return ReesSemigroup(S, P);
  }

  GeneralSandwichMatrix::GeneralSandwichMatrix(Semigroup const&                     S,
                                               std::vector<std::vector<element_id>> entries)
      : _i_size(0), _entries() {
    if (entries.empty() || entries.front().empty()) {
      throw Error(ErrorCode::dimension_mismatch, "I and Lambda must be nonempty");
    }
    _i_size = entries.front().size();
    for (std::size_t l = 0; l < entries.size(); ++l) {
      if (entries[l].size() != _i_size) {
        throw Error(ErrorCode::dimension_mismatch,
                    "sandwich matrix row " + std::to_string(l) + " has the wrong length",
                    {l});
      }
      for (std::size_t i = 0; i < _i_size; ++i) {
        check_entry(S, entries[l][i], l * _i_size + i);
        _entries.push_back(entries[l][i]);
      }
    }
  }

  Semigroup rees_general(Semigroup const& S, GeneralSandwichMatrix const& P) {
    std::size_t const n = S.order();
    std::size_t const I = P.i_size();
    std::size_t const L = P.lambda_size();
    for (std::size_t l = 0; l < L; ++l) {
      for (std::size_t i = 0; i < I; ++i) {
        check_entry(S, P.at(l, i), l * I + i);
      }
    }
    std::size_t const       m = I * n * L;
    std::vector<element_id> table(m * m);
    for (std::size_t i = 0; i < I; ++i) {
      for (element_id s = 0; s < n; ++s) {
        for (std::size_t l = 0; l < L; ++l) {
          element_id const left = general_rees_index(n, L, i, s, l);
          for (std::size_t j = 0; j < I; ++j) {
            element_id const sp = S.product(s, P.at(l, j));
            for (element_id t = 0; t < n; ++t) {
              element_id const spt = S.product(sp, t);
              for (std::size_t mu = 0; mu < L; ++mu) {
                table[left * m + general_rees_index(n, L, j, t, mu)]
                    = general_rees_index(n, L, i, spt, mu);
              }
            }
          }
        }
      }
    }
    return Semigroup::from_flat(m, std::move(table));
  }

}  // namespace sgp
