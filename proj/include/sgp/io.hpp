#pragma once

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "sgp/core.hpp"

namespace sgp {

  // The .sgp table format:
  //
  //   # optional comment lines, anywhere
  //   n
  //   n lines of n whitespace-separated 0-based indices, row a column b = a*b
  //
  // Blank lines are ignored. Syntax problems throw Error(parse_error) with
  // where = {line}; a well-formed table that is not a semigroup throws the
  // error of Semigroup::from_table unchanged.
  Semigroup parse_table(std::string_view text);

  // Canonical rendering: "n\n" followed by one space-separated line per row.
  // parse_table(render_table(S)) == S.
  std::string render_table(Semigroup const& S);

  Semigroup read_table_file(std::string const& path);
  void      write_table_file(std::string const& path, Semigroup const& S, std::string_view comment = {});

  // "0,1,2" or "0 1 2"; throws Error(parse_error) on anything else.
  std::vector<std::size_t> parse_index_list(std::string_view text);

  // "0 1 1" for a partition, morphism or list.
  template <typename Range>
  std::string render_indices(Range const& values) {
    std::string out;
    bool        first = true;
    for (auto v : values) {
      if (!first) {
        out += ' ';
      }
      out += std::to_string(v);
      first = false;
    }
    return out;
  }

}  // namespace sgp
