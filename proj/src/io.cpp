#include "sgp/io.hpp"

#include <charconv>  // for from_chars
#include <fstream>   // for ifstream, ofstream
#include <sstream>   // for ostringstream

#include "sgp/error.hpp"

namespace sgp {

  namespace {
    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    [[noreturn]] void parse_error(std::size_t line, std::string const& reason) {
      throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + reason, {line});
    }

    std::vector<std::size_t> parse_numbers(std::string_view text, std::size_t line) {
      std::vector<std::size_t> out;
      std::size_t              pos = 0;
      while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) {
          ++pos;
        }
        if (pos == text.size()) {
          break;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\r') {
          ++end;
        }
        std::string_view const token = text.substr(pos, end - pos);
        std::size_t            value = 0;
        auto const [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
          parse_error(line, "'" + std::string(token) + "' is not a non-negative integer");
        }
        out.push_back(value);
        pos = end;
      }
      return out;
    }
  }  // namespace

  Semigroup parse_table(std::string_view text) {
    std::size_t                           line_no = 0;
    std::size_t                           n       = 0;
    bool                                  have_n  = false;
    std::vector<std::vector<std::size_t>> rows;
    std::size_t                           pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view const line = trim(text.substr(pos, end - pos));
      pos                         = end + 1;
      ++line_no;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto numbers = parse_numbers(line, line_no);
      if (!have_n) {
        if (numbers.size() != 1) {
          parse_error(line_no, "expected the order on a line of its own");
        }
        if (numbers[0] == 0) {
          parse_error(line_no, "the order must be positive");
        }
        n      = numbers[0];
        have_n = true;
        continue;
      }
      if (rows.size() == n) {
        parse_error(line_no, "unexpected content after " + std::to_string(n) + " rows");
      }
      if (numbers.size() != n) {
        parse_error(line_no,
                    "row has " + std::to_string(numbers.size()) + " entries, expected "
                        + std::to_string(n));
      }
      rows.push_back(std::move(numbers));
    }
    if (!have_n) {
      parse_error(line_no, "missing order line");
    }
    if (rows.size() != n) {
      parse_error(line_no,
                  "expected " + std::to_string(n) + " rows, found " + std::to_string(rows.size()));
    }
    return Semigroup::from_table(rows);
  }

  std::string render_table(Semigroup const& S) {
    std::string out = std::to_string(S.order()) + "\n";
    for (element_id a = 0; a < S.order(); ++a) {
      out += render_indices(S.row(a)) + "\n";
    }
    return out;
  }

  Semigroup read_table_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::parse_error, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str());
  }

  void write_table_file(std::string const& path, Semigroup const& S, std::string_view comment) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorCode::invalid_argument, "cannot write " + path);
    }
    if (!comment.empty()) {
      out << "# " << comment << "\n";
    }
    out << render_table(S);
  }

  std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::string normalized(text);
    for (auto& c : normalized) {
      if (c == ',') {
        c = ' ';
      }
    }
    auto out = parse_numbers(trim(normalized), 1);
    if (out.empty()) {
      throw Error(ErrorCode::parse_error, "empty index list");
    }
    return out;
  }

}  // namespace sgp
