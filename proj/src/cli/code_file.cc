#include "macw/cli/code_file.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "macw/errors.h"

namespace macw::cli {
namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Non-empty lines after comment stripping, split into located tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
        ++i;
      }
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r') {
        ++i;
      }
      if (i > start) {
        tokens.push_back({line.substr(start, i - start), line_no, start + 1});
      }
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = end + 1;
  }
  return lines;
}

std::int64_t parse_int(const Token& tok, std::string_view what) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(tok.line, tok.column,
                     "expected a nonnegative integer for " + std::string(what) +
                         ", got '" + std::string(tok.text) + "'");
  }
  return value;
}

std::vector<int> parse_modulus(const Token& tok) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = tok.text.find(',', start);
    const std::size_t end =
        comma == std::string_view::npos ? tok.text.size() : comma;
    const Token piece{tok.text.substr(start, end - start), tok.line,
                      tok.column + start};
    if (piece.text.empty()) {
      throw ParseError(tok.line, tok.column + start,
                       "empty modulus coefficient");
    }
    out.push_back(static_cast<int>(parse_int(piece, "modulus coefficient")));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

const Token& expect_keyword(const std::vector<Token>& line,
                            std::string_view keyword) {
  if (line.front().text != keyword) {
    throw ParseError(line.front().line, line.front().column,
                     "expected '" + std::string(keyword) + "', got '" +
                         std::string(line.front().text) + "'");
  }
  return line.front();
}

FiniteField parse_field_line(const std::vector<Token>& line) {
  expect_keyword(line, "q");
  if (line.size() < 2) {
    throw ParseError(line[0].line, line[0].column + 1,
                     "expected a field size after 'q'");
  }
  const Token& size_tok = line[1];
  const std::int64_t size_value = parse_int(size_tok, "q");
  std::optional<std::int64_t> m;
  std::optional<std::vector<int>> modulus;
  for (std::size_t i = 2; i < line.size(); i += 2) {
    const Token& key = line[i];
    if (i + 1 >= line.size()) {
      throw ParseError(key.line, key.column + key.text.size(),
                       "expected a value after '" + std::string(key.text) + "'");
    }
    const Token& value = line[i + 1];
    if (key.text == "m" && !m) {
      m = parse_int(value, "m");
    } else if (key.text == "modulus" && !modulus) {
      modulus = parse_modulus(value);
    } else {
      throw ParseError(key.line, key.column,
                       "unexpected token '" + std::string(key.text) + "'");
    }
  }

  int p = 0;
  int degree = 0;
  if (m) {
    p = static_cast<int>(size_value);
    degree = static_cast<int>(*m);
  } else {
    const auto pp = factor_prime_power(size_value);
    if (!pp) {
      throw ParseError(size_tok.line, size_tok.column,
                       "q = " + std::string(size_tok.text) +
                           " is not a prime power");
    }
    p = pp->p;
    degree = pp->m;
  }
  try {
    return make_field(p, degree, modulus);
  } catch (const InputError& e) {
    throw ParseError(size_tok.line, size_tok.column, e.what());
  }
}

std::size_t parse_length_line(const std::vector<Token>& line) {
  expect_keyword(line, "n");
  if (line.size() != 2) {
    const Token& at = line.size() < 2 ? line[0] : line[2];
    throw ParseError(at.line, at.column, "expected exactly 'n <length>'");
  }
  const std::int64_t n = parse_int(line[1], "n");
  if (n < 1) throw ParseError(line[1].line, line[1].column, "n must be >= 1");
  return static_cast<std::size_t>(n);
}

}  // namespace

LinearCode parse_code_file(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty code file");
  const FiniteField field = parse_field_line(lines[0]);
  if (lines.size() < 2) throw ParseError(lines[0][0].line + 1, 1, "missing 'n' line");
  const std::size_t n = parse_length_line(lines[1]);
  if (lines.size() < 3) throw ParseError(lines[1][0].line + 1, 1, "missing 'rows:' line");
  const Token& rows_tok = expect_keyword(lines[2], "rows:");
  if (lines[2].size() != 1) {
    throw ParseError(lines[2][1].line, lines[2][1].column,
                     "unexpected token after 'rows:'");
  }

  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const auto& line = lines[li];
    if (line.size() != n) {
      const Token& at = line.size() > n ? line[n] : line.back();
      throw ParseError(at.line, at.column,
                       "row has " + std::to_string(line.size()) +
                           " entries, expected n = " + std::to_string(n));
    }
    std::vector<std::int64_t> row;
    row.reserve(n);
    for (const Token& tok : line) {
      const std::int64_t v = parse_int(tok, "row entry");
      if (!field.contains(v)) {
        throw ParseError(tok.line, tok.column,
                         "entry " + std::string(tok.text) +
                             " is outside [0, " + std::to_string(field.q()) +
                             ")");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  try {
    return make_code(field, n, rows);
  } catch (const InputError& e) {
    throw ParseError(rows_tok.line, rows_tok.column, e.what());
  }
}

LinearCode load_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open code file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_code_file(buffer.str());
}

std::string format_code_file(const LinearCode& code) {
  const FiniteField& f = code.field();
  std::ostringstream out;
  out << "q " << f.p();
  if (f.m() > 1) {
    out << " m " << f.m() << " modulus ";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
      if (i) out << ',';
      out << f.modulus()[i];
    }
  }
  out << "\nn " << code.n() << "\nrows:\n";
  for (std::size_t r = 0; r < code.k(); ++r) {
    const auto row = code.generator().row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ' ';
      out << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace macw::cli
