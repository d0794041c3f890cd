#ifndef MACW_CLI_CODE_FILE_H_
#define MACW_CLI_CODE_FILE_H_

// Line-oriented code description:
//
//   q <q-or-p> [m <m>] [modulus <c0,c1,...,cm>]
//   n <n>
//   rows:
//   <n integers in [0, q)>      (one line per generator row, k >= 0 lines)
//
// `#` starts a comment anywhere; blank lines are ignored. Without `m` the
// value after `q` is the field size and must be a prime power; with `m` it is
// the characteristic p.

#include <string>
#include <string_view>

#include "macw/codes.h"

namespace macw::cli {

// Throws ParseError (line/column located) for syntax errors, invalid field
// parameters, entries outside [0, q) and rank-deficient rows.
LinearCode parse_code_file(std::string_view text);

// Reads and parses a file; an unreadable path is an InputError.
LinearCode load_code_file(const std::string& path);

// Inverse of parse_code_file for the canonical form of `code`.
std::string format_code_file(const LinearCode& code);

}  // namespace macw::cli

#endif  // MACW_CLI_CODE_FILE_H_
