#include "macw/cli/corpus.h"

#include "macw/cli/code_file.h"
#include "macw/errors.h"

namespace macw::cli {
namespace {

std::string repetition(int n) {
  std::string src = "q 2\nn " + std::to_string(n) + "\nrows:\n";
  for (int i = 0; i < n; ++i) src += i ? " 1" : "1";
  return src + "\n";
}

// Rows e_i + e_(n-1), i < n - 1.
std::string even_weight(int n) {
  std::string src = "q 2\nn " + std::to_string(n) + "\nrows:\n";
  for (int r = 0; r + 1 < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) src += ' ';
      src += (c == r || c == n - 1) ? '1' : '0';
    }
    src += '\n';
  }
  return src;
}

std::vector<DemoEntry> build_corpus() {
  std::vector<DemoEntry> out;
  for (int n : {3, 5, 7}) {
    out.push_back({"rep" + std::to_string(n),
                   "binary repetition code [" + std::to_string(n) + ",1]",
                   repetition(n)});
  }
  for (int n : {3, 5, 7}) {
    out.push_back({"even" + std::to_string(n),
                   "binary even-weight code [" + std::to_string(n) + "," +
                       std::to_string(n - 1) + "]",
                   even_weight(n)});
  }
  out.push_back({"hamming74", "binary Hamming code [7,4]",
                 "q 2\n"
                 "n 7\n"
                 "rows:\n"
                 "1 0 0 0 1 1 0\n"
                 "0 1 0 0 0 1 1\n"
                 "0 0 1 0 1 1 1\n"
                 "0 0 0 1 1 0 1\n"});
  out.push_back({"simplex73", "binary simplex code [7,3], dual of hamming74",
                 "q 2\n"
                 "n 7\n"
                 "rows:\n"
                 "1 0 1 1 1 0 0\n"
                 "1 1 1 0 0 1 0\n"
                 "0 1 1 1 0 0 1\n"});
  out.push_back({"full3", "full space F_2^3 [3,3]",
                 "q 2\n"
                 "n 3\n"
                 "rows:\n"
                 "1 0 0\n"
                 "0 1 0\n"
                 "0 0 1\n"});
  out.push_back({"zero3", "zero code [3,0] over F_2", "q 2\nn 3\nrows:\n"});
  out.push_back({"ternary42", "ternary [4,2] tetracode",
                 "q 3\n"
                 "n 4\n"
                 "rows:\n"
                 "1 0 1 1\n"
                 "0 1 1 2\n"});
  out.push_back({"gf4-32", "[3,2] code over GF(4), modulus t^2+t+1",
                 "q 4 modulus 1,1,1\n"
                 "n 3\n"
                 "rows:\n"
                 "1 0 1\n"
                 "0 1 2\n"});
  return out;
}

}  // namespace

const std::vector<DemoEntry>& demo_corpus() {
  static const auto* corpus = new std::vector<DemoEntry>(build_corpus());
  return *corpus;
}

const DemoEntry& find_demo(std::string_view name) {
  for (const auto& entry : demo_corpus()) {
    if (entry.name == name) return entry;
  }
  throw InputError("unknown demo '" + std::string(name) +
                   "' (try 'demo --list')");
}

LinearCode demo_code(std::string_view name) {
  return parse_code_file(find_demo(name).source);
}

}  // namespace macw::cli
