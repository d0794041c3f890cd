#ifndef MACW_CLI_CORPUS_H_
#define MACW_CLI_CORPUS_H_

#include <string>
#include <string_view>
#include <vector>

#include "macw/codes.h"

namespace macw::cli {

struct DemoEntry {
  std::string name;
  std::string description;
  // Code-file text, parsed on demand.
  std::string source;
};

// Built-in demo codes, in a fixed order.
const std::vector<DemoEntry>& demo_corpus();

// Throws InputError for an unknown name.
const DemoEntry& find_demo(std::string_view name);
LinearCode demo_code(std::string_view name);

}  // namespace macw::cli

#endif  // MACW_CLI_CORPUS_H_
