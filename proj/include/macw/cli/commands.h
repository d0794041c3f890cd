#ifndef MACW_CLI_COMMANDS_H_
#define MACW_CLI_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "macw/codes.h"
#include "macw/identities.h"

namespace macw::cli {

enum ExitCode : int {
  kExitPass = 0,
  kExitIdentityFailure = 1,
  kExitInputError = 2,
  kExitResourceCap = 3,
};

// Selectable checks; names as accepted by --identity.
enum class Check { kEq1, kEq2, kEq3, kEq4, kEq5, kD2, kD3, kD4, kD5 };

std::string_view check_name(Check check);
// "eq1".."eq5", "d2".."d5"; "all" is handled by parse_check_selection.
std::optional<Check> parse_check(std::string_view name);
// Empty input or any "all" selects everything. Throws InputError on an unknown
// name.
std::set<Check> parse_check_selection(const std::vector<std::string>& names);
std::set<Check> all_checks();

// Adds `delta` to one count of one distribution before checking. Only used to
// demonstrate that the checkers reject corrupted inputs.
struct Perturbation {
  enum class Side { kCode, kDual };
  Side side = Side::kCode;
  std::size_t index = 0;
  long delta = 1;
};

// "code:<i>" or "dual:<i>"; throws InputError.
Perturbation parse_perturbation(std::string_view text);

struct VerifyOptions {
  std::uint64_t max_enum = kDefaultEnumerationCap;
  std::set<Check> checks = all_checks();
  std::optional<Perturbation> perturb;
};

struct CommandResult {
  std::string output;
  int exit_code = kExitPass;
};

// Runs the selected checks on a distribution pair. When eq5 is selected the
// t = 0 / t = r reductions against eq4 / eq3 are checked too.
CommandResult verify_distributions(const WeightDistribution& w,
                                   const WeightDistribution& w_dual, int k,
                                   int q, const std::set<Check>& checks);

CommandResult cmd_weights(const LinearCode& code, std::uint64_t max_enum);
CommandResult cmd_dual(const LinearCode& code, std::uint64_t max_enum);
CommandResult cmd_transform(const LinearCode& code, std::uint64_t max_enum);
CommandResult cmd_verify(const LinearCode& code, const VerifyOptions& options);
// All 0 <= r, j <= n unless r and/or j is pinned.
CommandResult cmd_kraw(int n, int q, std::optional<int> r, std::optional<int> j);
CommandResult cmd_demo(std::string_view name, const VerifyOptions& options);
CommandResult cmd_demo_list();

// Full command-line entry point; maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace macw::cli

#endif  // MACW_CLI_COMMANDS_H_
