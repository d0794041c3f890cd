#include "macw/cli/commands.h"

#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

#include "macw/cli/code_file.h"
#include "macw/cli/corpus.h"
#include "macw/errors.h"
#include "macw/linalg.h"

namespace macw::cli {
namespace {

constexpr Check kAllChecks[] = {Check::kEq1, Check::kEq2, Check::kEq3,
                                Check::kEq4, Check::kEq5, Check::kD2,
                                Check::kD3,  Check::kD4,  Check::kD5};

std::string join_counts(const WeightDistribution& w) {
  std::string out;
  for (std::size_t i = 0; i < w.counts.size(); ++i) {
    if (i) out += ' ';
    out += w.counts[i].get_str();
  }
  return out;
}

void write_code_header(std::ostream& out, const LinearCode& code) {
  out << "code n=" << code.n() << " k=" << code.k() << " q=" << code.field().q()
      << '\n';
}

void write_matrix(std::ostream& out, const MatrixGF& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "  ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
}

IdentityReport run_check(Check check, const WeightDistribution& w,
                         const WeightDistribution& w_dual, int n, int k,
                         int q) {
  switch (check) {
    case Check::kEq1: return check_eq1(w, w_dual, n, k, q);
    case Check::kEq2: return check_eq2(w, w_dual, n, k, q);
    case Check::kEq3: return check_eq3(w, w_dual, n, k, q);
    case Check::kEq4: return check_eq4(w, w_dual, n, k, q);
    case Check::kEq5: return check_eq5(w, w_dual, n, k, q);
    case Check::kD2:
      return check_derivative_forms(w, w_dual, n, k, q, DerivativeForm::k2);
    case Check::kD3:
      return check_derivative_forms(w, w_dual, n, k, q, DerivativeForm::k3);
    case Check::kD4:
      return check_derivative_forms(w, w_dual, n, k, q, DerivativeForm::k4);
    case Check::kD5:
      return check_derivative_forms(w, w_dual, n, k, q, DerivativeForm::k5);
  }
  throw std::logic_error("unhandled check");
}

void apply_perturbation(const Perturbation& p, WeightDistribution& w,
                        WeightDistribution& w_dual, std::ostream& out) {
  WeightDistribution& target = p.side == Perturbation::Side::kCode ? w : w_dual;
  if (p.index >= target.counts.size()) {
    throw InputError("perturbation index " + std::to_string(p.index) +
                     " is outside 0.." + std::to_string(target.counts.size() - 1));
  }
  target.counts[p.index] += p.delta;
  out << "perturbed " << (p.side == Perturbation::Side::kCode ? "code" : "dual")
      << '[' << p.index << "] += " << p.delta << '\n';
}

}  // namespace

std::string_view check_name(Check check) {
  switch (check) {
    case Check::kEq1: return "eq1";
    case Check::kEq2: return "eq2";
    case Check::kEq3: return "eq3";
    case Check::kEq4: return "eq4";
    case Check::kEq5: return "eq5";
    case Check::kD2: return "d2";
    case Check::kD3: return "d3";
    case Check::kD4: return "d4";
    case Check::kD5: return "d5";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (check_name(c) == name) return c;
  }
  return std::nullopt;
}

std::set<Check> all_checks() {
  return std::set<Check>(std::begin(kAllChecks), std::end(kAllChecks));
}

std::set<Check> parse_check_selection(const std::vector<std::string>& names) {
  if (names.empty()) return all_checks();
  std::set<Check> out;
  for (const auto& name : names) {
    if (name == "all") return all_checks();
    const auto check = parse_check(name);
    if (!check) throw InputError("unknown identity '" + name + "'");
    out.insert(*check);
  }
  return out;
}

Perturbation parse_perturbation(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("perturbation must look like code:<i> or dual:<i>");
  }
  Perturbation p;
  const auto side = text.substr(0, colon);
  if (side == "code") {
    p.side = Perturbation::Side::kCode;
  } else if (side == "dual") {
    p.side = Perturbation::Side::kDual;
  } else {
    throw InputError("perturbation side must be 'code' or 'dual'");
  }
  const auto digits = text.substr(colon + 1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), p.index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      digits.empty()) {
    throw InputError("perturbation index must be a nonnegative integer");
  }
  return p;
}

CommandResult verify_distributions(const WeightDistribution& w,
                                   const WeightDistribution& w_dual, int k,
                                   int q, const std::set<Check>& checks) {
  const int n = static_cast<int>(w.n);
  std::ostringstream out;
  std::ostringstream summary;
  bool all_passed = true;

  std::optional<IdentityReport> eq5;
  for (Check check : checks) {
    const IdentityReport report = run_check(check, w, w_dual, n, k, q);
    out << render(report);
    summary << "summary " << identity_name(report.id) << ' '
            << (report.passed() ? "pass" : "FAIL")
            << " rows=" << report.rows.size() << '\n';
    all_passed = all_passed && report.passed();
    if (check == Check::kEq5) eq5 = report;
  }
  if (eq5) {
    const auto reductions = check_eq5_reductions(
        *eq5, check_eq3(w, w_dual, n, k, q), check_eq4(w, w_dual, n, k, q));
    for (const auto& m : reductions.mismatches) out << "reduction " << m << '\n';
    summary << "summary eq5-reductions "
            << (reductions.passed() ? "pass" : "FAIL") << '\n';
    all_passed = all_passed && reductions.passed();
  }
  out << summary.str() << "verdict " << (all_passed ? "pass" : "FAIL") << '\n';
  return {out.str(), all_passed ? kExitPass : kExitIdentityFailure};
}

CommandResult cmd_weights(const LinearCode& code, std::uint64_t max_enum) {
  const auto w = weight_distribution(code, max_enum);
  std::ostringstream out;
  write_code_header(out, code);
  out << "weights " << join_counts(w) << '\n'
      << "enumerator " << to_string(enumerator_poly(w)) << '\n';
  return {out.str(), kExitPass};
}

CommandResult cmd_dual(const LinearCode& code, std::uint64_t max_enum) {
  const MatrixGF h = row_space_basis(dual_generator(code.generator()));
  const LinearCode dual(h);
  const auto w_dual = weight_distribution(dual, max_enum);
  std::ostringstream out;
  write_code_header(out, code);
  out << "dual n=" << dual.n() << " k=" << dual.k() << '\n'
      << "dual-generator\n";
  write_matrix(out, h);
  out << "dual-weights " << join_counts(w_dual) << '\n';
  return {out.str(), kExitPass};
}

CommandResult cmd_transform(const LinearCode& code, std::uint64_t max_enum) {
  const int n = static_cast<int>(code.n());
  const int k = static_cast<int>(code.k());
  const int q = static_cast<int>(code.field().q());
  const auto w = weight_distribution(code, max_enum);
  const auto w_dual = weight_distribution(code.dual(), max_enum);
  const auto via_eq1 = transform_eq1(w_dual, n, k, q);
  const auto via_eq2 = transform_eq2(w_dual, n, k, q);
  const bool ok = via_eq1 == w && via_eq2 == w;

  std::ostringstream out;
  write_code_header(out, code);
  out << "dual-weights " << join_counts(w_dual) << '\n'
      << "transform-eq1 " << join_counts(via_eq1) << '\n'
      << "transform-eq2 " << join_counts(via_eq2) << '\n'
      << "brute-force " << join_counts(w) << '\n'
      << "agreement " << (ok ? "pass" : "FAIL") << '\n';
  return {out.str(), ok ? kExitPass : kExitIdentityFailure};
}

CommandResult cmd_verify(const LinearCode& code, const VerifyOptions& options) {
  auto w = weight_distribution(code, options.max_enum);
  auto w_dual = weight_distribution(code.dual(), options.max_enum);
  std::ostringstream out;
  write_code_header(out, code);
  if (options.perturb) apply_perturbation(*options.perturb, w, w_dual, out);
  out << "weights " << join_counts(w) << '\n'
      << "dual-weights " << join_counts(w_dual) << '\n';
  auto result = verify_distributions(w, w_dual, static_cast<int>(code.k()),
                                     static_cast<int>(code.field().q()),
                                     options.checks);
  result.output = out.str() + result.output;
  return result;
}

CommandResult cmd_kraw(int n, int q, std::optional<int> r,
                       std::optional<int> j) {
  if (n < 0) throw InputError("n must be nonnegative");
  if (q < 2) throw InputError("q must be at least 2");
  if ((r && (*r < 0 || *r > n)) || (j && (*j < 0 || *j > n))) {
    throw InputError("r and j must lie in 0..n");
  }
  std::ostringstream out;
  out << "krawtchouk n=" << n << " q=" << q << '\n';
  for (int rr = 0; rr <= n; ++rr) {
    if (r && *r != rr) continue;
    for (int jj = 0; jj <= n; ++jj) {
      if (j && *j != jj) continue;
      out << "K r=" << rr << " j=" << jj << ' '
          << krawtchouk(rr, jj, n, q).get_str() << '\n';
    }
  }
  return {out.str(), kExitPass};
}

CommandResult cmd_demo(std::string_view name, const VerifyOptions& options) {
  const DemoEntry& entry = find_demo(name);
  auto result = cmd_verify(parse_code_file(entry.source), options);
  result.output = "demo " + entry.name + ": " + entry.description + '\n' +
                  result.output;
  return result;
}

CommandResult cmd_demo_list() {
  std::ostringstream out;
  for (const auto& entry : demo_corpus()) {
    out << entry.name << "  " << entry.description << '\n';
  }
  return {out.str(), kExitPass};
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weight enumerators and MacWilliams identity checks for "
               "linear codes over GF(q)"};
  app.require_subcommand(1);

  std::uint64_t max_enum = kDefaultEnumerationCap;
  std::string format = "text";
  app.add_option("--max-enum", max_enum,
                 "Maximum number of codewords to enumerate")
      ->capture_default_str();
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text"}))
      ->capture_default_str();

  std::string path;
  auto* weights = app.add_subcommand("weights", "Weight distribution and enumerator");
  weights->add_option("file", path, "Code file")->required();
  auto* dual = app.add_subcommand("dual", "Dual generator and weight distribution");
  dual->add_option("file", path, "Code file")->required();
  auto* transform =
      app.add_subcommand("transform", "MacWilliams transform of the dual distribution");
  transform->add_option("file", path, "Code file")->required();

  std::vector<std::string> identities;
  std::string perturb;
  auto add_verify_options = [&](CLI::App* sub) {
    sub->add_option("--identity", identities,
                    "eq1|eq2|eq3|eq4|eq5|d2|d3|d4|d5|all (repeatable)");
    // Test hook: corrupt one count before checking.
    sub->add_option("--perturb", perturb)->group("");
  };
  auto* verify = app.add_subcommand("verify", "Check every identity on a code");
  verify->add_option("file", path, "Code file")->required();
  add_verify_options(verify);

  int kraw_n = 0;
  int kraw_q = 2;
  std::optional<int> kraw_r;
  std::optional<int> kraw_j;
  auto* kraw = app.add_subcommand("kraw", "Krawtchouk numbers K_r(j)");
  kraw->add_option("n", kraw_n, "Code length")->required();
  kraw->add_option("q", kraw_q, "Field size")->required();
  kraw->add_option("-r", kraw_r, "Pin r");
  kraw->add_option("-j", kraw_j, "Pin j");

  std::string demo_name;
  bool demo_list = false;
  auto* demo = app.add_subcommand("demo", "Verify a built-in code");
  demo->add_option("name", demo_name, "Demo name");
  demo->add_flag("--list", demo_list, "List built-in demos");
  add_verify_options(demo);

  for (auto* sub : {weights, dual, transform, verify, kraw, demo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    auto verify_options = [&] {
      VerifyOptions options;
      options.max_enum = max_enum;
      options.checks = parse_check_selection(identities);
      if (!perturb.empty()) options.perturb = parse_perturbation(perturb);
      return options;
    };
    CommandResult result;
    if (*weights) {
      result = cmd_weights(load_code_file(path), max_enum);
    } else if (*dual) {
      result = cmd_dual(load_code_file(path), max_enum);
    } else if (*transform) {
      result = cmd_transform(load_code_file(path), max_enum);
    } else if (*verify) {
      result = cmd_verify(load_code_file(path), verify_options());
    } else if (*kraw) {
      result = cmd_kraw(kraw_n, kraw_q, kraw_r, kraw_j);
    } else if (demo_list) {
      result = cmd_demo_list();
    } else {
      if (demo_name.empty()) throw InputError("demo needs a name or --list");
      result = cmd_demo(demo_name, verify_options());
    }
    out << result.output;
    return result.exit_code;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace macw::cli
