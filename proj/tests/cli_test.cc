#include <gtest/gtest.h>

#include <sstream>

#include "macw/cli/code_file.h"
#include "macw/cli/commands.h"
#include "macw/cli/corpus.h"
#include "macw/errors.h"

namespace macw::cli {
namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_code_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run_args(std::vector<const char*> args) {
  args.insert(args.begin(), "macw");
  std::ostringstream out, err;
  const int code = run(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CodeFileTest, Examples) {
  const auto rep = parse_code_file("q 2\nn 3\nrows:\n1 1 1\n");
  EXPECT_EQ(rep.n(), 3u);
  EXPECT_EQ(rep.k(), 1u);
  EXPECT_EQ(rep.field().q(), 2u);

  const auto gf4 = parse_code_file("q 4 modulus 1,1,1\nn 2\nrows:\n1 2\n");
  EXPECT_EQ(gf4.k(), 1u);
  EXPECT_EQ(gf4.field(), make_field(2, 2, std::vector<int>{1, 1, 1}));
  EXPECT_EQ(gf4.generator().at(0, 1), 2u);

  const auto explicit_m = parse_code_file("q 3 m 2 modulus 2,2,1\nn 1\nrows:\n");
  EXPECT_EQ(explicit_m.field().q(), 9u);
  EXPECT_EQ(explicit_m.k(), 0u);
}

TEST(CodeFileTest, CommentsAndBlankLines) {
  const auto code = parse_code_file(
      "# a comment\n\nq 2   # binary\n n 3\n\trows:  #\n1 0 1 # row\n\n0 1 1\n#");
  EXPECT_EQ(code.k(), 2u);
  EXPECT_EQ(code.generator().at(1, 2), 1u);
}

TEST(CodeFileTest, LocatedErrors) {
  auto e = parse_error("q 4\nn 2\nrows:\n1 5\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_error("q 6\nn 2\nrows:\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 3u);

  e = parse_error("q 2\nn 3\nrows:\n1 1\n");
  EXPECT_EQ(e.line(), 4u);

  e = parse_error("q 2\nn 3\nrows:\n1 1 1 0\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 7u);

  e = parse_error("q 2\nlength 3\nrows:\n");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_error("q 2\nn 2\n\nrows:\n1 1\n1 1\n");
  EXPECT_EQ(e.line(), 4u);  // rank-deficient rows are reported at 'rows:'

  e = parse_error("q 2 modulus 1,1,1\nn 2\nrows:\n");  // degree does not match q
  EXPECT_EQ(e.line(), 1u);

  e = parse_error("q 2\nn x\nrows:\n");
  EXPECT_EQ(e.column(), 3u);

  EXPECT_EQ(parse_error("").line(), 1u);
  EXPECT_EQ(parse_error("q 2\nn 2\n").line(), 3u);
  EXPECT_EQ(parse_error("q 2 modulus 1,,1\nn 2\nrows:\n").column(), 15u);
  EXPECT_EQ(parse_error("q 2\nn 0\nrows:\n").line(), 2u);
}

TEST(CodeFileTest, FormatRoundTrip) {
  for (const auto& entry : demo_corpus()) {
    const auto code = parse_code_file(entry.source);
    const auto again = parse_code_file(format_code_file(code));
    EXPECT_EQ(again.generator(), code.generator()) << entry.name;
  }
}

TEST(CodeFileTest, MissingFile) {
  EXPECT_THROW(load_code_file("/nonexistent/code.txt"), InputError);
}

TEST(CorpusTest, EntriesParseWithExpectedParameters) {
  struct Expected {
    const char* name;
    std::size_t n, k;
    std::uint32_t q;
  };
  const Expected expected[] = {
      {"rep3", 3, 1, 2},     {"rep5", 5, 1, 2},      {"rep7", 7, 1, 2},
      {"even3", 3, 2, 2},    {"even5", 5, 4, 2},     {"even7", 7, 6, 2},
      {"hamming74", 7, 4, 2}, {"simplex73", 7, 3, 2}, {"full3", 3, 3, 2},
      {"zero3", 3, 0, 2},    {"ternary42", 4, 2, 3}, {"gf4-32", 3, 2, 4}};
  ASSERT_EQ(demo_corpus().size(), std::size(expected));
  for (const auto& e : expected) {
    const auto code = demo_code(e.name);
    EXPECT_EQ(code.n(), e.n) << e.name;
    EXPECT_EQ(code.k(), e.k) << e.name;
    EXPECT_EQ(code.field().q(), e.q) << e.name;
  }
  EXPECT_THROW(find_demo("nope"), InputError);
}

TEST(ChecksTest, Selection) {
  EXPECT_EQ(parse_check_selection({}), all_checks());
  EXPECT_EQ(parse_check_selection({"eq3", "all"}), all_checks());
  EXPECT_EQ(parse_check_selection({"d5", "eq3"}), (std::set<Check>{Check::kEq3, Check::kD5}));
  EXPECT_THROW(parse_check_selection({"eq6"}), InputError);
  EXPECT_EQ(check_name(Check::kD3), "d3");
}

TEST(ChecksTest, Perturbation) {
  const auto p = parse_perturbation("dual:4");
  EXPECT_EQ(p.side, Perturbation::Side::kDual);
  EXPECT_EQ(p.index, 4u);
  EXPECT_EQ(parse_perturbation("code:0").side, Perturbation::Side::kCode);
  EXPECT_THROW(parse_perturbation("code"), InputError);
  EXPECT_THROW(parse_perturbation("both:1"), InputError);
  EXPECT_THROW(parse_perturbation("code:"), InputError);
  EXPECT_THROW(parse_perturbation("code:-1"), InputError);
}

TEST(CommandsTest, Weights) {
  const auto result = cmd_weights(demo_code("hamming74"), kDefaultEnumerationCap);
  EXPECT_EQ(result.exit_code, kExitPass);
  EXPECT_EQ(result.output,
            "code n=7 k=4 q=2\n"
            "weights 1 0 0 7 7 0 0 1\n"
            "enumerator 1*x^7 + 7*x^4*y^3 + 7*x^3*y^4 + 1*y^7\n");
}

TEST(CommandsTest, Dual) {
  const auto result = cmd_dual(demo_code("rep3"), kDefaultEnumerationCap);
  EXPECT_EQ(result.output,
            "code n=3 k=1 q=2\n"
            "dual n=3 k=2\n"
            "dual-generator\n"
            "  1 0 1\n"
            "  0 1 1\n"
            "dual-weights 1 0 3 0\n");
}

TEST(CommandsTest, Transform) {
  const auto result = cmd_transform(demo_code("simplex73"), kDefaultEnumerationCap);
  EXPECT_EQ(result.exit_code, kExitPass);
  EXPECT_NE(result.output.find("transform-eq1 1 0 0 0 7 0 0 0\n"), std::string::npos);
  EXPECT_NE(result.output.find("transform-eq2 1 0 0 0 7 0 0 0\n"), std::string::npos);
  EXPECT_NE(result.output.find("agreement pass\n"), std::string::npos);
}

TEST(CommandsTest, VerifyZeroCode) {
  const auto result = cmd_verify(demo_code("zero3"), VerifyOptions{});
  EXPECT_EQ(result.exit_code, kExitPass);
  EXPECT_NE(result.output.find("weights 1 0 0 0\ndual-weights 1 3 3 1\n"), std::string::npos);
  EXPECT_TRUE(result.output.ends_with("verdict pass\n"));
}

TEST(CommandsTest, VerifySelectionAndPerturbation) {
  VerifyOptions options;
  options.checks = {Check::kEq3};
  auto result = cmd_verify(demo_code("hamming74"), options);
  EXPECT_EQ(result.exit_code, kExitPass);
  EXPECT_EQ(result.output.find("eq4"), std::string::npos);
  EXPECT_NE(result.output.find("summary eq3 pass rows=8\n"), std::string::npos);

  options.perturb = Perturbation{Perturbation::Side::kCode, 3, 1};
  result = cmd_verify(demo_code("hamming74"), options);
  EXPECT_EQ(result.exit_code, kExitIdentityFailure);
  EXPECT_NE(result.output.find("perturbed code[3] += 1\nweights 1 0 0 8 7 0 0 1\n"),
            std::string::npos);
  EXPECT_TRUE(result.output.ends_with("verdict FAIL\n"));

  options.perturb = Perturbation{Perturbation::Side::kDual, 8, 1};
  EXPECT_THROW(cmd_verify(demo_code("hamming74"), options), InputError);
}

TEST(CommandsTest, VerifyAllReportsEveryForm) {
  const auto result = cmd_verify(demo_code("ternary42"), VerifyOptions{});
  EXPECT_EQ(result.exit_code, kExitPass);
  for (const char* id : {"eq1", "eq2", "eq3", "eq4", "eq5", "eq2'", "eq3'", "eq4'", "eq5'",
                         "eq5-reductions"}) {
    EXPECT_NE(result.output.find(std::string("summary ") + id + " pass"), std::string::npos)
        << id;
  }
}

TEST(CommandsTest, VerifyCapExceeded) {
  VerifyOptions options;
  options.max_enum = 4;
  EXPECT_THROW(cmd_verify(demo_code("hamming74"), options), EnumerationCapExceeded);
}

TEST(CommandsTest, Kraw) {
  EXPECT_EQ(cmd_kraw(2, 2, std::nullopt, 1).output,
            "krawtchouk n=2 q=2\nK r=0 j=1 1\nK r=1 j=1 0\nK r=2 j=1 -1\n");
  EXPECT_EQ(cmd_kraw(1, 3, std::nullopt, std::nullopt).output,
            "krawtchouk n=1 q=3\nK r=0 j=0 1\nK r=0 j=1 1\nK r=1 j=0 2\nK r=1 j=1 -1\n");
  EXPECT_THROW(cmd_kraw(2, 2, 3, std::nullopt), InputError);
  EXPECT_THROW(cmd_kraw(2, 1, std::nullopt, std::nullopt), InputError);
}

TEST(CommandsTest, DemoListAndUnknown) {
  const auto list = cmd_demo_list().output;
  EXPECT_TRUE(list.starts_with("rep3  "));
  EXPECT_NE(list.find("\ngf4-32  "), std::string::npos);
  EXPECT_THROW(cmd_demo("nope", VerifyOptions{}), InputError);
  EXPECT_TRUE(cmd_demo("rep5", VerifyOptions{}).output.starts_with("demo rep5: "));
}

TEST(RunTest, ExitCodes) {
  EXPECT_EQ(run_args({"demo", "hamming74"}).exit_code, kExitPass);
  EXPECT_EQ(run_args({"demo", "hamming74", "--perturb", "dual:0"}).exit_code,
            kExitIdentityFailure);
  EXPECT_EQ(run_args({"demo", "nope"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"demo"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"demo", "rep3", "--identity", "eq9"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"--max-enum", "8", "demo", "hamming74"}).exit_code, kExitResourceCap);
  EXPECT_EQ(run_args({"demo", "hamming74", "--max-enum", "16"}).exit_code, kExitPass);
  EXPECT_EQ(run_args({"verify", "/nonexistent"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"kraw", "3", "2", "-r", "9"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"--format", "json", "demo", "rep3"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"frobnicate"}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({}).exit_code, kExitInputError);
  EXPECT_EQ(run_args({"--help"}).exit_code, kExitPass);
}

TEST(RunTest, OutputGoesToStdoutAndErrorsToStderr) {
  const auto ok = run_args({"demo", "rep3", "--identity", "eq4", "--identity", "d2"});
  EXPECT_EQ(ok.exit_code, kExitPass);
  EXPECT_TRUE(ok.err.empty());
  EXPECT_NE(ok.out.find("summary eq2' pass"), std::string::npos);
  EXPECT_EQ(ok.out.find("summary eq3 "), std::string::npos);

  const auto bad = run_args({"demo", "nope"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_TRUE(bad.err.starts_with("error: "));
}

TEST(RunTest, Deterministic) {
  for (const auto& entry : demo_corpus()) {
    const auto a = run_args({"demo", entry.name.c_str()});
    const auto b = run_args({"demo", entry.name.c_str()});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.exit_code, kExitPass) << entry.name;
  }
}

}  // namespace
}  // namespace macw::cli
