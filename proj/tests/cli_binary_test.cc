// Runs the installed `macw` executable as a child process.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef MACW_BINARY
#error "MACW_BINARY must name the macw executable"
#endif

namespace {

struct Outcome {
  int exit_code = -1;
  std::string out;
};

Outcome run_macw(const std::string& args) {
  const std::string command = std::string(MACW_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  Outcome outcome;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    outcome.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  outcome.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return outcome;
}

class CodeFile {
 public:
  CodeFile(const std::string& name, const std::string& text)
      : path_(std::filesystem::temp_directory_path() /
              ("macw_cli_binary_test_" + name + ".code")) {
    std::ofstream(path_) << text;
  }
  ~CodeFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(CliBinaryTest, ExitCodes) {
  EXPECT_EQ(run_macw("demo hamming74").exit_code, 0);
  EXPECT_EQ(run_macw("demo hamming74 --perturb code:4").exit_code, 1);
  EXPECT_EQ(run_macw("demo no-such-demo").exit_code, 2);
  EXPECT_EQ(run_macw("--max-enum 10 demo hamming74").exit_code, 3);
}

TEST(CliBinaryTest, FileCommands) {
  const CodeFile rep("rep", "q 2\nn 3\nrows:\n1 1 1\n");
  const auto weights = run_macw("weights " + rep.path());
  EXPECT_EQ(weights.exit_code, 0);
  EXPECT_EQ(weights.out,
            "code n=3 k=1 q=2\nweights 1 0 0 1\nenumerator 1*x^3 + 1*y^3\n");
  EXPECT_EQ(run_macw("dual " + rep.path()).exit_code, 0);
  EXPECT_EQ(run_macw("transform " + rep.path()).exit_code, 0);
  EXPECT_EQ(run_macw("verify " + rep.path()).exit_code, 0);

  const CodeFile bad("bad", "q 4\nn 2\nrows:\n1 5\n");
  EXPECT_EQ(run_macw("verify " + bad.path()).exit_code, 2);
}

TEST(CliBinaryTest, RepeatedRunsAreByteIdentical) {
  const auto a = run_macw("demo gf4-32");
  const auto b = run_macw("demo gf4-32");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
