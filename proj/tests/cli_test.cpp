#include "sheetpow/cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace sheetpow {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(line);
  while (std::getline(in, part, sep)) {
    parts.push_back(part);
  }
  return parts;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(CliTest, IntegerPower) {
  const CliResult r = run({"pow", "--z", "2+3i", "--n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "-46+9i\n");
}

TEST(CliTest, RationalPowerCsv) {
  const CliResult r = run({"rpow", "--z", "1+1i", "--p", "2", "--q", "5", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "k,re,im,modulus,argument");
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto cells = split(line, ',');
    ASSERT_EQ(cells.size(), 5u);
    EXPECT_EQ(std::stoi(cells[0]), rows);
    EXPECT_NEAR(std::stod(cells[3]), std::pow(2.0, 0.2), 1e-15);
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST(CliTest, SheetedSum) {
  const CliResult r = run({"sadd", "--algo", "ccc", "--z", "-2+1i", "--m", "2", "--c", "-1-3i", "--mc", "2", "--alpha", "15/4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "-3-2i sheet=3\n");

  const CliResult swapped = run({"sadd", "--algo", "general", "--z", "-1-3i", "--m", "2", "--c", "-2+1i", "--mc", "2", "--alpha", "15/4"});
  EXPECT_EQ(swapped.out, "-3-2i sheet=2\n");

  const CliResult sign = run({"sadd", "--algo", "sign", "--z", "-1+0.001i", "--m", "0", "--c", "1i", "--alpha", "5/2", "--format", "csv"});
  EXPECT_EQ(sign.out, "re,im,sheet\n-1,1.001,1\n");
}

TEST(CliTest, ProbeText) {
  const CliResult r = run({"probe", "--c", "1i", "--alpha", "8/3", "--epsilon", "0.25"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "z0=0-0.5i epsilon=0.25 input_sheet=1\n"
            "sheets=0,1 split_fraction=0.5 split_by_ray=yes samples=1024\n");
}

TEST(CliTest, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"pow", "--z", "2+3", "--n", "3"},
           {"pow", "--z", "2+3i", "--n", "3", "--bogus"},
           {"pow", "--z", "2+3i"},
           {"rpow", "--z", "1", "--p", "2", "--q", "0"},
           {"spow", "--z", "1i", "--alpha", "2.5"},
           {"render", "--mode", "ccc", "--alpha", "2.5"},
           {"render", "--region", "1,2,3"},
           {"sadd", "--z", "1", "--c", "1", "--alpha", "5/2", "--algo", "xor"},
       }) {
    const CliResult r = run(args);
    EXPECT_EQ(r.code, kExitUsageError) << (args.empty() ? "<none>" : args[0]);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliTest, DomainErrorsExitOne) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"roots", "--z", "0", "--n", "3"},
           {"spow", "--z", "0", "--alpha", "-1/2"},
           {"probe", "--c", "2", "--alpha", "5/2", "--epsilon", "0.1"},
           {"trace", "--z", "-1", "--epsilon", "1.5", "--alpha", "2.5"},
       }) {
    const CliResult r = run(args);
    EXPECT_EQ(r.code, kExitDomainError) << args[0];
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(CliTest, RenderTwiceIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "sheetpow_cli_test";
  std::filesystem::create_directories(dir);
  for (const char* ext : {".pgm", ".ppm", ".csv"}) {
    const auto a = dir / (std::string("a") + ext);
    const auto b = dir / (std::string("b") + ext);
    const std::vector<std::string> common{"render", "--width", "40", "--height", "30", "--max-iter", "300"};
    auto args_a = common;
    args_a.insert(args_a.end(), {"--out", a.string()});
    auto args_b = common;
    args_b.insert(args_b.end(), {"--out", b.string()});
    ASSERT_EQ(run(args_a).code, kExitOk);
    ASSERT_EQ(run(args_b).code, kExitOk);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b)) << ext;
  }
  std::filesystem::remove_all(dir);
}

// Commands in README code blocks are written as "$ sheetpow args..."; the
// lines after each command, up to the next command or the closing fence, are
// its exact standard output.
struct Example {
  std::vector<std::string> args;
  std::string expected;
};

std::vector<Example> readme_examples() {
  std::ifstream in(std::filesystem::path(SHEETPOW_SOURCE_DIR) / "README.md");
  std::vector<Example> examples;
  std::string line;
  bool fenced = false;
  Example* current = nullptr;
  while (std::getline(in, line)) {
    if (line.starts_with("```")) {
      fenced = !fenced;
      current = nullptr;
      continue;
    }
    if (!fenced) {
      continue;
    }
    if (line.starts_with("$ ")) {
      current = nullptr;
      std::istringstream words(line.substr(2));
      std::string word;
      words >> word;
      if (word != "sheetpow") {
        continue;
      }
      Example& ex = examples.emplace_back();
      while (words >> word) {
        ex.args.push_back(word);
      }
      current = &ex;
    } else if (current != nullptr) {
      current->expected += line + "\n";
    }
  }
  return examples;
}

TEST(CliTest, ReadmeExamplesReproduce) {
  const auto examples = readme_examples();
  ASSERT_GE(examples.size(), 5u);
  const auto cwd = std::filesystem::current_path();
  const auto scratch = std::filesystem::temp_directory_path() / "sheetpow_readme";
  std::filesystem::create_directories(scratch);
  std::filesystem::current_path(scratch);
  for (const Example& ex : examples) {
    std::string shown;
    for (const std::string& a : ex.args) {
      shown += " " + a;
    }
    const CliResult r = run(ex.args);
    EXPECT_EQ(r.code, kExitOk) << shown << "\n" << r.err;
    EXPECT_EQ(r.out, ex.expected) << shown;
  }
  std::filesystem::current_path(cwd);
  std::filesystem::remove_all(scratch);
}

}  // namespace
}  // namespace sheetpow
