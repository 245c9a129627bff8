#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SHIMURA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Cli, Genus) {
  const auto r = run("genus --d 6 --n 25");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
}

TEST(Cli, GenusRejectsDOne) {
  const auto r = run("genus --d 1 --n 11");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("D must be > 1"), std::string::npos) << r.out;
}

TEST(Cli, UnknownFlagPrintsUsage) {
  const auto r = run("genus --d 6 --n 1 --frobnicate");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("Usage"), std::string::npos) << r.out;
}

TEST(Cli, MissingSubcommand) { EXPECT_EQ(run("").code, 1); }

TEST(Cli, BiellipticCandidates) {
  const auto r = run("candidates --kind bielliptic");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 357u);
  EXPECT_EQ(count_lines(run("candidates --kind bielliptic --squarefree-only").out), 301u);
  EXPECT_EQ(count_lines(run("candidates --kind trigonal").out), 455u);
}

TEST(Cli, SingleQueries) {
  EXPECT_EQ(run("fixed-points --d 6 --n 11 --m 66").out, "8\n");
  EXPECT_EQ(run("quotient-genus --d 6 --n 23 --m 138").out, "1\n");
  EXPECT_EQ(run("quotient-genus --d 34 --n 7 --subgroup 14,17").out, "0\n");
  EXPECT_EQ(run("class-number --disc -264").out, "8\n");
  EXPECT_EQ(run("embed --disc -4 --d 6 --n 1").out, "2\n");
  EXPECT_EQ(run("embed --disc -4 --d 10 --n 1 --definite --exclude-p 5").out, "yes\n");
  const auto lp = run("local-points --d 6 --n 13 --m 6");
  EXPECT_EQ(lp.code, 0);
  EXPECT_NE(lp.out.find("3,empty,Clark03"), std::string::npos) << lp.out;
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run("fixed-points --d 6 --n 11 --m 4").code, 1);
  EXPECT_EQ(run("class-number --disc 7").code, 1);
  EXPECT_EQ(run("quotient-genus --d 6 --n 11").code, 1);
  EXPECT_EQ(run("classify --kind bielliptic --format xml").code, 1);
  EXPECT_EQ(run("--fixtures /nonexistent airr2").code, 1);
}

TEST(Cli, ClassifyCsvIsDeterministic) {
  const auto a = run("classify --kind bielliptic --format csv");
  const auto b = run("classify --kind bielliptic --format csv");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "D,N,m,genus,quotient_genus,rational_points,rank,reason");
  EXPECT_EQ(count_lines(a.out), 83u);
}

TEST(Cli, ClassifyJsonRoundTripsCsv) {
  const auto j = nlohmann::json::parse(run("classify --kind bielliptic --format json").out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 82u);
  for (const auto& row : j) {
    EXPECT_EQ(row.size(), 8u);
    EXPECT_EQ(row["quotient_genus"], 1);
  }
  std::istringstream csv(run("classify --kind bielliptic --format csv").out);
  std::string line;
  std::getline(csv, line);
  std::size_t i = 0;
  while (std::getline(csv, line)) {
    const auto& row = j.at(i++);
    std::ostringstream expect;
    expect << row["D"].get<long>() << ',' << row["N"].get<long>() << ',' << row["m"].get<long>() << ','
           << row["genus"].get<long>() << ",1,"
           << (row["rational_points"].is_null() ? "unknown" : row["rational_points"].get<std::string>())
           << ',' << (row["rank"].is_null() ? "unknown" : std::to_string(row["rank"].get<long>())) << ',';
    EXPECT_EQ(line.rfind(expect.str(), 0), 0u) << line;
  }
}

TEST(Cli, ClassifyTrigonalToFile) {
  const std::string path = ::testing::TempDir() + "trigonal.csv";
  EXPECT_EQ(run("classify --kind trigonal --format csv --out " + path).code, 0);
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  std::array<char, 256> buf{};
  const auto n = std::fread(buf.data(), 1, buf.size() - 1, f);
  std::fclose(f);
  EXPECT_EQ(std::string(buf.data(), n), "D,N,genus\n26,1,2\n38,1,2\n58,1,2\n106,1,4\n118,1,4\n");
}

TEST(Cli, Airr2) {
  const auto r = run("airr2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 73u);
}
