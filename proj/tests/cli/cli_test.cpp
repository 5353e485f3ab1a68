#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "kancat/io.hpp"
#include "support/fixtures.hpp"

namespace {

  struct Run {
    int         code = -1;
    std::string out;  // stdout and stderr
  };

  Run run(std::string const& args, std::string const& input = {}) {
    std::string cmd = std::string(KANCAT_CLI) + " " + args + " 2>&1";
    if (!input.empty()) {
      auto tmp = std::filesystem::temp_directory_path() / "kancat_cli_input.kan";
      std::ofstream(tmp) << input;
      cmd = "cat " + tmp.string() + " | " + cmd;
    }
    Run   r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buf;
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
      r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code     = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string data(char const* name) {
    return support::data_path(name);
  }

  bool has(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

}  // namespace

TEST(Cli, CompleteHecke) {
  auto r = run("complete " + data("hecke.kan"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "status: complete"));
  EXPECT_TRUE(has(r.out, "e3*e2*e1*e3 - e2*e3*e2*e1 - 2/9 e2*e1 + 2/9 e1*e3"));
  EXPECT_TRUE(has(r.out, "basis: 7"));
}

TEST(Cli, CompleteWritesVerifiableBasis) {
  auto out = std::filesystem::temp_directory_path() / "kancat_cli_basis.kan";
  std::filesystem::remove(out);
  auto r = run("complete " + data("hecke.kan") + " --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.out;
  auto p = kancat::parse_presentation(support::read_file(out.string()));
  ASSERT_TRUE(p.status);
  EXPECT_EQ(*p.status, kancat::Status::complete);
  EXPECT_TRUE(p.provenance.contains("input-sha256"));
  EXPECT_EQ(kancat::load_basis(p).size(), 7u);
  // The written basis is accepted by check.
  EXPECT_EQ(run("check " + out.string()).code, 0);
}

TEST(Cli, RunawayStopsAtRuleLimit) {
  auto out = std::filesystem::temp_directory_path() / "kancat_cli_runaway.kan";
  std::filesystem::remove(out);
  auto r = run("complete " + data("runaway.kan") + " --max-rules 20 --out " + out.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "status: incomplete"));
  EXPECT_TRUE(has(r.out, "max-rules"));
  EXPECT_TRUE(has(r.out, "rules so far:"));
  EXPECT_FALSE(has(r.out, "basis:"));
  EXPECT_FALSE(std::filesystem::exists(out));
}

TEST(Cli, RunawayJsonReport) {
  auto r = run("complete " + data("runaway.kan") + " --max-rules 20 --format json");
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "incomplete");
  EXPECT_FALSE(j["reason"].get<std::string>().empty());
  EXPECT_GT(j["passes"].get<int>(), 0);
  EXPECT_FALSE(j.contains("basis"));
}

TEST(Cli, Check) {
  auto r = run("check " + data("five-objects.kan"));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.out, "not a Gröbner basis"));
  EXPECT_EQ(run("check " + data("hecke.kan")).code, 1);
}

TEST(Cli, Reduce) {
  auto r = run("reduce " + data("hecke.kan") + " 'e3*e2*e1*e3'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out, "e2*e3*e2*e1 + 2/9 e2*e1 - 2/9 e1*e3\n");
  r = run("reduce " + data("hecke.kan") + " 'e3*e2*e1*e3' --raw");
  EXPECT_EQ(r.out, "e3*e2*e1*e3\n");
}

TEST(Cli, Equal) {
  auto r = run("equal " + data("hecke-q.kan") + " 'e1*e2*e3' 'e2*e3'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "congruent"));
  r = run("equal " + data("hecke-q.kan") + " 'e1*e2*e3' 'e2*e3' --two-sided");
  EXPECT_TRUE(has(r.out, "not congruent")) << r.out;
  r = run("equal " + data("hecke.kan") + " 'e1' 'e2'");
  EXPECT_TRUE(has(r.out, "not congruent"));
}

TEST(Cli, IrrAndTable) {
  auto r = run("irr " + data("hecke.kan"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "finite (24)"));
  r = run("table " + data("five-objects.kan"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "B1 -> B3: finite (4)"));
  EXPECT_TRUE(has(r.out, "B2 -> B2: infinite (cycle b)"));
  auto j = nlohmann::json::parse(run("table " + data("five-objects.kan") + " --format json").out);
  EXPECT_TRUE(j.is_object() || j.is_array());
}

TEST(Cli, Kan) {
  auto r = run("kan " + data("hecke-q.kan"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r.out, "A|e3*e2*e1"));
  EXPECT_TRUE(has(r.out, "finite (4)"));
  auto j = nlohmann::json::parse(run("kan " + data("hecke-q.kan") + " --format json").out);
  EXPECT_EQ(j["fibers"][0]["finiteness"]["count"], 4);
  EXPECT_EQ(j["eps"]["A"], "A|1");
  // Without [gamma] there is nothing to extend.
  EXPECT_EQ(run("kan " + data("hecke.kan")).code, 2);
}

TEST(Cli, InputErrors) {
  auto r = run("check -", "[objects]\nB\n[arrows]\nx : B -> C\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "<stdin>:4:10: SemanticError")) << r.out;
  r = run("check -", "[objects]\nB\n[nonsense]\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.out, "SyntaxError")) << r.out;
  EXPECT_EQ(run("check /nonexistent/file.kan").code, 2);
  EXPECT_NE(run("frobnicate").code, 0);
  r = run("reduce " + data("five-objects.kan") + " 'a + c'");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, Stdin) {
  auto r = run("complete -", support::read_file(data("five-objects.kan")));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "a*b*c - e*j + d")) << r.out;
}
