#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "fring/cli.hpp"

using namespace fring;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return (fs::path(FRING_DATA_DIR) / name).string(); }

cli::Report run(std::vector<std::string> args) {
  args.insert(args.begin(), "fring");
  return cli::dispatch(args);
}

bool has_line(const cli::Report& rep, const std::string& line) {
  return rep.text().find(line + "\n") != std::string::npos;
}

// a catalog up to order 4 plus the order-16 constructions, built once
const fs::path& catalog_dir() {
  static const fs::path dir = [] {
    auto p = fs::temp_directory_path() / "fring_cli_catalog";
    fs::remove_all(p);
    const auto rep = run({"catalog", "generate", "--max-order", "4", "--out", p.string()});
    EXPECT_EQ(rep.exit_code, 0) << rep.text();
    return p;
  }();
  return dir;
}

}  // namespace

TEST(Cli, Validate) {
  const auto rep = run({"validate", "--in", data("z2.ring")});
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(has_line(rep, "status: OK"));
  EXPECT_TRUE(has_line(rep, "valid: yes"));
  EXPECT_TRUE(has_line(rep, "unit: 1"));

  const auto bad_path = fs::temp_directory_path() / "fring_cli_bad.ring";
  {
    std::ofstream f(bad_path);
    f << "ring 2\nadd\n0 1\n1 0\nmul\n0 1\n1 0\n";
  }
  const auto bad = run({"validate", "--in", bad_path.string()});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_TRUE(has_line(bad, "status: FAIL"));
  EXPECT_TRUE(has_line(bad, "valid: no"));
  EXPECT_NE(bad.text().find("violation: "), std::string::npos);
  fs::remove(bad_path);
}

TEST(Cli, AnalyzeAndIdeals) {
  const auto rep = run({"analyze", "--in", data("k4.ring")});
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(has_line(rep, "ideals: 4"));
  EXPECT_TRUE(has_line(rep, "idempotent: yes"));
  const auto zero = run({"analyze", "--in", data("zero2.ring")});
  EXPECT_TRUE(has_line(zero, "non_degenerate: no (witness 1, rR = 0)"));

  const auto ideals = run({"ideals", "--in", data("k4.ring")});
  EXPECT_TRUE(has_line(ideals, "count: 4"));
  EXPECT_TRUE(has_line(ideals, "ideal: subset 2: 0 2 idempotent"));
}

TEST(Cli, Dorroh) {
  const auto rep = run({"dorroh", "--in", data("zero2.ring")});
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(has_line(rep, "order: 4"));
  EXPECT_TRUE(has_line(rep, "modulus: 2"));
  EXPECT_NE(rep.text().find("iota: hom 2: "), std::string::npos);
  EXPECT_NE(rep.payload.find("ring 4"), std::string::npos);
  EXPECT_TRUE(parse_ring(rep.payload).ring);

  const auto bad = run({"dorroh", "--in", data("z4.ring"), "--modulus", "2"});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.text().find("BAD_MODULUS"), std::string::npos);
}

TEST(Cli, MultiplierWritesFile) {
  const auto out = fs::temp_directory_path() / "fring_cli_mult.ring";
  const auto rep = run({"multiplier", "--in", data("k4.ring"), "--out", out.string()});
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(rep.payload.empty());
  EXPECT_TRUE(has_line(rep, "order: 4"));
  const auto check = run({"validate", "--in", out.string()});
  EXPECT_EQ(check.exit_code, 0);
  fs::remove(out);

  const auto degenerate = run({"multiplier", "--in", data("zero2.ring")});
  EXPECT_EQ(degenerate.exit_code, 1);
}

TEST(Cli, Enlargement) {
  const auto corner = run({"enlargement", "--ambient", data("m2z2.ring"), "--subset", "subset 2: 0 8"});
  EXPECT_TRUE(has_line(corner, "enlargement: yes"));
  const auto half = run({"enlargement", "--ambient", data("k4.ring"), "--subset", "subset 2: 0 2"});
  EXPECT_TRUE(has_line(half, "tst_equals_t: no"));
  EXPECT_TRUE(has_line(half, "enlargement: no"));
}

TEST(Cli, TheoremCheck) {
  const auto dir = catalog_dir().string();
  const auto rep = run({"theorem-check", "--ring", data("k4.ring"), "--ideal", "subset 2: 0 1",
                        "--catalog", dir});
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(has_line(rep, "status: EVIDENCE"));
  EXPECT_TRUE(has_line(rep, "joint_enlargement: none (bound 16)"));

  const auto whole = run({"theorem-check", "--ring", data("k4.ring"), "--ideal",
                          "subset 4: 0 1 2 3", "--catalog", dir});
  EXPECT_TRUE(has_line(whole, "status: OK"));
  EXPECT_TRUE(has_line(whole, "joint_enlargement: found (proof)"));

  const auto diagonal = run({"theorem-check", "--ring", data("k4.ring"), "--ideal",
                             "subset 2: 0 3", "--catalog", dir});
  EXPECT_TRUE(has_line(diagonal, "s_ideal: no"));
  EXPECT_TRUE(has_line(diagonal, "preconditions: no"));

  const auto not_subring = run({"theorem-check", "--ring", data("k4.ring"), "--ideal",
                                "subset 3: 0 1 2", "--catalog", dir});
  EXPECT_EQ(not_subring.exit_code, 1);
  EXPECT_TRUE(has_line(not_subring, "verdict: NOT_APPLICABLE"));
}

TEST(Cli, Search) {
  const auto dir = catalog_dir().string();
  const auto found = run({"search", "--a", data("z2.ring"), "--b", data("m2z2.ring"), "--catalog", dir});
  EXPECT_TRUE(has_line(found, "status: OK"));
  EXPECT_TRUE(has_line(found, "joint_enlargement: found (proof)"));
  EXPECT_NE(found.text().find("ambient: x16-"), std::string::npos);
  const auto none = run({"search", "--a", data("k4.ring"), "--b", data("z2.ring"), "--catalog", dir});
  EXPECT_TRUE(has_line(none, "status: EVIDENCE"));
  EXPECT_EQ(none.exit_code, 0);
}

TEST(Cli, CatalogAdd) {
  const auto dir = fs::temp_directory_path() / "fring_cli_add";
  fs::remove_all(dir);
  const auto first = run({"catalog", "add", "--in", data("z4.ring"), "--out", dir.string()});
  EXPECT_TRUE(has_line(first, "added: yes"));
  const auto again = run({"catalog", "add", "--in", data("z4.ring"), "--out", dir.string()});
  EXPECT_TRUE(has_line(again, "added: no"));
  EXPECT_TRUE(has_line(again, "entries: 1"));
  fs::remove_all(dir);
}

TEST(Cli, UsageErrorsAndQuiet) {
  EXPECT_EQ(run({}).exit_code, 3);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 3);
  EXPECT_EQ(run({"validate"}).exit_code, 3);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
  EXPECT_EQ(run({"validate", "--in", "/nonexistent/x.ring"}).exit_code, 1);
  const auto quiet = run({"analyze", "--in", data("k4.ring"), "--quiet"});
  EXPECT_EQ(quiet.text(), "status: OK\n");
}

TEST(Cli, Deterministic) {
  const auto dir = catalog_dir().string();
  const std::vector<std::vector<std::string>> cmds{
      {"analyze", "--in", data("m2z2.ring")},
      {"dorroh", "--in", data("k4.ring")},
      {"multiplier", "--in", data("z4.ring")},
      {"theorem-check", "--ring", data("k4.ring"), "--ideal", "subset 2: 0 1", "--catalog", dir,
       "--threads", "4"},
      {"search", "--a", data("z2.ring"), "--b", data("m2z2.ring"), "--catalog", dir, "--threads", "3"}};
  for (const auto& c : cmds) EXPECT_EQ(run(c).text(), run(c).text());
}
