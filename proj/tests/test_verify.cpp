#include <gtest/gtest.h>

#include "json.hpp"
#include "wmac/verify.hpp"

using namespace wmac;

namespace {

const CheckRecord* find_check(const VerifyReport& r, const std::string& id) {
  for (const CheckRecord& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST(Report, JsonAndLatex) {
  VerifyReport r;
  r.suite = "demo";
  r.checks.push_back({"a_b", true, ""});
  r.checks.push_back({"c", false, R"({"x":1})"});
  EXPECT_FALSE(r.ok());
  auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["checks"][1]["witness"]["x"], 1);
  EXPECT_FALSE(j["checks"][0].contains("witness"));
  EXPECT_NE(r.to_latex().find("a\\_b"), std::string::npos);
}

TEST(Suites, Combinatorics) {
  for (int ell = 1; ell <= 4; ++ell) {
    VerifyReport r = verify_combinatorics(ell, 9);
    EXPECT_TRUE(r.ok()) << r.to_json();
  }
  EXPECT_NE(find_check(verify_combinatorics(3, 2), "anchor:(4,4,2)"), nullptr);
}

TEST(MainTheorem, EmptyCoreOneStep) {
  VerifyReport r = verify_main_theorem(3, {0, 0, 0}, 1);
  EXPECT_TRUE(r.ok()) << r.to_json();
  // ehat and hhat for each color, plus the cocycle and coverage checks.
  EXPECT_EQ(r.checks.size(), 8u);
}

TEST(MainTheorem, ShiftedCore) {
  VerifyReport r = verify_main_theorem(3, {0, 1, -1}, 1);
  EXPECT_TRUE(r.ok()) << r.to_json();
}

TEST(MainTheorem, CorruptedConstantIsCaught) {
  MainTheoremOptions o;
  o.corrupt_color = 1;
  VerifyReport r = verify_main_theorem(3, {0, 0, 0}, 1, o);
  EXPECT_FALSE(r.ok());
  const CheckRecord* c = find_check(r, "cocycle");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->ok);
  auto w = nlohmann::json::parse(c->witness);
  EXPECT_FALSE(w["conflicts"].empty());
}

TEST(MainTheorem, RejectsSmallEll) { EXPECT_THROW(verify_main_theorem(2, {0, 0}, 1), std::invalid_argument); }

TEST(Suites, ShuffleSingleNode) {
  VerifyReport r = verify_shuffle(3, 1);
  for (const CheckRecord& c : r.checks) {
    if (c.id.rfind("limits-s0:", 0) == 0) continue;
    EXPECT_TRUE(c.ok) << c.id << " " << c.witness;
  }
  // Literal vanishing limits hold only for the p = 0 element F.
  EXPECT_TRUE(find_check(r, "limits-s0:F(0,1)")->ok);
  EXPECT_FALSE(find_check(r, "limits-s0:F(1,1)")->ok);
}

TEST(Suites, FockSmall) {
  VerifyReport r = verify_fock(3, 7);
  EXPECT_TRUE(r.ok()) << r.to_json();
}
