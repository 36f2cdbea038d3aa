#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "json_io.hpp"

namespace cs = chebsalem;
using cs::io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "chebsalem");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(JsonIo, RationalsAndDecimals) {
  EXPECT_EQ(cs::io::rational(mpq_class(-5, 2)), "-5/2");
  EXPECT_EQ(cs::io::rational(mpq_class(7)), "7");
  EXPECT_EQ(cs::io::parse_rational("10/4"), mpq_class(5, 2));
  EXPECT_THROW(cs::io::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(cs::io::parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(cs::io::decimal(mpq_class(1, 3), 12), "0.333333333333");
  EXPECT_EQ(cs::io::decimal(mpq_class(-5, 2), 12), "-2.5");
  EXPECT_EQ(cs::io::decimal(mpq_class(2, 3), 3), "0.667");
}

TEST(JsonIo, PolynomialRoundTrip) {
  const cs::IntPoly p{-1, -6, 9, 5, -6, -1, 1};
  EXPECT_EQ(cs::io::poly_from_json(cs::io::poly_json(p)), p);
  EXPECT_EQ(cs::io::poly_from_json(cs::io::cheb_json(cs::to_cheb(p))), p);
  const cs::IntPoly big({mpz_class("123456789012345678901234567890"), 0, 1});
  EXPECT_EQ(cs::io::poly_from_json(json::parse(cs::io::poly_json(big).dump())), big);
  EXPECT_THROW(cs::io::poly_from_json(json{{"basis", "legendre"}, {"coeffs", {"1"}}}), std::invalid_argument);
}

TEST(JsonIo, IntLists) {
  EXPECT_EQ(cs::io::parse_int_list("1,-1, 0,+2"), (std::vector<mpz_class>{1, -1, 0, 2}));
  EXPECT_THROW(cs::io::parse_int_list("1,,2"), std::invalid_argument);
  EXPECT_THROW(cs::io::parse_int_list(""), std::invalid_argument);
}

TEST(Cli, ConvertBothDirections) {
  auto r = run({"convert", "--cheb", "1,-1,0,0,0,-1,1", "--span"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], "v1");
  EXPECT_EQ(j["monomial"]["coeffs"], json({"-1", "-6", "9", "5", "-6", "-1", "1"}));
  EXPECT_EQ(j["span"]["compared_to_four"], "less");

  r = run({"convert", "--coeffs", "2,0,-16,0,20,0,-8,0,1", "--classify"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["chebyshev"]["coeffs"], json({"0", "0", "0", "0", "0", "0", "0", "0", "1"}));
  EXPECT_EQ(j["classification"]["kronecker"], true);

  r = run({"convert", "--cheb", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["monomial"]["coeffs"], json({"1"}));
}

TEST(Cli, DeterministicOutput) {
  const auto a = run({"family", "--spec", "two:h1=1,h2=2,n=3", "--verify-identity", "--limits", "--n-range", "1:4"});
  const auto b = run({"family", "--spec", "two:h1=1,h2=2,n=3", "--verify-identity", "--limits", "--n-range", "1:4"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).count("provenance"), 0u);
  const auto v = run({"--verbose", "family", "--spec", "two:h1=1,h2=2,n=3"});
  EXPECT_EQ(json::parse(v.out)["provenance"]["tool"], "chebsalem");
}

TEST(Cli, FamilyReports) {
  auto r = run({"family", "--spec", "two:h1=1,h2=1,n=3", "--verify-identity", "--limits"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["identity"]["salem_identity"], true);
  EXPECT_EQ(j["limits"]["smallest"]["enclosure"]["lo"], "-5/2");
  EXPECT_EQ(j["limits"]["smallest"]["enclosure"]["hi"], "-5/2");

  r = run({"family", "--spec", "kns:k=1,n=5,s=0", "--verify-identity", "--limits"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["roots"]["kronecker"], true);
  EXPECT_EQ(j["identity"]["holds"], true);
  EXPECT_EQ(j["limits"]["largest"], "2");

  r = run({"family", "--spec", "minus1:k=4,n=6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["roots"]["complex_pairs"], 1);

  r = run({"family", "--spec", "three:h1=1,h2=2,h3=3,n=1", "--verify-identity", "--salem"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_EQ(j["identity"]["lemma_f"]["nonnegative_on_unit_interval"], true);
  EXPECT_EQ(j["salem"]["class"], "NegativeSalemLike");
}

TEST(Cli, SearchFormats) {
  auto r = run({"search", "--degree", "2", "--coeffs", "-1,0,1", "--span-lt", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) EXPECT_EQ(json::parse(line)["schema"], "v1");
  EXPECT_GT(n, 0);
  r = run({"search", "--degree", "2", "--format", "csv", "--threads", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "coords,monomial_coeffs,span_lo,span_hi,kronecker");
  r = run({"search", "--degree", "4", "--prune-alternating"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"search\":\"pruned\""), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "table8"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["passed"], 26);
  EXPECT_EQ(j["ordered_by_span"], true);
  r = run({"verify", "degree18"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["n_real"], 18);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"convert", "--cheb", "1,a"}).code, 2);
  EXPECT_EQ(run({"convert", "--cheb", "1", "--coeffs", "1"}).code, 2);
  EXPECT_EQ(run({"convert"}).code, 2);
  EXPECT_EQ(run({"convert", "--cheb", "1", "--nonsense"}).code, 2);
  EXPECT_EQ(run({"family", "--spec", "two:h1=3,h2=1,n=1"}).code, 2);
  EXPECT_EQ(run({"search", "--degree", "40"}).code, 2);
  EXPECT_EQ(run({"search", "--degree", "2", "--span-lt", "x"}).code, 2);
  EXPECT_EQ(run({"verify"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
