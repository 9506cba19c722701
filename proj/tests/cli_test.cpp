#include "gammaseq/cli/run.hpp"

#include "gamma_helpers.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace gammaseq;
using testing_helpers::G;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t parse_offset(const std::string& text) {
  try {
    parse_group(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

std::string schema_path(const std::string& text) {
  try {
    sequence_from_text(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  ADD_FAILURE() << "no error for " << text;
  return "";
}

const char* z4_json = R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2]], "h": [[1]]})";

}  // namespace

TEST(ParseGroup, Examples) {
  EXPECT_EQ(parse_group("Z/2 + Z/4"), G({2, 4}));
  EXPECT_EQ(parse_group("Z/6 + Z/4"), G({2, 12}));
  EXPECT_EQ(parse_group("Z^2 + Z/3"), G({3, 0, 0}));
  EXPECT_EQ(parse_group("Z"), G({0}));
  EXPECT_EQ(parse_group("Z + Z/2 + Z"), G({2, 0, 0}));
  EXPECT_EQ(parse_group("  Z / 4 "), G({4}));
  EXPECT_EQ(parse_group("Z/2+Z/3"), G({6}));
  EXPECT_EQ(parse_group("0"), FgAbGroup());
  EXPECT_EQ(parse_group(" 0 "), FgAbGroup());
}

TEST(ParseGroup, SmithOracleAgrees) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(2, 40), n(1, 4);
  for (int it = 0; it < 200; ++it) {
    std::vector<Integer> orders;
    std::string text;
    for (int k = n(rng); k > 0; --k) {
      orders.push_back(d(rng));
      text += (text.empty() ? "" : " + ") + ("Z/" + orders.back().str());
    }
    std::vector<Integer> expected;
    for (const auto& e : oracle::smith_diagonal_by_minors(diagonal(orders)))
      if (e != 1) expected.push_back(e);
    EXPECT_EQ(parse_group(text).factors(), expected) << text;
  }
}

TEST(ParseGroup, Errors) {
  EXPECT_EQ(parse_offset("Z/1"), 2u);
  EXPECT_EQ(parse_offset("Z/0"), 2u);
  EXPECT_EQ(parse_offset("Z^0"), 2u);
  EXPECT_EQ(parse_offset(""), 0u);
  EXPECT_EQ(parse_offset("   "), 3u);
  EXPECT_EQ(parse_offset("Z/2 +"), 5u);
  EXPECT_EQ(parse_offset("Z/2 Z/3"), 4u);
  EXPECT_EQ(parse_offset("Q"), 0u);
  EXPECT_EQ(parse_offset("Z/x"), 2u);
  EXPECT_EQ(parse_offset("Z/2 + 0"), 6u);
  EXPECT_EQ(parse_offset("0 + Z/2"), 2u);
  EXPECT_EQ(parse_offset("Z^99999"), 2u);
  EXPECT_EQ(parse_offset("Z/-2"), 2u);
}

TEST(ParseGroup, PrintParseRoundTrip) {
  for (const auto& g : enumerate_groups(96)) {
    EXPECT_EQ(parse_group(g.to_string()), g);
    for (std::size_t r = 1; r <= 2; ++r) {
      std::vector<Integer> f = g.factors();
      f.insert(f.end(), r, Integer(0));
      const FgAbGroup h(f);
      EXPECT_EQ(parse_group(h.to_string()), h);
      EXPECT_EQ(parse_group_terms(h.to_string()), h.factors());
    }
  }
}

TEST(SequenceJson, RoundTrip) {
  std::vector<GammaSequence> seqs{z4_seq(), moore(G({2, 4})), split_seq(G({2, 6}), G({3})), free_top(2, G({2, 4})),
                                  triple_seq(1, G({2}), G({2, 4})),
                                  cokernel_seq(2, G({2, 4}), IntMatrix{{1, 0}, {1, 1}}), moore(FgAbGroup())};
  SearchBounds b;
  b.max_bot_order = 4;
  b.max_mid_order = 4;
  for (const auto& r : enumerate_sequences(b)) seqs.push_back(r.sequence);
  for (const auto& s : seqs) {
    const std::string text = to_text(sequence_json(s));
    EXPECT_EQ(sequence_from_text(text), s) << text;
  }
  EXPECT_EQ(sequence_from_text(z4_json), z4_seq());
}

TEST(SequenceJson, SchemaPaths) {
  EXPECT_EQ(schema_path("[1, 2]"), "");
  EXPECT_EQ(schema_path("{"), "");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "b": [[]], "i": [[2]], "h": [[1]]})"), "/pi");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/3 + Z/2", "b": [[]], "i": [[2]], "h": [[1]]})"),
            "/pi");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/1", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2]], "h": [[1]]})"),
            "/h_mid");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": 2, "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2]], "h": [[1]]})"),
            "/h_mid");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2], [1]], "h": [[1]]})"),
            "/i");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [["2"]], "h": [[1]]})"),
            "/i/0/0");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[1]], "h": [[1]]})"),
            "/i");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2]], "h": [[1, 0]]})"),
            "/h/0");
  EXPECT_EQ(schema_path(R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2]], "h": [[1]], "x": 1})"),
            "/x");
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"validate", "--help"}).code, 0);
  EXPECT_EQ(run_cli({"validate"}, z4_json).code, 0);
  EXPECT_EQ(run_cli({"validate", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run_cli({"validate"}, "{").code, 2);
  EXPECT_EQ(run_cli({"validate", "--frobnicate"}, z4_json).code, 2);
  EXPECT_EQ(run_cli({"construct", "moore"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "nope", "Z/2"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "moore", "Z/1"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "extension", "Z/2", "Z/2", "--ext", "2"}).code, 2);
  EXPECT_EQ(run_cli({"end"}, run_cli({"construct", "free-top", "--rank", "1", "Z/2"}).out).code, 2);
  EXPECT_EQ(run_cli({"pullback-check"}, z4_json).code, 2);
  EXPECT_EQ(run_cli({"analyze", "--primes", "4"}, z4_json).code, 2);
  EXPECT_EQ(run_cli({"search", "--max-bot", "0"}).code, 2);
  EXPECT_EQ(run_cli({"search", "--max-bot", "2", "--max-mid", "2"}).code, 0);
  EXPECT_EQ(run_cli({"fp2-scan", "--max-order", "16"}).code, 0);
  EXPECT_EQ(run_cli({"fp2-scan", "--primes", "2,9"}).code, 2);
  EXPECT_EQ(run_cli({"oracle-compare"}, z4_json).code, 0);
}

TEST(Run, InvalidSequenceExitsOne) {
  // h = 0 is neither surjective nor exact at pi
  const std::string bad = R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[2]], "h": [[0]]})";
  Result r = run_cli({"validate"}, bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "invalid\n  - not exact at pi: image(i) != kernel(h)\n  - h is not surjective\n");
  r = run_cli({"validate", "--json"}, bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["valid"], false);
}

TEST(Run, MalformedJsonNamesThePath) {
  Result r = run_cli({"end"}, R"({"h_top": "0", "h_mid": "Z/2", "h_bot": "Z/2", "pi": "Z/4", "b": [[]], "i": [[1]], "h": [[1]]})");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/i:"), std::string::npos) << r.err;
}

TEST(Run, ConstructZ4ThenEnd) {
  Result c = run_cli({"construct", "z4"});
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(run_cli({"validate"}, c.out).out, "valid\n");
  Result e = run_cli({"end", "--json"}, c.out);
  ASSERT_EQ(e.code, 0);
  auto j = nlohmann::json::parse(e.out);
  EXPECT_EQ(j["invariants"]["order"], 2);
  EXPECT_EQ(j["elements"].size(), 2u);
  Result a = run_cli({"aut", "--json"}, c.out);
  EXPECT_EQ(nlohmann::json::parse(a.out)["trivial"], true);
}

TEST(Run, PipelineMatchesInProcess) {
  const std::vector<std::vector<std::string>> builders{
      {"construct", "moore", "Z/2 + Z/2"},       {"construct", "split", "Z/2", "Z/4"},
      {"construct", "split", "Z/3", "Z/5"},      {"construct", "z4"},
      {"construct", "free-top", "Z/2 + Z/4"},    {"construct", "extension", "Z/2", "Z/4", "--ext", "1"},
      {"construct", "extension", "Z/2 + Z/2", "Z/2", "--ext", "10"}};
  for (const auto& args : builders) {
    Result c = run_cli(args);
    ASSERT_EQ(c.code, 0);
    const GammaSequence s = sequence_from_text(c.out);
    ASSERT_EQ(run_cli({"validate"}, c.out).code, 0);
    Result e = run_cli({"end", "--json", "--tables"}, c.out);
    ASSERT_EQ(e.code, 0);
    auto j = nlohmann::json::parse(e.out);
    const EndGammaRing ring = end_gamma(s);
    EXPECT_EQ(j["invariants"]["order"], ring.ring.order());
    ASSERT_EQ(j["elements"].size(), ring.elements.size());
    for (std::size_t k = 0; k < ring.elements.size(); ++k) {
      EXPECT_EQ(j["elements"][k]["f_mid"], nlohmann::json::parse(matrix_json(ring.elements[k].f_mid.matrix()).dump()));
      EXPECT_EQ(j["elements"][k]["f_bot"], nlohmann::json::parse(matrix_json(ring.elements[k].f_bot.matrix()).dump()));
      for (std::size_t l = 0; l < ring.elements.size(); ++l) {
        EXPECT_EQ(j["add"][k][l], ring.ring.add(k, l));
        EXPECT_EQ(j["mul"][k][l], ring.ring.mul(k, l));
      }
    }
    const RingInvariants inv = ring_invariants(ring.ring);
    EXPECT_EQ(j["invariants"]["unit_count"], inv.unit_count);
    EXPECT_EQ(j["invariants"]["idempotent_count"], inv.idempotent_count);
    EXPECT_EQ(j["invariants"]["commutative"], inv.is_commutative);
  }
}

TEST(Run, AnalyzeVerdicts) {
  Result c = run_cli({"construct", "split", "Z/2", "Z/2"});
  Result a = run_cli({"analyze", "--json", "--primes", "2,3"}, c.out);
  ASSERT_EQ(a.code, 0);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["product_of_prime_fields"][0]["k"], 2);
  EXPECT_EQ(j["product_of_prime_fields"][0]["verdict"], "yes");
  EXPECT_EQ(j["product_of_prime_fields"][1]["verdict"], "no");
  Result m = run_cli({"analyze", "--primes", "2"}, run_cli({"construct", "moore", "Z/2 + Z/2"}).out);
  EXPECT_NE(m.out.find("F_2^4: no"), std::string::npos) << m.out;
}

TEST(Run, PullbackCheck) {
  const std::string s = run_cli({"construct", "free-top", "--rank", "2", "Z/2 + Z/4"}).out;
  Result r = run_cli({"pullback-check", "--json", "--samples", "300", "--seed", "7"}, s);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pairs"], 300);
  EXPECT_TRUE(j["discrepancies"].empty());
  EXPECT_EQ(run_cli({"pullback-check", "--samples", "300", "--seed", "7"}, s).out,
            run_cli({"pullback-check", "--samples", "300", "--seed", "7"}, s).out);
}

TEST(Run, SearchJsonAndCsv) {
  const std::string csv = testing::TempDir() + "hist.csv";
  Result r = run_cli({"search", "--max-bot", "2", "--max-mid", "2", "--json", "--csv", csv});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sequences_examined"], 5);
  EXPECT_TRUE(j["fp3_hits"].empty());
  EXPECT_TRUE(j["iso_classes"].is_null());
  EXPECT_EQ(j["trivial_aut_sequences"].size(), 5u);
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "order,characteristic,commutative,unit_count,idempotent_count,additive_invariant_factors,count");
  std::size_t lines = 0;
  for (std::string line; std::getline(f, line);) ++lines;
  EXPECT_EQ(lines, j["ring_fingerprint_histogram"].size());
  Result d = run_cli({"search", "--max-bot", "4", "--max-mid", "4", "--dedupe", "--json"});
  EXPECT_FALSE(nlohmann::json::parse(d.out)["iso_classes"].is_null());
}

TEST(Run, OracleCompare) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"construct", "split", "Z/2 + Z/2", "Z/2"},
                                                                 {"construct", "extension", "Z/4", "Z/2", "--ext", "1"},
                                                                 {"construct", "moore", "Z/6"}}) {
    Result r = run_cli({"oracle-compare", "--json"}, run_cli(args).out);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(nlohmann::json::parse(r.out)["disagreements"].empty());
  }
}
