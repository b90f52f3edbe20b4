#include <array>

#include <doctest.h>
#include <json.hpp>

#include "b3/errors.hpp"
#include "b3/invariants.hpp"
#include "b3/linkio.hpp"
#include "fixtures.hpp"

using b3::BraidWord;
using b3::parse_braid;
using b3::QuotientReport;
using b3::Verdict;

namespace {

QuotientReport braid_report(const BraidWord& b) {
  return b3::burnside_group(b3::closed_braid_presentation(b));
}

}  // namespace

TEST_CASE("trivial links give the closed formula exponents") {
  const int expected[] = {0, 0, 1, 3, 7, 14, 25};
  for (int k = 1; k <= 6; ++k) {
    CHECK(b3::trivial_link_exponent(k) == expected[k]);

    const QuotientReport r = braid_report(parse_braid("", k));
    CHECK(r.order_exponent == expected[k]);
    CHECK(r.h1_rank == k - 1);
    CHECK(r.component_count == k);
    CHECK(r.closure_ranks == std::array<int, 3>{0, 0, 0});
    CHECK(r.verdict == Verdict::kConsistentWithTrivial);
  }
  CHECK_THROWS_AS(b3::trivial_link_exponent(0), b3::RangeError);
}

TEST_CASE("doubled full twist quotient: the flagship obstruction") {
  const QuotientReport r = braid_report(fixtures::double_full_twist_5());
  CHECK(r.ambient_exponent == 14);
  CHECK(r.closure_ranks == std::array<int, 3>{0, 0, 4});
  CHECK(r.order_exponent == 10);
  CHECK(r.h1_rank == 4);
  CHECK(r.component_count == 5);
  CHECK(r.verdict == Verdict::kObstructed);
  CHECK(b3::to_string(r.verdict) == "OBSTRUCTED");
  CHECK(r.certificate.find("3^10") != std::string::npos);
  CHECK(r.certificate.find("3^14") != std::string::npos);
  CHECK(r.certificate.find("5 components") != std::string::npos);

  // Internal consistency of the report.
  CHECK(r.order_exponent ==
        r.ambient_exponent - r.closure_ranks[0] - r.closure_ranks[1] - r.closure_ranks[2]);
  CHECK(r.h1_rank <= r.order_exponent);
}

TEST_CASE("two-cabled Borromean rings quotient") {
  const QuotientReport r = braid_report(b3::two_cable(fixtures::borromean_braid()));
  CHECK(r.ambient_exponent == 25);
  CHECK(r.closure_ranks == std::array<int, 3>{0, 0, 4});
  CHECK(r.order_exponent == 21);
  CHECK(r.h1_rank == 5);
  CHECK(r.component_count == 6);
  CHECK(r.verdict == Verdict::kObstructed);
  CHECK(r.certificate.find("3^21") != std::string::npos);
  CHECK(r.certificate.find("3^25") != std::string::npos);
}

TEST_CASE("small knots are consistent with triviality") {
  const QuotientReport trefoil = braid_report(parse_braid("1 1 1"));
  CHECK(trefoil.order_exponent == 1);
  CHECK(trefoil.h1_rank == 1);
  CHECK(trefoil.verdict == Verdict::kConsistentWithTrivial);

  const QuotientReport eight = braid_report(parse_braid("1 -2 1 -2"));
  CHECK(eight.order_exponent == 0);
  CHECK(eight.h1_rank == 0);
  CHECK(eight.verdict == Verdict::kConsistentWithTrivial);

  const QuotientReport borromean = braid_report(fixtures::borromean_braid());
  CHECK(borromean.order_exponent == 0);
  CHECK(borromean.h1_rank == 0);
  CHECK(borromean.component_count == 3);
  CHECK(borromean.verdict == Verdict::kConsistentWithTrivial);
}

TEST_CASE("pd pipeline agrees with the braid pipeline") {
  const QuotientReport from_pd =
      b3::burnside_group(b3::pd_presentation(b3::parse_pd(fixtures::trefoil_pd_text())));
  const QuotientReport from_braid = braid_report(parse_braid("1 1 1"));
  CHECK(from_pd.order_exponent == from_braid.order_exponent);
  CHECK(from_pd.h1_rank == from_braid.h1_rank);
  CHECK(from_pd.component_count == from_braid.component_count);
  CHECK(from_pd.verdict == from_braid.verdict);

  const QuotientReport eight =
      b3::burnside_group(b3::pd_presentation(b3::parse_pd(fixtures::figure_eight_pd_text())));
  CHECK(eight.order_exponent == 0);
  CHECK(eight.h1_rank == 0);
}

TEST_CASE("h1 equals generator count minus the weight-1 closure rank") {
  for (const char* text : {"", "1 1 1", "(1 2 3 4)^10", "1 -2 1 -2", "(1 -2)^3"}) {
    const b3::LinkPresentation p = b3::closed_braid_presentation(parse_braid(text));
    const QuotientReport r = b3::burnside_group(p);
    CHECK(b3::h1_z3(p) == r.h1_rank);
    CHECK(r.h1_rank == p.generator_count - r.closure_ranks[0]);
  }
}

TEST_CASE("capacity limit names the arc count") {
  b3::LinkPresentation p;
  p.generator_count = 31;
  try {
    b3::burnside_group(p);
    FAIL("expected a capacity error");
  } catch (const b3::CapacityError& e) {
    CHECK(std::string(e.what()).find("32 arcs") != std::string::npos);
  }
}

TEST_CASE("obstruction narrative matches the full report") {
  const b3::LinkPresentation p =
      b3::closed_braid_presentation(fixtures::double_full_twist_5());
  const auto result = b3::obstruction(p);
  const QuotientReport r = b3::burnside_group(p);
  CHECK(result.verdict == r.verdict);
  CHECK(result.narrative == r.certificate);
}

TEST_CASE("three-moves insert and delete crossing triples") {
  const BraidWord unlink = parse_braid("", 2);
  const BraidWord trefoil = b3::three_move(unlink, 0, 1, 1);
  CHECK(trefoil.letters == std::vector<std::int32_t>{1, 1, 1});
  CHECK(trefoil.strands == 2);
  CHECK(b3::delete_three_move(trefoil, 0) == unlink);

  const BraidWord base = parse_braid("1 -2 1", 4);
  const BraidWord moved = b3::three_move(base, 2, 3, -1);
  CHECK(moved.letters == std::vector<std::int32_t>{1, -2, -3, -3, -3, 1});
  CHECK(b3::delete_three_move(moved, 2) == base);

  CHECK_THROWS_AS(b3::three_move(base, 4, 1, 1), b3::RangeError);   // past the end
  CHECK_THROWS_AS(b3::three_move(base, 0, 4, 1), b3::RangeError);   // no such generator
  CHECK_THROWS_AS(b3::three_move(base, 0, 0, 1), b3::RangeError);
  CHECK_THROWS_AS(b3::three_move(base, 0, 1, 2), b3::RangeError);   // sign must be +-1
  CHECK_THROWS_AS(b3::delete_three_move(base, 0), b3::RangeError);  // not a triple
  CHECK_THROWS_AS(b3::delete_three_move(base, 1), b3::RangeError);  // too close to the end
}

TEST_CASE("quotient data survives specific three-moves") {
  const BraidWord gamma = fixtures::double_full_twist_5();
  const QuotientReport before = braid_report(gamma);

  for (const auto [position, gen, sign] :
       {std::array<int, 3>{0, 1, 1}, {20, 2, -1}, {40, 4, 1}, {13, 3, 1}}) {
    const QuotientReport after = braid_report(
        b3::three_move(gamma, static_cast<std::size_t>(position), gen, sign));
    CHECK(after.order_exponent == before.order_exponent);
    CHECK(after.closure_ranks == before.closure_ranks);
    CHECK(after.h1_rank == before.h1_rank);
  }

  // The smallest instance: unlink vs trefoil.
  const QuotientReport unlink = braid_report(parse_braid("", 2));
  const QuotientReport trefoil = braid_report(parse_braid("1 1 1"));
  CHECK(unlink.order_exponent == trefoil.order_exponent);
  CHECK(unlink.h1_rank == trefoil.h1_rank);
}

TEST_CASE("invariance suite passes clean and trips on corruption") {
  const auto clean = b3::invariance_suite(60, 5, 16, 1234);
  CHECK(clean.passed);
  CHECK(clean.violations == 0);
  CHECK(clean.counterexample.empty());
  CHECK(clean.trials == 60);
  CHECK(clean.seed == 1234);

  const auto corrupted = b3::invariance_suite(40, 5, 16, 1234, true);
  CHECK_FALSE(corrupted.passed);
  CHECK(corrupted.violations > 0);
  CHECK_FALSE(corrupted.counterexample.empty());

  // Same seed, same outcome, byte for byte.
  const auto replay = b3::invariance_suite(40, 5, 16, 1234, true);
  CHECK(replay.violations == corrupted.violations);
  CHECK(replay.counterexample == corrupted.counterexample);

  CHECK_THROWS_AS(b3::invariance_suite(5, 1, 10, 0), b3::RangeError);
  CHECK_THROWS_AS(b3::invariance_suite(5, 40, 10, 0), b3::CapacityError);
}

TEST_CASE("reports serialize to stable text and json") {
  QuotientReport r = braid_report(fixtures::double_full_twist_5());
  r.input = "braid \"(1 2 3 4)^10\" on 5 strands";
  r.seed = 9;

  const std::string text = b3::to_text(r);
  CHECK(text.find("order_exponent: 10") != std::string::npos);
  CHECK(text.find("closure_ranks: 0 0 4") != std::string::npos);
  CHECK(text.find("h1_rank: 4") != std::string::npos);
  CHECK(text.find("verdict: OBSTRUCTED") != std::string::npos);
  CHECK(text.find("certificate: ") != std::string::npos);

  const auto j = nlohmann::json::parse(b3::to_json(r));
  CHECK(j.size() == 8);
  CHECK(j.at("input") == r.input);
  CHECK(j.at("component_count") == 5);
  CHECK(j.at("ambient_exponent") == 14);
  CHECK(j.at("closure_ranks") == nlohmann::json::array({0, 0, 4}));
  CHECK(j.at("order_exponent") == 10);
  CHECK(j.at("h1_rank") == 4);
  CHECK(j.at("verdict") == "OBSTRUCTED");
  CHECK(j.at("seed") == 9);

  const auto suite = b3::invariance_suite(3, 3, 6, 5);
  const auto sj = nlohmann::json::parse(b3::to_json(suite));
  CHECK(sj.at("trials") == 3);
  CHECK(sj.at("passed") == true);
  CHECK(b3::to_text(suite).find("violations: 0") != std::string::npos);
}

TEST_CASE("one-crossing unknot diagram reports a trivial knot") {
  const b3::QuotientReport report =
      b3::burnside_group(b3::pd_presentation(b3::parse_pd("X 1 1 1")));
  CHECK(report.component_count == 1);
  CHECK(report.ambient_exponent == 0);
  CHECK(report.order_exponent == 0);
  CHECK(report.h1_rank == 0);
  CHECK(report.closure_ranks == std::array<int, 3>{0, 0, 0});
  CHECK(report.verdict == b3::Verdict::kConsistentWithTrivial);
}

TEST_CASE("trefoil order matches between its braid and diagram encodings") {
  const b3::QuotientReport from_pd =
      b3::burnside_group(b3::pd_presentation(b3::parse_pd(fixtures::trefoil_pd_text())));
  const b3::QuotientReport from_braid =
      b3::burnside_group(b3::closed_braid_presentation(b3::parse_braid("1 1 1")));
  // The two encodings use different generator counts, so only the quotient
  // data is comparable, not the per-layer ranks of the closure.
  CHECK(from_pd.order_exponent == from_braid.order_exponent);
  CHECK(from_pd.h1_rank == from_braid.h1_rank);
  CHECK(from_pd.component_count == from_braid.component_count);
  CHECK(from_pd.verdict == from_braid.verdict);
}
