#include "b3/invariants.hpp"

#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "b3/burnside.hpp"
#include "b3/errors.hpp"
#include "b3/gf3.hpp"

namespace b3 {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kObstructed:
      return "OBSTRUCTED";
    case Verdict::kConsistentWithTrivial:
      return "CONSISTENT_WITH_TRIVIAL";
    case Verdict::kInconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

int trivial_link_exponent(int components) {
  if (components < 1) {
    throw RangeError("component count must be at least 1");
  }
  const long long m = components - 1;
  return static_cast<int>(m + m * (m - 1) / 2 + m * (m - 1) * (m - 2) / 6);
}

namespace {

int relator_rank_mod3(const LinkPresentation& p) {
  Gf3Basis basis(static_cast<std::size_t>(p.generator_count));
  for (const FreeWord& r : p.relators) {
    basis.insert(r.exponent_sums_mod3(p.generator_count));
  }
  return static_cast<int>(basis.rank());
}

}  // namespace

int h1_z3(const LinkPresentation& p) {
  return p.generator_count - relator_rank_mod3(p);
}

QuotientReport burnside_group(const LinkPresentation& p) {
  if (p.generator_count > BurnsideContext::kMaxGenerators) {
    throw CapacityError("diagram with " + std::to_string(p.generator_count + 1) +
                        " arcs needs " + std::to_string(p.generator_count) +
                        " group generators, above the engine cap of " +
                        std::to_string(BurnsideContext::kMaxGenerators));
  }

  const BurnsideContext ctx(p.generator_count);
  std::vector<BurnsideElement> relators;
  relators.reserve(p.relators.size());
  for (const FreeWord& r : p.relators) {
    relators.push_back(ctx.evaluate(r));
  }
  const GradedSubgroup closure = normal_closure(relators, ctx);

  QuotientReport report;
  report.ambient_exponent = static_cast<int>(ctx.total_exponent());
  const auto ranks = closure.layer_ranks();
  for (int layer = 0; layer < 3; ++layer) {
    report.closure_ranks[layer] = static_cast<int>(ranks[layer]);
  }
  report.order_exponent = report.ambient_exponent - static_cast<int>(closure.total_rank());
  report.h1_rank = h1_z3(p);
  report.component_count = p.component_count;

  const int matched_components = report.h1_rank + 1;
  const int trivial_exponent = trivial_link_exponent(matched_components);
  std::ostringstream cert;
  if (report.order_exponent != trivial_exponent) {
    report.verdict = Verdict::kObstructed;
    cert << "quotient order 3^" << report.order_exponent << ", but a trivial link matching the"
         << " homology (" << matched_components << " components) would give 3^" << trivial_exponent
         << "; no sequence of 3-moves turns this diagram into a trivial link";
  } else {
    report.verdict = Verdict::kConsistentWithTrivial;
    cert << "quotient order 3^" << report.order_exponent << " equals that of the trivial "
         << matched_components << "-component link; the order gives no obstruction";
  }
  report.certificate = cert.str();
  return report;
}

ObstructionResult obstruction(const LinkPresentation& p) {
  const QuotientReport report = burnside_group(p);
  return ObstructionResult{report.verdict, report.certificate};
}

namespace {

BraidWord insert_power(const BraidWord& b, std::size_t position, int gen, int sign, int copies) {
  if (position > b.letters.size()) {
    throw RangeError("insertion position " + std::to_string(position) + " is past the end of a " +
                     std::to_string(b.letters.size()) + "-letter braid");
  }
  if (gen < 1 || gen >= b.strands) {
    throw RangeError("braid on " + std::to_string(b.strands) + " strands has no generator " +
                     std::to_string(gen));
  }
  if (sign != 1 && sign != -1) {
    throw RangeError("crossing sign must be +1 or -1");
  }
  BraidWord out = b;
  out.letters.insert(out.letters.begin() + static_cast<std::ptrdiff_t>(position),
                     static_cast<std::size_t>(copies), sign * gen);
  return out;
}

}  // namespace

BraidWord three_move(const BraidWord& b, std::size_t position, int gen, int sign) {
  return insert_power(b, position, gen, sign, 3);
}

BraidWord delete_three_move(const BraidWord& b, std::size_t position) {
  if (position + 3 > b.letters.size()) {
    throw RangeError("no room for three letters at position " + std::to_string(position));
  }
  const std::int32_t first = b.letters[position];
  if (b.letters[position + 1] != first || b.letters[position + 2] != first) {
    throw RangeError("letters at position " + std::to_string(position) +
                     " are not a triple of equal crossings");
  }
  BraidWord out = b;
  const auto from = out.letters.begin() + static_cast<std::ptrdiff_t>(position);
  out.letters.erase(from, from + 3);
  return out;
}

namespace {

struct QuotientSummary {
  int order_exponent = 0;
  std::array<int, 3> closure_ranks{0, 0, 0};
  int h1_rank = 0;

  bool operator==(const QuotientSummary&) const = default;
};

QuotientSummary summarize(const BraidWord& b) {
  const QuotientReport report = burnside_group(closed_braid_presentation(b));
  return QuotientSummary{report.order_exponent, report.closure_ranks, report.h1_rank};
}

std::string describe(const QuotientSummary& s) {
  std::ostringstream out;
  out << "order_exponent=" << s.order_exponent << " closure_ranks=" << s.closure_ranks[0] << ","
      << s.closure_ranks[1] << "," << s.closure_ranks[2] << " h1_rank=" << s.h1_rank;
  return out.str();
}

}  // namespace

InvarianceReport invariance_suite(std::uint64_t trials, int max_strands, int max_length,
                                  std::uint64_t seed, bool corrupt_two_moves) {
  if (max_strands < 2) {
    throw RangeError("invariance trials need at least 2 strands");
  }
  if (max_strands > BurnsideContext::kMaxGenerators + 1) {
    throw CapacityError("invariance trials on " + std::to_string(max_strands) +
                        " strands exceed the supported limit of " +
                        std::to_string(BurnsideContext::kMaxGenerators + 1));
  }
  if (max_length < 0) {
    throw RangeError("maximum braid length must be nonnegative");
  }

  InvarianceReport report;
  report.trials = trials;
  report.seed = seed;
  report.max_strands = max_strands;
  report.max_length = max_length;

  // mt19937_64 output is pinned by the standard, so trials replay exactly for
  // a given seed on every platform; std::uniform_int_distribution is not.
  std::mt19937_64 rng(seed);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    BraidWord braid;
    braid.strands = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_strands - 1));
    const std::size_t length = rng() % static_cast<std::uint64_t>(max_length + 1);
    for (std::size_t i = 0; i < length; ++i) {
      const int gen = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(braid.strands - 1));
      const int sign = (rng() % 2 == 0) ? 1 : -1;
      braid.letters.push_back(sign * gen);
    }

    const auto position = static_cast<std::size_t>(rng() % (braid.letters.size() + 1));
    const int gen = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(braid.strands - 1));
    const int sign = (rng() % 2 == 0) ? 1 : -1;
    const BraidWord moved = insert_power(braid, position, gen, sign, corrupt_two_moves ? 2 : 3);

    const QuotientSummary before = summarize(braid);
    const QuotientSummary after = summarize(moved);
    if (before == after) {
      continue;
    }
    ++report.violations;
    if (report.counterexample.empty()) {
      std::ostringstream out;
      out << "braid \"" << to_text(braid) << "\" on " << braid.strands << " strands, insert sigma_"
          << gen << "^" << (sign > 0 ? "+" : "-") << (corrupt_two_moves ? 2 : 3) << " at letter "
          << position << " giving \"" << to_text(moved) << "\": " << describe(before)
          << " became " << describe(after);
      report.counterexample = out.str();
    }
  }
  report.passed = report.violations == 0;
  return report;
}

namespace {

std::string ranks_text(const std::array<int, 3>& ranks) {
  std::ostringstream out;
  out << ranks[0] << " " << ranks[1] << " " << ranks[2];
  return out.str();
}

}  // namespace

std::string to_text(const QuotientReport& r) {
  std::ostringstream out;
  out << "input: " << r.input << "\n"
      << "component_count: " << r.component_count << "\n"
      << "ambient_exponent: " << r.ambient_exponent << "\n"
      << "closure_ranks: " << ranks_text(r.closure_ranks) << "\n"
      << "order_exponent: " << r.order_exponent << "\n"
      << "h1_rank: " << r.h1_rank << "\n"
      << "verdict: " << to_string(r.verdict) << "\n"
      << "certificate: " << r.certificate << "\n"
      << "seed: " << r.seed << "\n";
  return out.str();
}

std::string to_json(const QuotientReport& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["component_count"] = r.component_count;
  j["ambient_exponent"] = r.ambient_exponent;
  j["closure_ranks"] = r.closure_ranks;
  j["order_exponent"] = r.order_exponent;
  j["h1_rank"] = r.h1_rank;
  j["verdict"] = to_string(r.verdict);
  j["seed"] = r.seed;
  return j.dump(2) + "\n";
}

std::string to_text(const InvarianceReport& r) {
  std::ostringstream out;
  out << "trials: " << r.trials << "\n"
      << "seed: " << r.seed << "\n"
      << "max_strands: " << r.max_strands << "\n"
      << "max_length: " << r.max_length << "\n"
      << "violations: " << r.violations << "\n"
      << "passed: " << (r.passed ? "true" : "false") << "\n";
  if (!r.counterexample.empty()) {
    out << "counterexample: " << r.counterexample << "\n";
  }
  return out.str();
}

std::string to_json(const InvarianceReport& r) {
  nlohmann::ordered_json j;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["max_strands"] = r.max_strands;
  j["max_length"] = r.max_length;
  j["violations"] = r.violations;
  j["passed"] = r.passed;
  j["counterexample"] = r.counterexample;
  return j.dump(2) + "\n";
}

}  // namespace b3
