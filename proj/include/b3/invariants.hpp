#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "b3/linkio.hpp"

namespace b3 {

enum class Verdict {
  kObstructed,            // the quotient cannot come from a trivial link
  kConsistentWithTrivial, // order test cannot separate it from a trivial link
  kInconclusive,          // reserved: the decision rule currently always decides
};

std::string to_string(Verdict v);

// Everything the exponent-3 quotient of a link presentation determines.
struct QuotientReport {
  int ambient_exponent = 0;                 // group of the free quotient: 3^this
  std::array<int, 3> closure_ranks{0, 0, 0};
  int order_exponent = 0;                   // |quotient| = 3^this
  int h1_rank = 0;                          // Z3-homology rank of the double cover
  int component_count = 0;
  Verdict verdict = Verdict::kInconclusive;

  std::string certificate;  // narrative for the verdict
  std::string input;        // description of the diagram or braid
  std::uint64_t seed = 0;
};

// 3^order_exponent of the trivial k-component link: (k-1) + C(k-1,2) + C(k-1,3).
int trivial_link_exponent(int components);

// Full pipeline: evaluate the relators in the rank-m free exponent-3 group,
// take the normal closure, and compare against the trivial link with
// h1_rank + 1 components. Throws CapacityError beyond 30 generators.
QuotientReport burnside_group(const LinkPresentation& p);

// Rank of Z3-homology of the double branched cover: generator count minus the
// rank of the relators' exponent-sum matrix mod 3.
int h1_z3(const LinkPresentation& p);

struct ObstructionResult {
  Verdict verdict;
  std::string narrative;
};

ObstructionResult obstruction(const LinkPresentation& p);

// Insert sigma_gen^(3*sign) at letter index `position`.
BraidWord three_move(const BraidWord& b, std::size_t position, int gen, int sign);

// Remove a run of three equal letters starting at `position`.
BraidWord delete_three_move(const BraidWord& b, std::size_t position);

struct InvarianceReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int max_strands = 0;
  int max_length = 0;
  std::uint64_t violations = 0;
  bool passed = false;
  std::string counterexample;  // first violating pair, empty when passed
};

// Seeded random (braid, move) pairs; each braid's quotient summary
// (order_exponent, closure_ranks, h1_rank) must survive its move. With
// corrupt_two_moves the harness inserts sigma^2 instead, which must trip the
// comparison.
InvarianceReport invariance_suite(std::uint64_t trials, int max_strands, int max_length,
                                  std::uint64_t seed, bool corrupt_two_moves = false);

std::string to_text(const QuotientReport& r);
std::string to_json(const QuotientReport& r);
std::string to_text(const InvarianceReport& r);
std::string to_json(const InvarianceReport& r);

}  // namespace b3
