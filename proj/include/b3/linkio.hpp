#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "b3/words.hpp"

namespace b3 {

// Open braid on `strands` strands. Letters are signed Artin generators:
// +i crosses positions i and i+1 with the strand entering at position i on
// top, -i is the mirror crossing.
struct BraidWord {
  int strands = 1;
  std::vector<std::int32_t> letters;

  bool operator==(const BraidWord&) const = default;
};

// Whitespace-separated signed integers, with parenthesized repetition groups:
// "(1 2 3 4)^10" or "1 -2 (3)^2". A negative repetition count inverts the
// group word. Strand count is max |letter| + 1 (minimum 1) unless overridden;
// the override must cover every letter.
BraidWord parse_braid(std::string_view text, int strands_override = 0);

std::string to_text(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// Exit position of the strand entering at each position (1-based).
std::vector<int> braid_permutation(const BraidWord& b);

// Components of the closure = cycles of the permutation.
int component_count(const BraidWord& b);

// Push the initial labels x1..xn through every crossing with the involutory
// rule out = over * in^-1 * over. On a positive crossing the strand entering
// at the lower position passes over. Entry i of the result is the label on
// the strand exiting at position i.
std::vector<FreeWord> core_transport(const BraidWord& b);

// Blackboard 2-parallel: each strand doubles, +-i becomes the band crossing
// (s_2i s_2i-1 s_2i+1 s_2i)^+-1 on twice as many strands.
BraidWord two_cable(const BraidWord& b);

// Presentation data for the closure of a braid or a planar diagram: exponent-3
// core presentation with one generator eliminated and one redundant relator
// dropped.
struct LinkPresentation {
  int generator_count = 0;
  std::vector<FreeWord> relators;
  int killed_generator = 0;  // original index of the eliminated generator
  int component_count = 0;
};

// Closure of b: generators x1..xn for the entry positions, relators
// (transport label of position i) * x_i^-1 for i < n, x_n eliminated, the
// n-th relator dropped.
LinkPresentation closed_braid_presentation(const BraidWord& b);

// One crossing of a diagram, arcs labelled 1..arc_count: the arc passing over,
// the under-arc entering, and the under-arc leaving.
struct PdCrossing {
  std::int32_t over = 0;
  std::int32_t under_in = 0;
  std::int32_t under_out = 0;
};

struct PdCode {
  std::vector<PdCrossing> crossings;
  std::int32_t arc_count = 0;
};

// One crossing per line. "X over under_in under_out", or the four-field form
// "X a b c d" read counterclockwise from the incoming under-arc (so a = in,
// b = over, c = out, and d must repeat the over arc). '#' starts a comment.
// Every arc must appear exactly once as under_in and once as under_out.
PdCode parse_pd(std::string_view text);

int component_count(const PdCode& d);

// Relator per crossing: y_over y_in^-1 y_over y_out^-1. Generators renumbered
// after eliminating one arc; one relator dropped.
LinkPresentation pd_presentation(const PdCode& d);  // kills arc 1, drops last relator
LinkPresentation pd_presentation_with_choices(const PdCode& d, std::int32_t killed_arc,
                                              std::size_t dropped_crossing);

}  // namespace b3
