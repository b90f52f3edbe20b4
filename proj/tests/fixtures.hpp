// Frozen reference inputs and independent oracles shared by the test binaries.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "b3/linkio.hpp"
#include "b3/words.hpp"

namespace fixtures {

// Transported labels of the doubled full twist on five strands: the i-th exit
// label, written over the entry labels x1..x5.
inline std::string q_word_text(int i) {
  return "x1 x2^-1 x3 x4^-1 x5 x1^-1 x2 x3^-1 x4 x5^-1 x" + std::to_string(i) +
         " x5^-1 x4 x3^-1 x2 x1^-1 x5 x4^-1 x3 x2^-1 x1";
}

// Closure relators of the same braid after eliminating x5: all four lie in the
// third lower-central layer of the rank-4 group.
inline std::string p_word_text(int i) {
  return "x1 x2^-1 x3 x4^-1 x1^-1 x2 x3^-1 x4 x" + std::to_string(i) +
         " x4 x3^-1 x2 x1^-1 x4^-1 x3 x2^-1 x1 x" + std::to_string(i) + "^-1";
}

inline b3::BraidWord double_full_twist_5() { return b3::parse_braid("(1 2 3 4)^10"); }

inline b3::BraidWord borromean_braid() { return b3::parse_braid("(1 -2)^3"); }

// Trefoil as the closure of sigma_1^3, arcs numbered along the knot.
inline std::string trefoil_pd_text() {
  return "# trefoil, three crossings\n"
         "X 1 2 3\n"
         "X 3 1 2\n"
         "\n"
         "X 2 3 1\n";
}

// Figure-eight knot as the closure of (sigma_1 sigma_2^-1)^2, using the
// four-field crossing form (in, over, out, over).
inline std::string figure_eight_pd_text() {
  return "X 2 1 4 1\n"
         "X 1 3 2 3\n"
         "X 3 4 1 4\n"
         "X 4 2 3 2\n";
}

// Independent coloring oracle: a Fox 3-coloring assigns a residue to every
// strand position and propagates through each crossing by out = 2*over - in;
// a coloring of the closure is an initial vector the braid maps to itself.
inline std::vector<int> fox_propagate(const b3::BraidWord& b, std::vector<int> colors) {
  for (const std::int32_t letter : b.letters) {
    const std::size_t i = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
    if (letter > 0) {
      const int over = colors[i];
      const int in = colors[i + 1];
      colors[i] = ((2 * over - in) % 3 + 3) % 3;
      colors[i + 1] = over;
    } else {
      const int over = colors[i + 1];
      const int in = colors[i];
      colors[i + 1] = ((2 * over - in) % 3 + 3) % 3;
      colors[i] = over;
    }
  }
  return colors;
}

inline long fox_coloring_count(const b3::BraidWord& b) {
  long total = 1;
  for (int i = 0; i < b.strands; ++i) total *= 3;
  long count = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> colors(static_cast<std::size_t>(b.strands));
    long rest = code;
    for (auto& c : colors) {
      c = static_cast<int>(rest % 3);
      rest /= 3;
    }
    if (fox_propagate(b, colors) == colors) ++count;
  }
  return count;
}

inline long fox_coloring_count(const b3::PdCode& d) {
  long total = 1;
  for (std::int32_t i = 0; i < d.arc_count; ++i) total *= 3;
  long count = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> colors(static_cast<std::size_t>(d.arc_count));
    long rest = code;
    for (auto& c : colors) {
      c = static_cast<int>(rest % 3);
      rest /= 3;
    }
    bool ok = true;
    for (const auto& x : d.crossings) {
      const int over = colors[static_cast<std::size_t>(x.over) - 1];
      const int in = colors[static_cast<std::size_t>(x.under_in) - 1];
      const int out = colors[static_cast<std::size_t>(x.under_out) - 1];
      if ((in + out) % 3 != (2 * over) % 3) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace fixtures
