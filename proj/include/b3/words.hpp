#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "b3/gf3.hpp"

namespace b3 {

// Freely reduced word in generators x1, x2, ... A letter is a signed generator
// index: +g for xg, -g for xg^-1. No adjacent letter pair ever cancels.
class FreeWord {
 public:
  FreeWord() = default;  // identity

  static FreeWord generator(std::int32_t g);
  static FreeWord from_letters(const std::vector<std::int32_t>& letters);

  const std::vector<std::int32_t>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  std::int32_t max_generator() const;

  // Append one letter, cancelling against the current tail.
  void push(std::int32_t signed_gen);

  FreeWord inverse() const;

  // Exponent sum of each generator, reduced mod 3. Every letter must use a
  // generator index <= ngen.
  Gf3Vector exponent_sums_mod3(std::int32_t ngen) const;

  bool operator==(const FreeWord&) const = default;

 private:
  std::vector<std::int32_t> letters_;
};

FreeWord concat(const FreeWord& a, const FreeWord& b);

// Replace every letter of w by the image of its generator; an inverse letter
// contributes the inverted image. Every generator occurring in w must have an
// image or UndefinedGeneratorError is thrown.
FreeWord substitute(const FreeWord& w, const std::map<std::int32_t, FreeWord>& images);

// a b a^-1 b^-1, freely reduced.
FreeWord commutator_word(const FreeWord& a, const FreeWord& b);

// Text form: whitespace-separated "x3" / "x3^-1"; an integer suffix ^k repeats
// the letter |k| times with the sign of k. Empty input is the identity.
FreeWord parse_word(std::string_view text);

// Inverse of parse_word; the identity renders as "1".
std::string to_text(const FreeWord& w);

}  // namespace b3
