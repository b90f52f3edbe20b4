#include "b3/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "b3/errors.hpp"

namespace b3 {

FreeWord FreeWord::generator(std::int32_t g) {
  if (g < 1) throw RangeError("generator index must be >= 1, got " + std::to_string(g));
  FreeWord w;
  w.letters_.push_back(g);
  return w;
}

FreeWord FreeWord::from_letters(const std::vector<std::int32_t>& letters) {
  FreeWord w;
  for (std::int32_t l : letters) w.push(l);
  return w;
}

std::int32_t FreeWord::max_generator() const {
  std::int32_t m = 0;
  for (std::int32_t l : letters_) m = std::max(m, std::abs(l));
  return m;
}

void FreeWord::push(std::int32_t signed_gen) {
  if (signed_gen == 0 || std::abs(signed_gen) < 1) {
    throw RangeError("letter must be a nonzero signed generator index");
  }
  if (!letters_.empty() && letters_.back() == -signed_gen) {
    letters_.pop_back();
  } else {
    letters_.push_back(signed_gen);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back(-*it);  // reversal of a reduced word stays reduced
  }
  return out;
}

Gf3Vector FreeWord::exponent_sums_mod3(std::int32_t ngen) const {
  Gf3Vector sums(static_cast<std::size_t>(ngen));
  for (std::int32_t l : letters_) {
    std::int32_t g = std::abs(l);
    if (g > ngen) {
      throw RangeError("word uses generator x" + std::to_string(g) + " beyond rank " +
                       std::to_string(ngen));
    }
    sums.add_at(static_cast<std::size_t>(g - 1), l > 0 ? 1 : -1);
  }
  return sums;
}

FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (std::int32_t l : b.letters()) out.push(l);
  return out;
}

FreeWord substitute(const FreeWord& w, const std::map<std::int32_t, FreeWord>& images) {
  FreeWord out;
  for (std::int32_t l : w.letters()) {
    std::int32_t g = std::abs(l);
    auto it = images.find(g);
    if (it == images.end()) {
      throw UndefinedGeneratorError("no image for generator x" + std::to_string(g));
    }
    const FreeWord image = l > 0 ? it->second : it->second.inverse();
    for (std::int32_t m : image.letters()) out.push(m);
  }
  return out;
}

FreeWord commutator_word(const FreeWord& a, const FreeWord& b) {
  return concat(concat(a, b), concat(a.inverse(), b.inverse()));
}

namespace {

bool parse_int(std::string_view text, std::size_t& pos, std::int64_t& value) {
  std::size_t start = pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t v = 0;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    if (v > 1'000'000) throw ParseError("integer too large", start);
    ++pos;
    ++digits;
  }
  if (digits == 0) {
    pos = start;
    return false;
  }
  value = negative ? -v : v;
  return true;
}

}  // namespace

FreeWord parse_word(std::string_view text) {
  FreeWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t token_start = pos;
    if (text[pos] != 'x') throw ParseError("expected generator like x1 or x2^-1", pos);
    ++pos;
    std::int64_t gen = 0;
    if (!parse_int(text, pos, gen) || gen < 1) {
      throw ParseError("generator needs a positive index", token_start);
    }
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (!parse_int(text, pos, exp)) throw ParseError("exponent expected after ^", pos);
    }
    std::int32_t letter = exp >= 0 ? static_cast<std::int32_t>(gen) : -static_cast<std::int32_t>(gen);
    for (std::int64_t i = 0; i < std::llabs(exp); ++i) out.push(letter);
  }
  return out;
}

std::string to_text(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::int32_t l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

}  // namespace b3
