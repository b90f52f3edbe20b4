#include "b3/linkio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "b3/errors.hpp"

namespace b3 {

namespace {

struct BraidLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return text[pos];
  }

  std::int64_t read_int() {
    skip_space();
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
    if (digits == 0) throw ParseError("integer expected", start);
    return negative ? -v : v;
  }
};

struct PositionedLetter {
  std::int32_t letter;
  std::size_t offset;
};

void parse_braid_seq(BraidLexer& lex, std::vector<PositionedLetter>& out, int depth) {
  while (!lex.done()) {
    char c = lex.peek();
    if (c == ')') return;
    if (c == '(') {
      std::size_t open = lex.pos;
      ++lex.pos;
      std::vector<PositionedLetter> group;
      parse_braid_seq(lex, group, depth + 1);
      if (lex.done() || lex.peek() != ')') throw ParseError("unclosed group", open);
      ++lex.pos;
      lex.skip_space();
      if (lex.pos >= lex.text.size() || lex.text[lex.pos] != '^') {
        throw ParseError("group needs a ^count suffix", lex.pos);
      }
      ++lex.pos;
      std::int64_t reps = lex.read_int();
      if (reps < 0) {
        std::vector<PositionedLetter> inverted(group.rbegin(), group.rend());
        for (auto& pl : inverted) pl.letter = -pl.letter;
        group = std::move(inverted);
        reps = -reps;
      }
      for (std::int64_t r = 0; r < reps; ++r) {
        out.insert(out.end(), group.begin(), group.end());
      }
      continue;
    }
    std::size_t at = lex.pos;
    std::int64_t v = lex.read_int();
    if (v == 0) throw ParseError("braid letter 0 is invalid", at);
    if (std::llabs(v) > 1'000'000) throw ParseError("braid letter out of range", at);
    out.push_back({static_cast<std::int32_t>(v), at});
  }
  if (depth > 0) return;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands_override) {
  BraidLexer lex{text};
  std::vector<PositionedLetter> letters;
  parse_braid_seq(lex, letters, 0);
  if (!lex.done()) throw ParseError("unexpected ')'", lex.pos);

  int needed = 1;
  for (const auto& pl : letters) needed = std::max(needed, std::abs(pl.letter) + 1);
  BraidWord b;
  if (strands_override == 0) {
    b.strands = needed;
  } else {
    if (strands_override < 1) throw ParseError("strand count must be positive", 0);
    b.strands = strands_override;
    for (const auto& pl : letters) {
      if (std::abs(pl.letter) + 1 > strands_override) {
        throw ParseError("letter " + std::to_string(pl.letter) + " needs more than " +
                             std::to_string(strands_override) + " strands",
                         pl.offset);
      }
    }
  }
  b.letters.reserve(letters.size());
  for (const auto& pl : letters) b.letters.push_back(pl.letter);
  return b;
}

std::string to_text(const BraidWord& b) {
  std::string out;
  for (std::int32_t l : b.letters) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out;
  out.strands = std::max(a.strands, b.strands);
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

namespace {

void check_braid(const BraidWord& b) {
  if (b.strands < 1) throw RangeError("braid needs at least one strand");
  for (std::int32_t l : b.letters) {
    int i = std::abs(l);
    if (l == 0 || i + 1 > b.strands) {
      throw RangeError("braid letter " + std::to_string(l) + " invalid on " +
                       std::to_string(b.strands) + " strands");
    }
  }
}

}  // namespace

std::vector<int> braid_permutation(const BraidWord& b) {
  check_braid(b);
  // occupant[p] = strand currently at position p (1-based).
  std::vector<int> occupant(static_cast<std::size_t>(b.strands) + 1);
  std::iota(occupant.begin(), occupant.end(), 0);
  for (std::int32_t l : b.letters) {
    int i = std::abs(l);
    std::swap(occupant[static_cast<std::size_t>(i)], occupant[static_cast<std::size_t>(i) + 1]);
  }
  std::vector<int> exit_of(static_cast<std::size_t>(b.strands) + 1);
  for (int p = 1; p <= b.strands; ++p) exit_of[static_cast<std::size_t>(occupant[static_cast<std::size_t>(p)])] = p;
  return std::vector<int>(exit_of.begin() + 1, exit_of.end());
}

int component_count(const BraidWord& b) {
  std::vector<int> perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    std::size_t p = s;
    while (!seen[p]) {
      seen[p] = true;
      p = static_cast<std::size_t>(perm[p] - 1);
    }
  }
  return cycles;
}

std::vector<FreeWord> core_transport(const BraidWord& b) {
  check_braid(b);
  std::vector<FreeWord> label;
  label.reserve(static_cast<std::size_t>(b.strands));
  for (int p = 1; p <= b.strands; ++p) label.push_back(FreeWord::generator(p));

  for (std::int32_t l : b.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;  // crossing spans i, i+1
    FreeWord over = l > 0 ? label[i] : label[i + 1];
    FreeWord under = l > 0 ? label[i + 1] : label[i];
    FreeWord out = concat(concat(over, under.inverse()), over);
    if (l > 0) {
      label[i] = std::move(out);   // under-strand exits at the lower position
      label[i + 1] = std::move(over);
    } else {
      label[i] = std::move(over);
      label[i + 1] = std::move(out);
    }
  }
  return label;
}

BraidWord two_cable(const BraidWord& b) {
  check_braid(b);
  BraidWord out;
  out.strands = 2 * b.strands;
  out.letters.reserve(b.letters.size() * 4);
  for (std::int32_t l : b.letters) {
    std::int32_t i = std::abs(l);
    if (l > 0) {
      out.letters.insert(out.letters.end(), {2 * i, 2 * i - 1, 2 * i + 1, 2 * i});
    } else {
      out.letters.insert(out.letters.end(), {-2 * i, -(2 * i + 1), -(2 * i - 1), -2 * i});
    }
  }
  return out;
}

LinkPresentation closed_braid_presentation(const BraidWord& b) {
  std::vector<FreeWord> labels = core_transport(b);
  int n = b.strands;

  std::map<std::int32_t, FreeWord> images;
  for (int g = 1; g < n; ++g) images[g] = FreeWord::generator(g);
  images[n] = FreeWord();  // eliminate the last strand's generator

  LinkPresentation p;
  p.generator_count = n - 1;
  p.killed_generator = n;
  p.component_count = component_count(b);
  for (int i = 1; i < n; ++i) {
    FreeWord relator = concat(substitute(labels[static_cast<std::size_t>(i - 1)], images),
                              FreeWord::generator(i).inverse());
    p.relators.push_back(std::move(relator));
  }
  return p;
}

PdCode parse_pd(std::string_view text) {
  PdCode code;
  std::size_t line_start = 0;
  std::size_t offset = 0;
  auto flush_line = [&](std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string head;
    if (!(in >> head)) return;
    if (head != "X") throw ParseError("crossing line must start with X", line_start);
    std::vector<std::int64_t> fields;
    std::int64_t v;
    while (in >> v) fields.push_back(v);
    if (!in.eof()) throw ParseError("malformed crossing field", line_start);
    PdCrossing c;
    if (fields.size() == 3) {
      c.over = static_cast<std::int32_t>(fields[0]);
      c.under_in = static_cast<std::int32_t>(fields[1]);
      c.under_out = static_cast<std::int32_t>(fields[2]);
    } else if (fields.size() == 4) {
      // Counterclockwise from the incoming under-arc; both over fields name
      // the same arc.
      if (fields[1] != fields[3]) {
        throw DiagramError("four-field crossing must repeat the over arc, got " +
                           std::to_string(fields[1]) + " vs " + std::to_string(fields[3]));
      }
      c.under_in = static_cast<std::int32_t>(fields[0]);
      c.over = static_cast<std::int32_t>(fields[1]);
      c.under_out = static_cast<std::int32_t>(fields[2]);
    } else {
      throw ParseError("crossing needs 3 or 4 arc labels", line_start);
    }
    if (c.over < 1 || c.under_in < 1 || c.under_out < 1) {
      throw DiagramError("arc labels must be positive");
    }
    code.crossings.push_back(c);
  };

  while (offset <= text.size()) {
    if (offset == text.size() || text[offset] == '\n') {
      flush_line(text.substr(line_start, offset - line_start));
      line_start = offset + 1;
    }
    ++offset;
  }

  for (const PdCrossing& c : code.crossings) {
    code.arc_count = std::max({code.arc_count, c.over, c.under_in, c.under_out});
  }
  std::vector<int> in_count(static_cast<std::size_t>(code.arc_count) + 1, 0);
  std::vector<int> out_count(static_cast<std::size_t>(code.arc_count) + 1, 0);
  for (const PdCrossing& c : code.crossings) {
    ++in_count[static_cast<std::size_t>(c.under_in)];
    ++out_count[static_cast<std::size_t>(c.under_out)];
  }
  for (std::int32_t a = 1; a <= code.arc_count; ++a) {
    if (in_count[static_cast<std::size_t>(a)] != 1 || out_count[static_cast<std::size_t>(a)] != 1) {
      throw DiagramError("arc " + std::to_string(a) +
                         " must enter one crossing as under_in and leave one as under_out");
    }
  }
  return code;
}

namespace {

int uf_find(std::vector<int>& parent, int a) {
  while (parent[static_cast<std::size_t>(a)] != a) {
    parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    a = parent[static_cast<std::size_t>(a)];
  }
  return a;
}

}  // namespace

int component_count(const PdCode& d) {
  if (d.arc_count == 0) return 0;
  std::vector<int> parent(static_cast<std::size_t>(d.arc_count) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const PdCrossing& c : d.crossings) {
    parent[static_cast<std::size_t>(uf_find(parent, c.under_in))] = uf_find(parent, c.under_out);
  }
  int components = 0;
  for (int a = 1; a <= d.arc_count; ++a) {
    if (uf_find(parent, a) == a) ++components;
  }
  return components;
}

LinkPresentation pd_presentation_with_choices(const PdCode& d, std::int32_t killed_arc,
                                              std::size_t dropped_crossing) {
  if (killed_arc < 1 || killed_arc > d.arc_count) throw RangeError("killed arc out of range");
  if (dropped_crossing >= d.crossings.size()) throw RangeError("dropped crossing out of range");

  LinkPresentation p;
  p.generator_count = d.arc_count - 1;
  p.killed_generator = killed_arc;
  p.component_count = component_count(d);

  auto gen_of_arc = [&](std::int32_t arc) -> std::int32_t {
    return arc < killed_arc ? arc : arc - 1;  // killed arc contributes nothing
  };
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    if (i == dropped_crossing) continue;
    const PdCrossing& c = d.crossings[i];
    FreeWord relator;
    auto push_arc = [&](std::int32_t arc, int sign) {
      if (arc == killed_arc) return;
      relator.push(sign * gen_of_arc(arc));
    };
    push_arc(c.over, 1);
    push_arc(c.under_in, -1);
    push_arc(c.over, 1);
    push_arc(c.under_out, -1);
    p.relators.push_back(std::move(relator));
  }
  return p;
}

LinkPresentation pd_presentation(const PdCode& d) {
  if (d.crossings.empty()) throw DiagramError("diagram has no crossings");
  return pd_presentation_with_choices(d, 1, d.crossings.size() - 1);
}

}  // namespace b3
