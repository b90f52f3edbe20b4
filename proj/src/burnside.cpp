#include "b3/burnside.hpp"

#include <algorithm>
#include <deque>

#include "b3/errors.hpp"

namespace b3 {

BurnsideContext::BurnsideContext(int n) : n_(n) {
  if (n < 0 || n > kMaxGenerators) {
    throw RangeError("generator count must be in 0.." + std::to_string(kMaxGenerators) +
                     ", got " + std::to_string(n));
  }
  pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pair_index_[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
          static_cast<std::int32_t>(pair_of_index_.size());
      pair_of_index_.emplace_back(i, j);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        triple_of_index_.push_back({i, j, k});
      }
    }
  }
  // Signed sorted-triple table for all ordered (i,j,k); repeats get sign 0.
  bracket_.assign(static_cast<std::size_t>(n) * n * n, SignedTriple{});
  std::int32_t t = 0;
  std::vector<std::int32_t> triple_rank(static_cast<std::size_t>(n) * n * n, -1);
  for (const auto& [i, j, k] : triple_of_index_) {
    triple_rank[static_cast<std::size_t>(i - 1) * n * n + (j - 1) * n + (k - 1)] = t++;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        std::array<int, 3> s{i, j, k};
        std::int8_t sign = 1;
        if (s[0] > s[1]) { std::swap(s[0], s[1]); sign = -sign; }
        if (s[1] > s[2]) { std::swap(s[1], s[2]); sign = -sign; }
        if (s[0] > s[1]) { std::swap(s[0], s[1]); sign = -sign; }
        std::int32_t idx =
            triple_rank[static_cast<std::size_t>(s[0] - 1) * n * n + (s[1] - 1) * n + (s[2] - 1)];
        bracket_[static_cast<std::size_t>(i - 1) * n * n + (j - 1) * n + (k - 1)] = {sign, idx};
      }
    }
  }
}

void BurnsideContext::check_generator(int i) const {
  if (i < 1 || i > n_) {
    throw RangeError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
}

std::int32_t BurnsideContext::pair_index(int i, int j) const {
  check_generator(i);
  check_generator(j);
  if (i >= j) throw RangeError("pair_index requires i < j");
  return pair_index_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

SignedTriple BurnsideContext::weight3_bracket(int i, int j, int k) const {
  check_generator(i);
  check_generator(j);
  check_generator(k);
  return bracket_[static_cast<std::size_t>(i - 1) * n_ * n_ + (j - 1) * n_ + (k - 1)];
}

BurnsideElement BurnsideContext::identity() const {
  return BurnsideElement{Gf3Vector(static_cast<std::size_t>(n_)), Gf3Vector(pair_count()),
                         Gf3Vector(triple_count())};
}

BurnsideElement BurnsideContext::generator(int i) const {
  check_generator(i);
  BurnsideElement g = identity();
  g.alpha.set(static_cast<std::size_t>(i - 1), 1);
  return g;
}

void BurnsideContext::check_element(const BurnsideElement& x) const {
  if (x.alpha.size() != static_cast<std::size_t>(n_) || x.beta.size() != pair_count() ||
      x.gamma.size() != triple_count()) {
    throw ContextError("element does not belong to a rank-" + std::to_string(n_) + " context");
  }
}

// Appending a_g to a normal form, collected from the left. The letter crosses
// the central block for free, crosses the b-block emitting
// [b_uv, a_g] = -T(u,v,g) per stored power, and settles into the a-block
// emitting b_gm^alpha_m for m > g; each emitted b_gm then crosses the a-blocks
// above m, emitting T(m,g,m') per pair. Brackets with a repeated index vanish,
// which is also why the exponent-3 wraparound needs no correction terms.
void BurnsideContext::append_generator(BurnsideElement& x, int g) const {
  for (std::size_t p = 0; p < pair_count(); ++p) {
    std::uint8_t bp = x.beta[p];
    if (bp == 0) continue;
    const auto& [u, v] = pair_of_index_[p];
    SignedTriple t = weight3_bracket(u, v, g);
    if (t.sign != 0) x.gamma.add_at(static_cast<std::size_t>(t.index), -t.sign * bp);
  }
  for (int m = g + 1; m <= n_; ++m) {
    std::uint8_t am = x.alpha[static_cast<std::size_t>(m - 1)];
    if (am == 0) continue;
    for (int m2 = m + 1; m2 <= n_; ++m2) {
      std::uint8_t am2 = x.alpha[static_cast<std::size_t>(m2 - 1)];
      if (am2 == 0) continue;
      SignedTriple t = weight3_bracket(m, g, m2);
      x.gamma.add_at(static_cast<std::size_t>(t.index), t.sign * am * am2);
    }
  }
  for (int m = g + 1; m <= n_; ++m) {
    std::uint8_t am = x.alpha[static_cast<std::size_t>(m - 1)];
    if (am != 0) {
      x.beta.add_at(static_cast<std::size_t>(pair_index_[static_cast<std::size_t>(g - 1) * n_ + (m - 1)]), am);
    }
  }
  x.alpha.add_at(static_cast<std::size_t>(g - 1), 1);
}

BurnsideElement BurnsideContext::multiply(const BurnsideElement& x, const BurnsideElement& y) const {
  check_element(x);
  check_element(y);
  BurnsideElement out = x;
  for (int g = 1; g <= n_; ++g) {
    std::uint8_t reps = y.alpha[static_cast<std::size_t>(g - 1)];
    for (std::uint8_t r = 0; r < reps; ++r) append_generator(out, g);
  }
  out.beta.accumulate(y.beta);
  out.gamma.accumulate(y.gamma);
  return out;
}

BurnsideElement BurnsideContext::inverse(const BurnsideElement& x) const {
  return multiply(x, x);
}

BurnsideElement BurnsideContext::power(const BurnsideElement& x, int k) const {
  int r = k % 3;
  if (r < 0) r += 3;
  if (r == 0) return identity();
  if (r == 1) return x;
  return multiply(x, x);
}

BurnsideElement BurnsideContext::commutator(const BurnsideElement& x, const BurnsideElement& y) const {
  return multiply(multiply(multiply(x, y), inverse(x)), inverse(y));
}

BurnsideElement BurnsideContext::evaluate(const FreeWord& w) const {
  BurnsideElement out = identity();
  for (std::int32_t l : w.letters()) {
    int g = std::abs(l);
    check_generator(g);
    append_generator(out, g);
    if (l < 0) append_generator(out, g);  // a_g^-1 = a_g^2
  }
  return out;
}

ConsistencyReport BurnsideContext::consistency_check() const {
  if (n_ > 6) throw RangeError("consistency_check is limited to ranks 0..6");
  ConsistencyReport report;
  auto fail = [&](const std::string& what) {
    if (report.passed) {
      report.passed = false;
      report.first_violation = what;
    }
  };

  std::vector<BurnsideElement> gen(static_cast<std::size_t>(n_) + 1, identity());
  for (int i = 1; i <= n_; ++i) gen[static_cast<std::size_t>(i)] = generator(i);

  for (int k = 1; k <= n_; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 1; i < j; ++i) {
        ++report.witnesses_checked;
        BurnsideElement lhs = multiply(multiply(gen[k], gen[j]), gen[i]);
        BurnsideElement rhs = multiply(gen[k], multiply(gen[j], gen[i]));
        if (!(lhs == rhs)) {
          fail("associativity (a" + std::to_string(k) + " a" + std::to_string(j) + ") a" +
               std::to_string(i));
        }
      }
    }
  }
  for (int j = 1; j <= n_; ++j) {
    for (int i = 1; i <= n_; ++i) {
      ++report.witnesses_checked;
      BurnsideElement cube = multiply(multiply(gen[j], gen[j]), gen[j]);
      BurnsideElement lhs = multiply(cube, gen[i]);
      BurnsideElement rhs = multiply(multiply(gen[j], gen[j]), multiply(gen[j], gen[i]));
      if (!(lhs == rhs)) {
        fail("power relation a" + std::to_string(j) + "^3 against a" + std::to_string(i));
      }
    }
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      ++report.witnesses_checked;
      BurnsideElement p = multiply(gen[i], gen[j]);
      if (!multiply(multiply(p, p), p).is_identity()) {
        fail("(a" + std::to_string(i) + " a" + std::to_string(j) + ")^3 != 1");
      }
    }
  }
  return report;
}

GradedSubgroup::GradedSubgroup(const BurnsideContext& ctx) : ctx_(&ctx) {}

const Gf3Vector& GradedSubgroup::coords(const BurnsideElement& g, int layer) const {
  switch (layer) {
    case 0: return g.alpha;
    case 1: return g.beta;
    default: return g.gamma;
  }
}

BurnsideElement GradedSubgroup::sift(BurnsideElement g) const {
  for (int layer = 0; layer < 3; ++layer) {
    for (const Row& row : rows_[static_cast<std::size_t>(layer)]) {
      std::uint8_t c = coords(g, layer)[static_cast<std::size_t>(row.pivot)];
      if (c != 0) g = ctx_->multiply(g, ctx_->power(row.witness, 3 - c));
    }
    if (!coords(g, layer).is_zero()) return g;
  }
  return g;
}

std::optional<BurnsideElement> GradedSubgroup::insert(BurnsideElement g) {
  g = sift(std::move(g));
  int layer = -1;
  for (int l = 0; l < 3; ++l) {
    if (!coords(g, l).is_zero()) {
      layer = l;
      break;
    }
  }
  if (layer < 0) return std::nullopt;

  std::ptrdiff_t pivot = coords(g, layer).leading_index();
  if (coords(g, layer)[static_cast<std::size_t>(pivot)] == 2) g = ctx_->multiply(g, g);

  auto& rows = rows_[static_cast<std::size_t>(layer)];
  for (Row& row : rows) {
    std::uint8_t c = coords(row.witness, layer)[static_cast<std::size_t>(pivot)];
    if (c != 0) row.witness = ctx_->multiply(row.witness, ctx_->power(g, 3 - c));
  }
  auto pos = std::find_if(rows.begin(), rows.end(),
                          [&](const Row& row) { return row.pivot > pivot; });
  pos = rows.insert(pos, Row{g, pivot});
  BurnsideElement stored = pos->witness;
  rebuild_view(layer);
  return stored;
}

void GradedSubgroup::rebuild_view(int layer) {
  auto& view = witness_view_[static_cast<std::size_t>(layer)];
  view.clear();
  for (const Row& row : rows_[static_cast<std::size_t>(layer)]) view.push_back(row.witness);
}

std::array<std::size_t, 3> GradedSubgroup::layer_ranks() const {
  return {rows_[0].size(), rows_[1].size(), rows_[2].size()};
}

std::size_t GradedSubgroup::total_rank() const {
  return rows_[0].size() + rows_[1].size() + rows_[2].size();
}

const std::vector<BurnsideElement>& GradedSubgroup::layer_witnesses(int layer) const {
  if (layer < 1 || layer > 3) throw RangeError("layer must be 1..3");
  return witness_view_[static_cast<std::size_t>(layer - 1)];
}

Gf3Basis GradedSubgroup::layer_basis(int layer) const {
  if (layer < 1 || layer > 3) throw RangeError("layer must be 1..3");
  std::size_t cols = layer == 1 ? static_cast<std::size_t>(ctx_->generators())
                   : layer == 2 ? ctx_->pair_count()
                                : ctx_->triple_count();
  Gf3Basis basis(cols);
  for (const Row& row : rows_[static_cast<std::size_t>(layer - 1)]) {
    basis.insert(coords(row.witness, layer - 1));
  }
  return basis;
}

GradedSubgroup normal_closure(const std::vector<BurnsideElement>& relators,
                              const BurnsideContext& ctx) {
  GradedSubgroup sub(ctx);
  std::deque<BurnsideElement> queue(relators.begin(), relators.end());
  while (!queue.empty()) {
    BurnsideElement g = std::move(queue.front());
    queue.pop_front();
    if (auto stored = sub.insert(std::move(g))) {
      for (int i = 1; i <= ctx.generators(); ++i) {
        queue.push_back(ctx.commutator(*stored, ctx.generator(i)));
      }
    }
  }
  sub.mark_closed();
  return sub;
}

std::size_t quotient_order_exponent(const std::vector<BurnsideElement>& relators,
                                    const BurnsideContext& ctx) {
  return ctx.total_exponent() - normal_closure(relators, ctx).total_rank();
}

}  // namespace b3
