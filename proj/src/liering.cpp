#include "b3/liering.hpp"

#include "b3/errors.hpp"

namespace b3 {

namespace {

void check_lie(const BurnsideContext& ctx, const LieElement& a) {
  if (a.w1.size() != static_cast<std::size_t>(ctx.generators()) ||
      a.w2.size() != ctx.pair_count() || a.w3.size() != ctx.triple_count()) {
    throw ContextError("Lie element does not belong to a rank-" +
                       std::to_string(ctx.generators()) + " context");
  }
}

}  // namespace

LieElement lie_zero(const BurnsideContext& ctx) {
  return LieElement{Gf3Vector(static_cast<std::size_t>(ctx.generators())),
                    Gf3Vector(ctx.pair_count()), Gf3Vector(ctx.triple_count())};
}

LieElement lie_generator(const BurnsideContext& ctx, int i) {
  LieElement out = lie_zero(ctx);
  if (i < 1 || i > ctx.generators()) throw RangeError("generator index out of range");
  out.w1.set(static_cast<std::size_t>(i - 1), 1);
  return out;
}

LieElement lie_add(const BurnsideContext& ctx, const LieElement& a, const LieElement& b) {
  check_lie(ctx, a);
  check_lie(ctx, b);
  LieElement out = a;
  out.w1.accumulate(b.w1);
  out.w2.accumulate(b.w2);
  out.w3.accumulate(b.w3);
  return out;
}

LieElement lie_scale(const BurnsideContext& ctx, int c, const LieElement& a) {
  check_lie(ctx, a);
  LieElement out = lie_zero(ctx);
  out.w1.accumulate_scaled(c, a.w1);
  out.w2.accumulate_scaled(c, a.w2);
  out.w3.accumulate_scaled(c, a.w3);
  return out;
}

// Bilinear bracket on the graded pieces. Weight (1,1) lands in weight 2 with
// [x_i, x_j] = -B_ij for i < j (B_ij is the class of b_ij = [a_j, a_i]);
// weights (2,1) and (1,2) land in weight 3 through the alternating triple;
// everything of total weight > 3 is zero.
LieElement bracket(const BurnsideContext& ctx, const LieElement& a, const LieElement& b) {
  check_lie(ctx, a);
  check_lie(ctx, b);
  int n = ctx.generators();
  LieElement out = lie_zero(ctx);

  for (int i = 1; i <= n; ++i) {
    std::uint8_t ai = a.w1[static_cast<std::size_t>(i - 1)];
    if (ai == 0) continue;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      std::uint8_t bj = b.w1[static_cast<std::size_t>(j - 1)];
      if (bj == 0) continue;
      int coeff = ai * bj;
      if (i < j) {
        out.w2.add_at(static_cast<std::size_t>(ctx.pair_index(i, j)), -coeff);
      } else {
        out.w2.add_at(static_cast<std::size_t>(ctx.pair_index(j, i)), coeff);
      }
    }
  }

  for (std::size_t p = 0; p < ctx.pair_count(); ++p) {
    const auto [u, v] = ctx.pair_of_index(static_cast<std::int32_t>(p));
    for (int k = 1; k <= n; ++k) {
      SignedTriple t = ctx.weight3_bracket(u, v, k);
      if (t.sign == 0) continue;
      std::uint8_t a2 = a.w2[p];
      std::uint8_t b1 = b.w1[static_cast<std::size_t>(k - 1)];
      if (a2 != 0 && b1 != 0) {
        out.w3.add_at(static_cast<std::size_t>(t.index), -t.sign * a2 * b1);  // [B_uv, x_k]
      }
      std::uint8_t a1 = a.w1[static_cast<std::size_t>(k - 1)];
      std::uint8_t b2 = b.w2[p];
      if (a1 != 0 && b2 != 0) {
        out.w3.add_at(static_cast<std::size_t>(t.index), t.sign * a1 * b2);   // [x_k, B_uv]
      }
    }
  }
  return out;
}

LieElement graded_image(const BurnsideContext& ctx, const BurnsideElement& g) {
  LieElement out = lie_zero(ctx);
  if (!g.alpha.is_zero()) {
    out.w1 = g.alpha;
  } else if (!g.beta.is_zero()) {
    out.w2 = g.beta;
  } else {
    out.w3 = g.gamma;
  }
  return out;
}

std::array<std::array<int, 3>, 4> e_basis_triples() {
  return {{{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}}};
}

RelatorBasisMatrix third_layer_relator_matrix() {
  BurnsideContext ctx(4);
  auto combo = [&](std::array<int, 4> coeffs) {
    LieElement out = lie_zero(ctx);
    for (int i = 1; i <= 4; ++i) {
      out = lie_add(ctx, out, lie_scale(ctx, coeffs[static_cast<std::size_t>(i - 1)],
                                        lie_generator(ctx, i)));
    }
    return out;
  };

  // (-x2 + x3 - x4)(-x1) + (x3 - x4)(x2) + (x4)(x3), products read as brackets.
  LieElement u = bracket(ctx, combo({0, -1, 1, -1}), combo({-1, 0, 0, 0}));
  u = lie_add(ctx, u, bracket(ctx, combo({0, 0, 1, -1}), combo({0, 1, 0, 0})));
  u = lie_add(ctx, u, bracket(ctx, combo({0, 0, 0, 1}), combo({0, 0, 1, 0})));

  RelatorBasisMatrix m;
  Gf3Basis span(4);
  for (int i = 1; i <= 4; ++i) {
    std::array<int, 4> v{-1, 1, -1, 1};  // x_i - x1 + x2 - x3 + x4
    v[static_cast<std::size_t>(i - 1)] += 1;
    LieElement p = bracket(ctx, u, combo(v));
    Gf3Vector row(4);
    const auto triples = e_basis_triples();
    for (std::size_t col = 0; col < 4; ++col) {
      const auto& [a, b, c] = triples[col];
      SignedTriple t = ctx.weight3_bracket(a, b, c);
      row.set(col, p.w3[static_cast<std::size_t>(t.index)]);  // sign is +1 on sorted triples
    }
    for (std::size_t col = 0; col < 4; ++col) m.rows[static_cast<std::size_t>(i - 1)][col] = row[col];
    span.insert(row);
  }
  m.rank = span.rank();

  // Determinant mod 3 by elimination.
  std::array<std::array<int, 4>, 4> a;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) a[r][c] = m.rows[r][c];
  }
  int det = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && a[pivot][col] == 0) ++pivot;
    if (pivot == 4) {
      det = 0;
      break;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = (3 - det) % 3;
    }
    det = (det * a[col][col]) % 3;
    int inv = a[col][col] == 1 ? 1 : 2;  // inverse mod 3
    for (std::size_t r = col + 1; r < 4; ++r) {
      if (a[r][col] == 0) continue;
      int f = (a[r][col] * inv) % 3;
      for (std::size_t c = col; c < 4; ++c) a[r][c] = ((a[r][c] - f * a[col][c]) % 3 + 3) % 3;
    }
  }
  m.det = static_cast<std::uint8_t>(det);
  return m;
}

}  // namespace b3
