#pragma once

#include <array>
#include <cstdint>

#include "b3/burnside.hpp"
#include "b3/gf3.hpp"

namespace b3 {

// Graded Lie ring over GF(3) associated with the lower central series of the
// rank-n exponent-3 group: weights 1..3, bracket alternating, weight-3 part
// central, brackets of total weight > 3 vanish.
struct LieElement {
  Gf3Vector w1;  // length n
  Gf3Vector w2;  // basis [x_j, x_i], i < j, matching the group's b_ij
  Gf3Vector w3;  // basis [[x_i, x_j], x_k], i < j < k, matching c_ijk

  bool is_zero() const { return w1.is_zero() && w2.is_zero() && w3.is_zero(); }
  bool operator==(const LieElement&) const = default;
};

LieElement lie_zero(const BurnsideContext& ctx);
LieElement lie_generator(const BurnsideContext& ctx, int i);

LieElement lie_add(const BurnsideContext& ctx, const LieElement& a, const LieElement& b);
LieElement lie_scale(const BurnsideContext& ctx, int c, const LieElement& a);
LieElement bracket(const BurnsideContext& ctx, const LieElement& a, const LieElement& b);

// Leading graded piece of a group element: the coordinates of its lowest
// nonzero weight, zero for the identity.
LieElement graded_image(const BurnsideContext& ctx, const BurnsideElement& g);

// The four closure relators of the doubled full twist on five strands lie in
// the weight-3 layer of the rank-4 ring. This matrix expresses them in the
// basis e1 = [[x2,x3],x4], e2 = [[x1,x3],x4], e3 = [[x1,x2],x4],
// e4 = [[x1,x2],x3]. Entries are GF(3) residues.
struct RelatorBasisMatrix {
  std::array<std::array<std::uint8_t, 4>, 4> rows;
  std::uint8_t det = 0;
  std::size_t rank = 0;
};

RelatorBasisMatrix third_layer_relator_matrix();

// The e-basis triples above, in row order.
std::array<std::array<int, 3>, 4> e_basis_triples();

}  // namespace b3
