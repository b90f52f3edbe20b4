#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "b3/gf3.hpp"
#include "b3/words.hpp"

namespace b3 {

// Element of the free exponent-3 group of rank n in polycyclic normal form
//   a1^alpha1 .. an^alphan  *  prod b_ij^beta_ij  *  prod c_ijk^gamma_ijk
// with b_ij = [a_j, a_i] (i < j, lexicographic) and c_ijk = [[a_i, a_j], a_k]
// (i < j < k, lexicographic). Commutator convention: [x, y] = x y x^-1 y^-1.
struct BurnsideElement {
  Gf3Vector alpha;  // length n
  Gf3Vector beta;   // length n(n-1)/2
  Gf3Vector gamma;  // length n(n-1)(n-2)/6

  bool is_identity() const { return alpha.is_zero() && beta.is_zero() && gamma.is_zero(); }
  bool operator==(const BurnsideElement&) const = default;
};

// Image of [[a_i, a_j], a_k] in the weight-3 basis: sign 0 when two of the
// indices coincide, otherwise +-1 on the sorted triple.
struct SignedTriple {
  std::int8_t sign = 0;
  std::int32_t index = -1;
};

struct ConsistencyReport {
  bool passed = true;
  std::uint64_t witnesses_checked = 0;
  std::string first_violation;  // empty when passed
};

class BurnsideContext {
 public:
  static constexpr int kMaxGenerators = 30;

  // n = 0 gives the trivial group (a closed 1-braid has no generators).
  explicit BurnsideContext(int n);

  int generators() const { return n_; }
  std::size_t pair_count() const { return pair_of_index_.size(); }
  std::size_t triple_count() const { return triple_of_index_.size(); }
  // n + C(n,2) + C(n,3): the group order is 3 to this power.
  std::size_t total_exponent() const { return static_cast<std::size_t>(n_) + pair_count() + triple_count(); }

  // 1-based generator indices throughout; i < j (< k) required.
  std::int32_t pair_index(int i, int j) const;
  std::pair<int, int> pair_of_index(std::int32_t index) const { return pair_of_index_.at(index); }
  std::array<int, 3> triple_of_index(std::int32_t index) const { return triple_of_index_.at(index); }

  SignedTriple weight3_bracket(int i, int j, int k) const;

  BurnsideElement identity() const;
  BurnsideElement generator(int i) const;

  BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) const;
  BurnsideElement inverse(const BurnsideElement& x) const;  // x^2, since x^3 = 1
  BurnsideElement power(const BurnsideElement& x, int k) const;
  BurnsideElement commutator(const BurnsideElement& x, const BurnsideElement& y) const;
  BurnsideElement evaluate(const FreeWord& w) const;

  // Finite witness list for the presentation: triple associativity on the
  // weight-1 generators, power/commutation interplay a_j^3 a_i = a_j^2 (a_j a_i),
  // and (a_i a_j)^3 = 1. Requires n <= 6.
  ConsistencyReport consistency_check() const;

 private:
  void check_element(const BurnsideElement& x) const;
  void check_generator(int i) const;
  // Right-multiply the normal form by one positive letter a_g.
  void append_generator(BurnsideElement& x, int g) const;

  int n_;
  std::vector<std::int32_t> pair_index_;             // n*n, -1 off the i<j grid
  std::vector<std::pair<int, int>> pair_of_index_;
  std::vector<SignedTriple> bracket_;                // n*n*n, all (i,j,k)
  std::vector<std::array<int, 3>> triple_of_index_;
};

// Subgroup stored as one witness element per pivot, layered by weight: layer 1
// rows are alpha parts, layer 2 rows beta parts of witnesses with zero alpha,
// layer 3 rows gamma parts of central witnesses. Each layer is kept in reduced
// echelon form, so layer bases are canonical for the subgroup.
class GradedSubgroup {
 public:
  explicit GradedSubgroup(const BurnsideContext& ctx);

  // Reduce g by stored witnesses, layer by layer. The result is the identity
  // exactly when g is a member; otherwise its first nonzero layer has a
  // leading column with no pivot in that layer.
  BurnsideElement sift(BurnsideElement g) const;

  // Sift and store the residue when it is nonzero. Returns a copy of the
  // stored (normalized) witness, or nullopt when g was already a member.
  std::optional<BurnsideElement> insert(BurnsideElement g);

  bool contains(const BurnsideElement& g) const { return sift(g).is_identity(); }

  std::array<std::size_t, 3> layer_ranks() const;
  std::size_t total_rank() const;
  const std::vector<BurnsideElement>& layer_witnesses(int layer) const;  // layer 1..3
  Gf3Basis layer_basis(int layer) const;                                 // canonical rows

  bool closed() const { return closed_; }
  void mark_closed() { closed_ = true; }

 private:
  struct Row {
    BurnsideElement witness;
    std::ptrdiff_t pivot;
  };

  const Gf3Vector& coords(const BurnsideElement& g, int layer) const;

  const BurnsideContext* ctx_;
  std::array<std::vector<Row>, 3> rows_;          // pivot-ascending
  std::array<std::vector<BurnsideElement>, 3> witness_view_;  // rebuilt on change
  bool closed_ = false;

  void rebuild_view(int layer);
};

// Smallest normal subgroup containing the relators: work queue seeded with the
// relators; every newly stored witness enqueues its commutator with each
// generator. On return the subgroup is marked closed.
GradedSubgroup normal_closure(const std::vector<BurnsideElement>& relators,
                              const BurnsideContext& ctx);

// total_exponent minus the closure's total rank: the quotient group has order
// 3 to this power.
std::size_t quotient_order_exponent(const std::vector<BurnsideElement>& relators,
                                    const BurnsideContext& ctx);

}  // namespace b3
