#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "b3/errors.hpp"

namespace b3 {

// Dense vector over GF(3). Entries are always canonical residues 0..2.
class Gf3Vector {
 public:
  Gf3Vector() = default;
  explicit Gf3Vector(std::size_t length) : e_(length, 0) {}
  Gf3Vector(std::initializer_list<int> values);

  std::size_t size() const { return e_.size(); }
  std::uint8_t operator[](std::size_t i) const { return e_[i]; }
  const std::uint8_t* data() const { return e_.data(); }

  void set(std::size_t i, int value);        // value reduced mod 3
  void add_at(std::size_t i, int delta);     // entry += delta mod 3

  bool is_zero() const;
  // Index of the first nonzero entry, -1 when the vector is zero.
  std::ptrdiff_t leading_index() const;

  void accumulate(const Gf3Vector& other);          // this += other
  void accumulate_sub(const Gf3Vector& other);      // this -= other
  // this += c * other with c in 0..2.
  void accumulate_scaled(int c, const Gf3Vector& other);
  void negate_in_place();
  Gf3Vector negated() const;

  bool operator==(const Gf3Vector&) const = default;

  std::string to_string() const;  // "1 0 2"

 private:
  void check_same_size(const Gf3Vector& other) const;

  std::vector<std::uint8_t> e_;
};

Gf3Vector add(const Gf3Vector& a, const Gf3Vector& b);
Gf3Vector sub(const Gf3Vector& a, const Gf3Vector& b);

// Row space in reduced echelon form: one pivot per row, pivot entry 1, pivot
// column zero in every other row, rows ordered by pivot column. Two bases for
// the same subspace therefore compare equal row by row.
class Gf3Basis {
 public:
  explicit Gf3Basis(std::size_t columns) : cols_(columns), pivot_row_(columns, -1) {}

  std::size_t columns() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Gf3Vector>& rows() const { return rows_; }

  // Row index owning this pivot column, -1 if none.
  std::int32_t pivot_row(std::size_t column) const;

  // Reduce v against the stored rows. The residue is zero exactly when v lies
  // in the span; otherwise its leading column has no pivot here.
  Gf3Vector sift(const Gf3Vector& v) const;

  // Sift and, if the residue is nonzero, store it (normalized, with
  // back-substitution into the other rows). True when the rank grew.
  bool insert(const Gf3Vector& v);

  bool contains(const Gf3Vector& v) const { return sift(v).is_zero(); }

  bool operator==(const Gf3Basis&) const = default;

 private:
  std::size_t cols_;
  std::vector<Gf3Vector> rows_;          // ordered by pivot column
  std::vector<std::int32_t> pivot_row_;  // column -> row index
};

}  // namespace b3
