#include "b3/gf3.hpp"

#include <algorithm>

#include "b3/gf3_kernels.hpp"

namespace b3 {

namespace {

std::uint8_t reduce_mod3(int value) {
  int r = value % 3;
  if (r < 0) r += 3;
  return static_cast<std::uint8_t>(r);
}

}  // namespace

Gf3Vector::Gf3Vector(std::initializer_list<int> values) {
  e_.reserve(values.size());
  for (int v : values) e_.push_back(reduce_mod3(v));
}

void Gf3Vector::set(std::size_t i, int value) {
  if (i >= e_.size()) throw RangeError("vector index out of range");
  e_[i] = reduce_mod3(value);
}

void Gf3Vector::add_at(std::size_t i, int delta) {
  if (i >= e_.size()) throw RangeError("vector index out of range");
  e_[i] = reduce_mod3(e_[i] + delta);
}

bool Gf3Vector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint8_t v) { return v == 0; });
}

std::ptrdiff_t Gf3Vector::leading_index() const {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

void Gf3Vector::check_same_size(const Gf3Vector& other) const {
  if (e_.size() != other.e_.size()) {
    throw DimensionError("vector lengths disagree: " + std::to_string(e_.size()) + " vs " +
                         std::to_string(other.e_.size()));
  }
}

void Gf3Vector::accumulate(const Gf3Vector& other) {
  check_same_size(other);
  gf3::active_kernels().acc_add(e_.data(), other.e_.data(), e_.size());
}

void Gf3Vector::accumulate_sub(const Gf3Vector& other) {
  check_same_size(other);
  gf3::active_kernels().acc_sub(e_.data(), other.e_.data(), e_.size());
}

void Gf3Vector::accumulate_scaled(int c, const Gf3Vector& other) {
  switch (reduce_mod3(c)) {
    case 0:
      check_same_size(other);
      break;
    case 1:
      accumulate(other);
      break;
    default:
      accumulate_sub(other);  // 2 == -1
      break;
  }
}

void Gf3Vector::negate_in_place() { gf3::active_kernels().negate(e_.data(), e_.size()); }

Gf3Vector Gf3Vector::negated() const {
  Gf3Vector out = *this;
  out.negate_in_place();
  return out;
}

std::string Gf3Vector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ' ';
    out += static_cast<char>('0' + e_[i]);
  }
  return out;
}

Gf3Vector add(const Gf3Vector& a, const Gf3Vector& b) {
  Gf3Vector out = a;
  out.accumulate(b);
  return out;
}

Gf3Vector sub(const Gf3Vector& a, const Gf3Vector& b) {
  Gf3Vector out = a;
  out.accumulate_sub(b);
  return out;
}

std::int32_t Gf3Basis::pivot_row(std::size_t column) const {
  if (column >= cols_) throw RangeError("pivot column out of range");
  return pivot_row_[column];
}

Gf3Vector Gf3Basis::sift(const Gf3Vector& v) const {
  if (v.size() != cols_) {
    throw DimensionError("sift: vector length " + std::to_string(v.size()) +
                         " does not match basis columns " + std::to_string(cols_));
  }
  Gf3Vector residue = v;
  for (const Gf3Vector& row : rows_) {
    std::size_t pivot = static_cast<std::size_t>(row.leading_index());
    std::uint8_t c = residue[pivot];
    if (c != 0) residue.accumulate_scaled(3 - c, row);
  }
  return residue;
}

bool Gf3Basis::insert(const Gf3Vector& v) {
  Gf3Vector residue = sift(v);
  std::ptrdiff_t lead = residue.leading_index();
  if (lead < 0) return false;
  if (residue[static_cast<std::size_t>(lead)] == 2) residue.negate_in_place();

  for (Gf3Vector& row : rows_) {
    std::uint8_t c = row[static_cast<std::size_t>(lead)];
    if (c != 0) row.accumulate_scaled(3 - c, residue);
  }

  auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const Gf3Vector& row) {
    return row.leading_index() > lead;
  });
  rows_.insert(pos, std::move(residue));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    pivot_row_[static_cast<std::size_t>(rows_[r].leading_index())] = static_cast<std::int32_t>(r);
  }
  return true;
}

}  // namespace b3
