#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sparsef2/bitvec.hpp"

namespace sparsef2 {

// Dense matrix over F2 stored as packed rows.
class BitMat {
 public:
  BitMat() = default;
  BitMat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMat identity(std::size_t n);
  // Every row must have length cols; an empty list gives a 0 x cols matrix.
  static BitMat from_rows(std::vector<BitVec> rows, std::size_t cols);
  static BitMat from_rows(std::vector<BitVec> rows);
  static BitMat from_columns(const std::vector<BitVec>& columns, std::size_t rows);
  static BitMat from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) noexcept { rows_[r].set(c, v); }
  void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

  const BitVec& row(std::size_t r) const noexcept { return rows_[r]; }
  BitVec& row(std::size_t r) noexcept { return rows_[r]; }
  const std::vector<BitVec>& row_list() const noexcept { return rows_; }

  BitVec column(std::size_t c) const;
  std::vector<BitVec> columns() const;

  void append_row(BitVec row);
  BitMat transpose() const;
  std::size_t weight() const;
  bool is_zero() const;

  friend bool operator==(const BitMat& a, const BitMat& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

// y = M x over F2. Throws InputError if x.size() != M.cols().
BitVec mat_vec_mul(const BitMat& m, const BitVec& x);
// Product over F2; inner dimensions must agree.
BitMat mat_mul(const BitMat& a, const BitMat& b);
// Kronecker product a (x) b.
BitMat kron(const BitMat& a, const BitMat& b);
// Stack b below a; column counts must agree.
BitMat vstack(const BitMat& a, const BitMat& b);

}  // namespace sparsef2
