#include "sparsef2/bitmat.hpp"

#include <utility>

#include "sparsef2/errors.hpp"

namespace sparsef2 {

BitMat BitMat::identity(std::size_t n) {
  BitMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMat BitMat::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  for (const auto& r : rows) {
    if (r.size() != cols) throw InputError("from_rows: ragged row length");
  }
  BitMat m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMat BitMat::from_rows(std::vector<BitVec> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(std::move(rows), cols);
}

BitMat BitMat::from_columns(const std::vector<BitVec>& columns, std::size_t rows) {
  BitMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("from_columns: ragged column length");
    for (std::size_t r : columns[c].support()) m.set(r, c);
  }
  return m;
}

BitMat BitMat::from_strings(const std::vector<std::string>& rows) {
  std::vector<BitVec> out;
  out.reserve(rows.size());
  for (const auto& s : rows) out.push_back(BitVec::from_string(s));
  return from_rows(std::move(out));
}

BitVec BitMat::column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

std::vector<BitVec> BitMat::columns() const {
  std::vector<BitVec> out(cols_, BitVec(rows()));
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].support()) out[c].set(r);
  }
  return out;
}

void BitMat::append_row(BitVec row) {
  if (rows_.empty() && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw InputError("append_row: length mismatch");
  rows_.push_back(std::move(row));
}

BitMat BitMat::transpose() const {
  BitMat t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

std::size_t BitMat::weight() const {
  std::size_t w = 0;
  for (const auto& r : rows_) w += r.weight();
  return w;
}

bool BitMat::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.is_zero()) return false;
  }
  return true;
}

BitVec mat_vec_mul(const BitMat& m, const BitVec& x) {
  if (x.size() != m.cols()) {
    throw InputError("mat_vec_mul: vector length " + std::to_string(x.size()) +
                     " does not match " + std::to_string(m.cols()) + " columns");
  }
  BitVec y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.row(r).dot(x)) y.set(r);
  }
  return y;
}

BitMat mat_mul(const BitMat& a, const BitMat& b) {
  if (a.cols() != b.rows()) throw InputError("mat_mul: inner dimension mismatch");
  BitMat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    BitVec& acc = out.row(r);
    for (std::size_t k : a.row(r).support()) acc ^= b.row(k);
  }
  return out;
}

BitMat kron(const BitMat& a, const BitMat& b) {
  BitMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    const auto a_support = a.row(ar).support();
    for (std::size_t br = 0; br < b.rows(); ++br) {
      const auto b_support = b.row(br).support();
      BitVec& dst = out.row(ar * b.rows() + br);
      for (std::size_t ac : a_support) {
        for (std::size_t bc : b_support) dst.set(ac * b.cols() + bc);
      }
    }
  }
  return out;
}

BitMat vstack(const BitMat& a, const BitMat& b) {
  if (a.cols() != b.cols()) throw InputError("vstack: column count mismatch");
  std::vector<BitVec> rows = a.row_list();
  rows.insert(rows.end(), b.row_list().begin(), b.row_list().end());
  return BitMat::from_rows(std::move(rows), a.cols());
}

}  // namespace sparsef2
