#include "sparsef2/linalg.hpp"

#include <utility>

#include "sparsef2/errors.hpp"

namespace sparsef2 {

namespace {

// Reduces the augmented system in place; returns pivot columns among the
// first `cols` columns only.
std::vector<std::size_t> reduce_in_place(std::vector<BitVec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].get(c)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

Echelon row_reduce(const BitMat& m) {
  std::vector<BitVec> rows = m.row_list();
  auto pivots = reduce_in_place(rows, m.cols());
  return Echelon{BitMat::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

std::size_t rank(const BitMat& m) { return row_reduce(m).rank(); }

std::vector<BitVec> nullspace_basis(const BitMat& m) {
  const Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVec v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced.get(i, free)) v.set(e.pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVec> gauss_solve(const BitMat& m, const BitVec& b) {
  if (b.size() != m.rows()) throw InputError("gauss_solve: right-hand side length mismatch");
  const std::size_t n = m.cols();
  std::vector<BitVec> aug;
  aug.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVec row = m.row(r).concat(BitVec(1));
    if (b.get(r)) row.set(n);
    aug.push_back(std::move(row));
  }
  const auto pivots = reduce_in_place(aug, n);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (aug[r].get(n)) return std::nullopt;
  }
  BitVec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (aug[i].get(n)) x.set(pivots[i]);
  }
  if (mat_vec_mul(m, x) != b) throw std::logic_error("gauss_solve: solution failed re-verification");
  return x;
}

}  // namespace sparsef2
