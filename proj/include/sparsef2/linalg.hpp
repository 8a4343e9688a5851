#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sparsef2/bitmat.hpp"
#include "sparsef2/bitvec.hpp"

namespace sparsef2 {

// Reduced row echelon form of a matrix together with its pivot columns.
struct Echelon {
  BitMat reduced;                   // rank() leading rows are the nonzero rows
  std::vector<std::size_t> pivots;  // pivots[i] is the pivot column of row i
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(const BitMat& m);
std::size_t rank(const BitMat& m);

// Basis of {x : M x = 0}; one vector per free column, cols - rank vectors total.
std::vector<BitVec> nullspace_basis(const BitMat& m);

// Some x with M x = b, or nullopt when the system is inconsistent. Free
// variables are set to zero; no sparsity is promised.
std::optional<BitVec> gauss_solve(const BitMat& m, const BitVec& b);

}  // namespace sparsef2
