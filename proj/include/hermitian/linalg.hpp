#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hermitian/gf.hpp"

namespace hermitian {

// Dense row-major matrix over one field. Arithmetic is exact; there are no
// tolerances anywhere because the field is finite.
struct Matrix {
  std::shared_ptr<const Field> field;
  std::size_t rows = 0, cols = 0;
  std::vector<Fel> a;

  Matrix() = default;
  Matrix(std::shared_ptr<const Field> f, std::size_t r, std::size_t c)
      : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

  Fel& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Fel at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

struct RrefResult {
  Matrix rref;     // reduced row echelon form
  std::size_t rank = 0;
  Matrix kernel;   // rows form a basis of the right kernel {v : M v = 0}
};

// Gaussian elimination with first-nonzero pivot scan in column order;
// deterministic output.
RrefResult rref_rank_kernel(const Matrix& m);
std::size_t rref_in_place(Matrix& m);  // returns rank
std::size_t rank(const Matrix& m);

bool row_space_equal(const Matrix& a, const Matrix& b);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix columns_subset(const Matrix& m, const std::vector<int>& cols);
bool is_zero(const Matrix& m);

// Text format: first line "rows cols p k", then one line per row of
// space-separated element indices. Round trips bit-exactly.
std::string format_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text);

}  // namespace hermitian
