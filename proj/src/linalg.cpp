#include "hermitian/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace hermitian {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!a.field || !b.field || a.field.get() != b.field.get())
    throw std::invalid_argument("matrix: operands belong to different fields");
}

}  // namespace

std::size_t rref_in_place(Matrix& m) {
  if (!m.field) throw std::invalid_argument("matrix: missing field");
  const Field& f = *m.field;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    // First nonzero entry scan in column order.
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m.at(pivot, c), m.at(rank, c));
    Fel s = f.inv(m.at(rank, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), s);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      Fel factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

RrefResult rref_rank_kernel(const Matrix& m) {
  if (m.rows == 0 && m.cols == 0) throw std::invalid_argument("matrix: empty dimensions");
  RrefResult res;
  res.rref = m;
  res.rank = rref_in_place(res.rref);
  const Field& f = *m.field;

  std::vector<int> pivot_col_of_row(res.rank);
  std::vector<int> col_kind(m.cols, -1);  // row index of the pivot, or -1 = free
  {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < res.rank; ++c) {
      if (res.rref.at(r, c) == 1) {
        bool pivot = true;
        for (std::size_t rr = 0; rr < res.rref.rows; ++rr)
          if (rr != r && res.rref.at(rr, c) != 0) pivot = false;
        if (pivot) {
          col_kind[c] = static_cast<int>(r);
          pivot_col_of_row[r] = static_cast<int>(c);
          ++r;
        }
      }
    }
    if (r != res.rank) throw std::logic_error("matrix: pivot structure corrupt");
  }

  res.kernel = Matrix(m.field, m.cols - res.rank, m.cols);
  std::size_t krow = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (col_kind[c] != -1) continue;
    res.kernel.at(krow, c) = 1;
    for (std::size_t r = 0; r < res.rank; ++r)
      res.kernel.at(krow, pivot_col_of_row[r]) = f.neg(res.rref.at(r, c));
    ++krow;
  }
  return res;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return rref_in_place(copy);
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols != b.cols) throw std::invalid_argument("matrix: column count mismatch");
  Matrix ra = a, rb = b;
  std::size_t rka = rref_in_place(ra), rkb = rref_in_place(rb);
  if (rka != rkb) return false;
  for (std::size_t r = 0; r < rka; ++r)
    for (std::size_t c = 0; c < a.cols; ++c)
      if (ra.at(r, c) != rb.at(r, c)) return false;
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols != b.rows) throw std::invalid_argument("matrix: shape mismatch");
  const Field& f = *a.field;
  Matrix r(a.field, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      Fel v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(v, b.at(k, j)));
    }
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix r(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

Matrix columns_subset(const Matrix& m, const std::vector<int>& cols) {
  Matrix r(m.field, m.rows, cols.size());
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      r.at(i, j) = m.at(i, static_cast<std::size_t>(cols[j]));
  return r;
}

bool is_zero(const Matrix& m) {
  for (Fel v : m.a)
    if (v != 0) return false;
  return true;
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << ' ' << m.field->p() << ' ' << m.field->k() << '\n';
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out << ' ';
      out << m.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::size_t rows, cols;
  unsigned p, k;
  if (!(in >> rows >> cols >> p >> k)) throw std::invalid_argument("matrix: bad header");
  Matrix m(Field::build(p, k), rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    Fel v;
    if (!(in >> v)) throw std::invalid_argument("matrix: truncated entries");
    m.field->check(v);
    m.a[i] = v;
  }
  return m;
}

}  // namespace hermitian
