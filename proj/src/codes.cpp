#include "hermitian/codes.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

namespace hermitian {

namespace {

Matrix full_rank_rows(const Matrix& m) {
  RrefResult r = rref_rank_kernel(m);
  Matrix out(m.field, r.rank, m.cols);
  std::copy(r.rref.a.begin(), r.rref.a.begin() + r.rank * m.cols, out.a.begin());
  return out;
}

}  // namespace

LinearCode::LinearCode(Matrix generator, std::vector<ProjPoint> labels)
    : gen_(std::move(generator)), labels_(std::move(labels)) {
  if (!gen_.field) throw std::invalid_argument("code: generator has no field");
  if (labels_.size() != gen_.cols)
    throw std::invalid_argument("code: label count differs from length");
  for (std::size_t i = 1; i < labels_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("code: duplicate coordinate labels");
  RrefResult r = rref_rank_kernel(gen_);
  if (r.rank != gen_.rows)
    throw std::invalid_argument("code: generator rows are dependent");
  parity_ = std::move(r.kernel);
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(c.parity(), c.labels());
}

LinearCode puncture(const LinearCode& c, const std::vector<int>& drop) {
  std::vector<bool> dropped(c.length(), false);
  for (int idx : drop) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= c.length())
      throw std::invalid_argument("puncture: coordinate out of range");
    dropped[idx] = true;
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < c.length(); ++i)
    if (!dropped[i]) keep.push_back(static_cast<int>(i));
  if (keep.empty()) throw std::invalid_argument("puncture: cannot drop every coordinate");
  Matrix projected = columns_subset(c.generator(), keep);
  std::vector<ProjPoint> labels;
  labels.reserve(keep.size());
  for (int i : keep) labels.push_back(c.labels()[i]);
  return LinearCode(full_rank_rows(projected), std::move(labels));
}

LinearCode scale_columns(const LinearCode& c, const std::vector<Fel>& v) {
  if (v.size() != c.length()) throw std::invalid_argument("scale: vector length mismatch");
  const Field& f = c.field();
  for (Fel s : v)
    if (s == 0) throw std::invalid_argument("scale: zero entry");
  Matrix g = c.generator();
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t j = 0; j < g.cols; ++j) g.at(r, j) = f.mul(g.at(r, j), v[j]);
  return LinearCode(std::move(g), c.labels());
}

SupportOracle::SupportOracle(const Matrix& m)
    : m_(std::make_shared<Matrix>(m)) {}

// Eliminates the column-subset system into scratch_, returning its rank.
// scratch_ is laid out rows x |S| row-major.
int SupportOracle::eliminate(std::span<const int> support) {
  const Matrix& m = *m_;
  const Field& f = *m.field;
  const std::size_t w = support.size();
  scratch_.assign(m.rows * w, 0);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t j = 0; j < w; ++j)
      scratch_[r * w + j] = m.at(r, static_cast<std::size_t>(support[j]));

  std::size_t rank = 0;
  for (std::size_t col = 0; col < w && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && scratch_[pivot * w + col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t c = 0; c < w; ++c)
        std::swap(scratch_[pivot * w + c], scratch_[rank * w + c]);
    Fel s = f.inv(scratch_[rank * w + col]);
    for (std::size_t c = col; c < w; ++c)
      scratch_[rank * w + c] = f.mul(scratch_[rank * w + c], s);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      Fel factor = scratch_[r * w + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < w; ++c)
        scratch_[r * w + c] = f.sub(scratch_[r * w + c], f.mul(factor, scratch_[rank * w + c]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int SupportOracle::dimension(std::span<const int> support) {
  return static_cast<int>(support.size()) - eliminate(support);
}

std::vector<std::vector<Fel>> SupportOracle::basis(std::span<const int> support) {
  const Field& f = *m_->field;
  const std::size_t w = support.size();
  int rank = eliminate(support);

  // Pivot bookkeeping on the reduced scratch matrix.
  std::vector<int> pivot_col(rank), col_pivot_row(w, -1);
  {
    int r = 0;
    for (std::size_t c = 0; c < w && r < rank; ++c) {
      if (scratch_[static_cast<std::size_t>(r) * w + c] != 0) {
        pivot_col[r] = static_cast<int>(c);
        col_pivot_row[c] = r;
        ++r;
      }
    }
  }
  std::vector<std::vector<Fel>> out;
  for (std::size_t cfree = 0; cfree < w; ++cfree) {
    if (col_pivot_row[cfree] != -1) continue;
    std::vector<Fel> v(w, 0);
    v[cfree] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivot_col[r]] = f.neg(scratch_[static_cast<std::size_t>(r) * w + cfree]);
    out.push_back(std::move(v));
  }
  return out;
}

SupportOracle::Result SupportOracle::query(std::span<const int> support) {
  const Field& f = *m_->field;
  const std::size_t w = support.size();
  Result res;
  auto kernel = basis(support);
  res.dimension = static_cast<int>(kernel.size());
  if (res.dimension == 0) return res;

  // A coordinate where every kernel word vanishes can never be covered.
  for (std::size_t j = 0; j < w; ++j) {
    bool touched = false;
    for (const auto& v : kernel)
      if (v[j] != 0) {
        touched = true;
        break;
      }
    if (!touched) return res;
  }

  if (f.order() > w) {
    // Greedy combination: a union of at most |S| proper subspaces cannot
    // cover a space over a field with more than |S| elements, so a scalar
    // always exists that fixes a zero coordinate without breaking the others.
    std::vector<Fel> word = kernel[0];
    for (std::size_t j = 0; j < w; ++j) {
      if (word[j] != 0) continue;
      const std::vector<Fel>* b = nullptr;
      for (const auto& v : kernel)
        if (v[j] != 0) {
          b = &v;
          break;
        }
      for (Fel lambda = 1; lambda < f.order(); ++lambda) {
        bool ok = true;
        for (std::size_t t = 0; t < w; ++t) {
          if ((*b)[t] == 0) continue;
          if (f.add(word[t], f.mul(lambda, (*b)[t])) == 0 && (word[t] != 0 || t == j)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          for (std::size_t t = 0; t < w; ++t)
            word[t] = f.add(word[t], f.mul(lambda, (*b)[t]));
          break;
        }
      }
      if (word[j] == 0) throw std::logic_error("support oracle: greedy witness failed");
    }
    res.has_full_support = true;
    res.word = std::move(word);
    return res;
  }

  // Small field relative to |S|: exhaust the projective kernel.
  const int dim = res.dimension;
  std::uint64_t combos = 1;
  for (int i = 0; i < dim; ++i) {
    combos *= f.order();
    if (combos > (std::uint64_t{1} << 22))
      throw budget_error("support oracle: kernel too large for exhaustive witness scan");
  }
  std::vector<Fel> word(w);
  for (std::uint64_t code = 1; code < combos; ++code) {
    std::uint64_t v = code;
    std::fill(word.begin(), word.end(), 0);
    for (int i = 0; i < dim; ++i) {
      Fel coeff = static_cast<Fel>(v % f.order());
      v /= f.order();
      if (coeff == 0) continue;
      for (std::size_t t = 0; t < w; ++t)
        word[t] = f.add(word[t], f.mul(coeff, kernel[i][t]));
    }
    if (std::none_of(word.begin(), word.end(), [](Fel x) { return x == 0; })) {
      res.has_full_support = true;
      res.word = std::move(word);
      return res;
    }
  }
  return res;
}

SupportWords words_supported_within(const LinearCode& c, const std::vector<int>& support) {
  for (int idx : support)
    if (idx < 0 || static_cast<std::size_t>(idx) >= c.length())
      throw std::invalid_argument("support: coordinate out of range");
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("support: duplicate coordinate");
  SupportOracle oracle(c.parity());
  auto kernel = oracle.basis(support);

  SupportWords out;
  out.dimension = static_cast<int>(kernel.size());
  out.basis = Matrix(c.field_ptr(), kernel.size(), c.length());
  for (std::size_t r = 0; r < kernel.size(); ++r)
    for (std::size_t j = 0; j < support.size(); ++j)
      out.basis.at(r, static_cast<std::size_t>(support[j])) = kernel[r][j];

  auto res = oracle.query(support);
  if (res.has_full_support) {
    std::vector<Fel> word(c.length(), 0);
    for (std::size_t j = 0; j < support.size(); ++j)
      word[static_cast<std::size_t>(support[j])] = res.word[j];
    out.full_support_word = std::move(word);
  }
  return out;
}

namespace {

// Minimum weight over all |F|^k - 1 nonzero codewords, enumerated with a
// mixed-radix odometer so each step adds one generator row to the running
// word and updates the weight incrementally.
int exhaustive_min_weight(const LinearCode& c, const Budget& budget) {
  const Field& f = c.field();
  const std::size_t k = c.dim(), n = c.length();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget.max_codewords / f.order())
      throw budget_error("min_distance: codeword budget exceeded");
    total *= f.order();
  }

  // The running word is sum(elem(digit[i]) * row_i); a digit step from v to
  // v' adds (elem(v') - elem(v)) * row_i, where element indices double as
  // the digits.
  const Matrix& g = c.generator();
  std::vector<Fel> word(n, 0);
  std::vector<Fel> digit(k, 0);
  int weight = 0;
  int best = std::numeric_limits<int>::max();

  auto add_scaled_row = [&](std::size_t row, Fel s) {
    if (s == 0) return;
    for (std::size_t j = 0; j < n; ++j) {
      Fel before = word[j];
      Fel after = f.add(before, f.mul(s, g.at(row, j)));
      word[j] = after;
      weight += (after != 0) - (before != 0);
    }
  };

  for (std::uint64_t count = 1; count < total; ++count) {
    std::size_t i = 0;
    while (digit[i] == f.order() - 1) {
      Fel delta = f.sub(0, digit[i]);
      digit[i] = 0;
      add_scaled_row(i, delta);
      ++i;
    }
    Fel delta = f.sub(digit[i] + 1, digit[i]);
    ++digit[i];
    add_scaled_row(i, delta);
    if (weight < best) best = weight;
  }
  return best;
}

}  // namespace

MinDistanceResult min_distance(const LinearCode& c, DistanceStrategy strategy,
                               int bound, const Budget& budget) {
  MinDistanceResult out;
  if (c.dim() == 0) return out;  // zero code: infinite distance

  if (strategy == DistanceStrategy::exhaustive) {
    int w = exhaustive_min_weight(c, budget);
    out.distance = w;
    return out;
  }

  const int n = static_cast<int>(c.length());
  if (bound <= 0 || bound > n) bound = n;

  std::uint64_t planned = 0;
  for (int w = 1; w <= bound; ++w) {
    std::uint64_t cnt = binomial(n, w);
    if (cnt > budget.max_subsets - planned)
      throw budget_error("min_distance: subset budget exceeded");
    planned += cnt;
  }

  const unsigned workers = resolve_workers(budget.workers);
  for (int w = 1; w <= bound; ++w) {
    std::uint64_t count = binomial(n, w);
    std::atomic<bool> found{false};
    parallel_blocks(count, workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
      SupportOracle oracle(c.parity());
      CombinationIter iter(n, w);
      iter.seek(begin);
      for (std::uint64_t i = begin; i < end && !found.load(std::memory_order_relaxed);
           ++i) {
        const auto& s = iter.current();
        if (oracle.query(s).has_full_support) {
          found.store(true, std::memory_order_relaxed);
          break;
        }
        iter.next();
      }
    });
    if (found.load()) {
      out.distance = w;
      return out;
    }
  }
  out.within_bound = false;
  return out;
}

}  // namespace hermitian
