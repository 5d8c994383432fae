#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hermitian/common.hpp"
#include "hermitian/geometry.hpp"
#include "hermitian/linalg.hpp"

namespace hermitian {

// A linear code given by a full-row-rank generator matrix plus the projective
// evaluation point labelling its coordinates. Immutable; the dual generator
// (parity-check) is computed once at construction so that support queries are
// cheap and thread-safe.
class LinearCode {
 public:
  LinearCode(Matrix generator, std::vector<ProjPoint> labels);

  const Field& field() const { return *gen_.field; }
  const std::shared_ptr<const Field>& field_ptr() const { return gen_.field; }
  std::size_t length() const { return gen_.cols; }
  std::size_t dim() const { return gen_.rows; }
  const Matrix& generator() const { return gen_; }
  // Generator of the dual code; G * parity^T = 0, rank n - k.
  const Matrix& parity() const { return parity_; }
  const std::vector<ProjPoint>& labels() const { return labels_; }

 private:
  Matrix gen_;
  Matrix parity_;
  std::vector<ProjPoint> labels_;
};

LinearCode dual(const LinearCode& c);
// Drops the coordinates listed in `drop` (indices into [0, n)); the dimension
// may fall and the generator is re-ranked. Errors if every coordinate is
// dropped.
LinearCode puncture(const LinearCode& c, const std::vector<int>& drop);
// Column-wise scaling by a vector of nonzero entries (a strong isometry).
LinearCode scale_columns(const LinearCode& c, const std::vector<Fel>& v);

struct SupportWords {
  int dimension = 0;
  Matrix basis;  // dimension x n codewords spanning {c in C : supp(c) <= S}
  std::optional<std::vector<Fel>> full_support_word;  // support exactly S
};

// The subspace of codewords supported within S, together with a word of
// support exactly S when one exists.
SupportWords words_supported_within(const LinearCode& c, const std::vector<int>& support);

// Kernel queries on column subsets of a fixed matrix M: solutions y of
// M[:,S] y = 0, indexed by S. When M generates a code C, these are the words
// of the dual of C supported within S. Copyable so each worker of a parallel
// scan owns its own scratch space.
class SupportOracle {
 public:
  explicit SupportOracle(const Matrix& m);

  struct Result {
    int dimension = 0;
    bool has_full_support = false;
    std::vector<Fel> word;  // a full-support solution, |S| entries, when found
  };

  int dimension(std::span<const int> support);
  // dimension + full-support witness search. The witness is built greedily
  // from a kernel basis when the field has more than |S| elements, otherwise
  // by exhaustive scan of the (projective) kernel when its dimension is small.
  Result query(std::span<const int> support);
  // Basis of the solution space as rows of length |S|.
  std::vector<std::vector<Fel>> basis(std::span<const int> support);

  const Matrix& matrix() const { return *m_; }

 private:
  std::shared_ptr<const Matrix> m_;
  std::vector<Fel> scratch_;
  int eliminate(std::span<const int> support);  // returns rank; fills scratch_
};

enum class DistanceStrategy { exhaustive, support_search };

struct MinDistanceResult {
  // Empty when the code has no nonzero codeword (distance is infinite by
  // convention) or, with within_bound == false, when the search was cut off.
  std::optional<int> distance;
  bool within_bound = true;  // false means "distance > bound"
};

// Exact minimum distance. `exhaustive` enumerates all |F|^k codewords;
// `support_search` ascends by weight, stopping at the first weight whose
// column subset admits a full-support kernel word. Exceeding the budget
// raises budget_error.
MinDistanceResult min_distance(const LinearCode& c, DistanceStrategy strategy,
                               int bound, const Budget& budget = {});

}  // namespace hermitian
