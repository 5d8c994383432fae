#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermitian {

// Limits for the enumeration kernels. Exceeding a limit raises budget_error;
// the library never truncates a search silently.
struct Budget {
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
  unsigned workers = 0;  // 0 = hardware concurrency
};

class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Binomial coefficient, saturating at UINT64_MAX on overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

unsigned resolve_workers(unsigned requested);

// Lexicographic enumeration of w-subsets of {0,...,n-1}. Supports unranking so
// that scans can be partitioned deterministically across workers.
class CombinationIter {
 public:
  CombinationIter(int n, int w);
  // Positions this iterator at the combination of the given lexicographic
  // rank. Requires binomial(n, w) to be exactly representable.
  void seek(std::uint64_t rank);
  const std::vector<int>& current() const { return comb_; }
  bool next();  // advances to the lexicographic successor; false past the end

 private:
  int n_, w_;
  std::vector<int> comb_;
};

// Runs fn(worker_id, begin, end) on contiguous blocks of [0, n). Blocks are a
// deterministic function of n and the worker count; callers must merge any
// per-worker state with an order-independent (or block-ordered) reduction.
void parallel_blocks(std::uint64_t n, unsigned workers,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace hermitian
