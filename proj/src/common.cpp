#include "hermitian/common.hpp"

#include <limits>
#include <thread>

namespace hermitian {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i, with saturation
    std::uint64_t num = n - k + i;
    if (r > kMax / num) return kMax;
    r = r * num / i;
  }
  return r;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

CombinationIter::CombinationIter(int n, int w) : n_(n), w_(w), comb_(w) {
  if (w < 0 || n < 0 || w > n) throw std::invalid_argument("combination: bad n, w");
  for (int i = 0; i < w; ++i) comb_[i] = i;
}

void CombinationIter::seek(std::uint64_t rank) {
  // Lexicographic unranking: choose each entry greedily by how many
  // combinations start below it.
  int prev = -1;
  for (int i = 0; i < w_; ++i) {
    int c = prev + 1;
    for (;; ++c) {
      std::uint64_t block = binomial(n_ - c - 1, w_ - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    comb_[i] = c;
    prev = c;
  }
}

bool CombinationIter::next() {
  int i = w_ - 1;
  while (i >= 0 && comb_[i] == n_ - w_ + i) --i;
  if (i < 0) return false;
  ++comb_[i];
  for (int j = i + 1; j < w_; ++j) comb_[j] = comb_[j - 1] + 1;
  return true;
}

void parallel_blocks(std::uint64_t n, unsigned workers,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
  workers = resolve_workers(workers);
  if (n == 0) return;
  if (workers <= 1 || n < 2 * workers) {
    fn(0, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  std::uint64_t base = n / workers, extra = n % workers, begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t len = base + (w < extra ? 1 : 0);
    std::uint64_t end = begin + len;
    threads.emplace_back([&fn, &errors, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hermitian
