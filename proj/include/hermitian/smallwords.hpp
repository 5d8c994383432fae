#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/cohomology.hpp"
#include "hermitian/geometry.hpp"

namespace hermitian {

enum class CaseTag { a, b, c, d, e, outside_range, unclassified };
const char* to_string(CaseTag t);

struct ClassifyResult {
  CaseTag primary = CaseTag::unclassified;
  std::vector<CaseTag> all;  // every case whose conditions hold, for audit
  std::optional<Line> line1, line2;
  std::optional<Conic> conic;
};

// Decides which case of the small-weight support list a set S falls into,
// for 0 < d <= q-1, 0 <= a <= d, S subset of B. Cases are searched in the
// order a, b (single line), then c, d (line pairs), then e (smooth conic);
// the first match is primary and all matches are retained. Sets with a + |S|
// outside [d+2, 2d+1] u [2d+2, 3d-1] report outside_range.
ClassifyResult classify_support(const HermitianCurve& curve, int d, int a,
                                const std::vector<int>& s);

struct SweepReport {
  unsigned q = 0;
  int d = 0, a = 0;
  int w_min = 0, w_max = 0;
  std::uint64_t genuine = 0;       // supports with a full-support dual word
  std::uint64_t unclassified = 0;  // must stay 0
  std::map<std::string, std::uint64_t> histogram;  // tag -> count
  bool converse_checked = false;
  std::uint64_t converse_candidates = 0;
  std::uint64_t converse_failures = 0;  // must stay 0
  std::optional<std::vector<int>> counterexample;  // lexicographically first

  bool ok() const { return unclassified == 0 && converse_failures == 0; }
};

// Enumerates every w-subset of B for w in [w_min, w_max], keeps the genuine
// dual supports (kernel witness), and classifies each. For weights in the
// single-line range it also verifies the converse: every qualifying subset of
// a line section admits a full-support dual word.
SweepReport soundness_sweep(const HermitianCurve& curve, int d, int a, int w_min,
                            int w_max, const Budget& budget = {});

// The classified weight range for (d, a): a+w in [d+2, 2d+1] u [2d+2, 3d-1].
std::pair<int, int> sweep_weight_range(int d, int a);

}  // namespace hermitian
