#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermitian/codes.hpp"
#include "hermitian/geometry.hpp"

namespace hermitian {

// Minimum distance of C(d,a)^perp for 1 <= d <= q, 0 <= a <= d.
int dual_delta(unsigned q, int d, int a);

// Closed-form count of the minimum-weight words of C(d,a)^perp. Defined for
// d <= q-1 (any a <= d) and for d = q with 2 <= a < q; other (d, a) throw
// invalid_argument since only the census can count them.
std::uint64_t closed_form_count(unsigned q, int d, int a);

enum class SupportFamily { line_rinf, line_r, conic_pair_lines, conic_parabola };
const char* to_string(SupportFamily f);

struct SupportSet {
  SupportFamily family;
  std::vector<int> points;  // sorted point ids
};

// Geometric enumeration of the minimum-weight supports:
//  - d <= q-1: delta-subsets of line sections (both line families when a = 0,
//    only lines through P_inf when a > 0);
//  - d = q, 2 <= a < q: unions of two non-tangent lines through P_inf, plus
//    (q odd) the 2q-point parabola sections;
//  - d = q, a in {0,1}: assembled from the full conic census (degenerate
//    conics included), deduplicated.
std::vector<SupportSet> enumerate_supports(const HermitianCurve& curve, int d, int a,
                                           const Budget& budget = {});

struct MinWeightCensus {
  unsigned q = 0;
  int d = 0, a = 0, delta = 0;
  std::uint64_t support_count = 0;
  std::uint64_t a_delta = 0;  // support_count * (q^2 - 1), kernel-verified
  std::map<std::string, std::uint64_t> families;
  std::optional<std::uint64_t> closed_form;
  bool closed_form_matches = true;
  bool kernel_verified = false;   // every support: kernel dim 1, full support
  bool exhaustive_checked = false;
  std::uint64_t extra_supports = 0;    // found by the scan, not enumerated
  std::uint64_t missing_supports = 0;  // enumerated, not genuine
  std::optional<std::vector<int>> counterexample;  // lexicographically first

  bool ok() const {
    return kernel_verified && closed_form_matches && extra_supports == 0 &&
           missing_supports == 0;
  }
};

// Three-way verification: geometric enumeration vs kernel oracle vs closed
// form (where defined), with an optional exhaustive delta-subset scan of B
// proving no support was missed.
MinWeightCensus verify_min_words(const HermitianCurve& curve, int d, int a,
                                 bool exhaustive, const Budget& budget = {});

}  // namespace hermitian
