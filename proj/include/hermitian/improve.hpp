#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hermitian/codes.hpp"
#include "hermitian/geometry.hpp"

namespace hermitian {

struct ImprovingSet {
  unsigned q = 0;
  int d = 0, a = 0;
  std::vector<int> removed;                    // sorted point ids
  std::map<Fel, std::vector<int>> per_line;    // fiber x-index -> removed ids
};

// H improves C(d,a)^perp iff no line through P_inf retains d+1 or more points
// of B \ H. Requires 0 < d < q and 1 <= a <= d (the a = 0 case is rejected).
bool is_improving(const HermitianCurve& curve, int d, int a,
                  const std::vector<int>& removed);

// The minimal construction: remove the q-d canonically smallest points from
// each of the q^2 non-tangent lines through P_inf; |H| = q^2 (q-d) exactly.
ImprovingSet minimal_improving_set(const HermitianCurve& curve, int d, int a);

struct ImproveReport {
  unsigned q = 0;
  int d = 0, a = 0;
  std::size_t removed_size = 0;
  std::size_t new_length = 0;
  std::size_t new_dim = 0;
  bool improving = false;
  // Dual minimum distance of the punctured code: exactly d+1 when a witness
  // of weight d+1 exists (H not improving), otherwise the bound ">= d+2".
  int dual_distance_bound = 0;
  bool dual_distance_exact = false;
  std::optional<std::vector<int>> weight_witness;  // original point ids
  bool ok = false;  // distance bound and the improving criterion agree
};

// Builds C(d,a,H) by puncturing and support-searches its dual distance up to
// weight d+1, cross-checking the improving criterion in both directions.
ImproveReport improved_report(const HermitianCurve& curve, int d, int a,
                              const std::vector<int>& removed,
                              const Budget& budget = {});

}  // namespace hermitian
