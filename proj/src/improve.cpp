#include "hermitian/improve.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermitian/onepoint.hpp"

namespace hermitian {

namespace {

void validate_improve_params(const HermitianCurve& curve, int d, int a) {
  const int q = static_cast<int>(curve.q());
  if (d <= 0 || d >= q)
    throw std::invalid_argument("improve: requires 0 < d < q");
  if (a < 1 || a > d)
    throw std::invalid_argument("improve: requires 1 <= a <= d (a = 0 is untreated)");
}

std::vector<bool> removal_mask(const HermitianCurve& curve, const std::vector<int>& removed) {
  std::vector<bool> mask(curve.affine_points().size(), false);
  for (int id : removed) {
    if (id < 0 || static_cast<std::size_t>(id) >= curve.affine_points().size())
      throw std::invalid_argument("improve: removed point out of range");
    if (mask[id]) throw std::invalid_argument("improve: duplicate removed point");
    mask[id] = true;
  }
  return mask;
}

}  // namespace

bool is_improving(const HermitianCurve& curve, int d, int a,
                  const std::vector<int>& removed) {
  validate_improve_params(curve, d, a);
  std::vector<bool> mask = removal_mask(curve, removed);
  // The lines through P_inf that meet B are exactly the fibers x = c; the
  // tangent z = 0 meets B nowhere.
  for (Fel x = 0; x < curve.field().order(); ++x) {
    int remaining = 0;
    for (int id : curve.fiber(x))
      if (!mask[id]) ++remaining;
    if (remaining >= d + 1) return false;
  }
  return true;
}

ImprovingSet minimal_improving_set(const HermitianCurve& curve, int d, int a) {
  validate_improve_params(curve, d, a);
  const int q = static_cast<int>(curve.q());
  ImprovingSet h;
  h.q = curve.q();
  h.d = d;
  h.a = a;
  for (Fel x = 0; x < curve.field().order(); ++x) {
    const auto& fiber = curve.fiber(x);  // ascending point ids
    std::vector<int> taken(fiber.begin(), fiber.begin() + (q - d));
    h.removed.insert(h.removed.end(), taken.begin(), taken.end());
    h.per_line[x] = std::move(taken);
  }
  std::sort(h.removed.begin(), h.removed.end());
  return h;
}

ImproveReport improved_report(const HermitianCurve& curve, int d, int a,
                              const std::vector<int>& removed, const Budget& budget) {
  validate_improve_params(curve, d, a);
  std::vector<bool> mask = removal_mask(curve, removed);

  ImproveReport rep;
  rep.q = curve.q();
  rep.d = d;
  rep.a = a;
  rep.removed_size = removed.size();
  rep.improving = is_improving(curve, d, a, removed);

  std::vector<int> sorted_removed = removed;
  std::sort(sorted_removed.begin(), sorted_removed.end());
  LinearCode punctured = build_code_da(curve, d, a, sorted_removed);
  rep.new_length = punctured.length();
  rep.new_dim = punctured.dim();

  std::vector<int> keep;
  for (std::size_t id = 0; id < curve.affine_points().size(); ++id)
    if (!mask[id]) keep.push_back(static_cast<int>(id));

  // Support search for dual words of weight <= d+1 in the punctured code.
  const int n = static_cast<int>(punctured.length());
  std::uint64_t planned = 0;
  for (int w = 1; w <= d + 1; ++w) {
    std::uint64_t cnt = binomial(n, w);
    if (cnt > budget.max_subsets - planned)
      throw budget_error("improved_report: subset budget exceeded");
    planned += cnt;
  }
  SupportOracle oracle(punctured.generator());
  int found_weight = 0;
  std::vector<int> witness;
  for (int w = 1; w <= d + 1 && found_weight == 0; ++w) {
    CombinationIter iter(n, w);
    do {
      auto res = oracle.query(iter.current());
      if (res.has_full_support) {
        found_weight = w;
        for (int local : iter.current()) witness.push_back(keep[local]);
        break;
      }
    } while (iter.next());
  }

  if (found_weight > 0) {
    rep.dual_distance_bound = found_weight;
    rep.dual_distance_exact = true;
    rep.weight_witness = witness;
  } else {
    rep.dual_distance_bound = d + 2;  // meaning: >= d+2
    rep.dual_distance_exact = false;
  }

  // Cross-checks: the dual distance is >= d+1 always, and = d+1 exactly when H is
  // not improving.
  bool lower_ok = found_weight == 0 || found_weight >= d + 1;
  bool iff_ok = rep.improving == (found_weight == 0);

  // When the criterion fails, the d+1 surviving collinear points on a line
  // through P_inf must themselves support a dual word of full weight.
  bool collinear_ok = true;
  if (!rep.improving) {
    std::vector<int> local_of(curve.affine_points().size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) local_of[keep[i]] = static_cast<int>(i);
    for (Fel x = 0; x < curve.field().order(); ++x) {
      std::vector<int> remaining;
      for (int id : curve.fiber(x))
        if (!mask[id]) remaining.push_back(local_of[id]);
      if (remaining.size() >= static_cast<std::size_t>(d) + 1) {
        remaining.resize(d + 1);
        collinear_ok = oracle.query(remaining).has_full_support;
        break;
      }
    }
  }
  rep.ok = lower_ok && iff_ok && collinear_ok;
  return rep;
}

}  // namespace hermitian
