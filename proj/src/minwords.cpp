#include "hermitian/minwords.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>

#include "hermitian/onepoint.hpp"

namespace hermitian {

const char* to_string(SupportFamily f) {
  switch (f) {
    case SupportFamily::line_rinf: return "line_Rinf";
    case SupportFamily::line_r: return "line_R";
    case SupportFamily::conic_pair_lines: return "conic_pair_lines";
    case SupportFamily::conic_parabola: return "conic_parabola";
  }
  return "?";
}

namespace {

void validate_da(unsigned q, int d, int a) {
  if (d < 1 || d > static_cast<int>(q) || a < 0 || a > d)
    throw std::invalid_argument("minwords: (d, a) out of range");
}

std::vector<std::vector<int>> r_line_sections(const HermitianCurve& curve) {
  // Affine sections (as sorted point ids) of the q^4 - q^3 lines neither
  // through P_inf nor tangent; each holds q+1 affine points.
  const Field& f = curve.field();
  std::vector<std::vector<int>> sections;
  for (const Line& l : all_lines(f)) {
    if (on_line(f, l, curve.p_infinity())) continue;
    std::vector<int> ids;
    for (const ProjPoint& p : points_on_line(f, l)) {
      int id = curve.point_id(p);
      if (id >= 0) ids.push_back(id);
    }
    if (ids.size() == curve.q() + 1) {
      std::sort(ids.begin(), ids.end());
      sections.push_back(std::move(ids));
    } else if (ids.size() > 1) {
      throw std::logic_error("minwords: line section outside the dichotomy");
    }
  }
  return sections;
}

void push_subsets(const std::vector<int>& section, int w, SupportFamily fam,
                  std::vector<SupportSet>& out) {
  if (w > static_cast<int>(section.size())) return;
  CombinationIter iter(static_cast<int>(section.size()), w);
  do {
    std::vector<int> s;
    s.reserve(w);
    for (int i : iter.current()) s.push_back(section[i]);
    out.push_back({fam, std::move(s)});
  } while (iter.next());
}

}  // namespace

int dual_delta(unsigned q, int d, int a) {
  validate_da(q, d, a);
  if (d <= static_cast<int>(q) - 1) return a == 0 ? d + 2 : d + 1;
  // d = q
  if (a == 0) return 2 * q + 2;
  if (a == 1) return 2 * q + 1;
  return 2 * q;
}

std::uint64_t closed_form_count(unsigned q, int d, int a) {
  validate_da(q, d, a);
  const std::uint64_t q2 = static_cast<std::uint64_t>(q) * q;
  const std::uint64_t scalars = q2 - 1;
  if (d <= static_cast<int>(q) - 1) {
    const int delta = dual_delta(q, d, a);
    if (a == 0) {
      std::uint64_t lines_r = q2 * q2 - q2 * q;  // q^4 - q^3
      return scalars * (q2 * binomial(q, delta) + lines_r * binomial(q + 1, delta));
    }
    return scalars * q2 * binomial(q, delta);
  }
  if (a >= 2 && a < static_cast<int>(q)) {
    std::uint64_t pairs = binomial(q2, 2);
    if (q % 2 == 0) return scalars * pairs;
    std::uint64_t parabolas = q2 * (q + 1) * (q - 1) / 2;
    return scalars * (parabolas + pairs);
  }
  throw std::invalid_argument("closed_form_count: no closed form for this (d, a)");
}

std::vector<SupportSet> enumerate_supports(const HermitianCurve& curve, int d, int a,
                                           const Budget& budget) {
  const unsigned q = curve.q();
  validate_da(q, d, a);
  const Field& f = curve.field();
  const int delta = dual_delta(q, d, a);
  std::vector<SupportSet> out;

  if (d <= static_cast<int>(q) - 1) {
    for (Fel x = 0; x < f.order(); ++x)
      push_subsets(curve.fiber(x), delta, SupportFamily::line_rinf, out);
    if (a == 0)
      for (const auto& section : r_line_sections(curve))
        push_subsets(section, delta, SupportFamily::line_r, out);
    return out;
  }

  // d = q
  if (a >= 2 && a < static_cast<int>(q)) {
    for (Fel x1 = 0; x1 < f.order(); ++x1)
      for (Fel x2 = x1 + 1; x2 < f.order(); ++x2) {
        std::vector<int> s = curve.fiber(x1);
        s.insert(s.end(), curve.fiber(x2).begin(), curve.fiber(x2).end());
        std::sort(s.begin(), s.end());
        out.push_back({SupportFamily::conic_pair_lines, std::move(s)});
      }
    if (q % 2 == 1) {
      for (Fel pa = 1; pa < f.order(); ++pa)
        for (Fel pb = 0; pb < f.order(); ++pb)
          for (Fel pc = 0; pc < f.order(); ++pc) {
            std::vector<int> s;
            for (Fel x = 0; x < f.order(); ++x) {
              Fel y = f.add(f.mul(pa, f.mul(x, x)), f.add(f.mul(pb, x), pc));
              int id = curve.point_id(ProjPoint{x, y, 1});
              if (id >= 0) s.push_back(id);
            }
            if (static_cast<int>(s.size()) == delta) {
              std::sort(s.begin(), s.end());
              out.push_back({SupportFamily::conic_parabola, std::move(s)});
            }
          }
    }
    return out;
  }

  if (a <= 1) {
    // Assemble from the full conic census; only conics passing through P_inf
    // qualify when a = 1 (the support plus P_inf must lie on the conic).
    const Fel n = f.order();
    std::uint64_t conics = 0;
    {
      std::uint64_t block = 1;
      for (int lead = 0; lead < 6; ++lead) {
        conics += block;
        block *= n;
      }
    }
    if (conics > budget.max_subsets)
      throw budget_error("enumerate_supports: conic census budget exceeded");

    std::set<std::vector<int>> seen;
    std::array<Fel, 6> coeff{};
    for (int lead = 0; lead < 6; ++lead) {
      std::uint64_t combos = 1;
      for (int i = 0; i < lead; ++i) combos *= n;
      for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::uint64_t v = idx;
        coeff.fill(0);
        for (int i = 0; i < lead; ++i) {
          coeff[i] = static_cast<Fel>(v % n);
          v /= n;
        }
        coeff[lead] = 1;
        Conic t{coeff};
        if (a == 1 && t.c[1] != 0) continue;  // P_inf on the conic iff B = 0
        std::vector<int> s;
        for (std::size_t id = 0; id < curve.affine_points().size(); ++id)
          if (on_conic(f, t, curve.affine_points()[id])) s.push_back(static_cast<int>(id));
        if (static_cast<int>(s.size()) < delta) continue;
        if (static_cast<int>(s.size()) > delta)
          throw std::logic_error("enumerate_supports: conic section exceeds the degree bound");
        if (!seen.insert(s).second) continue;
        SupportFamily fam = is_smooth_conic(f, t) ? SupportFamily::conic_parabola
                                                  : SupportFamily::conic_pair_lines;
        out.push_back({fam, std::move(s)});
      }
    }
    return out;
  }

  throw std::invalid_argument("enumerate_supports: (q, q) has no support characterization");
}

MinWeightCensus verify_min_words(const HermitianCurve& curve, int d, int a,
                                 bool exhaustive, const Budget& budget) {
  const unsigned q = curve.q();
  validate_da(q, d, a);

  MinWeightCensus census;
  census.q = q;
  census.d = d;
  census.a = a;
  census.delta = dual_delta(q, d, a);

  LinearCode code = build_code_da(curve, d, a);
  std::vector<SupportSet> supports = enumerate_supports(curve, d, a, budget);
  census.support_count = supports.size();

  const std::uint64_t scalars = static_cast<std::uint64_t>(q) * q - 1;
  census.a_delta = census.support_count * scalars;

  census.kernel_verified = true;
  {
    SupportOracle oracle(code.generator());
    for (const auto& s : supports) {
      ++census.families[to_string(s.family)];
      auto res = oracle.query(s.points);
      if (res.dimension != 1 || !res.has_full_support) {
        census.kernel_verified = false;
        if (!census.counterexample || s.points < *census.counterexample)
          census.counterexample = s.points;
        ++census.missing_supports;
      }
    }
  }

  try {
    census.closed_form = closed_form_count(q, d, a);
    census.closed_form_matches = (*census.closed_form == census.a_delta);
  } catch (const std::invalid_argument&) {
    census.closed_form.reset();
    census.closed_form_matches = true;  // nothing to compare
  }

  if (exhaustive) {
    const int n = static_cast<int>(code.length());
    const int w = census.delta;
    std::uint64_t count = binomial(n, w);
    if (count > budget.max_subsets)
      throw budget_error("verify_min_words: exhaustive subset budget exceeded");

    std::set<std::vector<int>> enumerated;
    for (const auto& s : supports) enumerated.insert(s.points);

    const unsigned workers = resolve_workers(budget.workers);
    std::vector<std::uint64_t> extra(workers, 0);
    std::vector<std::uint64_t> genuine(workers, 0);
    std::vector<std::vector<int>> worker_counterexample(workers);
    parallel_blocks(count, workers, [&](unsigned wid, std::uint64_t begin, std::uint64_t end) {
      SupportOracle oracle(code.generator());
      CombinationIter iter(n, w);
      iter.seek(begin);
      for (std::uint64_t i = begin; i < end; ++i) {
        const std::vector<int>& s = iter.current();
        auto res = oracle.query(s);
        if (res.has_full_support) {
          ++genuine[wid];
          if (!enumerated.count(s)) {
            ++extra[wid];
            if (worker_counterexample[wid].empty() || s < worker_counterexample[wid])
              worker_counterexample[wid] = s;
          }
        }
        iter.next();
      }
    });
    census.exhaustive_checked = true;
    std::uint64_t genuine_total = 0;
    for (unsigned i = 0; i < workers; ++i) {
      census.extra_supports += extra[i];
      genuine_total += genuine[i];
      if (!worker_counterexample[i].empty() &&
          (!census.counterexample || worker_counterexample[i] < *census.counterexample))
        census.counterexample = worker_counterexample[i];
    }
    // Every enumerated support must also be found genuine by the scan.
    if (genuine_total != census.support_count + census.extra_supports - census.missing_supports)
      census.kernel_verified = false;
  }
  return census;
}

}  // namespace hermitian
