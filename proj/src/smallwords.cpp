#include "hermitian/smallwords.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hermitian/onepoint.hpp"

namespace hermitian {

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::a: return "a";
    case CaseTag::b: return "b";
    case CaseTag::c: return "c";
    case CaseTag::d: return "d";
    case CaseTag::e: return "e";
    case CaseTag::outside_range: return "outside_range";
    case CaseTag::unclassified: return "unclassified";
  }
  return "?";
}

std::pair<int, int> sweep_weight_range(int d, int a) {
  int lo = d + 2 - a;
  int hi = std::max(2 * d + 1, 3 * d - 1) - a;
  return {std::max(lo, 1), hi};
}

namespace {

struct LineInfo {
  Line line;
  int deg = 0;       // deg(L n (E u S))
  int ord_inf = 0;   // branch order at P_inf (0, 1, or q+1)
  bool r_inf = false;  // through P_inf, non-tangent
  std::vector<bool> hits;  // which points of S lie on the line
};

ProjPoint meet(const Field& f, const Line& l, const Line& m) {
  // Dual cross product.
  Fel x = f.sub(f.mul(l.b, m.c), f.mul(l.c, m.b));
  Fel y = f.sub(f.mul(l.c, m.a), f.mul(l.a, m.c));
  Fel z = f.sub(f.mul(l.a, m.b), f.mul(l.b, m.a));
  return canonical_point(f, x, y, z);
}

}  // namespace

ClassifyResult classify_support(const HermitianCurve& curve, int d, int a,
                                const std::vector<int>& s) {
  const int q = static_cast<int>(curve.q());
  if (d < 1 || d > q - 1 || a < 0 || a > d)
    throw std::invalid_argument("classify_support: (d, a) out of range");
  {
    std::vector<int> dup = s;
    std::sort(dup.begin(), dup.end());
    if (std::adjacent_find(dup.begin(), dup.end()) != dup.end())
      throw std::invalid_argument("classify_support: duplicate points");
    for (int id : dup)
      if (id < 0 || static_cast<std::size_t>(id) >= curve.affine_points().size())
        throw std::invalid_argument("classify_support: point id out of range");
  }

  const Field& f = curve.field();
  const int w = static_cast<int>(s.size());
  ClassifyResult out;

  const bool range1 = (d + 2 <= a + w) && (a + w <= 2 * d + 1);
  const bool range2 = (2 * d + 2 <= a + w) && (a + w <= 3 * d - 1);
  if (!range1 && !range2) {
    out.primary = CaseTag::outside_range;
    out.all = {CaseTag::outside_range};
    return out;
  }

  auto record = [&out](CaseTag tag) {
    out.all.push_back(tag);
    if (out.primary == CaseTag::unclassified) out.primary = tag;
  };

  // Cases (a)/(b): S inside a single line section.
  if (w >= 2) {
    const ProjPoint& p0 = curve.affine_points()[s[0]];
    const ProjPoint& p1 = curve.affine_points()[s[1]];
    Line l = line_through(f, p0, p1);
    bool collinear = true;
    for (int id : s)
      if (!on_line(f, l, curve.affine_points()[id])) {
        collinear = false;
        break;
      }
    if (collinear) {
      bool through_inf = on_line(f, l, curve.p_infinity());
      if (through_inf && w >= d + 1) {
        record(CaseTag::a);
        out.line1 = l;
      } else if (!through_inf && w >= d + 2) {
        record(CaseTag::b);
        out.line1 = l;
      }
    }
  }

  if (range2) {
    // Candidate lines: any line relevant to cases (c)/(d) meets E u S in
    // degree >= d+1 >= 2, hence passes through two points of S u {P_inf}.
    std::vector<ProjPoint> pts;
    for (int id : s) pts.push_back(curve.affine_points()[id]);
    pts.push_back(curve.p_infinity());
    std::set<Line> cand_set;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        cand_set.insert(line_through(f, pts[i], pts[j]));

    std::vector<LineInfo> cand;
    for (const Line& l : cand_set) {
      LineInfo info;
      info.line = l;
      info.hits.resize(s.size());
      int count = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        info.hits[i] = on_line(f, l, curve.affine_points()[s[i]]);
        if (info.hits[i]) ++count;
      }
      bool through_inf = on_line(f, l, curve.p_infinity());
      bool tangent_inf = (l.a == 0 && l.b == 0);  // z = 0
      info.ord_inf = tangent_inf ? q + 1 : (through_inf ? 1 : 0);
      info.r_inf = through_inf && !tangent_inf;
      info.deg = count + std::min(a, info.ord_inf);
      cand.push_back(std::move(info));
    }

    auto pair_matches_c = [&](const LineInfo& l, const LineInfo& m) {
      if (l.deg < d + 2 || m.deg < d + 1) return false;
      int e_union = std::min(a, l.ord_inf + m.ord_inf);
      if (e_union + w < 2 * d + 2) return false;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!l.hits[i] && !m.hits[i]) return false;  // S inside L u M
      bool l_r = !on_line(f, l.line, curve.p_infinity());
      bool m_r = !on_line(f, m.line, curve.p_infinity());
      if (l_r && m_r) return w >= 2 * d + 3;
      if (l.r_inf && m.r_inf) return w >= 2 * d + 1;
      if ((l_r && m.r_inf) || (m_r && l.r_inf)) return w >= 2 * d + 2;
      return false;  // a tangent line can never carry the required degree
    };

    auto pair_matches_d = [&](const LineInfo& l, const LineInfo& m) {
      if (l.deg != d + 1 || m.deg != d + 1) return false;
      int e_union = std::min(a, l.ord_inf + m.ord_inf);
      if (e_union + w < 2 * d + 2) return false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (l.hits[i] && m.hits[i]) return false;  // L n M n S = empty
        if (!l.hits[i] && !m.hits[i]) return false;
      }
      ProjPoint x = meet(f, l.line, m.line);
      bool meet_at_inf = (x == curve.p_infinity());
      bool l_r = !on_line(f, l.line, curve.p_infinity());
      bool m_r = !on_line(f, m.line, curve.p_infinity());
      if (w == 2 * d && a >= 2 && meet_at_inf) return true;
      if (w == 2 * d + 1 && a >= 1 && ((l_r && m.r_inf) || (m_r && l.r_inf))) return true;
      if (w == 2 * d + 2 && l_r && m_r) return true;
      return false;
    };

    bool found_c = false, found_d = false;
    for (std::size_t i = 0; i < cand.size() && !(found_c && found_d); ++i)
      for (std::size_t j = 0; j < cand.size(); ++j) {
        if (i == j) continue;
        if (!found_c && pair_matches_c(cand[i], cand[j])) {
          found_c = true;
          if (!out.line1) {
            out.line1 = cand[i].line;
            out.line2 = cand[j].line;
          }
        }
        if (!found_d && pair_matches_d(cand[i], cand[j])) {
          found_d = true;
          if (!out.line1) {
            out.line1 = cand[i].line;
            out.line2 = cand[j].line;
          }
        }
      }
    if (found_c) record(CaseTag::c);
    if (found_d) record(CaseTag::d);

    // Case (e): a smooth conic through all of S with enough contact at P_inf.
    if (w >= 2 * d + 2 - std::min(2, a)) {
      Matrix sys(curve.field_ptr(), s.size(), 6);
      for (std::size_t i = 0; i < s.size(); ++i) {
        const ProjPoint& p = curve.affine_points()[s[i]];
        sys.at(i, 0) = f.mul(p.x, p.x);
        sys.at(i, 1) = f.mul(p.y, p.y);
        sys.at(i, 2) = f.mul(p.z, p.z);
        sys.at(i, 3) = f.mul(p.x, p.y);
        sys.at(i, 4) = f.mul(p.x, p.z);
        sys.at(i, 5) = f.mul(p.y, p.z);
      }
      RrefResult rr = rref_rank_kernel(sys);
      const std::size_t dim = rr.kernel.rows;
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < dim; ++i) {
        combos *= f.order();
        if (combos > (std::uint64_t{1} << 20))
          throw budget_error("classify_support: too many conics through S");
      }
      for (std::uint64_t code = 1; code < combos; ++code) {
        std::uint64_t v = code;
        std::array<Fel, 6> coeff{};
        for (std::size_t i = 0; i < dim; ++i) {
          Fel lambda = static_cast<Fel>(v % f.order());
          v /= f.order();
          if (lambda == 0) continue;
          for (int t = 0; t < 6; ++t)
            coeff[t] = f.add(coeff[t], f.mul(lambda, rr.kernel.at(i, t)));
        }
        bool zero = std::all_of(coeff.begin(), coeff.end(), [](Fel x) { return x == 0; });
        if (zero) continue;
        Conic t = canonical_conic(f, coeff);
        if (!is_smooth_conic(f, t)) continue;
        int contact = std::min(a, order_at_infinity(curve, t));
        if (contact + w >= 2 * d + 2) {
          record(CaseTag::e);
          out.conic = t;
          break;
        }
      }
    }
  }

  if (out.all.empty()) out.primary = CaseTag::unclassified;
  return out;
}

SweepReport soundness_sweep(const HermitianCurve& curve, int d, int a, int w_min,
                            int w_max, const Budget& budget) {
  const int q = static_cast<int>(curve.q());
  if (d < 1 || d > q - 1 || a < 0 || a > d)
    throw std::invalid_argument("soundness_sweep: (d, a) out of range");

  SweepReport rep;
  rep.q = curve.q();
  rep.d = d;
  rep.a = a;
  rep.w_min = w_min;
  rep.w_max = w_max;

  LinearCode code = build_code_da(curve, d, a);
  const int n = static_cast<int>(code.length());

  std::uint64_t planned = 0;
  for (int w = w_min; w <= w_max; ++w) {
    std::uint64_t cnt = binomial(n, w);
    if (cnt > budget.max_subsets - planned)
      throw budget_error("soundness_sweep: subset budget exceeded");
    planned += cnt;
  }

  const unsigned workers = resolve_workers(budget.workers);
  for (int w = w_min; w <= w_max; ++w) {
    std::uint64_t count = binomial(n, w);
    std::vector<std::map<std::string, std::uint64_t>> hist(workers);
    std::vector<std::uint64_t> genuine(workers, 0), unclassified(workers, 0);
    std::vector<std::vector<int>> bad(workers);
    parallel_blocks(count, workers, [&](unsigned wid, std::uint64_t begin, std::uint64_t end) {
      SupportOracle oracle(code.generator());
      CombinationIter iter(n, w);
      iter.seek(begin);
      for (std::uint64_t i = begin; i < end; ++i) {
        const std::vector<int>& s = iter.current();
        if (oracle.query(s).has_full_support) {
          ++genuine[wid];
          ClassifyResult c = classify_support(curve, d, a, s);
          ++hist[wid][to_string(c.primary)];
          if (c.primary == CaseTag::unclassified) {
            ++unclassified[wid];
            if (bad[wid].empty() || s < bad[wid]) bad[wid] = s;
          }
        }
        iter.next();
      }
    });
    for (unsigned i = 0; i < workers; ++i) {
      rep.genuine += genuine[i];
      rep.unclassified += unclassified[i];
      for (const auto& [k, v] : hist[i]) rep.histogram[k] += v;
      if (!bad[i].empty() && (!rep.counterexample || bad[i] < *rep.counterexample))
        rep.counterexample = bad[i];
    }
  }

  // Converse for the single-line range: every qualifying subset of a line
  // section carries a dual word of full support.
  rep.converse_checked = true;
  SupportOracle oracle(code.generator());
  auto check_sets = [&](const std::vector<int>& section, int w) {
    if (w > static_cast<int>(section.size())) return;
    CombinationIter iter(static_cast<int>(section.size()), w);
    do {
      std::vector<int> sub;
      for (int i : iter.current()) sub.push_back(section[i]);
      ++rep.converse_candidates;
      if (!oracle.query(sub).has_full_support) {
        ++rep.converse_failures;
        if (!rep.counterexample || sub < *rep.counterexample) rep.counterexample = sub;
      }
    } while (iter.next());
  };
  for (int w = w_min; w <= w_max; ++w) {
    if (a + w < d + 2 || a + w > 2 * d + 1) continue;
    if (w >= d + 1)
      for (Fel x = 0; x < curve.field().order(); ++x) check_sets(curve.fiber(x), w);
    if (w >= d + 2) {
      const Field& f = curve.field();
      for (const Line& l : all_lines(f)) {
        if (on_line(f, l, curve.p_infinity())) continue;
        std::vector<int> ids;
        for (const ProjPoint& p : points_on_line(f, l)) {
          int id = curve.point_id(p);
          if (id >= 0) ids.push_back(id);
        }
        if (ids.size() == curve.q() + 1) {
          std::sort(ids.begin(), ids.end());
          check_sets(ids, w);
        }
      }
    }
  }
  return rep;
}

}  // namespace hermitian
