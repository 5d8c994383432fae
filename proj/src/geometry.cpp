#include "hermitian/geometry.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hermitian {

namespace {

std::uint64_t encode(const ProjPoint& p) {
  return (static_cast<std::uint64_t>(p.x) << 42) |
         (static_cast<std::uint64_t>(p.y) << 21) | p.z;
}

}  // namespace

ProjPoint canonical_point(const Field& f, Fel x, Fel y, Fel z) {
  Fel s;
  if (z != 0)
    s = f.inv(z);
  else if (y != 0)
    s = f.inv(y);
  else if (x != 0)
    s = f.inv(x);
  else
    throw std::invalid_argument("point: all coordinates zero");
  return ProjPoint{f.mul(x, s), f.mul(y, s), f.mul(z, s)};
}

Line canonical_line(const Field& f, Fel a, Fel b, Fel c) {
  ProjPoint p = canonical_point(f, a, b, c);
  return Line{p.x, p.y, p.z};
}

Conic canonical_conic(const Field& f, const std::array<Fel, 6>& c) {
  int last = -1;
  for (int i = 5; i >= 0; --i)
    if (c[i] != 0) {
      last = i;
      break;
    }
  if (last < 0) throw std::invalid_argument("conic: all coefficients zero");
  Fel s = f.inv(c[last]);
  Conic r;
  for (int i = 0; i < 6; ++i) r.c[i] = f.mul(c[i], s);
  return r;
}

bool on_line(const Field& f, const Line& l, const ProjPoint& p) {
  Fel v = f.add(f.add(f.mul(l.a, p.x), f.mul(l.b, p.y)), f.mul(l.c, p.z));
  return v == 0;
}

Fel eval_conic(const Field& f, const Conic& c, const ProjPoint& p) {
  Fel v = 0;
  v = f.add(v, f.mul(c.c[0], f.mul(p.x, p.x)));
  v = f.add(v, f.mul(c.c[1], f.mul(p.y, p.y)));
  v = f.add(v, f.mul(c.c[2], f.mul(p.z, p.z)));
  v = f.add(v, f.mul(c.c[3], f.mul(p.x, p.y)));
  v = f.add(v, f.mul(c.c[4], f.mul(p.x, p.z)));
  v = f.add(v, f.mul(c.c[5], f.mul(p.y, p.z)));
  return v;
}

bool on_conic(const Field& f, const Conic& c, const ProjPoint& p) {
  return eval_conic(f, c, p) == 0;
}

Line line_through(const Field& f, const ProjPoint& p, const ProjPoint& q) {
  Fel a = f.sub(f.mul(p.y, q.z), f.mul(p.z, q.y));
  Fel b = f.sub(f.mul(p.z, q.x), f.mul(p.x, q.z));
  Fel c = f.sub(f.mul(p.x, q.y), f.mul(p.y, q.x));
  if (a == 0 && b == 0 && c == 0)
    throw std::invalid_argument("line_through: points coincide");
  return canonical_line(f, a, b, c);
}

std::vector<ProjPoint> all_points(const Field& f) {
  std::vector<ProjPoint> pts;
  const Fel n = f.order();
  pts.reserve(static_cast<std::size_t>(n) * n + n + 1);
  for (Fel x = 0; x < n; ++x)
    for (Fel y = 0; y < n; ++y) pts.push_back({x, y, 1});
  for (Fel x = 0; x < n; ++x) pts.push_back({x, 1, 0});
  pts.push_back({1, 0, 0});
  return pts;
}

std::vector<Line> all_lines(const Field& f) {
  std::vector<Line> ls;
  const Fel n = f.order();
  ls.reserve(static_cast<std::size_t>(n) * n + n + 1);
  for (Fel a = 0; a < n; ++a)
    for (Fel b = 0; b < n; ++b) ls.push_back({a, b, 1});
  for (Fel a = 0; a < n; ++a) ls.push_back({a, 1, 0});
  ls.push_back({1, 0, 0});
  return ls;
}

std::vector<ProjPoint> points_on_line(const Field& f, const Line& l) {
  std::vector<ProjPoint> pts;
  pts.reserve(f.order() + 1);
  if (l.b != 0) {
    for (Fel x = 0; x < f.order(); ++x) {
      Fel y = f.div(f.neg(f.add(f.mul(l.a, x), l.c)), l.b);
      pts.push_back({x, y, 1});
    }
    pts.push_back(canonical_point(f, 1, f.div(f.neg(l.a), l.b), 0));
  } else if (l.a != 0) {
    Fel x = f.div(f.neg(l.c), l.a);
    for (Fel y = 0; y < f.order(); ++y) pts.push_back({x, y, 1});
    pts.push_back({0, 1, 0});
  } else {
    // z = 0
    for (Fel x = 0; x < f.order(); ++x) pts.push_back({x, 1, 0});
    pts.push_back({1, 0, 0});
  }
  return pts;
}

Conic line_pair_conic(const Field& f, const Line& l, const Line& m) {
  std::array<Fel, 6> c;
  c[0] = f.mul(l.a, m.a);
  c[1] = f.mul(l.b, m.b);
  c[2] = f.mul(l.c, m.c);
  c[3] = f.add(f.mul(l.a, m.b), f.mul(l.b, m.a));
  c[4] = f.add(f.mul(l.a, m.c), f.mul(l.c, m.a));
  c[5] = f.add(f.mul(l.b, m.c), f.mul(l.c, m.b));
  return canonical_conic(f, c);
}

Conic parabola_conic(const Field& f, Fel a, Fel b, Fel c) {
  // y z = a x^2 + b x z + c z^2
  return canonical_conic(f, {a, 0, c, 0, b, f.neg(1)});
}

namespace {

// Quadratic extension of a field together with the index embedding, used to
// factor conics in characteristic 2. Built once per base field.
struct QuadExt {
  std::shared_ptr<const Field> ext;
  std::vector<Fel> embed;
};

const QuadExt& quad_ext(const Field& f) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, QuadExt> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(f.p(), f.k());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QuadExt qe;
  qe.ext = Field::build(f.p(), 2 * f.k());
  qe.embed = find_embedding(f, *qe.ext);
  return cache.emplace(key, std::move(qe)).first->second;
}

bool has_linear_factor(const Field& ext, const Conic& c) {
  // A linear form divides a conic exactly when the conic vanishes on the
  // whole line it cuts out; a conic without that factor misses one of any
  // three points of the line.
  for (const Line& l : all_lines(ext)) {
    bool divides = true;
    for (const ProjPoint& p : points_on_line(ext, l)) {
      if (eval_conic(ext, c, p) != 0) {
        divides = false;
        break;
      }
    }
    if (divides) return true;
  }
  return false;
}

}  // namespace

bool is_smooth_conic(const Field& f, const Conic& c) {
  bool all_zero = std::all_of(c.c.begin(), c.c.end(), [](Fel v) { return v == 0; });
  if (all_zero) throw std::invalid_argument("conic: all coefficients zero");
  if (f.p() != 2) {
    // Determinant of the symmetric-form matrix [[2A,D,E],[D,2B,F],[E,F,2C]];
    // no division by 2 required.
    Fel two = f.add(1, 1);
    const Fel a = f.mul(two, c.c[0]), b = f.mul(two, c.c[1]), cc = f.mul(two, c.c[2]);
    const Fel d = c.c[3], e = c.c[4], ff = c.c[5];
    // det [[a,d,e],[d,b,ff],[e,ff,cc]]
    Fel det = f.mul(a, f.sub(f.mul(b, cc), f.mul(ff, ff)));
    det = f.sub(det, f.mul(d, f.sub(f.mul(d, cc), f.mul(ff, e))));
    det = f.add(det, f.mul(e, f.sub(f.mul(d, ff), f.mul(b, e))));
    return det != 0;
  }
  // Characteristic 2: look for an explicit linear factor over the quadratic
  // extension (conjugate factors live there when they are not rational).
  const QuadExt& qe = quad_ext(f);
  Conic lifted;
  for (int i = 0; i < 6; ++i) lifted.c[i] = qe.embed[c.c[i]];
  return !has_linear_factor(*qe.ext, lifted);
}

HermitianCurve HermitianCurve::build(unsigned q) {
  if (q < 2 || q > 16) throw std::invalid_argument("curve: q out of supported range");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (!is_prime(p)) throw std::invalid_argument("curve: q must be a prime power");
  unsigned e = 0;
  for (unsigned v = q; v > 1; v /= p) {
    if (v % p != 0) throw std::invalid_argument("curve: q must be a prime power");
    ++e;
  }

  HermitianCurve curve;
  curve.q_ = q;
  curve.field_ = Field::build(p, 2 * e);
  const Field& f = *curve.field_;
  if (f.subfield_order() != q) throw std::logic_error("curve: subfield mismatch");

  // Fibers of the trace map partition F_{q^2} into q classes of size q.
  std::vector<std::vector<Fel>> by_trace(f.order());
  for (Fel y = 0; y < f.order(); ++y) by_trace[f.trace_to_subfield(y)].push_back(y);

  curve.fibers_.resize(f.order());
  for (Fel x = 0; x < f.order(); ++x) {
    Fel rhs = f.norm_to_subfield(x);  // x^(q+1), lands in F_q
    for (Fel y : by_trace[rhs]) {
      ProjPoint pt{x, y, 1};
      int id = static_cast<int>(curve.affine_.size());
      curve.affine_.push_back(pt);
      curve.fibers_[x].push_back(id);
      curve.index_.emplace(encode(pt), id);
    }
  }
  if (curve.affine_.size() != static_cast<std::size_t>(q) * q * q)
    throw std::logic_error("curve: affine point count is not q^3");
  curve.p_inf_ = ProjPoint{0, 1, 0};
  return curve;
}

bool HermitianCurve::on_curve(const ProjPoint& p) const {
  const Field& f = *field_;
  const unsigned q = q_;
  Fel lhs = f.add(f.mul(f.pow(p.y, q), p.z), f.mul(p.y, f.pow(p.z, q)));
  Fel rhs = f.pow(p.x, q + 1);
  return lhs == rhs;
}

int HermitianCurve::point_id(const ProjPoint& p) const {
  auto it = index_.find(encode(p));
  return it == index_.end() ? -1 : it->second;
}

Line HermitianCurve::tangent_line(const ProjPoint& p) const {
  if (!on_curve(p)) throw std::invalid_argument("tangent: point not on the curve");
  const Field& f = *field_;
  Fel a = f.neg(f.pow(p.x, q_));
  Fel b = f.pow(p.z, q_);
  Fel c = f.pow(p.y, q_);
  return canonical_line(f, a, b, c);
}

Line HermitianCurve::fiber_line(Fel x) const {
  // x = c*z, through P_inf
  return canonical_line(*field_, 1, 0, field_->neg(x));
}

LineClasses classify_lines(const HermitianCurve& curve) {
  const Field& f = curve.field();
  const unsigned q = curve.q();
  LineClasses out;
  for (const Line& l : all_lines(f)) {
    unsigned count = 0;
    for (const ProjPoint& p : points_on_line(f, l))
      if (curve.on_curve(p)) ++count;
    if (count == 1) {
      out.tangents.push_back(l);
    } else if (count == q + 1) {
      if (on_line(f, l, curve.p_infinity()))
        out.r_inf.push_back(l);
      else
        out.r.push_back(l);
    } else {
      throw std::logic_error("classify_lines: line profile outside the dichotomy");
    }
  }
  return out;
}

std::map<unsigned, std::uint64_t> parabola_census(const HermitianCurve& curve,
                                                  unsigned workers) {
  const Field& f = curve.field();
  const Fel n = f.order();
  const std::uint64_t total = static_cast<std::uint64_t>(n - 1) * n * n;
  const unsigned w = resolve_workers(workers);

  std::vector<std::vector<std::uint64_t>> partial(resolve_workers(w),
                                                  std::vector<std::uint64_t>(n + 1, 0));
  parallel_blocks(total, w, [&](unsigned wid, std::uint64_t begin, std::uint64_t end) {
    auto& hist = partial[wid];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      Fel a = static_cast<Fel>(idx / (static_cast<std::uint64_t>(n) * n)) + 1;
      Fel b = static_cast<Fel>((idx / n) % n);
      Fel c = static_cast<Fel>(idx % n);
      unsigned h = 0;
      for (Fel x = 0; x < n; ++x) {
        Fel y = f.add(f.mul(a, f.mul(x, x)), f.add(f.mul(b, x), c));
        if (f.trace_to_subfield(y) == f.norm_to_subfield(x)) ++h;
      }
      ++hist[h];
    }
  });

  std::map<unsigned, std::uint64_t> census;
  for (const auto& hist : partial)
    for (unsigned h = 0; h <= n; ++h)
      if (hist[h]) census[h] += hist[h];
  return census;
}

}  // namespace hermitian
