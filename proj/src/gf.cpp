#include "hermitian/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

namespace {

constexpr Fel kMaxOrder = 1u << 20;
constexpr Fel kAddTableLimit = 1024;  // full add table below this order

// Polynomials over F_p as little-endian coefficient vectors.
using PolyP = std::vector<unsigned>;

PolyP decode_poly(Fel index, unsigned p, unsigned len) {
  PolyP c(len, 0);
  for (unsigned i = 0; i < len && index; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

unsigned degree(const PolyP& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i]) return static_cast<unsigned>(i);
  return 0;
}

bool is_zero_poly(const PolyP& c) {
  return std::all_of(c.begin(), c.end(), [](unsigned v) { return v == 0; });
}

// Remainder of a modulo monic m, both over F_p.
PolyP poly_mod(PolyP a, const PolyP& m, unsigned p) {
  int dm = static_cast<int>(degree(m));
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    unsigned c = a[i];
    if (!c) continue;
    for (int j = 0; j <= dm; ++j) {
      unsigned sub = (c * m[j]) % p;
      unsigned idx = i - dm + j;
      a[idx] = (a[idx] + p - sub % p) % p;
    }
  }
  a.resize(dm);
  return a;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, unsigned p) {
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Divisibility test of a monic candidate by a monic divisor, over F_p.
bool divides(const PolyP& divisor, const PolyP& candidate, unsigned p) {
  return is_zero_poly(poly_mod(candidate, divisor, p));
}

// Irreducibility of a monic polynomial of degree k over F_p, by trial
// division with every monic polynomial of degree 1..k/2.
bool is_irreducible(const PolyP& m, unsigned p) {
  unsigned k = degree(m);
  if (k == 0) return false;
  for (unsigned d = 1; 2 * d <= k; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      PolyP div = decode_poly(static_cast<Fel>(idx), p, d + 1);
      div[d] = 1;  // monic
      if (divides(div, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field> Field::build(unsigned p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
  if (k == 0) throw std::invalid_argument("field: k must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > kMaxOrder) throw std::invalid_argument("field: p^k exceeds 2^20");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->k_ = k;
  f->order_ = static_cast<Fel>(order);
  f->q_ = 0;
  if (k % 2 == 0) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k / 2; ++i) q *= p;
    f->q_ = static_cast<Fel>(q);
  }

  // Lexicographically smallest monic irreducible: scan coefficient tuples
  // with the constant term most significant, so low-degree coefficients are
  // minimized first.
  bool found = false;
  for (std::uint64_t j = 0; j < order && !found; ++j) {
    // Digits of j, most significant first, so the constant coefficient is
    // minimized before the higher ones.
    PolyP m(k + 1, 0);
    std::uint64_t v = j;
    for (int i = static_cast<int>(k) - 1; i >= 0; --i) {
      m[i] = v % p;
      v /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) {
      f->modulus_.assign(m.begin(), m.end());
      found = true;
    }
  }
  if (!found) throw std::logic_error("field: no irreducible modulus found");

  // Multiplication via discrete-log tables on a generator.
  const Fel n = f->order_;
  f->log_.assign(n, 0);
  f->exp_.assign(2 * (n - 1), 0);
  Fel generator = 0;
  for (Fel g = 1; g < n; ++g) {
    Fel x = 1;
    Fel ord = 0;
    do {
      x = f->poly_mul_mod(x, g);
      ++ord;
    } while (x != 1);
    if (ord == n - 1) {
      generator = g;
      break;
    }
  }
  if (generator == 0) throw std::logic_error("field: no generator found");
  Fel x = 1;
  for (Fel i = 0; i < n - 1; ++i) {
    f->exp_[i] = x;
    f->exp_[i + (n - 1)] = x;
    f->log_[x] = i;
    x = f->poly_mul_mod(x, generator);
  }

  if (p != 2 && n <= kAddTableLimit) {
    f->add_table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (Fel a = 0; a < n; ++a)
      for (Fel b = 0; b < n; ++b)
        f->add_table_[static_cast<std::size_t>(a) * n + b] = f->add_slow(a, b);
  }

  if (f->q_ != 0) {
    f->frob_.assign(n, 0);
    for (Fel a = 0; a < n; ++a) f->frob_[a] = f->pow(a, f->q_);
  }
  return f;
}

Fel Field::poly_mul_mod(Fel a, Fel b) const {
  PolyP pa = decode_poly(a, p_, k_), pb = decode_poly(b, p_, k_);
  PolyP prod = poly_mul(pa, pb, p_);
  PolyP mod(modulus_.begin(), modulus_.end());
  PolyP r = poly_mod(prod, mod, p_);
  Fel idx = 0;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) idx = idx * p_ + r[i];
  return idx;
}

Fel Field::add_slow(Fel a, Fel b) const {
  Fel r = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += mult * ((da + db) % p_);
    mult *= p_;
  }
  return r;
}

Fel Field::add(Fel a, Fel b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  return add_slow(a, b);
}

Fel Field::neg(Fel a) const {
  if (p_ == 2) return a;
  Fel r = 0, mult = 1, x = a;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned d = x % p_;
    x /= p_;
    r += mult * ((p_ - d) % p_);
    mult *= p_;
  }
  return r;
}

Fel Field::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel Field::mul(Fel a, Fel b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Fel Field::inv(Fel a) const {
  if (a == 0) throw std::invalid_argument("field: division by zero");
  return exp_[(order_ - 1) - log_[a]];
}

Fel Field::div(Fel a, Fel b) const {
  if (b == 0) throw std::invalid_argument("field: division by zero");
  if (a == 0) return 0;
  return exp_[log_[a] + (order_ - 1) - log_[b]];
}

Fel Field::pow(Fel x, long long e) const {
  if (e == 0) return 1;  // includes 0^0 = 1, the evaluation convention
  if (x == 0) {
    if (e < 0) throw std::invalid_argument("field: zero to a negative power");
    return 0;
  }
  long long m = order_ - 1;
  long long r = e % m;
  if (r < 0) r += m;
  return exp_[(static_cast<std::uint64_t>(log_[x]) * r) % m];
}

Fel Field::subfield_order() const {
  if (q_ == 0) throw std::invalid_argument("field: odd extension degree has no subfield pair");
  return q_;
}

Fel Field::frobenius(Fel x) const {
  subfield_order();
  return frob_[x];
}

Fel Field::trace_to_subfield(Fel x) const { return add(frobenius(x), x); }

Fel Field::norm_to_subfield(Fel x) const { return mul(frobenius(x), x); }

bool Field::in_subfield(Fel x) const { return frobenius(x) == x; }

std::vector<Fel> Field::solve_trace(Fel c) const {
  if (!in_subfield(c)) throw std::invalid_argument("field: trace equation target outside subfield");
  std::vector<Fel> r;
  r.reserve(subfield_order());
  for (Fel y = 0; y < order_; ++y)
    if (trace_to_subfield(y) == c) r.push_back(y);
  return r;
}

std::vector<unsigned> Field::digits(Fel a) const {
  std::vector<unsigned> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Fel Field::from_digits(const std::vector<unsigned>& d) const {
  Fel r = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    if (d[i] >= p_) throw std::invalid_argument("field: digit out of range");
    r = r * p_ + d[i];
  }
  return r;
}

void Field::check(Fel a) const {
  if (a >= order_) throw std::invalid_argument("field: element index out of range");
}

std::vector<Fel> find_embedding(const Field& sub, const Field& sup) {
  if (sub.p() != sup.p() || sup.k() % sub.k() != 0)
    throw std::invalid_argument("embedding: not a subfield pair");
  // Root of the subfield modulus in the big field, then map by evaluating
  // coefficient vectors at that root.
  Fel root = 0;
  bool found = false;
  for (Fel r = 0; r < sup.order() && !found; ++r) {
    Fel acc = 0;
    for (int i = static_cast<int>(sub.modulus().size()) - 1; i >= 0; --i)
      acc = sup.add(sup.mul(acc, r), sub.modulus()[i]);
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw std::logic_error("embedding: modulus has no root in the extension");
  std::vector<Fel> table(sub.order());
  for (Fel a = 0; a < sub.order(); ++a) {
    auto d = sub.digits(a);
    Fel acc = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
      acc = sup.add(sup.mul(acc, root), d[i]);
    table[a] = acc;
  }
  return table;
}

}  // namespace hermitian
