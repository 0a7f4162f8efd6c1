#include "kreweras/core/upoly.hpp"

#include <cstdint>
#include <optional>
#include <sstream>

namespace kreweras {

namespace detail {

namespace {
Int common_denominator(const std::vector<Rat>& v) {
  Int l = 1;
  for (const auto& c : v)
    if (c.den_ref() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  return l;
}

std::vector<Int> scaled_integers(const std::vector<Rat>& v, const Int& d) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (d == 1) {
      out[i] = v[i].num_ref();
    } else {
      Int q;
      mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), v[i].den_ref().get_mpz_t());
      out[i] = v[i].num_ref() * q;
    }
  }
  return out;
}
}  // namespace

std::vector<Rat> mul_dense(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  const Int da = common_denominator(a);
  const Int db = common_denominator(b);
  const auto ia = scaled_integers(a, da);
  const auto ib = scaled_integers(b, db);
  std::vector<Int> acc(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < ia.size(); ++i) {
    if (sgn(ia[i]) == 0) continue;
    for (std::size_t j = 0; j < ib.size(); ++j) mpz_addmul(acc[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
  }
  const Int d = da * db;
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.push_back(d == 1 ? Rat(v) : Rat(v, d));
  return out;
}

}  // namespace detail

// ---- Q[v] ----------------------------------------------------------------

std::pair<QX, QX> divrem(const QX& a, const QX& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
  if (a.degree() < b.degree()) return {QX(), a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  const Rat inv = b.lc().inverse();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    const Rat& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rat f = top * inv;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = std::move(f);
  }
  r.resize(static_cast<std::size_t>(db));
  return {QX(std::move(q)), QX(std::move(r))};
}

Rat content(const QX& a) {
  if (a.is_zero()) return Rat(1);
  Int g = 0, l = 1;
  for (const auto& c : a.coeffs()) {
    if (c.is_zero()) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num_ref().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  }
  Rat c(g, l);
  return a.lc().sign() < 0 ? -c : c;
}

QX primitive_part(const QX& a) {
  if (a.is_zero()) return a;
  return a.scaled(content(a).inverse());
}

QX monic(const QX& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.lc().inverse());
}

QX pseudo_rem(const QX& a, const QX& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_rem: zero divisor");
  QX r = a;
  const int db = b.degree();
  const Rat& lb = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    QX t = b.scaled(r.lc()).shifted(r.degree() - db);
    r = r.scaled(lb) - t;
  }
  return r;
}

namespace {

// Images modulo the Mersenne prime 2^61 - 1, used to certify coprimality cheaply.
constexpr std::uint64_t kGcdPrime = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulm(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kGcdPrime);
}

std::uint64_t powm(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulm(a, a))
    if (e & 1) r = mulm(r, a);
  return r;
}

std::optional<std::vector<std::uint64_t>> image_mod(const QX& a) {
  std::vector<std::uint64_t> v;
  v.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    const std::uint64_t d = mpz_fdiv_ui(c.den_ref().get_mpz_t(), kGcdPrime);
    if (d == 0) return std::nullopt;
    std::uint64_t n = mpz_fdiv_ui(c.num_ref().get_mpz_t(), kGcdPrime);
    v.push_back(mulm(n, powm(d, kGcdPrime - 2)));
  }
  if (v.back() == 0) return std::nullopt;  // leading coefficient must survive
  return v;
}

void trim_mod(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// True when the images certify gcd(a, b) = 1 over Q.
bool coprime_by_image(const QX& a, const QX& b) {
  auto x = image_mod(a), y = image_mod(b);
  if (!x || !y) return false;
  std::vector<std::uint64_t> u = std::move(*x), w = std::move(*y);
  if (u.size() < w.size()) std::swap(u, w);
  while (w.size() > 1) {
    const std::uint64_t inv = powm(w.back(), kGcdPrime - 2);
    while (u.size() >= w.size()) {
      const std::uint64_t f = mulm(u.back(), inv);
      const std::size_t sh = u.size() - w.size();
      for (std::size_t i = 0; i < w.size(); ++i) u[sh + i] = (u[sh + i] + kGcdPrime - mulm(f, w[i])) % kGcdPrime;
      trim_mod(u);
      if (u.empty()) return false;
    }
    std::swap(u, w);
  }
  return w.size() == 1;
}


// Heuristic gcd: evaluate at a large integer, take the integer gcd, read the
// polynomial back from its balanced xi-adic digits, and accept it only if it
// divides both inputs.
using ZX = std::vector<Int>;

ZX to_zx(const QX& a) {
  Int l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  ZX v;
  for (const auto& c : a.coeffs()) v.push_back(Int(c.num_ref() * (l / c.den_ref())));
  return v;
}

QX from_zx(const ZX& v) {
  std::vector<Rat> c;
  for (const auto& z : v) c.emplace_back(z);
  return QX(std::move(c));
}

Int norm(const ZX& v) {
  Int m = 0;
  for (const auto& z : v)
    if (abs(z) > m) m = abs(z);
  return m;
}

Int zcontent(const ZX& v) {
  Int g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  return g;
}

Int eval_at(const ZX& v, const Int& xi) {
  Int r = 0;
  for (std::size_t i = v.size(); i-- > 0;) r = r * xi + v[i];
  return r;
}

ZX xi_adic(Int g, const Int& xi) {
  ZX out;
  const Int half = xi / 2;
  while (g != 0) {
    Int c;
    mpz_fdiv_r(c.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
    if (c > half) c -= xi;
    out.push_back(c);
    g = (g - c) / xi;
  }
  return out;
}

bool divides_q(const QX& d, const QX& a) { return divrem(a, d).second.is_zero(); }

Int next_xi(const Int& xi) { return xi * 73794 / 27011; }

// gcd of primitive a, b in Z[t] (up to sign), or none
std::optional<ZX> heu_uni(const ZX& a, const ZX& b) {
  const QX qa = from_zx(a), qb = from_zx(b);
  Int xi = 2 * std::min(norm(a), norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, xi = next_xi(xi)) {
    Int g;
    const Int va = eval_at(a, xi), vb = eval_at(b, xi);
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZX d = xi_adic(g, xi);
    if (d.empty()) continue;
    const Int c = zcontent(d);
    for (auto& z : d) z /= c;
    const QX qd = from_zx(d);
    if (qd.degree() == 0) return ZX{Int(1)};
    if (divides_q(qd, qa) && divides_q(qd, qb)) return d;
  }
  return std::nullopt;
}

}  // namespace

QX gcd(const QX& a, const QX& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0 || coprime_by_image(a, b)) return QX(1);
  {
    ZX za = to_zx(a), zb = to_zx(b);
    const Int ca = zcontent(za), cb = zcontent(zb);
    for (auto& z : za) z /= ca;
    for (auto& z : zb) z /= cb;
    if (auto g = heu_uni(za, zb)) return monic(from_zx(*g));
  }
  QX x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    QX r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return monic(x);
}

QX exact_div(const QX& a, const QX& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

Rat leading_rat(const QX& a) { return a.is_zero() ? Rat(0) : a.lc(); }

std::string to_string(const QX& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rat mag = c.sign() < 0 ? -c : c;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    if (i == 0 || !mag.is_one()) {
      os << mag.to_pretty();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---- Q[x][t] -------------------------------------------------------------

BiPoly pseudo_rem(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_rem: zero divisor");
  BiPoly r = a;
  const int db = b.degree();
  const QX& lb = b.lc();
  while (!r.is_zero() && r.degree() >= db) {
    BiPoly t = b.scaled(r.lc()).shifted(r.degree() - db);
    r = r.scaled(lb) - t;
  }
  return r;
}

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::domain_error("exact_div: zero divisor");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw std::domain_error("exact_div: nonzero remainder");
  std::vector<QX> r = a.coeffs();
  const int db = b.degree();
  std::vector<QX> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const QX& top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    QX f = exact_div(top, b.lc());
    for (int j = 0; j <= db; ++j) {
      const QX& bj = b.coeffs()[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) r[static_cast<std::size_t>(i - db + j)] -= f * bj;
    }
    q[static_cast<std::size_t>(i - db)] = std::move(f);
  }
  for (int i = 0; i < db; ++i)
    if (!r[static_cast<std::size_t>(i)].is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return BiPoly(std::move(q));
}

bool divides(const BiPoly& d, const BiPoly& a) {
  try {
    (void)exact_div(a, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

BiPoly exact_div_coeff(const BiPoly& a, const QX& c) {
  std::vector<QX> out;
  out.reserve(a.coeffs().size());
  for (const auto& q : a.coeffs()) out.push_back(q.is_zero() ? q : exact_div(q, c));
  return BiPoly(std::move(out));
}

QX content(const BiPoly& a) {
  if (a.is_zero()) return QX(1);
  QX g;
  for (const auto& c : a.coeffs()) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  // rational factor of a/g
  Int ng = 0, l = 1;
  for (const auto& c : a.coeffs()) {
    if (c.is_zero()) continue;
    QX q = g.degree() == 0 ? c : exact_div(c, g);
    for (const auto& r : q.coeffs()) {
      if (r.is_zero()) continue;
      mpz_gcd(ng.get_mpz_t(), ng.get_mpz_t(), r.num_ref().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.den_ref().get_mpz_t());
    }
  }
  Rat s(ng, l);
  if (a.lc().lc().sign() < 0) s = -s;
  return g.scaled(s);
}

BiPoly primitive_part(const BiPoly& a) {
  if (a.is_zero()) return a;
  return exact_div_coeff(a, content(a));
}

Rat leading_rat(const BiPoly& a) { return a.is_zero() ? Rat(0) : a.lc().lc(); }

QX eval_x(const BiPoly& a, const Rat& x0) {
  std::vector<Rat> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.eval(x0));
  return QX(std::move(out));
}

int degree_x(const BiPoly& a) {
  int d = -1;
  for (const auto& c : a.coeffs()) d = std::max(d, c.degree());
  return d;
}

BiPoly swap_vars(const BiPoly& a) {
  const int dx = degree_x(a);
  if (dx < 0) return BiPoly();
  std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(dx) + 1, std::vector<Rat>(a.coeffs().size(), Rat(0)));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& c = a.coeffs()[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) rows[j][i] = c[j];
  }
  std::vector<QX> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BiPoly(std::move(out));
}

namespace {

// A point where neither leading coefficient vanishes.

using ZZX = std::vector<ZX>;  // outer t, inner x

ZZX to_zzx(const BiPoly& a) {
  Int l = 1;
  for (const auto& q : a.coeffs())
    for (const auto& c : q.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den_ref().get_mpz_t());
  ZZX v;
  for (const auto& q : a.coeffs()) {
    ZX row;
    for (const auto& c : q.coeffs()) row.push_back(Int(c.num_ref() * (l / c.den_ref())));
    v.push_back(std::move(row));
  }
  return v;
}

std::optional<BiPoly> heu_bi(const BiPoly& a, const BiPoly& b) {
  const ZZX za = to_zzx(a), zb = to_zzx(b);
  Int na = 0, nb = 0;
  for (const auto& r : za) na = std::max(na, norm(r));
  for (const auto& r : zb) nb = std::max(nb, norm(r));
  Int xi = 2 * std::min(na, nb) + 29;
  for (int attempt = 0; attempt < 4; ++attempt, xi = next_xi(xi)) {
    ZX ea, eb;
    for (const auto& r : za) ea.push_back(eval_at(r, xi));
    for (const auto& r : zb) eb.push_back(eval_at(r, xi));
    while (!ea.empty() && ea.back() == 0) ea.pop_back();
    while (!eb.empty() && eb.back() == 0) eb.pop_back();
    if (static_cast<int>(ea.size()) != a.degree() + 1 || static_cast<int>(eb.size()) != b.degree() + 1) continue;
    // full gcd in Z[t] of the images, integer content included
    const Int ca = zcontent(ea), cb = zcontent(eb);
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    for (auto& z : ea) z /= ca;
    for (auto& z : eb) z /= cb;
    auto gt = heu_uni(ea, eb);
    if (!gt) continue;
    std::vector<QX> coeffs;
    for (const auto& z : *gt) coeffs.push_back(from_zx(xi_adic(z * cg, xi)));
    BiPoly g(coeffs);
    if (g.is_zero()) continue;
    Int c = 0;
    for (const auto& q : coeffs) {
      const ZX zq = to_zx(q);
      mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), zcontent(zq).get_mpz_t());
    }
    g = g.scaled(QX(Rat(Int(1), c)));
    if (divides(g, a) && divides(g, b)) return g;
  }
  return std::nullopt;
}

bool good_point(const QX& la, const QX& lb, Rat& out) {
  for (long k = 1; k < 64; ++k) {
    for (const long s : {1L, -1L}) {
      Rat x0(s * (k + 1), k);
      if (!la.eval(x0).is_zero() && !lb.eval(x0).is_zero()) {
        out = x0;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return BiPoly();
  auto normalize = [](const BiPoly& p) { return p.scaled(QX(leading_rat(p).inverse())); };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  const QX ca = content(a), cb = content(b);
  const QX cg = gcd(ca, cb);
  BiPoly x = exact_div_coeff(a, ca), y = exact_div_coeff(b, cb);
  if (x.degree() == 0 || y.degree() == 0) return BiPoly(cg);
  // A specialization with coprime images certifies a t-free gcd.
  Rat x0;
  if (good_point(x.lc(), y.lc(), x0)) {
    if (gcd(eval_x(x, x0), eval_x(y, x0)).degree() == 0) return BiPoly(cg);
  }
  if (auto g = heu_bi(x, y)) return normalize(g->scaled(cg));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    BiPoly r = pseudo_rem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  BiPoly g = primitive_part(x);
  g = g.scaled(cg);
  return normalize(g);
}

std::string to_string(const BiPoly& p, const std::string& outer, const std::string& inner) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const QX& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c, inner) << ")";
    if (i > 0) os << "*" << outer;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

BiPoly lift_t(const QX& p) {
  std::vector<QX> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return BiPoly(std::move(out));
}

BiPoly lift_x(const QX& p) { return BiPoly(p); }

}  // namespace kreweras
