#include "kreweras/ore/oreop.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kreweras/core/linalg.hpp"

namespace kreweras {

namespace {

BiPoly gcd_all(const std::vector<BiPoly>& v, BiPoly g = BiPoly()) {
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    g = gcd(g, p);
    if (g.degree() == 0 && degree_x(g) == 0) break;
  }
  return g;
}

std::vector<BiPoly> trimmed(std::vector<BiPoly> c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

BiPoly scale(const BiPoly& p, const Rat& s) { return p.scaled(QX(s)); }

}  // namespace

OreOp::OreOp(std::vector<BiPoly> coeffs, BiPoly den) : c_(trimmed(std::move(coeffs))), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("OreOp: zero denominator");
  if (c_.empty()) den_ = BiPoly(1);
}

OreOp OreOp::D() { return OreOp({BiPoly(), BiPoly(1)}); }
OreOp OreOp::poly(const BiPoly& p) { return OreOp({p}); }

bool OreOp::has_x() const {
  for (const auto& p : c_)
    if (kreweras::degree_x(p) > 0) return true;
  return kreweras::degree_x(den_) > 0;
}

int OreOp::degree_t() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

int OreOp::degree_x() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, kreweras::degree_x(p));
  return d;
}

OreOp OreOp::reduced() const {
  if (is_zero()) return *this;
  BiPoly g = gcd_all(c_, den_);
  std::vector<BiPoly> c;
  for (const auto& p : c_) c.push_back(p.is_zero() ? p : exact_div(p, g));
  BiPoly d = exact_div(den_, g);
  const Rat s = leading_rat(d).inverse();
  for (auto& p : c) p = scale(p, s);
  return OreOp(std::move(c), scale(d, s));
}

OreOp OreOp::normalized() const {
  if (is_zero()) return *this;
  std::vector<BiPoly> c = primitive_vector(c_);
  if (leading_rat(c.back()).sign() < 0)
    for (auto& p : c) p = -p;
  return OreOp(std::move(c));
}

OreOp OreOp::operator-() const {
  OreOp r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

OreOp operator+(const OreOp& a, const OreOp& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<BiPoly> c(n);
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return OreOp(std::move(c), a.den_).reduced();
  }
  for (std::size_t i = 0; i < n; ++i) c[i] = b.den_ * a.coeff(static_cast<int>(i)) + a.den_ * b.coeff(static_cast<int>(i));
  return OreOp(std::move(c), a.den_ * b.den_).reduced();
}

OreOp OreOp::left_mul(const BiPoly& p) const {
  std::vector<BiPoly> c;
  for (const auto& q : c_) c.push_back(p * q);
  return OreOp(std::move(c), den_).reduced();
}

OreOp OreOp::d_left() const {
  if (is_zero()) return *this;
  std::vector<BiPoly> da(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    da[i] += c_[i].derivative();
    da[i + 1] += c_[i];
  }
  if (den_.degree() <= 0) return OreOp(std::move(da), den_);
  const BiPoly dd = den_.derivative();
  std::vector<BiPoly> c(da.size());
  for (std::size_t i = 0; i < da.size(); ++i) c[i] = den_ * da[i] - (i < c_.size() ? dd * c_[i] : BiPoly());
  return OreOp(std::move(c), den_ * den_).reduced();
}

OreOp operator*(const OreOp& a, const OreOp& b) {
  if (a.is_zero() || b.is_zero()) return OreOp();
  if (b.den_.degree() > 0) throw std::invalid_argument("Ore product: right factor must have a t-free denominator");
  OreOp bb = b;
  OreOp acc;
  for (int i = 0; i <= a.order(); ++i) {
    if (i > 0) bb = bb.d_left();
    if (!a.c_[static_cast<std::size_t>(i)].is_zero()) acc = acc + bb.left_mul(a.c_[static_cast<std::size_t>(i)]);
  }
  if (acc.is_zero()) return acc;
  return OreOp(acc.c_, acc.den_ * a.den_).reduced();
}

OreOp mul(const OreOp& l, const OreOp& m) { return l * m; }

bool operator==(const OreOp& a, const OreOp& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(b.den_ * a.c_[i] == a.den_ * b.c_[i])) return false;
  return true;
}

OreOp OreOp::eval_x(const Rat& x0) const {
  auto ev = [&](const BiPoly& p) { return lift_t(kreweras::eval_x(p, x0)); };
  std::vector<BiPoly> c;
  for (const auto& p : c_) c.push_back(ev(p));
  const BiPoly d = ev(den_);
  if (d.is_zero()) throw std::domain_error("OreOp::eval_x: denominator vanishes at this point");
  return OreOp(std::move(c), d);
}

std::string OreOp::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = order(); i >= 0; --i) {
    const BiPoly& p = c_[static_cast<std::size_t>(i)];
    if (p.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << kreweras::to_string(p) << ")";
    if (i > 0) os << "*D";
    if (i > 1) os << "^" << i;
  }
  if (den_.degree() > 0 || kreweras::degree_x(den_) > 0 || !leading_rat(den_).is_one()) return "(1/(" + kreweras::to_string(den_) + "))*(" + os.str() + ")";
  return os.str();
}

RightDivision right_divide(const OreOp& l, const OreOp& m) {
  if (m.is_zero()) throw std::domain_error("right_divide: division by the zero operator");
  const OreOp mm = m.reduced();
  if (mm.den().degree() > 0 || kreweras::degree_x(mm.den()) > 0)
    throw std::invalid_argument("right_divide: divisor must have a constant denominator");
  const OreOp mp(mm.coeffs());  // numerator of m; m = mp / c for a constant c
  const Rat mc = leading_rat(mm.den());
  std::vector<OreOp> dpow{mp};
  std::vector<BiPoly> a = l.coeffs();
  BiPoly mu(1);
  std::vector<BiPoly> q;
  const int om = mp.order();
  const BiPoly b = mp.coeffs().back();
  while (static_cast<int>(a.size()) - 1 >= om) {
    const int k = static_cast<int>(a.size()) - 1 - om;
    const BiPoly lead = a.back();
    while (static_cast<int>(dpow.size()) <= k) dpow.push_back(dpow.back().d_left());
    const BiPoly g = gcd(lead, b);
    const BiPoly bb = exact_div(b, g), aa = exact_div(lead, g);
    for (auto& c : a) c = bb * c;
    const auto& dk = dpow[static_cast<std::size_t>(k)].coeffs();
    for (std::size_t i = 0; i < dk.size(); ++i) a[i] -= aa * dk[i];
    if (!a.back().is_zero()) throw std::logic_error("right_divide: leading term not cancelled");
    a = trimmed(std::move(a));
    for (auto& c : q) c = bb * c;
    if (static_cast<int>(q.size()) <= k) q.resize(static_cast<std::size_t>(k) + 1);
    q[static_cast<std::size_t>(k)] += aa;
    mu = bb * mu;
  }
  // mu * numerator(l) = q * mp + a, and m = mp / mc, numerator(l) = den(l) * l
  const BiPoly den = mu * l.den();
  std::vector<BiPoly> qs;
  for (auto& c : q) qs.push_back(scale(c, mc));
  return {OreOp(std::move(qs), den).reduced(), OreOp(std::move(a), den).reduced()};
}

OreOp rrem(const OreOp& l, const OreOp& m) { return right_divide(l, m).rem; }
OreOp rquo(const OreOp& l, const OreOp& m) { return right_divide(l, m).quo; }

namespace {

/// Vector (1/den) * num over Q(x)(t).
struct RatVec {
  std::vector<BiPoly> num;
  BiPoly den;
};

RatVec reduce(RatVec v) {
  BiPoly g = gcd_all(v.num, v.den);
  for (auto& p : v.num)
    if (!p.is_zero()) p = exact_div(p, g);
  v.den = exact_div(v.den, g);
  const Rat s = leading_rat(v.den).inverse();
  for (auto& p : v.num) p = scale(p, s);
  v.den = scale(v.den, s);
  return v;
}

/// Smallest k with v_0, ..., v_k linearly dependent over Q(x)(t), where
/// v_{j+1} = derive(v_j); returns sum_j u_j D^j.
OreOp find_relation(const std::function<RatVec(const RatVec&)>& derive, RatVec v0, int max_order) {
  std::vector<RatVec> vs{reduce(std::move(v0))};
  const std::size_t dim = vs[0].num.size();
  for (int k = 0; k <= max_order; ++k) {
    if (k > 0) vs.push_back(reduce(derive(vs.back())));
    Matrix<BiPoly> a(dim, std::vector<BiPoly>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
      for (std::size_t i = 0; i < dim; ++i) a[i][j] = vs[j].num[i];
    const auto ns = ff_nullspace(a, vs.size());
    if (ns.empty()) continue;
    // w_j = u_j / den_j
    std::vector<BiPoly> u;
    for (std::size_t j = 0; j < vs.size(); ++j) u.push_back(ns[0][j] * vs[j].den);
    return OreOp(std::move(u)).normalized();
  }
  throw std::logic_error("find_relation: no relation within the order bound");
}

std::vector<BiPoly> zero_vec(std::size_t n) { return std::vector<BiPoly>(n); }

}  // namespace

OreOp lclm(const OreOp& l0, const OreOp& m0) {
  if (l0.is_zero() || m0.is_zero()) throw std::invalid_argument("lclm: zero operator");
  OreOp l = l0.normalized(), m = m0.normalized();
  if (l.order() < m.order()) std::swap(l, m);
  if (m.order() == 0) return l;
  // remainders r_j = rrem(D^j l, m), r_{j+1} = rrem(D r_j, m)
  const int om = m.order();
  auto as_vec = [om](const OreOp& r) {
    RatVec v{zero_vec(static_cast<std::size_t>(om)), r.den()};
    for (int i = 0; i <= r.order(); ++i) v.num[static_cast<std::size_t>(i)] = r.coeff(i);
    return v;
  };
  auto derive = [&](const RatVec& v) {
    const OreOp r = OreOp(v.num, v.den).d_left();
    return as_vec(rrem(r, m));
  };
  const OreOp u = find_relation(derive, as_vec(rrem(l, m)), om);
  // u = sum u_j D^j, lclm = u * l
  return (u * l).normalized();
}

OreOp sum_annihilator(const OreOp& l, const OreOp& m) { return lclm(l, m); }

OreOp integral_annihilator(const OreOp& l) { return (l.normalized() * OreOp::D()).normalized(); }

OreOp twist_annihilator(const OreOp& l0, const OreOp& m0) {
  const OreOp l = l0.normalized(), m = m0.normalized();
  if (m.order() != 1) throw std::invalid_argument("twist_annihilator: second operator must have order 1");
  // g' = -(p0/p1) g, and f = h/g gives f^(i) = ((D + p0/p1)^i h) / g.
  // (D + p0/p1)^i = p1^-i sum_j e_j D^j with e_j <- p1 e_j' - i p1' e_j + p0 e_j + p1 e_{j-1}
  const BiPoly p0 = m.coeff(0), p1 = m.coeff(1), dp1 = p1.derivative();
  const int n = l.order();
  std::vector<BiPoly> e{BiPoly(1)};
  std::vector<BiPoly> acc(static_cast<std::size_t>(n) + 1);
  std::vector<BiPoly> p1pows{BiPoly(1)};
  for (int i = 1; i <= n; ++i) p1pows.push_back(p1pows.back() * p1);
  for (int i = 0; i <= n; ++i) {
    const BiPoly& c = l.coeffs()[static_cast<std::size_t>(i)];
    if (!c.is_zero()) {
      const BiPoly f = c * p1pows[static_cast<std::size_t>(n - i)];
      for (std::size_t j = 0; j < e.size(); ++j) acc[j] += f * e[j];
    }
    if (i == n) break;
    std::vector<BiPoly> next(e.size() + 1);
    const BiPoly w = p0 - scale(dp1, Rat(i));
    for (std::size_t j = 0; j < e.size(); ++j) {
      next[j] += p1 * e[j].derivative() + w * e[j];
      next[j + 1] += p1 * e[j];
    }
    e = std::move(next);
  }
  return OreOp(std::move(acc)).normalized();
}

OreOp product_annihilator(const OreOp& l0, const OreOp& m0) {
  if (m0.order() == 1 && l0.order() >= 1) return twist_annihilator(l0, m0);
  if (l0.order() == 1 && m0.order() >= 1) return twist_annihilator(m0, l0);
  return product_annihilator_generic(l0, m0);
}

OreOp product_annihilator_generic(const OreOp& l0, const OreOp& m0) {
  const OreOp l = l0.normalized(), m = m0.normalized();
  if (l.order() < 1 || m.order() < 1) throw std::invalid_argument("product_annihilator: operators must have order >= 1");
  const std::size_t n = static_cast<std::size_t>(l.order()), k = static_cast<std::size_t>(m.order());
  const BiPoly pn = l.coeffs().back(), qk = m.coeffs().back();
  const BiPoly pq = pn * qk;
  auto derive = [&](const RatVec& v) {
    RatVec w{zero_vec(n * k), v.den * v.den * pq};
    const BiPoly dd = v.den.derivative();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const BiPoly& c = v.num[i * k + j];
        if (c.is_zero()) continue;
        w.num[i * k + j] += pq * (v.den * c.derivative() - dd * c);
        const BiPoly dc = v.den * c;
        if (i + 1 < n) {
          w.num[(i + 1) * k + j] += dc * pq;
        } else {
          for (std::size_t ii = 0; ii < n; ++ii) w.num[ii * k + j] -= dc * qk * l.coeffs()[ii];
        }
        if (j + 1 < k) {
          w.num[i * k + j + 1] += dc * pq;
        } else {
          for (std::size_t jj = 0; jj < k; ++jj) w.num[i * k + jj] -= dc * pn * m.coeffs()[jj];
        }
      }
    return w;
  };
  RatVec v0{zero_vec(n * k), BiPoly(1)};
  v0.num[0] = BiPoly(1);
  return find_relation(derive, v0, static_cast<int>(n * k));
}

OreOp substitute_argument(const OreOp& l0, const BiPoly& q) {
  if (q.degree() < 1) throw std::invalid_argument("substitute_argument: q must be nonconstant");
  if (!q.coeff(0).is_zero()) throw std::invalid_argument("substitute_argument: q(0) must be 0");
  const OreOp l = l0.normalized();
  const std::size_t n = static_cast<std::size_t>(l.order());
  if (n == 0) return OreOp::poly(BiPoly(1));
  std::vector<BiPoly> p;
  for (const auto& c : l.coeffs()) p.push_back(c.compose(q));
  const BiPoly qd = q.derivative();
  const BiPoly pn = p.back();
  auto derive = [&](const RatVec& v) {
    RatVec w{zero_vec(n), v.den * v.den * pn};
    const BiPoly dd = v.den.derivative();
    for (std::size_t i = 0; i < n; ++i) {
      const BiPoly& c = v.num[i];
      if (c.is_zero()) continue;
      w.num[i] += pn * (v.den * c.derivative() - dd * c);
      const BiPoly dc = v.den * c * qd;
      if (i + 1 < n) {
        w.num[i + 1] += dc * pn;
      } else {
        for (std::size_t ii = 0; ii < n; ++ii) w.num[ii] -= dc * p[ii];
      }
    }
    return w;
  };
  RatVec v0{zero_vec(n), BiPoly(1)};
  v0.num[0] = BiPoly(1);
  return find_relation(derive, v0, static_cast<int>(n));
}

OreOp annihilator_of_rational(const QXTFrac& f) {
  if (f.is_zero()) throw std::invalid_argument("annihilator_of_rational: zero function");
  const BiPoly& n = f.num();
  const BiPoly& d = f.den();
  // f D - f', times d^2
  return OreOp({-(n.derivative() * d - n * d.derivative()), n * d}).normalized();
}

OreOp annihilator_of_sqrt(const QXTFrac& g) {
  if (g.is_zero()) throw std::invalid_argument("annihilator_of_sqrt: zero radicand");
  const BiPoly& n = g.num();
  const BiPoly& d = g.den();
  // 2 g D - g', times d^2
  return OreOp({-(n.derivative() * d - n * d.derivative()), scale(n * d, Rat(2))}).normalized();
}

namespace {

template <class R, class Conv>
TruncSeries<R> apply_generic(const OreOp& l, const TruncSeries<R>& f, Conv conv) {
  if (!l.is_polynomial()) throw std::invalid_argument("apply: operator has a nontrivial denominator");
  const int ord = l.order();
  if (ord < 0) return TruncSeries<R>::zero(f.order(), std::min(f.start(), f.order()));
  const int out_order = f.order() - ord;
  if (f.order() <= ord) throw PrecisionError("apply: precision exhausted");
  const int start = std::min(f.start() - ord, out_order);
  std::vector<R> out(static_cast<std::size_t>(out_order - start), R(0));
  TruncSeries<R> deriv = f;
  for (int i = 0; i <= ord; ++i) {
    if (i > 0) deriv = series_derive(deriv);
    const BiPoly& p = l.coeffs()[static_cast<std::size_t>(i)];
    for (int k = 0; k <= p.degree(); ++k) {
      const QX& c = p.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      const R rc = conv(c);
      for (int m = deriv.start(); m + k < out_order; ++m) {
        const R& v = deriv.coeffs()[static_cast<std::size_t>(m - deriv.start())];
        if (v.is_zero()) continue;
        out[static_cast<std::size_t>(m + k - start)] += rc * v;
      }
    }
  }
  return TruncSeries<R>(start, out_order, std::move(out));
}

}  // namespace

TruncSeries<Rat> apply(const OreOp& l, const TruncSeries<Rat>& f) {
  if (l.has_x()) throw std::invalid_argument("apply: operator involves x; specialize it first");
  return apply_generic(l, f, [](const QX& c) { return c.coeff(0); });
}

TruncSeries<LPoly> apply(const OreOp& l, const TruncSeries<LPoly>& f) {
  return apply_generic(l, f, [](const QX& c) { return LPoly(c); });
}

TruncSeries<Rat> apply_at(const OreOp& l, const Rat& x0, const TruncSeries<Rat>& f) {
  return apply_generic(l, f, [&](const QX& c) { return c.eval(x0); });
}

std::string poly_to_text(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a <= p.degree(); ++a) {
    const QX& c = p.coeffs()[static_cast<std::size_t>(a)];
    for (int b = 0; b <= c.degree(); ++b) {
      const Rat& r = c.coeffs()[static_cast<std::size_t>(b)];
      if (r.is_zero()) continue;
      os << (first ? "" : " + ") << r.to_string() << "*t^" << a << "*x^" << b;
      first = false;
    }
  }
  return os.str();
}

BiPoly poly_from_text(std::string_view s) {
  std::string text(s);
  auto trim = [](std::string w) {
    const auto b = w.find_first_not_of(" \t\r");
    const auto e = w.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : w.substr(b, e - b + 1);
  };
  text = trim(text);
  if (text == "0") return BiPoly();
  BiPoly out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t plus = text.find('+', pos);
    const std::string term = trim(text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    const auto s1 = term.find("*t^"), s2 = term.find("*x^");
    if (s1 == std::string::npos || s2 == std::string::npos || s2 < s1) throw std::invalid_argument("bad operator term '" + term + "'");
    const Rat c = Rat::parse(term.substr(0, s1));
    const int a = std::stoi(term.substr(s1 + 3, s2 - s1 - 3));
    const int b = std::stoi(term.substr(s2 + 3));
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent in operator term '" + term + "'");
    out += BiPoly::monomial(QX::monomial(c, b), a);
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

std::string write_operator(const OreOp& l, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "operator\n";
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "vars t x\norder " << l.order() << '\n';
  if (!l.is_polynomial()) os << "denominator : " << poly_to_text(l.den()) << '\n';
  for (int i = 0; i <= l.order(); ++i) os << i << " : " << poly_to_text(l.coeff(i)) << '\n';
  os << "end\n";
  return os.str();
}

OreOp parse_operator(std::string_view text, std::vector<std::string>* comments) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false, ended = false;
  int order = -2;
  BiPoly den(1);
  std::vector<BiPoly> c;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line[0] == '#') {
      if (comments) comments->push_back(line.size() > 2 ? line.substr(2) : std::string());
      continue;
    }
    if (ended) throw std::invalid_argument("operator: content after 'end'");
    if (!header) {
      if (line != "operator") throw std::invalid_argument("operator: missing 'operator' header");
      header = true;
      continue;
    }
    if (line == "end") {
      ended = true;
      continue;
    }
    if (line.rfind("vars", 0) == 0) {
      if (line != "vars t x") throw std::invalid_argument("operator: expected 'vars t x'");
      continue;
    }
    if (line.rfind("order", 0) == 0) {
      order = std::stoi(line.substr(5));
      c.assign(static_cast<std::size_t>(std::max(order + 1, 0)), BiPoly());
      seen.assign(c.size(), false);
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("operator: bad line '" + line + "'");
    const std::string key = line.substr(0, line.find_last_not_of(' ', colon - 1) + 1);
    const BiPoly p = poly_from_text(std::string_view(line).substr(colon + 1));
    if (key == "denominator") {
      den = p;
      continue;
    }
    const int i = std::stoi(key);
    if (order < -1 || i < 0 || i > order) throw std::invalid_argument("operator: coefficient index out of range");
    c[static_cast<std::size_t>(i)] = p;
    seen[static_cast<std::size_t>(i)] = true;
  }
  if (!header || !ended || order < -1) throw std::invalid_argument("operator: truncated document");
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw std::invalid_argument("operator: missing coefficient line");
  OreOp op(std::move(c), den);
  if (op.order() != order) throw std::invalid_argument("operator: leading coefficient is zero");
  return op;
}

}  // namespace kreweras
