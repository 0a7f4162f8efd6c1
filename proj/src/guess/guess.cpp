#include "kreweras/guess/guess.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kreweras/core/linalg.hpp"
#include "kreweras/core/modp_linalg.hpp"

namespace kreweras {

namespace {

// (m + 1)(m + 2)...(m + i) as an integer
Int rising_from(int m, int i) {
  Int r(1);
  for (int j = 1; j <= i; ++j) r *= m + j;
  return r;
}

// [t^n] t^k f^(i) = (m+1)...(m+i) f_{m+i} with m = n - k
template <class R>
R equation_entry(const TruncSeries<R>& f, int n, int k, int i) {
  const int m = n - k;
  if (m < 0 || m + i < f.start()) return R(0);
  const R c = f.coeff(m + i);
  if (c.is_zero()) return R(0);
  return c * Rat(rising_from(m, i));
}

Matrix<Rat> equation_rows(const TruncSeries<Rat>& f, const Cell& cell, int n_lo, int n_hi) {
  Matrix<Rat> a;
  for (int n = n_lo; n < n_hi; ++n) {
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(cell.unknowns()));
    for (int i = 0; i <= cell.order; ++i)
      for (int k = 0; k <= cell.degree; ++k) row.push_back(equation_entry(f, n, k, i));
    a.push_back(std::move(row));
  }
  return a;
}

int fit_equations(const Cell& cell, int fit_coefficients) { return fit_coefficients - cell.order; }

bool full_rank_mod_p(const Matrix<Rat>& a, std::size_t cols, std::uint32_t p) {
  if (p == 0 || a.size() < cols) return false;
  auto m = reduce_mod_p(a, p);
  if (!m) return false;
  return m->rank() == cols;
}

template <class R>
ReserveReport reserve_impl(const OreOp& l, const TruncSeries<R>& f, int reserve) {
  ReserveReport rep;
  const int n = f.order();
  rep.fit_coefficients = n - reserve;
  const TruncSeries<R> r = apply(l, f);
  const int lo = std::max(r.start(), rep.fit_coefficients - l.order());
  for (int k = r.start(); k < r.order() && !rep.first_failure; ++k)
    if (!r.coeff(k).is_zero()) rep.first_failure = k;  // k < lo means the fit itself fails
  rep.checked = std::max(0, r.order() - lo);
  rep.passed = rep.first_failure ? std::max(0, *rep.first_failure - lo) : rep.checked;
  return rep;
}

std::vector<Rat> candidate_points(int count) {
  std::vector<Rat> pts;
  for (int v = 2; static_cast<int>(pts.size()) < count; ++v) {
    bool prime = true;
    for (int d = 2; d * d <= v; ++d) prime = prime && v % d != 0;
    if (prime) pts.emplace_back(v);
  }
  return pts;
}

TruncSeries<Rat> specialize_series(const TruncSeries<LPoly>& f, const Rat& x0) {
  std::vector<Rat> c;
  for (int k = f.start(); k < f.order(); ++k) c.push_back(f.coeff(k).eval(x0));
  return TruncSeries<Rat>(f.start(), f.order(), c);
}

}  // namespace

void GuessConfig::validate() const {
  if (reserve < 10) throw std::invalid_argument("GuessConfig: reserve must be at least 10");
  if (max_order < 1 || max_degree < 0) throw std::invalid_argument("GuessConfig: empty staircase");
}

std::vector<Cell> staircase(const GuessConfig& cfg) {
  std::vector<Cell> cells;
  for (int s = 1; s <= cfg.max_order + cfg.max_degree; ++s)
    for (int r = 1; r <= std::min(s, cfg.max_order); ++r)
      if (s - r <= cfg.max_degree) cells.push_back({r, s - r});
  return cells;
}

ReserveReport verify_reserve(const OreOp& l, const TruncSeries<Rat>& f, int reserve) {
  return reserve_impl(l, f, reserve);
}
ReserveReport verify_reserve(const OreOp& l, const TruncSeries<LPoly>& f, int reserve) {
  return reserve_impl(l, f, reserve);
}

std::vector<std::vector<Rat>> cell_nullspace(const TruncSeries<Rat>& f, const Cell& cell, int fit_coefficients) {
  const int eqs = fit_equations(cell, fit_coefficients);
  if (eqs < cell.unknowns()) return {};
  return rational_nullspace(equation_rows(f, cell, 0, eqs), static_cast<std::size_t>(cell.unknowns()));
}

OreOp operator_from_vector(const std::vector<Rat>& v, const Cell& cell) {
  std::vector<BiPoly> c;
  for (int i = 0; i <= cell.order; ++i) {
    std::vector<QX> p;
    for (int k = 0; k <= cell.degree; ++k) p.emplace_back(v[static_cast<std::size_t>(i * (cell.degree + 1) + k)]);
    c.emplace_back(p);
  }
  return OreOp(c).normalized();
}

GuessResult guess_min_ode(const TruncSeries<Rat>& f, const GuessConfig& cfg) {
  cfg.validate();
  if (f.start() < 0) throw std::invalid_argument("guess_min_ode: power series expected");
  GuessResult res;
  const int fit = f.order() - cfg.reserve;
  for (const Cell& cell : staircase(cfg)) {
    CellVisit visit{cell};
    const int eqs = fit_equations(cell, fit);
    if (eqs < cell.unknowns()) {
      visit.outcome = CellVisit::Outcome::Insufficient;
      res.visited.push_back(visit);
      continue;
    }
    const Matrix<Rat> a = equation_rows(f, cell, 0, eqs);
    if (full_rank_mod_p(a, static_cast<std::size_t>(cell.unknowns()), cfg.prefilter_prime)) {
      visit.by_prefilter = true;
      res.visited.push_back(visit);
      continue;
    }
    const auto ns = rational_nullspace(a, static_cast<std::size_t>(cell.unknowns()));
    visit.nullity = static_cast<int>(ns.size());
    if (ns.empty()) {
      res.visited.push_back(visit);
      continue;
    }
    const OreOp l = operator_from_vector(ns.front(), cell);
    const ReserveReport rep = verify_reserve(l, f, cfg.reserve);
    if (!rep.all_passed()) {
      visit.outcome = CellVisit::Outcome::ReserveFailed;
      res.visited.push_back(visit);
      continue;
    }
    visit.outcome = CellVisit::Outcome::Found;
    res.visited.push_back(visit);
    res.op = l;
    res.cell = cell;
    res.reserve = rep;
    return res;
  }
  res.exhausted = true;
  return res;
}

QX lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  // Newton divided differences
  const std::size_t n = xs.size();
  std::vector<Rat> d(ys);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QX p;
  for (std::size_t i = n; i-- > 0;) p = p * QX({-xs[i], Rat(1)}) + QX(d[i]);
  return p;
}

std::optional<std::pair<QX, QX>> rational_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  const int m = static_cast<int>(xs.size());
  if (m < 2) return std::nullopt;
  QX big(1);
  for (const auto& x : xs) big = big * QX({-x, Rat(1)});
  // extended Euclid on (prod (x - x_j), interpolant); keep the step with the largest degree drop
  QX r0 = big, r1 = lagrange_interpolate(xs, ys);
  QX t0, t1(1);
  if (r1.is_zero()) return std::make_pair(QX(), QX(1));
  std::optional<std::pair<QX, QX>> best;
  int best_total = m;
  for (;;) {
    const int total = r1.degree() + t1.degree();
    if (total < best_total) {
      best_total = total;
      best = std::make_pair(r1, t1);
    }
    if (r1.degree() == 0) break;
    auto [q, r2] = divrem(r0, r1);
    QX t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (r1.is_zero()) break;
  }
  if (!best || best_total > m - 2) return std::nullopt;
  auto [num, den] = *best;
  for (const auto& x : xs)
    if (den.eval(x).is_zero()) return std::nullopt;
  const QX g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  const Rat s = den.lc().inverse();
  return std::make_pair(num.scaled(s), den.scaled(s));
}

GuessResult guess_min_ode_symbolic(const TruncSeries<LPoly>& f, const GuessConfig& cfg) {
  cfg.validate();
  GuessResult res;
  const int fit = f.order() - cfg.reserve;
  const auto pts = candidate_points(2 * cfg.max_x_degree + 8);
  // cell from the first specialization
  GuessResult first = guess_min_ode(specialize_series(f, pts[0]), cfg);
  res.visited = first.visited;
  if (!first.op) {
    res.exhausted = true;
    return res;
  }
  const Cell cell = first.cell;
  res.cell = cell;
  const std::size_t u = static_cast<std::size_t>(cell.unknowns());

  std::vector<Rat> xs;
  std::vector<std::vector<Rat>> vals;  // vals[point][unknown], pivot normalized to 1
  std::size_t pivot = u;
  std::vector<std::pair<QX, QX>> recon;
  for (const Rat& x0 : pts) {
    const auto ns = cell_nullspace(specialize_series(f, x0), cell, fit);
    if (ns.size() != 1) continue;
    if (pivot == u) {
      for (std::size_t j = u; j-- > 0;)
        if (!ns[0][j].is_zero()) {
          pivot = j;
          break;
        }
    }
    if (ns[0][pivot].is_zero()) continue;  // leading coefficient vanishes here
    const Rat inv = ns[0][pivot].inverse();
    std::vector<Rat> v;
    for (const auto& e : ns[0]) v.push_back(e * inv);
    xs.push_back(x0);
    vals.push_back(std::move(v));
    // try a reconstruction from all but the last two points, check on those two
    if (xs.size() < 6 || xs.size() % 2 != 0) continue;
    const std::size_t k = xs.size() - 2;
    const std::vector<Rat> fit_x(xs.begin(), xs.begin() + static_cast<long>(k));
    recon.clear();
    bool ok = true;
    for (std::size_t j = 0; j < u && ok; ++j) {
      std::vector<Rat> ys;
      for (std::size_t p = 0; p < k; ++p) ys.push_back(vals[p][j]);
      auto rf = rational_interpolate(fit_x, ys);
      if (!rf) {
        ok = false;
        break;
      }
      for (std::size_t p = k; p < xs.size() && ok; ++p) {
        const Rat d = rf->second.eval(xs[p]);
        ok = !d.is_zero() && rf->first.eval(xs[p]) / d == vals[p][j];
      }
      recon.push_back(*rf);
    }
    if (ok) break;
    recon.clear();
    if (static_cast<int>(xs.size()) > 2 * cfg.max_x_degree + 4) break;
  }
  res.points = xs;
  if (recon.empty()) {
    res.exhausted = true;
    return res;
  }
  QX common(1);
  for (const auto& [n, d] : recon) common = exact_div(common * d, gcd(common, d));
  std::vector<BiPoly> coeffs;
  for (int i = 0; i <= cell.order; ++i) {
    std::vector<QX> tc;
    for (int k = 0; k <= cell.degree; ++k) {
      const auto& [n, d] = recon[static_cast<std::size_t>(i * (cell.degree + 1) + k)];
      tc.push_back(n * exact_div(common, d));
    }
    // BiPoly: outer t, inner x
    coeffs.emplace_back(tc);
  }
  OreOp l = OreOp(coeffs).normalized();
  res.reserve = verify_reserve(l, f, cfg.reserve);
  if (res.reserve.all_passed()) res.op = l;
  else res.exhausted = true;
  return res;
}

std::string GuessResult::summary() const {
  std::ostringstream os;
  if (op) {
    os << "found order " << cell.order << " t-degree " << cell.degree << " (" << cell.unknowns() << " unknowns)";
    if (op->has_x()) os << " x-degree " << op->degree_x();
    os << "; fit on " << reserve.fit_coefficients << " coefficients, reserve " << reserve.passed << "/"
       << reserve.checked << " passed";
  } else {
    os << "no operator found";
  }
  os << "; cells visited " << visited.size();
  if (!points.empty()) os << "; specialization points " << points.size();
  return os.str();
}

// --- algebraic guessing over F_p

namespace {

std::vector<std::uint32_t> mul_trunc(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                     std::size_t m, std::uint32_t p) {
  std::vector<std::uint64_t> acc(m, 0);
  for (std::size_t i = 0; i < std::min(a.size(), m); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; i + j < m && j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  return {acc.begin(), acc.end()};
}

// powers f^0 .. f^deg_u mod t^m
std::vector<std::vector<std::uint32_t>> powers(const std::vector<std::uint32_t>& f, int deg_u, std::size_t m,
                                               std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> pw;
  std::vector<std::uint32_t> one(m, 0);
  one[0] = 1;
  pw.push_back(one);
  for (int j = 1; j <= deg_u; ++j) pw.push_back(mul_trunc(pw.back(), f, m, p));
  return pw;
}

}  // namespace

std::optional<AlgGuess> guess_algebraic_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p, int deg_t,
                                              int deg_u, int reserve) {
  if (p < 2 || p >= (1u << 16)) throw std::invalid_argument("guess_algebraic_mod_p: prime out of range");
  const int m = static_cast<int>(f.size());
  const int unknowns = (deg_t + 1) * (deg_u + 1);
  const int fit_rows = m - reserve;
  if (fit_rows < unknowns) throw std::invalid_argument("guess_algebraic_mod_p: too few coefficients for the degrees");
  if (static_cast<std::uint32_t>(deg_t) >= p) throw std::invalid_argument("guess_algebraic_mod_p: prime too small");
  const auto pw = powers(f, deg_u, static_cast<std::size_t>(m), p);
  ModpMatrix a(static_cast<std::size_t>(fit_rows), static_cast<std::size_t>(unknowns), p);
  for (int n = 0; n < fit_rows; ++n)
    for (int j = 0; j <= deg_u; ++j)
      for (int i = 0; i <= deg_t && i <= n; ++i)
        a.at(static_cast<std::size_t>(n), static_cast<std::size_t>(j * (deg_t + 1) + i)) = pw[static_cast<std::size_t>(j)][static_cast<std::size_t>(n - i)];
  const auto ns = a.nullspace();
  if (ns.empty()) return std::nullopt;
  AlgGuess g;
  g.p = p;
  g.deg_t = deg_t;
  g.deg_u = deg_u;
  g.M = m;
  g.fit_rows = fit_rows;
  const auto& v = ns.front();
  std::uint32_t lead = 0;
  for (std::size_t k = v.size(); k-- > 0;)
    if (v[k]) {
      lead = inv_mod(v[k], p);
      break;
    }
  g.P.assign(static_cast<std::size_t>(deg_u + 1), std::vector<std::uint32_t>(static_cast<std::size_t>(deg_t + 1), 0));
  for (int j = 0; j <= deg_u; ++j)
    for (int i = 0; i <= deg_t; ++i)
      g.P[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = mul_mod(v[static_cast<std::size_t>(j * (deg_t + 1) + i)], lead, p);
  for (auto c : eval_algebraic_mod_p(g, f))
    if (c != 0) return std::nullopt;  // reserve rejects the candidate
  return g;
}

std::vector<std::uint32_t> eval_algebraic_mod_p(const AlgGuess& g, const std::vector<std::uint32_t>& f) {
  const std::size_t m = f.size();
  const auto pw = powers(f, g.deg_u, m, g.p);
  std::vector<std::uint64_t> acc(m, 0);
  for (int j = 0; j <= g.deg_u; ++j)
    for (int i = 0; i <= g.deg_t; ++i) {
      const std::uint32_t c = g.P[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (!c) continue;
      for (std::size_t n = static_cast<std::size_t>(i); n < m; ++n)
        acc[n] = (acc[n] + std::uint64_t(c) * pw[static_cast<std::size_t>(j)][n - static_cast<std::size_t>(i)]) % g.p;
    }
  return {acc.begin(), acc.end()};
}

AlgSearch guess_algebraic_staircase(const std::vector<std::uint32_t>& f, std::uint32_t p, int max_total, int reserve) {
  AlgSearch s;
  const int m = static_cast<int>(f.size());
  for (int total = 1; total <= max_total; ++total)
    for (int du = 1; du <= total; ++du) {
      const int dt = total - du;
      if ((dt + 1) * (du + 1) > m - reserve) continue;
      s.visited.emplace_back(dt, du);
      if (auto g = guess_algebraic_mod_p(f, p, dt, du, reserve)) {
        s.found = g;
        return s;
      }
    }
  return s;
}

std::string AlgGuess::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = deg_u; j >= 0; --j)
    for (int i = deg_t; i >= 0; --i) {
      const auto c = P[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (!c) continue;
      if (!first) os << " + ";
      first = false;
      os << c << "*t^" << i << "*u^" << j;
    }
  if (first) os << "0";
  os << "  (mod " << p << ")";
  return os.str();
}

}  // namespace kreweras
