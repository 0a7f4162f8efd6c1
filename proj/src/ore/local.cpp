#include "kreweras/ore/local.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kreweras/core/linalg.hpp"

namespace kreweras {

namespace {

// (n - a) as a polynomial in n with Q[x] coefficients
BiPoly n_minus(long a) { return BiPoly({QX(Rat(-a)), QX(1)}); }

QFrac as_frac(const QX& p) { return QFrac(p); }

// P(v) for P in Q[x][n], v rational
QX eval_outer(const BiPoly& p, const Rat& v) { return p.eval(QX(v)); }

struct Frobenius {
  std::vector<std::vector<QFrac>> coeffs;  // coeffs[m][param]
  std::vector<int> free_idx;
  std::vector<std::vector<QFrac>> constraints;
  std::size_t nparams() const { return free_idx.size(); }
};

Frobenius frobenius_solve(const RecOp& rec, const Rat& rho, int count) {
  Frobenius fr;
  for (int m = 0; m < count; ++m) {
    const int n = m + rec.s_min;
    // sum over earlier coefficients
    std::vector<QFrac> rhs(fr.nparams(), QFrac());
    for (int s = rec.s_min + 1; s <= rec.s_max; ++s) {
      const int j = n - s;
      if (j < 0) break;
      const BiPoly& ps = rec.P[static_cast<std::size_t>(s - rec.s_min)];
      if (ps.is_zero()) continue;
      const QFrac c = as_frac(eval_outer(ps, Rat(n) + rho));
      if (c.is_zero()) continue;
      const auto& fj = fr.coeffs[static_cast<std::size_t>(j)];
      for (std::size_t p = 0; p < fj.size(); ++p)
        if (!fj[p].is_zero()) rhs[p] += c * fj[p];
    }
    const QX chi = eval_outer(rec.P[0], Rat(n) + rho);
    if (chi.is_zero()) {
      bool nonzero = false;
      for (const auto& v : rhs) nonzero = nonzero || !v.is_zero();
      if (nonzero) fr.constraints.push_back(rhs);
      fr.free_idx.push_back(m);
      std::vector<QFrac> fm(fr.nparams(), QFrac());
      fm.back() = QFrac(1);
      fr.coeffs.push_back(std::move(fm));
    } else {
      const QFrac inv = as_frac(chi).inverse();
      for (auto& v : rhs) v = -(v * inv);
      fr.coeffs.push_back(std::move(rhs));
    }
  }
  for (auto& c : fr.coeffs) c.resize(fr.nparams(), QFrac());
  for (auto& c : fr.constraints) c.resize(fr.nparams(), QFrac());
  return fr;
}

// Nullspace over Q(x) of constraint rows; returns parameter vectors in Q[x].
Matrix<QX> constraint_nullspace(const std::vector<std::vector<QFrac>>& rows, std::size_t nparams) {
  if (rows.empty()) {
    Matrix<QX> id;
    for (std::size_t i = 0; i < nparams; ++i) {
      std::vector<QX> v(nparams);
      v[i] = QX(1);
      id.push_back(std::move(v));
    }
    return id;
  }
  Matrix<QX> a;
  for (const auto& row : rows) {
    QX l(1);
    for (const auto& v : row)
      if (!v.is_zero()) l = exact_div(l * v.den(), gcd(l, v.den()));
    std::vector<QX> r;
    for (const auto& v : row) r.push_back(v.is_zero() ? QX() : exact_div(l, v.den()) * v.num());
    a.push_back(std::move(r));
  }
  return ff_nullspace(a, nparams);
}

std::vector<unsigned long> divisors(const Int& v) {
  Int a = abs(v);
  if (!a.fits_ulong_p()) throw std::domain_error("rational_roots: coefficient too large for divisor enumeration");
  const unsigned long n = a.get_ui();
  std::vector<unsigned long> d;
  for (unsigned long k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      d.push_back(k);
      if (k * k != n) d.push_back(n / k);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

BiPoly RecOp::indicial() const { return P.empty() ? BiPoly() : P[0].compose(BiPoly({QX(Rat(s_min)), QX(1)})); }

RecOp to_recurrence(const OreOp& l) {
  if (l.is_zero()) throw std::invalid_argument("to_recurrence: zero operator");
  RecOp r;
  int smin = 1 << 30, smax = -(1 << 30);
  for (int i = 0; i <= l.order(); ++i) {
    const BiPoly& p = l.coeffs()[static_cast<std::size_t>(i)];
    for (int k = 0; k <= p.degree(); ++k)
      if (!p.coeffs()[static_cast<std::size_t>(k)].is_zero()) {
        smin = std::min(smin, k - i);
        smax = std::max(smax, k - i);
      }
  }
  r.s_min = smin;
  r.s_max = smax;
  r.P.assign(static_cast<std::size_t>(smax - smin + 1), BiPoly());
  for (int i = 0; i <= l.order(); ++i) {
    const BiPoly& p = l.coeffs()[static_cast<std::size_t>(i)];
    for (int k = 0; k <= p.degree(); ++k) {
      const QX& c = p.coeffs()[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      const int s = k - i;
      // c * (n - s)(n - s - 1)...(n - s - i + 1)
      BiPoly ff(1);
      for (int j = 0; j < i; ++j) ff = ff * n_minus(s + j);
      r.P[static_cast<std::size_t>(s - smin)] += ff.scaled(c);
    }
  }
  return r;
}

std::vector<Rat> apply_recurrence(const RecOp& r, const std::vector<Rat>& f, int* first_index) {
  const int nf = static_cast<int>(f.size());
  std::vector<Rat> out;
  if (first_index) *first_index = r.s_min;
  for (int n = r.s_min; n <= nf - 1 + r.s_min; ++n) {
    Rat acc(0);
    for (int s = r.s_min; s <= r.s_max; ++s) {
      const int j = n - s;
      if (j < 0 || j >= nf || f[static_cast<std::size_t>(j)].is_zero()) continue;
      const QX v = eval_outer(r.at(s), Rat(n));
      if (v.degree() > 0) throw std::invalid_argument("apply_recurrence: recurrence involves x");
      acc += v.coeff(0) * f[static_cast<std::size_t>(j)];
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<std::pair<Rat, int>> rational_roots(const QX& p0) {
  if (p0.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  QX p = primitive_part(p0);
  std::vector<std::pair<Rat, int>> roots;
  int zero_mult = 0;
  while (p.degree() > 0 && p.coeff(0).is_zero()) {
    p = exact_div(p, QX::var());
    ++zero_mult;
  }
  if (zero_mult) roots.emplace_back(Rat(0), zero_mult);
  if (p.degree() > 0) {
    // p is integer-primitive here
    const auto num_div = divisors(p.coeff(0).num());
    const auto den_div = divisors(p.lc().num());
    std::vector<Rat> cands;
    for (auto a : num_div)
      for (auto b : den_div)
        for (int sgn : {1, -1}) cands.emplace_back(Int(static_cast<long>(a)) * sgn, Int(static_cast<long>(b)));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& c : cands) {
      int mult = 0;
      const QX lin({-c, Rat(1)});
      while (p.degree() > 0 && p.eval(c).is_zero()) {
        p = exact_div(p, lin);
        ++mult;
      }
      if (mult) roots.emplace_back(c, mult);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int frobenius_logfree_count(const OreOp& l, const Rat& rho, int span) {
  const RecOp rec = to_recurrence(l);
  const Frobenius fr = frobenius_solve(rec, rho, span + 1);
  return static_cast<int>(constraint_nullspace(fr.constraints, fr.nparams()).size());
}

SolBasis power_series_solutions(const OreOp& l0, int order) {
  const OreOp l = l0.normalized();
  const RecOp rec = to_recurrence(l);
  // nonnegative integer roots of the x-free part of chi bound the free indices
  const QX chi0 = content(swap_vars(rec.indicial()));
  int maxroot = -1;
  for (const auto& [root, mult] : rational_roots(chi0))
    if (root.is_integer() && root.sign() >= 0) maxroot = std::max(maxroot, static_cast<int>(root.num().get_si()));
  const int count = std::max(order, maxroot + 2);
  const Frobenius fr = frobenius_solve(rec, Rat(0), count);
  const Matrix<QX> ns = constraint_nullspace(fr.constraints, fr.nparams());

  SolBasis sb;
  sb.free_indices = fr.free_idx;
  sb.r = fr.free_idx.empty() ? 0 : fr.free_idx.back() + 1;
  // rows: solutions as coefficient vectors over Q(x)
  std::vector<std::vector<QFrac>> rows;
  for (const auto& w : ns) {
    std::vector<QFrac> row;
    for (int m = 0; m < count; ++m) {
      QFrac acc;
      for (std::size_t p = 0; p < fr.nparams(); ++p)
        if (!w[p].is_zero() && !fr.coeffs[static_cast<std::size_t>(m)][p].is_zero()) acc += fr.coeffs[static_cast<std::size_t>(m)][p] * QFrac(w[p]);
      row.push_back(acc);
    }
    rows.push_back(std::move(row));
  }
  // reduced row echelon form
  std::size_t rank = 0;
  for (int col = 0; col < count && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const QFrac inv = rows[rank][static_cast<std::size_t>(col)].inverse();
    for (auto& v : rows[rank]) v = v * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][static_cast<std::size_t>(col)].is_zero()) continue;
      const QFrac f = rows[i][static_cast<std::size_t>(col)];
      for (int j = 0; j < count; ++j) rows[i][static_cast<std::size_t>(j)] -= f * rows[rank][static_cast<std::size_t>(j)];
    }
    sb.leading_exponents.push_back(col);
    ++rank;
  }
  sb.dimension = static_cast<int>(rank);
  for (std::size_t i = 0; i < rank; ++i) sb.basis.push_back(TruncSeries<QFrac>(0, count, rows[i]));
  return sb;
}

std::string to_string(LocalData::Log log) {
  switch (log) {
    case LocalData::Log::Present: return "present";
    case LocalData::Log::Absent: return "absent";
    default: return "indeterminate";
  }
}

LocalData detect_log_at_0(const OreOp& l0) {
  const OreOp l = l0.normalized();
  const RecOp rec = to_recurrence(l);
  const BiPoly chi = rec.indicial();
  LocalData ld;
  ld.indicial = content(swap_vars(chi));
  const Rat lead = leading_rat(QX(ld.indicial));
  ld.indicial = ld.indicial.scaled(lead.inverse());
  int chi_deg = chi.degree();
  ld.x_dependent_indicial = chi_deg > ld.indicial.degree();
  ld.regular_singular = chi_deg == l.order();
  ld.rational_roots = rational_roots(ld.indicial);
  int rat_deg = 0;
  for (const auto& [r, m] : ld.rational_roots) rat_deg += m;
  ld.nonrational_root_degree = ld.indicial.degree() - rat_deg;

  // group roots whose differences are integers
  std::map<Rat, std::vector<std::pair<Rat, int>>> by_class;
  for (const auto& rm : ld.rational_roots) {
    const Rat& r = rm.first;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.num_ref().get_mpz_t(), r.den_ref().get_mpz_t());
    by_class[r - Rat(fl)].push_back(rm);
  }
  for (auto& [cls, g] : by_class) ld.groups.push_back(g);

  bool log = false;
  for (const auto& g : ld.groups) {
    for (const auto& [r, m] : g)
      if (m > 1) {
        log = true;
        ld.reason = "repeated indicial root " + r.to_string();
      }
    if (log) break;
    if (g.size() < 2) continue;
    const Rat span = g.back().first - g.front().first;
    const int count = frobenius_logfree_count(l, g.front().first, static_cast<int>(span.num().get_si()));
    if (count < static_cast<int>(g.size())) {
      log = true;
      ld.reason = "resonance obstruction in the root group starting at " + g.front().first.to_string() + ": " +
                  std::to_string(count) + " log-free solutions for " + std::to_string(g.size()) + " exponents";
      break;
    }
  }
  if (log) {
    ld.log = LocalData::Log::Present;
  } else if (ld.nonrational_root_degree > 0 || ld.x_dependent_indicial || !ld.regular_singular) {
    ld.log = LocalData::Log::Indeterminate;
    ld.reason = "no logarithm among rational exponents, but the local data is incomplete";
  } else {
    ld.log = LocalData::Log::Absent;
    ld.reason = "every integer-spaced exponent group admits a full set of log-free solutions";
  }
  return ld;
}

}  // namespace kreweras
