#include "kreweras/walks/walks.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "kreweras/core/modp_linalg.hpp"

namespace kreweras {

namespace {

MPoly xy_monomial(int i, int j) { return MPoly::monomial(Rat(1), make_exponents({{Var::x, i}, {Var::y, j}})); }

}  // namespace

StepSet::StepSet(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_)
    if (s.dx < -1 || s.dx > 1 || s.dy < -1 || s.dy > 1 || (s.dx == 0 && s.dy == 0))
      throw std::invalid_argument("StepSet: steps must be nonzero and lie in {-1,0,1}^2");
}

StepSet StepSet::kreweras() { return StepSet({{1, 1}, {-1, 0}, {0, -1}}); }
StepSet StepSet::reverse_kreweras() { return StepSet({{-1, -1}, {1, 0}, {0, 1}}); }

StepSet StepSet::from_name(const std::string& name) {
  if (name == "kreweras") return kreweras();
  if (name == "reverse-kreweras") return reverse_kreweras();
  throw std::invalid_argument("unknown step set '" + name + "' (expected kreweras or reverse-kreweras)");
}

MPoly StepSet::S() const {
  MPoly s;
  for (const auto& st : steps_) s += xy_monomial(st.dx, st.dy);
  return s;
}
MPoly StepSet::A() const {
  MPoly s;
  for (const auto& st : steps_)
    if (st.dy == -1) s += xy_monomial(st.dx, st.dy);
  return s;
}
MPoly StepSet::B() const {
  MPoly s;
  for (const auto& st : steps_)
    if (st.dx == -1) s += xy_monomial(st.dx, st.dy);
  return s;
}
MPoly StepSet::G() const {
  MPoly s;
  for (const auto& st : steps_)
    if (st.dx == -1 && st.dy == -1) s += xy_monomial(-1, -1);
  return s;
}

WalkGF::WalkGF(int order, std::vector<std::vector<MPoly>> layers) : order_(order), layers_(std::move(layers)) {
  if (static_cast<int>(layers_.size()) != order_) throw std::invalid_argument("WalkGF: layer count mismatch");
}

const MPoly& WalkGF::at(int n, int i, int j) const {
  static const MPoly zero;
  if (n < 0 || n >= order_) throw PrecisionError("WalkGF: length outside the enumerated range");
  if (i < 0 || j < 0 || i > n || j > n) return zero;
  return layers_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i * (n + 1) + j)];
}

MPoly WalkGF::layer_poly(int n) const {
  MPoly out;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const MPoly& q = at(n, i, j);
      if (!q.is_zero()) out += q * xy_monomial(i, j);
    }
  return out;
}

WalkGF enumerate(const StepSet& steps, const WeightSpec& weights, int order) {
  if (order < 1) throw std::invalid_argument("enumerate: order must be >= 1");
  const MPoly wa = weights.weight_a(), wb = weights.weight_b(), wc = weights.weight_c();
  std::vector<std::vector<MPoly>> layers;
  layers.push_back({MPoly(1)});
  for (int n = 1; n < order; ++n) {
    const auto& prev = layers.back();
    std::vector<MPoly> cur(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const MPoly& w = prev[static_cast<std::size_t>(i * n + j)];
        if (w.is_zero()) continue;
        for (const auto& s : steps.steps()) {
          const int ni = i + s.dx, nj = j + s.dy;
          if (ni < 0 || nj < 0) continue;
          cur[static_cast<std::size_t>(ni * (n + 1) + nj)] += w;
        }
      }
    // arrival weights depend only on the target cell
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        MPoly& q = cur[static_cast<std::size_t>(i * (n + 1) + j)];
        if (q.is_zero()) continue;
        if (i == 0 && j == 0) q = q * wc;
        else if (j == 0) q = q * wa;
        else if (i == 0) q = q * wb;
      }
    layers.push_back(std::move(cur));
  }
  return WalkGF(order, std::move(layers));
}

std::vector<MPoly> brute_force_count(const StepSet& steps, const WeightSpec& weights, int n) {
  if (n < 0 || n > 14) throw std::invalid_argument("brute_force_count: n must lie in [0, 14]");
  // (end i, end j, #a, #b, #c) -> number of walks
  std::map<std::tuple<int, int, int, int, int>, long> tally;
  const auto& st = steps.steps();
  const std::size_t k = st.size();
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  // odometer over all k^n sequences; each is checked independently
  for (;;) {
    int i = 0, j = 0, ha = 0, vb = 0, uc = 0;
    bool inside = true;
    for (int m = 0; m < n && inside; ++m) {
      i += st[choice[static_cast<std::size_t>(m)]].dx;
      j += st[choice[static_cast<std::size_t>(m)]].dy;
      if (i < 0 || j < 0) inside = false;
      else if (i == 0 && j == 0) ++uc;
      else if (j == 0) ++ha;
      else if (i == 0) ++vb;
    }
    if (inside) ++tally[{i, j, ha, vb, uc}];
    int pos = 0;
    while (pos < n && ++choice[static_cast<std::size_t>(pos)] == k) choice[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  std::vector<MPoly> table(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (const auto& [key, count] : tally) {
    const auto [i, j, ha, vb, uc] = key;
    MPoly w = weights.weight_a().pow(ha) * weights.weight_b().pow(vb) * weights.weight_c().pow(uc);
    table[static_cast<std::size_t>(i * (n + 1) + j)] += w * Rat(count);
  }
  return table;
}

TruncSeries<MPoly> series_Q(const WalkGF& gf, Coord x, Coord y) {
  auto f = TruncSeries<MPoly>::zero(gf.order());
  for (int n = 0; n < gf.order(); ++n) {
    MPoly c;
    for (int i = 0; i <= n; ++i) {
      if (x.value && x.value->is_zero() && i > 0) break;
      for (int j = 0; j <= n; ++j) {
        if (y.value && y.value->is_zero() && j > 0) break;
        const MPoly& q = gf.at(n, i, j);
        if (q.is_zero()) continue;
        MPoly mono(1);
        if (x.value) mono = mono * MPoly(x.value->pow(i));
        else mono = mono * MPoly::var(Var::x, i);
        if (y.value) mono = mono * MPoly(y.value->pow(j));
        else mono = mono * MPoly::var(Var::y, j);
        c += q * mono;
      }
    }
    f.set_coeff(n, c);
  }
  return f;
}

TruncSeries<MPoly> coeff_at(const WalkGF& gf, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("coeff_at: negative position");
  auto f = TruncSeries<MPoly>::zero(gf.order());
  for (int n = 0; n < gf.order(); ++n) f.set_coeff(n, gf.at(n, i, j));
  return f;
}

TruncSeries<MPoly> kernel_residual(const WalkGF& gf, const StepSet& steps, const WeightSpec& weights) {
  const int order = gf.order();
  const MPoly a = weights.weight_a(), b = weights.weight_b(), c = weights.weight_c();
  const MPoly abc = a * b * c;
  const auto q = series_Q(gf, Coord::symbolic(), Coord::symbolic());
  const auto qx0 = series_Q(gf, Coord::symbolic(), Coord::at(0));
  const auto q0y = series_Q(gf, Coord::at(0), Coord::symbolic());
  const auto q00 = series_Q(gf, Coord::at(0), Coord::at(0));
  const MPoly S = steps.S(), A = steps.A(), B = steps.B(), G = steps.G();

  auto poly_in_t = [order](std::initializer_list<MPoly> c) {
    std::vector<MPoly> v(c);
    return TruncSeries<MPoly>::from_coeffs(v, order);
  };
  // abc K Q
  const auto lhs = series_mul(poly_in_t({abc, -(abc * S)}), q);
  // ab + bc (a - 1 - t a A) Q(x,0) + ac (b - 1 - t b B) Q(0,y) + ((ac + bc - ab - abc) + abc t G) Q(0,0)
  auto rhs = poly_in_t({a * b});
  rhs = rhs + series_mul(poly_in_t({b * c * (a - MPoly(1)), -(b * c * a * A)}), qx0);
  rhs = rhs + series_mul(poly_in_t({a * c * (b - MPoly(1)), -(a * c * b * B)}), q0y);
  rhs = rhs + series_mul(poly_in_t({a * c + b * c - a * b - abc, abc * G}), q00);
  return lhs - rhs;
}

SecondFactorRelations second_factor_coeffs(const WalkGF& gf, const WeightSpec& weights) {
  if (gf.order() < 4) throw PrecisionError("second_factor_coeffs: need Q(0,0) modulo t^4");
  const MPoly a = weights.weight_a(), b = weights.weight_b(), c = weights.weight_c();
  const auto q00 = series_Q(gf, Coord::at(0), Coord::at(0));
  const MPoly lam = a * b - a * c - b * c + a * b * c;
  SecondFactorRelations r;
  r.t0 = a * b - lam * q00.coeff(0);
  r.t3 = -(lam * q00.coeff(3));
  return r;
}

ModpCounts enumerate_mod_p(const StepSet& steps, std::uint32_t a, std::uint32_t b, std::uint32_t c, int order,
                           std::uint32_t p) {
  if (order < 1) throw std::invalid_argument("enumerate_mod_p: order must be >= 1");
  ModpCounts out;
  out.q00.assign(static_cast<std::size_t>(order), 0);
  out.q11.assign(static_cast<std::size_t>(order), 0);
  const int w = order;  // positions 0 .. order-1 in each coordinate
  std::vector<std::uint32_t> cur(static_cast<std::size_t>(w * w), 0), next(cur.size(), 0);
  cur[0] = 1;
  out.q00[0] = 1;
  out.q11[0] = 1 % p;
  for (int n = 1; n < order; ++n) {
    std::fill(next.begin(), next.end(), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::uint32_t v = cur[static_cast<std::size_t>(i * w + j)];
        if (v == 0) continue;
        for (const auto& s : steps.steps()) {
          const int ni = i + s.dx, nj = j + s.dy;
          if (ni < 0 || nj < 0) continue;
          auto& d = next[static_cast<std::size_t>(ni * w + nj)];
          d = add_mod(d, v, p);
        }
      }
    std::uint32_t total = 0;
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        auto& d = next[static_cast<std::size_t>(i * w + j)];
        if (d == 0) continue;
        if (i == 0 && j == 0) d = mul_mod(d, c, p);
        else if (j == 0) d = mul_mod(d, a, p);
        else if (i == 0) d = mul_mod(d, b, p);
        total = add_mod(total, d, p);
      }
    out.q00[static_cast<std::size_t>(n)] = next[0];
    out.q11[static_cast<std::size_t>(n)] = total;
    std::swap(cur, next);
  }
  return out;
}

}  // namespace kreweras
