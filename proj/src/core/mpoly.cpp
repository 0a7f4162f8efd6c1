#include "kreweras/core/mpoly.hpp"

#include <climits>
#include <numeric>
#include <stdexcept>

namespace kreweras {

char var_name(Var v) { return "abcxytuz"[static_cast<int>(v)]; }

std::optional<Var> var_from_name(char c) {
  static constexpr std::string_view names = "abcxytuz";
  const auto pos = names.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Var>(pos);
}

bool GrLex::operator()(const Exponents& l, const Exponents& r) const {
  const int dl = std::accumulate(l.begin(), l.end(), 0);
  const int dr = std::accumulate(r.begin(), r.end(), 0);
  if (dl != dr) return dl < dr;
  return l < r;
}

Exponents make_exponents(std::initializer_list<std::pair<Var, int>> parts) {
  Exponents e{};
  for (const auto& [v, k] : parts) e[static_cast<std::size_t>(v)] += k;
  return e;
}

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(Exponents{}, Rat(c));
}

MPoly::MPoly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::var(Var v, int e) {
  Exponents ex{};
  ex[static_cast<std::size_t>(v)] = e;
  return monomial(Rat(1), ex);
}

MPoly MPoly::monomial(const Rat& c, const Exponents& e) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rat MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<Var> MPoly::variables() const {
  std::array<bool, kNumVars> used{};
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < kNumVars; ++i) used[static_cast<std::size_t>(i)] |= e[static_cast<std::size_t>(i)] != 0;
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i)
    if (used[static_cast<std::size_t>(i)]) out.push_back(static_cast<Var>(i));
  return out;
}

bool MPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int k : e)
      if (k < 0) return false;
  return true;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }

Rat MPoly::constant_term() const { return coeff(Exponents{}); }

int MPoly::degree_in(Var v) const {
  int d = INT_MIN;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

int MPoly::min_degree_in(Var v) const {
  int d = INT_MAX;
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(v)]);
  return d;
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(int e) const {
  if (e < 0) {
    auto inv = unit_inverse();
    if (!inv) throw std::domain_error("MPoly::pow: negative power of a non-unit");
    return inv->pow(-e);
  }
  MPoly r(1), base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

MPoly MPoly::shifted(const Exponents& s) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents n;
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = e[i] + s[i];
    r.terms_.emplace_hint(r.terms_.end(), n, c);
  }
  return r;
}

MPoly MPoly::substitute(Var v, const Rat& value) const {
  const auto vi = static_cast<std::size_t>(v);
  MPoly r;
  for (const auto& [e, c] : terms_) {
    const int k = e[vi];
    if (k < 0 && value.is_zero()) throw std::domain_error("MPoly::substitute: zero into negative exponent");
    Exponents n = e;
    n[vi] = 0;
    r.add_term(n, k == 0 ? c : c * value.pow(k));
  }
  return r;
}

MPoly MPoly::substitute(Var v, const MPoly& image) const {
  const auto vi = static_cast<std::size_t>(v);
  MPoly r;
  std::map<int, MPoly> powers;
  for (const auto& [e, c] : terms_) {
    const int k = e[vi];
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, image.pow(k)).first;
    Exponents n = e;
    n[vi] = 0;
    r += it->second.shifted(n) * c;
  }
  return r;
}

MPoly MPoly::coeff_in(Var v, int k) const {
  const auto vi = static_cast<std::size_t>(v);
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[vi] != k) continue;
    Exponents n = e;
    n[vi] = 0;
    r.terms_.emplace(n, c);
  }
  return r;
}

MPoly MPoly::filter(const std::function<bool(const Exponents&)>& keep) const {
  MPoly r;
  for (const auto& [e, c] : terms_)
    if (keep(e)) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

MPoly MPoly::swapped(Var v, Var w) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents n = e;
    std::swap(n[static_cast<std::size_t>(v)], n[static_cast<std::size_t>(w)]);
    r.terms_.emplace(n, c);
  }
  return r;
}

std::optional<MPoly> MPoly::unit_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  Exponents n;
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = -e[i];
  return monomial(c.inverse(), n);
}

std::optional<MPoly> MPoly::exact_sqrt() const {
  if (terms_.empty()) return MPoly();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  Exponents n;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (e[i] % 2 != 0) return std::nullopt;
    n[i] = e[i] / 2;
  }
  Rat s;
  if (!c.exact_sqrt(s)) return std::nullopt;
  return monomial(s, n);
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const Rat mag = c.sign() < 0 ? -c : c;
    out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      const int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (k != 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += mag.to_pretty();
    } else {
      if (!mag.is_one()) out += mag.to_pretty() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace kreweras
