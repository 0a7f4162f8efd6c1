#include "kreweras/core/lpoly.hpp"

#include <algorithm>

namespace kreweras {

void LPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

Rat LPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return Rat(0);
  return c_[static_cast<std::size_t>(e - low_)];
}

std::size_t LPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rat& r) { return !r.is_zero(); }));
}

LPoly LPoly::operator-() const {
  LPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) { *this = o; return *this; }
  const int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rat> n(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) n[static_cast<std::size_t>(low_ - lo) + i] = std::move(c_[i]);
    c_ = std::move(n);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  trim();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) { return *this += -o; }

LPoly& LPoly::operator*=(const Rat& s) {
  if (s.is_zero()) { *this = LPoly(); return *this; }
  for (auto& c : c_) c *= s;
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly();
  return LPoly(a.low_ + b.low_, detail::mul_dense(a.c_, b.c_));
}

LPoly LPoly::positive_part() const {
  if (is_zero() || high() <= 0) return LPoly();
  if (low_ > 0) return *this;
  return LPoly(1, std::vector<Rat>(c_.begin() + (1 - low_), c_.end()));
}

QX LPoly::to_qx() const {
  if (!is_polynomial()) throw std::domain_error("LPoly::to_qx: negative exponent");
  if (is_zero()) return QX();
  std::vector<Rat> v(static_cast<std::size_t>(low_), Rat(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return QX(std::move(v));
}

Rat LPoly::eval(const Rat& v) const {
  if (is_zero()) return Rat(0);
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
  return acc * v.pow(low_);
}

std::optional<LPoly> LPoly::unit_inverse() const {
  if (term_count() != 1) return std::nullopt;
  return LPoly::monomial(c_.front().inverse(), -low_);
}

std::optional<LPoly> LPoly::exact_sqrt() const {
  if (is_zero()) return LPoly();
  if (term_count() != 1 || (low_ % 2) != 0) return std::nullopt;
  Rat s;
  if (!c_.front().exact_sqrt(s)) return std::nullopt;
  return LPoly::monomial(s, low_ / 2);
}

std::string LPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rat c = coeff(e);
    if (c.is_zero()) continue;
    const Rat mag = c.sign() < 0 ? -c : c;
    out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (e == 0 || !mag.is_one()) {
      out += mag.to_pretty();
      if (e != 0) out += "*";
    }
    if (e != 0) out += var;
    if (e != 0 && e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace kreweras
