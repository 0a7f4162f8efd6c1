#include "kreweras/core/rat.hpp"

#include <stdexcept>

namespace kreweras {

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(text)));
    return Rat(Int(std::string(text.substr(0, slash))), Int(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'");
  }
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("Rat: inverse of zero");
  Rat r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rat Rat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat r;
  r.v_ = mpq_class(n, d);  // already coprime
  return r;
}

std::string Rat::to_string() const { return v_.get_num().get_str() + "/" + v_.get_den().get_str(); }

std::string Rat::to_pretty() const {
  if (is_integer()) return v_.get_num().get_str();
  return to_string();
}

bool Rat::exact_sqrt(Rat& out) const {
  if (sign() < 0) return false;
  if (mpz_perfect_square_p(v_.get_num_mpz_t()) == 0 || mpz_perfect_square_p(v_.get_den_mpz_t()) == 0) return false;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
  out = Rat(n, d);
  return true;
}

std::uint32_t Rat::mod(std::uint32_t p) const {
  const unsigned long n = mpz_fdiv_ui(v_.get_num_mpz_t(), p);
  const unsigned long d = mpz_fdiv_ui(v_.get_den_mpz_t(), p);
  if (d == 0) throw std::domain_error("Rat::mod: denominator divisible by p");
  // d^(p-2) mod p
  unsigned long inv = 1, base = d, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(n * inv % p);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_pretty(); }

}  // namespace kreweras
