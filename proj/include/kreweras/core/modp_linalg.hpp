#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kreweras/core/rat.hpp"

namespace kreweras {

/// Dense row-major matrix over F_p, p prime with p < 2^16.
class ModpMatrix {
public:
  ModpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::uint32_t* row(std::size_t i) { return a_.data() + i * cols_; }

  /// Reduce to reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of the right nullspace, one vector per free column (free entry 1).
  std::vector<std::vector<std::uint32_t>> nullspace() const;

private:
  std::size_t rows_, cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> a_;
};

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p);

/// Reduction of a rational matrix modulo p; nullopt if some denominator is divisible by p.
std::optional<ModpMatrix> reduce_mod_p(const std::vector<std::vector<Rat>>& m, std::uint32_t p);

}  // namespace kreweras
