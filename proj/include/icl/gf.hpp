#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace icl {

using Residue = std::uint32_t;

/// Integers modulo a prime q. Construction checks primality.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  Residue add(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + b) % q_); }
  Residue sub(Residue a, Residue b) const { return static_cast<Residue>((std::uint64_t{a} + q_ - b) % q_); }
  Residue mul(Residue a, Residue b) const { return static_cast<Residue>(std::uint64_t{a} * b % q_); }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint64_t p);
std::uint32_t smallest_prime_at_least(std::uint32_t p);

/// Dense row-major matrix over a prime field.
class GfMatrix {
 public:
  GfMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod q.
  GfMatrix(PrimeField field, std::size_t rows, std::size_t cols, const std::vector<std::uint64_t>& data);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t value);

  std::vector<Residue> column(std::size_t c) const;
  /// Matrix formed by the listed columns, in order.
  GfMatrix select_columns(const std::vector<std::size_t>& cols) const;
  /// [this | other]; rows and fields must agree.
  GfMatrix hconcat(const GfMatrix& other) const;

  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

std::size_t rank(const GfMatrix& m);

/// True iff v lies in the column span of `basis`.
bool in_span(const std::vector<Residue>& v, const GfMatrix& basis);

/// k x p generator whose column j is (1, j, j^2, ..., j^(k-1)); any k columns are independent.
GfMatrix vandermonde_mds(std::size_t p, std::size_t k, const PrimeField& field);

/// i.i.d. uniform bits from mt19937_64 seeded with `seed`, filled row-major, one bit per
/// entry taken from the low end of successive 64-bit outputs.
GfMatrix random_binary_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

}  // namespace icl
