#include "icl/gf.hpp"

#include <random>
#include <string>

#include "icl/errors.hpp"

namespace icl {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t smallest_prime_at_least(std::uint32_t p) {
  std::uint32_t c = p < 2 ? 2 : p;
  while (!is_prime(c)) ++c;
  return c;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw InvalidInput("field size " + std::to_string(q) + " is not prime");
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % q_;
  Residue base = a % q_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % q_ == 0) throw InvalidInput("inverse of zero");
  return pow(a, q_ - 2);
}

GfMatrix::GfMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GfMatrix::GfMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                   const std::vector<std::uint64_t>& data)
    : GfMatrix(field, rows, cols) {
  if (data.size() != rows * cols) throw InvalidInput("matrix data size mismatch");
  for (std::size_t i = 0; i < data.size(); ++i) data_[i] = static_cast<Residue>(data[i] % field.q());
}

void GfMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  data_.at(r * cols_ + c) = static_cast<Residue>(value % field_.q());
}

std::vector<Residue> GfMatrix::column(std::size_t c) const {
  std::vector<Residue> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

GfMatrix GfMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  GfMatrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < rows_; ++r) out.data_[r * cols.size() + j] = at(r, cols[j]);
  return out;
}

GfMatrix GfMatrix::hconcat(const GfMatrix& other) const {
  if (other.rows_ != rows_ || !(other.field_ == field_))
    throw InvalidInput("hconcat: dimension or field mismatch");
  GfMatrix out(field_, rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[r * out.cols_ + c] = at(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out.data_[r * out.cols_ + cols_ + c] = other.at(r, c);
  }
  return out;
}

std::size_t rank(const GfMatrix& m) {
  const PrimeField& f = m.field();
  std::vector<std::vector<Residue>> a(m.rows(), std::vector<Residue>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
  std::size_t rk = 0;
  for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
    std::size_t piv = rk;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rk]);
    const Residue inv = f.inv(a[rk][c]);
    for (auto& x : a[rk]) x = f.mul(x, inv);
    for (std::size_t r = rk + 1; r < m.rows(); ++r) {
      const Residue factor = a[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] = f.sub(a[r][k], f.mul(factor, a[rk][k]));
    }
    ++rk;
  }
  return rk;
}

bool in_span(const std::vector<Residue>& v, const GfMatrix& basis) {
  if (v.size() != basis.rows()) throw InvalidInput("in_span: dimension mismatch");
  std::vector<std::uint64_t> data(v.begin(), v.end());
  const GfMatrix col(basis.field(), v.size(), 1, data);
  return rank(basis.hconcat(col)) == rank(basis);
}

GfMatrix vandermonde_mds(std::size_t p, std::size_t k, const PrimeField& field) {
  if (p > field.q()) {
    throw InvalidInput("vandermonde_mds: " + std::to_string(p) + " evaluation points need q >= p, q=" +
                       std::to_string(field.q()));
  }
  if (k > p) throw InvalidInput("vandermonde_mds: k > p");
  GfMatrix g(field, k, p);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < k; ++i) g.set(i, j, field.pow(static_cast<Residue>(j), i));
  return g;
}

GfMatrix random_binary_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GfMatrix m(PrimeField(2), rows, cols);
  std::uint64_t word = 0;
  int left = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (left == 0) {
        word = rng();
        left = 64;
      }
      m.set(r, c, word & 1);
      word >>= 1;
      --left;
    }
  }
  return m;
}

}  // namespace icl
