#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pbound {

using Vector = std::vector<double>;

// Dense symmetric real matrix. Storage is full row-major, but every write goes
// to both (i, j) and (j, i), so symmetry holds exactly.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  // Builds from a row-major dim x dim array. Throws DomainError unless the
  // array is exactly symmetric.
  static SymMatrix from_dense(std::size_t dim, std::span<const double> values);

  static SymMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  // out = this * x
  void multiply(std::span<const double> x, std::span<double> out) const;
  Vector operator*(std::span<const double> x) const;

  // this + scale * other; dimensions must match.
  SymMatrix plus_scaled(const SymMatrix& other, double scale) const;

  // Copy embedded in the top-left corner of a larger zero matrix.
  SymMatrix padded(std::size_t new_dim) const;

  bool is_nonnegative() const;

  // Connectivity of the nonzero off-diagonal pattern.
  bool is_connected() const;

  // Connected components of the nonzero off-diagonal pattern, each sorted.
  std::vector<std::vector<std::size_t>> components() const;

  SymMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

}  // namespace pbound
