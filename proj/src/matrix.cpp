#include "pbound/matrix.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pbound/errors.hpp"

namespace pbound {

SymMatrix SymMatrix::from_dense(std::size_t dim, std::span<const double> values) {
  if (values.size() != dim * dim) {
    throw DomainError("dense matrix has wrong number of entries");
  }
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      if (values[i * dim + j] != values[j * dim + i]) {
        throw DomainError("matrix is not symmetric");
      }
      m.set(i, j, values[i * dim + j]);
    }
  }
  return m;
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

void SymMatrix::multiply(std::span<const double> x, std::span<double> out) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* r = data_.data() + i * dim_;
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += r[j] * x[j];
    out[i] = acc;
  }
}

Vector SymMatrix::operator*(std::span<const double> x) const {
  Vector out(dim_);
  multiply(x, out);
  return out;
}

SymMatrix SymMatrix::plus_scaled(const SymMatrix& other, double scale) const {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  SymMatrix m(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += scale * other.data_[k];
  return m;
}

SymMatrix SymMatrix::padded(std::size_t new_dim) const {
  if (new_dim < dim_) throw std::invalid_argument("cannot pad to a smaller dimension");
  SymMatrix m(new_dim);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m.data_[i * new_dim + j] = data_[i * dim_ + j];
  }
  return m;
}

bool SymMatrix::is_nonnegative() const {
  for (double v : data_) {
    if (v < 0.0) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> SymMatrix::components() const {
  std::vector<int> label(dim_, -1);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < dim_; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t w = 0; w < dim_; ++w) {
        if (w != v && label[w] < 0 && (*this)(v, w) != 0.0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool SymMatrix::is_connected() const { return dim_ <= 1 || components().size() == 1; }

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  SymMatrix m(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a; b < indices.size(); ++b) m.set(a, b, (*this)(indices[a], indices[b]));
  }
  return m;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace pbound
