#include "chevlab/matrix.hpp"

namespace chevlab {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  IntMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  IntMatrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

IntMatrix IntMatrix::operator*(std::int64_t k) const {
  IntMatrix r = *this;
  for (auto& x : r.a_) x *= k;
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMatrix::is_zero() const {
  for (auto x : a_)
    if (x) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (i != j && (*this)(i, j)) return false;
  return true;
}

bool IntMatrix::divide_exact(std::int64_t k, IntMatrix& out) const {
  out = *this;
  for (auto& x : out.a_) {
    if (x % k != 0) return false;
    x /= k;
  }
  return true;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r(a.dim() + i, a.dim() + j) = b(i, j);
  return r;
}

IntMatrix bracket(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }

Matrix Matrix::identity(const Ring& ring, std::size_t dim) {
  Matrix m(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_int(const Ring& ring, const IntMatrix& src) {
  Matrix m(ring, src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j)
      if (src(i, j)) m.at(i, j) = ring.from_int(src(i, j));
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(ring_ == o.ring_))
    throw Error(ErrorCode::MixedRings, "matrix product over " + ring_.to_string() + " and " + o.ring_.to_string());
  Matrix r(ring_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Value& a = at(i, k);
      if (ring_.is_zero(a)) continue;
      const bool a_one = ring_.is_one(a);
      for (std::size_t j = 0; j < dim_; ++j) {
        const Value& b = o.at(k, j);
        if (ring_.is_zero(b)) continue;
        Value& c = r.at(i, j);
        c = ring_.add(c, a_one ? b : ring_.mul(a, b));
      }
    }
  return r;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Value& v = at(i, j);
      if (i == j ? !ring_.is_one(v) : !ring_.is_zero(v)) return false;
    }
  return true;
}

void Matrix::add_scaled(const Value& coeff, const IntMatrix& m) {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (m(i, j)) at(i, j) = ring_.add(at(i, j), ring_.scale(coeff, m(i, j)));
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < dim_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < dim_; ++j) s += (j ? ", " : "") + ring_.format(at(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace chevlab
