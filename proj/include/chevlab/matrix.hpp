#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chevlab/ring.hpp"

namespace chevlab {

// Dense square integer matrix; used for the Lie algebra data of a
// representation (root vectors and their divided powers).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0) {}
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(std::int64_t k) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;
  // Exact division of every entry; false if some entry is not divisible.
  bool divide_exact(std::int64_t k, IntMatrix& out) const;
  // Block diagonal sum.
  static IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> a_;
};

IntMatrix bracket(const IntMatrix& a, const IntMatrix& b);

// Dense square matrix over a Ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim), a_(dim * dim, ring_.zero()) {}
  static Matrix identity(const Ring& ring, std::size_t dim);
  static Matrix from_int(const Ring& ring, const IntMatrix& m);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  Value& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Value& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  RingElement entry(std::size_t i, std::size_t j) const { return {ring_, at(i, j)}; }

  Matrix operator*(const Matrix& o) const;
  bool is_identity() const;
  // Entrywise map through a ring homomorphism into `target`.
  template <class F>
  Matrix map(const Ring& target, F&& f) const {
    Matrix out(target, dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f(a_[k]);
    return out;
  }
  // this += coeff * m
  void add_scaled(const Value& coeff, const IntMatrix& m);

  std::string to_string() const;
  bool operator==(const Matrix& o) const { return ring_ == o.ring_ && dim_ == o.dim_ && a_ == o.a_; }

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<Value> a_;
};

}  // namespace chevlab
