#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <vector>

namespace burau {

using BigInt = boost::multiprecision::cpp_int;
using BigVec = std::vector<BigInt>;

// Square matrix with arbitrary-precision integer entries, row-major.
// Entries of braid-group images grow exponentially in word length, so
// fixed-width arithmetic is not an option anywhere in this library.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  // Row-major initializer, e.g. IntMatrix::from_rows({{2,-1},{1,0}}).
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(int dim);

  int dim() const { return dim_; }

  BigInt& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
  const BigInt& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }

  const std::vector<BigInt>& entries() const { return entries_; }

  bool is_identity() const;
  IntMatrix transpose() const;

  // Exact determinant (fraction-free Bareiss elimination).
  BigInt det() const;

  // Exact inverse; throws burau::error unless det = +-1 (the only case an
  // integer inverse exists).
  IntMatrix inverse() const;

  BigVec column(int c) const;
  BigVec apply(const BigVec& v) const;  // matrix * vector

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  int dim_ = 0;
  std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// v^T * w
BigInt dot(const BigVec& v, const BigVec& w);

}  // namespace burau
