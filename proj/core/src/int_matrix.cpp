#include "burau/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "burau/errors.hpp"

namespace burau {

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw error("from_rows: ragged rows");
    int c = 0;
    for (long long e : row) m.at(r, c++) = e;
    ++r;
  }
  return m;
}

IntMatrix IntMatrix::identity(int dim) {
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_identity() const {
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix m(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) m.at(c, r) = at(r, c);
  return m;
}

BigInt IntMatrix::det() const {
  if (dim_ == 0) return 1;
  // Bareiss: division-free pivoting with exact divisions by the previous pivot.
  IntMatrix w = *this;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < dim_ - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < dim_; ++r)
        if (w.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      for (int c = k; c < dim_; ++c) std::swap(w.at(k, c), w.at(p, c));
      sign = -sign;
    }
    for (int r = k + 1; r < dim_; ++r) {
      for (int c = k + 1; c < dim_; ++c) {
        BigInt num = w.at(r, c) * w.at(k, k) - w.at(r, k) * w.at(k, c);
        w.at(r, c) = num / prev;  // exact by Bareiss
      }
      w.at(r, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(dim_ - 1, dim_ - 1) : -w.at(dim_ - 1, dim_ - 1);
}

IntMatrix IntMatrix::inverse() const {
  using Rat = boost::multiprecision::cpp_rational;
  const int n = dim_;
  if (n == 0) return *this;

  // Gauss-Jordan over exact rationals on [this | I].
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = Rat(at(r, c));
    a[r][n + r] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw error("inverse: singular matrix");
    std::swap(a[k], a[p]);
    const Rat piv = a[k][k];
    for (int c = 0; c < 2 * n; ++c) a[k][c] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == k || a[r][k] == 0) continue;
      const Rat f = a[r][k];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[k][c];
    }
  }
  IntMatrix inv(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rat& x = a[r][n + c];
      if (denominator(x) != 1) throw error("inverse: matrix is not unimodular");
      inv.at(r, c) = numerator(x);
    }
  return inv;
}

BigVec IntMatrix::column(int c) const {
  BigVec v(dim_);
  for (int r = 0; r < dim_; ++r) v[r] = at(r, c);
  return v;
}

BigVec IntMatrix::apply(const BigVec& v) const {
  if (static_cast<int>(v.size()) != dim_) throw error("apply: dimension mismatch");
  BigVec out(dim_);
  for (int r = 0; r < dim_; ++r) {
    BigInt s = 0;
    for (int c = 0; c < dim_; ++c) s += at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw error("operator*: dimension mismatch");
  const int n = a.dim_;
  IntMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const BigInt& ark = a.at(r, k);
      if (ark == 0) continue;
      for (int c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
    }
  return out;
}

BigInt dot(const BigVec& v, const BigVec& w) {
  if (v.size() != w.size()) throw error("dot: dimension mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i];
  return s;
}

}  // namespace burau
