#include "burau/modmatrix.hpp"

#include <bit>
#include <numeric>

#include "burau/errors.hpp"

namespace burau {

namespace {

std::uint64_t mod_of(const BigInt& x, std::uint64_t l) {
  BigInt r = x % l;
  if (r < 0) r += l;
  return r.convert_to<std::uint64_t>();
}

// Integer determinant and adjugate of the plain lift, used for inversion
// mod l. Dimensions here are small (<= 12), so cofactor recursion on top of
// Bareiss determinants is plenty.
BigInt int_det(const IntMatrix& m) { return m.det(); }

IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.dim();
  IntMatrix adj(n);
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      IntMatrix minor(n - 1);
      for (int i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (int j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor.at(mi, mj) = m.at(i, j);
          ++mj;
        }
        ++mi;
      }
      const BigInt cof = ((r + c) % 2 == 0 ? 1 : -1) * int_det(minor);
      adj.at(c, r) = cof;  // transposed cofactor
    }
  return adj;
}

// Modular inverse of a unit residue.
std::uint64_t unit_inverse(std::uint64_t a, std::uint64_t l) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(l), new_r = static_cast<std::int64_t>(a % l);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw error("unit_inverse: residue is not a unit");
  std::int64_t inv = t % static_cast<std::int64_t>(l);
  if (inv < 0) inv += static_cast<std::int64_t>(l);
  return static_cast<std::uint64_t>(inv);
}

}  // namespace

ModMatrix ModMatrix::identity(int dim, std::uint32_t modulus) {
  ModMatrix m(dim, modulus);
  if (modulus > 1)
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

bool ModMatrix::is_identity() const { return *this == identity(dim_, modulus_); }

ModMatrix ModMatrix::inverse() const {
  if (modulus_ <= 1) return *this;
  const IntMatrix lifted = lift_plain(*this);
  const BigInt d = int_det(lifted);
  const std::uint64_t dm = mod_of(d, modulus_);
  if (std::gcd(dm, static_cast<std::uint64_t>(modulus_)) != 1) {
    throw error("ModMatrix::inverse: determinant is not a unit mod modulus");
  }
  const std::uint64_t dinv = unit_inverse(dm, modulus_);
  const IntMatrix adj = adjugate(lifted);
  ModMatrix out(dim_, modulus_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      out.set(r, c, static_cast<std::uint32_t>(mod_of(adj.at(r, c) * dinv, modulus_)));
    }
  return out;
}

std::vector<std::uint32_t> ModMatrix::apply(const std::vector<std::uint32_t>& v) const {
  if (static_cast<int>(v.size()) != dim_) throw error("ModMatrix::apply: dimension mismatch");
  std::vector<std::uint32_t> out(dim_);
  for (int r = 0; r < dim_; ++r) {
    std::uint64_t s = 0;
    for (int c = 0; c < dim_; ++c) s += static_cast<std::uint64_t>(at(r, c)) * v[c];
    out[r] = modulus_ <= 1 ? 0 : static_cast<std::uint32_t>(s % modulus_);
  }
  return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.dim_ != b.dim_ || a.modulus_ != b.modulus_) {
    throw error("ModMatrix product: dimension or modulus mismatch");
  }
  const int n = a.dim_;
  ModMatrix out(n, a.modulus_);
  if (a.modulus_ <= 1) return out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::uint64_t s = 0;
      for (int k = 0; k < n; ++k) s += static_cast<std::uint64_t>(a.at(r, k)) * b.at(k, c);
      out.entries_[static_cast<std::size_t>(r) * n + c] =
          static_cast<std::uint32_t>(s % a.modulus_);
    }
  return out;
}

ModMatrix reduce(const IntMatrix& m, std::uint64_t modulus) {
  if (modulus < 1) throw error("reduce: modulus >= 1 required");
  if (modulus > 0xffffffffULL) throw error("reduce: modulus too large");
  ModMatrix out(m.dim(), static_cast<std::uint32_t>(modulus));
  if (modulus == 1) return out;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      out.set(r, c, static_cast<std::uint32_t>(mod_of(m.at(r, c), modulus)));
  return out;
}

ModMatrix reduce_mod(const ModMatrix& m, std::uint32_t d) {
  if (d < 1 || m.modulus() % d != 0) throw error("reduce_mod: d must divide the modulus");
  ModMatrix out(m.dim(), d);
  if (d == 1) return out;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out.set(r, c, m.at(r, c) % d);
  return out;
}

IntMatrix lift_plain(const ModMatrix& m) {
  IntMatrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out.at(r, c) = m.at(r, c);
  return out;
}

std::int64_t balanced_residue(std::uint32_t r, std::uint32_t modulus) {
  if (modulus <= 1) return 0;
  // (-l/2, l/2], ties at l/2 go positive
  if (2 * static_cast<std::uint64_t>(r) <= modulus) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(r) - static_cast<std::int64_t>(modulus);
}

IntMatrix lift_balanced(const ModMatrix& m) {
  IntMatrix out(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out.at(r, c) = balanced_residue(m.at(r, c), m.modulus());
  return out;
}

int bits_per_entry(std::uint32_t modulus) {
  if (modulus <= 1) return 0;
  return std::bit_width(modulus - 1);
}

std::size_t encoded_width(int dim, std::uint32_t modulus) {
  const std::size_t bits = static_cast<std::size_t>(dim) * dim * bits_per_entry(modulus);
  return (bits + 7) / 8;
}

std::string encode(const ModMatrix& m) {
  const int bits = bits_per_entry(m.modulus());
  std::string out(encoded_width(m.dim(), m.modulus()), '\0');
  std::size_t pos = 0;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      std::uint32_t e = m.at(r, c);
      for (int b = 0; b < bits; ++b, ++pos) {
        if (e & (1u << b)) out[pos / 8] |= static_cast<char>(1u << (pos % 8));
      }
    }
  return out;
}

ModMatrix decode(const std::string& bytes, int dim, std::uint32_t modulus) {
  if (bytes.size() != encoded_width(dim, modulus)) throw error("decode: wrong encoding width");
  const int bits = bits_per_entry(modulus);
  ModMatrix m(dim, modulus);
  std::size_t pos = 0;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      std::uint32_t e = 0;
      for (int b = 0; b < bits; ++b, ++pos) {
        if (bytes[pos / 8] & static_cast<char>(1u << (pos % 8))) e |= (1u << b);
      }
      if (modulus > 1 && e >= modulus) throw error("decode: entry out of range");
      m.set(r, c, e);
    }
  return m;
}

}  // namespace burau
