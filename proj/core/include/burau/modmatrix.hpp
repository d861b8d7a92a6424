#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burau/int_matrix.hpp"

namespace burau {

// Square matrix over Z/lZ with entries stored as least nonnegative residues.
// Modulus 1 is allowed: every entry is 0 and the matrix represents the
// identity of the trivial group.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int dim, std::uint32_t modulus)
      : dim_(dim), modulus_(modulus), entries_(static_cast<std::size_t>(dim) * dim) {}

  static ModMatrix identity(int dim, std::uint32_t modulus);

  int dim() const { return dim_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
  void set(int r, int c, std::uint32_t v) {
    entries_[static_cast<std::size_t>(r) * dim_ + c] = modulus_ <= 1 ? 0 : v % modulus_;
  }

  bool is_identity() const;

  // Multiplicative inverse mod l, via the integer adjugate; throws
  // burau::error when det is not a unit mod l.
  ModMatrix inverse() const;

  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;

  friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;

 private:
  int dim_ = 0;
  std::uint32_t modulus_ = 1;
  std::vector<std::uint32_t> entries_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);

// Entrywise least nonnegative residues. Throws if modulus < 1.
ModMatrix reduce(const IntMatrix& m, std::uint64_t modulus);

// Further reduction to a divisor d of the modulus.
ModMatrix reduce_mod(const ModMatrix& m, std::uint32_t d);

// Lift to the integer matrix with entries in [0, l).
IntMatrix lift_plain(const ModMatrix& m);

// Lift with balanced residues in (-l/2, l/2]; ties at l/2 take +l/2.
IntMatrix lift_balanced(const ModMatrix& m);
std::int64_t balanced_residue(std::uint32_t r, std::uint32_t modulus);

// Canonical encoding: entries packed row-major, little-endian, at
// ceil(log2 l) bits each. Fixed width for fixed (dim, modulus); the encoding
// is the element key used by group enumeration and the cache file format.
int bits_per_entry(std::uint32_t modulus);
std::size_t encoded_width(int dim, std::uint32_t modulus);
std::string encode(const ModMatrix& m);
ModMatrix decode(const std::string& bytes, int dim, std::uint32_t modulus);

}  // namespace burau
