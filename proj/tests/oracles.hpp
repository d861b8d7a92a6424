#pragma once

// Test-only brute-force oracles, kept independent of the library paths they
// check: matrix-group orders by filtering every matrix, unimodular-vector
// counts by scanning every vector, and random word generators.

#include <cstdint>
#include <random>
#include <vector>

#include "burau/braid.hpp"
#include "burau/int_matrix.hpp"

namespace burau::test {

// Iterates all dim x dim matrices over Z/lZ and counts those satisfying the
// predicate. Total work l^(dim^2); callers keep that small.
template <typename Pred>
std::uint64_t count_matrices_bruteforce(int dim, std::uint32_t l, Pred&& pred) {
  const int cells = dim * dim;
  std::vector<std::uint32_t> entries(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    IntMatrix m(dim);
    for (int i = 0; i < cells; ++i) m.at(i / dim, i % dim) = entries[i];
    if (pred(m)) ++count;
    int k = 0;
    while (k < cells) {
      if (++entries[k] < l) break;
      entries[k] = 0;
      ++k;
    }
    if (k == cells) break;
  }
  return count;
}

// True iff m^T * gram * m = gram over Z/lZ.
inline bool is_isometry_mod(const IntMatrix& m, const IntMatrix& gram, std::uint32_t l) {
  const IntMatrix lhs = m.transpose() * gram * m;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      BigInt d = (lhs.at(r, c) - gram.at(r, c)) % l;
      if (d != 0) return false;
    }
  return true;
}

// Unimodular vectors in (Z/lZ)^dim: entries generate the unit ideal.
std::uint64_t count_unimodular_vectors_bruteforce(int dim, std::uint32_t l);

// Cofactor-expansion determinant, independent of the Bareiss implementation.
BigInt det_cofactor(const IntMatrix& m);

// Uniform random braid word of the given length.
BraidWord random_word(int n, int length, std::mt19937& rng);

}  // namespace burau::test
