#include "oracles.hpp"

#include <numeric>

namespace burau::test {

std::uint64_t count_unimodular_vectors_bruteforce(int dim, std::uint32_t l) {
  std::vector<std::uint32_t> v(dim, 0);
  std::uint64_t count = 0;
  while (true) {
    std::uint64_t g = l;
    for (int i = 0; i < dim; ++i) g = std::gcd(g, static_cast<std::uint64_t>(v[i]));
    if (g == 1) ++count;
    int k = 0;
    while (k < dim) {
      if (++v[k] < l) break;
      v[k] = 0;
      ++k;
    }
    if (k == dim) break;
  }
  return count;
}

BigInt det_cofactor(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt out = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1);
    for (int r = 1; r < n; ++r) {
      for (int j = 0, mj = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(r - 1, mj++) = m.at(r, j);
      }
    }
    const BigInt term = m.at(0, c) * det_cofactor(minor);
    out += (c % 2 == 0) ? term : -term;
  }
  return out;
}

BraidWord random_word(int n, int length, std::mt19937& rng) {
  BraidWord w;
  w.strands = n;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < length; ++i) {
    const int k = gen(rng);
    w.letters.push_back(sign(rng) ? k : -k);
  }
  return w;
}

}  // namespace burau::test
