#pragma once

#include <cstdint>
#include <vector>

#include "burau/int_matrix.hpp"

namespace burau {

// l = 2^k * m with m odd, plus the full prime-power factorization.
struct LevelFactorization {
  std::uint64_t level = 1;
  unsigned two_exponent = 0;
  std::uint64_t odd_part = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;  // (p, e)
};

LevelFactorization factor_level(std::uint64_t level);

BigInt factorial(int n);

// |Sp_{2g}(Z/lZ)|, multiplicative over prime powers with
// |Sp_{2g}(Z/p^e)| = p^{(2g^2+g)(e-1)} * p^{g^2} * prod_{i=1..g}(p^{2i}-1).
// l = 1 gives 1. The formula is validated against brute-force enumeration in
// the test suite before anything else relies on it.
BigInt sp_order(int g, std::uint64_t level);

// Number of unimodular vectors in (Z/lZ)^{2g}: per prime power
// p^{2g(e-1)}(p^{2g}-1), multiplied via CRT.
BigInt unimodular_vector_count(int two_g, std::uint64_t level);

// |[Sp_{2g}(Z/lZ)]_{e_1}| = sp_order / unimodular_vector_count
// (the action on unimodular vectors is transitive).
BigInt stab_order(int g, std::uint64_t level);

// |Gamma_{n-1}/Gamma_{n-1}[l]|: sp_order(g, l) when n-1 = 2g,
// stab_order(g, l) when n-1 = 2g-1. Note stab_order(1, l) = l, which covers
// the n = 2 convention (Gamma_1 is infinite cyclic) with no special case.
BigInt gamma_quotient_order(int n_minus_1, std::uint64_t level);

// |Gamma'_{n-1}/Gamma'_{n-1}[l]|: sp_order(g, l) when n-1 = 2g (odd n);
// for even n = 2g the semidirect-product count |Sp_{2g-2}(Z/l)| * l^{2g-2}.
BigInt gamma_prime_quotient_order(int n_minus_1, std::uint64_t level);

// Predicted |B_n/B_n[l]|: for n = 2,3 this is gamma_quotient_order(n-1, l);
// for n >= 4 and l = 2^k m it is F(k) * gamma_quotient_order(n-1, m) where
// F(0) = 1, F(1) = n!, and
// F(k>=2) = n! * gamma_quotient_order(n-1, 2^k) / gamma_quotient_order(n-1, 2).
BigInt predicted_braid_quotient_order(int n, std::uint64_t level);

// Same shape for the reduced representation (Gamma' quotient orders);
// n = 2 gives 1 (the reduced representation is zero there).
BigInt predicted_reduced_quotient_order(int n, std::uint64_t level);

}  // namespace burau
