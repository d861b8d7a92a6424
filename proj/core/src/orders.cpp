#include "burau/orders.hpp"

#include "burau/errors.hpp"

namespace burau {

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt out = 1;
  const BigInt b = base;
  for (std::uint64_t i = 0; i < exp; ++i) out *= b;
  return out;
}

BigInt sp_order_prime_power(int g, std::uint64_t p, unsigned e) {
  BigInt out = big_pow(p, static_cast<std::uint64_t>(2 * g * g + g) * (e - 1));
  out *= big_pow(p, static_cast<std::uint64_t>(g) * g);
  for (int i = 1; i <= g; ++i) out *= big_pow(p, 2 * i) - 1;
  return out;
}

BigInt unimodular_count_prime_power(int two_g, std::uint64_t p, unsigned e) {
  return big_pow(p, static_cast<std::uint64_t>(two_g) * (e - 1)) * (big_pow(p, two_g) - 1);
}

}  // namespace

LevelFactorization factor_level(std::uint64_t level) {
  if (level < 1) throw error("factor_level: level >= 1 required");
  LevelFactorization f;
  f.level = level;
  std::uint64_t rest = level;
  while (rest % 2 == 0) {
    ++f.two_exponent;
    rest /= 2;
  }
  f.odd_part = rest;
  std::uint64_t m = level;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      ++e;
      m /= p;
    }
    f.prime_powers.emplace_back(p, e);
  }
  if (m > 1) f.prime_powers.emplace_back(m, 1);
  return f;
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt sp_order(int g, std::uint64_t level) {
  if (g < 0) throw error("sp_order: g >= 0 required");
  if (g == 0) return 1;
  BigInt out = 1;
  for (const auto& [p, e] : factor_level(level).prime_powers) out *= sp_order_prime_power(g, p, e);
  return out;
}

BigInt unimodular_vector_count(int two_g, std::uint64_t level) {
  BigInt out = 1;
  for (const auto& [p, e] : factor_level(level).prime_powers)
    out *= unimodular_count_prime_power(two_g, p, e);
  return out;
}

BigInt stab_order(int g, std::uint64_t level) {
  if (g < 1) throw error("stab_order: g >= 1 required");
  if (level == 1) return 1;
  // Exact per prime power, so divide there rather than at the product level.
  BigInt out = 1;
  for (const auto& [p, e] : factor_level(level).prime_powers) {
    out *= sp_order_prime_power(g, p, e) / unimodular_count_prime_power(2 * g, p, e);
  }
  return out;
}

BigInt gamma_quotient_order(int n_minus_1, std::uint64_t level) {
  if (n_minus_1 < 1) throw error("gamma_quotient_order: n-1 >= 1 required");
  if (n_minus_1 % 2 == 0) return sp_order(n_minus_1 / 2, level);
  return stab_order((n_minus_1 + 1) / 2, level);
}

BigInt gamma_prime_quotient_order(int n_minus_1, std::uint64_t level) {
  if (n_minus_1 < 1) throw error("gamma_prime_quotient_order: n-1 >= 1 required");
  if (n_minus_1 % 2 == 0) return sp_order(n_minus_1 / 2, level);  // odd n
  // even n = 2g: Sp_{2g-2}(Z/l) acting on translations (Z/l)^{2g-2}
  const int g = (n_minus_1 + 1) / 2;
  if (level == 1) return 1;
  BigInt out = sp_order(g - 1, level);
  for (int i = 0; i < 2 * g - 2; ++i) out *= level;
  return out;
}

namespace {

BigInt predicted_order(int n, std::uint64_t level, BigInt (*quotient_order)(int, std::uint64_t)) {
  const LevelFactorization f = factor_level(level);
  if (n <= 3) return quotient_order(n - 1, level);
  const unsigned k = f.two_exponent;
  BigInt two_part;
  if (k == 0) {
    two_part = 1;
  } else if (k == 1) {
    two_part = factorial(n);
  } else {
    two_part = factorial(n) * quotient_order(n - 1, std::uint64_t(1) << k) / quotient_order(n - 1, 2);
  }
  return two_part * quotient_order(n - 1, f.odd_part);
}

}  // namespace

BigInt predicted_braid_quotient_order(int n, std::uint64_t level) {
  if (n < 2) throw error("predicted_braid_quotient_order: n >= 2 required");
  return predicted_order(n, level, &gamma_quotient_order);
}

BigInt predicted_reduced_quotient_order(int n, std::uint64_t level) {
  if (n < 2) throw error("predicted_reduced_quotient_order: n >= 2 required");
  if (n == 2) return 1;
  return predicted_order(n, level, &gamma_prime_quotient_order);
}

}  // namespace burau
