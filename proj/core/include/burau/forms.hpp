#pragma once

#include <cstdint>
#include <vector>

#include "burau/int_matrix.hpp"

namespace burau {

// The two alternating bilinear forms carried by the Burau representations:
//   unreduced, on Z^n:      <e_i, e_j> = (-1)^{i+j+1} for i < j (1-based)
//   reduced,   on Z^{n-1}:  <e_i, e_j>' = -1 if j = i+1, +1 if j = i-1
enum class FormKind { unreduced, reduced };

struct FormSpec {
  FormKind kind;
  int dim;  // matrix/vector dimension the form lives on

  static FormSpec unreduced_form(int n) { return {FormKind::unreduced, n}; }
  static FormSpec reduced_form(int m) { return {FormKind::reduced, m}; }
};

// Gram matrix of the form on the standard basis. Antisymmetric, zero diagonal.
IntMatrix gram_matrix(const FormSpec& spec);

// <v, w> = v^T * gram * w. Throws on dimension mismatch.
BigInt form_eval(const FormSpec& spec, const BigVec& v, const BigVec& w);

// True iff M^T * gram * M = gram.
bool is_isometry(const FormSpec& spec, const IntMatrix& m);

// The distinguished vectors and bases attached to dimension n:
//   v_n = e_1 + ... + e_n,    w_n = e_1 - e_2 + ... + (-1)^{n-1} e_n,
//   c_i = (-1)^{i+1}(e_i + e_{i+1})                (basis of W = ker w_n^T),
//   a_i = e_1 + ... + e_{2i}, b_i = e_{2i} + e_{2i+1} (or e_n when 2i = n),
// and for even n the reduced-side images
//   a'_i = e_1 + e_3 + ... + e_{2i-1},  b'_i = -e_{2i},  v'_n = a'_g.
// The ab vectors satisfy <a_i, b_j> = delta_ij and span W (odd n: together
// with v_n they span Z^n).
struct BasisData {
  int n = 0;
  BigVec v_n;
  BigVec w_n;
  std::vector<BigVec> c;        // n-1 vectors in Z^n
  std::vector<BigVec> a, b;     // g vectors each, in Z^n
  std::vector<BigVec> a_prime;  // even n only: g vectors in Z^{n-1}
  std::vector<BigVec> b_prime;  // even n only: g-1 vectors in Z^{n-1}
  BigVec v_prime;               // even n only: = a'_g
};

BasisData basis_data(int n);

// Decidable membership predicates for the groups Gamma_{n-1}[l] (inside
// GL_n(Z)) and Gamma'_{n-1}[l] (inside GL_{n-1}(Z)). Level 1 means no
// congruence condition.
enum class GammaFamily { gamma, gamma_prime };

struct SubgroupSpec {
  GammaFamily family;
  int n_minus_1;        // the group index; matrix dimension is n_minus_1 + 1
                        // for gamma and n_minus_1 for gamma_prime
  std::uint64_t level;  // >= 1

  static SubgroupSpec gamma(int n_minus_1, std::uint64_t level) {
    return {GammaFamily::gamma, n_minus_1, level};
  }
  static SubgroupSpec gamma_prime(int n_minus_1, std::uint64_t level) {
    return {GammaFamily::gamma_prime, n_minus_1, level};
  }
};

// gamma family:       isometry of the unreduced form, M v_n = v_n,
//                     w_n^T M = w_n^T, and M = I mod level.
// gamma_prime family: isometry of the reduced form, M v'_n = v'_n when n is
//                     even (no vector condition for odd n), M = I mod level.
// Fixed vectors are checked by exact equality, not up to sign.
bool in_gamma(const IntMatrix& m, const SubgroupSpec& spec);

// Change of basis to symplectic coordinates: columns a_1, b_1, a_2, b_2, ...
// (interleaved pairs), followed by v_n for odd n. Conjugating an element of
// Gamma_{n-1} by this matrix yields a matrix that is symplectic for the
// standard block-diagonal form (direct sum of [[0,1],[-1,0]]), padded by a
// fixed 1x1 block for odd n.
IntMatrix to_symplectic_coords(int n);

// Even n only: same column set but with the pair (a_g, b_g) moved to the
// front, so that conjugation realizes Gamma_{n-1} as the e_1-stabilizer in
// Sp_n(Z) (a_g = v_n becomes the first basis vector). This fixed permutation
// is part of the public contract: stabilizer elements have first column e_1
// and second row (0,1,0,...,0).
IntMatrix stabilizer_coords(int n);

// Gram matrix of the standard symplectic form: block diagonal with
// [[0,1],[-1,0]] blocks, pairing (e_1,e_2), (e_3,e_4), ...
IntMatrix standard_symplectic_gram(int two_g);
bool is_symplectic(const IntMatrix& m);

// Restriction of M in Gamma_{n-1} to the invariant sublattice W = ker w_n^T,
// expressed in the c-basis. A homomorphism; psi(burau(w)) = reduced_burau(w).
// Throws if M fails the Gamma_{n-1} predicate.
IntMatrix psi(const IntMatrix& m, int n);

// Even n: a set-theoretic section of psi, built on the ab-basis by sending
// b_g to b_g + sum_i (<b_g, B~ a_i> b_i - <b_g, B~ b_i> a_i). Satisfies
// psi(psi_section(B)) = B but is not a group homomorphism. Throws if B fails
// the Gamma'_{n-1} predicate.
IntMatrix psi_section(const IntMatrix& b, int n);

// Even n = 2g: the semidirect-product coordinates of A in Gamma'_{n-1}:
// the induced Sp_{2g-2}(Z) action on the quotient by the isotropic span of
// v'_n, plus the translation vector (lambda_1, mu_1, ..., lambda_{g-1},
// mu_{g-1}) with A a'_i = (...) + lambda_i v'_n, A b'_i = (...) + mu_i v'_n.
struct GammaPrimeSplit {
  IntMatrix sp_part;   // (2g-2) x (2g-2)
  BigVec translation;  // length 2g-2, interleaved (lambda_i, mu_i)
};

GammaPrimeSplit gamma_prime_split(const IntMatrix& a, int n);

// Inverse of gamma_prime_split: rebuilds the Gamma'_{n-1} element.
IntMatrix gamma_prime_assemble(const GammaPrimeSplit& parts, int n);

}  // namespace burau
