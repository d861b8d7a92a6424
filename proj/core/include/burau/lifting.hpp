#pragma once

#include <cstdint>

#include "burau/int_matrix.hpp"
#include "burau/modmatrix.hpp"

namespace burau {

// Residue-level predicates used as lift preconditions.
bool is_symplectic_mod(const ModMatrix& m);
// First column e_1 and (forced by symplecticity) second row (0,1,0,...,0).
bool is_stabilizer_shape_mod(const ModMatrix& m);
// The Gamma_{n-1} conditions read mod l: isometry of the unreduced form,
// A v_n = v_n, w_n^T A = w_n^T.
bool is_gamma_residue_mod(const ModMatrix& m);
// The Gamma'_{n-1} conditions read mod l (matrix dimension n-1).
bool is_gamma_prime_residue_mod(const ModMatrix& m);

// Lift A in Sp_{2g}(Z/lZ) to an integral symplectic matrix congruent to it:
// the BFS word of A over the transvection generators (and their inverses) is
// recovered from a memoized per-(g, l) table and replayed on the integral
// transvections. Output is deterministic for fixed input; postconditions
// (symplectic over Z, reduces back to A) are checked before returning.
IntMatrix sp_lift(const ModMatrix& a, int g);

// Lift A in [Sp_{2g}(Z/lZ)]_{e_1} through the bordered construction: the
// (2g-2)x(2g-2) corner block is lifted with sp_lift, x and v_2 are lifted
// entrywise with balanced residues, and the first-row border entries are
// recomputed as a~_i = <v~_2, v~_i> over the columns of the lifted corner.
IntMatrix stab_lift(const ModMatrix& a, int g);

// Lift a Gamma_{n-1} residue: conjugate to symplectic coordinates, lift with
// sp_lift (even n-1) or stab_lift (odd n-1), conjugate back.
IntMatrix gamma_lift(const ModMatrix& a, int n);

// Lift a Gamma'_{n-1} residue (matrix dimension n-1). Odd n transports the
// problem to Gamma_{n-1} through the c-basis; even n lifts the
// semidirect-product coordinates (Sp part via sp_lift, translation part
// entrywise).
IntMatrix gamma_prime_lift(const ModMatrix& a, int n);

enum class LiftFamily { sp, sp_stab, gamma, gamma_prime };

// Given A in the family's integral group with A = I mod gcd(l, m), produce
// A~ in the family's level-m congruence subgroup with A~ = A mod l. The two
// residues (A mod l, I mod m) agree mod gcd and glue to a single residue mod
// lcm(l, m), which is then lifted by the family's lift.
IntMatrix crt_lift(const IntMatrix& a, std::uint64_t ell, std::uint64_t m, LiftFamily family);

}  // namespace burau
