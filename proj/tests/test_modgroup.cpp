#include <doctest.h>

#include <random>
#include <set>

#include "burau/braid.hpp"
#include "burau/errors.hpp"
#include "burau/forms.hpp"
#include "burau/modgroup.hpp"
#include "burau/orders.hpp"
#include "oracles.hpp"

using namespace burau;

namespace {

std::vector<ModMatrix> burau_gens_mod(int n, std::uint32_t level) {
  std::vector<ModMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(reduce(burau_sigma(n, i), level));
  return gens;
}

ModMatrix random_modmatrix(int dim, std::uint32_t modulus, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, modulus - 1);
  ModMatrix m(dim, modulus);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.set(r, c, d(rng));
  return m;
}

}  // namespace

TEST_CASE("reduce takes least nonnegative residues") {
  const ModMatrix m2 = reduce(IntMatrix::from_rows({{2, -1}, {1, 0}}), 2);
  ModMatrix expected(2, 2);
  expected.set(0, 1, 1);
  expected.set(1, 0, 1);
  CHECK(m2 == expected);  // the transposition matrix mod 2

  const ModMatrix m1 = reduce(IntMatrix::from_rows({{5, -7}, {1, 3}}), 1);
  CHECK(m1.is_identity());  // modulus 1: the zero matrix represents I

  for (int m = 2; m <= 9; ++m) {
    IntMatrix pw(2);
    pw.at(0, 0) = m + 1;
    pw.at(0, 1) = -m;
    pw.at(1, 0) = m;
    pw.at(1, 1) = -m + 1;
    CHECK(reduce(pw, m).is_identity());  // sigma_1^m is trivial mod m
  }
}

TEST_CASE("canonical encoding round trips at moduli 2..16") {
  std::mt19937 rng(21);
  for (std::uint32_t modulus = 2; modulus <= 16; ++modulus) {
    for (int dim = 1; dim <= 5; ++dim) {
      for (int t = 0; t < 5; ++t) {
        const ModMatrix m = random_modmatrix(dim, modulus, rng);
        CHECK(decode(encode(m), dim, modulus) == m);
      }
    }
  }
  // the spec's compactness contract: dim <= 4 at l <= 16 packs into 8 bytes
  CHECK(encoded_width(4, 16) == 8);
  CHECK(encoded_width(4, 12) == 8);
  CHECK(encoded_width(3, 5) <= 8);
}

TEST_CASE("modular inverse") {
  std::mt19937 rng(22);
  const std::vector<ModMatrix> gens = burau_gens_mod(4, 5);
  for (const ModMatrix& g : gens) CHECK((g * g.inverse()).is_identity());
  ModMatrix bad(2, 4);
  bad.set(0, 0, 2);
  bad.set(1, 1, 1);
  CHECK_THROWS_AS((void)bad.inverse(), error);
}

TEST_CASE("close: identity group and the Arnol'd quotient") {
  const GroupSet trivial = close({ModMatrix::identity(3, 7)});
  CHECK(trivial.size() == 1);

  const GroupSet s4 = close(burau_gens_mod(4, 2));
  CHECK(s4.size() == 24);
  CHECK(s4.verify_closed(0));  // exhaustive closure check at this size

  CHECK_THROWS_AS((void)close({ModMatrix(2, 4)}), error);  // zero matrix not invertible
}

TEST_CASE("close respects the memory cap") {
  CloseOptions opts;
  opts.memory_cap_bytes = 1024;  // absurdly small
  CHECK_THROWS_AS((void)close(burau_gens_mod(4, 3), opts), capacity_error);
}

TEST_CASE("CRT consistency of image orders") {
  for (int n = 3; n <= 4; ++n) {
    for (auto [l, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 4}}) {
      const std::size_t combined = close(burau_gens_mod(n, l * m)).size();
      const std::size_t left = close(burau_gens_mod(n, l)).size();
      const std::size_t right = close(burau_gens_mod(n, m)).size();
      CHECK(combined == left * right);
    }
  }
}

TEST_CASE("congruence kernels") {
  const GroupSet g = close(burau_gens_mod(4, 4));
  CHECK(g.size() == 1536);
  CHECK(congruence_kernel(g, 4).size() == 1);  // d = l
  CHECK(congruence_kernel(g, 1).size() == g.size());
  CHECK(congruence_kernel(g, 2).size() == 64);  // (Z/2)^{C(4,2)}
  CHECK_THROWS_AS((void)congruence_kernel(g, 3), error);
}

TEST_CASE("set products and intersections of kernels") {
  const GroupSet g = close(burau_gens_mod(3, 12));
  REQUIRE(g.size() == 1152);
  const GroupSet k4 = congruence_kernel(g, 4);
  const GroupSet k6 = congruence_kernel(g, 6);
  const GroupSet k2 = congruence_kernel(g, 2);
  const GroupSet k12 = congruence_kernel(g, 12);

  const GroupSet id_only = close({ModMatrix::identity(3, 12)});
  CHECK(set_product(k4, id_only) == k4);

  CHECK(set_product(k4, k6) == k2);
  CHECK(set_intersection(k4, k6) == k12);
  CHECK(k12.size() == 1);
}

TEST_CASE("internal direct product detection") {
  const GroupSet g6 = close(burau_gens_mod(4, 6));
  REQUIRE(g6.size() == 15552);
  const GroupSet id_only = close({ModMatrix::identity(4, 6)});
  CHECK(is_internal_direct_product(g6, g6, id_only));
  CHECK(is_internal_direct_product(g6, congruence_kernel(g6, 3), congruence_kernel(g6, 2)));

  const GroupSet g4 = close(burau_gens_mod(3, 4));
  const GroupSet k2 = congruence_kernel(g4, 2);
  CHECK_FALSE(is_internal_direct_product(g4, k2, k2));  // |H|^2 != |G|

  CHECK_THROWS_AS((void)is_internal_direct_product(g4, g6, g6), error);
}

TEST_CASE("permutation image of mod-2 matrices") {
  const auto p = permutation_image(reduce(burau_sigma(3, 1), 2));
  REQUIRE(p.has_value());
  CHECK(p->images == std::vector<int>{2, 1, 3});  // transposition (1 2)

  const auto id = permutation_image(ModMatrix::identity(4, 2));
  REQUIRE(id.has_value());
  CHECK(id->is_identity());

  ModMatrix shear(2, 2);
  shear.set(0, 0, 1);
  shear.set(0, 1, 1);
  shear.set(1, 1, 1);
  CHECK_FALSE(permutation_image(shear).has_value());

  CHECK_THROWS_AS((void)permutation_image(ModMatrix::identity(2, 3)), error);
}

TEST_CASE("mod-2 image is exactly the symmetric group") {
  for (int n = 2; n <= 5; ++n) {
    const GroupSet g = close(burau_gens_mod(n, 2));
    std::set<std::vector<int>> perms;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto p = permutation_image(g.element(i));
      REQUIRE(p.has_value());
      perms.insert(p->images);
    }
    CHECK(BigInt(perms.size()) == factorial(n));
    CHECK(perms.size() == g.size());  // bijection
  }
}

TEST_CASE("permutation matrix convention matches composition") {
  const Permutation a = Permutation::transposition(4, 1, 2);
  const Permutation b = Permutation::transposition(4, 2, 3);
  const ModMatrix pa = a.to_matrix_mod2();
  const ModMatrix pb = b.to_matrix_mod2();
  const auto back = permutation_image(pa * pb);
  REQUIRE(back.has_value());
  CHECK(*back == compose(a, b));
}

TEST_CASE("symplectic groups from transvections") {
  // brute-force filter counts, independent of both BFS and the order formula
  const IntMatrix j2 = standard_symplectic_gram(2);
  for (std::uint32_t l : {2u, 3u}) {
    const std::uint64_t brute = test::count_matrices_bruteforce(
        2, l, [&](const IntMatrix& m) { return test::is_isometry_mod(m, j2, l); });
    CHECK(brute == sp_group(1, l).size());
  }
  CHECK(sp_group(1, 2).size() == 6);
  CHECK(sp_group(1, 3).size() == 24);
  CHECK(sp_group(2, 2).size() == 720);
}

TEST_CASE("stabilizer subgroups") {
  const GroupSet sp12 = sp_group(1, 2);
  CHECK(stabilizer_subgroup(sp12, e1_vector(2)).size() == 2);
  const GroupSet sp22 = sp_group(2, 2);
  CHECK(stabilizer_subgroup(sp22, e1_vector(4)).size() == 48);
  const GroupSet trivial = close({ModMatrix::identity(2, 3)});
  CHECK(stabilizer_subgroup(trivial, e1_vector(2)).size() == 1);
}

TEST_CASE("section search control case finds the identity section") {
  const GroupSet e = close(burau_gens_mod(4, 2));  // S_4 itself
  const std::vector<Permutation> gens{
      Permutation::transposition(4, 1, 2),
      compose(Permutation::transposition(4, 2, 3), Permutation::transposition(4, 3, 4))};
  const std::vector<std::vector<int>> relations{{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}};
  const auto res = find_presentation_section(e, gens, relations, &mod2_permutation_projection);
  CHECK(res.witness_found);
  REQUIRE(res.witness.size() == 2);
  CHECK(permutation_image(res.witness[0])->images == gens[0].images);

  // broken relation set is rejected up front
  CHECK_THROWS_AS((void)find_presentation_section(e, gens, {{1, 2}}, &mod2_permutation_projection),
                  error);
  // generators that do not generate S_n are rejected
  CHECK_THROWS_AS((void)find_presentation_section(
                      e, {Permutation::transposition(4, 1, 2)}, {{1, 1}},
                      &mod2_permutation_projection),
                  error);
}

TEST_CASE("sp_group order matches the oracle for l up to 9") {
  // sp_group validates its own order against sp_order and throws on mismatch,
  // so constructing these groups is the test
  for (std::uint32_t l = 2; l <= 9; ++l) CHECK(sp_group(1, l).size() > 0);
}

TEST_CASE("synthetic split extension yields a section witness") {
  // Block matrices diag(P_sigma, I + 2Y) over Z/4: an honest direct product
  // S_4 x (Z/2)^6, projected to S_4 through the upper-left block.
  auto embed_perm = [](const Permutation& p) {
    ModMatrix m(8, 4);
    for (int j = 0; j < 4; ++j) m.set(p.images[j] - 1, j, 1);
    for (int j = 4; j < 8; ++j) m.set(j, j, 1);
    return m;
  };
  std::vector<ModMatrix> gens;
  const Permutation a = Permutation::transposition(4, 1, 2);
  const Permutation b =
      compose(Permutation::transposition(4, 2, 3), Permutation::transposition(4, 3, 4));
  gens.push_back(embed_perm(a));
  gens.push_back(embed_perm(b));
  const std::vector<std::pair<int, int>> positions{{4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  for (const auto& [r, c] : positions) {
    ModMatrix m = ModMatrix::identity(8, 4);
    m.set(r, c, 2);  // I + 2*E_{rc} in the lower block, off-diagonal
    gens.push_back(m);
  }
  const GroupSet e = close(gens);
  CHECK(e.size() == 24 * 64);

  const auto project = [](const ModMatrix& m) -> std::optional<Permutation> {
    ModMatrix upper(4, 2);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) upper.set(r, c, m.at(r, c) % 2);
    return permutation_image(upper);
  };
  const auto res = find_presentation_section(
      e, {a, b}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}}, project);
  CHECK(res.witness_found);
}

TEST_CASE("error paths across the module") {
  CHECK_THROWS_AS((void)reduce(IntMatrix::identity(2), 0), error);
  const GroupSet g = close({ModMatrix::identity(2, 3)});
  CHECK_THROWS_AS((void)stabilizer_subgroup(g, {1, 0, 0}), error);       // dim mismatch
  CHECK_THROWS_AS((void)stabilizer_subgroup(g, {0, 0}), error);          // zero vector
  const GroupSet h = close({ModMatrix::identity(3, 3)});
  CHECK_THROWS_AS((void)set_product(g, h), error);
}

TEST_CASE("close is deterministic across repeated runs") {
  const auto gens = burau_gens_mod(4, 6);
  const GroupSet a = close(gens);
  const GroupSet b = close(gens);
  CHECK(a == b);
  CHECK(a.size() == 15552);
}

TEST_CASE("closure invariant holds on sampled pairs of a larger image") {
  const GroupSet g = close(burau_gens_mod(4, 6));
  CHECK(g.verify_closed(256));
}
