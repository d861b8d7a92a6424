#include <doctest.h>

#include <random>

#include "burau/braid.hpp"
#include "burau/errors.hpp"
#include "burau/forms.hpp"
#include "oracles.hpp"

using namespace burau;

namespace {

BigVec random_vector(int dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9);
  BigVec v(dim);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("gram matrices are antisymmetric with zero diagonal") {
  for (int dim = 2; dim <= 8; ++dim) {
    for (const FormSpec spec : {FormSpec::unreduced_form(dim), FormSpec::reduced_form(dim)}) {
      const IntMatrix g = gram_matrix(spec);
      for (int i = 0; i < dim; ++i) {
        CHECK(g.at(i, i) == 0);
        for (int j = 0; j < dim; ++j) CHECK(g.at(i, j) == -g.at(j, i));
      }
    }
  }
}

TEST_CASE("form evaluation") {
  const FormSpec u2 = FormSpec::unreduced_form(2);
  CHECK(form_eval(u2, {1, 0}, {0, 1}) == 1);  // <e_1, e_2> = (-1)^{1+2+1}

  std::mt19937 rng(11);
  const FormSpec u5 = FormSpec::unreduced_form(5);
  for (int t = 0; t < 30; ++t) {
    const BigVec v = random_vector(5, rng);
    const BigVec w = random_vector(5, rng);
    CHECK(form_eval(u5, v, v) == 0);                      // alternating
    CHECK(form_eval(u5, v, w) == -form_eval(u5, w, v));   // antisymmetric
  }
  CHECK_THROWS_AS((void)form_eval(u2, {1, 0, 0}, {0, 1}), error);
}

TEST_CASE("ab vectors form a symplectic family") {
  for (int n = 2; n <= 8; ++n) {
    const BasisData d = basis_data(n);
    const FormSpec spec = FormSpec::unreduced_form(n);
    for (std::size_t i = 0; i < d.a.size(); ++i) {
      for (std::size_t j = 0; j < d.b.size(); ++j) {
        CHECK(form_eval(spec, d.a[i], d.b[j]) == (i == j ? 1 : 0));
      }
      for (std::size_t j = 0; j < d.a.size(); ++j) {
        CHECK(form_eval(spec, d.a[i], d.a[j]) == 0);
        CHECK(form_eval(spec, d.b[i], d.b[j]) == 0);
      }
    }
    // a_1 pairs to 1 against b_1 even at n = 4 (the spec's worked example)
    if (n == 4) CHECK(form_eval(spec, d.a[0], d.b[0]) == 1);
    // c-basis spans the kernel of w_n^T
    for (const BigVec& c : d.c) CHECK(dot(d.w_n, c) == 0);
  }
}

TEST_CASE("isometry predicate") {
  const FormSpec u4 = FormSpec::unreduced_form(4);
  CHECK(is_isometry(u4, IntMatrix::identity(4)));
  CHECK(is_isometry(u4, burau_sigma(4, 1)));
  IntMatrix d = IntMatrix::identity(4);
  d.at(0, 0) = 2;  // scales <e_1, e_2>
  CHECK_FALSE(is_isometry(u4, d));
}

TEST_CASE("in_gamma congruence levels") {
  std::mt19937 rng(12);
  for (int n = 3; n <= 5; ++n) {
    for (int t = 0; t < 8; ++t) {
      const BraidWord w = test::random_word(n, 10, rng);
      CHECK(in_gamma(burau_matrix(w), SubgroupSpec::gamma(n - 1, 1)));
    }
  }
  const BraidWord sq = parse_word("1 1", 4);
  CHECK(in_gamma(burau_matrix(sq), SubgroupSpec::gamma(3, 2)));  // sigma_1^2 is a pure braid
  const BraidWord single = parse_word("1", 4);
  CHECK_FALSE(in_gamma(burau_matrix(single), SubgroupSpec::gamma(3, 2)));  // transposition mod 2
}

TEST_CASE("gamma_prime predicate accepts the reduced image") {
  std::mt19937 rng(13);
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(in_gamma(reduced_burau_sigma(n, i), SubgroupSpec::gamma_prime(n - 1, 1)));
    }
    const BraidWord w = test::random_word(n, 12, rng);
    CHECK(in_gamma(reduced_burau_matrix(w), SubgroupSpec::gamma_prime(n - 1, 1)));
  }
}

TEST_CASE("symplectic coordinates") {
  // n = 2: columns a_1 = e_1 + e_2, b_1 = e_2
  CHECK(to_symplectic_coords(2) == IntMatrix::from_rows({{1, 0}, {1, 1}}));
  // n = 3: columns a_1, b_1 = e_1+e_2, e_2+e_3, then v_3
  CHECK(to_symplectic_coords(3) == IntMatrix::from_rows({{1, 0, 1}, {1, 1, 1}, {0, 1, 1}}));

  for (int n = 2; n <= 8; ++n) {
    const IntMatrix p = to_symplectic_coords(n);
    CHECK(abs(p.det()) == 1);
    // P^T G P is the standard block form, padded with a zero row/column for
    // odd n (v_n spans the radical there)
    const IntMatrix g = gram_matrix(FormSpec::unreduced_form(n));
    const IntMatrix transported = p.transpose() * g * p;
    const int even_part = (n % 2 == 0) ? n : n - 1;
    IntMatrix expected(n);
    for (int i = 0; i + 1 < even_part; i += 2) {
      expected.at(i, i + 1) = 1;
      expected.at(i + 1, i) = -1;
    }
    CHECK(transported == expected);
    // conjugate of the identity is the identity
    CHECK((p.inverse() * IntMatrix::identity(n) * p).is_identity());
  }
}

TEST_CASE("conjugated Burau images are symplectic (and stabilize e_1 for even n)") {
  std::mt19937 rng(14);
  for (int n = 3; n <= 6; ++n) {
    const IntMatrix p = to_symplectic_coords(n);
    const IntMatrix pinv = p.inverse();
    for (int t = 0; t < 6; ++t) {
      const IntMatrix m = burau_matrix(test::random_word(n, 10, rng));
      const IntMatrix conj = pinv * m * p;
      if (n % 2 == 0) {
        CHECK(is_symplectic(conj));
      } else {
        // block diag: symplectic part plus the fixed radical coordinate
        IntMatrix s(n - 1);
        for (int r = 0; r < n - 1; ++r)
          for (int c = 0; c < n - 1; ++c) s.at(r, c) = conj.at(r, c);
        CHECK(is_symplectic(s));
        for (int i = 0; i < n; ++i) {
          CHECK(conj.at(i, n - 1) == (i == n - 1 ? 1 : 0));
          CHECK(conj.at(n - 1, i) == (i == n - 1 ? 1 : 0));
        }
      }
    }
    if (n % 2 == 0) {
      const IntMatrix ps = stabilizer_coords(n);
      const IntMatrix psinv = ps.inverse();
      for (int t = 0; t < 6; ++t) {
        const IntMatrix m = burau_matrix(test::random_word(n, 10, rng));
        const IntMatrix conj = psinv * m * ps;
        CHECK(is_symplectic(conj));
        BigVec e1(n);
        e1[0] = 1;
        CHECK(conj.apply(e1) == e1);
        // second row forced to e_2^T
        for (int c = 0; c < n; ++c) CHECK(conj.at(1, c) == (c == 1 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("psi restricts to the c-basis and is a homomorphism") {
  CHECK(psi(IntMatrix::identity(3), 3).is_identity());
  CHECK(psi(burau_matrix(parse_word("2", 3)), 3) == IntMatrix::from_rows({{1, 0}, {-1, 1}}));

  std::mt19937 rng(15);
  for (int n = 3; n <= 6; ++n) {
    for (int t = 0; t < 8; ++t) {
      const IntMatrix a = burau_matrix(test::random_word(n, 8, rng));
      const IntMatrix b = burau_matrix(test::random_word(n, 8, rng));
      CHECK(psi(a * b, n) == psi(a, n) * psi(b, n));
    }
  }
  CHECK_THROWS_AS((void)psi(IntMatrix::from_rows({{2, 0}, {0, 1}}), 2), error);
}

TEST_CASE("psi composed with burau is reduced burau") {
  std::mt19937 rng(16);
  for (int n = 3; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const BraidWord w = test::random_word(n, 12, rng);
      CHECK(psi(burau_matrix(w), n) == reduced_burau_matrix(w));
    }
  }
}

TEST_CASE("psi kills the kernel generator b_g -> b_g + a_g") {
  for (int n : {4, 6}) {
    const BasisData d = basis_data(n);
    const int g = n / 2;
    // K acts as the identity on a_1,b_1,...,a_g and adds a_g to b_g.
    const IntMatrix p = to_symplectic_coords(n);
    IntMatrix elem = IntMatrix::identity(n);
    elem.at(2 * g - 2, 2 * g - 1) = 1;  // a_g-row gains b_g-column entry
    const IntMatrix k = p * elem * p.inverse();
    REQUIRE(in_gamma(k, SubgroupSpec::gamma(n - 1, 1)));
    const BigVec image = k.apply(d.b[g - 1]);
    BigVec expected = d.b[g - 1];
    for (int r = 0; r < n; ++r) expected[r] += d.a[g - 1][r];
    CHECK(image == expected);
    CHECK(psi(k, n).is_identity());
  }
}

TEST_CASE("psi_section is a set-theoretic section") {
  CHECK(psi_section(IntMatrix::identity(3), 4).is_identity());
  std::mt19937 rng(17);
  for (int n : {4, 6}) {
    for (int t = 0; t < 25; ++t) {
      const IntMatrix b = reduced_burau_matrix(test::random_word(n, 10, rng));
      const IntMatrix lifted = psi_section(b, n);
      CHECK(in_gamma(lifted, SubgroupSpec::gamma(n - 1, 1)));
      CHECK(psi(lifted, n) == b);
    }
  }
}

TEST_CASE("psi_section is not a group homomorphism") {
  // search short reduced words for a multiplicativity failure
  std::mt19937 rng(18);
  const int n = 4;
  bool found = false;
  for (int t = 0; t < 200 && !found; ++t) {
    const IntMatrix b1 = reduced_burau_matrix(test::random_word(n, 4, rng));
    const IntMatrix b2 = reduced_burau_matrix(test::random_word(n, 4, rng));
    found = psi_section(b1 * b2, n) != psi_section(b1, n) * psi_section(b2, n);
  }
  CHECK(found);
}

TEST_CASE("gamma_prime_split round trips") {
  const int n = 4;
  const auto id_split = gamma_prime_split(IntMatrix::identity(3), n);
  CHECK(id_split.sp_part.is_identity());
  CHECK(id_split.translation == BigVec{0, 0});

  // pure translation kernel element
  GammaPrimeSplit parts;
  parts.sp_part = IntMatrix::identity(2);
  parts.translation = {3, -2};
  const IntMatrix k = gamma_prime_assemble(parts, n);
  REQUIRE(in_gamma(k, SubgroupSpec::gamma_prime(3, 1)));
  const auto back = gamma_prime_split(k, n);
  CHECK(back.sp_part.is_identity());
  CHECK(back.translation == BigVec{3, -2});

  std::mt19937 rng(19);
  for (int nn : {4, 6, 8}) {
    for (int t = 0; t < 15; ++t) {
      const IntMatrix a = reduced_burau_matrix(test::random_word(nn, 10, rng));
      const auto split = gamma_prime_split(a, nn);
      CHECK(is_symplectic(split.sp_part));
      CHECK(gamma_prime_assemble(split, nn) == a);
    }
  }
}

TEST_CASE("in_gamma is closed under products and inverses at a fixed level") {
  std::mt19937 rng(41);
  const SubgroupSpec spec = SubgroupSpec::gamma(3, 2);
  std::vector<IntMatrix> level2;
  while (level2.size() < 6) {
    const IntMatrix m = burau_matrix(test::random_word(4, 8, rng));
    const IntMatrix sq = m * m;  // squares of images land in level 2
    if (in_gamma(sq, spec)) level2.push_back(sq);
  }
  for (const IntMatrix& x : level2) {
    CHECK(in_gamma(x.inverse(), spec));
    for (const IntMatrix& y : level2) CHECK(in_gamma(x * y, spec));
  }
}

TEST_CASE("psi_section over 100 random reduced images across even n") {
  std::mt19937 rng(42);
  for (int n : {4, 6, 8}) {
    for (int t = 0; t < 34; ++t) {
      const IntMatrix b = reduced_burau_matrix(test::random_word(n, 10, rng));
      const IntMatrix lifted = psi_section(b, n);
      CHECK(in_gamma(lifted, SubgroupSpec::gamma(n - 1, 1)));
      CHECK(psi(lifted, n) == b);
    }
  }
}

TEST_CASE("section and split reject inputs outside Gamma'") {
  IntMatrix not_gamma_prime = IntMatrix::identity(3);
  not_gamma_prime.at(0, 0) = 2;
  CHECK_THROWS_AS((void)psi_section(not_gamma_prime, 4), error);
  CHECK_THROWS_AS((void)gamma_prime_split(not_gamma_prime, 4), error);
}
