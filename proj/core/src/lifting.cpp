#include "burau/lifting.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "burau/errors.hpp"
#include "burau/forms.hpp"
#include "burau/modgroup.hpp"
#include "burau/orders.hpp"

namespace burau {

namespace {

bool congruent_mod(const IntMatrix& a, const IntMatrix& b, std::uint64_t l) {
  if (a.dim() != b.dim()) return false;
  const BigInt big_l = l;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if ((a.at(r, c) - b.at(r, c)) % big_l != 0) return false;
  return true;
}

bool reduces_to(const IntMatrix& a, const ModMatrix& target) {
  return reduce(a, target.modulus()) == target;
}

// BFS word table over the transvection generators of Sp_{2g}(Z/lZ):
// parent[key] identifies the element one step before key and the step taken,
// so any element's generator word can be replayed on the integral
// transvections.
struct WordTable {
  int two_g = 0;
  std::uint32_t level = 1;
  std::vector<ModMatrix> steps_mod;
  std::vector<IntMatrix> steps_int;
  // key -> (parent key, step index); the identity is its own root.
  std::unordered_map<std::string, std::pair<std::string, int>> parent;
};

const WordTable& word_table(int two_g, std::uint32_t level) {
  static std::map<std::pair<int, std::uint32_t>, WordTable> cache;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({two_g, level});
  if (!inserted) return it->second;

  WordTable& t = it->second;
  t.two_g = two_g;
  t.level = level;
  if (two_g == 0 || level == 1) {
    const ModMatrix id = ModMatrix::identity(two_g, level);
    t.parent.emplace(encode(id), std::make_pair(encode(id), -1));
    return t;
  }

  const IntMatrix gram = standard_symplectic_gram(two_g);
  for (const BigVec& v : sp_transvection_vectors(two_g)) {
    const IntMatrix tv = transvection(v, gram);
    t.steps_int.push_back(tv);
    t.steps_mod.push_back(reduce(tv, level));
  }
  const std::size_t gen_count = t.steps_int.size();
  for (std::size_t i = 0; i < gen_count; ++i) {
    t.steps_int.push_back(t.steps_int[i].inverse());
    t.steps_mod.push_back(t.steps_mod[i].inverse());
  }

  // Sequential expansion in fixed step order: parent assignments, and with
  // them every recovered word and lift output, are deterministic.
  const std::size_t cap = default_memory_cap_bytes();
  const ModMatrix id = ModMatrix::identity(two_g, level);
  const std::string root = encode(id);
  t.parent.emplace(root, std::make_pair(root, -1));
  std::vector<ModMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<ModMatrix> next;
    for (const ModMatrix& m : frontier) {
      const std::string mkey = encode(m);
      for (std::size_t s = 0; s < t.steps_mod.size(); ++s) {
        ModMatrix p = m * t.steps_mod[s];
        std::string key = encode(p);
        if (t.parent.emplace(std::move(key), std::make_pair(mkey, static_cast<int>(s))).second) {
          next.push_back(std::move(p));
        }
      }
    }
    if (t.parent.size() * 128 > cap) {
      throw capacity_error("word_table: enumeration exceeded the memory cap");
    }
    frontier = std::move(next);
  }
  if (BigInt(t.parent.size()) != sp_order(two_g / 2, level)) {
    throw error("word_table: transvections did not generate the full symplectic group");
  }
  return t;
}

std::uint64_t mod_inverse_u64(std::uint64_t a, std::uint64_t l) {
  std::int64_t t0 = 0, t1 = 1;
  std::int64_t r0 = static_cast<std::int64_t>(l), r1 = static_cast<std::int64_t>(a % l);
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    t0 -= q * t1;
    std::swap(t0, t1);
    r0 -= q * r1;
    std::swap(r0, r1);
  }
  if (r0 != 1) throw error("mod_inverse_u64: not a unit");
  if (t0 < 0) t0 += static_cast<std::int64_t>(l);
  return static_cast<std::uint64_t>(t0);
}

}  // namespace

bool is_symplectic_mod(const ModMatrix& m) {
  if (m.dim() % 2 != 0) return false;
  if (m.modulus() <= 1) return true;
  const IntMatrix g = standard_symplectic_gram(m.dim());
  const IntMatrix lhs = lift_plain(m).transpose() * g * lift_plain(m);
  return congruent_mod(lhs, g, m.modulus());
}

bool is_stabilizer_shape_mod(const ModMatrix& m) {
  if (!is_symplectic_mod(m)) return false;
  if (m.modulus() <= 1) return true;
  for (int r = 0; r < m.dim(); ++r)
    if (m.at(r, 0) != (r == 0 ? 1u : 0u)) return false;
  for (int c = 0; c < m.dim(); ++c)
    if (m.at(1, c) != (c == 1 ? 1u : 0u)) return false;
  return true;
}

bool is_gamma_residue_mod(const ModMatrix& m) {
  if (m.modulus() <= 1) return true;
  const int n = m.dim();
  const std::uint64_t l = m.modulus();
  const IntMatrix a = lift_plain(m);
  const IntMatrix g = gram_matrix(FormSpec::unreduced_form(n));
  if (!congruent_mod(a.transpose() * g * a, g, l)) return false;
  const BasisData d = basis_data(n);
  const BigVec av = a.apply(d.v_n);
  const BigInt big_l = l;
  for (int i = 0; i < n; ++i)
    if ((av[i] - d.v_n[i]) % big_l != 0) return false;
  for (int c = 0; c < n; ++c) {
    BigInt s = 0;
    for (int r = 0; r < n; ++r) s += d.w_n[r] * a.at(r, c);
    if ((s - d.w_n[c]) % big_l != 0) return false;
  }
  return true;
}

bool is_gamma_prime_residue_mod(const ModMatrix& m) {
  if (m.modulus() <= 1) return true;
  const int n = m.dim() + 1;
  const std::uint64_t l = m.modulus();
  const IntMatrix a = lift_plain(m);
  const IntMatrix g = gram_matrix(FormSpec::reduced_form(n - 1));
  if (!congruent_mod(a.transpose() * g * a, g, l)) return false;
  if (n % 2 == 0) {
    const BasisData d = basis_data(n);
    const BigVec av = a.apply(d.v_prime);
    const BigInt big_l = l;
    for (int i = 0; i < n - 1; ++i)
      if ((av[i] - d.v_prime[i]) % big_l != 0) return false;
  }
  return true;
}

IntMatrix sp_lift(const ModMatrix& a, int g) {
  if (a.dim() != 2 * g) throw error("sp_lift: dimension must be 2g");
  if (!is_symplectic_mod(a)) throw error("sp_lift: input is not symplectic mod l");
  if (a.modulus() <= 1 || g == 0) return IntMatrix::identity(a.dim());

  const WordTable& t = word_table(2 * g, a.modulus());
  std::string key = encode(a);
  auto it = t.parent.find(key);
  if (it == t.parent.end()) throw error("sp_lift: element not reached by transvection BFS");

  std::vector<int> steps;
  const std::string root = encode(ModMatrix::identity(a.dim(), a.modulus()));
  while (key != root) {
    steps.push_back(it->second.second);
    key = it->second.first;
    it = t.parent.find(key);
  }
  IntMatrix out = IntMatrix::identity(a.dim());
  for (auto s = steps.rbegin(); s != steps.rend(); ++s) out = out * t.steps_int[*s];

  if (!is_symplectic(out) || !reduces_to(out, a)) {
    throw error("sp_lift: postcondition failed");
  }
  return out;
}

IntMatrix stab_lift(const ModMatrix& a, int g) {
  if (g < 1 || a.dim() != 2 * g) throw error("stab_lift: dimension must be 2g with g >= 1");
  if (!is_stabilizer_shape_mod(a)) {
    throw error("stab_lift: input does not fix e_1 in the stabilizer shape");
  }
  const int n = 2 * g;
  if (a.modulus() <= 1) return IntMatrix::identity(n);

  // Corner block on rows/columns 3..2g (1-based).
  ModMatrix corner(n - 2, a.modulus());
  for (int r = 2; r < n; ++r)
    for (int c = 2; c < n; ++c) corner.set(r - 2, c - 2, a.at(r, c));
  const IntMatrix corner_lift = sp_lift(corner, g - 1);

  const std::int64_t x = balanced_residue(a.at(0, 1), a.modulus());
  BigVec v2(n - 2);
  for (int r = 2; r < n; ++r) v2[r - 2] = balanced_residue(a.at(r, 1), a.modulus());

  IntMatrix out(n);
  out.at(0, 0) = 1;
  out.at(0, 1) = x;
  out.at(1, 1) = 1;
  for (int r = 2; r < n; ++r) {
    out.at(r, 1) = v2[r - 2];
    for (int c = 2; c < n; ++c) out.at(r, c) = corner_lift.at(r - 2, c - 2);
  }
  // Border entries: a~_j = <v~_2, v~_j> in the rank 2g-2 form on the corner
  // coordinates; this is what makes the bordered matrix symplectic.
  if (n > 2) {
    const IntMatrix corner_gram = standard_symplectic_gram(n - 2);
    for (int c = 2; c < n; ++c) {
      out.at(0, c) = dot(v2, corner_gram.apply(corner_lift.column(c - 2)));
    }
  }

  const BigVec e1 = [&] {
    BigVec v(n);
    v[0] = 1;
    return v;
  }();
  if (!is_symplectic(out) || out.apply(e1) != e1 || !reduces_to(out, a)) {
    throw error("stab_lift: postcondition failed");
  }
  return out;
}

IntMatrix gamma_lift(const ModMatrix& a, int n) {
  if (a.dim() != n) throw error("gamma_lift: dimension mismatch");
  if (!is_gamma_residue_mod(a)) throw error("gamma_lift: input fails the Gamma residue conditions");
  const std::uint32_t l = a.modulus();
  if (l <= 1) return IntMatrix::identity(n);

  IntMatrix lifted;
  if (n % 2 == 1) {
    // Odd n: Gamma_{n-1} acts as Sp_{n-1} on W with v_n spanning the radical.
    const int g = (n - 1) / 2;
    const IntMatrix p = to_symplectic_coords(n);
    const ModMatrix conj = reduce(p.inverse(), l) * a * reduce(p, l);
    for (int i = 0; i < n; ++i) {
      if (conj.at(i, n - 1) != (i == n - 1 ? 1u : 0u) ||
          conj.at(n - 1, i) != (i == n - 1 ? 1u : 0u)) {
        throw error("gamma_lift: residue does not fix the radical coordinate");
      }
    }
    ModMatrix s(n - 1, l);
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n - 1; ++c) s.set(r, c, conj.at(r, c));
    const IntMatrix s_lift = sp_lift(s, g);
    IntMatrix block = IntMatrix::identity(n);
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n - 1; ++c) block.at(r, c) = s_lift.at(r, c);
    lifted = p * block * p.inverse();
  } else {
    // Even n: Gamma_{n-1} is the e_1-stabilizer after moving a_g = v_n first.
    const int g = n / 2;
    const IntMatrix p = stabilizer_coords(n);
    const ModMatrix conj = reduce(p.inverse(), l) * a * reduce(p, l);
    const IntMatrix stab = stab_lift(conj, g);
    lifted = p * stab * p.inverse();
  }

  if (!in_gamma(lifted, SubgroupSpec::gamma(n - 1, 1)) || !reduces_to(lifted, a)) {
    throw error("gamma_lift: postcondition failed");
  }
  return lifted;
}

IntMatrix gamma_prime_lift(const ModMatrix& a, int n) {
  if (a.dim() != n - 1) throw error("gamma_prime_lift: dimension mismatch");
  if (!is_gamma_prime_residue_mod(a)) {
    throw error("gamma_prime_lift: input fails the Gamma' residue conditions");
  }
  const std::uint32_t l = a.modulus();
  if (l <= 1) return IntMatrix::identity(n - 1);

  IntMatrix lifted;
  if (n % 2 == 1) {
    // Odd n: transport through the c-basis to a Gamma residue and lift there;
    // psi carries the result back isomorphically.
    const BasisData d = basis_data(n);
    IntMatrix q(n);
    for (int c = 0; c < n - 1; ++c)
      for (int r = 0; r < n; ++r) q.at(r, c) = d.c[c][r];
    for (int r = 0; r < n; ++r) q.at(r, n - 1) = d.v_n[r];
    ModMatrix widened = ModMatrix::identity(n, l);
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n - 1; ++c) widened.set(r, c, a.at(r, c));
    const ModMatrix gamma_res = reduce(q, l) * widened * reduce(q.inverse(), l);
    lifted = psi(gamma_lift(gamma_res, n), n);
  } else {
    // Even n: lift the semidirect-product coordinates.
    const BasisData d = basis_data(n);
    const int m = n - 1;
    const int g = n / 2;
    std::vector<BigVec> cols;
    for (int i = 0; i < g - 1; ++i) {
      cols.push_back(d.a_prime[i]);
      cols.push_back(d.b_prime[i]);
    }
    cols.push_back(d.v_prime);
    IntMatrix r_basis(m);
    for (int c = 0; c < m; ++c)
      for (int r = 0; r < m; ++r) r_basis.at(r, c) = cols[c][r];

    const ModMatrix conj = reduce(r_basis.inverse(), l) * a * reduce(r_basis, l);
    for (int i = 0; i < m; ++i) {
      if (conj.at(i, m - 1) != (i == m - 1 ? 1u : 0u)) {
        throw error("gamma_prime_lift: residue does not fix v'_n");
      }
    }
    ModMatrix s(m - 1, l);
    for (int r = 0; r < m - 1; ++r)
      for (int c = 0; c < m - 1; ++c) s.set(r, c, conj.at(r, c));
    GammaPrimeSplit parts;
    parts.sp_part = sp_lift(s, g - 1);
    parts.translation.resize(m - 1);
    for (int c = 0; c < m - 1; ++c) {
      parts.translation[c] = balanced_residue(conj.at(m - 1, c), l);
    }
    lifted = gamma_prime_assemble(parts, n);
  }

  if (!in_gamma(lifted, SubgroupSpec::gamma_prime(n - 1, 1)) || !reduces_to(lifted, a)) {
    throw error("gamma_prime_lift: postcondition failed");
  }
  return lifted;
}

IntMatrix crt_lift(const IntMatrix& a, std::uint64_t ell, std::uint64_t m, LiftFamily family) {
  if (ell < 1 || m < 1) throw error("crt_lift: moduli must be >= 1");
  const std::uint64_t d = std::gcd(ell, m);
  const std::uint64_t big_l = ell / d * m;  // lcm
  if (big_l > 0xffffffffULL) throw error("crt_lift: lcm too large");
  const int dim = a.dim();

  const int n = family == LiftFamily::gamma_prime ? dim + 1 : dim;
  switch (family) {
    case LiftFamily::sp:
      if (!is_symplectic(a)) throw error("crt_lift: input is not symplectic");
      break;
    case LiftFamily::sp_stab: {
      if (!is_symplectic(a)) throw error("crt_lift: input is not symplectic");
      BigVec e1(dim);
      e1[0] = 1;
      if (a.apply(e1) != e1) throw error("crt_lift: input does not fix e_1");
      break;
    }
    case LiftFamily::gamma:
      if (!in_gamma(a, SubgroupSpec::gamma(n - 1, 1))) {
        throw error("crt_lift: input is not in Gamma_{n-1}");
      }
      break;
    case LiftFamily::gamma_prime:
      if (!in_gamma(a, SubgroupSpec::gamma_prime(n - 1, 1))) {
        throw error("crt_lift: input is not in Gamma'_{n-1}");
      }
      break;
  }
  if (!congruent_mod(a, IntMatrix::identity(dim), d)) {
    throw error("crt_lift: input is not congruent to I mod gcd(l, m)");
  }

  // Glue (A mod l, I mod m) into one residue mod lcm. Both agree mod d, so
  // per entry r = a + l*t with t = (target - a)/d * (l/d)^{-1} mod (m/d).
  const std::uint64_t m_over_d = m / d;
  const std::uint64_t l_over_d_inv =
      m_over_d == 1 ? 0 : mod_inverse_u64((ell / d) % m_over_d, m_over_d);
  ModMatrix glued(dim, static_cast<std::uint32_t>(big_l));
  const BigInt big_ell = ell, big_lcm = big_l;
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const BigInt target = (r == c) ? 1 : 0;
      BigInt entry = a.at(r, c) % big_lcm;
      if (m_over_d > 1) {
        BigInt s = (target - a.at(r, c)) / static_cast<std::int64_t>(d);
        BigInt t = s * l_over_d_inv % static_cast<std::int64_t>(m_over_d);
        entry = (a.at(r, c) + big_ell * t) % big_lcm;
      }
      entry %= big_lcm;
      if (entry < 0) entry += big_lcm;
      glued.set(r, c, entry.convert_to<std::uint32_t>());
    }

  IntMatrix out;
  switch (family) {
    case LiftFamily::sp:
      out = sp_lift(glued, dim / 2);
      break;
    case LiftFamily::sp_stab:
      out = stab_lift(glued, dim / 2);
      break;
    case LiftFamily::gamma:
      out = gamma_lift(glued, n);
      break;
    case LiftFamily::gamma_prime:
      out = gamma_prime_lift(glued, n);
      break;
  }

  if (!congruent_mod(out, a, ell) || !congruent_mod(out, IntMatrix::identity(dim), m)) {
    throw error("crt_lift: postcondition failed");
  }
  return out;
}

}  // namespace burau
