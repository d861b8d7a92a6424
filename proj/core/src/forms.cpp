#include "burau/forms.hpp"

#include <string>

#include "burau/errors.hpp"

namespace burau {

namespace {

bool congruent_to_identity(const IntMatrix& m, std::uint64_t level) {
  if (level <= 1) return true;
  const BigInt l = level;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      BigInt e = m.at(r, c) - (r == c ? 1 : 0);
      if (e % l != 0) return false;
    }
  return true;
}

bool fixes_vector(const IntMatrix& m, const BigVec& v) { return m.apply(v) == v; }

bool fixes_covector(const IntMatrix& m, const BigVec& w) {
  // w^T M = w^T
  const int n = m.dim();
  for (int c = 0; c < n; ++c) {
    BigInt s = 0;
    for (int r = 0; r < n; ++r) s += w[r] * m.at(r, c);
    if (s != w[c]) return false;
  }
  return true;
}

// Columns of the matrix taken from a list of vectors.
IntMatrix matrix_from_columns(const std::vector<BigVec>& cols) {
  const int n = static_cast<int>(cols.size());
  IntMatrix m(n);
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(cols[c].size()) != n) throw error("matrix_from_columns: ragged columns");
    for (int r = 0; r < n; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

// Solve C * x = y for the c-basis matrix C (n x (n-1)), where column i of C
// is c_i = (-1)^{i+1}(e_i + e_{i+1}). C is a staircase, so a forward
// substitution suffices; the last row must come out consistent, which is
// exactly the statement that y lies in W.
BigVec solve_in_c_basis(const BigVec& y, int n) {
  BigVec x(n - 1);
  BigInt prev = 0;  // x_{k-1}
  for (int k = 1; k <= n - 1; ++k) {
    // y_k = (-1)^k x_{k-1} + (-1)^{k+1} x_k   (1-based k; x_0 = 0)
    const int sk = (k % 2 == 0) ? 1 : -1;  // (-1)^k
    BigInt xk = (y[k - 1] - sk * prev) * (-sk);
    x[k - 1] = xk;
    prev = xk;
  }
  const int sn = (n % 2 == 0) ? 1 : -1;  // (-1)^n
  if (y[n - 1] != sn * prev) throw error("solve_in_c_basis: vector is not in W");
  return x;
}

}  // namespace

IntMatrix gram_matrix(const FormSpec& spec) {
  IntMatrix g(spec.dim);
  if (spec.kind == FormKind::unreduced) {
    for (int i = 1; i <= spec.dim; ++i)
      for (int j = i + 1; j <= spec.dim; ++j) {
        const int s = ((i + j + 1) % 2 == 0) ? 1 : -1;  // (-1)^{i+j+1}
        g.at(i - 1, j - 1) = s;
        g.at(j - 1, i - 1) = -s;
      }
  } else {
    for (int i = 0; i + 1 < spec.dim; ++i) {
      g.at(i, i + 1) = -1;
      g.at(i + 1, i) = 1;
    }
  }
  return g;
}

BigInt form_eval(const FormSpec& spec, const BigVec& v, const BigVec& w) {
  if (static_cast<int>(v.size()) != spec.dim || static_cast<int>(w.size()) != spec.dim) {
    throw error("form_eval: dimension mismatch");
  }
  const IntMatrix g = gram_matrix(spec);
  return dot(v, g.apply(w));
}

bool is_isometry(const FormSpec& spec, const IntMatrix& m) {
  if (m.dim() != spec.dim) throw error("is_isometry: dimension mismatch");
  const IntMatrix g = gram_matrix(spec);
  return m.transpose() * g * m == g;
}

BasisData basis_data(int n) {
  if (n < 2) throw error("basis_data: n >= 2 required");
  BasisData d;
  d.n = n;
  d.v_n.assign(n, 1);
  d.w_n.resize(n);
  for (int k = 0; k < n; ++k) d.w_n[k] = (k % 2 == 0) ? 1 : -1;

  d.c.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    BigVec ci(n);
    const int s = (i % 2 == 1) ? 1 : -1;  // (-1)^{i+1}
    ci[i - 1] = s;
    ci[i] = s;
    d.c.push_back(std::move(ci));
  }

  // odd n = 2g+1 has g symplectic pairs spanning W; even n = 2g has g pairs
  // spanning all of Z^n with b_g = e_n
  const int pairs = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  for (int i = 1; i <= pairs; ++i) {
    BigVec ai(n);
    for (int k = 0; k < 2 * i; ++k) ai[k] = 1;
    d.a.push_back(std::move(ai));
    BigVec bi(n);
    if (2 * i == n) {
      bi[n - 1] = 1;  // b_g = e_n when 2i = n
    } else {
      bi[2 * i - 1] = 1;
      bi[2 * i] = 1;  // e_{2i} + e_{2i+1}
    }
    d.b.push_back(std::move(bi));
  }

  if (n % 2 == 0) {
    const int gg = n / 2;
    for (int i = 1; i <= gg; ++i) {
      BigVec ap(n - 1);
      for (int k = 1; k <= i; ++k) ap[2 * k - 2] = 1;  // e_1 + e_3 + ... + e_{2i-1}
      d.a_prime.push_back(std::move(ap));
    }
    for (int i = 1; i <= gg - 1; ++i) {
      BigVec bp(n - 1);
      bp[2 * i - 1] = -1;  // -e_{2i}
      d.b_prime.push_back(std::move(bp));
    }
    d.v_prime = d.a_prime.back();
  }
  return d;
}

bool in_gamma(const IntMatrix& m, const SubgroupSpec& spec) {
  if (spec.level < 1) throw error("in_gamma: level >= 1 required");
  if (spec.family == GammaFamily::gamma) {
    const int n = spec.n_minus_1 + 1;
    if (m.dim() != n) throw error("in_gamma: expected dimension " + std::to_string(n));
    const BasisData d = basis_data(n);
    return is_isometry(FormSpec::unreduced_form(n), m) && fixes_vector(m, d.v_n) &&
           fixes_covector(m, d.w_n) && congruent_to_identity(m, spec.level);
  }
  const int n = spec.n_minus_1 + 1;  // matrices live in GL_{n-1}(Z)
  if (m.dim() != n - 1) throw error("in_gamma: expected dimension " + std::to_string(n - 1));
  if (!is_isometry(FormSpec::reduced_form(n - 1), m)) return false;
  if (n % 2 == 0) {
    const BasisData d = basis_data(n);
    if (!fixes_vector(m, d.v_prime)) return false;
  }
  return congruent_to_identity(m, spec.level);
}

IntMatrix to_symplectic_coords(int n) {
  const BasisData d = basis_data(n);
  std::vector<BigVec> cols;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    cols.push_back(d.a[i]);
    cols.push_back(d.b[i]);
  }
  if (n % 2 == 1) cols.push_back(d.v_n);
  return matrix_from_columns(cols);
}

IntMatrix stabilizer_coords(int n) {
  if (n % 2 != 0) throw error("stabilizer_coords: n must be even");
  const BasisData d = basis_data(n);
  std::vector<BigVec> cols;
  cols.push_back(d.a.back());
  cols.push_back(d.b.back());
  for (std::size_t i = 0; i + 1 < d.a.size(); ++i) {
    cols.push_back(d.a[i]);
    cols.push_back(d.b[i]);
  }
  return matrix_from_columns(cols);
}

IntMatrix standard_symplectic_gram(int two_g) {
  if (two_g % 2 != 0) throw error("standard_symplectic_gram: even dimension required");
  IntMatrix g(two_g);
  for (int i = 0; i + 1 < two_g; i += 2) {
    g.at(i, i + 1) = 1;
    g.at(i + 1, i) = -1;
  }
  return g;
}

bool is_symplectic(const IntMatrix& m) {
  const IntMatrix g = standard_symplectic_gram(m.dim());
  return m.transpose() * g * m == g;
}

IntMatrix psi(const IntMatrix& m, int n) {
  if (!in_gamma(m, SubgroupSpec::gamma(n - 1, 1))) throw error("psi: matrix is not in Gamma_{n-1}");
  const BasisData d = basis_data(n);
  IntMatrix out(n - 1);
  for (int j = 0; j < n - 1; ++j) {
    const BigVec image = m.apply(d.c[j]);
    const BigVec coords = solve_in_c_basis(image, n);
    for (int i = 0; i < n - 1; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

IntMatrix psi_section(const IntMatrix& b, int n) {
  if (n % 2 != 0) throw error("psi_section: n must be even");
  if (!in_gamma(b, SubgroupSpec::gamma_prime(n - 1, 1))) {
    throw error("psi_section: matrix is not in Gamma'_{n-1}");
  }
  const BasisData d = basis_data(n);
  const int g = n / 2;
  const FormSpec form = FormSpec::unreduced_form(n);

  // Pull a reduced-side vector y (coordinates in the e-basis of Z^{n-1})
  // back to W: the isometry sends c_i to e_i, so the preimage is sum y_i c_i.
  auto pull_back = [&](const BigVec& y) {
    BigVec v(n);
    for (int i = 0; i < n - 1; ++i)
      for (int r = 0; r < n; ++r) v[r] += y[i] * d.c[i][r];
    return v;
  };

  // Images of a_1, b_1, ..., a_{g-1}, b_{g-1}, a_g under the section: act the
  // way b acts on the primed vectors.
  std::vector<BigVec> image_a(g), image_b(g);
  for (int i = 0; i < g; ++i) image_a[i] = pull_back(b.apply(d.a_prime[i]));
  for (int i = 0; i < g - 1; ++i) image_b[i] = pull_back(b.apply(d.b_prime[i]));

  // b_g goes to b_g + sum_{i<g} ( <b_g, B~ a_i> B~ b_i - <b_g, B~ b_i> B~ a_i ).
  // The correction must be taken in the image vectors: with lambda_i =
  // <b_g, B~ a_i> and mu_i = <b_g, B~ b_i>, the pairings
  //   <B~ a_j, b_g + sum_i (lambda_i B~ b_i - mu_i B~ a_i)> = -lambda_j + lambda_j = 0
  //   <B~ b_j, ...> = -mu_j + mu_j = 0,   <B~ a_g, ...> = <a_g, b_g> = 1
  // all come out right because B~ preserves the pairings of the W-basis.
  BigVec bg_image = d.b[g - 1];
  for (int i = 0; i < g - 1; ++i) {
    const BigInt ca = form_eval(form, d.b[g - 1], image_a[i]);
    const BigInt cb = form_eval(form, d.b[g - 1], image_b[i]);
    for (int r = 0; r < n; ++r) bg_image[r] += ca * image_b[i][r] - cb * image_a[i][r];
  }
  image_b[g - 1] = std::move(bg_image);

  // Assemble: columns in the ab order a_1, b_1, ..., a_g, b_g.
  std::vector<BigVec> cols;
  for (int i = 0; i < g; ++i) {
    cols.push_back(image_a[i]);
    cols.push_back(image_b[i]);
  }
  const IntMatrix images = matrix_from_columns(cols);
  const IntMatrix p = to_symplectic_coords(n);
  const IntMatrix result = images * p.inverse();
  if (!in_gamma(result, SubgroupSpec::gamma(n - 1, 1))) {
    throw error("psi_section: constructed matrix failed the Gamma_{n-1} predicate");
  }
  return result;
}

GammaPrimeSplit gamma_prime_split(const IntMatrix& a, int n) {
  if (n % 2 != 0) throw error("gamma_prime_split: n must be even");
  if (!in_gamma(a, SubgroupSpec::gamma_prime(n - 1, 1))) {
    throw error("gamma_prime_split: matrix is not in Gamma'_{n-1}");
  }
  const BasisData d = basis_data(n);
  const int m = n - 1;
  const int g = n / 2;

  // Basis a'_1, b'_1, ..., a'_{g-1}, b'_{g-1}, v'_n; in these coordinates the
  // matrix is [[S, 0], [t, 1]] with S the induced Sp_{2g-2}(Z) action.
  std::vector<BigVec> cols;
  for (int i = 0; i < g - 1; ++i) {
    cols.push_back(d.a_prime[i]);
    cols.push_back(d.b_prime[i]);
  }
  cols.push_back(d.v_prime);
  const IntMatrix r = matrix_from_columns(cols);
  const IntMatrix in_basis = r.inverse() * a * r;

  for (int i = 0; i < m; ++i) {
    if (in_basis.at(i, m - 1) != (i == m - 1 ? 1 : 0)) {
      throw error("gamma_prime_split: unexpected action on v'_n");
    }
  }
  GammaPrimeSplit parts;
  parts.sp_part = IntMatrix(m - 1);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j) parts.sp_part.at(i, j) = in_basis.at(i, j);
  parts.translation.resize(m - 1);
  for (int j = 0; j < m - 1; ++j) parts.translation[j] = in_basis.at(m - 1, j);
  return parts;
}

IntMatrix gamma_prime_assemble(const GammaPrimeSplit& parts, int n) {
  if (n % 2 != 0) throw error("gamma_prime_assemble: n must be even");
  const BasisData d = basis_data(n);
  const int m = n - 1;
  const int g = n / 2;
  if (parts.sp_part.dim() != m - 1 || static_cast<int>(parts.translation.size()) != m - 1) {
    throw error("gamma_prime_assemble: dimension mismatch");
  }
  IntMatrix in_basis(m);
  for (int i = 0; i < m - 1; ++i)
    for (int j = 0; j < m - 1; ++j) in_basis.at(i, j) = parts.sp_part.at(i, j);
  for (int j = 0; j < m - 1; ++j) in_basis.at(m - 1, j) = parts.translation[j];
  in_basis.at(m - 1, m - 1) = 1;

  std::vector<BigVec> cols;
  for (int i = 0; i < g - 1; ++i) {
    cols.push_back(d.a_prime[i]);
    cols.push_back(d.b_prime[i]);
  }
  cols.push_back(d.v_prime);
  const IntMatrix r = matrix_from_columns(cols);
  return r * in_basis * r.inverse();
}

}  // namespace burau
