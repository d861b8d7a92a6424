#include "burau/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <numeric>

#include "burau/braid.hpp"
#include "burau/cache.hpp"
#include "burau/errors.hpp"
#include "burau/forms.hpp"
#include "burau/json_io.hpp"
#include "burau/lifting.hpp"
#include "burau/orders.hpp"

namespace burau {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::string big_str(const BigInt& x) { return x.str(); }

CloseOptions close_options(const VerifyOptions& opts) {
  CloseOptions c;
  c.memory_cap_bytes = opts.memory_cap_bytes;
  return c;
}

std::vector<ModMatrix> burau_generators(int n, std::uint64_t level, bool reduced) {
  std::vector<ModMatrix> gens;
  for (int i = 1; i <= n - 1; ++i) {
    const IntMatrix g = reduced ? reduced_burau_sigma(n, i) : burau_sigma(n, i);
    gens.push_back(reduce(g, level));
  }
  return gens;
}

// Labeled BFS pairing each mod-2 image with its S_n permutation; used as the
// projection for the reduced section search, where the mod-2 image is the
// standard representation rather than permutation matrices. The pairing must
// come out a consistent bijection (the representation is faithful for n >= 3).
std::map<std::string, Permutation> mod2_label_table(int n, bool reduced) {
  std::vector<std::pair<ModMatrix, Permutation>> gens;
  for (int i = 1; i <= n - 1; ++i) {
    const IntMatrix g = reduced ? reduced_burau_sigma(n, i) : burau_sigma(n, i);
    gens.emplace_back(reduce(g, 2), Permutation::transposition(n, i, i + 1));
  }
  std::map<std::string, Permutation> table;
  std::vector<std::pair<ModMatrix, Permutation>> frontier{
      {ModMatrix::identity(gens[0].first.dim(), 2), Permutation::identity(n)}};
  table.emplace(encode(frontier[0].first), frontier[0].second);
  while (!frontier.empty()) {
    std::vector<std::pair<ModMatrix, Permutation>> next;
    for (const auto& [m, p] : frontier) {
      for (const auto& [gm, gp] : gens) {
        ModMatrix m2 = m * gm;
        Permutation p2 = compose(p, gp);
        auto [it, inserted] = table.emplace(encode(m2), p2);
        if (inserted) {
          next.emplace_back(std::move(m2), std::move(p2));
        } else if (!(it->second == p2)) {
          throw error("mod2_label_table: mod-2 representation is not faithful");
        }
      }
    }
    frontier = std::move(next);
  }
  if (BigInt(table.size()) != factorial(n)) {
    throw error("mod2_label_table: mod-2 image does not have order n!");
  }
  return table;
}

VerificationReport skipped(VerificationReport r, const std::string& reason,
                           Clock::time_point start) {
  r.status = "skipped(" + reason + ")";
  r.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
  return nlohmann::json{{"tool_version", kToolVersion},
                        {"claim", claim},
                        {"params", params},
                        {"predicted", predicted},
                        {"observed", observed},
                        {"status", status},
                        {"witness", witness},
                        {"elapsed_ms", elapsed_ms}};
}

bool within_default_envelope(int n, std::uint64_t level) {
  return (n <= 5 && level <= 6) || (n <= 4 && level <= 12) || (n <= 6 && level == 2);
}

GroupSet burau_image(int n, std::uint64_t level, bool reduced, const VerifyOptions& opts) {
  if (n < 2 || (reduced && n < 3)) throw error("burau_image: invalid n for this variant");
  const GroupFamily family = reduced ? GroupFamily::reduced_burau_image : GroupFamily::burau_image;
  std::filesystem::path file;
  if (opts.cache_dir) {
    file = cache_file_path(*opts.cache_dir, family, n, level);
    if (auto cached = cache_load(file, family)) return std::move(*cached);
  }
  GroupSet g = close(burau_generators(n, level, reduced), close_options(opts));
  if (opts.cache_dir) cache_store(file, family, g);
  return g;
}

VerificationReport verify_theorem_a(int n, std::uint64_t level, bool reduced,
                                    const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "theorem-a";
  r.params = {{"n", n}, {"level", level}, {"variant", reduced ? "reduced" : "unreduced"}};

  const BigInt predicted_order = reduced ? predicted_reduced_quotient_order(n, level)
                                         : predicted_braid_quotient_order(n, level);
  if (reduced && n == 2) {
    r.predicted = {{"order", big_str(predicted_order)}};
    r.observed = {{"order", "1"}};  // the representation is zero
    r.status = predicted_order == 1 ? "verified" : "refuted";
    r.elapsed_ms = ms_since(start);
    return r;
  }
  const LevelFactorization f = factor_level(level);
  const std::uint64_t two_part = std::uint64_t(1) << f.two_exponent;
  const bool check_product = f.two_exponent >= 1 && f.odd_part > 1;

  nlohmann::json predicted{{"order", big_str(predicted_order)}};
  if (check_product) {
    const BigInt pred_h = reduced ? predicted_reduced_quotient_order(n, two_part)
                                  : predicted_braid_quotient_order(n, two_part);
    const BigInt pred_k = reduced ? predicted_reduced_quotient_order(n, f.odd_part)
                                  : predicted_braid_quotient_order(n, f.odd_part);
    predicted["kernel_orders"] = {{std::to_string(f.odd_part), big_str(pred_h)},
                                  {std::to_string(two_part), big_str(pred_k)}};
    predicted["internal_direct_product"] = true;
  }
  r.predicted = predicted;

  try {
    const GroupSet g = burau_image(n, level, reduced, opts);
    nlohmann::json observed{{"order", std::to_string(g.size())}};
    bool ok = BigInt(g.size()) == predicted_order;
    if (check_product) {
      const GroupSet h = congruence_kernel(g, static_cast<std::uint32_t>(f.odd_part));
      const GroupSet k = congruence_kernel(g, static_cast<std::uint32_t>(two_part));
      const bool product_ok = is_internal_direct_product(g, h, k);
      observed["kernel_orders"] = {{std::to_string(f.odd_part), std::to_string(h.size())},
                                   {std::to_string(two_part), std::to_string(k.size())}};
      observed["internal_direct_product"] = product_ok;
      ok = ok && product_ok &&
           observed["kernel_orders"] == r.predicted["kernel_orders"];
    }
    r.observed = observed;
    r.status = ok ? "verified" : "refuted";
    if (!ok) {
      nlohmann::json w = nlohmann::json::array();
      for (const ModMatrix& m : g.generators()) w.push_back(modmatrix_to_json(m));
      r.witness = w;
    }
  } catch (const capacity_error& e) {
    return skipped(std::move(r), e.what(), start);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_theorem_b(int n, std::uint64_t level, const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "theorem-b";
  r.params = {{"n", n}, {"level", level}};

  const bool sn_case = n >= 4 && level % 2 == 1;
  const std::uint64_t big_level = 2 * level;
  try {
    const GroupSet g = burau_image(n, big_level, false, opts);
    const GroupSet h = congruence_kernel(g, static_cast<std::uint32_t>(level));

    if (sn_case) {
      // Image of B_n[l] in the mod-2l quotient should be an S_n mapping
      // bijectively onto the permutation matrices mod 2.
      const BigInt predicted_order = factorial(n);
      r.predicted = {{"kernel_order", big_str(predicted_order)},
                     {"bijective_onto_permutations", true}};
      std::map<std::vector<int>, int> perm_counts;
      bool all_perms = true;
      for (std::size_t i = 0; i < h.size(); ++i) {
        const auto p = permutation_image(reduce_mod(h.element(i), 2));
        if (!p) {
          all_perms = false;
          break;
        }
        ++perm_counts[p->images];
      }
      const bool bijective =
          all_perms && BigInt(perm_counts.size()) == predicted_order &&
          std::all_of(perm_counts.begin(), perm_counts.end(),
                      [](const auto& kv) { return kv.second == 1; });
      r.observed = {{"kernel_order", std::to_string(h.size())},
                    {"bijective_onto_permutations", bijective}};
      const bool ok = BigInt(h.size()) == predicted_order && bijective;
      r.status = ok ? "verified" : "refuted";
      if (!ok) {
        nlohmann::json w = nlohmann::json::array();
        for (std::size_t i = 0; i < std::min<std::size_t>(h.size(), 4); ++i) {
          w.push_back(modmatrix_to_json(h.element(i)));
        }
        r.witness = w;
      }
    } else {
      // n = 2,3 or even l: the image fills Gamma_{n-1}[l]/Gamma_{n-1}[2l].
      const BigInt predicted_order =
          gamma_quotient_order(n - 1, big_level) / gamma_quotient_order(n - 1, level);
      r.predicted = {{"kernel_order", big_str(predicted_order)}};
      r.observed = {{"kernel_order", std::to_string(h.size())}};
      const bool ok = BigInt(h.size()) == predicted_order;
      r.status = ok ? "verified" : "refuted";
      if (!ok) {
        nlohmann::json w = nlohmann::json::array();
        for (const ModMatrix& m : g.generators()) w.push_back(modmatrix_to_json(m));
        r.witness = w;
      }
    }
  } catch (const capacity_error& e) {
    return skipped(std::move(r), e.what(), start);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_multiplicativity(int n, std::uint64_t l1, std::uint64_t l2,
                                           const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "braid-multiplicativity";
  r.params = {{"n", n}, {"l", l1}, {"m", l2}};
  const std::uint64_t g = std::gcd(l1, l2);
  const std::uint64_t lcm = l1 / g * l2;
  r.predicted = {{"product_equals_kernel_gcd", true}, {"intersection_is_kernel_lcm", true}};
  try {
    const GroupSet image = burau_image(n, lcm, false, opts);
    const GroupSet h = congruence_kernel(image, static_cast<std::uint32_t>(l1));
    const GroupSet k = congruence_kernel(image, static_cast<std::uint32_t>(l2));
    const GroupSet kg = congruence_kernel(image, static_cast<std::uint32_t>(g));
    const GroupSet klcm = congruence_kernel(image, static_cast<std::uint32_t>(lcm));
    const bool product_ok = set_product(h, k) == kg;
    const bool intersection_ok = set_intersection(h, k) == klcm;
    r.observed = {{"product_equals_kernel_gcd", product_ok},
                  {"intersection_is_kernel_lcm", intersection_ok},
                  {"group_order", std::to_string(image.size())},
                  {"kernel_orders",
                   {{std::to_string(l1), std::to_string(h.size())},
                    {std::to_string(l2), std::to_string(k.size())},
                    {std::to_string(g), std::to_string(kg.size())},
                    {std::to_string(lcm), std::to_string(klcm.size())}}}};
    const bool ok = product_ok && intersection_ok;
    r.status = ok ? "verified" : "refuted";
    if (!ok) {
      nlohmann::json w = nlohmann::json::array();
      for (const ModMatrix& m : image.generators()) w.push_back(modmatrix_to_json(m));
      r.witness = w;
    }
  } catch (const capacity_error& e) {
    return skipped(std::move(r), e.what(), start);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_nonsplit(int n, int k, bool reduced, const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "nonsplit-extension";
  r.params = {{"n", n}, {"k", k}, {"variant", reduced ? "reduced" : "unreduced"}};
  if (n < 3 || k < 1) {
    return skipped(std::move(r), "requires n >= 3 and k >= 1", start);
  }

  // S_n presentation: for n = 4 the pair a = (1 2), b = (2 3 4) with
  // relations a^2, b^3, (ab)^4 (a realization of the (2,3,4) triangle
  // presentation of S_4, since ab = (1 2 3 4)); other n use the Coxeter
  // presentation on adjacent transpositions. Both are validated inside the
  // search.
  std::vector<Permutation> target_gens;
  std::vector<std::vector<int>> relations;
  if (n == 4) {
    target_gens = {Permutation::transposition(4, 1, 2),
                   compose(Permutation::transposition(4, 2, 3), Permutation::transposition(4, 3, 4))};
    relations = {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2}};
  } else {
    for (int i = 1; i <= n - 1; ++i) target_gens.push_back(Permutation::transposition(n, i, i + 1));
    for (int i = 1; i <= n - 1; ++i) relations.push_back({i, i});
    for (int i = 1; i <= n - 2; ++i) relations.push_back({i, i + 1, i, i + 1, i, i + 1});
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) relations.push_back({i, j, i, j});
  }

  const std::string expected = reduced ? "unconstrained" : (k >= 2 ? "non-split" : "split");
  r.predicted = {{"splitting", expected}};

  try {
    const std::uint64_t level = std::uint64_t(1) << k;
    const GroupSet ext = burau_image(n, level, reduced, opts);

    std::function<std::optional<Permutation>(const ModMatrix&)> project;
    if (reduced) {
      auto table = std::make_shared<std::map<std::string, Permutation>>(mod2_label_table(n, true));
      project = [table](const ModMatrix& m) -> std::optional<Permutation> {
        auto it = table->find(encode(reduce_mod(m, 2)));
        if (it == table->end()) return std::nullopt;
        return it->second;
      };
    } else {
      project = &mod2_permutation_projection;
    }

    const SectionSearchResult search = find_presentation_section(ext, target_gens, relations,
                                                                 project);
    const std::string outcome = search.witness_found ? "split" : "non-split";
    r.observed = {{"splitting", outcome},
                  {"tuples_tried", search.tuples_tried},
                  {"relation_satisfying_tuples", search.relation_satisfying_tuples},
                  {"extension_order", std::to_string(ext.size())}};
    if (search.witness_found) {
      nlohmann::json w = nlohmann::json::array();
      for (const ModMatrix& m : search.witness) w.push_back(modmatrix_to_json(m));
      r.witness = w;
    }
    if (reduced) {
      r.status = "verified";  // exploration: search completed, outcome recorded
    } else {
      r.status = outcome == expected ? "verified" : "refuted";
      if (r.refuted() && r.witness.is_null()) {
        nlohmann::json w = nlohmann::json::array();
        for (const ModMatrix& m : ext.generators()) w.push_back(modmatrix_to_json(m));
        r.witness = w;
      }
    }
  } catch (const capacity_error& e) {
    return skipped(std::move(r), e.what(), start);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport quotient_report(int n, std::uint64_t level, bool reduced,
                                   const VerifyOptions& opts) {
  const auto start = Clock::now();
  VerificationReport r;
  r.claim = "quotient-order";
  r.params = {{"n", n}, {"level", level}, {"variant", reduced ? "reduced" : "unreduced"}};
  const BigInt predicted = reduced ? predicted_reduced_quotient_order(n, level)
                                   : predicted_braid_quotient_order(n, level);
  r.predicted = {{"order", big_str(predicted)}};
  if (reduced && n == 2) {
    r.observed = {{"order", "1"}};
    r.status = predicted == 1 ? "verified" : "refuted";
    r.elapsed_ms = ms_since(start);
    return r;
  }
  try {
    const GroupSet g = burau_image(n, level, reduced, opts);
    r.observed = {{"order", std::to_string(g.size())}};
    const bool ok = BigInt(g.size()) == predicted;
    r.status = ok ? "verified" : "refuted";
    if (!ok) {
      nlohmann::json w = nlohmann::json::array();
      for (const ModMatrix& m : g.generators()) w.push_back(modmatrix_to_json(m));
      r.witness = w;
    }
  } catch (const capacity_error& e) {
    return skipped(std::move(r), e.what(), start);
  }
  r.elapsed_ms = ms_since(start);
  return r;
}

MemberResult member(const IntMatrix& m, int n, std::uint64_t level) {
  if (m.dim() != n) throw error("member: matrix dimension must equal n");
  MemberResult out;
  const bool gamma_ok = in_gamma(m, SubgroupSpec::gamma(n - 1, level));
  out.explanation.push_back(std::string(gamma_ok ? "pass" : "fail") +
                            ": Gamma_{n-1}[" + std::to_string(level) + "] predicate");
  bool perm_ok = true;
  if (level % 2 == 1 && n >= 4) {
    perm_ok = permutation_image(reduce(m, 2)).has_value();
    out.explanation.push_back(std::string(perm_ok ? "pass" : "fail") +
                              ": mod-2 image is a permutation matrix");
  }
  out.member = gamma_ok && perm_ok;
  return out;
}

}  // namespace burau
