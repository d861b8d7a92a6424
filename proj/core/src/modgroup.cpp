#include "burau/modgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <thread>
#include <unordered_set>

#include "burau/errors.hpp"
#include "burau/forms.hpp"
#include "burau/orders.hpp"

namespace burau {

std::size_t default_memory_cap_bytes() {
  if (const char* env = std::getenv("BURAU_MEM_CAP_MB")) {
    const long mb = std::strtol(env, nullptr, 10);
    if (mb > 0) return static_cast<std::size_t>(mb) * 1024 * 1024;
  }
  return std::size_t(2048) * 1024 * 1024;  // 2 GiB
}

GroupSet::GroupSet(int dim, std::uint32_t modulus, std::vector<std::string> sorted_encodings,
                   std::vector<ModMatrix> generators)
    : dim_(dim), modulus_(modulus), elements_(std::move(sorted_encodings)),
      generators_(std::move(generators)) {}

ModMatrix GroupSet::element(std::size_t i) const { return decode(elements_[i], dim_, modulus_); }

bool GroupSet::contains(const ModMatrix& m) const { return contains_encoding(encode(m)); }

bool GroupSet::contains_encoding(const std::string& key) const {
  return std::binary_search(elements_.begin(), elements_.end(), key);
}

bool GroupSet::is_subset_of(const GroupSet& other) const {
  if (dim_ != other.dim_ || modulus_ != other.modulus_) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool GroupSet::verify_closed(std::size_t sample_pairs) const {
  if (!contains(ModMatrix::identity(dim_, modulus_))) return false;
  const std::size_t n = size();
  if (n == 0) return false;
  if (sample_pairs == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      const ModMatrix gi = element(i);
      if (!contains(gi.inverse())) return false;
      for (std::size_t j = 0; j < n; ++j)
        if (!contains(gi * element(j))) return false;
    }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  for (std::size_t s = 0; s < sample_pairs; ++s) {
    const ModMatrix g = element(rng() % n);
    const ModMatrix h = element(rng() % n);
    if (!contains(g * h)) return false;
    if (!contains(g.inverse())) return false;
  }
  return true;
}

GroupSet close(const std::vector<ModMatrix>& generators, const CloseOptions& opts) {
  if (generators.empty()) throw error("close: at least one generator required");
  const int dim = generators[0].dim();
  const std::uint32_t modulus = generators[0].modulus();
  for (const auto& g : generators) {
    if (g.dim() != dim || g.modulus() != modulus) {
      throw error("close: generators must share dimension and modulus");
    }
  }
  const std::size_t cap = opts.memory_cap_bytes ? opts.memory_cap_bytes : default_memory_cap_bytes();

  // Step set: generators then their inverses, in fixed list order.
  std::vector<ModMatrix> steps = generators;
  for (const auto& g : generators) steps.push_back(g.inverse());

  const std::size_t width = encoded_width(dim, modulus);
  // Rough per-element footprint: encoding + hash-set node + frontier share.
  const std::size_t bytes_per_element = width + sizeof(std::string) + 48;

  std::unordered_set<std::string> seen;
  std::vector<ModMatrix> frontier;
  const ModMatrix id = ModMatrix::identity(dim, modulus);
  seen.insert(encode(id));
  frontier.push_back(id);

  const unsigned workers =
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1, 8);

  while (!frontier.empty()) {
    std::vector<ModMatrix> next;
    if (workers >= 2 && frontier.size() >= 2048) {
      // Parallel expansion: workers probe `seen` read-only (no writer is
      // active) and keep only candidates not already known; the survivors are
      // inserted serially afterwards. The final set is identical to the
      // sequential one, so the sorted output stays deterministic.
      std::vector<std::vector<std::pair<std::string, ModMatrix>>> buffers(workers);
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const std::size_t begin = w * chunk;
          const std::size_t end = std::min(frontier.size(), begin + chunk);
          auto& buf = buffers[w];
          for (std::size_t i = begin; i < end; ++i) {
            for (const ModMatrix& s : steps) {
              ModMatrix p = frontier[i] * s;
              std::string key = encode(p);
              if (!seen.contains(key)) buf.emplace_back(std::move(key), std::move(p));
            }
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& buf : buffers) {
        for (auto& [key, mat] : buf) {
          if (seen.insert(std::move(key)).second) next.push_back(std::move(mat));
        }
      }
    } else {
      for (const ModMatrix& m : frontier) {
        for (const ModMatrix& s : steps) {
          ModMatrix p = m * s;
          std::string key = encode(p);
          if (seen.insert(std::move(key)).second) next.push_back(std::move(p));
        }
      }
    }
    if (seen.size() * bytes_per_element > cap) {
      throw capacity_error("close: enumeration exceeded the memory cap at " +
                           std::to_string(seen.size()) + " elements");
    }
    frontier = std::move(next);
  }

  std::vector<std::string> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  return GroupSet(dim, modulus, std::move(sorted), generators);
}

GroupSet congruence_kernel(const GroupSet& g, std::uint32_t d) {
  if (d < 1 || g.modulus() % d != 0) throw error("congruence_kernel: d must divide the modulus");
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (reduce_mod(g.element(i), d).is_identity()) kept.push_back(g.encodings()[i]);
  }
  return GroupSet(g.dim(), g.modulus(), std::move(kept));
}

GroupSet set_product(const GroupSet& h, const GroupSet& k) {
  if (h.dim() != k.dim() || h.modulus() != k.modulus()) {
    throw error("set_product: dimension or modulus mismatch");
  }
  std::unordered_set<std::string> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const ModMatrix hi = h.element(i);
    for (std::size_t j = 0; j < k.size(); ++j) out.insert(encode(hi * k.element(j)));
  }
  std::vector<std::string> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end());
  return GroupSet(h.dim(), h.modulus(), std::move(sorted));
}

GroupSet set_intersection(const GroupSet& h, const GroupSet& k) {
  if (h.dim() != k.dim() || h.modulus() != k.modulus()) {
    throw error("set_intersection: dimension or modulus mismatch");
  }
  std::vector<std::string> out;
  std::set_intersection(h.encodings().begin(), h.encodings().end(), k.encodings().begin(),
                        k.encodings().end(), std::back_inserter(out));
  return GroupSet(h.dim(), h.modulus(), std::move(out));
}

bool is_internal_direct_product(const GroupSet& g, const GroupSet& h, const GroupSet& k) {
  if (!h.is_subset_of(g) || !k.is_subset_of(g)) {
    throw error("is_internal_direct_product: H and K must be subsets of G");
  }
  if (set_intersection(h, k).size() != 1) return false;
  if (h.size() * k.size() != g.size()) return false;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const ModMatrix hi = h.element(i);
    for (std::size_t j = 0; j < k.size(); ++j) {
      const ModMatrix kj = k.element(j);
      if (hi * kj != kj * hi) return false;
    }
  }
  return true;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i + 1;
  return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  std::swap(p.images[i - 1], p.images[j - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 0; i < degree(); ++i) p.images[images[i] - 1] = i + 1;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images[i] != i + 1) return false;
  return true;
}

ModMatrix Permutation::to_matrix_mod2() const {
  ModMatrix m(degree(), 2);
  for (int j = 0; j < degree(); ++j) m.set(images[j] - 1, j, 1);
  return m;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw error("compose: degree mismatch");
  Permutation p;
  p.images.resize(a.degree());
  for (int i = 0; i < a.degree(); ++i) p.images[i] = a.images[b.images[i] - 1];
  return p;
}

std::optional<Permutation> permutation_image(const ModMatrix& m) {
  if (m.modulus() != 2) throw error("permutation_image: modulus 2 required");
  const int n = m.dim();
  Permutation p;
  p.images.assign(n, 0);
  std::vector<bool> hit(n, false);
  for (int j = 0; j < n; ++j) {
    int one_row = -1;
    for (int i = 0; i < n; ++i) {
      if (m.at(i, j) == 0) continue;
      if (one_row >= 0) return std::nullopt;
      one_row = i;
    }
    if (one_row < 0 || hit[one_row]) return std::nullopt;
    hit[one_row] = true;
    p.images[j] = one_row + 1;
  }
  return p;
}

std::vector<Permutation> permutation_closure(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw error("permutation_closure: at least one generator required");
  std::vector<Permutation> steps = gens;
  for (const auto& g : gens) steps.push_back(g.inverse());
  std::map<std::vector<int>, bool> seen;
  std::vector<Permutation> frontier{Permutation::identity(gens[0].degree())};
  seen[frontier[0].images] = true;
  std::vector<Permutation> all = frontier;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& s : steps) {
        Permutation q = compose(p, s);
        if (seen.emplace(q.images, true).second) {
          all.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

IntMatrix transvection(const BigVec& v, const IntMatrix& gram) {
  const int n = gram.dim();
  const BigVec gv = gram.apply(v);
  IntMatrix t = IntMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t.at(r, c) += v[r] * gv[c];
  return t;
}

std::vector<BigVec> sp_transvection_vectors(int two_g) {
  std::vector<BigVec> vs;
  for (int i = 0; i < two_g; ++i) {
    BigVec v(two_g);
    v[i] = 1;
    vs.push_back(std::move(v));
  }
  for (int i = 0; i < two_g; ++i)
    for (int j = i + 1; j < two_g; ++j) {
      BigVec v(two_g);
      v[i] = 1;
      v[j] = 1;
      vs.push_back(std::move(v));
    }
  return vs;
}

GroupSet sp_group(int g, std::uint32_t level, const CloseOptions& opts) {
  if (g < 1) throw error("sp_group: g >= 1 required");
  if (level < 2) throw error("sp_group: level >= 2 required");
  const IntMatrix gram = standard_symplectic_gram(2 * g);
  std::vector<ModMatrix> gens;
  for (const BigVec& v : sp_transvection_vectors(2 * g)) {
    gens.push_back(reduce(transvection(v, gram), level));
  }
  GroupSet out = close(gens, opts);
  if (BigInt(out.size()) != sp_order(g, level)) {
    throw error("sp_group: transvection generators did not produce the full group (order " +
                std::to_string(out.size()) + ")");
  }
  return out;
}

GroupSet stabilizer_subgroup(const GroupSet& g, const std::vector<std::uint32_t>& v) {
  if (static_cast<int>(v.size()) != g.dim()) throw error("stabilizer_subgroup: dimension mismatch");
  bool nonzero = false;
  for (auto x : v) nonzero |= (x % std::max<std::uint32_t>(g.modulus(), 1)) != 0;
  if (!nonzero && g.modulus() > 1) throw error("stabilizer_subgroup: v must be nonzero");
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.element(i).apply(v) == v) kept.push_back(g.encodings()[i]);
  }
  return GroupSet(g.dim(), g.modulus(), std::move(kept));
}

std::vector<std::uint32_t> e1_vector(int dim) {
  std::vector<std::uint32_t> v(dim, 0);
  v[0] = 1;
  return v;
}

std::optional<Permutation> mod2_permutation_projection(const ModMatrix& m) {
  if (m.modulus() % 2 != 0) return std::nullopt;
  return permutation_image(reduce_mod(m, 2));
}

namespace {

Permutation evaluate_word_on_permutations(const std::vector<int>& word,
                                          const std::vector<Permutation>& gens) {
  Permutation p = Permutation::identity(gens[0].degree());
  for (int letter : word) {
    const Permutation& g = gens[static_cast<std::size_t>(std::abs(letter)) - 1];
    p = compose(p, letter > 0 ? g : g.inverse());
  }
  return p;
}

ModMatrix evaluate_word_on_matrices(const std::vector<int>& word,
                                    const std::vector<ModMatrix>& gens,
                                    const std::vector<ModMatrix>& gen_inverses, int dim,
                                    std::uint32_t modulus) {
  ModMatrix m = ModMatrix::identity(dim, modulus);
  for (int letter : word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
    m = m * (letter > 0 ? gens[i] : gen_inverses[i]);
  }
  return m;
}

}  // namespace

SectionSearchResult find_presentation_section(
    const GroupSet& ext, const std::vector<Permutation>& target_gens,
    const std::vector<std::vector<int>>& relations,
    const std::function<std::optional<Permutation>(const ModMatrix&)>& project) {
  if (target_gens.empty()) throw error("find_presentation_section: no target generators");
  const int n = target_gens[0].degree();
  const BigInt n_fact = factorial(n);

  // The target generators must generate S_n and the relations must hold on
  // them there; both are needed for "no tuple" to imply "no splitting".
  if (BigInt(permutation_closure(target_gens).size()) != n_fact) {
    throw error("find_presentation_section: target generators do not generate S_n");
  }
  for (const auto& rel : relations) {
    for (int letter : rel) {
      if (letter == 0 || std::abs(letter) > static_cast<int>(target_gens.size())) {
        throw error("find_presentation_section: relation letter out of range");
      }
    }
    if (!evaluate_word_on_permutations(rel, target_gens).is_identity()) {
      throw error("find_presentation_section: relation does not hold on the target generators");
    }
  }

  // Partition E into fibers over S_n.
  std::map<std::vector<int>, std::vector<ModMatrix>> fibers;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const ModMatrix m = ext.element(i);
    const auto p = project(m);
    if (!p) throw error("find_presentation_section: projection undefined on an element of E");
    fibers[p->images].push_back(m);
  }
  if (BigInt(fibers.size()) != n_fact) {
    throw error("find_presentation_section: projection is not onto S_n");
  }

  std::vector<const std::vector<ModMatrix>*> gen_fibers;
  for (const auto& g : target_gens) {
    auto it = fibers.find(g.images);
    if (it == fibers.end() || it->second.empty()) {
      throw error("find_presentation_section: empty fiber over a target generator");
    }
    gen_fibers.push_back(&it->second);
  }

  SectionSearchResult result;
  const std::size_t r = target_gens.size();
  std::vector<std::size_t> idx(r, 0);
  std::vector<ModMatrix> tuple(r, ModMatrix(ext.dim(), ext.modulus()));
  std::vector<ModMatrix> tuple_inverses(r, ModMatrix(ext.dim(), ext.modulus()));
  while (true) {
    for (std::size_t i = 0; i < r; ++i) tuple[i] = (*gen_fibers[i])[idx[i]];
    ++result.tuples_tried;

    bool ok = true;
    for (const auto& rel : relations) {
      bool needs_inverse = false;
      for (int letter : rel) needs_inverse |= letter < 0;
      if (needs_inverse)
        for (std::size_t i = 0; i < r; ++i) tuple_inverses[i] = tuple[i].inverse();
      if (!evaluate_word_on_matrices(rel, tuple, tuple_inverses, ext.dim(), ext.modulus())
               .is_identity()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++result.relation_satisfying_tuples;
      // A relation-satisfying tuple is a genuine splitting only if it
      // generates a subgroup of order exactly n!.
      const GroupSet sub = close(tuple);
      if (BigInt(sub.size()) == n_fact) {
        result.witness_found = true;
        result.witness = tuple;
        return result;
      }
    }

    std::size_t d = 0;
    while (d < r) {
      if (++idx[d] < gen_fibers[d]->size()) break;
      idx[d] = 0;
      ++d;
    }
    if (d == r) break;
  }
  return result;
}

}  // namespace burau
