#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burau/modmatrix.hpp"

namespace burau {

std::size_t default_memory_cap_bytes();  // 2 GiB, or BURAU_MEM_CAP_MB if set

struct CloseOptions {
  std::size_t memory_cap_bytes = 0;  // 0 means default_memory_cap_bytes()
};

// A finite set of mod-l matrices, stored as sorted, duplicate-free canonical
// encodings (lexicographic byte order). Produced closed under the group
// operations by close(); set_product() reuses the container for plain sets.
// Immutable after construction and safe to share across threads.
class GroupSet {
 public:
  GroupSet() = default;
  GroupSet(int dim, std::uint32_t modulus, std::vector<std::string> sorted_encodings,
           std::vector<ModMatrix> generators = {});

  int dim() const { return dim_; }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return elements_.size(); }

  ModMatrix element(std::size_t i) const;
  const std::vector<std::string>& encodings() const { return elements_; }
  const std::vector<ModMatrix>& generators() const { return generators_; }

  bool contains(const ModMatrix& m) const;
  bool contains_encoding(const std::string& key) const;
  bool is_subset_of(const GroupSet& other) const;

  // Spot check of the closure invariant: identity present, and for sampled
  // pairs (g, h) both gh and g^{-1} are in the set. sample_pairs = 0 checks
  // every element's inverse and a full product grid (use only on small sets).
  bool verify_closed(std::size_t sample_pairs = 256) const;

  friend bool operator==(const GroupSet& a, const GroupSet& b) = default;

 private:
  int dim_ = 0;
  std::uint32_t modulus_ = 1;
  std::vector<std::string> elements_;
  std::vector<ModMatrix> generators_;
};

// BFS closure of a generating set under right multiplication by the
// generators and their inverses, in fixed list order. Deterministic output;
// throws burau::capacity_error when the configured memory cap would be
// exceeded and burau::error on non-invertible generators.
GroupSet close(const std::vector<ModMatrix>& generators, const CloseOptions& opts = {});

// {g in G : g = I mod d}; d must divide the modulus of G.
GroupSet congruence_kernel(const GroupSet& g, std::uint32_t d);

// The set {hk : h in H, k in K} as a sorted set (not closed a priori).
GroupSet set_product(const GroupSet& h, const GroupSet& k);

// Set intersection (both operands must share dim and modulus).
GroupSet set_intersection(const GroupSet& h, const GroupSet& k);

// True iff H and K commute elementwise, meet trivially, and |H||K| = |G|.
// Throws if H or K is not contained in G.
bool is_internal_direct_product(const GroupSet& g, const GroupSet& h, const GroupSet& k);

// A permutation of {1..n}; images[i-1] = pi(i). Matrix convention:
// P[pi(j)-1][j-1] = 1, so matrix product matches composition.
struct Permutation {
  std::vector<int> images;

  int degree() const { return static_cast<int>(images.size()); }
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);
  Permutation inverse() const;
  bool is_identity() const;
  ModMatrix to_matrix_mod2() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images < b.images;
  }
};

Permutation compose(const Permutation& a, const Permutation& b);  // a after b

// The permutation P with M = P mod 2, if M is exactly a permutation matrix;
// empty otherwise. Throws unless the modulus is 2.
std::optional<Permutation> permutation_image(const ModMatrix& m);

// Subgroup of S_n generated by the given permutations (BFS).
std::vector<Permutation> permutation_closure(const std::vector<Permutation>& gens);

// Integral symplectic transvection x -> x + <x,v>v for the standard
// block-diagonal form, as I + v (G v)^T.
IntMatrix transvection(const BigVec& v, const IntMatrix& gram);

// The transvection generator vectors used for Sp_{2g}: the standard basis
// vectors and all pairwise sums e_i + e_j.
std::vector<BigVec> sp_transvection_vectors(int two_g);

// Sp_{2g}(Z/lZ) as the BFS closure of the transvection generators mod l.
// The generator set is not taken on faith: the result's order is checked
// against sp_order(g, l) and a mismatch throws.
GroupSet sp_group(int g, std::uint32_t level, const CloseOptions& opts = {});

// {g in G : g v = v}.
GroupSet stabilizer_subgroup(const GroupSet& g, const std::vector<std::uint32_t>& v);

std::vector<std::uint32_t> e1_vector(int dim);

// Search for a group-homomorphism section of the projection E ->> S_n over
// the given generators: try every tuple of preimages (one per target
// generator, over its full fiber) and test the relations inside E. Relations
// are words in signed 1-based generator indices. A tuple only counts as a
// witness if the subgroup it generates has order exactly n!, which makes a
// returned witness a genuine splitting regardless of whether the relations
// present S_n. Before searching, the target generators are checked to
// generate S_n and the relations to hold on them.
struct SectionSearchResult {
  bool witness_found = false;
  std::vector<ModMatrix> witness;  // one preimage per target generator
  std::uint64_t tuples_tried = 0;
  std::uint64_t relation_satisfying_tuples = 0;
};

SectionSearchResult find_presentation_section(
    const GroupSet& ext, const std::vector<Permutation>& target_gens,
    const std::vector<std::vector<int>>& relations,
    const std::function<std::optional<Permutation>(const ModMatrix&)>& project);

// Default projection for unreduced Burau images: permutation_image of the
// mod-2 reduction.
std::optional<Permutation> mod2_permutation_projection(const ModMatrix& m);

}  // namespace burau
