#pragma once

#include <string_view>
#include <vector>

#include "burau/int_matrix.hpp"

namespace burau {

// A word in the Artin generators of the braid group on `strands` strands.
// Letter k > 0 means sigma_k, k < 0 means sigma_{|k|}^{-1}; the empty word is
// the identity braid.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;
};

// Parses whitespace-separated signed integers, e.g. "1 2 -1".
// Throws burau::error on non-integer tokens, letters outside
// [-(n-1), n-1] \ {0}, or n < 2.
BraidWord parse_word(std::string_view text, int strands);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BraidWord inverse(const BraidWord& w);  // reversed word with inverted letters

// The n x n image of sigma_i under the Burau representation at t = -1:
// identity except for the 2x2 block [[2,-1],[1,0]] at rows/cols i, i+1.
// Negative i gives the exact integer inverse (memoized per (n, i)).
IntMatrix burau_sigma(int n, int i);

// Image of a word: the product of generator matrices in word order.
IntMatrix burau_matrix(const BraidWord& w);

// The (n-1) x (n-1) reduced counterpart of burau_sigma; requires n >= 3.
IntMatrix reduced_burau_sigma(int n, int i);

// Image of a word under the reduced representation; requires n >= 3.
IntMatrix reduced_burau_matrix(const BraidWord& w);

}  // namespace burau
