#include "burau/braid.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "burau/errors.hpp"

namespace burau {

namespace {

void check_letter(int n, int k) {
  if (k == 0 || k > n - 1 || k < -(n - 1)) {
    throw error("braid letter " + std::to_string(k) + " out of range for n = " + std::to_string(n));
  }
}

// Inverse generators are memoized per (n, i).
const IntMatrix& cached_inverse(std::map<std::pair<int, int>, IntMatrix>& cache, std::mutex& mu,
                                int n, int i, const IntMatrix& positive) {
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace({n, i});
  if (inserted) it->second = positive.inverse();
  return it->second;
}

}  // namespace

BraidWord parse_word(std::string_view text, int strands) {
  if (strands < 2) throw error("braid words need n >= 2 strands");
  BraidWord w;
  w.strands = strands;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int k = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw error("invalid braid letter token: '" + tok + "'");
    }
    check_letter(strands, k);
    w.letters.push_back(k);
  }
  return w;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw error("concat: strand counts differ");
  BraidWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out;
  out.strands = w.strands;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

IntMatrix burau_sigma(int n, int i) {
  if (n < 2) throw error("burau_sigma: n >= 2 required");
  check_letter(n, i);
  const int k = i > 0 ? i : -i;
  IntMatrix m = IntMatrix::identity(n);
  m.at(k - 1, k - 1) = 2;
  m.at(k - 1, k) = -1;
  m.at(k, k - 1) = 1;
  m.at(k, k) = 0;
  if (i > 0) return m;
  static std::map<std::pair<int, int>, IntMatrix> cache;
  static std::mutex mu;
  return cached_inverse(cache, mu, n, i, m);
}

IntMatrix burau_matrix(const BraidWord& w) {
  IntMatrix m = IntMatrix::identity(w.strands);
  for (int k : w.letters) m = m * burau_sigma(w.strands, k);
  return m;
}

IntMatrix reduced_burau_sigma(int n, int i) {
  if (n < 3) throw error("reduced_burau_sigma: n >= 3 required (the representation is zero below)");
  check_letter(n, i);
  const int k = i > 0 ? i : -i;
  const int d = n - 1;
  IntMatrix m = IntMatrix::identity(d);
  if (k == 1) {
    // [[1,1],[0,1]] block in the top-left corner
    m.at(0, 1) = 1;
  } else if (k == n - 1) {
    // [[1,0],[-1,1]] block in the bottom-right corner
    m.at(d - 1, d - 2) = -1;
  } else {
    // interior generator: rows k-1, k, k+1 (1-based) carry the 3x3 block
    // [[1,0,0],[-1,1,1],[0,0,1]]
    m.at(k - 1, k - 2) = -1;
    m.at(k - 1, k) = 1;
  }
  if (i > 0) return m;
  static std::map<std::pair<int, int>, IntMatrix> cache;
  static std::mutex mu;
  return cached_inverse(cache, mu, n, i, m);
}

IntMatrix reduced_burau_matrix(const BraidWord& w) {
  if (w.strands < 3) throw error("reduced_burau: n >= 3 required");
  IntMatrix m = IntMatrix::identity(w.strands - 1);
  for (int k : w.letters) m = m * reduced_burau_sigma(w.strands, k);
  return m;
}

}  // namespace burau
