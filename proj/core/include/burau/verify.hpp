#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "burau/modgroup.hpp"

namespace burau {

inline constexpr const char* kToolVersion = "0.1.0";

// Machine-readable outcome of one theorem check. status is "verified",
// "refuted", or "skipped(<reason>)"; refuted reports always carry a witness.
struct VerificationReport {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json predicted;
  nlohmann::json observed;
  std::string status = "skipped(not run)";
  nlohmann::json witness;  // null or array of matrices
  std::int64_t elapsed_ms = 0;

  bool verified() const { return status == "verified"; }
  bool refuted() const { return status == "refuted"; }

  // Stable schema: {"tool_version", "claim", "params", "predicted",
  // "observed", "status", "witness", "elapsed_ms"}; keys serialize sorted, so
  // reports are byte-identical across runs except for elapsed_ms.
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::optional<std::filesystem::path> cache_dir;  // unset disables caching
  std::size_t memory_cap_bytes = 0;                // 0 means default
};

// The desk-scale envelope the CLI accepts without --allow-big.
bool within_default_envelope(int n, std::uint64_t level);

// Image of B_n in GL_n(Z/lZ) (or of the reduced representation in
// GL_{n-1}(Z/lZ)), enumerated by BFS or loaded from the cache. The reduced
// n = 2 representation is zero; callers special-case it.
GroupSet burau_image(int n, std::uint64_t level, bool reduced, const VerifyOptions& opts = {});

// |image| against the order oracle, plus the internal direct-product
// decomposition kernel(m) x kernel(2^k) when l = 2^k m has both parts
// nontrivial.
VerificationReport verify_theorem_a(int n, std::uint64_t level, bool reduced,
                                    const VerifyOptions& opts = {});

// Finite shadow of the congruence-image characterization: for n >= 4 and odd
// l, the image of B_n[l] in the mod-2l quotient is a copy of S_n mapping
// bijectively onto the permutation matrices mod 2; for n = 2,3 or even l it
// fills Gamma_{n-1}[l]/Gamma_{n-1}[2l].
VerificationReport verify_theorem_b(int n, std::uint64_t level, const VerifyOptions& opts = {});

// In the image mod lcm(l1, l2): kernel(l1) * kernel(l2) = kernel(gcd) and
// kernel(l1) n kernel(l2) = {I}.
VerificationReport verify_multiplicativity(int n, std::uint64_t l1, std::uint64_t l2,
                                           const VerifyOptions& opts = {});

// Exhaustive section search for the extension image-mod-2^k ->> S_n.
// Unreduced k >= 2 predicts non-split; k <= 1 predicts split (control case);
// reduced mode is an exploration with unconstrained outcome.
VerificationReport verify_nonsplit(int n, int k, bool reduced, const VerifyOptions& opts = {});

// Enumerates the image, reports its order against the oracle prediction, and
// warms the cache.
VerificationReport quotient_report(int n, std::uint64_t level, bool reduced,
                                   const VerifyOptions& opts = {});

// Membership oracle for the image of B_n[l] in GL_n(Z): the Gamma_{n-1}[l]
// predicate, plus (for odd l and n >= 4) a permutation-matrix mod-2 image.
struct MemberResult {
  bool member = false;
  std::vector<std::string> explanation;  // each failed or passed clause
};

MemberResult member(const IntMatrix& m, int n, std::uint64_t level);

}  // namespace burau
