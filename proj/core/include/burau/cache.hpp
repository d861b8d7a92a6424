#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "burau/modgroup.hpp"

namespace burau {

// On-disk format per enumerated group:
//   magic "BURAUGRP1", little-endian u32 dim, u64 modulus, u8 family tag,
//   u64 count, then count fixed-width canonical encodings in ascending
//   (lexicographic byte) order.
enum class GroupFamily : std::uint8_t {
  burau_image = 0,
  reduced_burau_image = 1,
  symplectic = 2,
  stabilizer = 3,
};

// burau_image / reduced_burau_image files are keyed by strand count n;
// symplectic / stabilizer files by the genus g.
std::filesystem::path cache_file_path(const std::filesystem::path& dir, GroupFamily family,
                                      int index, std::uint64_t level);

// Returns the cached group if the file exists and its header matches;
// corrupt or mismatched files are treated as absent.
std::optional<GroupSet> cache_load(const std::filesystem::path& file, GroupFamily family);

// Atomic: writes to a temporary sibling and renames into place.
void cache_store(const std::filesystem::path& file, GroupFamily family, const GroupSet& group);

}  // namespace burau
