#include "burau/cache.hpp"

#include <cstring>
#include <fstream>

#include "burau/errors.hpp"

namespace burau {

namespace {

constexpr char kMagic[] = "BURAUGRP1";
constexpr std::size_t kMagicLen = 9;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_uint(const char* p, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i]))
                                       << (8 * i);
  return v;
}

const char* family_stem(GroupFamily family) {
  switch (family) {
    case GroupFamily::burau_image: return "burau_n";
    case GroupFamily::reduced_burau_image: return "reduced_n";
    case GroupFamily::symplectic: return "sp_g";
    case GroupFamily::stabilizer: return "stab_g";
  }
  return "group";
}

}  // namespace

std::filesystem::path cache_file_path(const std::filesystem::path& dir, GroupFamily family,
                                      int index, std::uint64_t level) {
  return dir / (std::string(family_stem(family)) + std::to_string(index) + "_l" +
                std::to_string(level) + ".grp");
}

std::optional<GroupSet> cache_load(const std::filesystem::path& file, GroupFamily family) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t header = kMagicLen + 4 + 8 + 1 + 8;
  if (data.size() < header || std::memcmp(data.data(), kMagic, kMagicLen) != 0) return std::nullopt;

  const char* p = data.data() + kMagicLen;
  const std::uint32_t dim = static_cast<std::uint32_t>(get_uint(p, 4));
  const std::uint64_t modulus = get_uint(p + 4, 8);
  const std::uint8_t tag = static_cast<std::uint8_t>(get_uint(p + 12, 1));
  const std::uint64_t count = get_uint(p + 13, 8);
  if (tag != static_cast<std::uint8_t>(family)) return std::nullopt;
  if (modulus > 0xffffffffULL || dim > 64) return std::nullopt;

  const std::size_t width = encoded_width(static_cast<int>(dim),
                                          static_cast<std::uint32_t>(modulus));
  if (data.size() != header + count * width) return std::nullopt;

  std::vector<std::string> elems;
  elems.reserve(count);
  const char* body = data.data() + header;
  for (std::uint64_t i = 0; i < count; ++i) {
    elems.emplace_back(body + i * width, width);
    if (i > 0 && !(elems[i - 1] < elems[i])) return std::nullopt;  // must be ascending
  }
  return GroupSet(static_cast<int>(dim), static_cast<std::uint32_t>(modulus), std::move(elems));
}

void cache_store(const std::filesystem::path& file, GroupFamily family, const GroupSet& group) {
  std::string out;
  out.append(kMagic, kMagicLen);
  put_u32(out, static_cast<std::uint32_t>(group.dim()));
  put_u64(out, group.modulus());
  out.push_back(static_cast<char>(family));
  put_u64(out, group.size());
  for (const std::string& e : group.encodings()) out.append(e);

  std::filesystem::create_directories(file.parent_path());
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw error("cache_store: cannot write " + tmp.string());
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace burau
