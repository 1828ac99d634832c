#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tambara {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Element sets (ideal members, subgroup members, ...) are kept as sorted,
// duplicate-free vectors of indices.
using elem_set = std::vector<int>;

inline bool set_contains(const elem_set& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline void set_insert(elem_set& s, int x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
}

inline elem_set set_union(const elem_set& a, const elem_set& b) {
  elem_set out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline elem_set set_intersect(const elem_set& a, const elem_set& b) {
  elem_set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool set_subset(const elem_set& a, const elem_set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// FNV-1a, used for the toolchain-independent content hash of emitted artifacts.
inline std::uint64_t fnv1a64(std::uint64_t h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

std::string to_hex(std::uint64_t v);

}  // namespace tambara
