// edgebits.hpp
// Fixed-order edge bitmaps over the C(n,2) edge slots of K_n, n <= 16.
//
// Slot convention (frozen; serialized witnesses and oracle output depend
// on it): slots are colex-ordered, slot(u,v) = v(v-1)/2 + u for u < v.
// C(16,2) = 120 slots fit in two 64-bit words.

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace tonal {

inline constexpr int kMaxVertices = 16;
inline constexpr int kMaxSlots = kMaxVertices * (kMaxVertices - 1) / 2;

constexpr int edge_slot(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

namespace detail {
constexpr auto make_endpoint_table() {
  std::array<std::pair<uint8_t, uint8_t>, kMaxSlots> t{};
  for (int v = 1; v < kMaxVertices; ++v)
    for (int u = 0; u < v; ++u)
      t[edge_slot(u, v)] = {static_cast<uint8_t>(u), static_cast<uint8_t>(v)};
  return t;
}
inline constexpr auto kEndpoints = make_endpoint_table();
}  // namespace detail

// (u,v) with u < v for a slot index.
constexpr std::pair<int, int> slot_endpoints(int slot) {
  auto [u, v] = detail::kEndpoints[static_cast<size_t>(slot)];
  return {u, v};
}

constexpr int slot_count(int n) { return n * (n - 1) / 2; }

// 120-bit set over edge slots. Value semantics, no ambient-n field; the
// caller tracks the universe. Numeric order (hi word first) defines the
// "least bitmap" used for deterministic representatives.
struct EdgeBits {
  uint64_t lo = 0;
  uint64_t hi = 0;

  static constexpr EdgeBits universe(int n) {
    int c = slot_count(n);
    EdgeBits b;
    if (c >= 64) {
      b.lo = ~uint64_t{0};
      b.hi = (c == 64) ? 0 : (~uint64_t{0} >> (128 - c));
    } else {
      b.lo = (c == 0) ? 0 : (~uint64_t{0} >> (64 - c));
    }
    return b;
  }

  constexpr bool test(int i) const {
    return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
  }
  constexpr void set(int i) {
    if (i < 64) lo |= uint64_t{1} << i; else hi |= uint64_t{1} << (i - 64);
  }
  constexpr void reset(int i) {
    if (i < 64) lo &= ~(uint64_t{1} << i); else hi &= ~(uint64_t{1} << (i - 64));
  }
  constexpr void flip(int i) {
    if (i < 64) lo ^= uint64_t{1} << i; else hi ^= uint64_t{1} << (i - 64);
  }

  constexpr int count() const { return std::popcount(lo) + std::popcount(hi); }
  constexpr bool any() const { return (lo | hi) != 0; }
  constexpr bool none() const { return !any(); }

  constexpr EdgeBits operator&(EdgeBits o) const { return {lo & o.lo, hi & o.hi}; }
  constexpr EdgeBits operator|(EdgeBits o) const { return {lo | o.lo, hi | o.hi}; }
  constexpr EdgeBits operator^(EdgeBits o) const { return {lo ^ o.lo, hi ^ o.hi}; }
  constexpr EdgeBits& operator&=(EdgeBits o) { lo &= o.lo; hi &= o.hi; return *this; }
  constexpr EdgeBits& operator|=(EdgeBits o) { lo |= o.lo; hi |= o.hi; return *this; }
  constexpr EdgeBits& operator^=(EdgeBits o) { lo ^= o.lo; hi ^= o.hi; return *this; }

  // Set difference.
  constexpr EdgeBits operator-(EdgeBits o) const { return {lo & ~o.lo, hi & ~o.hi}; }

  constexpr bool subset_of(EdgeBits o) const {
    return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
  }

  constexpr bool operator==(const EdgeBits&) const = default;
  constexpr bool operator<(EdgeBits o) const {
    return hi != o.hi ? hi < o.hi : lo < o.lo;
  }

  // Lowest set slot, or -1.
  constexpr int first() const {
    if (lo) return std::countr_zero(lo);
    if (hi) return 64 + std::countr_zero(hi);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (uint64_t w = lo; w; w &= w - 1) f(std::countr_zero(w));
    for (uint64_t w = hi; w; w &= w - 1) f(64 + std::countr_zero(w));
  }

  // Lowercase hex of the numeric value, no leading zeros ("0" when empty).
  // This is the frozen wire form of a red edge set.
  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (int nib = 31; nib >= 0; --nib) {
      uint64_t w = nib >= 16 ? hi : lo;
      int d = static_cast<int>((w >> ((nib % 16) * 4)) & 0xf);
      if (d != 0) started = true;
      if (started) out.push_back(digits[d]);
    }
    if (out.empty()) out = "0";
    return out;
  }

  static EdgeBits from_hex(const std::string& s) {
    if (s.empty() || s.size() > 32)
      throw std::invalid_argument("edge bitmap hex: bad length");
    EdgeBits b;
    for (char c : s) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else throw std::invalid_argument(std::string("edge bitmap hex: bad digit '") + c + "'");
      b.hi = (b.hi << 4) | (b.lo >> 60);
      b.lo = (b.lo << 4) | static_cast<uint64_t>(d);
    }
    return b;
  }
};

struct EdgeBitsHash {
  size_t operator()(const EdgeBits& b) const {
    uint64_t h = b.lo * 0x9e3779b97f4a7c15ull;
    h ^= b.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

// All slots incident to vertex v within K_n.
inline EdgeBits vertex_slots(int v, int n) {
  EdgeBits b;
  for (int u = 0; u < n; ++u)
    if (u != v) b.set(edge_slot(u, v));
  return b;
}

// Slots with both endpoints inside the vertex mask.
inline EdgeBits slots_within(uint32_t vertex_mask, int n) {
  EdgeBits b;
  for (int v = 1; v < n; ++v) {
    if (!((vertex_mask >> v) & 1u)) continue;
    for (int u = 0; u < v; ++u)
      if ((vertex_mask >> u) & 1u) b.set(edge_slot(u, v));
  }
  return b;
}

}  // namespace tonal
