#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace rz {

// Fixed-capacity bitset over board intersections (up to 19x19).
class PointSet {
 public:
  static constexpr int kMaxPoints = 361;
  static constexpr int kWords = (kMaxPoints + 63) / 64;

  constexpr PointSet() = default;

  static PointSet first_n(int n) {
    PointSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() { words_.fill(0); }

  int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool intersects(const PointSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool is_subset_of(const PointSet& o) const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  PointSet& operator|=(const PointSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  PointSet& operator-=(const PointSet& o) {
    for (int k = 0; k < kWords; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
  friend bool operator==(const PointSet&, const PointSet&) = default;

  // Smallest member, or -1.
  int first() const {
    for (int k = 0; k < kWords; ++k)
      if (words_[k]) return k * 64 + std::countr_zero(words_[k]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(k * 64 + b);
        w &= w - 1;
      }
    }
  }

  // Sorted ascending.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

  std::size_t hash_value() const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace rz

template <>
struct std::hash<rz::PointSet> {
  std::size_t operator()(const rz::PointSet& s) const noexcept { return s.hash_value(); }
};
