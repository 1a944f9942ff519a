#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace fring {

/// Fixed-capacity membership mask over element indices 0..255.
///
/// Ordering compares masks as unsigned integers with bit i weighing 2^i, so
/// {0} < {0,1} < {0,2} < {0,1,2}. Ideal and subgroup lists are sorted by it.
class Bitmask {
 public:
  static constexpr std::size_t kBits = 256;
  static constexpr std::size_t kWords = kBits / 64;

  constexpr Bitmask() = default;

  constexpr void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  constexpr std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  constexpr bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Calls f(i) for every set bit in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t k = 0; k < kWords; ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(k * 64 + bit);
        w &= w - 1;
      }
    }
  }

  constexpr bool is_subset_of(const Bitmask& other) const noexcept {
    for (std::size_t k = 0; k < kWords; ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }

  constexpr Bitmask& operator|=(const Bitmask& o) noexcept {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  constexpr Bitmask& operator&=(const Bitmask& o) noexcept {
    for (std::size_t k = 0; k < kWords; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend constexpr Bitmask operator|(Bitmask a, const Bitmask& b) noexcept { return a |= b; }
  friend constexpr Bitmask operator&(Bitmask a, const Bitmask& b) noexcept { return a &= b; }

  friend constexpr bool operator==(const Bitmask&, const Bitmask&) = default;
  friend constexpr std::strong_ordering operator<=>(const Bitmask& a, const Bitmask& b) noexcept {
    for (std::size_t k = kWords; k-- > 0;) {
      if (a.words_[k] != b.words_[k])
        return a.words_[k] < b.words_[k] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

  /// First n bits set.
  static constexpr Bitmask first(std::size_t n) noexcept {
    Bitmask m;
    for (std::size_t i = 0; i < n; ++i) m.set(i);
    return m;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct BitmaskHash {
  std::size_t operator()(const Bitmask& m) const noexcept { return m.hash(); }
};

}  // namespace fring
