#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace uacg {

// Fixed-size bit vector backed by 64-bit words. Sized once at construction;
// binary operations require equal sizes.
class DynamicBitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }
  bool intersects(const DynamicBitset& other) const;
  std::size_t intersection_count(const DynamicBitset& other) const;

  std::size_t find_first() const;
  std::size_t find_next(std::size_t after) const;

  DynamicBitset& operator&=(const DynamicBitset& other);
  DynamicBitset& operator|=(const DynamicBitset& other);
  DynamicBitset& subtract(const DynamicBitset& other);
  DynamicBitset complement() const;

  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
  bool operator==(const DynamicBitset&) const = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace uacg
