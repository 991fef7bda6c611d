#include "uacg/bitset.hpp"

#include <cassert>

namespace uacg {

DynamicBitset::DynamicBitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

void DynamicBitset::set_all() {
  for (auto& w : words_) w = ~std::uint64_t{0};
  trim();
}

void DynamicBitset::clear() {
  for (auto& w : words_) w = 0;
}

void DynamicBitset::trim() {
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
}

std::size_t DynamicBitset::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool DynamicBitset::any() const {
  for (auto w : words_) {
    if (w != 0) return true;
  }
  return false;
}

bool DynamicBitset::intersects(const DynamicBitset& other) const {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t DynamicBitset::intersection_count(const DynamicBitset& other) const {
  assert(size_ == other.size_);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

std::size_t DynamicBitset::find_first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return npos;
}

std::size_t DynamicBitset::find_next(std::size_t after) const {
  std::size_t i = after + 1;
  if (i >= size_) return npos;
  std::size_t w = i >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (word != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return npos;
    word = words_[w];
  }
}

DynamicBitset& DynamicBitset::operator&=(const DynamicBitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

DynamicBitset& DynamicBitset::operator|=(const DynamicBitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

DynamicBitset& DynamicBitset::subtract(const DynamicBitset& other) {
  assert(size_ == other.size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

DynamicBitset DynamicBitset::complement() const {
  DynamicBitset out(*this);
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::vector<std::uint32_t> DynamicBitset::to_vector() const {
  std::vector<std::uint32_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

}  // namespace uacg
