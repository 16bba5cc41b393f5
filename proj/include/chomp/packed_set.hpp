#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace chomp {

// Open-addressing hash set of non-zero 64-bit packed codes (zero marks an
// empty slot; the all-zero tuple is never a member).
//
// Buckets hash the high 48 bits and add the low 16-bit field, so positions
// that differ only in the last row land in neighbouring slots. The solver's
// bottom-row scan then stays within a cache line or two.
//
// contains() is safe from many threads while nobody inserts.
class PackedSet {
 public:
  PackedSet() { rehash(16); }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t capacity() const noexcept { return slots_.size(); }

  bool contains(std::uint64_t code) const noexcept {
    std::size_t i = bucket(code);
    for (;;) {
      const std::uint64_t s = slots_[i];
      if (s == code) return true;
      if (s == 0) return false;
      i = (i + 1) & mask_;
    }
  }

  // Returns false if already present. code must be non-zero.
  bool insert(std::uint64_t code) {
    if ((size_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    return insert_unchecked(code);
  }

  // Grows so that n members fit under the load limit.
  void reserve(std::size_t n) {
    std::size_t cap = slots_.size();
    while (n * 2 > cap) cap *= 2;
    if (cap != slots_.size()) rehash(cap);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t s : slots_)
      if (s != 0) f(s);
  }

  std::size_t memory_bytes() const noexcept { return slots_.size() * sizeof(std::uint64_t); }

 private:
  static std::uint64_t mix(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }

  std::size_t bucket(std::uint64_t code) const noexcept {
    return static_cast<std::size_t>(mix(code >> 16) + (code & 0xFFFFu)) & mask_;
  }

  bool insert_unchecked(std::uint64_t code) {
    std::size_t i = bucket(code);
    for (;;) {
      const std::uint64_t s = slots_[i];
      if (s == code) return false;
      if (s == 0) {
        slots_[i] = code;
        ++size_;
        return true;
      }
      i = (i + 1) & mask_;
    }
  }

  void rehash(std::size_t cap) {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(cap, 0);
    mask_ = cap - 1;
    size_ = 0;
    for (std::uint64_t s : old)
      if (s != 0) insert_unchecked(s);
  }

  std::vector<std::uint64_t> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

}  // namespace chomp
