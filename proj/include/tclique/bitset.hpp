#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tclique {

// Fixed-size dynamic bitset used for adjacency rows and candidate sets in
// the clique kernels. All binary operations require equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  // this &= ~other
  Bitset& subtract(const Bitset& other);

  std::size_t count_and(const Bitset& other) const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        fn(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace tclique
