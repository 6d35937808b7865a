#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace coarsepaths {

using EdgeId = std::uint32_t;
using VertexId = std::uint32_t;

/// Fixed-universe bit array over edge ids. Bit i stands for edge i; set
/// algebra is word-wise XOR/AND/OR and cardinality is a popcount.
///
/// Binary operations require both operands to share the same universe size.
class EdgeSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);

  static EdgeSet from_ids(std::size_t universe, const std::vector<EdgeId>& ids);

  std::size_t universe() const noexcept { return universe_; }

  bool test(EdgeId e) const noexcept {
    return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
  }
  void set(EdgeId e) noexcept { words_[e / kWordBits] |= Word{1} << (e % kWordBits); }
  void reset(EdgeId e) noexcept { words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits)); }
  void flip(EdgeId e) noexcept { words_[e / kWordBits] ^= Word{1} << (e % kWordBits); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  bool intersects(const EdgeSet& other) const noexcept;
  bool is_subset_of(const EdgeSet& other) const noexcept;

  /// Set bits in increasing order.
  std::vector<EdgeId> ids() const;

  EdgeSet& operator^=(const EdgeSet& other) noexcept;
  EdgeSet& operator&=(const EdgeSet& other) noexcept;
  EdgeSet& operator|=(const EdgeSet& other) noexcept;
  /// Set difference (this \ other).
  EdgeSet& subtract(const EdgeSet& other) noexcept;

  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) noexcept { return a ^= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) noexcept { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) noexcept { return a |= b; }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  /// Orders by universe, then lexicographically by words. Only meant for
  /// use as a map/set key.
  friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) noexcept;

  std::size_t hash() const noexcept;
  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// |a Δ b| without materialising the XOR.
std::size_t symmetric_difference_size(const EdgeSet& a, const EdgeSet& b) noexcept;
/// |a ∩ b| without materialising the AND.
std::size_t intersection_size(const EdgeSet& a, const EdgeSet& b) noexcept;

}  // namespace coarsepaths

template <>
struct std::hash<coarsepaths::EdgeSet> {
  std::size_t operator()(const coarsepaths::EdgeSet& s) const noexcept { return s.hash(); }
};
