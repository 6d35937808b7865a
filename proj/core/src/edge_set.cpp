#include "coarsepaths/edge_set.hpp"

#include <algorithm>
#include <bit>

namespace coarsepaths {

EdgeSet::EdgeSet(std::size_t universe)
    : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

EdgeSet EdgeSet::from_ids(std::size_t universe, const std::vector<EdgeId>& ids) {
  EdgeSet s(universe);
  for (EdgeId e : ids) s.set(e);
  return s;
}

std::size_t EdgeSet::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool EdgeSet::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool EdgeSet::intersects(const EdgeSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<EdgeId>(i * kWordBits + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::subtract(const EdgeSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) noexcept {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(),
                                                b.words_.begin(), b.words_.end());
}

std::size_t EdgeSet::hash() const noexcept {
  // FNV-1a over the words.
  std::size_t h = 1469598103934665603ULL;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t symmetric_difference_size(const EdgeSet& a, const EdgeSet& b) noexcept {
  const auto& wa = a.words();
  const auto& wb = b.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  }
  return n;
}

std::size_t intersection_size(const EdgeSet& a, const EdgeSet& b) noexcept {
  const auto& wa = a.words();
  const auto& wb = b.words();
  std::size_t n = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  }
  return n;
}

}  // namespace coarsepaths
