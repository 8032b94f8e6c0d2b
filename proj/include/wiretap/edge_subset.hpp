#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace wiretap {

/// A subset of the edge ids 0..m-1 of a host graph, stored as a bitset.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static EdgeSubset full(std::size_t universe) {
    EdgeSubset s(universe);
    for (std::size_t e = 0; e < universe; ++e) s.add(static_cast<int>(e));
    return s;
  }

  static EdgeSubset from_mask(std::size_t universe, std::uint64_t mask) {
    assert(universe <= 64);
    EdgeSubset s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static EdgeSubset from_ids(std::size_t universe,
                             std::initializer_list<int> ids) {
    EdgeSubset s(universe);
    for (int e : ids) s.add(e);
    return s;
  }

  template <typename Range>
  static EdgeSubset from_range(std::size_t universe, const Range& ids) {
    EdgeSubset s(universe);
    for (int e : ids) s.add(e);
    return s;
  }

  std::size_t universe_size() const { return universe_; }

  bool contains(int e) const {
    assert(e >= 0 && static_cast<std::size_t>(e) < universe_);
    return (words_[e / 64] >> (e % 64)) & 1u;
  }

  void add(int e) {
    assert(e >= 0 && static_cast<std::size_t>(e) < universe_);
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }

  void remove(int e) {
    assert(e >= 0 && static_cast<std::size_t>(e) < universe_);
    words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const EdgeSubset& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const EdgeSubset& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  EdgeSubset& operator|=(const EdgeSubset& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  EdgeSubset& operator&=(const EdgeSubset& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  EdgeSubset& operator-=(const EdgeSubset& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~other.words_[i];
    return *this;
  }

  friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
  friend EdgeSubset operator&(EdgeSubset a, const EdgeSubset& b) { return a &= b; }
  friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }

  EdgeSubset complement() const {
    EdgeSubset s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  /// Member ids in ascending order.
  std::vector<int> to_vector() const {
    std::vector<int> ids;
    ids.reserve(count());
    for_each([&ids](int e) { ids.push_back(e); });
    return ids;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  /// Low 64 bits as a mask; only valid for universes of at most 64 edges.
  std::uint64_t to_mask() const {
    assert(universe_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wiretap
