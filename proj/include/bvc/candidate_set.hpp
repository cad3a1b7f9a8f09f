#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bvc {

using CandidateId = std::uint32_t;
using VoterIndex = std::uint32_t;

// Dense bitset over the candidate ids 0..universe-1.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static CandidateSet full(std::size_t universe) {
    CandidateSet s(universe);
    for (std::size_t c = 0; c < universe; ++c) s.insert(static_cast<CandidateId>(c));
    return s;
  }

  template <class Range>
  static CandidateSet of(std::size_t universe, const Range& members) {
    CandidateSet s(universe);
    for (auto c : members) s.insert(static_cast<CandidateId>(c));
    return s;
  }

  static CandidateSet of(std::size_t universe, std::initializer_list<CandidateId> members) {
    CandidateSet s(universe);
    for (auto c : members) s.insert(c);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(CandidateId c) const {
    return c < universe_ && ((words_[c >> 6] >> (c & 63)) & 1u) != 0;
  }

  void insert(CandidateId c) { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void erase(CandidateId c) { words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        auto bit = static_cast<unsigned>(std::countr_zero(w));
        f(static_cast<CandidateId>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<CandidateId> members() const {
    std::vector<CandidateId> out;
    out.reserve(size());
    for_each([&](CandidateId c) { out.push_back(c); });
    return out;
  }

  bool is_subset_of(const CandidateSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~theirs) != 0) return false;
    }
    return true;
  }

  CandidateSet& operator|=(const CandidateSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  CandidateSet& operator&=(const CandidateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  CandidateSet& operator-=(const CandidateSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend CandidateSet operator|(CandidateSet a, const CandidateSet& b) { return a |= b; }
  friend CandidateSet operator&(CandidateSet a, const CandidateSet& b) { return a &= b; }
  friend CandidateSet operator-(CandidateSet a, const CandidateSet& b) { return a -= b; }

  bool operator==(const CandidateSet& o) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bvc
