#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ttg {

// Fixed-universe dynamic bitset. Used for subgroup element sets and for
// point subsets during lattice walks.
class Bitset {
public:
  Bitset() : n_(0) {}
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  bool contains(const Bitset& other) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (other.w_[i] & ~w_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const Bitset& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    // Compare as a sequence of bits from index 0 upward.
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] != o.w_[i]) {
        std::uint64_t diff = w_[i] ^ o.w_[i];
        std::uint64_t low = diff & ~(diff - 1);
        return (o.w_[i] & low) != 0;  // o has the lowest differing bit set
      }
    }
    return false;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto w : w_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
  }

private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace ttg
