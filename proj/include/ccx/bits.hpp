#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace ccx {

// Fixed-length bit vector. Bit i of a length-n vector corresponds to
// character i of its serialized '0'/'1' string, so lexicographic order on
// Bits matches lexicographic order on the strings. Trailing bits of the
// last word are kept zero.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  static Bits ones(int nbits) {
    Bits b(nbits);
    for (auto& x : b.w_) x = ~std::uint64_t{0};
    b.trim();
    return b;
  }
  static Bits from_string(const std::string& s);

  int size() const { return n_; }

  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i, bool v = true) {
    if (v)
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(int i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  int hamming(const Bits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k)
      c += std::popcount(w_[k] ^ o.w_[k]);
    return c;
  }

  Bits operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  Bits operator^(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] ^ o.w_[k];
    return r;
  }
  Bits operator~() const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  // Per-position majority of three vectors.
  static Bits majority(const Bits& a, const Bits& b, const Bits& c) {
    Bits r(a.n_);
    for (std::size_t k = 0; k < a.w_.size(); ++k)
      r.w_[k] = (a.w_[k] & b.w_[k]) | (a.w_[k] & c.w_[k]) | (b.w_[k] & c.w_[k]);
    return r;
  }

  // Index of the lowest set bit, or -1.
  int first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return 64 * static_cast<int>(k) + std::countr_zero(w_[k]);
    return -1;
  }
  // Index of the lowest set bit > i, or -1.
  int next_set(int i) const;

  std::string to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Lexicographic order of the serialized strings (bit 0 compared first).
  bool lex_less(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t d = w_[k] ^ o.w_[k];
      if (d) {
        int low = std::countr_zero(d);
        return ((w_[k] >> low) & 1) == 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w_) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h ^ static_cast<std::size_t>(n_);
  }

 private:
  void trim() {
    int rem = n_ & 63;
    if (rem && !w_.empty()) w_.back() &= (~std::uint64_t{0}) >> (64 - rem);
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

struct BitsLexLess {
  bool operator()(const Bits& a, const Bits& b) const { return a.lex_less(b); }
};

}  // namespace ccx
