#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cosetposet/errors.hpp"

namespace cosetposet {

// Hard cap on vector length: every coset pass iterates at most 2^n words.
inline constexpr int kMaxLength = 24;

// A length-n vector over GF(2) packed into a 32-bit word.
//
// Coordinate convention: coordinate i (1-based, the i-th character of the
// display string, leftmost first) sits at bit position n - i.  Numeric order
// of the packed word therefore equals lexicographic order of the display
// strings; all deterministic tie-breaking in this library uses that order.
class BitWord {
 public:
  BitWord() = default;

  BitWord(std::uint32_t bits, int length) : bits_(bits), length_(length) {
    if (length < 1) throw Error("BitWord length must be >= 1");
    if (length > kMaxLength) {
      throw TooLargeError("BitWord length exceeds " + std::to_string(kMaxLength));
    }
    if (length < 32 && (bits >> length) != 0) {
      throw Error("BitWord has set bits beyond its length");
    }
  }

  static BitWord zero(int length) { return BitWord(0, length); }

  // The standard basis vector with a single 1 at coordinate i (1-based).
  static BitWord unit(int length, int coordinate) {
    BitWord w = zero(length);
    w.set_coordinate(coordinate);
    return w;
  }

  static BitWord from_string(const std::string& text) {
    const int n = static_cast<int>(text.size());
    if (n < 1) throw ParseError("empty vector string", 0, 0);
    if (n > kMaxLength) {
      throw TooLargeError("vector string longer than " + std::to_string(kMaxLength));
    }
    std::uint32_t bits = 0;
    for (int i = 0; i < n; ++i) {
      if (text[i] == '1') {
        bits |= 1u << (n - 1 - i);
      } else if (text[i] != '0') {
        throw ParseError(std::string("invalid character '") + text[i] + "' in vector string",
                         0, i + 1);
      }
    }
    return BitWord(bits, n);
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 1; i <= length_; ++i) {
      if (has_coordinate(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    }
    return s;
  }

  std::uint32_t bits() const { return bits_; }
  int length() const { return length_; }
  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }

  bool has_coordinate(int i) const { return (bits_ >> (length_ - i)) & 1u; }
  void set_coordinate(int i) { bits_ |= 1u << (length_ - i); }

  // Coordinates where the vector is non-zero, ascending.
  std::vector<int> support() const {
    std::vector<int> coords;
    coords.reserve(static_cast<std::size_t>(weight()));
    for (int i = 1; i <= length_; ++i) {
      if (has_coordinate(i)) coords.push_back(i);
    }
    return coords;
  }

  friend BitWord operator^(const BitWord& a, const BitWord& b) {
    require_same_length(a, b);
    return BitWord(a.bits_ ^ b.bits_, a.length_);
  }

  friend bool operator==(const BitWord& a, const BitWord& b) {
    return a.length_ == b.length_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const BitWord& a, const BitWord& b) { return !(a == b); }

  // Orders by packed value; only meaningful between words of equal length.
  friend bool operator<(const BitWord& a, const BitWord& b) { return a.bits_ < b.bits_; }

 private:
  static void require_same_length(const BitWord& a, const BitWord& b) {
    if (a.length_ != b.length_) {
      throw LengthMismatchError("BitWord lengths differ: " + std::to_string(a.length_) +
                                " vs " + std::to_string(b.length_));
    }
  }

  std::uint32_t bits_ = 0;
  int length_ = 1;
};

inline int hamming_distance(const BitWord& x, const BitWord& y) {
  if (x.length() != y.length()) {
    throw LengthMismatchError("hamming_distance: lengths differ");
  }
  return std::popcount(x.bits() ^ y.bits());
}

inline int hamming_weight(const BitWord& x) { return x.weight(); }

// True iff supp(x) is contained in supp(y).
inline bool support_subset(const BitWord& x, const BitWord& y) {
  if (x.length() != y.length()) {
    throw LengthMismatchError("support_subset: lengths differ");
  }
  return (x.bits() & ~y.bits()) == 0;
}

}  // namespace cosetposet
