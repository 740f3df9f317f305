#pragma once

#include <random>
#include <string>
#include <vector>

#include "cosetposet/bitword.hpp"
#include "cosetposet/errors.hpp"

namespace cosetposet {

// A permutation pi of the coordinate set {1..n}.
//
// Acting on words it places u_{pi(i)} at coordinate i, so for a word u the
// image P(u) reads u_{pi(1)} u_{pi(2)} ... u_{pi(n)}.
class Permutation {
 public:
  // image[i-1] = pi(i), 1-based values.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation random(int n, std::mt19937_64& rng);

  int size() const { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  bool is_identity() const;

  Permutation inverse() const;

  BitWord apply(const BitWord& u) const;

  // One-line serialization "pi(1) pi(2) ... pi(n)".
  std::string to_line() const;
  static Permutation from_line(const std::string& line);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<int> image_;
};

// apply(compose(p, q), u) == apply(p, apply(q, u)).
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace cosetposet
