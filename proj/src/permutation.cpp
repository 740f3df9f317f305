#include "cosetposet/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cosetposet {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n < 1) throw SizeMismatchError("permutation must act on at least one coordinate");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw SizeMismatchError("permutation image is not a bijection on {1..n}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(pick(rng))]);
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (image(i) != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) {
    inv[static_cast<std::size_t>(image(i) - 1)] = i;
  }
  return Permutation(std::move(inv));
}

BitWord Permutation::apply(const BitWord& u) const {
  if (u.length() != size()) {
    throw SizeMismatchError("permutation size does not match word length");
  }
  BitWord out = BitWord::zero(u.length());
  for (int i = 1; i <= size(); ++i) {
    if (u.has_coordinate(image(i))) out.set_coordinate(i);
  }
  return out;
}

std::string Permutation::to_line() const {
  std::ostringstream os;
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) os << ' ';
    os << image(i);
  }
  return os.str();
}

Permutation Permutation::from_line(const std::string& line) {
  std::istringstream is(line);
  std::vector<int> image;
  int v = 0;
  while (is >> v) image.push_back(v);
  if (!is.eof()) throw ParseError("invalid permutation line", 0, 0);
  return Permutation(std::move(image));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatchError("compose: permutation sizes differ");
  std::vector<int> image(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    image[static_cast<std::size_t>(i - 1)] = q.image(p.image(i));
  }
  return Permutation(std::move(image));
}

}  // namespace cosetposet
