#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallmark/errors.hpp"

namespace hallmark {

/// A permutation of {0, ..., degree-1}, stored as the image array.
/// Composition is left-to-right: (a * b) maps x to b[a[x]], so points are
/// acted on the way x^(ab) = (x^a)^b reads in group-theory notation.
/// Cycle notation in text form is 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);
  static Perm identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint16_t operator[](unsigned point) const { return images_[point]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;
  long order() const;  // lcm of cycle lengths

  bool operator==(const Perm& rhs) const { return images_ == rhs.images_; }
  bool operator<(const Perm& rhs) const { return images_ < rhs.images_; }

  /// "(1 2 3)(4 5)" with 1-based points; identity prints as "()".
  std::string to_cycles() const;
  /// Parses 1-based cycle notation; points must lie in 1..degree and no
  /// point may repeat. Throws FormatError otherwise.
  static Perm from_cycles(unsigned degree, const std::string& text);

 private:
  std::vector<std::uint16_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace hallmark
