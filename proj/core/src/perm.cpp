#include "hallmark/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hallmark {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint16_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw FormatError("Perm: image array is not a bijection");
    seen[img] = true;
  }
}

Perm Perm::identity(unsigned degree) {
  std::vector<std::uint16_t> v(degree);
  std::iota(v.begin(), v.end(), 0);
  Perm p;
  p.images_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw DomainError("Perm: degree mismatch in product");
  Perm p;
  p.images_.resize(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) p.images_[i] = rhs.images_[images_[i]];
  return p;
}

long Perm::order() const {
  long ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    os << '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm Perm::from_cycles(unsigned degree, const std::string& text) {
  std::vector<std::uint16_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("cycle notation: expected '('");
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw FormatError("cycle notation: expected a point");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw FormatError("cycle notation: point " + std::to_string(v) +
                          " outside 1.." + std::to_string(degree));
      unsigned point = static_cast<unsigned>(v - 1);
      if (used[point])
        throw FormatError("cycle notation: point " + std::to_string(v) + " repeated");
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw FormatError("cycle notation: missing ')'");
    ++i;  // ')'
    for (std::size_t c = 0; c + 1 < cycle.size(); ++c)
      images[cycle[c]] = static_cast<std::uint16_t>(cycle[c + 1]);
    if (cycle.size() >= 2) images[cycle.back()] = static_cast<std::uint16_t>(cycle.front());
    skip_ws();
  }
  return Perm(std::move(images));
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::uint16_t v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hallmark
