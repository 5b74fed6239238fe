#include "permcore/perm.hpp"

#include <algorithm>
#include <numeric>

namespace permcore {

Perm::Perm(Point degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("Perm: image table is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  Perm r;
  r.img_.resize(degree());
  for (Point i = 0; i < degree(); ++i) r.img_[i] = other.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (Point i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
  if (degree() != g.degree())
    throw std::invalid_argument("Perm: degree mismatch in conjugation");
  Perm r;
  r.img_.resize(degree());
  for (Point i = 0; i < degree(); ++i) r.img_[g.img_[i]] = g.img_[img_[i]];
  return r;
}

Perm Perm::power(long long e) const {
  if (e < 0) return inverse().power(-e);
  Perm acc(degree());
  Perm base = *this;
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

u64 Perm::order() const {
  std::vector<bool> seen(degree(), false);
  u64 ord = 1;
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    for (Point j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Point Perm::smallest_moved() const {
  for (Point i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return degree();
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Perm parse_cycles(std::string_view text, Point degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected point at offset " + std::to_string(i));
      u64 v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw std::invalid_argument("parse_cycles: point out of range");
        ++i;
      }
      if (v == 0) throw std::invalid_argument("parse_cycles: points are 1-based");
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) {
        if (text[i] == ',') ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++i;  // ')'
    skip_ws();
    any = true;
    for (size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k], to = cycle[(k + 1) % cycle.size()];
      if (img[from] != from)
        throw std::invalid_argument("parse_cycles: point repeated across cycles");
      img[from] = to;
    }
  }
  if (!any) throw std::invalid_argument("parse_cycles: empty input");
  return Perm(std::move(img));
}

size_t hash_images(std::span<const Point> img) {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : img) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

size_t PermHash::operator()(const Perm& p) const { return hash_images(p.images()); }

}  // namespace permcore
