#pragma once

#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/error.hpp"

namespace fusionkit::group {

/// A bijection of {0, ..., degree-1}, stored as its image list.
///
/// Permutations act on the right: `(a * b)` applies `a` first, then `b`, so
/// conjugation `x^g` is `g^-1 * x * g`.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
        throw ParseError("image list is not a bijection on 0.." +
                         std::to_string(images_.size()));
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    return Permutation(std::move(images), Unchecked{});
  }

  /// Parses cycle notation such as "(0 1)(2 3 4)" or "()" (0-based points,
  /// separated by spaces or commas).
  static Permutation from_cycles(std::string_view text, int degree) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;
    auto skip_space = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
    };
    skip_space();
    while (pos < text.size()) {
      if (text[pos] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
      ++pos;
      std::vector<int> cycle;
      for (;;) {
        skip_space();
        if (pos >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) throw ParseError("bad point in cycle notation: " + std::string(text));
        pos = static_cast<std::size_t>(ptr - text.data());
        if (value < 0 || value >= degree) {
          throw ParseError("point " + std::to_string(value) + " outside degree " +
                           std::to_string(degree));
        }
        if (used[value]) throw ParseError("point repeated in cycle notation: " + std::string(text));
        used[value] = true;
        cycle.push_back(value);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_space();
    }
    return Permutation(std::move(images), Unchecked{});
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw DegreeMismatch("composing permutations of different degree");
    std::vector<int> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = b.images_[a.images_[i]];
    return Permutation(std::move(images), Unchecked{});
  }

  Permutation inverse() const {
    std::vector<int> images(images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(images), Unchecked{});
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i)) return false;
    }
    return true;
  }

  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycles() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == static_cast<int>(start)) continue;
      out += '(';
      std::size_t p = start;
      bool first = true;
      while (!seen[p]) {
        seen[p] = true;
        if (!first) out += ' ';
        out += std::to_string(p);
        first = false;
        p = static_cast<std::size_t>(images_[p]);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> images, Unchecked) : images_(std::move(images)) {}

  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace fusionkit::group
