#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/bounds.hpp"
#include "fusionkit/error.hpp"
#include "fusionkit/group/group_table.hpp"
#include "fusionkit/group/permutation.hpp"
#include "fusionkit/group/subgroups.hpp"

namespace fusionkit::group {

/// A permutation group given by generators.
struct GroupSpec {
  int degree = 1;
  std::vector<Permutation> generators;

  GroupTable build(const Bounds& bounds = {}) const {
    return GroupTable::closure(generators, degree, bounds.max_closure_order);
  }
};

/// Generators of C_p wr C_p on p^2 points: a p-cycle on the first block and
/// the shift permuting the blocks.
inline GroupSpec wreath_generators(int p) {
  const int n = p * p;
  std::vector<int> base(n), shift(n);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      base[i * p + j] = i == 0 ? (j + 1) % p : i * p + j;
      shift[i * p + j] = ((i + 1) % p) * p + j;
    }
  }
  return {n, {Permutation(base), Permutation(shift)}};
}

namespace detail {

inline Permutation from_map(int degree, auto&& f) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = f(i);
  return Permutation(std::move(images));
}

inline int mod(int a, int n) { return ((a % n) + n) % n; }

struct ParsedName {
  std::string base;
  std::vector<int> args;
};

inline ParsedName parse_name(std::string_view text) {
  ParsedName out;
  std::size_t open = text.find('(');
  out.base = std::string(text.substr(0, open));
  if (open == std::string_view::npos) return out;
  if (text.back() != ')') throw UnknownName("malformed catalog name: " + std::string(text));
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  while (!inner.empty()) {
    while (!inner.empty() && (inner.front() == ' ' || inner.front() == ',')) inner.remove_prefix(1);
    if (inner.empty()) break;
    int v = 0;
    auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), v);
    if (ec != std::errc{}) throw UnknownName("malformed catalog argument: " + std::string(text));
    out.args.push_back(v);
    inner.remove_prefix(static_cast<std::size_t>(ptr - inner.data()));
  }
  return out;
}

}  // namespace detail

/// Fixture names accepted by catalog(); parameterized names take integers.
inline std::vector<std::string> catalog_names() {
  return {"s3", "s4", "a4", "d8", "d16", "sl23", "pgl27", "cp_wr_cp(p)", "cyclic(n)", "dihedral(2n)",
          "elementary(p,k)"};
}

inline GroupSpec catalog(std::string_view name) {
  auto [base, args] = detail::parse_name(name);
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw UnknownName("wrong argument count for catalog group: " + std::string(name));
  };
  using detail::from_map;
  using detail::mod;

  if (base == "s3" || base == "s4" || base == "a4" || base == "d8" || base == "d16" || base == "sl23" ||
      base == "pgl27") {
    need(0);
  }
  if (base == "s3") return {3, {Permutation::from_cycles("(0 1)", 3), Permutation::from_cycles("(0 1 2)", 3)}};
  if (base == "s4") return {4, {Permutation::from_cycles("(0 1)", 4), Permutation::from_cycles("(0 1 2 3)", 4)}};
  if (base == "a4") return {4, {Permutation::from_cycles("(0 1 2)", 4), Permutation::from_cycles("(1 2 3)", 4)}};
  if (base == "d8") return {4, {Permutation::from_cycles("(0 1 2 3)", 4), Permutation::from_cycles("(0 2)", 4)}};
  if (base == "d16") {
    return {8, {from_map(8, [](int i) { return (i + 1) % 8; }), from_map(8, [](int i) { return mod(-i, 8); })}};
  }
  if (base == "sl23") {
    // Nonzero vectors (a, b) of F_3^2 are numbered 3a + b - 1.
    auto act = [](int m00, int m01, int m10, int m11) {
      return from_map(8, [=](int i) {
        int a = (i + 1) / 3, b = (i + 1) % 3;
        int x = mod(m00 * a + m01 * b, 3), y = mod(m10 * a + m11 * b, 3);
        return 3 * x + y - 1;
      });
    };
    return {8, {act(1, 1, 0, 1), act(0, -1, 1, 0)}};
  }
  if (base == "pgl27") {
    // Projective line over F_7: points 0..6 and infinity = 7.
    auto inverse7 = [](int x) {
      for (int y = 1; y < 7; ++y) {
        if (x * y % 7 == 1) return y;
      }
      return 0;
    };
    Permutation translate = from_map(8, [](int i) { return i == 7 ? 7 : (i + 1) % 7; });
    Permutation scale = from_map(8, [](int i) { return i == 7 ? 7 : 3 * i % 7; });
    Permutation invert = from_map(8, [&](int i) {
      if (i == 0) return 7;
      if (i == 7) return 0;
      return mod(-inverse7(i), 7);
    });
    return {8, {translate, scale, invert}};
  }
  if (base == "cp_wr_cp") {
    need(1);
    if (!is_prime(args[0])) throw UnknownName("cp_wr_cp needs a prime: " + std::string(name));
    return wreath_generators(args[0]);
  }
  if (base == "cyclic") {
    need(1);
    int n = args[0];
    if (n < 1) throw UnknownName("cyclic needs n >= 1: " + std::string(name));
    if (n == 1) return {1, {}};
    return {n, {from_map(n, [n](int i) { return (i + 1) % n; })}};
  }
  if (base == "dihedral") {
    need(1);
    int order = args[0];
    if (order < 2 || order % 2 != 0) throw UnknownName("dihedral needs an even order: " + std::string(name));
    int n = order / 2;
    if (n == 1) return {2, {Permutation::from_cycles("(0 1)", 2)}};
    if (n == 2) return {4, {Permutation::from_cycles("(0 1)(2 3)", 4), Permutation::from_cycles("(0 2)(1 3)", 4)}};
    return {n, {from_map(n, [n](int i) { return (i + 1) % n; }), from_map(n, [n](int i) { return mod(-i, n); })}};
  }
  if (base == "elementary") {
    need(2);
    int p = args[0], k = args[1];
    if (!is_prime(p) || k < 0) throw UnknownName("elementary needs a prime and k >= 0: " + std::string(name));
    if (k == 0) return {1, {}};
    GroupSpec out{p * k, {}};
    for (int b = 0; b < k; ++b) {
      out.generators.push_back(from_map(p * k, [=](int i) { return i / p == b ? b * p + (i % p + 1) % p : i; }));
    }
    return out;
  }
  throw UnknownName("unknown catalog group: " + std::string(name));
}

inline GroupTable catalog_group(std::string_view name, const Bounds& bounds = {}) {
  return catalog(name).build(bounds);
}

}  // namespace fusionkit::group
