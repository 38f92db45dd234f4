#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>

#include "fusionkit/error.hpp"

namespace fusionkit {

/// Size limits for the exhaustive algorithms. These are configuration, the
/// defaults are large enough for every catalog fixture.
struct Bounds {
  std::size_t max_closure_order = 10000;     // closure()
  std::size_t max_enumeration_order = 2000;  // enumerate_subgroups()
  std::size_t max_hom_domain = 64;           // homomorphisms()
  std::size_t max_assignments = 100000;      // subsystem census vectors

  /// Defaults, with the closure bound overridden by FUSIONKIT_MAX_ORDER.
  static Bounds from_environment() {
    Bounds b;
    if (const char* env = std::getenv("FUSIONKIT_MAX_ORDER")) {
      try {
        b.max_closure_order = std::stoul(env);
      } catch (const std::exception&) {
        throw ParseError(std::string("FUSIONKIT_MAX_ORDER is not a number: ") + env);
      }
    }
    return b;
  }
};

}  // namespace fusionkit
