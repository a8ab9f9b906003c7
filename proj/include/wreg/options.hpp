#pragma once

#include <cstdint>
#include <vector>

namespace wreg {

/// Knobs shared by every certificate-producing computation.  Defaults are
/// deterministic; identical inputs and options give byte-identical results.
struct Options {
  /// Seed for the pseudo-random evaluation points used by injectivity
  /// certificates.
  std::uint64_t seed = 20240901;

  /// Hard cap (in degrees scanned) for stabilization-window searches.
  /// -1 selects an instance-dependent default; exceeding the cap is an
  /// error, never a silent truncation.
  long long window_cap = -1;

  /// Degree cap for the fiberwise bundle certificate (membership of variable
  /// powers in the minors ideal).  -1 selects a default from the weights.
  long long minor_degree_cap = -1;

  /// Treat "unverified" certificates as errors.
  bool strict = false;

  bool operator==(const Options& o) const {
    return seed == o.seed && window_cap == o.window_cap &&
           minor_degree_cap == o.minor_degree_cap;
  }
};

}  // namespace wreg
