#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "powdom/extnum.hpp"

namespace powdom {

/// Seeded source of test data. Only the raw mt19937_64 stream is used (the
/// standard pins its output), so samples are identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool coin(std::uint64_t oneIn) { return below(oneIn) == 0; }

  /// A random extended rational: mostly small fractions, with occasional
  /// exact zeros, integers and infinity.
  ExtNN extnn();
  /// A finite positive fraction.
  ExtNN positiveRational();

 private:
  std::mt19937_64 engine_;
};

/// The fixed grid every law over Q+ is first checked on exhaustively.
const std::vector<ExtNN>& scalarGrid();

}  // namespace powdom
