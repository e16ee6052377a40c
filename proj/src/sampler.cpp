#include "powdom/sampler.hpp"

#include <limits>

namespace powdom {

std::uint64_t Sampler::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

ExtNN Sampler::extnn() {
  switch (below(16)) {
    case 0: return ExtNN::infinity();
    case 1: return ExtNN{};
    case 2: return ExtNN(static_cast<std::int64_t>(below(8)));
    default: break;
  }
  return ExtNN::fraction(static_cast<std::int64_t>(below(61)),
                         static_cast<std::int64_t>(1 + below(12)));
}

ExtNN Sampler::positiveRational() {
  return ExtNN::fraction(static_cast<std::int64_t>(1 + below(60)),
                         static_cast<std::int64_t>(1 + below(12)));
}

const std::vector<ExtNN>& scalarGrid() {
  static const std::vector<ExtNN> grid{
      ExtNN{0}, ExtNN::fraction(1, 3), ExtNN::fraction(1, 2), ExtNN{1},
      ExtNN{2}, ExtNN{7},              ExtNN::infinity()};
  return grid;
}

}  // namespace powdom
