#pragma once

// The built-in posets and algebras. Every accessor returns the same shared
// instance on each call, so maps built from different calls compose.

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "powdom/algebra.hpp"
#include "powdom/poset.hpp"
#include "powdom/ratalgebra.hpp"

namespace powdom::catalog {

/// The two-element chain 0 < 1 carrying the Boolean algebras.
const PosetPtr& two();

const PosetPtr& one();      // "1":      *
const PosetPtr& chain2();   // "C2":     bot < top
const PosetPtr& anti2();    // "A2":     a, b
const PosetPtr& chain3();   // "C3":     x0 < x1 < x2
const PosetPtr& vee();      // "V":      b < l, b < r
const PosetPtr& wedge();    // "Lambda": l < t, r < t
const PosetPtr& grid2x2();  // "Grid2x2": C2 x C2
const PosetPtr& crown4();   // "Crown4": a1, a2 < b1, b2

/// Catalog posets with at most maxSize elements, in catalog order.
std::vector<PosetPtr> posets(std::size_t maxSize = std::numeric_limits<std::size_t>::max());
/// Throws UnknownName.
PosetPtr poset(std::string_view name);

const FinAlgebra& angelic2();  // "2_ang":    (2, join, zero)
const FinAlgebra& demonic2();  // "2_dem":    (2, meet, one)
const FinAlgebra& frame2();    // "frame2":   (2, meet, join, zero, one)
const FinAlgebra& lattice2();  // "lattice2": (2, meet, join)

const std::vector<FinAlgebra>& finiteAlgebras();
/// Throws UnknownName.
const FinAlgebra& finiteAlgebra(std::string_view name);

const RatAlgebra& rplus();      // "rplus":      (Q+, add, zero)
const RatAlgebra& rcone();      // "rcone":      (Q+, add, scale, zero)
const RatAlgebra& rplusMax();   // "rplus_max":  (Q+, add:LE, max:GE, scale, zero)
const RatAlgebra& rplusMin();   // "rplus_min":  (Q+, add:GE, min:LE, scale, zero)
const RatAlgebra& rsemiring();  // "rsemiring":  (Q+, add, mul, zero, one)

const std::vector<RatAlgebra>& ratAlgebras();
/// Throws UnknownName.
const RatAlgebra& ratAlgebra(std::string_view name);

/// True when a finite or rational catalog algebra has this name.
bool hasAlgebra(std::string_view name);

}  // namespace powdom::catalog
