#pragma once

#include <vector>

#include "solvsph/datum.hpp"

namespace solvsph {

struct EnumerationOptions {
  int max_m = -1;            // < 0 means no bound beyond the rank
  bool dedupe_autos = false; // keep one representative per diagram-automorphism class
};

// All data (M, pi, ~) over the given root system satisfying conditions
// (A), (D), (E), (C), each exactly once, in a deterministic order.
std::vector<SphericalDatum> enumerate_data(const RootSystemPtr& rs, const EnumerationOptions& opts);

// Completion with the sober torus S = A_0, i.e. Ker tau = saturate(L).
// Throws errc::invalid_datum if the datum fails (A),(D),(E),(C) or if its
// declared equivalence cannot come from any torus.
FullDatum sober_torus(const SphericalDatum& d);

struct SoberEnumeration {
  std::vector<FullDatum> data;
  int dropped = 0;  // data whose declared ~ admits no torus (expected 0)
};

SoberEnumeration enumerate_sober(const RootSystemPtr& rs, const EnumerationOptions& opts);

}  // namespace solvsph
