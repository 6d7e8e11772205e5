#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solvsph/datum.hpp"

namespace solvsph {

// Simple roots of Psi^reg eligible as transformation centers, sorted.
std::vector<int> available_centers(const FullDatum& full);

// Conjugation by a representative of r_delta for a regular active simple
// root delta: Psi' = r_delta(Psi \ {delta}) ∪ {delta} with labels
// transported, M' the maximal elements of Psi', Ker tau' = r_delta(Ker tau).
// Throws errc::center_not_regular_simple when delta is not eligible; the
// result always validates.
FullDatum elementary_transformation(const FullDatum& full, int delta);

// Canonical serialization used to deduplicate data; equal keys iff equal
// (M, pi, Ker tau).
std::string datum_key(const FullDatum& full);
std::string datum_key(const SphericalDatum& d);

// Closure of {full} under elementary transformations, sorted by key.
std::vector<FullDatum> orbit(const FullDatum& full);

// Whether b arises from a by a chain of elementary transformations; decides
// conjugacy of the corresponding standardly embedded subgroups. Throws
// errc::root_system_mismatch when the ambient systems differ.
bool conjugacy_test(const FullDatum& a, const FullDatum& b);

// Witness chain of centers turning a into b, when conjugate.
std::optional<std::vector<int>> conjugacy_chain(const FullDatum& a, const FullDatum& b);

}  // namespace solvsph
