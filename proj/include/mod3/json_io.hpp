#pragma once

#include <string>

#include <json.hpp>

#include "mod3/checker.hpp"

namespace mod3 {

using ordered_json = nlohmann::ordered_json;

// Witness report with a fixed key order:
// {space:{circles,bz3,cap}, n, alphas, zeta, verdict, product_class,
//  pairing_witness, warnings}. product_class lists {monomial, coeff} pairs
// in the canonical monomial order; coefficients are the residues 1 or 2.
ordered_json witness_report_json(const WitnessReport& report, const SpacePresentation& P);

// The same shape for a search that found nothing: verdict false, empty
// alphas/zeta, and an explanatory warning.
ordered_json no_witness_json(const SpacePresentation& P, int n);

// {space:{circles,bz3,cap}, dims:[{degree,basis,series}...]}.
ordered_json dims_json(const SpacePresentation& P, int max_degree);

// Canonical rendering used everywhere JSON is printed: two-space indent plus
// a trailing newline, so reports round-trip byte-identically.
std::string render_json(const ordered_json& j);

}  // namespace mod3
