#pragma once

#include <string>

#include <json.hpp>

#include "focklat/lattice.hpp"
#include "focklat/lattice_fn.hpp"
#include "focklat/verify.hpp"

namespace focklat {

using Json = nlohmann::json;

/// Lattice schema: {"dim": d, "generator": [[{"re":..,"im":..}, ...], ...]}.
Json lattice_to_json(const ComplexLattice& lat);
ComplexLattice lattice_from_json(const Json& j);

/// Factor-list form of a LatticeFn (kind, row, offset, shift per factor,
/// plus the exponential prefactor and meta string).
Json fn_to_json(const LatticeFn& fn);
LatticeFn fn_from_json(const Json& j);

Json report_to_json(const VanishingReport& rep);
Json report_to_json(const InterpolationReport& rep);
Json report_to_json(const GrowthProfile& prof);
Json report_to_json(const LagrangeTrace& trace);
Json report_to_json(const BargmannBridge& bridge);

std::string report_to_csv(const VanishingReport& rep);
std::string report_to_csv(const InterpolationReport& rep);
std::string report_to_csv(const GrowthProfile& prof);
std::string report_to_csv(const LagrangeTrace& trace);
std::string report_to_csv(const BargmannBridge& bridge);

/// Two-column "radius sup" plot file body.
std::string growth_plot(const GrowthProfile& prof);

void write_text_file(const std::string& path, const std::string& body);
Json read_json_file(const std::string& path);

}  // namespace focklat
