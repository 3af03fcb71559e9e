#pragma once

#include "heckehom/heckealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heckehom {

/// A fully validated computation input: the twisted group datum, optional
/// parabolic/family data, and an optional graded Hecke datum.
struct Scenario {
    int schema_version = 1;
    std::string name;
    std::string description;
    TwistedGroupDatum datum;
    std::vector<RepFamily> families;

    std::optional<HeckeDatum> hecke;
    std::vector<HeckeFamily> hecke_families;

    bool has_hecke() const { return hecke.has_value(); }
};

/// Registered preset names, in listing order.
std::vector<std::string> preset_names();

/// Build a preset scenario; throws DomainError for unknown names.
Scenario preset_scenario(const std::string& name);

/// Load from a preset name or a JSON file path. All component validators run;
/// errors carry the offending location.
Scenario load_scenario(const std::string& path_or_preset);

/// JSON round-trip (Hecke family deformations are serialized as builder
/// names; explicit-matrix scenarios stay explicit).
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json_text(const std::string& text, const std::string& origin = "<memory>");

} // namespace heckehom
