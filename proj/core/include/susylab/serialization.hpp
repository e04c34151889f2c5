#pragma once

#include "susylab/invariance.hpp"
#include "susylab/oracle.hpp"
#include "susylab/quadrature.hpp"
#include "susylab/spectra.hpp"
#include "susylab/superpotential.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace susylab {

using json = nlohmann::ordered_json;

/// Shortest text that parses back to the same double ("inf"/"nan" spelled out).
std::string format_number(double v);

// {name, tag, params{...}, domain{xL, xR}}, infinite ends as "-inf"/"+inf".
json to_json(const SuperpotentialInstance& sp);
SuperpotentialInstance instance_from_json(const json& j);

// {phase, signs:[sL, sR], map:{params...}, shift}; map/shift are null without a map.
json to_json(const PhaseReport& report, const std::optional<DiscreteMap>& map);

// {instance, phase, levels:[{n, E}], formula}
json to_json(const SpectrumResult& spectrum);
SpectrumResult spectrum_from_json(const json& j);
std::string spectrum_csv(const SpectrumResult& spectrum);

json to_json(const QuantizationReport& report);
QuantizationReport quantization_from_json(const json& j);
std::string quantization_csv_header();
std::string quantization_csv_row(const QuantizationReport& report);

// {which, N, xmin, xmax, eigenvalues:[...]} (+ richardson when present)
json to_json(const OracleSpectrum& spectrum);
OracleSpectrum oracle_from_json(const json& j);

json to_json(const ComparisonReport& report);
std::string comparison_csv(const ComparisonReport& report);

json params_json(const ParamRecord& params);
Phase parse_phase(std::string_view text);
Partner parse_partner(std::string_view text);

} // namespace susylab
