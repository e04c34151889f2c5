#pragma once

#include "susylab/superpotential.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace susylab {

/// A shipped superpotential: defaults plus, where the class admits one, a
/// parameter set in the broken phase.
struct CatalogEntry {
    SuperpotentialInstance instance;
    std::optional<ParamRecord> broken_preset;
    std::string description;
};

/// Canonical instance per ClassTag, in the order of kAllClassTags, plus the
/// left branch of the unbounded IIIB form.
std::vector<SuperpotentialInstance> catalog();
const std::vector<CatalogEntry>& catalog_entries();

/// Looks up an entry by name; std::nullopt if unknown.
std::optional<CatalogEntry> find_entry(std::string_view name);

} // namespace susylab
