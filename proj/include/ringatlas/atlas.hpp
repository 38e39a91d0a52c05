#ifndef RINGATLAS_ATLAS_HPP
#define RINGATLAS_ATLAS_HPP

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "ringatlas/constructions.hpp"
#include "ringatlas/harness.hpp"
#include "ringatlas/report.hpp"

namespace ringatlas {

nlohmann::json ring_to_json(const FiniteRing& r);
/// Validates on load; throws RingError with the first axiom violation.
RingPtr ring_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json report_to_json(const PropertyReport& rep,
                              bool include_timing = true);

/// A file bundling rings, named maps and optional reports. Rings always
/// validate on load; files are never trusted.
struct Atlas {
    int version = 1;

    std::vector<RingPtr> rings;

    struct MapEntry {
        std::string ring;  // ring name within this atlas
        std::string name;
        std::vector<Elem> images;
    };
    std::vector<MapEntry> maps;

    std::vector<nlohmann::json> reports;

    RingPtr find_ring(const std::string& name) const;
    /// Resolves and verifies the named map as an endomorphism of its ring.
    RingMap resolve_map(const MapEntry& entry) const;

    nlohmann::json to_json() const;
    static Atlas from_json(const nlohmann::json& j);
};

Atlas load_atlas(const std::string& path);
void save_atlas(const Atlas& atlas, const std::string& path);

/// Every catalog fixture, rings deduplicated by name.
Atlas fixture_atlas();

/// Resolves `path` against the working directory, then against each entry
/// of the RINGATLAS_PATH environment variable (colon separated).
std::string resolve_atlas_path(const std::string& path);

}  // namespace ringatlas

#endif
