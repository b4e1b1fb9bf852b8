#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsd/catalog.hpp"
#include "hsd/complex.hpp"
#include "json.hpp"

namespace hsd::cli {

/// Serializable description of a catalog mapping plus an ordered list of
/// Koebe / affine transforms to apply. Round-trips through JSON bit-exactly.
struct MapDescriptor {
    struct Transform {
        enum class Kind { koebe, affine };
        Kind kind;
        cplx arg;
        bool operator==(const Transform&) const = default;
    };

    std::string kind;
    std::map<std::string, double> params;
    std::vector<Transform> transforms;

    bool operator==(const MapDescriptor&) const = default;
};

nlohmann::ordered_json to_json(const MapDescriptor& d);
MapDescriptor descriptor_from_json(const nlohmann::json& j);

/// Instantiate the described harmonic mapping (analytic kinds get a constant
/// zero co-analytic part).
HarmonicMap build_map(const MapDescriptor& d);

/// Run-wide configuration shared by the commands.
struct RunConfig {
    int n_radii = 256;
    int n_angles = 512;
    double refine_tol = 1e-10;
    int ladder_first = 3;
    int ladder_last = 7;
    std::string format = "json";  // json | csv
    std::string out;              // empty = stdout

    void validate() const;
};

/// Parse "a+bi" / "a-bi" / "a" / "bi" into a complex number.
cplx parse_complex(const std::string& text);

}  // namespace hsd::cli
