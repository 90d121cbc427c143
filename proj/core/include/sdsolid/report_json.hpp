#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "sdsolid/census.hpp"
#include "sdsolid/gallery.hpp"

namespace sds {

using json = nlohmann::json;

inline constexpr const char* toolkit_version = "0.1.0";

/// JSON conventions, shared by every report: keys are emitted sorted, no
/// floating-point values appear anywhere, rational scalars are strings
/// ("-3/4"), finite scalars are length-k digit arrays over F_p, and points
/// carry their field so extension-field coordinates are self-describing.
json to_json(const scalar& s);
json to_json(const field& f);
json to_json(const ppoint& p);
json to_json(const line& l);
json to_json(const hpoly& f);
json to_json(const line_record& lr);
json to_json(const defect_report& d);
json to_json(const position_violation& v);
json to_json(const census_model& m);
json to_json(const census_report& rep);
json to_json(const nodal_surface_record& rec);
json to_json(const gallery_build& b);

/// Standard report wrapper: version, operation name, base field, seed, the
/// operation's parameters, and its result.
json envelope(const std::string& operation, const field& fld, std::uint64_t seed,
              json parameters, json result);

/// Machine-readable failure object (code + message); the non-nodal abort
/// additionally embeds the scan record.
json error_json(const error& e);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// Byte-identical across runs for equal reports.
std::string dump_report(const json& j);

}  // namespace sds
