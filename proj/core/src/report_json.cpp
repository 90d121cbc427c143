#include "sdsolid/report_json.hpp"

namespace sds {

json to_json(const scalar& s) {
    if (!s.is_finite()) return s.str();
    return json(s.digits());
}

json to_json(const field& f) {
    if (!f.is_finite()) return json{{"kind", "rational"}};
    return json{{"kind", "finite"},
                {"p", f.p()},
                {"k", f.k()},
                {"q", f.q()},
                {"modulus", f.ctx().modulus()}};
}

json to_json(const ppoint& p) {
    json coords = json::array();
    for (int i = 0; i < 4; ++i) coords.push_back(to_json(p[i]));
    return json{{"field", to_json(p.fld())}, {"coords", coords}};
}

json to_json(const line& l) {
    json pl = json::array();
    for (const auto& c : l.pluecker()) pl.push_back(to_json(c));
    return json{{"pluecker", pl},
                {"point_a", to_json(l.point_a())},
                {"point_b", to_json(l.point_b())}};
}

json to_json(const hpoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        terms.push_back(json{{"exponents", {e[0], e[1], e[2], e[3]}},
                             {"coefficient", to_json(c)}});
    }
    return json{{"degree", f.degree()},
                {"field", to_json(f.fld())},
                {"terms", terms},
                {"text", f.str()}};
}

json to_json(const line_record& lr) {
    json nodes = json::array();
    for (const auto& n : lr.nodes_on_line) nodes.push_back(to_json(n));
    return json{{"line", to_json(lr.ln)},
                {"contained_in_surface", lr.contained_in_s},
                {"node_count", lr.node_count},
                {"nodes_on_line", nodes}};
}

json to_json(const defect_report& d) {
    return json{{"node_count", d.node_count},
                {"independent_conditions", d.independent_conditions},
                {"defect", d.defect},
                {"q_factorial", d.q_factorial},
                {"field", to_json(d.fld)},
                {"caveat", d.caveat},
                {"synthetic", d.synthetic}};
}

json to_json(const position_violation& v) {
    return json{{"curve_degree", v.k}, {"point_indices", v.indices}};
}

json to_json(const census_model& m) {
    json j{{"kind", m.kind}, {"rule", m.rule}};
    if (m.node) j["node"] = to_json(*m.node);
    if (m.base) j["base_line"] = to_json(*m.base);
    if (!m.certification.empty()) j["certification"] = m.certification;
    return j;
}

json to_json(const census_report& rep) {
    json nodes = json::array();
    for (const auto& n : rep.nodes) nodes.push_back(to_json(n));
    json lines = json::array();
    for (const auto& lr : rep.lines) lines.push_back(to_json(lr));
    json models = json::array();
    for (const auto& m : rep.models) models.push_back(to_json(m));
    json fano = json::array();
    for (const auto& lr : rep.fano_lines) fano.push_back(to_json(lr));
    return json{{"field", to_json(rep.fld)},
                {"seed", rep.seed},
                {"node_count", rep.node_count},
                {"nodes", nodes},
                {"scan_counts", rep.per_degree},
                {"scan_stabilized", rep.stabilized},
                {"nodes_supplied", rep.nodes_supplied},
                {"defect", to_json(rep.defect)},
                {"q_factorial", rep.q_factorial},
                {"q_factorial_rule", rep.q_factorial_rule},
                {"super_rigid", rep.super_rigid},
                {"non_rational", rep.non_rational},
                {"no_conic_bundle", rep.no_conic_bundle},
                {"lines", lines},
                {"models", models},
                {"fano_lines", fano},
                {"fano_model_exists", rep.fano_model_exists},
                {"fibration_count", rep.fibration_count},
                {"classification_scope", rep.classification_scope},
                {"caveats", rep.caveats}};
}

json to_json(const nodal_surface_record& rec) {
    json nodes = json::array();
    for (const auto& n : rec.nodes) nodes.push_back(to_json(n));
    json bad = json::array();
    for (const auto& n : rec.non_nodal) bad.push_back(to_json(n));
    return json{{"field", to_json(rec.fld)},
                {"extension_depth", rec.extension_depth},
                {"scan_counts", rec.per_degree},
                {"scan_stabilized", rec.stabilized},
                {"nodes", nodes},
                {"non_nodal", bad},
                {"orbit_sizes", rec.orbit_sizes}};
}

json to_json(const gallery_build& b) {
    json nodes = json::array();
    for (const auto& n : b.intended_nodes) nodes.push_back(to_json(n));
    return json{{"field", to_json(b.fld)},
                {"seed", b.seed},
                {"provenance", b.provenance},
                {"surface", to_json(b.F)},
                {"intended_nodes", nodes}};
}

json envelope(const std::string& operation, const field& fld, std::uint64_t seed,
              json parameters, json result) {
    return json{{"version", toolkit_version},
                {"operation", operation},
                {"field", to_json(fld)},
                {"seed", seed},
                {"parameters", std::move(parameters)},
                {"result", std::move(result)}};
}

json error_json(const error& e) {
    std::string what = e.what();
    std::string prefix = std::string(errc_name(e.code())) + ": ";
    std::string message =
        what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
    json j{{"version", toolkit_version},
           {"error", json{{"code", errc_name(e.code())}, {"message", message}}}};
    if (const auto* nn = dynamic_cast<const non_nodal_error*>(&e)) {
        j["error"]["record"] = to_json(nn->record());
    }
    return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace sds
