// Command-line front end: analyze | defect | lines | classify | gallery.
// Reports are deterministic JSON on stdout (or --out); a one-line human
// summary goes to stderr. Exit 0 on success, 2 when certification finds a
// non-nodal singular point, 1 for every other failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sdsolid/census.hpp"
#include "sdsolid/gallery.hpp"
#include "sdsolid/report_json.hpp"

using namespace sds;

namespace {

struct surface_opts {
    std::string poly;
    std::string poly_file;
    std::string gallery;  // name[,r=N]
    std::string field_text;
    std::string points_file;  // prescribed gallery nodes
    std::string nodes_file;   // supplied node list (defect/classify)
    std::string out;
    std::uint64_t seed = 1;
    int ext_depth = 1;
    std::uint64_t max_enum = default_enum_guard;
    bool force_enum = false;
    bool certify_b = false;
    int probe_retries = 32;
    int position_k = 0;
};

void add_input_flags(CLI::App* cmd, surface_opts& o, bool with_surface = true) {
    if (with_surface) {
        cmd->add_option("--poly", o.poly, "sextic as an expression in x,y,z,w");
        cmd->add_option("--poly-file", o.poly_file, "file holding the sextic expression");
        cmd->add_option("--gallery", o.gallery,
                        "built-in surface: barth | family_r[,r=N] | quartic_node | "
                        "bidegree23 | jihun1 | jihun2 | char5_demo | prescribed");
    }
    cmd->add_option("--field", o.field_text,
                    "coefficient field: 'rational', 'p=101', or 'p=11,k=2' "
                    "(default: per-gallery suitable field, else rational)");
    cmd->add_option("--seed", o.seed, "seed for randomized constructions and probes");
    cmd->add_option("--max-enum", o.max_enum, "enumeration guard on q^3");
    cmd->add_flag("--force-enum", o.force_enum, "lift the enumeration guard entirely");
    cmd->add_option("--out", o.out, "write the JSON report to this file instead of stdout");
}

std::uint64_t guard_of(const surface_opts& o) {
    return o.force_enum ? ~std::uint64_t(0) : o.max_enum;
}

struct gallery_designator {
    gallery_name name;
    int r = 1;
};

gallery_designator parse_designator(const std::string& text) {
    gallery_designator d{gallery_name::barth, 1};
    std::string base = text;
    auto comma = text.find(',');
    if (comma != std::string::npos) {
        base = text.substr(0, comma);
        std::string rest = text.substr(comma + 1);
        if (rest.rfind("r=", 0) != 0) {
            fail(errc::parse_error, "gallery modifier must look like r=2, got '" + rest + "'");
        }
        d.r = std::stoi(rest.substr(2));
    }
    d.name = parse_gallery_name(base);
    return d;
}

field resolve_field(const surface_opts& o) {
    std::optional<gallery_designator> g;
    if (!o.gallery.empty()) g = parse_designator(o.gallery);
    if (o.field_text.empty()) {
        if (g) return suitable_field(g->name);
        return field::rationals();
    }
    // the characteristic-5 demo is the one legitimate use of p <= 5
    if (g && g->name == gallery_name::char5_demo &&
        (o.field_text == "p=5" || o.field_text == "p=5,k=1")) {
        return field::finite_unchecked(5, 1);
    }
    return field::parse(o.field_text, guard_of(o));
}

scalar scalar_from_json(const field& fld, const json& j) {
    if (j.is_number_integer()) return fld.from_int(j.get<long long>());
    if (j.is_string()) {
        if (fld.is_finite()) {
            fail(errc::parse_error, "string coordinates are for the rational field");
        }
        return fld.from_rat(rat(j.get<std::string>()));
    }
    if (j.is_array()) {
        if (!fld.is_finite()) {
            fail(errc::parse_error, "digit-array coordinates are for finite fields");
        }
        std::vector<std::uint32_t> ds;
        for (const auto& d : j) ds.push_back(d.get<std::uint32_t>());
        return fld.from_digits(ds);
    }
    fail(errc::parse_error, "coordinate entries must be integers, digit arrays, or strings");
}

std::vector<ppoint> load_points(const std::string& path, const field& fld) {
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open point file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(errc::parse_error, "point file '" + path + "': " + e.what());
    }
    if (!j.is_array()) fail(errc::parse_error, "point file must hold a JSON array of points");
    std::vector<ppoint> pts;
    for (const auto& entry : j) {
        const json* coords = &entry;
        if (entry.is_object()) {
            if (!entry.contains("coords")) {
                fail(errc::parse_error, "point object without 'coords'");
            }
            coords = &entry["coords"];
        }
        if (!coords->is_array() || coords->size() != 4) {
            fail(errc::parse_error, "each point needs exactly 4 coordinates");
        }
        std::array<scalar, 4> c{fld.zero(), fld.zero(), fld.zero(), fld.zero()};
        for (int i = 0; i < 4; ++i) c[i] = scalar_from_json(fld, (*coords)[i]);
        pts.emplace_back(fld, c);
    }
    return pts;
}

struct resolved_surface {
    hpoly F;
    field fld;
    json input_desc;
    std::optional<gallery_build> built;
};

resolved_surface resolve_surface(const surface_opts& o) {
    int given = (!o.poly.empty()) + (!o.poly_file.empty()) + (!o.gallery.empty());
    if (given != 1) {
        fail(errc::parse_error, "give exactly one of --poly, --poly-file, --gallery");
    }
    resolved_surface rs;
    rs.fld = resolve_field(o);
    if (!o.gallery.empty()) {
        auto d = parse_designator(o.gallery);
        gallery_spec gs;
        gs.name = d.name;
        gs.fld = rs.fld;
        gs.seed = o.seed;
        gs.r = d.r;
        if (d.name == gallery_name::prescribed) {
            if (o.points_file.empty()) {
                fail(errc::parse_error, "--gallery prescribed needs --points <file>");
            }
            gs.points = load_points(o.points_file, rs.fld);
        }
        rs.built = build(gs);
        rs.F = rs.built->F;
        rs.fld = rs.built->fld;  // char5_demo pins its own field
        rs.input_desc = json{{"gallery", o.gallery}};
        return rs;
    }
    std::string text = o.poly;
    if (!o.poly_file.empty()) {
        std::ifstream in(o.poly_file);
        if (!in) fail(errc::parse_error, "cannot open '" + o.poly_file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        rs.input_desc = json{{"poly_file", o.poly_file}};
    } else {
        rs.input_desc = json{{"poly", text}};
    }
    rs.F = hpoly::parse(rs.fld, text, 6);
    return rs;
}

void emit(const surface_opts& o, const json& report, const std::string& summary) {
    std::string body = dump_report(report);
    if (!o.out.empty()) {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) fail(errc::parse_error, "cannot write '" + o.out + "'");
        out << body;
    } else {
        std::cout << body;
    }
    std::cerr << summary << "\n";
}

json base_params(const surface_opts& o, const resolved_surface* rs) {
    json p{{"ext_depth", o.ext_depth}, {"guard", guard_of(o)}};
    if (rs) p["input"] = rs->input_desc;
    return p;
}

int run_survey(const surface_opts& o, const char* op) {
    auto rs = resolve_surface(o);
    census_options copt;
    copt.ext_depth = o.ext_depth;
    copt.guard = guard_of(o);
    copt.seed = o.seed;
    copt.certify_b = o.certify_b;
    copt.probe_retries = o.probe_retries;
    json params = base_params(o, &rs);
    if (!o.nodes_file.empty()) {
        copt.supplied_nodes = load_points(o.nodes_file, rs.fld);
        params["nodes_file"] = o.nodes_file;
    }
    params["certify_b"] = o.certify_b;
    auto rep = run_census(rs.F, rs.fld, copt);
    json out = envelope(op, rs.fld, o.seed, params, to_json(rep));
    emit(o, out,
         std::string(op) + ": " + std::to_string(rep.node_count) + " nodes, defect " +
             std::to_string(rep.defect.defect) + ", super_rigid " + rep.super_rigid + ", " +
             std::to_string(rep.fibration_count) + " elliptic fibrations, fano " +
             (rep.fano_model_exists ? "yes" : "no"));
    return 0;
}

int run_defect(const surface_opts& o) {
    field fld;
    std::vector<ppoint> nodes;
    bool synthetic = !o.nodes_file.empty();
    json params;
    if (synthetic) {
        fld = resolve_field(o);
        nodes = load_points(o.nodes_file, fld);
        params = base_params(o, nullptr);
        params["nodes_file"] = o.nodes_file;
    } else {
        auto rs = resolve_surface(o);
        fld = rs.fld;
        auto rec = verify_nodal(rs.F, rs.fld, o.ext_depth, guard_of(o));
        if (!rec.non_nodal.empty()) throw non_nodal_error(std::move(rec));
        nodes = rec.nodes;
        params = base_params(o, &rs);
    }
    auto d = defect_of(fld, nodes, synthetic);
    json result{{"defect", to_json(d)}};
    if (o.position_k > 0) {
        json viol = json::array();
        for (const auto& v : sextic_node_position(nodes, o.position_k)) {
            viol.push_back(to_json(v));
        }
        result["position_violations"] = viol;
        params["position_k"] = o.position_k;
    }
    json rep = envelope("defect", fld, o.seed, params, result);
    emit(o, rep,
         "defect: " + std::to_string(d.node_count) + " points impose " +
             std::to_string(d.independent_conditions) + " conditions, defect " +
             std::to_string(d.defect) + (d.q_factorial ? " (Q-factorial)" : ""));
    return 0;
}

int run_lines(const surface_opts& o) {
    auto rs = resolve_surface(o);
    auto rec = verify_nodal(rs.F, rs.fld, o.ext_depth, guard_of(o));
    if (!rec.non_nodal.empty()) throw non_nodal_error(std::move(rec));
    auto lines = classify_lines(rec);
    json arr = json::array();
    int contained = 0;
    for (const auto& lr : lines) {
        arr.push_back(to_json(lr));
        contained += lr.contained_in_s;
    }
    json result{{"count", lines.size()}, {"lines", arr}};
    json rep = envelope("lines", rs.fld, o.seed, base_params(o, &rs), result);
    emit(o, rep,
         "lines: " + std::to_string(lines.size()) + " through >= 2 of " +
             std::to_string(rec.nodes.size()) + " nodes, " + std::to_string(contained) +
             " on the surface");
    return 0;
}

int run_analyze(const surface_opts& o) { return run_survey(o, "analyze"); }

int run_classify(const surface_opts& o) { return run_survey(o, "classify"); }

int run_gallery(const surface_opts& o) {
    if (o.gallery.empty()) fail(errc::parse_error, "gallery needs --gallery <name>[,r=N]");
    auto rs = resolve_surface(o);
    json params = base_params(o, &rs);
    if (!o.points_file.empty()) params["points_file"] = o.points_file;
    json rep = envelope("gallery", rs.fld, o.seed, params, to_json(*rs.built));
    emit(o, rep,
         "gallery: built '" + o.gallery + "' over " + rs.fld.str() + " (" +
             rs.built->provenance + ")");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic analysis of nodal sextic double solids"};
    app.require_subcommand(1);

    surface_opts o;
    auto* analyze = app.add_subcommand(
        "analyze", "full census: nodality, defect, rigidity, elliptic and Fano models");
    auto* defect = app.add_subcommand(
        "defect", "independent quintic conditions and the Q-factoriality defect");
    auto* lines = app.add_subcommand("lines", "classify all lines through >= 2 nodes");
    auto* classify = app.add_subcommand(
        "classify", "census with an externally supplied node list (see --nodes)");
    auto* gallery = app.add_subcommand("gallery", "build a named surface and print it");

    for (auto* cmd : {analyze, defect, lines, classify, gallery}) {
        add_input_flags(cmd, o);
        cmd->add_option("--ext-depth", o.ext_depth, "extension depth of the singular scan");
    }
    defect->add_option("--nodes", o.nodes_file,
                       "JSON point list: defect of these points, no surface scan");
    defect->add_option("--position", o.position_k,
                       "also check the no-(5k+1)-points-on-a-degree-k-curve condition");
    classify->add_option("--nodes", o.nodes_file,
                         "JSON point list: trust these nodes instead of scanning");
    for (auto* cmd : {analyze, classify}) {
        cmd->add_flag("--certify-b", o.certify_b,
                      "probe each four-node line for a smooth elliptic fiber");
        cmd->add_option("--retries", o.probe_retries, "probe attempts per four-node line");
    }
    for (auto* cmd : {gallery, classify, defect, analyze, lines}) {
        cmd->add_option("--points", o.points_file,
                        "JSON point list for the prescribed-node constructor");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(o);
        if (defect->parsed()) return run_defect(o);
        if (lines->parsed()) return run_lines(o);
        if (classify->parsed()) return run_classify(o);
        if (gallery->parsed()) return run_gallery(o);
    } catch (const non_nodal_error& e) {
        emit(o, error_json(e), std::string("error: ") + e.what());
        return 2;
    } catch (const error& e) {
        emit(o, error_json(e), std::string("error: ") + e.what());
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
