#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>

#include "sdsolid/census.hpp"
#include "sdsolid/gallery.hpp"
#include "sdsolid/report_json.hpp"

using namespace sds;

TEST_CASE("scalars serialize exactly: digit arrays and rational strings") {
    field f = field::finite(11, 2);
    json j = to_json(f.from_code(37));
    CHECK(j == json::array({4, 3}));

    field q = field::rationals();
    CHECK(to_json(q.from_rat(rat("3/4"))) == json("3/4"));
    CHECK(to_json(q.from_int(-2)) == json("-2"));
}

TEST_CASE("fields and points carry their full description") {
    field f = field::finite(11, 2);
    json jf = to_json(f);
    CHECK(jf["kind"] == "finite");
    CHECK(jf["p"] == 11);
    CHECK(jf["k"] == 2);
    CHECK(jf["q"] == 121);
    CHECK(jf["modulus"] == json::array({1, 0, 1}));
    CHECK(to_json(field::rationals()) == json{{"kind", "rational"}});

    ppoint p(f, {f.zero(), f.one(), f.from_code(13), f.from_int(3)});
    json jp = to_json(p);
    CHECK(jp["coords"].size() == 4);
    CHECK(jp["field"]["q"] == 121);
}

TEST_CASE("envelope carries version, operation, and parameters") {
    field f = field::finite(101);
    json rep = envelope("defect", f, 7, json{{"guard", 1}}, json{{"x", 1}});
    CHECK(rep["version"] == toolkit_version);
    CHECK(rep["operation"] == "defect");
    CHECK(rep["seed"] == 7);
    CHECK(rep["parameters"]["guard"] == 1);
    CHECK(rep["result"]["x"] == 1);
    CHECK(rep["field"]["p"] == 101);
}

TEST_CASE("census reports serialize deterministically with stable keys") {
    field f = field::finite(11);
    gallery_spec gs;
    gs.name = gallery_name::barth;
    gs.fld = f;
    auto b = build(gs);
    auto rep = run_census(b.F, f);
    json j = to_json(rep);
    for (const char* key :
         {"field", "seed", "node_count", "nodes", "scan_counts", "scan_stabilized",
          "nodes_supplied", "defect", "q_factorial", "q_factorial_rule", "super_rigid",
          "non_rational", "no_conic_bundle", "lines", "models", "fano_lines",
          "fano_model_exists", "fibration_count", "classification_scope", "caveats"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["node_count"] == 65);
    CHECK(j["models"].size() == 65);
    CHECK(j["models"][0]["kind"] == "A");
    CHECK(j["defect"]["independent_conditions"] == 52);
    CHECK(dump_report(j) == dump_report(to_json(run_census(b.F, f))));
    CHECK(dump_report(j).back() == '\n');
    // No floating point anywhere in a report.
    std::function<void(const json&)> no_floats = [&](const json& v) {
        CHECK(!v.is_number_float());
        if (v.is_object() || v.is_array()) {
            for (const auto& child : v) no_floats(child);
        }
    };
    no_floats(j);
}

TEST_CASE("errors serialize with code, message, and optional record") {
    field f = suitable_field(gallery_name::jihun2);
    gallery_spec gs;
    gs.name = gallery_name::jihun2;
    gs.fld = f;
    auto b = build(gs);
    try {
        run_census(b.F, f);
        FAIL("expected a throw");
    } catch (const non_nodal_error& e) {
        json j = error_json(e);
        CHECK(j["version"] == toolkit_version);
        CHECK(j["error"]["code"] == "NonNodalSurface");
        std::string msg = j["error"]["message"];
        CHECK(msg.rfind("NonNodalSurface:", 0) != 0);  // prefix stripped
        CHECK(j["error"]["record"]["non_nodal"].size() == 5);
        CHECK(j["error"]["record"]["nodes"].empty());
    }

    error plain(errc::parse_error, "bad token");
    json j = error_json(plain);
    CHECK(j["error"]["code"] == "ParseError");
    CHECK(j["error"]["message"] == "bad token");
    CHECK(!j["error"].contains("record"));
}

TEST_CASE("gallery builds serialize their provenance and surface") {
    gallery_spec gs;
    gs.name = gallery_name::family_r;
    gs.fld = field::finite(101);
    gs.r = 2;
    gs.seed = 7;
    auto b = build(gs);
    json j = to_json(b);
    CHECK(j["seed"] == 7);
    CHECK(j["intended_nodes"].size() == 24);
    CHECK(j["surface"]["degree"] == 6);
    CHECK(j["surface"]["terms"].size() == b.F.terms().size());
    CHECK(std::string(j["provenance"]).find("24 prescribed nodes verified") !=
          std::string::npos);
}
