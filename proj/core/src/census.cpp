#include "sdsolid/census.hpp"

#include <algorithm>

#include "sdsolid/rng.hpp"

namespace sds {

namespace {

std::string non_nodal_summary(const nodal_surface_record& rec) {
    std::string msg = std::to_string(rec.non_nodal.size()) + " of " +
                      std::to_string(rec.nodes.size() + rec.non_nodal.size()) +
                      " singular points fail the rank-3 Hessian test:";
    std::size_t shown = 0;
    for (const auto& p : rec.non_nodal) {
        if (shown++ == 4) {
            msg += " ...";
            break;
        }
        msg += " " + p.str();
    }
    return msg;
}

}  // namespace

non_nodal_error::non_nodal_error(nodal_surface_record rec)
    : error(errc::non_nodal_surface, non_nodal_summary(rec)), rec_(std::move(rec)) {}

census_report run_census(const hpoly& F, const field& fld, const census_options& opts) {
    if (fld.is_finite() && fld.p() <= 5) {
        fail(errc::bad_characteristic,
             "the node test needs characteristic > 5 (char " + std::to_string(fld.p()) + ")");
    }
    if (F.is_zero() || F.degree() != 6) {
        fail(errc::unsupported, "the census takes a nonzero sextic");
    }

    census_report rep;
    rep.fld = fld;
    rep.seed = opts.seed;

    if (!opts.supplied_nodes.empty()) {
        rep.nodes_supplied = true;
        nodal_surface_record rec;
        rec.F = F;
        rec.fld = fld;
        rec.extension_depth = 0;
        for (const auto& p : opts.supplied_nodes) {
            for (int v = 0; v < 4; ++v) {
                if (!F.partial(v).evaluate(p.coords()).is_zero()) {
                    fail(errc::not_singular, "supplied point " + p.str() + " is not singular");
                }
            }
            (is_node(F, p) ? rec.nodes : rec.non_nodal).push_back(p);
        }
        if (!rec.non_nodal.empty()) throw non_nodal_error(std::move(rec));
        rep.nodes = rec.nodes;
        std::sort(rep.nodes.begin(), rep.nodes.end());
        rep.nodes.erase(std::unique(rep.nodes.begin(), rep.nodes.end()), rep.nodes.end());
    } else {
        if (!fld.is_finite()) {
            fail(errc::rational_sampling_unsupported,
                 "no exhaustive singular scan exists over the rationals; supply the node list");
        }
        auto rec = verify_nodal(F, fld, opts.ext_depth, opts.guard);
        if (!rec.non_nodal.empty()) throw non_nodal_error(std::move(rec));
        rep.nodes = rec.nodes;
        rep.per_degree = rec.per_degree;
        rep.stabilized = rec.stabilized;
    }
    rep.node_count = static_cast<int>(rep.nodes.size());

    rep.defect = defect_of(fld, rep.nodes, rep.nodes_supplied);
    rep.q_factorial = (rep.defect.defect == 0);
    rep.q_factorial_rule = "defect-zero-q-factorial";

    if (rep.nodes_supplied) {
        rep.super_rigid = "no-verdict";
    } else {
        rep.super_rigid = rep.q_factorial ? "yes" : "hypothesis-failed";
    }
    rep.non_rational = rep.no_conic_bundle = (rep.super_rigid == "yes");

    nodal_surface_record lrec;
    lrec.F = F;
    lrec.fld = fld;
    lrec.nodes = rep.nodes;
    rep.lines = classify_lines(lrec);

    for (const auto& n : rep.nodes) {
        census_model m;
        m.kind = "A";
        m.rule = "node-projection";
        m.node = n;
        rep.models.push_back(std::move(m));
    }

    rng prng(opts.seed);
    int four_node_lines = 0;
    for (const auto& lr : rep.lines) {
        if (lr.contained_in_s && lr.node_count == 5) rep.fano_lines.push_back(lr);
        if (!(lr.contained_in_s && lr.node_count == 4)) continue;
        ++four_node_lines;
        census_model m;
        m.kind = "B";
        m.rule = "four-node-line-residual";
        m.base = lr;
        if (opts.certify_b) {
            m.certification = "probe-inconclusive";
            const field& lf = lr.ln.point_a().fld();
            hpoly FL = lift(F, lf);
            for (int t = 0; t < opts.probe_retries; ++t) {
                std::array<scalar, 4> c{lf.sample(prng), lf.sample(prng), lf.sample(prng),
                                        lf.sample(prng)};
                if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero()) {
                    continue;
                }
                ppoint p(lf, c);
                if (lr.ln.contains(p)) continue;
                try {
                    if (construction_b_probe(FL, lr.ln, p).fiber_elliptic) {
                        m.certification = "probe-elliptic";
                        break;
                    }
                } catch (const error& e) {
                    if (e.code() != errc::no_smooth_residual_point) throw;
                }
            }
            if (m.certification != "probe-elliptic") {
                rep.caveats.push_back("a four-node line stayed probe-inconclusive after " +
                                      std::to_string(opts.probe_retries) + " samples");
            }
        }
        rep.models.push_back(std::move(m));
    }
    rep.fano_model_exists = !rep.fano_lines.empty();
    rep.fibration_count = rep.node_count + four_node_lines;

    if (rep.nodes_supplied) {
        rep.classification_scope =
            "node list supplied externally: per-point certification only, no completeness "
            "scan, so rigidity and census verdicts are withheld";
    } else if (rep.q_factorial) {
        rep.classification_scope =
            "complete for this surface: defect 0 certifies Q-factoriality, so the double "
            "solid is birationally super-rigid, non-rational, admits no conic bundle, and "
            "its elliptic and Fano models are exactly the ones listed";
    } else {
        rep.classification_scope =
            "positive defect leaves Q-factoriality uncertified, so the rigidity theorem "
            "does not apply and the listed models are candidates, not a classification";
    }

    if (fld.is_finite()) {
        rep.caveats.push_back(
            "rank computed over " + fld.str() +
            " bounds the characteristic-0 rank from below, so the reported defect is an "
            "upper bound; defect 0 is a Q-factoriality certificate");
        if (fld.p() > 5) {
            rep.caveats.push_back("node certification is exact in characteristic > 5");
        }
    } else {
        rep.caveats.push_back("defect computed exactly over the rationals");
    }
    if (!rep.nodes_supplied && !rep.stabilized) {
        rep.caveats.push_back(
            "the singular scan did not stabilize at extension depth " +
            std::to_string(opts.ext_depth) +
            "; points of higher degree may be missing — raise the depth to re-check");
    }
    if (rep.nodes_supplied) {
        rep.caveats.push_back("supplied nodes certified individually; completeness not checked");
    }
    return rep;
}

std::vector<std::string> defect_bound_audit(const census_report& rep) {
    std::vector<std::string> bad;
    auto flag = [&](const std::string& s) { bad.push_back(s); };

    int n = rep.node_count;
    const defect_report& d = rep.defect;
    if (n != static_cast<int>(rep.nodes.size())) flag("node_count disagrees with the node list");
    if (d.node_count != n) flag("defect report counts a different node set");
    if (d.defect != d.node_count - d.independent_conditions) {
        flag("defect != node_count - independent_conditions");
    }
    if (d.independent_conditions < 0 || d.independent_conditions > 56) {
        flag("independent quintic conditions must lie in [0, 56]");
    }
    if (d.defect < 0) flag("negative defect");
    if (n <= 14 && d.defect != 0) {
        flag("a node set of size <= 14 imposes independent conditions, defect must be 0 (got " +
             std::to_string(d.defect) + " for " + std::to_string(n) + " nodes)");
    }
    if (n >= 57 && d.defect == 0) {
        flag("57 or more nodes exceed the 56 quintic conditions, defect must be positive");
    }
    if (n > 65) flag("a nodal sextic surface carries at most 65 nodes");

    if (rep.q_factorial != (d.defect == 0)) flag("q_factorial flag disagrees with the defect");
    if (rep.super_rigid == "yes" && d.defect != 0) flag("super_rigid yes needs defect 0");
    if (rep.super_rigid == "yes" && rep.nodes_supplied) {
        flag("super_rigid yes needs a completed scan, not a supplied node list");
    }
    if (rep.non_rational != (rep.super_rigid == "yes") ||
        rep.no_conic_bundle != (rep.super_rigid == "yes")) {
        flag("non_rational / no_conic_bundle must follow super_rigid");
    }

    int a_models = 0, b_models = 0, four = 0, five = 0;
    for (const auto& m : rep.models) {
        if (m.kind == "A") ++a_models;
        if (m.kind == "B") ++b_models;
    }
    for (const auto& lr : rep.lines) {
        if (lr.node_count >= 4 && !lr.contained_in_s) {
            flag("a line through 4 or more nodes must lie on the branch surface");
        }
        if (lr.node_count > 5) flag("a line cannot carry more than 5 nodes");
        if (lr.contained_in_s && lr.node_count == 4) ++four;
        if (lr.contained_in_s && lr.node_count == 5) ++five;
    }
    if (a_models != n) flag("one projection model per node expected");
    if (b_models != four) flag("one residual model per four-node line expected");
    if (rep.fibration_count != n + four) {
        flag("fibration_count must equal node_count + four-node lines");
    }
    if (static_cast<int>(rep.fano_lines.size()) != five) {
        flag("fano_lines must list exactly the contained five-node lines");
    }
    if (rep.fano_model_exists != !rep.fano_lines.empty()) {
        flag("fano_model_exists flag disagrees with fano_lines");
    }
    return bad;
}

}  // namespace sds
