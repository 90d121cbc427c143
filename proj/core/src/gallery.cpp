#include "sdsolid/gallery.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "sdsolid/errors.hpp"
#include "sdsolid/linalg.hpp"
#include "sdsolid/rng.hpp"
#include "sdsolid/singular.hpp"

namespace sds {

namespace {

std::array<scalar, 4> combo(const std::array<scalar, 4>& a, const std::array<scalar, 4>& b,
                            const scalar& s, const scalar& t) {
    return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2], s * a[3] + t * b[3]};
}

scalar dot4(const std::array<scalar, 4>& u, const std::array<scalar, 4>& v) {
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3];
}

// three spanning points of the plane {dual . x = 0}
std::vector<std::array<scalar, 4>> plane_basis(const field& fld,
                                               const std::array<scalar, 4>& dual) {
    smat row{{dual[0], dual[1], dual[2], dual[3]}};
    auto ker = kernel_basis(row, fld, 4);
    if (ker.size() != 3) fail(errc::degenerate_plane, "zero dual vector");
    std::vector<std::array<scalar, 4>> out;
    for (const auto& v : ker) out.push_back({v[0], v[1], v[2], v[3]});
    return out;
}

// rational points of {curve = 0} on the plane spanned by basis, in canonical
// chart order of the plane coordinates
std::vector<ppoint> plane_curve_points(const hpoly& curve, const field& fld,
                                       const std::vector<std::array<scalar, 4>>& basis) {
    std::vector<ppoint> out;
    std::uint64_t q = fld.q();
    std::vector<scalar> elems;
    elems.reserve(q);
    for (std::uint64_t c = 0; c < q; ++c) elems.push_back(fld.from_code(c));
    auto try_point = [&](const scalar& al, const scalar& be, const scalar& ga) {
        std::array<scalar, 4> pt = combo(basis[0], basis[1], al, be);
        for (int i = 0; i < 4; ++i) pt[i] = pt[i] + ga * basis[2][i];
        if (curve.evaluate(pt).is_zero()) out.emplace_back(fld, pt);
    };
    for (std::uint64_t b = 0; b < q; ++b) {
        for (std::uint64_t c = 0; c < q; ++c) try_point(fld.one(), elems[b], elems[c]);
    }
    for (std::uint64_t c = 0; c < q; ++c) try_point(fld.zero(), fld.one(), elems[c]);
    try_point(fld.zero(), fld.zero(), fld.one());
    return out;
}

// one evaluation row per point over the degree-d monomial basis
smat point_rows(const std::vector<ppoint>& pts, int degree) {
    smat rows;
    if (pts.empty()) return rows;
    const field& fld = pts.front().fld();
    auto monos = monomials_of_degree(degree);
    for (const auto& p : pts) {
        std::array<std::vector<scalar>, 4> pow;
        for (int v = 0; v < 4; ++v) {
            pow[v].assign(degree + 1, fld.one());
            for (int e = 1; e <= degree; ++e) pow[v][e] = pow[v][e - 1] * p.coords()[v];
        }
        std::vector<scalar> row;
        row.reserve(monos.size());
        for (const auto& m : monos) {
            row.push_back(pow[0][m.e[0]] * pow[1][m.e[1]] * pow[2][m.e[2]] * pow[3][m.e[3]]);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// four gradient rows per point over the sextic monomial basis
smat gradient_rows(const std::vector<ppoint>& pts, const field& fld) {
    smat rows;
    auto monos = monomials_of_degree(6);
    for (const auto& p : pts) {
        std::array<std::vector<scalar>, 4> pow;
        for (int v = 0; v < 4; ++v) {
            pow[v].assign(7, fld.one());
            for (int e = 1; e <= 6; ++e) pow[v][e] = pow[v][e - 1] * p.coords()[v];
        }
        for (int v = 0; v < 4; ++v) {
            std::vector<scalar> row;
            row.reserve(monos.size());
            for (const auto& m : monos) {
                if (m.e[v] == 0) {
                    row.push_back(fld.zero());
                    continue;
                }
                scalar val = fld.from_int(m.e[v]);
                for (int u = 0; u < 4; ++u) {
                    int e = (u == v) ? m.e[u] - 1 : m.e[u];
                    val = val * pow[u][e];
                }
                row.push_back(val);
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// pseudorandom element of the solution space of rows . coeffs = 0, as a
// degree-d form; the kernel basis order is fixed by the echelon form, so the
// draw is reproducible
hpoly sample_kernel_form(const field& fld, int degree, const smat& rows, int ncols, rng& r) {
    auto basis = kernel_basis(rows, fld, ncols);
    if (basis.empty()) fail(errc::no_nodal_member, "vanishing conditions admit only zero");
    auto monos = monomials_of_degree(degree);
    for (int guard = 0; guard < 64; ++guard) {
        std::vector<scalar> coeff(ncols, fld.zero());
        for (const auto& v : basis) {
            scalar c = fld.sample(r);
            for (int j = 0; j < ncols; ++j) coeff[j] = coeff[j] + c * v[j];
        }
        std::vector<std::pair<exp4, scalar>> terms;
        for (int j = 0; j < ncols; ++j) {
            if (!coeff[j].is_zero()) terms.emplace_back(monos[j], coeff[j]);
        }
        if (!terms.empty()) return hpoly::from_terms(fld, degree, std::move(terms));
    }
    fail(errc::no_nodal_member, "kernel sampling kept drawing zero");
}

hpoly random_form(const field& fld, int degree, rng& r) {
    auto monos = monomials_of_degree(degree);
    for (int guard = 0; guard < 64; ++guard) {
        std::vector<std::pair<exp4, scalar>> terms;
        for (const auto& m : monos) {
            scalar c = fld.sample(r);
            if (!c.is_zero()) terms.emplace_back(m, c);
        }
        if (!terms.empty()) return hpoly::from_terms(fld, degree, std::move(terms));
    }
    fail(errc::no_nodal_member, "random form sampling kept drawing zero");
}

bool singular_locus_is_exactly(const hpoly& F, const field& fld,
                               const std::vector<ppoint>& pts) {
    if (F.is_zero()) return false;
    auto rec = verify_nodal(F, fld, 1);
    if (!rec.non_nodal.empty() || rec.nodes.size() != pts.size()) return false;
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    return rec.nodes == sorted;
}

hpoly barth_sextic(const field& fld) {
    auto root5 = fld.from_int(5).sqrt();
    if (!root5) fail(errc::sqrt_unavailable, "sqrt(5) does not exist over " + fld.str());
    scalar tau = (fld.one() + *root5) * fld.from_int(2).inv();
    scalar t2 = tau * tau;
    auto band = [&](const char* lead, const char* trail) {
        return hpoly::parse(fld, lead, 2).scaled(t2) - hpoly::parse(fld, trail, 2);
    };
    hpoly a = band("x^2", "y^2");
    hpoly b = band("y^2", "z^2");
    hpoly c = band("z^2", "x^2");
    hpoly d = hpoly::parse(fld, "x^2 + y^2 + z^2 - w^2", 2);
    hpoly w2 = hpoly::parse(fld, "w^2", 2);
    return (a * b * c).scaled(fld.from_int(4)) - (d * d * w2).scaled(fld.one() + tau + tau);
}

hpoly jihun1_sextic(const field& fld) {
    return hpoly::parse(fld, "x^6 + x y^5 + y^6", 6) +
           hpoly::parse(fld, "x + y", 1) * hpoly::parse(fld, "z^5 - 2 z w^4", 5) +
           hpoly::parse(fld, "y", 1) * hpoly::parse(fld, "z^4 - 2 w^4", 4) *
               hpoly::parse(fld, "z - 3 w", 1);
}

hpoly jihun2_sextic(const field& fld) {
    return hpoly::parse(fld, "x^6 + x y^5 + y^6", 6) +
           hpoly::parse(fld, "x + y", 1) * hpoly::parse(fld, "z^5 - z w^4", 5);
}

hpoly char5_sextic(const field& fld) {
    return hpoly::parse(fld,
                        "x^5 y + x^4 y^2 + x^2 y^3 z - y^5 z - 2 x^4 z^2 + x z^5 + y z^5 "
                        "+ x^3 y^2 w + 2 x^2 y^3 w - x y z^3 w - x y z^2 w^2 - x^2 y w^3 "
                        "+ x y^2 w^3 + x^2 z w^3 + x y w^4 + x w^5 + 2 y w^5",
                        6);
}

// ---- nodal family constructors -------------------------------------------
//
// All three build g3^2 + h_r f_{6-r} whose singular locus is the triple
// intersection {g3 = h_r = f_{6-r} = 0}. Generic forms leave most of those
// points irrational, so each constructor prescribes a rational intersection
// set whose divisor class on the curve {g3 = h_r = 0} is cut by a degree-
// (6-r) form, then fits f_{6-r} through it and verifies the singular locus.

struct family_candidate {
    hpoly g3, h, f;
    std::vector<ppoint> nodes;
};

// r = 1: nodes = plane cubic C = {h1 = g3 = 0} cut by a quintic. Five
// secant-line triples of rational C-points sum to the class of a plane
// quintic section, and the third point of a secant through two rational
// points is rational for free.
bool family1_candidate(const field& fld, rng& r, family_candidate& out) {
    std::array<scalar, 4> dual{fld.sample(r), fld.sample(r), fld.sample(r), fld.sample(r)};
    if (dual[0].is_zero() && dual[1].is_zero() && dual[2].is_zero() && dual[3].is_zero()) {
        return false;
    }
    std::vector<std::pair<exp4, scalar>> lin;
    exp4 vars[4] = {exp4{{1, 0, 0, 0}}, exp4{{0, 1, 0, 0}}, exp4{{0, 0, 1, 0}},
                    exp4{{0, 0, 0, 1}}};
    for (int v = 0; v < 4; ++v) {
        if (!dual[v].is_zero()) lin.emplace_back(vars[v], dual[v]);
    }
    hpoly h1 = hpoly::from_terms(fld, 1, lin);
    hpoly g3 = random_form(fld, 3, r);
    auto basis = plane_basis(fld, dual);
    if (g3.restrict_to_plane(basis[0], basis[1], basis[2]).is_zero()) return false;
    auto cpts = plane_curve_points(g3, fld, basis);
    if (cpts.size() < 24) return false;

    std::vector<ppoint> chosen;
    for (int t = 0; t < 5; ++t) {
        bool found = false;
        for (int draw = 0; draw < 40 && !found; ++draw) {
            const ppoint& pa = cpts[r.below(cpts.size())];
            const ppoint& pb = cpts[r.below(cpts.size())];
            if (pa == pb) continue;
            if (std::count(chosen.begin(), chosen.end(), pa) ||
                std::count(chosen.begin(), chosen.end(), pb)) {
                continue;
            }
            bform cub = g3.restrict_to_line(pa.coords(), pb.coords());
            if (cub.is_zero() || cub.degree() != 3) continue;
            // pa sits at (1:0) and pb at (0:1); the leftover linear factor is
            // the third intersection point of the secant with the cubic
            if (cub.root_multiplicity(fld.one(), fld.zero()) != 1) continue;
            if (cub.root_multiplicity(fld.zero(), fld.one()) != 1) continue;
            bform lin_rest =
                cub.divide_root(fld.one(), fld.zero()).divide_root(fld.zero(), fld.one());
            auto roots = lin_rest.roots();
            if (roots.size() != 1) continue;
            ppoint pc(fld, combo(pa.coords(), pb.coords(), roots[0].first[0],
                                 roots[0].first[1]));
            if (pc == pa || pc == pb || std::count(chosen.begin(), chosen.end(), pc)) continue;
            chosen.push_back(pa);
            chosen.push_back(pb);
            chosen.push_back(pc);
            found = true;
        }
        if (!found) return false;
    }

    hpoly f5 = sample_kernel_form(fld, 5, point_rows(chosen, 5), 56, r);
    out = {g3, h1, f5, chosen};
    return true;
}

// r = 2: nodes = sextic curve C = {g3 = 0} on the quadric {xw = yz} cut by a
// quartic. Four ruling lines of each family whose restricted cubic splits
// give 24 rational points in the class of a quadric-quartic section.
bool family2_candidate(const field& fld, rng& r, family_candidate& out) {
    hpoly h2 = hpoly::parse(fld, "x w - y z", 2);
    hpoly g3 = random_form(fld, 3, r);
    std::vector<ppoint> chosen;
    std::set<std::pair<std::uint64_t, std::uint64_t>> used;

    for (int ruling = 0; ruling < 2; ++ruling) {
        int lines = 0;
        for (int draw = 0; draw < 200 && lines < 4; ++draw) {
            scalar a = fld.sample(r), b = fld.sample(r);
            if (a.is_zero() && b.is_zero()) continue;
            std::pair<std::uint64_t, std::uint64_t> key =
                a.is_zero() ? std::make_pair(std::uint64_t(0), std::uint64_t(1))
                            : std::make_pair(std::uint64_t(1), (b * a.inv()).code());
            if (!used.insert({key.first + 2 * ruling, key.second}).second) continue;
            std::array<scalar, 4> pa, pb;
            if (ruling == 0) {
                pa = {a, fld.zero(), b, fld.zero()};
                pb = {fld.zero(), a, fld.zero(), b};
            } else {
                pa = {a, b, fld.zero(), fld.zero()};
                pb = {fld.zero(), fld.zero(), a, b};
            }
            bform cub = g3.restrict_to_line(pa, pb);
            if (cub.is_zero() || cub.degree() != 3) continue;
            auto roots = cub.roots();
            if (roots.size() != 3) continue;  // three distinct rational roots
            std::vector<ppoint> pts;
            bool fresh = true;
            for (const auto& [st, mult] : roots) {
                if (mult != 1) fresh = false;
                ppoint p(fld, combo(pa, pb, st[0], st[1]));
                if (std::count(chosen.begin(), chosen.end(), p)) fresh = false;
                pts.push_back(p);
            }
            if (!fresh) continue;
            chosen.insert(chosen.end(), pts.begin(), pts.end());
            ++lines;
        }
        if (lines < 4) return false;
    }

    hpoly f4 = sample_kernel_form(fld, 4, point_rows(chosen, 4), 35, r);
    out = {g3, h2, f4, chosen};
    return true;
}

// r = 3: nodes = {h3 = f3 = 0} (degree-9 curve) met with three planes
// {g3 = l1 l2 l3 = 0}. Cubics vanishing on all of {g3 = h3 = 0} form the
// trivial pencil <g3, h3>, so prescribing a full 18 points (6 per plane)
// leaves only that pencil and the fit degenerates. Prescribing 17 (6, 6, 5)
// keeps one honest cubic in the kernel; a draw is kept when its residual
// intersection points (3, 3, 4 per plane) all land on listed rational
// points of the plane cubics.
struct family3_state {
    hpoly g3, h3;
    std::vector<std::vector<ppoint>> dpts;  // rational plane-cubic points per plane
};

bool family3_setup(const field& fld, rng& r, family3_state& st) {
    std::array<std::array<scalar, 4>, 3> duals;
    smat span;
    for (auto& d : duals) {
        d = {fld.sample(r), fld.sample(r), fld.sample(r), fld.sample(r)};
        span.push_back({d[0], d[1], d[2], d[3]});
    }
    if (rank_of(span) != 3) return false;
    hpoly g3;
    exp4 vars[4] = {exp4{{1, 0, 0, 0}}, exp4{{0, 1, 0, 0}}, exp4{{0, 0, 1, 0}},
                    exp4{{0, 0, 0, 1}}};
    bool first = true;
    for (const auto& d : duals) {
        std::vector<std::pair<exp4, scalar>> lin;
        for (int v = 0; v < 4; ++v) {
            if (!d[v].is_zero()) lin.emplace_back(vars[v], d[v]);
        }
        hpoly l = hpoly::from_terms(fld, 1, lin);
        g3 = first ? l : g3 * l;
        first = false;
    }
    st.g3 = g3;
    st.h3 = random_form(fld, 3, r);
    st.dpts.clear();
    for (int i = 0; i < 3; ++i) {
        auto basis = plane_basis(fld, duals[i]);
        if (st.h3.restrict_to_plane(basis[0], basis[1], basis[2]).is_zero()) return false;
        auto pts = plane_curve_points(st.h3, fld, basis);
        std::vector<ppoint> keep;
        for (const auto& p : pts) {
            bool off_others = true;
            for (int j = 0; j < 3; ++j) {
                if (j != i && dot4(duals[j], p.coords()).is_zero()) off_others = false;
            }
            if (off_others) keep.push_back(p);
        }
        if (keep.size() < 12) return false;
        st.dpts.push_back(std::move(keep));
    }
    return true;
}

bool family3_candidate(const field& fld, rng& r, const family3_state& st,
                       family_candidate& out) {
    std::vector<ppoint> prescribed;
    const std::size_t want[3] = {6, 6, 5};
    for (int i = 0; i < 3; ++i) {
        const auto& dp = st.dpts[i];
        std::set<std::size_t> idx;
        for (int guard = 0; guard < 200 && idx.size() < want[i]; ++guard) {
            idx.insert(r.below(dp.size()));
        }
        if (idx.size() < want[i]) return false;
        for (std::size_t j : idx) prescribed.push_back(dp[j]);
    }
    hpoly f3 = sample_kernel_form(fld, 3, point_rows(prescribed, 3), 20, r);
    std::vector<ppoint> nodes;
    for (const auto& dp : st.dpts) {
        std::vector<ppoint> zeros;
        for (const auto& p : dp) {
            if (f3.evaluate(p.coords()).is_zero()) zeros.push_back(p);
        }
        // a plane section of {f3 = h3 = 0} has degree 9: nine distinct
        // rational zeros mean the three residual points are rational too
        if (zeros.size() != 9) return false;
        nodes.insert(nodes.end(), zeros.begin(), zeros.end());
    }
    out = {st.g3, st.h3, f3, nodes};
    return true;
}

hpoly family_build(const field& fld, int rdeg, std::uint64_t seed, bool verbatim_sign,
                   std::string& note, std::vector<ppoint>& nodes) {
    if (rdeg < 1 || rdeg > 3) fail(errc::k_out_of_range, "family parameter r must be 1, 2, or 3");
    rng r(seed);
    const int outer_cap = (rdeg == 3) ? 10 : 60;
    const int inner_cap = (rdeg == 3) ? 6000 : 1;
    for (int attempt = 0; attempt < outer_cap; ++attempt) {
        family3_state st3;
        if (rdeg == 3 && !family3_setup(fld, r, st3)) continue;
        for (int inner = 0; inner < inner_cap; ++inner) {
            family_candidate cand;
            bool got = (rdeg == 1)   ? family1_candidate(fld, r, cand)
                       : (rdeg == 2) ? family2_candidate(fld, r, cand)
                                     : family3_candidate(fld, r, st3, cand);
            if (!got) continue;
            hpoly F = verbatim_sign
                          ? cand.g3 * cand.g3 - (cand.h * cand.f).scaled(fld.from_int(4))
                          : cand.g3 * cand.g3 + cand.h * cand.f;
            if (!singular_locus_is_exactly(F, fld, cand.nodes)) continue;
            note = "attempt " + std::to_string(attempt * inner_cap + inner + 1) + ", " +
                   std::to_string(cand.nodes.size()) + " prescribed nodes verified";
            nodes = cand.nodes;
            std::sort(nodes.begin(), nodes.end());
            return F;
        }
    }
    fail(errc::no_nodal_member, "no verified family member within the retry cap");
}

}  // namespace

const char* gallery_name_str(gallery_name n) {
    switch (n) {
        case gallery_name::barth: return "barth";
        case gallery_name::family_r: return "family_r";
        case gallery_name::quartic_node: return "quartic_node";
        case gallery_name::bidegree23: return "bidegree23";
        case gallery_name::jihun1: return "jihun1";
        case gallery_name::jihun2: return "jihun2";
        case gallery_name::char5_demo: return "char5_demo";
        case gallery_name::prescribed: return "prescribed";
    }
    return "?";
}

gallery_name parse_gallery_name(const std::string& text) {
    static const std::pair<const char*, gallery_name> table[] = {
        {"barth", gallery_name::barth},         {"family_r", gallery_name::family_r},
        {"family", gallery_name::family_r},     {"quartic_node", gallery_name::quartic_node},
        {"bidegree23", gallery_name::bidegree23}, {"jihun1", gallery_name::jihun1},
        {"jihun2", gallery_name::jihun2},       {"char5_demo", gallery_name::char5_demo},
        {"prescribed", gallery_name::prescribed},
    };
    for (const auto& [key, val] : table) {
        if (text == key) return val;
    }
    fail(errc::parse_error, "unknown gallery name '" + text + "'");
}

hpoly prescribed_nodes(const std::vector<ppoint>& points, const field& fld,
                       std::uint64_t seed) {
    if (points.size() > 20) {
        fail(errc::too_many_points, "at most 20 prescribed nodes supported");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!(points[i].fld().is_finite() == fld.is_finite() &&
              (!fld.is_finite() ||
               (points[i].fld().p() == fld.p() && points[i].fld().k() == fld.k())))) {
            fail(errc::field_mismatch, "prescribed point over a different field");
        }
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                fail(errc::identical_points, "prescribed points must be pairwise distinct");
            }
        }
    }
    rng r(seed);
    smat rows = gradient_rows(points, fld);
    for (int attempt = 0; attempt < 16; ++attempt) {
        hpoly F = sample_kernel_form(fld, 6, rows, 84, r);
        if (singular_locus_is_exactly(F, fld, points)) return F;
    }
    fail(errc::no_nodal_member, "no member of the linear system verified within the cap");
}

gallery_build build(const gallery_spec& spec) {
    gallery_build out;
    out.seed = spec.seed;
    out.fld = spec.fld;
    switch (spec.name) {
        case gallery_name::barth: {
            out.F = barth_sextic(spec.fld);
            out.provenance = "icosahedral sextic, tau = (1 + sqrt(5))/2 with sqrt(5) = " +
                             spec.fld.from_int(5).sqrt()->str();
            break;
        }
        case gallery_name::jihun1: {
            out.F = jihun1_sextic(spec.fld);
            out.provenance = "four collinear double points on x = y = 0, z^4 = 2 w^4";
            break;
        }
        case gallery_name::jihun2: {
            out.F = jihun2_sextic(spec.fld);
            out.provenance = "five collinear double points on x = y = 0, z (z^4 - w^4) = 0";
            break;
        }
        case gallery_name::char5_demo: {
            field f5 = spec.fld;
            if (!f5.is_finite()) {
                f5 = field::finite_unchecked(5, 1);
            } else if (f5.p() != 5) {
                fail(errc::wrong_characteristic, "the demo sextic is pinned to characteristic 5");
            }
            out.fld = f5;
            out.F = char5_sextic(f5);
            out.provenance = "smooth sextic over F_5 with the totally tangent line x = y = 0";
            break;
        }
        case gallery_name::family_r: {
            std::string note;
            out.F = family_build(spec.fld, spec.r, spec.seed, false, note, out.intended_nodes);
            out.provenance = "g3^2 + h" + std::to_string(spec.r) + " f" +
                             std::to_string(6 - spec.r) + ", " + note;
            break;
        }
        case gallery_name::quartic_node: {
            std::string note;
            out.F = family_build(spec.fld, 2, spec.seed, true, note, out.intended_nodes);
            out.provenance = "f3^2 - 4 f2 f4 projected quartic shape, " + note;
            break;
        }
        case gallery_name::bidegree23: {
            std::string note;
            out.F = family_build(spec.fld, 3, spec.seed, true, note, out.intended_nodes);
            out.provenance = "g3^2 - 4 f3 h3 bidegree-(2,3) shape, " + note;
            break;
        }
        case gallery_name::prescribed: {
            out.F = prescribed_nodes(spec.points, spec.fld, spec.seed);
            out.intended_nodes = spec.points;
            std::sort(out.intended_nodes.begin(), out.intended_nodes.end());
            out.provenance = "sextic fitted through " + std::to_string(spec.points.size()) +
                             " prescribed gradient conditions";
            break;
        }
    }
    return out;
}

field suitable_field(gallery_name name, std::uint32_t search_cap) {
    auto first_prime = [&](auto&& pred) -> field {
        for (std::uint32_t p = 7; p <= search_cap; ++p) {
            if (!is_prime_u64(p)) continue;
            field f = field::finite(p, 1);
            if (pred(f)) return f;
        }
        fail(errc::unsupported, "no suitable prime below the search cap");
    };
    switch (name) {
        case gallery_name::barth:
            return first_prime([](const field& f) { return f.from_int(5).sqrt().has_value(); });
        case gallery_name::jihun1:
            return first_prime([](const field& f) {
                // z^4 = 2 needs four distinct roots
                int roots = 0;
                for (std::uint64_t c = 0; c < f.q(); ++c) {
                    scalar z = f.from_code(c);
                    scalar z2 = z * z;
                    if (z2 * z2 == f.from_int(2)) ++roots;
                }
                return roots == 4;
            });
        case gallery_name::jihun2:
            return first_prime([](const field& f) { return f.p() % 4 == 1; });
        case gallery_name::char5_demo:
            return field::finite_unchecked(5, 1);
        default:
            return field::finite(101, 1);
    }
}

}  // namespace sds
