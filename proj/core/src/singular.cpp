#include "sdsolid/singular.hpp"

#include <algorithm>

#include "sdsolid/linalg.hpp"

namespace sds {

namespace {

/// Raw-code univariate polynomial in w of degree <= 5 (partials of a sextic
/// restricted to a chart line).
struct wpoly {
    std::array<std::uint64_t, 6> c{};
};

int wtop(const wpoly& u) {
    for (int i = 5; i >= 0; --i) {
        if (u.c[i]) return i;
    }
    return -1;
}

/// a := a mod b (degrees tracked by the caller).
void wmod(wpoly& a, int& da, const wpoly& b, int db, const fq_ctx& ctx) {
    std::uint64_t inv = ctx.inv(b.c[db]);
    while (da >= db) {
        std::uint64_t f = ctx.mul(a.c[da], inv);
        if (f) {
            for (int i = 0; i < db; ++i) {
                a.c[da - db + i] = ctx.sub(a.c[da - db + i], ctx.mul(f, b.c[i]));
            }
        }
        a.c[da] = 0;
        --da;
        while (da >= 0 && a.c[da] == 0) --da;
    }
}

/// g := gcd(g, h); degree returned (monic not enforced — only roots matter).
int wgcd(wpoly& g, int dg, wpoly h, int dh, const fq_ctx& ctx) {
    while (dh >= 0) {
        wmod(g, dg, h, dh, ctx);
        std::swap(g, h);
        std::swap(dg, dh);
    }
    return dg;
}

/// Chart-restricted sparse view of one partial: exponent tuple in the free
/// chart variables plus raw coefficient code.
struct chart_term {
    std::uint8_t e[3];
    std::uint64_t c;
};

/// Apply fn(point coordinates as codes) for every singular point of the
/// chart; `one` marks the chart's leading coordinate.
template <typename Emit>
void scan_common_roots(const std::array<wpoly, 4>& u, const fq_ctx& ctx, Emit&& emit) {
    int present[4], n = 0;
    int deg[4];
    for (int i = 0; i < 4; ++i) {
        deg[i] = wtop(u[i]);
        if (deg[i] >= 0) present[n++] = i;
    }
    if (n == 0) {
        // all four partials vanish identically on the w-line
        for (std::uint64_t w = 0; w < ctx.q(); ++w) emit(w);
        return;
    }
    wpoly g = u[present[0]];
    int dg = wtop(g);
    for (int i = 1; i < n && dg > 0; ++i) dg = wgcd(g, dg, u[present[i]], deg[present[i]], ctx);
    if (dg <= 0) return;  // no common root (dg==0) — constants have none
    for (std::uint64_t w = 0; w < ctx.q(); ++w) {
        std::uint64_t acc = g.c[dg];
        for (int i = dg - 1; i >= 0; --i) acc = ctx.add(ctx.mul(acc, w), g.c[i]);
        if (acc == 0) emit(w);
    }
}

/// Exhaustive singular-point scan of one field level. F must live over ext.
void scan_level(const hpoly& F, const field& ext, std::vector<ppoint>& out) {
    const fq_ctx& ctx = ext.ctx();
    const std::uint64_t q = ext.q();
    std::array<hpoly, 4> P;
    for (int v = 0; v < 4; ++v) P[v] = F.partial(v);

    auto emit_point = [&](std::array<std::uint64_t, 4> codes) {
        std::array<scalar, 4> cs;
        for (int i = 0; i < 4; ++i) cs[i] = ext.from_code(codes[i]);
        out.emplace_back(ext, std::move(cs));
    };

    // ---- chart x=1: stripes over (y,z), univariate gcd in w ----
    {
        // terms keyed by (e_y, e_z, e_w); e_x is determined by homogeneity
        std::array<std::vector<chart_term>, 4> terms;
        int max_ew[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            for (const auto& [m, c] : P[i].terms()) {
                terms[i].push_back({{m.e[1], m.e[2], m.e[3]}, c.code()});
                max_ew[i] = std::max<int>(max_ew[i], m.e[3]);
            }
        }
        std::array<std::uint64_t, 6> ypow;
        ypow[0] = ctx.from_int(1);
        // per-y collapse: zrow[i][e_w][e_z]
        std::uint64_t zrow[4][6][6];
        int ztop[4][6];
        for (std::uint64_t y = 0; y < q; ++y) {
            ypow[1] = y;
            for (int e = 2; e <= 5; ++e) ypow[e] = ctx.mul(ypow[e - 1], y);
            for (int i = 0; i < 4; ++i) {
                for (int e = 0; e <= max_ew[i]; ++e) {
                    for (int j = 0; j < 6; ++j) zrow[i][e][j] = 0;
                    ztop[i][e] = -1;
                }
                for (const auto& t : terms[i]) {
                    std::uint64_t v = t.e[0] ? ctx.mul(t.c, ypow[t.e[0]]) : t.c;
                    int ez = t.e[1], ew = t.e[2];
                    zrow[i][ew][ez] = ctx.add(zrow[i][ew][ez], v);
                }
                for (int e = 0; e <= max_ew[i]; ++e) {
                    for (int j = 5; j >= 0; --j) {
                        if (zrow[i][e][j]) {
                            ztop[i][e] = j;
                            break;
                        }
                    }
                }
            }
            for (std::uint64_t z = 0; z < q; ++z) {
                std::array<wpoly, 4> u{};
                for (int i = 0; i < 4; ++i) {
                    for (int e = 0; e <= max_ew[i]; ++e) {
                        int t = ztop[i][e];
                        if (t < 0) continue;
                        std::uint64_t acc = zrow[i][e][t];
                        for (int j = t - 1; j >= 0; --j) {
                            acc = ctx.add(ctx.mul(acc, z), zrow[i][e][j]);
                        }
                        u[i].c[e] = acc;
                    }
                }
                scan_common_roots(u, ctx, [&](std::uint64_t w) {
                    emit_point({ctx.from_int(1), y, z, w});
                });
            }
        }
    }

    // ---- chart x=0, y=1: stripes over z ----
    {
        std::array<std::vector<chart_term>, 4> terms;
        int max_ew[4] = {0, 0, 0, 0};
        for (int i = 0; i < 4; ++i) {
            for (const auto& [m, c] : P[i].terms()) {
                if (m.e[0] != 0) continue;
                terms[i].push_back({{m.e[2], m.e[3], 0}, c.code()});
                max_ew[i] = std::max<int>(max_ew[i], m.e[3]);
            }
        }
        std::array<std::uint64_t, 6> zpow;
        for (std::uint64_t z = 0; z < q; ++z) {
            zpow[0] = ctx.from_int(1);
            zpow[1] = z;
            for (int e = 2; e <= 5; ++e) zpow[e] = ctx.mul(zpow[e - 1], z);
            std::array<wpoly, 4> u{};
            for (int i = 0; i < 4; ++i) {
                for (const auto& t : terms[i]) {
                    std::uint64_t v = t.e[0] ? ctx.mul(t.c, zpow[t.e[0]]) : t.c;
                    u[i].c[t.e[1]] = ctx.add(u[i].c[t.e[1]], v);
                }
            }
            scan_common_roots(u, ctx, [&](std::uint64_t w) {
                emit_point({0, ctx.from_int(1), z, w});
            });
        }
    }

    // ---- chart x=y=0, z=1: one w-line ----
    {
        std::array<wpoly, 4> u{};
        for (int i = 0; i < 4; ++i) {
            for (const auto& [m, c] : P[i].terms()) {
                if (m.e[0] != 0 || m.e[1] != 0) continue;
                u[i].c[m.e[3]] = c.code();
            }
        }
        scan_common_roots(u, ctx, [&](std::uint64_t w) {
            emit_point({0, 0, ctx.from_int(1), w});
        });
    }

    // ---- the point (0:0:0:1) ----
    {
        bool all_zero = true;
        for (int i = 0; i < 4 && all_zero; ++i) {
            for (const auto& [m, c] : P[i].terms()) {
                if (m.e[0] == 0 && m.e[1] == 0 && m.e[2] == 0) {
                    all_zero = false;  // the w^5 coefficient is a nonzero term
                    break;
                }
            }
        }
        if (all_zero) emit_point({0, 0, 0, ctx.from_int(1)});
    }
}

}  // namespace

singular_scan find_singular_points(const hpoly& F, const field& fld, int max_degree,
                                   std::uint64_t guard) {
    if (!(F.fld() == fld)) fail(errc::field_mismatch, "polynomial field differs from scan field");
    if (!fld.is_finite()) fail(errc::unsupported, "singular scan needs a finite field");
    if (F.degree() != 6) fail(errc::unsupported, "expected a sextic");
    if (F.is_zero()) fail(errc::unsupported, "zero polynomial");
    if (max_degree < 1) fail(errc::unsupported, "extension depth must be at least 1");

    singular_scan out;
    std::uint64_t cumulative = 0;
    for (int j = 1; j <= max_degree; ++j) {
        field ext = fld.extension(static_cast<std::uint32_t>(j));
        unsigned __int128 cube = static_cast<unsigned __int128>(ext.q()) * ext.q() * ext.q();
        if (cube > guard) {
            fail(errc::enumeration_too_large,
                 "q^3 at extension depth " + std::to_string(j) +
                     " exceeds the enumeration guard " + std::to_string(guard));
        }
        hpoly Fj = lift(F, ext);
        std::vector<ppoint> level;
        scan_level(Fj, ext, level);
        // keep only points not already defined over a smaller tower field
        std::vector<ppoint> fresh;
        for (auto& pt : level) {
            bool seen = false;
            for (int i = 1; i < j && !seen; ++i) {
                if (j % i != 0) continue;
                seen = defined_over_subfield(pt, fld.k() * static_cast<std::uint32_t>(i));
            }
            if (!seen) fresh.push_back(std::move(pt));
        }
        std::sort(fresh.begin(), fresh.end());
        cumulative += fresh.size();
        out.per_degree.push_back(cumulative);
        for (auto& pt : fresh) out.points.push_back(std::move(pt));
    }
    out.stabilized = max_degree >= 2 && out.per_degree[max_degree - 1] ==
                                            out.per_degree[max_degree - 2];
    return out;
}

bool is_node(const hpoly& F, const ppoint& pt) {
    const field& pf = pt.fld();
    if (pf.is_finite() && (pf.p() == 2 || pf.p() == 3 || pf.p() == 5)) {
        fail(errc::bad_characteristic,
             "the rank-3 criterion needs characteristic outside {2,3,5}");
    }
    hpoly Fp = lift(F, pf);
    for (int v = 0; v < 4; ++v) {
        if (!Fp.partial(v).evaluate(pt.coords()).is_zero()) {
            fail(errc::not_singular, "point is not singular on the surface");
        }
    }
    auto H = Fp.hessian_at(pt.coords());
    smat m(4, std::vector<scalar>(4));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) m[i][j] = H[i][j];
    }
    return rank_of(std::move(m)) == 3;
}

nodal_surface_record verify_nodal(const hpoly& F, const field& fld, int max_degree,
                                  std::uint64_t guard) {
    singular_scan scan = find_singular_points(F, fld, max_degree, guard);
    nodal_surface_record rec;
    rec.F = F;
    rec.fld = fld;
    rec.extension_depth = max_degree;
    rec.per_degree = scan.per_degree;
    rec.stabilized = scan.stabilized;
    for (auto& pt : scan.points) {
        int degree = static_cast<int>(pt.fld().k() / fld.k());
        if (is_node(F, pt)) {
            rec.nodes.push_back(std::move(pt));
            rec.orbit_sizes.push_back(degree);
        } else {
            rec.non_nodal.push_back(std::move(pt));
        }
    }
    return rec;
}

}  // namespace sds
