#include "sdsolid/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "sdsolid/linalg.hpp"

namespace sds {

namespace {

/// idx-th code in digit-lexicographic order: reverse the base-p digits, so
/// the first digit (constant term) is the most significant enumeration key.
/// Matches scalar::cmp, hence ppoint::cmp, hence "canonical order".
std::uint64_t nth_code_lex(std::uint64_t idx, std::uint64_t p, std::uint32_t k) {
    if (k == 1) return idx;
    std::uint64_t code = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 1; i < k; ++i) place *= p;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint64_t digit = idx / place;
        idx %= place;
        place /= p;
        std::uint64_t ppow = 1;
        for (std::uint32_t j = 0; j < i; ++j) ppow *= p;
        code += digit * ppow;
    }
    return code;
}

}  // namespace

ppoint::ppoint(const field& fld, std::array<scalar, 4> coords)
    : fld_(fld), c_(std::move(coords)) {
    for (int i = 0; i < 4; ++i) {
        if (!c_[i].is_zero()) {
            lead_ = i;
            break;
        }
    }
    if (lead_ < 0) fail(errc::unsupported, "projective point needs a nonzero coordinate");
    if (!(c_[lead_] == fld_.one())) {
        scalar inv = c_[lead_].inv();
        for (int i = lead_; i < 4; ++i) c_[i] = c_[i] * inv;
    }
}

int ppoint::cmp(const ppoint& o) const {
    if (lead_ != o.lead_) return lead_ < o.lead_ ? -1 : 1;
    for (int i = lead_ + 1; i < 4; ++i) {
        int c = c_[i].cmp(o.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string ppoint::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ":";
        os << c_[i].str();
    }
    os << ")";
    return os.str();
}

line line_through(const ppoint& a, const ppoint& b) {
    if (a == b) fail(errc::identical_points, "a line needs two distinct points");
    const field& fld = a.fld();
    line out;
    out.fld_ = fld;
    // Plücker coordinates p_ij = a_i b_j - a_j b_i, leading-one normalized
    int idx = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            out.pl_[idx++] = a[i] * b[j] - a[j] * b[i];
        }
    }
    int lead = -1;
    for (int i = 0; i < 6; ++i) {
        if (!out.pl_[i].is_zero()) {
            lead = i;
            break;
        }
    }
    scalar inv = out.pl_[lead].inv();
    for (int i = lead; i < 6; ++i) out.pl_[i] = out.pl_[i] * inv;
    // canonical spanning points: reduced row echelon basis of the span
    smat m = {{a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}};
    smat r = rref_of(std::move(m));
    out.a_ = ppoint(fld, {r[0][0], r[0][1], r[0][2], r[0][3]});
    out.b_ = ppoint(fld, {r[1][0], r[1][1], r[1][2], r[1][3]});
    return out;
}

bool line::contains(const ppoint& p) const {
    // p in span(a,b) iff every 3x3 minor of the stacked 3x4 matrix vanishes
    const auto& a = a_;
    const auto& b = b_;
    for (int drop = 0; drop < 4; ++drop) {
        int cols[3], n = 0;
        for (int c = 0; c < 4; ++c) {
            if (c != drop) cols[n++] = c;
        }
        scalar det = a[cols[0]] * (b[cols[1]] * p[cols[2]] - b[cols[2]] * p[cols[1]]) -
                     a[cols[1]] * (b[cols[0]] * p[cols[2]] - b[cols[2]] * p[cols[0]]) +
                     a[cols[2]] * (b[cols[0]] * p[cols[1]] - b[cols[1]] * p[cols[0]]);
        if (!det.is_zero()) return false;
    }
    return true;
}

std::vector<ppoint> line::points() const {
    if (!fld_.is_finite()) fail(errc::unsupported, "point enumeration needs a finite field");
    std::vector<ppoint> out;
    out.reserve(fld_.q() + 1);
    out.push_back(b_);
    for (std::uint64_t idx = 0; idx < fld_.q(); ++idx) {
        scalar t = fld_.from_code(nth_code_lex(idx, fld_.p(), fld_.k()));
        std::array<scalar, 4> c;
        for (int i = 0; i < 4; ++i) c[i] = a_[i] + t * b_[i];
        out.emplace_back(fld_, std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int line::cmp(const line& o) const {
    for (int i = 0; i < 6; ++i) {
        int c = pl_[i].cmp(o.pl_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string line::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 6; ++i) {
        if (i) os << ":";
        os << pl_[i].str();
    }
    os << "]";
    return os.str();
}

bool collinear(const ppoint& a, const ppoint& b, const ppoint& c) {
    smat m = {{a[0], a[1], a[2], a[3]},
              {b[0], b[1], b[2], b[3]},
              {c[0], c[1], c[2], c[3]}};
    return rank_of(std::move(m)) <= 2;
}

std::uint64_t p3_point_count(const field& fld) {
    if (!fld.is_finite()) fail(errc::unsupported, "point count needs a finite field");
    unsigned __int128 q = fld.q();
    unsigned __int128 n = q * q * q + q * q + q + 1;
    if (n > ~static_cast<std::uint64_t>(0)) fail(errc::enumeration_too_large, "point count overflows");
    return static_cast<std::uint64_t>(n);
}

void for_each_point(const field& fld, const std::function<void(const ppoint&)>& fn,
                    std::uint64_t guard) {
    if (!fld.is_finite()) fail(errc::unsupported, "enumeration needs a finite field");
    const std::uint64_t q = fld.q();
    unsigned __int128 cube = static_cast<unsigned __int128>(q) * q * q;
    if (cube > guard) {
        fail(errc::enumeration_too_large,
             "q^3 = " + std::to_string(static_cast<std::uint64_t>(cube)) +
                 " exceeds the enumeration guard " + std::to_string(guard));
    }
    const std::uint64_t p = fld.p();
    const std::uint32_t k = fld.k();
    std::vector<scalar> elems(q);
    for (std::uint64_t i = 0; i < q; ++i) elems[i] = fld.from_code(nth_code_lex(i, p, k));
    const scalar zero = fld.zero();
    const scalar one = fld.one();
    // chart x=1
    for (std::uint64_t a = 0; a < q; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
            for (std::uint64_t c = 0; c < q; ++c) {
                fn(ppoint(fld, {one, elems[a], elems[b], elems[c]}));
            }
        }
    }
    // chart y=1
    for (std::uint64_t b = 0; b < q; ++b) {
        for (std::uint64_t c = 0; c < q; ++c) {
            fn(ppoint(fld, {zero, one, elems[b], elems[c]}));
        }
    }
    // chart z=1
    for (std::uint64_t c = 0; c < q; ++c) {
        fn(ppoint(fld, {zero, zero, one, elems[c]}));
    }
    // chart w=1
    fn(ppoint(fld, {zero, zero, zero, one}));
}

std::vector<ppoint> enumerate_points(const field& fld, std::uint64_t guard) {
    std::vector<ppoint> out;
    out.reserve(p3_point_count(fld));
    for_each_point(fld, [&](const ppoint& p) { out.push_back(p); }, guard);
    return out;
}

bool defined_over_subfield(const ppoint& p, std::uint32_t subfield_k) {
    const field& fld = p.fld();
    if (!fld.is_finite()) return true;
    if (fld.k() % subfield_k != 0) return false;
    if (fld.k() == subfield_k) return true;
    const auto& ctx = *fld.ctx_ptr();
    for (int i = 0; i < 4; ++i) {
        std::uint64_t code = p[i].code();
        std::uint64_t im = code;
        for (std::uint32_t j = 0; j < subfield_k; ++j) im = ctx.frobenius(im);
        if (im != code) return false;
    }
    return true;
}

ppoint lift_point(const ppoint& p, const field& ext) {
    if (p.fld() == ext) return p;
    if (!p.fld().is_finite() || !ext.is_finite() || p.fld().p() != ext.p() ||
        ext.k() % p.fld().k() != 0) {
        fail(errc::field_mismatch, "no canonical embedding between these fields");
    }
    const fq_ctx& base = p.fld().ctx();
    const fq_ctx& top = ext.ctx();
    auto powers = embedding_powers(base, top);
    std::array<scalar, 4> cs;
    for (int i = 0; i < 4; ++i) {
        cs[i] = ext.from_code(embed(p[i].code(), base, top, powers));
    }
    return ppoint(ext, std::move(cs));
}

extension_counts new_points_over_extension(const field& base,
                                           const std::function<bool(const ppoint&)>& pred,
                                           int max_degree, std::uint64_t guard) {
    if (!base.is_finite()) fail(errc::unsupported, "extension towers need a finite field");
    extension_counts out;
    std::uint64_t cumulative = 0;
    for (int j = 1; j <= max_degree; ++j) {
        field ext = base.extension(static_cast<std::uint32_t>(j));
        std::uint64_t fresh = 0;
        for_each_point(
            ext,
            [&](const ppoint& pt) {
                if (!pred(pt)) return;
                // skip points already counted over a proper subfield of the
                // tower: F_{p^{k i}} for i | j, i < j
                for (int i = 1; i < j; ++i) {
                    if (j % i != 0) continue;
                    if (defined_over_subfield(pt, base.k() * static_cast<std::uint32_t>(i))) {
                        return;
                    }
                }
                ++fresh;
            },
            guard);
        cumulative += fresh;
        out.per_degree.push_back(cumulative);
    }
    out.stabilized = max_degree >= 2 &&
                     out.per_degree[max_degree - 1] == out.per_degree[max_degree - 2];
    return out;
}

}  // namespace sds
