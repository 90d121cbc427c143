#include "sdsolid/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sds {

namespace {

struct mono4_order {
    bool operator()(const exp4& a, const exp4& b) const { return mono_before(a, b); }
};

struct mono3_order {
    bool operator()(const exp3& a, const exp3& b) const { return mono3_before(a, b); }
};

/// Powers pt[v]^e for e = 0..maxe, one row per variable.
template <std::size_t N>
std::vector<std::array<scalar, N>> power_table(const std::array<scalar, N>& pt,
                                               const field& fld, int maxe) {
    std::vector<std::array<scalar, N>> pows(maxe + 1);
    for (std::size_t v = 0; v < N; ++v) pows[0][v] = fld.one();
    for (int e = 1; e <= maxe; ++e) {
        for (std::size_t v = 0; v < N; ++v) pows[e][v] = pows[e - 1][v] * pt[v];
    }
    return pows;
}

bool proportional4(const std::array<scalar, 4>& a, const std::array<scalar, 4>& b) {
    // rank of the 2x4 matrix < 2: all 2x2 minors vanish
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<exp4> monomials_of_degree(int d) {
    std::vector<exp4> out;
    for (int a = d; a >= 0; --a) {
        for (int b = d - a; b >= 0; --b) {
            for (int c = d - a - b; c >= 0; --c) {
                exp4 m;
                m.e = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                       static_cast<std::uint8_t>(c),
                       static_cast<std::uint8_t>(d - a - b - c)};
                out.push_back(m);
            }
        }
    }
    return out;
}

std::vector<exp3> monomials3_of_degree(int d) {
    std::vector<exp3> out;
    for (int a = d; a >= 0; --a) {
        for (int b = d - a; b >= 0; --b) {
            exp3 m;
            m.e = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                   static_cast<std::uint8_t>(d - a - b)};
            out.push_back(m);
        }
    }
    return out;
}

hpoly lift(const hpoly& f, const field& ext) {
    if (f.fld() == ext) return f;
    if (!f.fld().is_finite() || !ext.is_finite() || f.fld().p() != ext.p() ||
        ext.k() % f.fld().k() != 0) {
        fail(errc::field_mismatch, "no canonical embedding between these fields");
    }
    const fq_ctx& base = f.fld().ctx();
    const fq_ctx& top = ext.ctx();
    auto powers = embedding_powers(base, top);
    std::vector<std::pair<exp4, scalar>> ts;
    ts.reserve(f.terms().size());
    for (const auto& [m, c] : f.terms()) {
        ts.emplace_back(m, ext.from_code(embed(c.code(), base, top, powers)));
    }
    return hpoly::from_terms(ext, f.degree(), std::move(ts));
}

// ---------------------------------------------------------------------------
// hpoly

hpoly hpoly::from_terms(field fld, int degree,
                        std::vector<std::pair<exp4, scalar>> terms) {
    std::map<exp4, scalar, mono4_order> acc;
    for (auto& [m, c] : terms) {
        if (m.degree() != degree) {
            fail(errc::parse_error, "term degree mismatch in homogeneous polynomial");
        }
        auto it = acc.find(m);
        if (it == acc.end()) {
            acc.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
        }
    }
    hpoly out(std::move(fld), degree);
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.terms_.emplace_back(m, c);
    }
    return out;
}

hpoly hpoly::from_int_terms(const field& fld, int degree,
                            const std::vector<std::pair<exp4, long long>>& terms) {
    std::vector<std::pair<exp4, scalar>> ts;
    ts.reserve(terms.size());
    for (const auto& [m, c] : terms) ts.emplace_back(m, fld.from_int(c));
    return from_terms(fld, degree, std::move(ts));
}

hpoly hpoly::parse(const field& fld, const std::string& text, int expect_degree) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) fail(errc::parse_error, "empty polynomial text");

    std::vector<std::pair<exp4, scalar>> terms;
    std::size_t pos = 0;
    const auto var_index = [](char c) -> int {
        switch (c) {
            case 'x': return 0;
            case 'y': return 1;
            case 'z': return 2;
            case 'w': return 3;
        }
        return -1;
    };
    while (pos < s.size()) {
        long long sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) fail(errc::parse_error, "dangling sign at position " + std::to_string(pos));
        long long coeff = 1;
        bool saw_number = false, saw_factor = false;
        exp4 mono;
        while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
            if (s[pos] == '*') {
                ++pos;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
                long long v = 0;
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    v = v * 10 + (s[pos] - '0');
                    if (v > (1LL << 60)) {
                        fail(errc::parse_error, "coefficient too large at position " +
                                                    std::to_string(start));
                    }
                    ++pos;
                }
                __int128 prod = static_cast<__int128>(coeff) * v;
                if (prod > (static_cast<__int128>(1) << 60)) {
                    fail(errc::parse_error, "coefficient too large at position " +
                                                std::to_string(start));
                }
                coeff = static_cast<long long>(prod);
                saw_number = true;
                continue;
            }
            int vi = var_index(s[pos]);
            if (vi < 0) {
                fail(errc::parse_error, "unexpected character '" + std::string(1, s[pos]) +
                                            "' at position " + std::to_string(pos));
            }
            ++pos;
            int e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    fail(errc::parse_error, "missing exponent at position " + std::to_string(pos));
                }
                e = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                    e = e * 10 + (s[pos] - '0');
                    if (e > 64) fail(errc::parse_error, "exponent too large");
                    ++pos;
                }
            }
            mono.e[vi] = static_cast<std::uint8_t>(mono.e[vi] + e);
            saw_factor = true;
        }
        if (!saw_number && !saw_factor) {
            fail(errc::parse_error, "empty term at position " + std::to_string(pos));
        }
        terms.emplace_back(mono, fld.from_int(sign * coeff));
    }

    int degree = expect_degree;
    for (const auto& [m, c] : terms) {
        if (degree < 0) degree = m.degree();
        if (m.degree() != degree) {
            fail(errc::parse_error, "polynomial is not homogeneous: mixed degrees " +
                                        std::to_string(degree) + " and " +
                                        std::to_string(m.degree()));
        }
    }
    if (degree < 0) degree = 0;
    return from_terms(fld, degree, std::move(terms));
}

scalar hpoly::evaluate(const std::array<scalar, 4>& pt) const {
    scalar acc = fld_.zero();
    if (terms_.empty()) return acc;
    auto pows = power_table(pt, fld_, degree_);
    for (const auto& [m, c] : terms_) {
        scalar t = c;
        for (int v = 0; v < 4; ++v) {
            if (m.e[v]) t = t * pows[m.e[v]][v];
        }
        acc = acc + t;
    }
    return acc;
}

hpoly hpoly::partial(int var) const {
    std::vector<std::pair<exp4, scalar>> out;
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        exp4 d = m;
        d.e[var] -= 1;
        out.emplace_back(d, c * fld_.from_int(m.e[var]));
    }
    return from_terms(fld_, degree_ > 0 ? degree_ - 1 : 0, std::move(out));
}

std::array<std::array<scalar, 4>, 4> hpoly::hessian_at(
    const std::array<scalar, 4>& pt) const {
    std::array<std::array<scalar, 4>, 4> h;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) h[i][j] = fld_.zero();
    }
    auto pows = power_table(pt, fld_, degree_);
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < 4; ++i) {
            if (!m.e[i]) continue;
            for (int j = i; j < 4; ++j) {
                long long factor = (i == j) ? static_cast<long long>(m.e[i]) * (m.e[i] - 1)
                                            : static_cast<long long>(m.e[i]) * m.e[j];
                if (factor == 0) continue;
                exp4 d = m;
                d.e[i] -= 1;
                d.e[j] -= 1;
                scalar t = c * fld_.from_int(factor);
                for (int v = 0; v < 4; ++v) {
                    if (d.e[v]) t = t * pows[d.e[v]][v];
                }
                h[i][j] = h[i][j] + t;
                if (i != j) h[j][i] = h[j][i] + t;
            }
        }
    }
    return h;
}

hpoly hpoly::operator+(const hpoly& o) const {
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero()) {
        fail(errc::parse_error, "adding homogeneous polynomials of different degrees");
    }
    std::vector<std::pair<exp4, scalar>> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(fld_, is_zero() ? o.degree_ : degree_, std::move(ts));
}

hpoly hpoly::operator-(const hpoly& o) const { return *this + o.scaled(fld_.from_int(-1)); }

hpoly hpoly::scaled(const scalar& c) const {
    std::vector<std::pair<exp4, scalar>> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, v] : terms_) ts.emplace_back(m, v * c);
    return from_terms(fld_, degree_, std::move(ts));
}

hpoly hpoly::operator*(const hpoly& o) const {
    std::map<exp4, scalar, mono4_order> acc;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            exp4 m;
            for (int v = 0; v < 4; ++v) m.e[v] = static_cast<std::uint8_t>(ma.e[v] + mb.e[v]);
            scalar prod = ca * cb;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, std::move(prod));
            } else {
                it->second = it->second + prod;
            }
        }
    }
    hpoly out(fld_, degree_ + o.degree_);
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.terms_.emplace_back(m, c);
    }
    return out;
}

hpoly hpoly::substituted(const std::array<std::array<scalar, 4>, 4>& m) const {
    // images of the variables: x_i -> sum_j m[i][j] v_j
    std::array<hpoly, 4> lin;
    for (int i = 0; i < 4; ++i) {
        std::vector<std::pair<exp4, scalar>> ts;
        for (int j = 0; j < 4; ++j) {
            exp4 mono;
            mono.e[j] = 1;
            ts.emplace_back(mono, m[i][j]);
        }
        lin[i] = from_terms(fld_, 1, std::move(ts));
    }
    hpoly acc(fld_, degree_);
    for (const auto& [mono, c] : terms_) {
        exp4 unit;
        hpoly prod = from_terms(fld_, 0, {{unit, c}});
        for (int v = 0; v < 4; ++v) {
            for (int e = 0; e < mono.e[v]; ++e) prod = prod * lin[v];
        }
        acc = acc + prod;
    }
    return acc;
}

bform hpoly::restrict_to_line(const std::array<scalar, 4>& p0,
                              const std::array<scalar, 4>& p1) const {
    if (proportional4(p0, p1)) {
        fail(errc::degenerate_pair, "line restriction needs two distinct points");
    }
    // F(s p0 + t p1): expand each variable power by the binomial theorem.
    bform out(fld_, degree_);
    // binomial coefficients up to degree
    std::vector<std::vector<long long>> ch(degree_ + 1, std::vector<long long>(degree_ + 1, 0));
    for (int n = 0; n <= degree_; ++n) {
        ch[n][0] = 1;
        for (int r = 1; r <= n; ++r) {
            ch[n][r] = ch[n - 1][r - 1] + (r <= n - 1 ? ch[n - 1][r] : 0);
        }
    }
    auto pow0 = power_table(p0, fld_, degree_);
    auto pow1 = power_table(p1, fld_, degree_);
    for (const auto& [m, c] : terms_) {
        // per variable v: (s a_v + t b_v)^{e_v} = sum_r C(e,r) a^{e-r} b^r s^{e-r} t^r
        // accumulate the product over v as a vector indexed by total t-power.
        std::vector<scalar> acc(1, c);
        for (int v = 0; v < 4; ++v) {
            int e = m.e[v];
            if (!e) continue;
            std::vector<scalar> next(acc.size() + e, fld_.zero());
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (acc[i].is_zero()) continue;
                for (int r = 0; r <= e; ++r) {
                    scalar term = acc[i] * fld_.from_int(ch[e][r]);
                    if (e - r) term = term * pow0[e - r][v];
                    if (r) term = term * pow1[r][v];
                    next[i + r] = next[i + r] + term;
                }
            }
            acc = std::move(next);
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            out.set_coeff(static_cast<int>(i), out.coeff(static_cast<int>(i)) + acc[i]);
        }
    }
    return out;
}

tpoly hpoly::restrict_to_plane(const std::array<scalar, 4>& b0,
                               const std::array<scalar, 4>& b1,
                               const std::array<scalar, 4>& b2) const {
    // basis rank must be 3: some 3x3 minor of the 3x4 matrix is nonzero
    {
        bool ok = false;
        for (int drop = 0; drop < 4 && !ok; ++drop) {
            int cols[3], n = 0;
            for (int c = 0; c < 4; ++c) {
                if (c != drop) cols[n++] = c;
            }
            scalar det = b0[cols[0]] * (b1[cols[1]] * b2[cols[2]] - b1[cols[2]] * b2[cols[1]]) -
                         b0[cols[1]] * (b1[cols[0]] * b2[cols[2]] - b1[cols[2]] * b2[cols[0]]) +
                         b0[cols[2]] * (b1[cols[0]] * b2[cols[1]] - b1[cols[1]] * b2[cols[0]]);
            if (!det.is_zero()) ok = true;
        }
        if (!ok) fail(errc::degenerate_basis, "plane basis points are not independent");
    }
    // ternary linear images of the four variables: x_v -> b0_v a + b1_v b + b2_v c
    std::array<tpoly, 4> lin;
    for (int v = 0; v < 4; ++v) {
        std::vector<std::pair<exp3, scalar>> ts;
        const std::array<scalar, 3> coeffs = {b0[v], b1[v], b2[v]};
        for (int j = 0; j < 3; ++j) {
            exp3 mono;
            mono.e[j] = 1;
            ts.emplace_back(mono, coeffs[j]);
        }
        lin[v] = tpoly::from_terms(fld_, 1, std::move(ts));
    }
    tpoly acc(fld_, degree_);
    for (const auto& [mono, c] : terms_) {
        exp3 unit;
        tpoly prod = tpoly::from_terms(fld_, 0, {{unit, c}});
        for (int v = 0; v < 4; ++v) {
            for (int e = 0; e < mono.e[v]; ++e) prod = prod * lin[v];
        }
        acc = acc + prod;
    }
    return acc;
}

std::string hpoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names = "xyzw";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (negative) cs = cs.substr(1);
        first = false;
        bool has_vars = m.degree() > 0;
        if (!has_vars || cs != "1") {
            os << cs;
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < 4; ++v) {
            if (!m.e[v]) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[v];
            if (m.e[v] > 1) os << "^" << static_cast<int>(m.e[v]);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// bform

bool bform::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

scalar bform::eval(const scalar& s, const scalar& t) const {
    const int d = degree();
    scalar acc = fld_.zero();
    std::vector<scalar> sp(d + 1, fld_.one());
    for (int i = 1; i <= d; ++i) sp[i] = sp[i - 1] * s;
    scalar tp = fld_.one();
    for (int i = 0; i <= d; ++i) {
        if (!coeffs_[i].is_zero()) acc = acc + coeffs_[i] * sp[d - i] * tp;
        if (i < d) tp = tp * t;
    }
    return acc;
}

bform bform::derivative_s() const {
    const int d = degree();
    if (d == 0) return bform(fld_, 0);
    bform out(fld_, d - 1);
    for (int i = 0; i < d; ++i) {
        out.set_coeff(i, coeffs_[i] * fld_.from_int(d - i));
    }
    return out;
}

bform bform::derivative_t() const {
    const int d = degree();
    if (d == 0) return bform(fld_, 0);
    bform out(fld_, d - 1);
    for (int i = 1; i <= d; ++i) {
        out.set_coeff(i - 1, coeffs_[i] * fld_.from_int(i));
    }
    return out;
}

namespace {

// Dense univariate helpers on ascending coefficient vectors over one field.
using uvec = std::vector<scalar>;

int uv_deg(const uvec& u) {
    for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) {
        if (!u[i].is_zero()) return i;
    }
    return -1;
}

uvec uv_mod(uvec a, const uvec& b) {
    int db = uv_deg(b);
    scalar lead_inv = b[db].inv();
    for (int da = uv_deg(a); da >= db; da = uv_deg(a)) {
        scalar f = a[da] * lead_inv;
        for (int i = 0; i <= db; ++i) {
            a[da - db + i] = a[da - db + i] - f * b[i];
        }
    }
    return a;
}

uvec uv_gcd(uvec a, uvec b) {
    while (uv_deg(b) >= 0) {
        uvec r = uv_mod(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = uv_deg(a);
    if (d >= 0) {
        scalar inv = a[d].inv();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

uvec uv_mulmod(const uvec& a, const uvec& b, const uvec& m, const field& fld) {
    int da = uv_deg(a), db = uv_deg(b);
    if (da < 0 || db < 0) return uvec{fld.zero()};
    uvec prod(da + db + 1, fld.zero());
    for (int i = 0; i <= da; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= db; ++j) prod[i + j] = prod[i + j] + a[i] * b[j];
    }
    return uv_mod(std::move(prod), m);
}

uvec uv_powmod(uvec base, std::uint64_t e, const uvec& m, const field& fld) {
    uvec r{fld.one()};
    base = uv_mod(std::move(base), m);
    while (e) {
        if (e & 1) r = uv_mulmod(r, base, m, fld);
        base = uv_mulmod(base, base, m, fld);
        e >>= 1;
    }
    return r;
}

}  // namespace

bform bform::gcd(const bform& a, const bform& b) {
    const field& fld = a.fld_;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // f = s^m t^j u(s,t) with u(1,t) of full content: t | f iff coeff(0)=0
    // (root at (1:0)), s | f iff coeff(d)=0 (root at (0:1)). Split both
    // factors off, run Euclid on the dehomogenized parts, reassemble.
    auto split = [&](const bform& f, int& tpow) {
        const int d = f.degree();
        int start = 0;
        while (start <= d && f.coeff(start).is_zero()) ++start;
        tpow = start;
        uvec u;
        for (int i = start; i <= d; ++i) u.push_back(f.coeff(i));
        if (u.empty()) u.push_back(fld.zero());
        return u;
    };
    int ja = 0, jb = 0;
    uvec ua = split(a, ja);
    uvec ub = split(b, jb);
    int sa = a.degree() - ja - uv_deg(ua);
    int sb = b.degree() - jb - uv_deg(ub);
    uvec g = uv_gcd(ua, ub);
    int spow = std::min(sa, sb);
    int tpow = std::min(ja, jb);
    int gd = uv_deg(g);
    bform out(fld, gd + spow + tpow);
    for (int i = 0; i <= gd; ++i) out.set_coeff(tpow + i, g[i]);
    return out;
}

int bform::root_multiplicity(const scalar& s0, const scalar& t0) const {
    bform cur = *this;
    int mult = 0;
    while (!cur.is_zero() && cur.degree() >= 1 && cur.eval(s0, t0).is_zero()) {
        cur = cur.divide_root(s0, t0);
        ++mult;
    }
    return mult;
}

bform bform::divide_root(const scalar& s0, const scalar& t0) const {
    const int d = degree();
    if (d < 1) fail(errc::not_divisible, "cannot divide a constant form");
    bform out(fld_, d - 1);
    if (!t0.is_zero()) {
        // divisor = t0*(s - r*t), r = s0/t0: synthetic division in s, then
        // scale the quotient by 1/t0
        scalar r = s0 * t0.inv();
        scalar carry = fld_.zero();
        for (int i = 0; i <= d - 1; ++i) {
            scalar c = coeffs_[i] + carry;  // coefficient of s^{d-i} t^i
            out.set_coeff(i, c);
            carry = c * r;
        }
        scalar rem = coeffs_[d] + carry;
        if (!rem.is_zero()) fail(errc::not_divisible, "point is not a root of the form");
        // normalize: we divided by (s - r t); scale to match (t0 s - s0 t) = t0 (s - r t)
        scalar inv_t0 = t0.inv();
        for (int i = 0; i <= d - 1; ++i) out.set_coeff(i, out.coeff(i) * inv_t0);
    } else {
        // root (1:0): divisor is -s0*t; f(1,0) = coeff(0) must vanish
        if (!coeffs_[0].is_zero()) fail(errc::not_divisible, "(1:0) is not a root");
        scalar neg_inv_s0 = -(s0.inv());
        for (int i = 0; i <= d - 1; ++i) out.set_coeff(i, coeffs_[i + 1] * neg_inv_s0);
    }
    return out;
}

std::vector<std::pair<std::array<scalar, 2>, int>> bform::roots() const {
    if (!fld_.is_finite()) {
        fail(errc::unsupported, "root enumeration requires a finite field");
    }
    std::vector<std::pair<std::array<scalar, 2>, int>> out;
    if (is_zero()) fail(errc::unsupported, "zero form has every point as a root");
    // root (0:1) <=> f(0,1) = coeff(d) = 0; multiplicity = run of zero
    // coefficients from the t^d end
    {
        int mult = 0;
        while (mult <= degree() && coeffs_[degree() - mult].is_zero()) ++mult;
        if (mult > 0) {
            out.push_back({{fld_.zero(), fld_.one()}, mult});
        }
    }
    // roots (1: tau)
    const std::uint64_t q = fld_.q();
    for (std::uint64_t code = 0; code < q; ++code) {
        scalar tau = fld_.from_code(code);
        if (eval(fld_.one(), tau).is_zero()) {
            int mult = root_multiplicity(fld_.one(), tau);
            out.push_back({{fld_.one(), tau}, mult});
        }
    }
    return out;
}

bool bform::squarefree() const {
    if (is_zero()) return false;
    if (degree() == 0) return true;
    // A repeated factor divides both partials; conversely a common factor of
    // f, f_s, f_t is repeated in f. (Both derivatives are needed: a factor of
    // t alone always divides f_s of any multiple of t.)
    bform g = gcd(*this, gcd(derivative_s(), derivative_t()));
    return g.degree() == 0;
}

std::vector<int> bform::factor_degrees() const {
    if (!fld_.is_finite()) fail(errc::unsupported, "factor profile needs a finite field");
    if (is_zero()) fail(errc::unsupported, "zero form");
    std::vector<int> out;
    const int d = degree();
    // linear factors s and t sit in the coefficient pattern directly:
    // s^m || f  <=>  top m coefficients (t^d end) vanish; t^j || f  <=>
    // low j coefficients vanish.
    int spow = 0;
    while (spow <= d && coeffs_[d - spow].is_zero()) ++spow;
    int tpow = 0;
    while (tpow <= d && coeffs_[tpow].is_zero()) ++tpow;
    for (int i = 0; i < spow + tpow; ++i) out.push_back(1);
    // remaining part as a monic univariate u(t) with u[0] != 0
    uvec u;
    for (int i = tpow; i <= d - spow; ++i) u.push_back(coeffs_[i]);
    int du = uv_deg(u);
    if (du > 0) {
        scalar inv = u[du].inv();
        for (auto& c : u) c = c * inv;
        // distinct-degree factorization; the inner loop re-runs one degree to
        // peel repeated factors (x^{q^e} - x is squarefree, so each gcd pass
        // removes one copy of every degree-e factor).
        const std::uint64_t q = fld_.q();
        uvec xq{fld_.zero(), fld_.one()};
        int e = 0;
        while (uv_deg(u) > 0 && 2 * (e + 1) <= uv_deg(u)) {
            ++e;
            xq = uv_powmod(std::move(xq), q, u, fld_);
            while (uv_deg(u) > 0) {
                uvec diff = xq;
                if (diff.size() < 2) diff.resize(2, fld_.zero());
                diff[1] = diff[1] - fld_.one();
                uvec g = uv_gcd(diff, u);
                int dg = uv_deg(g);
                if (dg <= 0) break;
                for (int i = 0; i < dg / e; ++i) out.push_back(e);
                // exact long division u /= g
                uvec r = u;
                int dr = uv_deg(r);
                uvec quot(dr - dg + 1, fld_.zero());
                for (int i = dr; i >= dg; --i) {
                    if (r[i].is_zero()) continue;
                    scalar f = r[i];  // g is monic
                    quot[i - dg] = f;
                    for (int j = 0; j <= dg; ++j) {
                        r[i - dg + j] = r[i - dg + j] - f * g[j];
                    }
                }
                u = std::move(quot);
                if (uv_deg(u) > 0) xq = uv_mod(std::move(xq), u);
            }
        }
        // all factors of degree <= e are gone, so whatever is left cannot
        // split further (two pieces would need degree >= 2(e+1) > deg u)
        if (uv_deg(u) > 0) out.push_back(uv_deg(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string bform::str() const {
    std::ostringstream os;
    const int d = degree();
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i].str();
        if (d - i) os << "*s^" << (d - i);
        if (i) os << "*t^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// tpoly

tpoly tpoly::from_terms(field fld, int degree,
                        std::vector<std::pair<exp3, scalar>> terms) {
    std::map<exp3, scalar, mono3_order> acc;
    for (auto& [m, c] : terms) {
        if (m.degree() != degree) {
            fail(errc::parse_error, "term degree mismatch in ternary polynomial");
        }
        auto it = acc.find(m);
        if (it == acc.end()) {
            acc.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
        }
    }
    tpoly out(std::move(fld), degree);
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.terms_.emplace_back(m, c);
    }
    return out;
}

scalar tpoly::evaluate(const std::array<scalar, 3>& pt) const {
    scalar acc = fld_.zero();
    if (terms_.empty()) return acc;
    auto pows = power_table(pt, fld_, degree_);
    for (const auto& [m, c] : terms_) {
        scalar t = c;
        for (int v = 0; v < 3; ++v) {
            if (m.e[v]) t = t * pows[m.e[v]][v];
        }
        acc = acc + t;
    }
    return acc;
}

tpoly tpoly::operator+(const tpoly& o) const {
    if (degree_ != o.degree_ && !is_zero() && !o.is_zero()) {
        fail(errc::parse_error, "adding ternary polynomials of different degrees");
    }
    std::vector<std::pair<exp3, scalar>> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(fld_, is_zero() ? o.degree_ : degree_, std::move(ts));
}

tpoly tpoly::operator-(const tpoly& o) const { return *this + o.scaled(fld_.from_int(-1)); }

tpoly tpoly::scaled(const scalar& c) const {
    std::vector<std::pair<exp3, scalar>> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, v] : terms_) ts.emplace_back(m, v * c);
    return from_terms(fld_, degree_, std::move(ts));
}

tpoly tpoly::operator*(const tpoly& o) const {
    std::map<exp3, scalar, mono3_order> acc;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            exp3 m;
            for (int v = 0; v < 3; ++v) m.e[v] = static_cast<std::uint8_t>(ma.e[v] + mb.e[v]);
            scalar prod = ca * cb;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(m, std::move(prod));
            } else {
                it->second = it->second + prod;
            }
        }
    }
    tpoly out(fld_, degree_ + o.degree_);
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) out.terms_.emplace_back(m, c);
    }
    return out;
}

tpoly tpoly::divide_by_linear(const tpoly& linear) const {
    if (linear.degree() != 1 || linear.is_zero()) {
        fail(errc::not_divisible, "divisor must be a nonzero linear form");
    }
    // pivot variable: highest-priority variable with nonzero coefficient
    int pivot = -1;
    scalar alpha = fld_.zero();
    for (const auto& [m, c] : linear.terms_) {
        for (int v = 0; v < 3; ++v) {
            if (m.e[v]) {
                if (pivot < 0 || v < pivot) {
                    pivot = v;
                    alpha = c;
                }
            }
        }
    }
    scalar alpha_inv = alpha.inv();
    // synthetic division treating the poly as univariate in the pivot:
    // repeatedly cancel the highest pivot-power terms.
    tpoly q(fld_, degree_ - 1);
    tpoly r = *this;
    while (!r.is_zero()) {
        // highest pivot-degree term group
        int top = -1;
        for (const auto& [m, c] : r.terms_) top = std::max(top, static_cast<int>(m.e[pivot]));
        if (top <= 0) break;
        std::vector<std::pair<exp3, scalar>> qts;
        for (const auto& [m, c] : r.terms_) {
            if (m.e[pivot] == top) {
                exp3 d = m;
                d.e[pivot] -= 1;
                qts.emplace_back(d, c * alpha_inv);
            }
        }
        tpoly qpart = from_terms(fld_, degree_ - 1, std::move(qts));
        q = q + qpart;
        r = r - qpart * linear;
    }
    if (!r.is_zero()) fail(errc::not_divisible, "linear form does not divide the polynomial");
    return q;
}

bform tpoly::drop_third() const {
    bform out(fld_, degree_);
    for (const auto& [m, c] : terms_) {
        if (m.e[2]) continue;
        // monomial a^{e0} b^{e1}: s-power e0, t-power e1 = degree - e0
        out.set_coeff(m.e[1], out.coeff(m.e[1]) + c);
    }
    return out;
}

std::string tpoly::str() const {
    if (terms_.empty()) return "0";
    static const char* names = "abc";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int v = 0; v < 3; ++v) {
            if (!m.e[v]) continue;
            os << "*" << names[v];
            if (m.e[v] > 1) os << "^" << static_cast<int>(m.e[v]);
        }
    }
    return os.str();
}

}  // namespace sds
