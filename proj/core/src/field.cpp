#include "sdsolid/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace sds {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// --- dense univariate polynomials over F_p (coefficient index = power of t);
// only used during context construction (modulus search, primitive element).
using upoly = std::vector<std::uint32_t>;

void up_trim(upoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

upoly up_mul(const upoly& f, const upoly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    upoly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>(
                (r[i + j] + static_cast<std::uint64_t>(f[i]) * g[j]) % p);
        }
    }
    up_trim(r);
    return r;
}

upoly up_mod(upoly f, const upoly& m, std::uint32_t p) {
    // m monic
    up_trim(f);
    const std::size_t dm = m.size() - 1;
    while (f.size() > dm) {
        std::uint32_t lead = f.back();
        std::size_t shift = f.size() - 1 - dm;
        if (lead) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(lead) * m[j] % p;
                std::uint64_t cur = f[shift + j];
                f[shift + j] = static_cast<std::uint32_t>((cur + p - sub) % p);
            }
        }
        f.pop_back();
        up_trim(f);
        if (f.size() <= dm) break;
    }
    return f;
}

upoly up_mulmod(const upoly& f, const upoly& g, const upoly& m, std::uint32_t p) {
    return up_mod(up_mul(f, g, p), m, p);
}

upoly up_powmod(upoly base, std::uint64_t e, const upoly& m, std::uint32_t p) {
    upoly r = {1};
    base = up_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = up_mulmod(r, base, m, p);
        base = up_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

upoly up_gcd(upoly a, upoly b, std::uint32_t p) {
    up_trim(a);
    up_trim(b);
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        std::uint32_t lead_inv =
            static_cast<std::uint32_t>(powmod_u64(b.back(), p - 2, p));
        upoly bm(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            bm[i] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(b[i]) * lead_inv % p);
        upoly r = up_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

upoly up_sub(upoly a, const upoly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    up_trim(a);
    return a;
}

// Rabin irreducibility test for a monic degree-k polynomial over F_p.
bool up_irreducible(const upoly& m, std::uint32_t p) {
    const std::size_t k = m.size() - 1;
    if (k == 0) return false;
    upoly t = {0, 1};
    // x := t^{p^i} mod m, stepping one Frobenius power at a time
    upoly x = up_mod(t, m, p);
    std::vector<std::size_t> prime_divs;
    std::size_t kk = k;
    for (std::size_t d = 2; d * d <= kk; ++d) {
        if (kk % d == 0) {
            prime_divs.push_back(d);
            while (kk % d == 0) kk /= d;
        }
    }
    if (kk > 1) prime_divs.push_back(kk);
    for (std::size_t i = 1; i <= k; ++i) {
        x = up_powmod(std::move(x), p, m, p);
        for (std::size_t d : prime_divs) {
            if (i == k / d) {
                upoly g = up_gcd(m, up_sub(x, t, p), p);
                if (g.size() != 1) return false;  // nontrivial factor
            }
        }
    }
    upoly diff = up_sub(x, t, p);
    return diff.empty();  // t^{p^k} == t (mod m)
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % d == 0) return n == d;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin witness set for all n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                            23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// fq_ctx

fq_ctx::fq_ctx(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    unsigned __int128 q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > (static_cast<unsigned __int128>(1) << 63)) {
            fail(errc::extension_too_large,
                 "p^k exceeds the representable bound 2^63");
        }
    }
    q_ = static_cast<std::uint64_t>(q);

    if (k_ == 1) {
        modulus_ = {0, 1};  // the polynomial t: no extension
        eng_ = engine::prime_word;
        return;
    }

    // Lexicographically-first irreducible monic of degree k: enumerate the
    // non-leading coefficients as (c0, c1, ...) counting c0 fastest.
    std::uint64_t limit = 1;
    for (std::uint32_t i = 0; i < k; ++i) limit *= p;
    bool found = false;
    for (std::uint64_t code = 0; code < limit; ++code) {
        upoly m(k + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < k; ++i) {
            m[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        m[k] = 1;
        if (up_irreducible(m, p)) {
            modulus_ = std::move(m);
            found = true;
            break;
        }
    }
    if (!found) fail(errc::extension_too_large, "no irreducible modulus found");

    if (q_ <= (std::uint64_t(1) << 20)) {
        eng_ = engine::table;
        // Primitive element: smallest code (in code order) of full order q-1.
        const std::uint64_t n = q_ - 1;
        auto factors = prime_factors_u64(n);
        std::uint64_t g = 0;
        for (std::uint64_t cand = 2; cand < q_; ++cand) {
            bool primitive = true;
            for (std::uint64_t f : factors) {
                // order test via poly engine (tables not built yet)
                std::uint64_t e = n / f;
                std::uint64_t acc = 1, base = cand;
                while (e) {
                    if (e & 1) acc = poly_mul(acc, base);
                    base = poly_mul(base, base);
                    e >>= 1;
                }
                if (acc == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = cand;
                break;
            }
        }
        exp_.assign(n, 0);
        log_.assign(q_, 0);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 0; i < n; ++i) {
            exp_[i] = static_cast<std::uint32_t>(acc);
            log_[acc] = static_cast<std::uint32_t>(i);
            acc = poly_mul(acc, g);
        }
        zech_.assign(n, 0);
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t s = poly_add(1, exp_[i]);
            zech_[i] = static_cast<std::uint32_t>(s == 0 ? n : log_[s]);
        }
    } else {
        eng_ = engine::poly;
    }
}

std::shared_ptr<const fq_ctx> fq_ctx::get(std::uint32_t p, std::uint32_t k) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const fq_ctx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    std::uint64_t key = (static_cast<std::uint64_t>(p) << 16) | k;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = std::shared_ptr<const fq_ctx>(new fq_ctx(p, k));
    cache.emplace(key, ctx);
    return ctx;
}

std::uint64_t fq_ctx::poly_add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t fq_ctx::poly_mul(std::uint64_t a, std::uint64_t b) const {
    // q <= 2^63 bounds k by 63, so the fixed buffers always suffice.
    const std::uint32_t kk = std::min(k_, 63u);
    std::uint32_t da[64], db[64];
    std::uint64_t conv[127];
    for (std::uint32_t i = 0; i < kk; ++i) {
        da[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
        db[i] = static_cast<std::uint32_t>(b % p_);
        b /= p_;
    }
    const std::uint32_t n = 2 * kk - 1;
    for (std::uint32_t i = 0; i < n; ++i) conv[i] = 0;
    for (std::uint32_t i = 0; i < kk; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < kk; ++j) {
            conv[i + j] = (conv[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
        }
    }
    // reduce t^{k+m} via t^k = -sum modulus[j] t^j
    for (std::uint32_t i = n; i-- > kk;) {
        std::uint64_t c = conv[i];
        if (!c) continue;
        conv[i] = 0;
        for (std::uint32_t j = 0; j < kk; ++j) {
            std::uint64_t sub = c * modulus_[j] % p_;
            conv[i - kk + j] = (conv[i - kk + j] + p_ - sub) % p_;
        }
    }
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < kk; ++i) {
        r += conv[i] * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t fq_ctx::table_mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t n = q_ - 1;
    std::uint64_t s = log_[a] + log_[b];
    if (s >= n) s -= n;
    return exp_[s];
}

std::uint64_t fq_ctx::table_add(std::uint64_t a, std::uint64_t b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint64_t n = q_ - 1;
    std::uint64_t la = log_[a], lb = log_[b];
    std::uint64_t d = lb >= la ? lb - la : lb + n - la;
    std::uint64_t z = zech_[d];
    if (z == n) return 0;  // b = -a
    std::uint64_t s = la + z;
    if (s >= n) s -= n;
    return exp_[s];
}

std::uint64_t fq_ctx::add(std::uint64_t a, std::uint64_t b) const {
    switch (eng_) {
        case engine::prime_word: {
            std::uint64_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        case engine::table: return table_add(a, b);
        case engine::poly: return poly_add(a, b);
    }
    return 0;
}

std::uint64_t fq_ctx::neg(std::uint64_t a) const {
    if (a == 0) return 0;
    if (eng_ == engine::prime_word) return p_ - a;
    std::uint64_t r = 0, mult = 1, x = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t d = x % p_;
        x /= p_;
        r += (d ? p_ - d : 0) * mult;
        mult *= p_;
    }
    return r;
}

std::uint64_t fq_ctx::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t fq_ctx::mul(std::uint64_t a, std::uint64_t b) const {
    switch (eng_) {
        case engine::prime_word: return a * b % p_;
        case engine::table: return table_mul(a, b);
        case engine::poly: return poly_mul(a, b);
    }
    return 0;
}

std::uint64_t fq_ctx::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t fq_ctx::inv(std::uint64_t a) const {
    if (a == 0) fail(errc::parse_error, "inverse of zero");
    if (eng_ == engine::table) {
        std::uint64_t n = q_ - 1;
        std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : n - l];
    }
    return pow(a, q_ - 2);
}

std::uint64_t fq_ctx::from_int(long long n) const {
    long long m = n % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint64_t>(m);
}

std::vector<std::uint32_t> fq_ctx::digits(std::uint64_t code) const {
    std::vector<std::uint32_t> ds(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        ds[i] = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return ds;
}

std::uint64_t fq_ctx::from_digits(const std::vector<std::uint32_t>& ds) const {
    if (ds.size() > k_) fail(errc::parse_error, "too many digits for field element");
    std::uint64_t r = 0, mult = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = i < ds.size() ? ds[i] : 0;
        if (d >= p_) fail(errc::parse_error, "digit out of range");
        r += static_cast<std::uint64_t>(d) * mult;
        mult *= p_;
    }
    return r;
}

bool fq_ctx::less(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return a < b;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint64_t da = a % p_, db = b % p_;
        if (da != db) return da < db;
        a /= p_;
        b /= p_;
    }
    return false;
}

std::optional<std::uint64_t> fq_ctx::sqrt(std::uint64_t a) const {
    if (a == 0) return 0;
    std::uint64_t r = 0;
    switch (eng_) {
        case engine::table: {
            std::uint64_t l = log_[a];
            if (l & 1) return std::nullopt;
            r = exp_[l / 2];
            break;
        }
        case engine::prime_word:
        case engine::poly: {
            if (pow(a, (q_ - 1) / 2) != 1) return std::nullopt;
            if (q_ % 4 == 3) {
                r = pow(a, (q_ + 1) / 4);
            } else {
                // Tonelli-Shanks with the first non-residue in code order.
                std::uint64_t qq = q_ - 1;
                std::uint64_t s = 0;
                while ((qq & 1) == 0) {
                    qq >>= 1;
                    ++s;
                }
                std::uint64_t z = 2;
                while (pow(z, (q_ - 1) / 2) == 1) ++z;
                std::uint64_t m = s;
                std::uint64_t c = pow(z, qq);
                std::uint64_t t = pow(a, qq);
                r = pow(a, (qq + 1) / 2);
                while (t != 1) {
                    std::uint64_t i = 0, tt = t;
                    while (tt != 1) {
                        tt = mul(tt, tt);
                        ++i;
                    }
                    std::uint64_t b = c;
                    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
                    m = i;
                    c = mul(b, b);
                    t = mul(t, c);
                    r = mul(r, b);
                }
            }
            break;
        }
    }
    std::uint64_t r2 = neg(r);
    return less(r, r2) ? r : r2;
}

std::string fq_ctx::str(std::uint64_t code) const {
    if (k_ == 1) return std::to_string(code);
    auto ds = digits(code);
    std::ostringstream os;
    os << "[";
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (i) os << ",";
        os << ds[i];
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// embeddings

std::vector<std::uint64_t> embedding_powers(const fq_ctx& base, const fq_ctx& top) {
    if (base.p() != top.p() || top.k() % base.k() != 0) {
        fail(errc::field_mismatch, "no embedding between these fields");
    }
    std::vector<std::uint64_t> powers(base.k());
    powers[0] = 1;
    if (base.k() == 1) return powers;
    // lexicographically-first root of base's modulus in top
    const auto& m = base.modulus();
    bool found = false;
    std::uint64_t best = 0;
    for (std::uint64_t cand = 0; cand < top.q(); ++cand) {
        std::uint64_t acc = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            acc = top.add(top.mul(acc, cand), top.from_int(m[i]));
        }
        if (acc == 0 && (!found || top.less(cand, best))) {
            best = cand;
            found = true;
        }
    }
    if (!found) fail(errc::field_mismatch, "modulus has no root in target field");
    for (std::uint32_t i = 1; i < base.k(); ++i) powers[i] = top.pow(best, i);
    return powers;
}

std::uint64_t embed(std::uint64_t code, const fq_ctx& base, const fq_ctx& top,
                    const std::vector<std::uint64_t>& powers) {
    auto ds = base.digits(code);
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < base.k(); ++i) {
        acc = top.add(acc, top.mul(top.from_int(ds[i]), powers[i]));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// field

field field::rationals() {
    field f;
    f.kind_ = field_kind::rational;
    return f;
}

field field::finite(std::uint32_t p, std::uint32_t k, std::uint64_t enum_guard) {
    if (!is_prime_u64(p)) fail(errc::non_prime, "p = " + std::to_string(p));
    if (p <= 5) fail(errc::char_too_small, "characteristic must exceed 5, got " + std::to_string(p));
    if (p > (std::uint64_t(1) << 31)) {
        fail(errc::extension_too_large, "p exceeds the single-word bound 2^31");
    }
    if (k < 1) fail(errc::extension_too_large, "extension degree must be at least 1");
    unsigned __int128 cube = 1;
    for (std::uint32_t i = 0; i < 3 * k; ++i) {
        cube *= p;
        if (cube > enum_guard) {
            fail(errc::extension_too_large,
                 "p^{3k} exceeds the enumeration guard " + std::to_string(enum_guard));
        }
    }
    field f;
    f.kind_ = field_kind::finite;
    f.ctx_ = fq_ctx::get(p, k);
    return f;
}

field field::finite_unchecked(std::uint32_t p, std::uint32_t k) {
    if (!is_prime_u64(p)) fail(errc::non_prime, "p = " + std::to_string(p));
    if (p > (std::uint64_t(1) << 31)) {
        fail(errc::extension_too_large, "p exceeds the single-word bound 2^31");
    }
    if (k < 1) fail(errc::extension_too_large, "extension degree must be at least 1");
    field f;
    f.kind_ = field_kind::finite;
    f.ctx_ = fq_ctx::get(p, k);
    return f;
}

field field::parse(const std::string& text, std::uint64_t enum_guard) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s == "rational") return rationals();
    std::uint64_t p = 0, k = 1;
    bool have_p = false;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) fail(errc::parse_error, "bad field spec '" + text + "'");
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (val.empty() || val.size() > 18 ||
            val.find_first_not_of("0123456789") != std::string::npos) {
            fail(errc::parse_error, "bad field spec '" + text + "'");
        }
        std::uint64_t num = std::stoull(val);
        if (key == "p") {
            p = num;
            have_p = true;
        } else if (key == "k") {
            k = num;
        } else {
            fail(errc::parse_error, "unknown field spec key '" + key + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (!have_p) fail(errc::parse_error, "field spec needs p=... or 'rational'");
    if (p > (std::uint64_t(1) << 31)) {
        fail(errc::extension_too_large, "p exceeds the single-word bound 2^31");
    }
    if (k > 64) fail(errc::extension_too_large, "extension degree too large");
    return finite(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), enum_guard);
}

std::uint32_t field::p() const {
    if (!is_finite()) fail(errc::field_mismatch, "rational field has no characteristic");
    return ctx_->p();
}

std::uint32_t field::k() const {
    if (!is_finite()) fail(errc::field_mismatch, "rational field has no extension degree");
    return ctx_->k();
}

std::uint64_t field::q() const {
    if (!is_finite()) fail(errc::field_mismatch, "rational field is infinite");
    return ctx_->q();
}

const fq_ctx& field::ctx() const {
    if (!is_finite()) fail(errc::field_mismatch, "rational field has no finite context");
    return *ctx_;
}

field field::extension(std::uint32_t j) const {
    if (!is_finite()) fail(errc::unsupported, "extensions only for finite fields");
    if (j < 1) fail(errc::extension_too_large, "extension degree must be at least 1");
    return finite_unchecked(p(), k() * j);
}

std::string field::str() const {
    if (!is_finite()) return "rational";
    if (k() == 1) return "p=" + std::to_string(p());
    return "p=" + std::to_string(p()) + ",k=" + std::to_string(k());
}

bool operator==(const field& a, const field& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == field_kind::rational) return true;
    return a.p() == b.p() && a.k() == b.k();
}

scalar field::zero() const { return from_int(0); }
scalar field::one() const { return from_int(1); }

scalar field::from_int(long long n) const {
    scalar s;
    s.kind_ = kind_;
    if (is_finite()) {
        s.ctx_ = ctx_;
        s.code_ = ctx_->from_int(n);
    } else {
        s.q_ = rat(static_cast<long>(n));
    }
    return s;
}

scalar field::from_rat(const rat& r) const {
    scalar s;
    s.kind_ = kind_;
    if (!is_finite()) {
        s.q_ = r;
        return s;
    }
    // reduce num/den mod p; requires p not dividing the denominator
    std::uint64_t n_mod = mpz_fdiv_ui(mpq_numref(r.raw()), ctx_->p());
    std::uint64_t d_mod = mpz_fdiv_ui(mpq_denref(r.raw()), ctx_->p());
    if (d_mod == 0) {
        fail(errc::wrong_characteristic, "denominator divisible by p in reduction mod " +
                                             std::to_string(ctx_->p()));
    }
    s.ctx_ = ctx_;
    s.code_ = ctx_->mul(n_mod, ctx_->inv(d_mod));
    return s;
}

scalar field::from_code(std::uint64_t code) const {
    if (!is_finite()) fail(errc::field_mismatch, "codes are for finite fields");
    if (code >= ctx_->q()) fail(errc::parse_error, "element code out of range");
    scalar s;
    s.kind_ = field_kind::finite;
    s.ctx_ = ctx_;
    s.code_ = code;
    return s;
}

scalar field::from_digits(const std::vector<std::uint32_t>& ds) const {
    return from_code(ctx().from_digits(ds));
}

scalar field::sample(rng& gen) const {
    if (!is_finite()) {
        fail(errc::rational_sampling_unsupported,
             "uniform sampling needs a finite field");
    }
    return from_code(gen.below(ctx_->q()));
}

// ---------------------------------------------------------------------------
// scalar

namespace {
void require_same_field(const scalar& a, const scalar& b) {
    if (!a.same_field(b)) fail(errc::field_mismatch, "operands from different fields");
}
}  // namespace

field scalar::fld() const {
    if (kind_ == field_kind::rational) return field::rationals();
    return field::finite_unchecked(ctx_->p(), ctx_->k());
}

std::uint64_t scalar::code() const {
    if (kind_ != field_kind::finite) fail(errc::field_mismatch, "rational scalar has no code");
    return code_;
}

const rat& scalar::value() const {
    if (kind_ != field_kind::rational) fail(errc::field_mismatch, "finite scalar has no rational value");
    return q_;
}

std::vector<std::uint32_t> scalar::digits() const {
    if (kind_ != field_kind::finite) fail(errc::field_mismatch, "rational scalar has no digits");
    return ctx_->digits(code_);
}

bool scalar::is_zero() const {
    return kind_ == field_kind::finite ? code_ == 0 : q_.is_zero();
}

scalar scalar::operator-() const {
    scalar r = *this;
    if (kind_ == field_kind::finite) {
        r.code_ = ctx_->neg(code_);
    } else {
        r.q_ = -q_;
    }
    return r;
}

scalar scalar::inv() const {
    scalar r = *this;
    if (kind_ == field_kind::finite) {
        r.code_ = ctx_->inv(code_);
    } else {
        r.q_ = q_.inv();
    }
    return r;
}

std::optional<scalar> scalar::sqrt() const {
    if (kind_ == field_kind::finite) {
        auto root = ctx_->sqrt(code_);
        if (!root) return std::nullopt;
        scalar r = *this;
        r.code_ = *root;
        return r;
    }
    // rational: exact square test on numerator and denominator
    if (q_.sgn() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(mpq_numref(q_.raw())) ||
        !mpz_perfect_square_p(mpq_denref(q_.raw()))) {
        return std::nullopt;
    }
    mpq_t root;
    mpq_init(root);
    mpz_sqrt(mpq_numref(root), mpq_numref(q_.raw()));
    mpz_sqrt(mpq_denref(root), mpq_denref(q_.raw()));
    scalar r;
    r.kind_ = field_kind::rational;
    r.q_ = rat::from_mpq(root);
    mpq_clear(root);
    return r;
}

scalar operator+(const scalar& a, const scalar& b) {
    require_same_field(a, b);
    scalar r = a;
    if (a.kind_ == field_kind::finite) {
        r.code_ = a.ctx_->add(a.code_, b.code_);
    } else {
        r.q_ = a.q_ + b.q_;
    }
    return r;
}

scalar operator-(const scalar& a, const scalar& b) {
    require_same_field(a, b);
    scalar r = a;
    if (a.kind_ == field_kind::finite) {
        r.code_ = a.ctx_->sub(a.code_, b.code_);
    } else {
        r.q_ = a.q_ - b.q_;
    }
    return r;
}

scalar operator*(const scalar& a, const scalar& b) {
    require_same_field(a, b);
    scalar r = a;
    if (a.kind_ == field_kind::finite) {
        r.code_ = a.ctx_->mul(a.code_, b.code_);
    } else {
        r.q_ = a.q_ * b.q_;
    }
    return r;
}

bool operator==(const scalar& a, const scalar& b) {
    require_same_field(a, b);
    if (a.kind_ == field_kind::finite) return a.code_ == b.code_;
    return a.q_ == b.q_;
}

int scalar::cmp(const scalar& o) const {
    require_same_field(*this, o);
    if (kind_ == field_kind::finite) {
        if (code_ == o.code_) return 0;
        return ctx_->less(code_, o.code_) ? -1 : 1;
    }
    if (q_ == o.q_) return 0;
    return q_ < o.q_ ? -1 : 1;
}

std::string scalar::str() const {
    if (kind_ == field_kind::finite) return ctx_->str(code_);
    return q_.str();
}

}  // namespace sds
