#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdsolid/errors.hpp"
#include "sdsolid/rational.hpp"
#include "sdsolid/rng.hpp"

namespace sds {

enum class field_kind { rational, finite };

/// Default cap on q^3 = p^{3k}: fields beyond this cannot be exhaustively
/// enumerated in reasonable time, so construction refuses them unless the
/// caller raises the guard explicitly.
inline constexpr std::uint64_t default_enum_guard = std::uint64_t(1) << 31;

/// Immutable arithmetic context for F_{p^k}. Elements are encoded as integer
/// codes in [0, q): code = c0 + c1*p + ... + c_{k-1}*p^{k-1} where (c0..c_{k-1})
/// are the coefficients in the basis 1, t, ..., t^{k-1} of F_p[t]/(modulus).
///
/// Three engines, selected by size:
///   k = 1            -> single-word arithmetic mod p
///   k >= 2, small q  -> log/exp/Zech tables over a primitive element
///   otherwise        -> coefficient-vector arithmetic mod the modulus
class fq_ctx {
  public:
    /// Cached deterministic context: same (p,k) always yields the same
    /// modulus and therefore the same code assignment.
    static std::shared_ptr<const fq_ctx> get(std::uint32_t p, std::uint32_t k);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    /// Monic degree-k modulus; modulus()[i] = coefficient of t^i. For k = 1
    /// this is the polynomial t (the convention for "no extension").
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;  // a != 0
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t frobenius(std::uint64_t a) const { return pow(a, p_); }

    std::uint64_t from_int(long long n) const;
    std::vector<std::uint32_t> digits(std::uint64_t code) const;
    std::uint64_t from_digits(const std::vector<std::uint32_t>& ds) const;

    /// Canonical square root: the root whose digit tuple (c0,...,c_{k-1}) is
    /// lexicographically smaller. Empty when a is a non-square.
    std::optional<std::uint64_t> sqrt(std::uint64_t a) const;

    /// Canonical order on elements: lexicographic on digit tuples.
    bool less(std::uint64_t a, std::uint64_t b) const;

    std::string str(std::uint64_t code) const;

    fq_ctx(const fq_ctx&) = delete;
    fq_ctx& operator=(const fq_ctx&) = delete;

  private:
    fq_ctx(std::uint32_t p, std::uint32_t k);

    enum class engine { prime_word, table, poly };

    std::uint64_t table_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t table_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t poly_add(std::uint64_t a, std::uint64_t b) const;

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint64_t q_;
    engine eng_;
    std::vector<std::uint32_t> modulus_;
    // table engine state
    std::vector<std::uint32_t> exp_;   // exp_[i] = code of g^i, i in [0, q-1)
    std::vector<std::uint32_t> log_;   // log_[code], log_[0] unused
    std::vector<std::uint32_t> zech_;  // zech_[i] = log(1 + g^i); q-1 marks 1+g^i = 0
};

class field;

/// One field element. Rational values carry an exact rat; finite values carry
/// a code plus their context. Cold-path type: hot loops work on raw codes.
class scalar {
  public:
    scalar() = default;  // rational zero

    field fld() const;
    field_kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == field_kind::finite; }
    bool same_field(const scalar& o) const {
        if (kind_ != o.kind_) return false;
        if (kind_ == field_kind::rational) return true;
        return ctx_ == o.ctx_ ||
               (ctx_->p() == o.ctx_->p() && ctx_->k() == o.ctx_->k());
    }

    std::uint64_t code() const;
    const rat& value() const;
    /// Coefficient tuple over F_p (length k) for finite elements.
    std::vector<std::uint32_t> digits() const;

    bool is_zero() const;
    scalar operator-() const;
    scalar inv() const;
    std::optional<scalar> sqrt() const;

    friend scalar operator+(const scalar& a, const scalar& b);
    friend scalar operator-(const scalar& a, const scalar& b);
    friend scalar operator*(const scalar& a, const scalar& b);
    friend bool operator==(const scalar& a, const scalar& b);
    friend bool operator!=(const scalar& a, const scalar& b) { return !(a == b); }

    /// Canonical order (digit-lex for finite, numeric for rational); used for
    /// deterministic point ordering, never for meaning.
    int cmp(const scalar& o) const;

    std::string str() const;

  private:
    friend class field;
    field_kind kind_ = field_kind::rational;
    std::shared_ptr<const fq_ctx> ctx_;
    std::uint64_t code_ = 0;
    rat q_;
};

/// Value-semantics handle to a field (Q or F_{p^k}).
class field {
  public:
    field() : kind_(field_kind::rational) {}

    static field rationals();
    /// Checked constructor: p prime, p > 5, p <= 2^31, p^{3k} within guard.
    static field finite(std::uint32_t p, std::uint32_t k = 1,
                        std::uint64_t enum_guard = default_enum_guard);
    /// Skips the p > 5 and enumeration-guard checks (still requires a prime
    /// p <= 2^31 and q <= 2^63). Reserved for the characteristic-5 demo
    /// surface and for targeted tests.
    static field finite_unchecked(std::uint32_t p, std::uint32_t k = 1);
    /// Parse "rational", "p=101" or "p=11,k=2".
    static field parse(const std::string& text,
                       std::uint64_t enum_guard = default_enum_guard);

    field_kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == field_kind::finite; }
    std::uint32_t p() const;
    std::uint32_t k() const;
    std::uint64_t q() const;
    const fq_ctx& ctx() const;
    std::shared_ptr<const fq_ctx> ctx_ptr() const { return ctx_; }

    /// The degree-j extension F_{p^{kj}} (same p). Enumeration guards apply
    /// at enumeration time, not here.
    field extension(std::uint32_t j) const;

    std::string str() const;
    friend bool operator==(const field& a, const field& b);
    friend bool operator!=(const field& a, const field& b) { return !(a == b); }

    scalar zero() const;
    scalar one() const;
    scalar from_int(long long n) const;
    scalar from_rat(const rat& r) const;  // finite: num * den^{-1} mod p
    scalar from_code(std::uint64_t code) const;
    scalar from_digits(const std::vector<std::uint32_t>& ds) const;
    scalar sample(rng& gen) const;  // finite only

  private:
    field_kind kind_;
    std::shared_ptr<const fq_ctx> ctx_;
};

/// Image of each basis power t^i (i < base.k) of `base` under the canonical
/// embedding into `top` (requires base.p == top.p, base.k | top.k). The
/// canonical embedding sends t to the lexicographically-first root of base's
/// modulus in top. Index 0 is always the code of 1.
std::vector<std::uint64_t> embedding_powers(const fq_ctx& base, const fq_ctx& top);

/// Apply the embedding described by `powers` to one code.
std::uint64_t embed(std::uint64_t code, const fq_ctx& base, const fq_ctx& top,
                    const std::vector<std::uint64_t>& powers);

bool is_prime_u64(std::uint64_t n);

}  // namespace sds
