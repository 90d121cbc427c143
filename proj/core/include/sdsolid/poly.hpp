#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sdsolid/field.hpp"

namespace sds {

/// Exponent tuple of a monomial in (x,y,z,w).
struct exp4 {
    std::array<std::uint8_t, 4> e{0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }
    std::uint8_t operator[](int i) const { return e[i]; }
    friend bool operator==(const exp4& a, const exp4& b) { return a.e == b.e; }
};

/// Canonical term order: within one degree, descending lexicographic on
/// (x,y,z,w) — x^d first, w^d last. Matrix columns and serialized polynomials
/// all use this order.
inline bool mono_before(const exp4& a, const exp4& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.e > b.e;
}

/// All C(d+3,3) exponent tuples of total degree d, in canonical order.
std::vector<exp4> monomials_of_degree(int d);

class bform;
class tpoly;

/// Sparse homogeneous polynomial in x,y,z,w over a fixed field. Immutable
/// value type; terms are kept sorted in canonical order with no zero
/// coefficients.
class hpoly {
  public:
    hpoly() = default;  // zero of degree 0 over Q
    hpoly(field fld, int degree) : fld_(std::move(fld)), degree_(degree) {}

    static hpoly from_terms(field fld, int degree,
                            std::vector<std::pair<exp4, scalar>> terms);
    /// Integer-coefficient convenience used by fixtures.
    static hpoly from_int_terms(const field& fld, int degree,
                                const std::vector<std::pair<exp4, long long>>& terms);
    /// Parse "4*x^6 - 2*x*y^5 + w^6" style text (whitespace-insensitive,
    /// ^ powers, * or juxtaposition products, integer coefficients).
    /// expect_degree >= 0 enforces the degree (required for zero input).
    static hpoly parse(const field& fld, const std::string& text, int expect_degree = -1);

    const field& fld() const { return fld_; }
    int degree() const { return degree_; }
    const std::vector<std::pair<exp4, scalar>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    scalar evaluate(const std::array<scalar, 4>& pt) const;
    hpoly partial(int var) const;
    /// Matrix of second partials evaluated at pt (symmetric 4x4).
    std::array<std::array<scalar, 4>, 4> hessian_at(const std::array<scalar, 4>& pt) const;

    hpoly operator+(const hpoly& o) const;
    hpoly operator-(const hpoly& o) const;
    hpoly operator*(const hpoly& o) const;
    hpoly scaled(const scalar& c) const;
    /// F(M.v): substitute the linear change of coordinates given by M.
    hpoly substituted(const std::array<std::array<scalar, 4>, 4>& m) const;

    /// F(s.p0 + t.p1) as a binary form of the same degree. The points must
    /// not be proportional.
    bform restrict_to_line(const std::array<scalar, 4>& p0,
                           const std::array<scalar, 4>& p1) const;
    /// F(a.b0 + b.b1 + c.b2) as a ternary form; basis must span a plane.
    tpoly restrict_to_plane(const std::array<scalar, 4>& b0,
                            const std::array<scalar, 4>& b1,
                            const std::array<scalar, 4>& b2) const;

    std::string str() const;

  private:
    field fld_;
    int degree_ = 0;
    std::vector<std::pair<exp4, scalar>> terms_;
};

/// Dense binary form of fixed degree in parameters (s,t):
/// coeff(i) multiplies s^{degree-i} t^i.
class bform {
  public:
    bform() = default;
    bform(field fld, int degree) : fld_(std::move(fld)), coeffs_(degree + 1, fld_.zero()) {}

    const field& fld() const { return fld_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const scalar& coeff(int i) const { return coeffs_[i]; }
    void set_coeff(int i, scalar v) { coeffs_[i] = std::move(v); }
    bool is_zero() const;

    scalar eval(const scalar& s, const scalar& t) const;

    bform derivative_s() const;
    bform derivative_t() const;

    /// Monic gcd as binary forms (includes any common root at (0:1)).
    static bform gcd(const bform& a, const bform& b);

    /// Multiplicity of the projective root (s0:t0); 0 when not a root.
    int root_multiplicity(const scalar& s0, const scalar& t0) const;

    /// All projective roots over the coefficient field with multiplicities.
    /// Finite fields only (enumerates parameters).
    std::vector<std::pair<std::array<scalar, 2>, int>> roots() const;

    /// Exact division by the linear form (t0.s - s0.t) vanishing at (s0:t0).
    bform divide_root(const scalar& s0, const scalar& t0) const;

    /// True when squarefree over the algebraic closure (gcd with both
    /// partial derivatives is constant).
    bool squarefree() const;

    /// Degrees of the irreducible factors over the coefficient field,
    /// repeated with multiplicity; sorted. Finite fields only.
    std::vector<int> factor_degrees() const;

    std::string str() const;

  private:
    field fld_;
    std::vector<scalar> coeffs_;
};

/// Exponent tuple for ternary monomials.
struct exp3 {
    std::array<std::uint8_t, 3> e{0, 0, 0};
    int degree() const { return e[0] + e[1] + e[2]; }
    friend bool operator==(const exp3& a, const exp3& b) { return a.e == b.e; }
};

inline bool mono3_before(const exp3& a, const exp3& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.e > b.e;
}

std::vector<exp3> monomials3_of_degree(int d);

/// Re-express f over an extension of its coefficient field via the canonical
/// embedding (same p, k | k'). Identity when the fields already match.
hpoly lift(const hpoly& f, const field& ext);

/// Sparse homogeneous ternary polynomial (plane curves in plane coordinates).
class tpoly {
  public:
    tpoly() = default;
    tpoly(field fld, int degree) : fld_(std::move(fld)), degree_(degree) {}

    static tpoly from_terms(field fld, int degree,
                            std::vector<std::pair<exp3, scalar>> terms);

    const field& fld() const { return fld_; }
    int degree() const { return degree_; }
    const std::vector<std::pair<exp3, scalar>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    scalar evaluate(const std::array<scalar, 3>& pt) const;

    tpoly operator+(const tpoly& o) const;
    tpoly operator-(const tpoly& o) const;
    tpoly operator*(const tpoly& o) const;
    tpoly scaled(const scalar& c) const;

    /// Exact quotient by a ternary linear form; NotDivisible when the
    /// remainder is nonzero.
    tpoly divide_by_linear(const tpoly& linear) const;

    /// Restriction to the coordinate line {third variable = 0} as a binary
    /// form in the first two variables.
    bform drop_third() const;

    std::string str() const;

  private:
    field fld_;
    int degree_ = 0;
    std::vector<std::pair<exp3, scalar>> terms_;
};

}  // namespace sds
