#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sdsolid/field.hpp"

namespace sds {

/// Projective point of P³ in leading-one canonical form: the first nonzero
/// coordinate (in x,y,z,w order) equals 1.
class ppoint {
  public:
    ppoint() = default;
    /// Canonicalizes by dividing through by the first nonzero coordinate.
    ppoint(const field& fld, std::array<scalar, 4> coords);

    const field& fld() const { return fld_; }
    const std::array<scalar, 4>& coords() const { return c_; }
    const scalar& operator[](int i) const { return c_[i]; }
    /// Index of the leading 1 (which chart the point belongs to).
    int lead() const { return lead_; }

    /// Total order: chart first (x=1 points before y=1 before z=1 before
    /// w=1), then coordinate order within the chart. Matches enumeration.
    int cmp(const ppoint& o) const;
    friend bool operator==(const ppoint& a, const ppoint& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const ppoint& a, const ppoint& b) { return a.cmp(b) != 0; }
    friend bool operator<(const ppoint& a, const ppoint& b) { return a.cmp(b) < 0; }

    std::string str() const;

  private:
    field fld_;
    std::array<scalar, 4> c_;
    int lead_ = -1;
};

/// Line of P³ as canonical Plücker coordinates (p01,p02,p03,p12,p13,p23 with
/// the first nonzero equal to 1) plus two cached spanning points (the reduced
/// row echelon basis of the span, itself canonical).
class line {
  public:
    line() = default;

    const field& fld() const { return fld_; }
    const std::array<scalar, 6>& pluecker() const { return pl_; }
    const ppoint& point_a() const { return a_; }
    const ppoint& point_b() const { return b_; }

    bool contains(const ppoint& p) const;
    /// The q+1 points of the line, in canonical order. Finite fields only.
    std::vector<ppoint> points() const;

    int cmp(const line& o) const;
    friend bool operator==(const line& a, const line& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const line& a, const line& b) { return a.cmp(b) != 0; }
    friend bool operator<(const line& a, const line& b) { return a.cmp(b) < 0; }

    std::string str() const;

    friend line line_through(const ppoint& a, const ppoint& b);

  private:
    field fld_;
    std::array<scalar, 6> pl_;
    ppoint a_, b_;
};

/// Canonical line through two distinct points; independent of their order
/// and scaling.
line line_through(const ppoint& a, const ppoint& b);

bool collinear(const ppoint& a, const ppoint& b, const ppoint& c);

/// q³ + q² + q + 1.
std::uint64_t p3_point_count(const field& fld);

/// Visit every point of P³(F_q) exactly once in canonical chart order.
/// Requires q³ ≤ guard.
void for_each_point(const field& fld, const std::function<void(const ppoint&)>& fn,
                    std::uint64_t guard = default_enum_guard);

std::vector<ppoint> enumerate_points(const field& fld,
                                     std::uint64_t guard = default_enum_guard);

struct extension_counts {
    /// Cumulative distinct-point counts N_1 <= ... <= N_m (each point counted
    /// once, at its minimal field of definition).
    std::vector<std::uint64_t> per_degree;
    bool stabilized = false;  // m >= 2 and N_{m-1} == N_m
};

/// Count points of P³ over the tower F_{p^k} ⊂ F_{p^2k} ⊂ ... ⊂ F_{p^mk}
/// satisfying pred (pred receives points over the extension fields).
/// Cumulative and deduplicated: a point already defined over a smaller field
/// of the tower is not recounted.
extension_counts new_points_over_extension(const field& base,
                                           const std::function<bool(const ppoint&)>& pred,
                                           int max_degree,
                                           std::uint64_t guard = default_enum_guard);

/// True when the point's coordinates are fixed by Frobenius^i, i.e. the
/// point is defined over the degree-i subfield. Canonical form makes the
/// projective and coordinate-wise statements coincide.
bool defined_over_subfield(const ppoint& p, std::uint32_t subfield_k);

/// Re-express a point over an extension of its field via the canonical
/// embedding (same p, k | k'). Preserves canonical form.
ppoint lift_point(const ppoint& p, const field& ext);

}  // namespace sds
