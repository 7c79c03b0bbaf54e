#pragma once

// Closed-form cohomology ring, total Pontrjagin class and total Stiefel-Whitney
// class of the projective bundles A(l,rho,k1,k2) = S^(2l+1) x_(S^1) P(C^k1_rho + C^k2)
// and sphere bundles B(l,rho,k1,k2) = S^(2l+1) x_(S^1) S(C^k1_rho + R^(2k2+1)).

#include <compare>
#include <stdexcept>
#include <string>

#include "quotient.hpp"

namespace torusclass {

enum class Family { A, B };

inline char to_char(Family f) { return f == Family::A ? 'A' : 'B'; }

/// Raised when a descriptor violates its family's parameter constraints.
class descriptor_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ManifoldDescriptor {
    Family family = Family::A;
    int ell = 1;
    long long rho = 0;
    int k1 = 1;
    int k2 = 1;

    friend auto operator<=>(const ManifoldDescriptor&, const ManifoldDescriptor&) = default;
};

/// First violated rule, or an empty string for a valid descriptor.
inline std::string violated_rule(const ManifoldDescriptor& d)
{
    if (d.ell < 1) return "l >= 1";
    if (d.k1 < 1) return "k1 >= 1";
    if (d.k2 < 0) return "k2 >= 0";
    if (d.family == Family::A && d.k2 < 1) return "family A requires k2 >= 1";
    return {};
}

inline bool is_valid(const ManifoldDescriptor& d) { return violated_rule(d).empty(); }

inline void validate(const ManifoldDescriptor& d)
{
    if (auto rule = violated_rule(d); !rule.empty()) throw descriptor_error("invalid descriptor: " + rule);
}

/// `B(3,-2,1,3)`
inline std::string render(const ManifoldDescriptor& d)
{
    return std::string(1, to_char(d.family)) + "(" + std::to_string(d.ell) + "," + std::to_string(d.rho) + "," +
           std::to_string(d.k1) + "," + std::to_string(d.k2) + ")";
}

inline int dimension(const ManifoldDescriptor& d)
{
    validate(d);
    return d.family == Family::A ? 2 * (d.ell + d.k1 + d.k2 - 1) : 2 * (d.ell + d.k1 + d.k2);
}

namespace detail {

inline Integer int_pow(const Integer& base, unsigned e)
{
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

inline GeneratorsPtr generators_of(const ManifoldDescriptor& d)
{
    if (d.family == Family::A) return RingPresentation::generators_for("x", "y", 2);
    int w_degree = d.k2 == 0 ? 2 * d.k1 : 2 * (d.k1 + d.k2);
    return RingPresentation::generators_for("x", "z", w_degree);
}

}  // namespace detail

/// H*(M; Z) as Z[x,w]/<x^(l+1), f>, canonicalized.
inline RingPresentation cohomology(const ManifoldDescriptor& d)
{
    validate(d);
    auto gens = detail::generators_of(d);
    GradedPoly x = GradedPoly::generator(gens, 0), w = GradedPoly::generator(gens, 1);
    GradedPoly f(gens);
    if (d.family == Family::A) {
        f = pow(w, d.k2) * pow(w + Integer(d.rho) * x, d.k1);
    } else if (d.k2 == 0) {
        f = w * (w + detail::int_pow(d.rho, d.k1) * pow(x, d.k1));
    } else {
        f = w * w;
    }
    return canonicalize(RingPresentation(d.ell, std::move(f)));
}

namespace detail {

/// (1 + u)^e computed in the quotient ring.
inline NormalElement one_plus_pow(const RingPresentation& ring, const GradedPoly& u, unsigned e)
{
    return ring_pow(normal_form(ring.one() + u, ring), e);
}

}  // namespace detail

inline NormalElement pontrjagin(const ManifoldDescriptor& d)
{
    RingPresentation ring = cohomology(d);
    GradedPoly x = ring.x(), w = ring.w();
    NormalElement p = detail::one_plus_pow(ring, x * x, d.ell + 1);
    if (d.family == Family::A) {
        GradedPoly shifted = Integer(d.rho) * x + w;
        p = ring_mul(p, detail::one_plus_pow(ring, shifted * shifted, d.k1));
        p = ring_mul(p, detail::one_plus_pow(ring, w * w, d.k2));
    } else {
        p = ring_mul(p, detail::one_plus_pow(ring, Integer(d.rho) * Integer(d.rho) * (x * x), d.k1));
    }
    return p;
}

inline NormalElement stiefel_whitney(const ManifoldDescriptor& d)
{
    RingPresentation ring = reduce_mod2(cohomology(d));
    GradedPoly x = ring.x(), w = ring.w();
    NormalElement sw = detail::one_plus_pow(ring, x, d.ell + 1);
    if (d.family == Family::A) {
        sw = ring_mul(sw, detail::one_plus_pow(ring, Integer(d.rho) * x + w, d.k1));
        sw = ring_mul(sw, detail::one_plus_pow(ring, w, d.k2));
    } else {
        sw = ring_mul(sw, detail::one_plus_pow(ring, Integer(d.rho) * x, d.k1));
    }
    return sw;
}

struct CharClassReport {
    RingPresentation cohomology;
    NormalElement pontrjagin;
    NormalElement stiefel_whitney;
    int dimension;
};

inline CharClassReport report(const ManifoldDescriptor& d)
{
    return CharClassReport{cohomology(d), pontrjagin(d), stiefel_whitney(d), dimension(d)};
}

}  // namespace torusclass
