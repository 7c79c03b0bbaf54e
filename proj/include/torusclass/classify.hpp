#pragma once

// Diffeomorphism classification, cohomology-ring equivalence and rigidity strata
// for the families A(l,rho,k1,k2) and B(l,rho,k1,k2).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isosearch.hpp"

namespace torusclass {

/// Two independent computations disagree; a bug, not bad input.
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class DiffeoOutcome { Diffeomorphic, NotDiffeomorphic, DimensionMismatch };

inline const char* to_string(DiffeoOutcome o)
{
    switch (o) {
    case DiffeoOutcome::Diffeomorphic: return "Diffeomorphic";
    case DiffeoOutcome::NotDiffeomorphic: return "NotDiffeomorphic";
    default: return "DimensionMismatch";
    }
}

/// (1 + e*r*x)^k2 (1 + e*(rho+r)*x)^k1 = (1 + rho'*x)^k1' in Z[x]/x^(l+1).
struct BottWitness {
    int epsilon = 1;
    Integer r = 0;
};

struct DiffeoVerdict {
    DiffeoOutcome outcome = DiffeoOutcome::NotDiffeomorphic;
    std::string reason;
    std::optional<BottWitness> witness;
};

enum class RigidityTag { R1, R2, R3 };

inline const char* to_string(RigidityTag t)
{
    switch (t) {
    case RigidityTag::R1: return "R1";
    case RigidityTag::R2: return "R2";
    default: return "R3";
    }
}

struct RigidityClass {
    RigidityTag tag;
    std::string clause;
};

/// B(l,rho,1,0) is the projective bundle A(l,rho,1,1); everything else is unchanged.
inline ManifoldDescriptor normalize(const ManifoldDescriptor& d)
{
    validate(d);
    if (d.family == Family::B && d.k1 == 1 && d.k2 == 0) return {Family::A, d.ell, d.rho, 1, 1};
    return d;
}

namespace detail {

inline void require_family(const ManifoldDescriptor& d, Family f)
{
    validate(d);
    if (d.family != f) throw descriptor_error(render(d) + " is not in family " + std::string(1, to_char(f)));
}

inline int fibre_rank(const ManifoldDescriptor& d) { return d.k1 + d.k2; }

/// Truncated power series (1 + c*x)^e mod x^(l+1), by ascending power.
inline std::vector<Integer> linear_power(const Integer& c, int e, int ell)
{
    std::vector<Integer> out(ell + 1, 0);
    for (int j = 0; j <= std::min(e, ell); ++j) out[j] = binomial(e, j) * int_pow(c, j);
    return out;
}

inline std::vector<Integer> truncated_mul(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::vector<Integer> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace detail

/// True iff A(l,rho,k1,k2) is diffeomorphic to CP^l x CP^(k1+k2-1): rho = 0 when l > 1,
/// rho*k1 divisible by k1+k2 when l = 1.
inline bool bott_decomposable(const ManifoldDescriptor& d)
{
    detail::require_family(d, Family::A);
    if (d.ell > 1) return d.rho == 0;
    return (Integer(d.rho) * d.k1) % detail::fibre_rank(d) == 0;
}

/// Solves the degree-1 coefficient for r per sign, then checks the full identity.
inline std::optional<BottWitness> bott_equivalent(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2)
{
    detail::require_family(d1, Family::A);
    detail::require_family(d2, Family::A);
    if (d1.ell != d2.ell || detail::fibre_rank(d1) != detail::fibre_rank(d2)) return std::nullopt;
    const int ell = d1.ell, n = detail::fibre_rank(d1);
    auto target = detail::linear_power(d2.rho, d2.k1, ell);
    for (int eps : {1, -1}) {
        Integer numerator = Integer(eps) * d2.rho * d2.k1 - Integer(d1.rho) * d1.k1;
        if (numerator % n != 0) continue;
        Integer r = numerator / n;
        auto lhs = detail::truncated_mul(detail::linear_power(eps * r, d1.k2, ell),
                                         detail::linear_power(eps * (d1.rho + r), d1.k1, ell));
        if (lhs == target) return BottWitness{eps, r};
    }
    return std::nullopt;
}

/// Sphere-bundle criterion; the three regimes depend on the base dimension.
inline bool sphere_equivalent(const ManifoldDescriptor& raw1, const ManifoldDescriptor& raw2)
{
    ManifoldDescriptor d1 = normalize(raw1), d2 = normalize(raw2);
    detail::require_family(d1, Family::B);
    detail::require_family(d2, Family::B);
    if (d1.ell != d2.ell || detail::fibre_rank(d1) != detail::fibre_rank(d2)) return false;
    if (d1.ell >= 4) {
        if (d1.rho == 0 && d2.rho == 0) return true;
        return d1.rho != 0 && std::llabs(d1.rho) == std::llabs(d2.rho) && d1.k1 == d2.k1 && d1.k2 == d2.k2;
    }
    if (d1.ell >= 2) return Integer(d1.k1) * d1.rho * d1.rho == Integer(d2.k1) * d2.rho * d2.rho;
    return ((Integer(d1.k1) * d1.rho) % 2 == 0) == ((Integer(d2.k1) * d2.rho) % 2 == 0);
}

inline DiffeoVerdict diffeomorphic(const ManifoldDescriptor& raw1, const ManifoldDescriptor& raw2)
{
    ManifoldDescriptor d1 = normalize(raw1), d2 = normalize(raw2);
    if (dimension(d1) != dimension(d2))
        return {DiffeoOutcome::DimensionMismatch,
                "dimensions differ (" + std::to_string(dimension(d1)) + " vs " + std::to_string(dimension(d2)) + ")",
                std::nullopt};
    if (d1.family != d2.family)
        return {DiffeoOutcome::NotDiffeomorphic,
                "second Betti numbers differ: projective bundle has rank 2 in degree 2, sphere bundle rank 1",
                std::nullopt};
    if (d1.family == Family::A) {
        const bool s1 = bott_decomposable(d1), s2 = bott_decomposable(d2);
        if (s1 && s2) {
            std::pair<int, int> f1 = std::minmax({d1.ell, detail::fibre_rank(d1) - 1});
            std::pair<int, int> f2 = std::minmax({d2.ell, detail::fibre_rank(d2) - 1});
            if (f1 == f2)
                return {DiffeoOutcome::Diffeomorphic,
                        "both are products CP^" + std::to_string(f1.first) + " x CP^" + std::to_string(f1.second),
                        std::nullopt};
            return {DiffeoOutcome::NotDiffeomorphic, "products of projective spaces of different dimensions", std::nullopt};
        }
        if (s1 != s2)
            return {DiffeoOutcome::NotDiffeomorphic, "exactly one of the two projective bundles is a product", std::nullopt};
        if (d1.ell != d2.ell)
            return {DiffeoOutcome::NotDiffeomorphic, "non-trivial projective bundles over different base dimensions",
                    std::nullopt};
        if (auto w = bott_equivalent(d1, d2))
            return {DiffeoOutcome::Diffeomorphic, "total Chern classes agree up to twist r and conjugation sign", w};
        return {DiffeoOutcome::NotDiffeomorphic, "no twist r and sign matches the total Chern classes", std::nullopt};
    }
    if (sphere_equivalent(d1, d2)) {
        const char* why = d1.ell >= 4   ? "same stable bundle data (rho up to sign, equal k1 and k2, or both trivial)"
                          : d1.ell >= 2 ? "equal fibre rank and equal k1*rho^2"
                                        : "equal fibre rank and equal parity of k1*rho";
        return {DiffeoOutcome::Diffeomorphic, why, std::nullopt};
    }
    const char* why = d1.ell >= 4   ? "bundle data differ beyond the sign of rho"
                      : d1.ell >= 2 ? "fibre rank or k1*rho^2 differ"
                                    : "fibre rank or parity of k1*rho differ";
    return {DiffeoOutcome::NotDiffeomorphic, why, std::nullopt};
}

/// Sphere bundles whose ring is that of CP^l x S^(2(k1+k2)).
inline bool in_split_class(const ManifoldDescriptor& raw)
{
    ManifoldDescriptor d = normalize(raw);
    detail::require_family(d, Family::B);
    if (d.rho == 0 || d.k2 > 0 || d.k1 >= d.ell + 1) return true;
    return d.rho % 2 == 0 && d.k1 < d.ell + 1 && d.ell + 1 <= 2 * d.k1;
}

/// Sphere bundles with k2 = 0, rho != 0, k1 <= l outside the split class.
inline bool in_twisted_class(const ManifoldDescriptor& raw)
{
    ManifoldDescriptor d = normalize(raw);
    detail::require_family(d, Family::B);
    return !in_split_class(d);
}

inline bool cohomology_isomorphic(const ManifoldDescriptor& raw1, const ManifoldDescriptor& raw2)
{
    ManifoldDescriptor d1 = normalize(raw1), d2 = normalize(raw2);
    if (dimension(d1) != dimension(d2) || d1.family != d2.family) return false;
    if (d1.family == Family::A) return diffeomorphic(d1, d2).outcome == DiffeoOutcome::Diffeomorphic;
    if (d1.ell != d2.ell || detail::fibre_rank(d1) != detail::fibre_rank(d2)) return false;
    if (d1.ell == 1) return true;
    const bool split1 = in_split_class(d1), split2 = in_split_class(d2);
    if (split1 && split2) return true;
    if (split1 != split2) return false;
    if (2 * d1.k1 <= d1.ell) return std::llabs(d1.rho) == std::llabs(d2.rho) && d1.k1 == d2.k1;
    return true;
}

/// Every stratum clause the descriptor satisfies; a valid descriptor satisfies exactly one.
inline std::vector<RigidityClass> matching_clauses(const ManifoldDescriptor& d)
{
    validate(d);
    std::vector<RigidityClass> out;
    const auto& [family, ell, rho, k1, k2] = d;
    const bool B = family == Family::B;
    if (!B) out.push_back({RigidityTag::R1, "projective bundle A(l,rho,k1,k2)"});
    if (B && k1 == 1 && k2 == 0) out.push_back({RigidityTag::R1, "B(l,rho,1,0)"});
    if (B && k2 == 0 && rho != 0 && 4 <= 2 * k1 && 2 * k1 <= ell)
        out.push_back({RigidityTag::R1, "B(l,rho,k1,0) with rho != 0 and 4 <= 2k1 <= l"});
    if (B && k2 == 0 && rho != 0 && 3 <= ell + 1 && ell + 1 <= 2 * k1)
        out.push_back({RigidityTag::R2, "B(l,rho,k1,0) with rho != 0 and 3 <= l+1 <= 2k1"});
    if (B && k2 == 0 && rho == 0 && ell >= 2 && k1 >= 2)
        out.push_back({RigidityTag::R2, "B(l,0,k1,0) with l >= 2 and k1 >= 2"});
    if (B && k2 > 0 && ell >= 2) out.push_back({RigidityTag::R2, "B(l,rho,k1,k2) with l >= 2 and k2 > 0"});
    if (B && ell == 1 && k1 + k2 >= 2) out.push_back({RigidityTag::R3, "B(1,rho,k1,k2) with k1+k2 >= 2"});
#ifdef TORUSCLASS_INJECT_RIGIDITY_FAULT
    // Test-only corruption: an overlapping clause, so the partition check must fire.
    if (B && ell == 1) out.push_back({RigidityTag::R2, "injected overlapping clause"});
#endif
    return out;
}

inline RigidityClass rigidity_class(const ManifoldDescriptor& d)
{
    auto clauses = matching_clauses(d);
    if (clauses.size() != 1)
        throw internal_consistency_error(render(d) + " matches " + std::to_string(clauses.size()) +
                                         " rigidity clauses; expected exactly one");
    return clauses.front();
}

struct CompareReport {
    ManifoldDescriptor first, second;
    int dimension_first = 0, dimension_second = 0;
    bool ring_isomorphic = false;
    std::optional<bool> p_preservable;  // nullopt: oracle inconclusive within its bound
    std::optional<bool> w_preservable;
    IsoOutcome oracle = IsoOutcome::NotIsomorphic;
    DiffeoVerdict verdict;
    RigidityClass rigidity_first, rigidity_second;
};

/// Raises internal_consistency_error when a Diffeomorphic verdict contradicts the ring
/// or class-preservation data.
inline void check_consistency(const CompareReport& r)
{
    if (r.verdict.outcome != DiffeoOutcome::Diffeomorphic) return;
    std::string pair = render(r.first) + " vs " + render(r.second);
    if (!r.ring_isomorphic) throw internal_consistency_error(pair + ": Diffeomorphic verdict but rings not isomorphic");
    if (r.p_preservable == false)
        throw internal_consistency_error(pair + ": Diffeomorphic verdict but no ring isomorphism preserves p");
    if (r.w_preservable == false)
        throw internal_consistency_error(pair + ": Diffeomorphic verdict but no ring isomorphism preserves w");
}

inline CompareReport compare_report(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2)
{
    CompareReport r;
    r.first = d1;
    r.second = d2;
    r.dimension_first = dimension(d1);
    r.dimension_second = dimension(d2);
    r.rigidity_first = rigidity_class(d1);
    r.rigidity_second = rigidity_class(d2);
    r.ring_isomorphic = cohomology_isomorphic(d1, d2);
    r.verdict = diffeomorphic(d1, d2);
    if (r.ring_isomorphic) {
        auto fam = find_iso_families(cohomology(d1), cohomology(d2), SearchConfig{default_bound(d1, d2)});
        r.oracle = fam.outcome;
        r.p_preservable = some_iso_preserves(fam, pontrjagin(d1), pontrjagin(d2));
        r.w_preservable = some_iso_preserves(fam, stiefel_whitney(d1), stiefel_whitney(d2));
    } else {
        r.oracle = IsoOutcome::NotIsomorphic;
        r.p_preservable = false;
        r.w_preservable = false;
    }
    check_consistency(r);
    return r;
}

}  // namespace torusclass
