#pragma once

// Rings Z[x,w]/<x^(l+1), f(x,w)> (or their mod-2 reductions) with f monic in w,
// and their unique normal forms.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "intpoly.hpp"

namespace torusclass {

class RingPresentation {
public:
    /// Generator list for a presentation: x of degree 2 and w of degree `w_degree`.
    static GeneratorsPtr generators_for(const std::string& x_name, const std::string& w_name, int w_degree)
    {
        if (w_degree < 2 || w_degree % 2 != 0) throw std::invalid_argument("w must have even degree >= 2");
        return make_generators({{x_name, 2}, {w_name, w_degree}});
    }

    /// Raw presentation; `relation` must be homogeneous and monic in w.
    RingPresentation(int ell, GradedPoly relation)
    {
        const auto& gens = relation.generators();
        if (gens.size() != 2 || gens[0].degree != 2) throw std::invalid_argument("presentation needs generators x (degree 2) and w");
        if (ell < 0) throw std::invalid_argument("truncation exponent must be non-negative");
        if (relation.is_zero() || !relation.is_homogeneous())
            throw std::invalid_argument("relation must be a nonzero homogeneous polynomial");
        unsigned order = 0;
        for (const auto& [m, c] : relation.terms()) order = std::max(order, m[1]);
        if (order == 0) throw std::invalid_argument("relation must involve w");
        if (relation.coefficient(Monomial{0, order}) != 1) throw std::invalid_argument("non-monic relation: leading coefficient in w must be 1");
        data_ = std::make_shared<const Data>(Data{ell, static_cast<int>(order), std::move(relation)});
    }

    int ell() const { return data_->ell; }
    /// Degree D of the relation in w.
    int w_order() const { return data_->order; }
    int w_degree() const { return generators()[1].degree; }
    const GradedPoly& relation() const { return data_->relation; }
    const Generators& generators() const { return relation().generators(); }
    const GeneratorsPtr& generators_ptr() const { return relation().generators_ptr(); }
    CoeffDomain domain() const { return relation().domain(); }

    bool is_canonical() const
    {
        for (const auto& [m, c] : relation().terms())
            if (static_cast<int>(m[0]) > ell()) return false;
        return true;
    }

    /// Top cohomological degree of the normal basis.
    int top_degree() const { return 2 * ell() + (w_order() - 1) * w_degree(); }

    GradedPoly x() const { return GradedPoly::generator(generators_ptr(), 0, domain()); }
    GradedPoly w() const { return GradedPoly::generator(generators_ptr(), 1, domain()); }
    GradedPoly one() const { return GradedPoly::constant(generators_ptr(), 1, domain()); }
    GradedPoly zero() const { return GradedPoly(generators_ptr(), domain()); }

    friend bool operator==(const RingPresentation& a, const RingPresentation& b)
    {
        return a.data_ == b.data_ || (a.ell() == b.ell() && a.relation() == b.relation());
    }

private:
    struct Data {
        int ell;
        int order;
        GradedPoly relation;
    };
    std::shared_ptr<const Data> data_;
};

/// An element of a presented ring, stored in the normal basis x^a w^b (a <= l, b < D).
struct NormalElement {
    RingPresentation ring;
    GradedPoly poly;

    friend bool operator==(const NormalElement& a, const NormalElement& b)
    {
        return a.ring == b.ring && a.poly == b.poly;
    }
};

namespace detail {

inline GradedPoly truncate_x(const GradedPoly& p, int ell)
{
    GradedPoly r(p.generators_ptr(), p.domain());
    for (const auto& [m, c] : p.terms())
        if (static_cast<int>(m[0]) <= ell) r.add_term(m, c);
    return r;
}

inline void require_ring_poly(const GradedPoly& p, const RingPresentation& ring)
{
    if (!same_generators(p.generators_ptr(), ring.generators_ptr()))
        throw std::invalid_argument("polynomial does not use the presentation's generators");
    if (p.domain() != ring.domain()) throw std::invalid_argument("coefficient domain differs from the presentation's");
}

}  // namespace detail

/// Drops relation terms that vanish modulo x^(l+1).
inline RingPresentation canonicalize(const RingPresentation& raw)
{
    if (raw.is_canonical()) return raw;
    return RingPresentation(raw.ell(), detail::truncate_x(raw.relation(), raw.ell()));
}

inline RingPresentation reduce_mod2(const RingPresentation& ring)
{
    if (ring.domain() == CoeffDomain::Mod2) return ring;
    return RingPresentation(ring.ell(), reduce_mod2(ring.relation()));
}

/// Unique representative modulo <x^(l+1), f>.
inline NormalElement normal_form(const GradedPoly& p, const RingPresentation& ring)
{
    detail::require_ring_poly(p, ring);
    const int ell = ring.ell();
    const unsigned order = static_cast<unsigned>(ring.w_order());

    // w^D == -(f - w^D); tail terms have w-exponent < D.
    std::vector<std::pair<Monomial, Integer>> tail;
    for (const auto& [m, c] : ring.relation().terms())
        if (m[1] != order) tail.emplace_back(m, -c);

    unsigned top = 0;
    for (const auto& [m, c] : p.terms()) top = std::max(top, m[1]);
    std::vector<std::map<unsigned, Integer>> buckets(top + 1);
    for (const auto& [m, c] : p.terms())
        if (static_cast<int>(m[0]) <= ell) buckets[m[1]][m[0]] += c;

    for (unsigned b = top; b >= order; --b) {
        for (const auto& [a, c] : buckets[b]) {
            if (c == 0) continue;
            for (const auto& [tm, tc] : tail) {
                unsigned na = a + tm[0];
                if (static_cast<int>(na) > ell) continue;
                buckets[b - order + tm[1]][na] += c * tc;
            }
        }
        buckets[b].clear();
    }

    GradedPoly r(ring.generators_ptr(), ring.domain());
    for (unsigned b = 0; b < buckets.size() && b < order; ++b)
        for (const auto& [a, c] : buckets[b]) r.add_term(Monomial{a, b}, c);
    return NormalElement{ring, std::move(r)};
}

inline bool ring_equal(const GradedPoly& p, const GradedPoly& q, const RingPresentation& ring)
{
    return normal_form(p - q, ring).poly.is_zero();
}

inline NormalElement ring_mul(const NormalElement& a, const NormalElement& b)
{
    if (!(a.ring == b.ring)) throw std::invalid_argument("elements live in different rings");
    return normal_form(detail::truncate_x(a.poly * b.poly, a.ring.ell()), a.ring);
}

inline NormalElement ring_pow(NormalElement base, unsigned e)
{
    NormalElement result{base.ring, base.ring.one()};
    while (e > 0) {
        if (e & 1u) result = ring_mul(result, base);
        e >>= 1;
        if (e > 0) base = ring_mul(base, base);
    }
    return result;
}

/// Rank of the ring as a free abelian group (or F_2-vector space).
inline int additive_rank(const RingPresentation& ring) { return (ring.ell() + 1) * ring.w_order(); }

/// Normal-basis monomials x^a w^b, grouped by cohomological degree.
inline std::map<int, std::vector<Monomial>> normal_basis(const RingPresentation& ring)
{
    std::map<int, std::vector<Monomial>> basis;
    for (int b = 0; b < ring.w_order(); ++b)
        for (int a = 0; a <= ring.ell(); ++a)
            basis[2 * a + b * ring.w_degree()].push_back(
                Monomial{static_cast<unsigned>(a), static_cast<unsigned>(b)});
    return basis;
}

inline std::map<int, int> graded_ranks(const RingPresentation& ring)
{
    std::map<int, int> ranks;
    for (const auto& [deg, monos] : normal_basis(ring)) ranks[deg] = static_cast<int>(monos.size());
    return ranks;
}

/// Applies the ring map sending the i-th generator of `p` to `images[i]` (polynomials
/// over the target's generators), then reduces in `target`.
inline NormalElement evaluate_hom(const std::vector<GradedPoly>& images, const GradedPoly& p,
                                  const RingPresentation& target)
{
    if (images.size() != p.arity()) throw std::invalid_argument("one image per source generator required");
    for (std::size_t i = 0; i < images.size(); ++i) {
        detail::require_ring_poly(images[i], target);
        if (!images[i].is_zero() &&
            (!images[i].is_homogeneous() || images[i].max_degree() != p.generators()[i].degree))
            throw std::invalid_argument("image of generator '" + p.generators()[i].name +
                                        "' is not homogeneous of degree " +
                                        std::to_string(p.generators()[i].degree));
    }
    if (p.domain() != target.domain()) throw std::invalid_argument("coefficient domain differs from the target's");

    std::vector<std::vector<NormalElement>> powers(images.size());
    GradedPoly result(target.generators_ptr(), target.domain());
    for (const auto& [m, c] : p.terms()) {
        NormalElement term{target, GradedPoly::constant(target.generators_ptr(), c, target.domain())};
        for (std::size_t i = 0; i < m.size() && !term.poly.is_zero(); ++i) {
            if (m[i] == 0) continue;
            auto& cache = powers[i];
            if (cache.empty()) {
                cache.push_back(NormalElement{target, target.one()});
                cache.push_back(normal_form(images[i], target));
            }
            while (cache.size() <= m[i]) cache.push_back(ring_mul(cache.back(), cache[1]));
            term = ring_mul(term, cache[m[i]]);
        }
        result += term.poly;
    }
    return NormalElement{target, std::move(result)};
}

/// `Z[x,z]/<x^4, z^2>`
inline std::string to_string(const RingPresentation& ring)
{
    const auto& g = ring.generators();
    std::string s = std::string(ring.domain() == CoeffDomain::Integers ? "Z" : "F2") + "[" + g[0].name + "," +
                    g[1].name + "]/<" + g[0].name + "^" + std::to_string(ring.ell() + 1) + ", " +
                    to_string(ring.relation()) + ">";
    return s;
}

}  // namespace torusclass
