#pragma once

// Independent search for graded ring isomorphisms between two presentations
// Z[x,w]/<x^(l+1), f>. Used to validate the closed-form classification.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "invariants.hpp"

namespace torusclass {

enum class SearchMode { ExactSolve, Enumerate };

inline const char* to_string(SearchMode m) { return m == SearchMode::ExactSolve ? "exact" : "enum"; }

struct SearchConfig {
    Integer bound = 8;
    SearchMode mode = SearchMode::ExactSolve;
};

/// A ring map P1 -> P2 given by the images of x and w.
struct IsoWitness {
    std::vector<GradedPoly> images;  // over P2's generators
    int x_sign = 1;                  // higher-degree w: x -> x_sign*x
    std::optional<Integer> a;        // higher-degree w: w -> a*x^d + w_sign*w
    int w_sign = 1;
    std::optional<std::array<std::array<Integer, 2>, 2>> matrix;  // degree-2 w: rows are images of x, y
    bool verified = false;
};

enum class IsoOutcome { Found, NotIsomorphic, NotFoundWithinBound };

inline const char* to_string(IsoOutcome o)
{
    switch (o) {
    case IsoOutcome::Found: return "found";
    case IsoOutcome::NotIsomorphic: return "not-isomorphic";
    default: return "not-found-within-bound";
    }
}

struct IsoResult {
    IsoOutcome outcome = IsoOutcome::NotFoundWithinBound;
    std::optional<IsoWitness> witness;
    std::string note;
};

/// `2*max(|rho1|,|rho2|,2)^(max k1+k2) + 2`; TORUSCLASS_ORACLE_BOUND overrides.
inline Integer default_bound(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2)
{
    if (const char* env = std::getenv("TORUSCLASS_ORACLE_BOUND"); env && *env) {
        try {
            Integer b(env);
            if (b >= 1) return b;
        } catch (...) {
        }
    }
    long long r = std::max({std::llabs(d1.rho), std::llabs(d2.rho), 2LL});
    int e = std::max(d1.k1 + d1.k2, d2.k1 + d2.k2);
    return 2 * detail::int_pow(r, static_cast<unsigned>(e)) + 2;
}

namespace detail {

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer binomial(unsigned n, unsigned k)
{
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Coefficients are too large to factor by trial division.
struct root_search_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<Integer> positive_divisors(Integer n)
{
    n = iabs(n);
    if (n == 0) throw std::invalid_argument("divisors of zero");
    if (n > Integer(1000000000000LL)) throw root_search_overflow("coefficient too large for divisor enumeration");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Integer horner(const std::vector<Integer>& c, const Integer& t)
{
    Integer r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * t + *it;
    return r;
}

/// Integer roots of a nonzero univariate polynomial, coefficients by ascending power.
inline std::vector<Integer> integer_roots(std::vector<Integer> c)
{
    std::vector<Integer> roots;
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low == c.size()) throw std::invalid_argument("zero polynomial has every root");
    if (low > 0) roots.push_back(0);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    if (c.size() > 1) {
        for (const Integer& d : positive_divisors(c[0])) {
            if (horner(c, d) == 0) roots.push_back(d);
            if (horner(c, -d) == 0) roots.push_back(-d);
        }
    }
    return roots;
}

/// F(alpha, beta) = sum_i c[i] alpha^i beta^(e-i).
inline Integer eval_binary_form(const std::vector<Integer>& c, const Integer& alpha, const Integer& beta)
{
    const std::size_t e = c.size() - 1;
    Integer r = 0;
    for (std::size_t i = 0; i <= e; ++i) r += c[i] * int_pow(alpha, static_cast<unsigned>(i)) * int_pow(beta, static_cast<unsigned>(e - i));
    return r;
}

/// Primitive integer zeros (alpha, beta) of a nonzero binary form, one per +- pair.
inline std::vector<std::pair<Integer, Integer>> primitive_zeros(const std::vector<Integer>& c)
{
    std::vector<std::pair<Integer, Integer>> zeros;
    if (c.back() == 0) zeros.emplace_back(1, 0);
    // beta != 0: alpha/beta is a rational root p/q of sum c_i t^i.
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    if (low == c.size()) throw std::invalid_argument("zero form");
    if (low > 0) zeros.emplace_back(0, 1);
    std::size_t high = c.size() - 1;
    while (c[high] == 0) --high;
    if (high > low) {
        for (const Integer& p : positive_divisors(c[low]))
            for (const Integer& q : positive_divisors(c[high])) {
                if (boost::multiprecision::gcd(p, q) != 1) continue;
                for (const Integer& sp : {p, Integer(-p)})
                    if (eval_binary_form(c, sp, q) == 0) zeros.emplace_back(sp, q);
            }
    }
    return zeros;
}

/// g = a*s + b*t with g = gcd(a, b) >= 0.
inline std::tuple<Integer, Integer, Integer> extended_gcd(Integer a, Integer b)
{
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Integer q = a / b;
        std::tie(a, b) = std::make_tuple(b, Integer(a - q * b));
        std::tie(s0, s1) = std::make_tuple(s1, Integer(s0 - q * s1));
        std::tie(t0, t1) = std::make_tuple(t1, Integer(t0 - q * t1));
    }
    if (a < 0) return {Integer(-a), Integer(-s0), Integer(-t0)};
    return {a, s0, t0};
}

/// Order 0, 1, -1, 2, -2, ...
inline bool small_first(const Integer& a, const Integer& b)
{
    Integer aa = iabs(a), ab = iabs(b);
    if (aa != ab) return aa < ab;
    return a > b;
}

/// Coefficients (by power of t) of the normal form of p(U, V0 + t*T) in `target`.
using ParamPoly = std::vector<GradedPoly>;

inline ParamPoly param_image(const GradedPoly& p, const GradedPoly& U, const GradedPoly& V0, const GradedPoly& T,
                             const RingPresentation& target)
{
    auto nf = [&](const GradedPoly& q) { return normal_form(q, target); };
    std::vector<NormalElement> upow{{target, target.one()}}, vpow{{target, target.one()}}, tpow{{target, target.one()}};
    auto power = [&](std::vector<NormalElement>& cache, const GradedPoly& base, unsigned e) -> const NormalElement& {
        while (cache.size() <= e) cache.push_back(ring_mul(cache.back(), nf(base)));
        return cache[e];
    };
    ParamPoly out;
    for (const auto& [m, c] : p.terms()) {
        const unsigned i = m[0], j = m[1];
        if (out.size() < j + 1) out.resize(j + 1, target.zero());
        NormalElement ui = power(upow, U, i);
        for (unsigned k = 0; k <= j; ++k) {
            NormalElement term = ring_mul(ring_mul(ui, power(tpow, T, k)), power(vpow, V0, j - k));
            out[k] += (c * binomial(j, k)) * term.poly;
        }
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

inline GradedPoly param_eval(const ParamPoly& pp, const Integer& t, const RingPresentation& target)
{
    GradedPoly r = target.zero();
    Integer tk = 1;
    for (const auto& c : pp) {
        r += tk * c;
        tk *= t;
    }
    return r;
}

/// Integer parameters solving every ParamPoly; nullopt means all of Z.
inline std::optional<std::vector<Integer>> common_integer_roots(const std::vector<ParamPoly>& system)
{
    std::map<Monomial, std::vector<Integer>> polys;
    for (const auto& pp : system)
        for (std::size_t k = 0; k < pp.size(); ++k)
            for (const auto& [m, c] : pp[k].terms()) {
                Monomial key = m;
                key.push_back(static_cast<unsigned>(&pp - system.data()));
                auto& v = polys[key];
                if (v.size() < k + 1) v.resize(k + 1, 0);
                v[k] += c;
            }
    std::vector<const std::vector<Integer>*> nonzero;
    for (const auto& [m, v] : polys)
        if (std::any_of(v.begin(), v.end(), [](const Integer& c) { return c != 0; })) nonzero.push_back(&v);
    if (nonzero.empty()) return std::nullopt;
    // Start from the lowest-degree polynomial: fewest candidates.
    auto seed = *std::min_element(nonzero.begin(), nonzero.end(),
                                  [](auto* a, auto* b) { return a->size() < b->size(); });
    std::vector<Integer> roots;
    for (const Integer& t : integer_roots(*seed)) {
        bool ok = std::all_of(nonzero.begin(), nonzero.end(), [&](auto* v) { return horner(*v, t) == 0; });
        if (ok) roots.push_back(t);
    }
    std::sort(roots.begin(), roots.end(), small_first);
    return roots;
}

inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline GradedPoly truncation_relation(const RingPresentation& ring)
{
    return GradedPoly::monomial(ring.generators_ptr(), Monomial{static_cast<unsigned>(ring.ell() + 1), 0}, 1,
                                ring.domain());
}

inline GradedPoly lin(const RingPresentation& ring, const Integer& a, const Integer& b)
{
    return a * ring.x() + b * ring.w();
}

}  // namespace detail

/// Checks that the witness maps both relations to zero and is bijective in every degree.
inline bool verify_iso(const IsoWitness& w, const RingPresentation& p1, const RingPresentation& p2)
{
    try {
        if (w.images.size() != 2) return false;
        if (!evaluate_hom(w.images, detail::truncation_relation(p1), p2).poly.is_zero()) return false;
        if (!evaluate_hom(w.images, p1.relation(), p2).poly.is_zero()) return false;
        auto b1 = normal_basis(p1), b2 = normal_basis(p2);
        if (b1.size() != b2.size()) return false;
        for (const auto& [deg, monos1] : b1) {
            auto it = b2.find(deg);
            if (it == b2.end() || it->second.size() != monos1.size()) return false;
            const auto& monos2 = it->second;
            std::vector<std::vector<Integer>> mat(monos2.size(), std::vector<Integer>(monos1.size()));
            for (std::size_t i = 0; i < monos1.size(); ++i) {
                GradedPoly src = GradedPoly::monomial(p1.generators_ptr(), monos1[i], 1);
                GradedPoly img = evaluate_hom(w.images, src, p2).poly;
                for (std::size_t j = 0; j < monos2.size(); ++j) mat[j][i] = img.coefficient(monos2[j]);
            }
            Integer det = detail::bareiss_determinant(std::move(mat));
            if (det != 1 && det != -1) return false;
        }
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

/// True iff the witness carries c1 to c2. Mod-2 classes use the witness reduced mod 2.
inline bool check_preserves(const IsoWitness& w, const NormalElement& c1, const NormalElement& c2)
{
    if (c1.ring.domain() != c2.ring.domain()) throw std::invalid_argument("classes live over different coefficient domains");
    std::vector<GradedPoly> images;
    for (const auto& img : w.images)
        images.push_back(c2.ring.domain() == CoeffDomain::Mod2 && img.domain() == CoeffDomain::Integers
                             ? reduce_mod2(img)
                             : img);
    return evaluate_hom(images, c1.poly, c2.ring).poly == c2.poly;
}

/// One-parameter family phi_t: x -> U, w -> V0 + t*T, for t in `params` (or all of Z).
struct WitnessFamily {
    GradedPoly U, V0, T;
    std::optional<std::vector<Integer>> params;  // nullopt: every integer
    // Bookkeeping for the witness description.
    int x_sign = 1, w_sign = 1;
    bool degree_two = false;
    Integer alpha = 0, beta = 0, gamma0 = 0, delta0 = 0;

    IsoWitness at(const Integer& t) const
    {
        IsoWitness w;
        w.images = {U, V0 + t * T};
        w.x_sign = x_sign;
        w.w_sign = w_sign;
        if (degree_two) {
            w.matrix = std::array<std::array<Integer, 2>, 2>{
                {{alpha, beta}, {w_sign * gamma0 + t * alpha, w_sign * delta0 + t * beta}}};
        } else if (!T.is_zero()) {
            w.a = t;
        }
        return w;
    }

    /// Parameters in canonical order; a free family is represented by its small values.
    std::vector<Integer> sample(const Integer& limit) const
    {
        if (params) return *params;
        std::vector<Integer> out{0};
        for (Integer t = 1; t <= limit; ++t) {
            out.push_back(t);
            out.push_back(-t);
        }
        return out;
    }
};

/// Every isomorphism, as finitely many families, or a definite "none".
struct IsoFamilies {
    IsoOutcome outcome = IsoOutcome::NotIsomorphic;  // Found when families is non-empty
    std::vector<WitnessFamily> families;
    std::string note;
};

namespace detail {

inline IsoFamilies none(std::string note) { return IsoFamilies{IsoOutcome::NotIsomorphic, {}, std::move(note)}; }

inline void require_integral(const RingPresentation& p)
{
    if (p.domain() != CoeffDomain::Integers) throw std::invalid_argument("isomorphism search expects integral presentations");
}

/// Rings with D = 1 are Z[x]/<x^(l+1)>; w is a polynomial in x.
inline IsoFamilies singly_generated(const RingPresentation& p1, const RingPresentation& p2)
{
    IsoFamilies out;
    GradedPoly tail = p1.relation() - GradedPoly::monomial(p1.generators_ptr(), Monomial{0, 1}, 1);
    const GradedPoly zero = p2.zero();
    for (int s : {1, -1}) {
        GradedPoly U = Integer(s) * p2.x();
        GradedPoly image = -substitute(tail, {U, zero});
        WitnessFamily f{U, normal_form(image, p2).poly, zero, std::vector<Integer>{0}};
        f.x_sign = s;
        out.families.push_back(std::move(f));
    }
    out.outcome = IsoOutcome::Found;
    return out;
}

/// w of degree 2d > 2: x -> s*x, w -> a*x^d + e*w.
inline IsoFamilies higher_degree(const RingPresentation& p1, const RingPresentation& p2, SearchMode mode,
                                 const Integer& bound)
{
    IsoFamilies out;
    const unsigned d = static_cast<unsigned>(p2.w_degree() / 2);
    GradedPoly T = static_cast<int>(d) <= p2.ell()
                       ? GradedPoly::monomial(p2.generators_ptr(), Monomial{d, 0}, 1)
                       : p2.zero();
    for (int s : {1, -1})
        for (int e : {1, -1}) {
            GradedPoly U = Integer(s) * p2.x(), V0 = Integer(e) * p2.w();
            std::vector<ParamPoly> system{param_image(truncation_relation(p1), U, V0, T, p2),
                                          param_image(p1.relation(), U, V0, T, p2)};
            std::optional<std::vector<Integer>> params;
            if (mode == SearchMode::ExactSolve) {
                params = common_integer_roots(system);
                if (!params && T.is_zero()) params = std::vector<Integer>{0};
            } else {
                std::vector<Integer> hits;
                Integer lim = T.is_zero() ? Integer(0) : bound;
                for (const Integer& t : WitnessFamily{U, V0, T, std::nullopt}.sample(lim)) {
                    bool ok = std::all_of(system.begin(), system.end(),
                                          [&](const ParamPoly& pp) { return param_eval(pp, t, p2).is_zero(); });
                    if (ok) hits.push_back(t);
                }
                params = hits;
            }
            if (params && params->empty()) continue;
            WitnessFamily f{U, V0, T, params};
            f.x_sign = s;
            f.w_sign = e;
            out.families.push_back(std::move(f));
        }
    out.outcome = out.families.empty() ? IsoOutcome::NotIsomorphic : IsoOutcome::Found;
    return out;
}

/// Degree-2 directions u = alpha*x + beta*y with u^(l1+1) = 0 in p2, as binary forms.
inline std::vector<std::vector<Integer>> direction_forms(const RingPresentation& p1, const RingPresentation& p2)
{
    const unsigned e = static_cast<unsigned>(p1.ell() + 1);
    std::map<Monomial, std::vector<Integer>> forms;
    for (unsigned i = 0; i <= e; ++i) {
        GradedPoly mono = GradedPoly::monomial(p2.generators_ptr(), Monomial{i, e - i}, 1);
        NormalElement reduced = normal_form(mono, p2);
        for (const auto& [m, c] : reduced.poly.terms()) {
            auto& f = forms[m];
            f.resize(e + 1, 0);
            f[i] += binomial(e, i) * c;
        }
    }
    std::vector<std::vector<Integer>> out;
    for (auto& [m, f] : forms)
        if (std::any_of(f.begin(), f.end(), [](const Integer& c) { return c != 0; })) out.push_back(std::move(f));
    return out;
}

inline bool direction_order(const std::pair<Integer, Integer>& a, const std::pair<Integer, Integer>& b)
{
    Integer na = iabs(a.first) + iabs(a.second), nb = iabs(b.first) + iabs(b.second);
    if (na != nb) return na < nb;
    return std::make_pair(Integer(-a.first), Integer(-a.second)) < std::make_pair(Integer(-b.first), Integer(-b.second));
}

/// x, y both of degree 2: phi(x) = u, phi(y) = sigma*v0 + t*u with det = sigma.
inline IsoFamilies degree_two(const RingPresentation& p1, const RingPresentation& p2, SearchMode mode,
                              const Integer& bound)
{
    IsoFamilies out;
    auto forms = direction_forms(p1, p2);
    std::vector<std::pair<Integer, Integer>> dirs;
    bool bounded = mode == SearchMode::Enumerate || forms.empty();
    if (!bounded) {
        auto seed = *std::min_element(forms.begin(), forms.end(), [](const auto& a, const auto& b) {
            Integer ma = 0, mb = 0;
            for (const auto& c : a) ma = std::max(ma, iabs(c));
            for (const auto& c : b) mb = std::max(mb, iabs(c));
            return ma < mb;
        });
        for (const auto& [a, b] : primitive_zeros(seed)) {
            bool ok = std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return eval_binary_form(f, a, b) == 0; });
            if (ok) {
                dirs.emplace_back(a, b);
                dirs.emplace_back(-a, -b);
            }
        }
    } else {
        for (Integer a = -bound; a <= bound; ++a)
            for (Integer b = -bound; b <= bound; ++b) {
                if (boost::multiprecision::gcd(a, b) != 1) continue;
                bool ok = std::all_of(forms.begin(), forms.end(), [&](const auto& f) { return eval_binary_form(f, a, b) == 0; });
                if (ok) dirs.emplace_back(a, b);
            }
    }
    std::sort(dirs.begin(), dirs.end(), direction_order);

    for (const auto& [alpha, beta] : dirs) {
        auto [g, s, t] = extended_gcd(alpha, beta);
        // alpha*s + beta*t = 1  =>  v0 = (-t, s) gives det [[alpha,beta],[-t,s]] = 1.
        Integer gamma0 = -t, delta0 = s;
        GradedPoly U = lin(p2, alpha, beta);
        for (int sigma : {1, -1}) {
            GradedPoly V0 = Integer(sigma) * lin(p2, gamma0, delta0);
            std::vector<ParamPoly> system{param_image(truncation_relation(p1), U, V0, U, p2),
                                          param_image(p1.relation(), U, V0, U, p2)};
            std::optional<std::vector<Integer>> params;
            if (!bounded) {
                params = common_integer_roots(system);
            } else {
                std::vector<Integer> hits;
                for (const Integer& tt : WitnessFamily{U, V0, U, std::nullopt}.sample(2 * bound + 1)) {
                    Integer c = sigma * gamma0 + tt * alpha, d = sigma * delta0 + tt * beta;
                    if (iabs(c) > bound || iabs(d) > bound) continue;
                    bool ok = std::all_of(system.begin(), system.end(),
                                          [&](const ParamPoly& pp) { return param_eval(pp, tt, p2).is_zero(); });
                    if (ok) hits.push_back(tt);
                }
                params = hits;
            }
            if (params && params->empty()) continue;
            WitnessFamily f{U, V0, U, params};
            f.degree_two = true;
            f.w_sign = sigma;
            f.alpha = alpha;
            f.beta = beta;
            f.gamma0 = gamma0;
            f.delta0 = delta0;
            out.families.push_back(std::move(f));
        }
    }
    if (!out.families.empty()) {
        out.outcome = IsoOutcome::Found;
    } else {
        out.outcome = bounded ? IsoOutcome::NotFoundWithinBound : IsoOutcome::NotIsomorphic;
    }
    if (forms.empty() && mode == SearchMode::ExactSolve) out.note = "direction constraint vacuous; searched within bound";
    return out;
}

}  // namespace detail

/// All isomorphisms P1 -> P2 in families. In enumerate mode only bounded parameters are
/// listed and absence is reported as not-found-within-bound.
inline IsoFamilies find_iso_families(const RingPresentation& raw1, const RingPresentation& raw2, const SearchConfig& cfg)
{
    detail::require_integral(raw1);
    detail::require_integral(raw2);
    if (cfg.bound < 1) throw std::invalid_argument("search bound must be >= 1");
    RingPresentation p1 = canonicalize(raw1), p2 = canonicalize(raw2);
    if (graded_ranks(p1) != graded_ranks(p2)) return detail::none("graded ranks differ");

    IsoFamilies out;
    try {
        if (p1.w_order() == 1 || p2.w_order() == 1) {
            if (p1.w_order() != p2.w_order()) return detail::none("only one ring is generated by a single class");
            out = detail::singly_generated(p1, p2);
        } else if (p1.w_degree() != p2.w_degree()) {
            return detail::none("indecomposable generators sit in different degrees");
        } else if (p1.w_degree() == 2) {
            out = detail::degree_two(p1, p2, cfg.mode, cfg.bound);
        } else {
            out = detail::higher_degree(p1, p2, cfg.mode, cfg.bound);
        }
    } catch (const detail::root_search_overflow& e) {
        return IsoFamilies{IsoOutcome::NotFoundWithinBound, {}, e.what()};
    }
    if (cfg.mode == SearchMode::Enumerate && out.outcome == IsoOutcome::NotIsomorphic)
        out.outcome = IsoOutcome::NotFoundWithinBound;
    return out;
}

/// First isomorphism in canonical order (identity first), verified before return.
inline IsoResult find_iso(const RingPresentation& raw1, const RingPresentation& raw2, const SearchConfig& cfg)
{
    IsoFamilies fam = find_iso_families(raw1, raw2, cfg);
    IsoResult result{fam.outcome, std::nullopt, fam.note};
    if (fam.outcome != IsoOutcome::Found) return result;
    RingPresentation p1 = canonicalize(raw1), p2 = canonicalize(raw2);
    for (const auto& f : fam.families) {
        for (const Integer& t : f.sample(cfg.bound)) {
            IsoWitness w = f.at(t);
            if (verify_iso(w, p1, p2)) {
                w.verified = true;
                result.witness = std::move(w);
                return result;
            }
        }
    }
    throw std::logic_error("isomorphism family produced no verifiable witness");
}

inline IsoResult find_iso(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2,
                          SearchMode mode = SearchMode::ExactSolve)
{
    return find_iso(cohomology(d1), cohomology(d2), SearchConfig{default_bound(d1, d2), mode});
}

/// Whether some isomorphism in `fam` carries c1 to c2; nullopt when the search was inconclusive.
inline std::optional<bool> some_iso_preserves(const IsoFamilies& fam, const NormalElement& c1, const NormalElement& c2)
{
    if (fam.outcome == IsoOutcome::NotIsomorphic) return false;
    if (fam.outcome == IsoOutcome::NotFoundWithinBound) return std::nullopt;
    const bool mod2 = c2.ring.domain() == CoeffDomain::Mod2;
    for (const auto& f : fam.families) {
        if (mod2) {
            // Mod 2 the family depends on t only through its parity.
            std::vector<Integer> ts = f.params ? *f.params : std::vector<Integer>{0, 1};
            for (const Integer& t : ts)
                if (check_preserves(f.at(t), c1, c2)) return true;
            continue;
        }
        auto pp = detail::param_image(c1.poly, f.U, f.V0, f.T, c2.ring);
        if (pp.empty()) pp.push_back(c2.ring.zero());
        pp[0] -= c2.poly;
        auto roots = detail::common_integer_roots({pp});
        if (!roots) {
            if (!f.params || !f.params->empty()) return true;
            continue;
        }
        if (!f.params) {
            if (!roots->empty()) return true;
            continue;
        }
        for (const Integer& t : *roots)
            if (std::find(f.params->begin(), f.params->end(), t) != f.params->end()) return true;
    }
    return false;
}

/// `x -> x, z -> z + 2*x^2`
inline std::string to_string(const IsoWitness& w, const RingPresentation& source)
{
    std::string out;
    for (std::size_t i = 0; i < w.images.size(); ++i) {
        if (i) out += ", ";
        out += source.generators()[i].name + " -> " + to_string(w.images[i]);
    }
    return out;
}

}  // namespace torusclass
