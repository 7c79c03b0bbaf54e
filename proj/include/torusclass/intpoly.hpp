#pragma once

// Exact multivariate polynomials over Z or F_2 in named generators of even
// cohomological degree.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torusclass {

using Integer = boost::multiprecision::cpp_int;

enum class CoeffDomain { Integers, Mod2 };

inline const char* to_string(CoeffDomain d) { return d == CoeffDomain::Integers ? "Z" : "F2"; }

struct Generator {
    std::string name;
    int degree = 2;

    friend bool operator==(const Generator&, const Generator&) = default;
};

using Generators = std::vector<Generator>;
using GeneratorsPtr = std::shared_ptr<const Generators>;

inline GeneratorsPtr make_generators(Generators gens)
{
    for (const auto& g : gens) {
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw std::invalid_argument("generator '" + g.name + "' must have even positive degree");
    }
    return std::make_shared<const Generators>(std::move(gens));
}

inline bool same_generators(const GeneratorsPtr& a, const GeneratorsPtr& b)
{
    return a == b || (a && b && *a == *b);
}

using Monomial = std::vector<unsigned>;

/// Graded-lexicographic order: by cohomological degree, then lexicographically
/// with larger exponents on earlier generators first.
struct TermOrder {
    std::vector<int> degrees;

    int degree_of(const Monomial& m) const
    {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * degrees[i];
        return d;
    }

    bool operator()(const Monomial& a, const Monomial& b) const
    {
        int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class GradedPoly {
public:
    using TermMap = std::map<Monomial, Integer, TermOrder>;

    GradedPoly(GeneratorsPtr gens, CoeffDomain domain = CoeffDomain::Integers)
        : gens_(std::move(gens)), domain_(domain), terms_(order_for(*gens_))
    {
    }

    static GradedPoly constant(GeneratorsPtr gens, const Integer& c, CoeffDomain domain = CoeffDomain::Integers)
    {
        GradedPoly p(gens, domain);
        p.add_term(Monomial(gens->size(), 0), c);
        return p;
    }

    static GradedPoly generator(GeneratorsPtr gens, std::size_t index, CoeffDomain domain = CoeffDomain::Integers)
    {
        if (index >= gens->size()) throw std::out_of_range("generator index out of range");
        Monomial m(gens->size(), 0);
        m[index] = 1;
        return monomial(std::move(gens), std::move(m), 1, domain);
    }

    static GradedPoly monomial(GeneratorsPtr gens, Monomial m, const Integer& c,
                               CoeffDomain domain = CoeffDomain::Integers)
    {
        if (m.size() != gens->size()) throw std::invalid_argument("monomial arity does not match generators");
        GradedPoly p(std::move(gens), domain);
        p.add_term(std::move(m), c);
        return p;
    }

    const Generators& generators() const { return *gens_; }
    const GeneratorsPtr& generators_ptr() const { return gens_; }
    CoeffDomain domain() const { return domain_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t arity() const { return gens_->size(); }

    int degree_of(const Monomial& m) const { return terms_.key_comp().degree_of(m); }

    Integer coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    Integer constant_term() const { return coefficient(Monomial(arity(), 0)); }

    void add_term(const Monomial& m, const Integer& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) it->second += c;
        if (domain_ == CoeffDomain::Mod2) it->second = mod2(it->second);
        if (it->second == 0) terms_.erase(it);
    }

    /// Highest cohomological degree among the terms; -1 for the zero polynomial.
    int max_degree() const { return terms_.empty() ? -1 : degree_of(terms_.rbegin()->first); }

    bool is_homogeneous() const
    {
        return terms_.empty() || degree_of(terms_.begin()->first) == degree_of(terms_.rbegin()->first);
    }

    GradedPoly& operator+=(const GradedPoly& q)
    {
        require_compatible(q);
        for (const auto& [m, c] : q.terms_) add_term(m, c);
        return *this;
    }

    GradedPoly& operator-=(const GradedPoly& q)
    {
        require_compatible(q);
        for (const auto& [m, c] : q.terms_) add_term(m, -c);
        return *this;
    }

    GradedPoly operator-() const
    {
        GradedPoly r(gens_, domain_);
        for (const auto& [m, c] : terms_) r.add_term(m, -c);
        return r;
    }

    friend GradedPoly operator+(GradedPoly p, const GradedPoly& q) { return p += q; }
    friend GradedPoly operator-(GradedPoly p, const GradedPoly& q) { return p -= q; }

    friend GradedPoly operator*(const GradedPoly& p, const GradedPoly& q)
    {
        p.require_compatible(q);
        GradedPoly r(p.gens_, p.domain_);
        Monomial m(p.arity());
        for (const auto& [mp, cp] : p.terms_) {
            for (const auto& [mq, cq] : q.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
                r.add_term(m, cp * cq);
            }
        }
        return r;
    }

    friend GradedPoly operator*(const Integer& s, const GradedPoly& p)
    {
        GradedPoly r(p.gens_, p.domain_);
        for (const auto& [m, c] : p.terms_) r.add_term(m, s * c);
        return r;
    }

    friend bool operator==(const GradedPoly& p, const GradedPoly& q)
    {
        return p.domain_ == q.domain_ && same_generators(p.gens_, q.gens_) && p.terms_ == q.terms_;
    }

    void require_compatible(const GradedPoly& q) const
    {
        if (!same_generators(gens_, q.gens_)) throw std::invalid_argument("generator lists differ");
        if (domain_ != q.domain_) throw std::invalid_argument("coefficient domains differ");
    }

    static Integer mod2(const Integer& c)
    {
        Integer r = c % 2;
        return r < 0 ? Integer(-r) : r;
    }

private:
    static TermOrder order_for(const Generators& gens)
    {
        TermOrder o;
        o.degrees.reserve(gens.size());
        for (const auto& g : gens) o.degrees.push_back(g.degree);
        return o;
    }

    GeneratorsPtr gens_;
    CoeffDomain domain_;
    TermMap terms_;
};

inline GradedPoly add(const GradedPoly& p, const GradedPoly& q) { return p + q; }
inline GradedPoly mul(const GradedPoly& p, const GradedPoly& q) { return p * q; }

inline GradedPoly pow(GradedPoly base, unsigned e)
{
    GradedPoly result = GradedPoly::constant(base.generators_ptr(), 1, base.domain());
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

inline GradedPoly reduce_mod2(const GradedPoly& p)
{
    if (p.domain() != CoeffDomain::Integers) throw std::invalid_argument("reduce_mod2 expects an integer polynomial");
    GradedPoly r(p.generators_ptr(), CoeffDomain::Mod2);
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);
    return r;
}

/// Sum of the terms of cohomological degree exactly `d`.
inline GradedPoly graded_component(const GradedPoly& p, int d)
{
    GradedPoly r(p.generators_ptr(), p.domain());
    for (const auto& [m, c] : p.terms())
        if (p.degree_of(m) == d) r.add_term(m, c);
    return r;
}

/// Substitutes `images[i]` for the i-th generator of `p`; images share one generator list.
inline GradedPoly substitute(const GradedPoly& p, const std::vector<GradedPoly>& images)
{
    if (images.size() != p.arity()) throw std::invalid_argument("one image per generator required");
    if (images.empty()) throw std::invalid_argument("substitution needs at least one generator");
    const auto& target = images.front().generators_ptr();
    GradedPoly result(target, p.domain());
    std::vector<std::vector<GradedPoly>> powers(images.size());
    for (const auto& [m, c] : p.terms()) {
        GradedPoly term = GradedPoly::constant(target, c, p.domain());
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(GradedPoly::constant(target, 1, p.domain()));
            while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
            if (m[i] > 0) term = term * cache[m[i]];
        }
        result += term;
    }
    return result;
}

/// Canonical text form, e.g. `1 + 8*x^2 + 22*x^4`.
inline std::string to_string(const GradedPoly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool constant = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (constant || mag != 1) {
            out << mag;
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << '*';
            out << p.generators()[i].name;
            if (m[i] > 1) out << '^' << m[i];
            need_star = true;
        }
    }
    return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << to_string(p); }

}  // namespace torusclass
