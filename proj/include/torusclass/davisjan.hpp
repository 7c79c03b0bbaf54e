#pragma once

// Cohomology and characteristic classes of quasitoric manifolds over products of
// simplices, from the face ring and the linear ideal of a characteristic matrix.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "invariants.hpp"

namespace torusclass {

/// Raised when a characteristic matrix cannot be brought to a two-generator presentation.
class elimination_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Orbit polytope Delta^(n_1) x ... x Delta^(n_s).
struct SimplexBlocks {
    std::vector<int> sizes;

    int dimension() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }
    int facet_count() const { return dimension() + static_cast<int>(sizes.size()); }

    void validate() const
    {
        if (sizes.empty()) throw std::invalid_argument("at least one simplex block required");
        for (int n : sizes)
            if (n < 1) throw std::invalid_argument("simplex dimensions must be positive");
    }
};

struct CharMatrix {
    std::vector<std::vector<long long>> rows;
    SimplexBlocks blocks;
    /// Block index of each column; empty means columns are grouped block by block.
    std::vector<int> column_blocks;

    std::vector<int> resolved_column_blocks() const
    {
        if (!column_blocks.empty()) return column_blocks;
        std::vector<int> cb;
        for (std::size_t b = 0; b < blocks.sizes.size(); ++b) cb.insert(cb.end(), blocks.sizes[b] + 1, static_cast<int>(b));
        return cb;
    }

    void validate() const
    {
        blocks.validate();
        const int n = blocks.dimension(), m = blocks.facet_count();
        if (static_cast<int>(rows.size()) != n)
            throw std::invalid_argument("characteristic matrix needs " + std::to_string(n) + " rows");
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != m)
                throw std::invalid_argument("characteristic matrix needs " + std::to_string(m) + " columns");
        auto cb = resolved_column_blocks();
        if (static_cast<int>(cb.size()) != m) throw std::invalid_argument("column_blocks must list one block per column");
        std::vector<int> count(blocks.sizes.size(), 0);
        for (int b : cb) {
            if (b < 0 || b >= static_cast<int>(count.size())) throw std::invalid_argument("column block index out of range");
            ++count[b];
        }
        for (std::size_t b = 0; b < count.size(); ++b)
            if (count[b] != blocks.sizes[b] + 1)
                throw std::invalid_argument("block " + std::to_string(b) + " must own " +
                                            std::to_string(blocks.sizes[b] + 1) + " columns");
    }
};

struct FaceRingPresentation {
    GeneratorsPtr generators;  // v1..vm, degree 2
    std::vector<std::vector<int>> blocks;  // facet variables of each simplex factor
    std::vector<GradedPoly> monomial_ideal;
    std::vector<GradedPoly> linear_ideal;
};

namespace detail {

inline GeneratorsPtr facet_generators(int m)
{
    Generators gens;
    for (int j = 1; j <= m; ++j) gens.push_back({"v" + std::to_string(j), 2});
    return make_generators(std::move(gens));
}

inline FaceRingPresentation face_ring_for(const SimplexBlocks& blocks, const std::vector<int>& column_blocks)
{
    FaceRingPresentation fr;
    fr.generators = facet_generators(blocks.facet_count());
    fr.blocks.resize(blocks.sizes.size());
    for (std::size_t j = 0; j < column_blocks.size(); ++j) fr.blocks[column_blocks[j]].push_back(static_cast<int>(j));
    for (const auto& vars : fr.blocks) {
        Monomial m(column_blocks.size(), 0);
        for (int j : vars) m[j] = 1;
        fr.monomial_ideal.push_back(GradedPoly::monomial(fr.generators, std::move(m), 1));
    }
    return fr;
}

}  // namespace detail

/// Face ring Z[v1..vm]/I of a product of simplices, facets numbered block by block.
inline FaceRingPresentation face_ring(const SimplexBlocks& blocks)
{
    blocks.validate();
    CharMatrix shape{{}, blocks, {}};
    return detail::face_ring_for(blocks, shape.resolved_column_blocks());
}

inline FaceRingPresentation face_ring(const CharMatrix& m)
{
    m.validate();
    return detail::face_ring_for(m.blocks, m.resolved_column_blocks());
}

/// Rows of the matrix contracted with (v1, ..., vm).
inline std::vector<GradedPoly> linear_ideal(const CharMatrix& m)
{
    m.validate();
    auto gens = detail::facet_generators(m.blocks.facet_count());
    std::vector<GradedPoly> forms;
    for (const auto& row : m.rows) {
        GradedPoly form(gens);
        for (std::size_t j = 0; j < row.size(); ++j) {
            Monomial mono(row.size(), 0);
            mono[j] = 1;
            form.add_term(mono, row[j]);
        }
        forms.push_back(std::move(form));
    }
    return forms;
}

/// Ordinary cohomology presentation together with the image of every facet variable.
struct Elimination {
    RingPresentation ring;
    std::vector<GradedPoly> images;  // v_j expressed in the ring's generators
    std::vector<int> survivors;      // surviving facet variable per block
};

namespace detail {

using Rational = boost::multiprecision::cpp_rational;

/// Inverse of a square integer matrix with determinant +-1.
inline std::optional<std::vector<std::vector<Integer>>> unimodular_inverse(std::vector<std::vector<Rational>> a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
            det = -det;
        }
        Rational p = a[col][col];
        det *= p;
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational factor = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= factor * a[col][j];
                inv[i][j] -= factor * inv[col][j];
            }
        }
    }
    if (det != 1 && det != -1) return std::nullopt;
    std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = boost::multiprecision::numerator(inv[i][j]);
    return out;
}

/// True iff `r` is +-(g-th generator)^e.
inline bool is_unit_pure_power(const GradedPoly& r, std::size_t g, unsigned e)
{
    if (r.terms().size() != 1) return false;
    const auto& [m, c] = *r.terms().begin();
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != (i == g ? e : 0u)) return false;
    return c == 1 || c == -1;
}

inline GradedPoly rename(const GradedPoly& p, const GeneratorsPtr& gens, const std::vector<std::size_t>& order)
{
    GradedPoly r(gens, p.domain());
    for (const auto& [m, c] : p.terms()) {
        Monomial out(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) out[i] = m[order[i]];
        r.add_term(out, c);
    }
    return r;
}

inline Elimination eliminate_with(const FaceRingPresentation& fr, const std::vector<GradedPoly>& forms,
                                  const std::vector<int>& survivors)
{
    const std::size_t m = fr.generators->size();
    const std::size_t s = fr.blocks.size();
    if (s > 2) throw elimination_error("products of more than two simplices are not supported");

    std::vector<bool> is_survivor(m, false);
    for (int v : survivors) is_survivor[v] = true;
    std::vector<int> pivots;
    for (std::size_t j = 0; j < m; ++j)
        if (!is_survivor[j]) pivots.push_back(static_cast<int>(j));
    if (pivots.size() != forms.size())
        throw elimination_error("linear ideal must have one form per non-surviving facet variable");

    const std::size_t n = forms.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    std::vector<std::vector<Integer>> rest(n, std::vector<Integer>(s));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Monomial mono(m, 0);
            mono[pivots[k]] = 1;
            a[i][k] = Rational(forms[i].coefficient(mono));
        }
        for (std::size_t k = 0; k < s; ++k) {
            Monomial mono(m, 0);
            mono[survivors[k]] = 1;
            rest[i][k] = forms[i].coefficient(mono);
        }
    }
    auto inv = unimodular_inverse(std::move(a));
    if (!inv)
        throw elimination_error("no unimodular pivot: the matrix is not in reduced form for the chosen survivors");

    // Survivors become generators s0 (and s1); pivots = -inv * rest * survivors.
    auto raw_gens = make_generators(Generators{{"s0", 2}, {"s1", 2}});
    std::vector<GradedPoly> images(m, GradedPoly(raw_gens));
    for (std::size_t k = 0; k < s; ++k) images[survivors[k]] = GradedPoly::generator(raw_gens, k);
    for (std::size_t p = 0; p < n; ++p) {
        GradedPoly img(raw_gens);
        for (std::size_t k = 0; k < s; ++k) {
            Integer coeff = 0;
            for (std::size_t i = 0; i < n; ++i) coeff -= (*inv)[p][i] * rest[i][k];
            img.add_term(GradedPoly::generator(raw_gens, k).terms().begin()->first, coeff);
        }
        images[pivots[p]] = std::move(img);
    }

    std::vector<GradedPoly> relations;
    for (const auto& vars : fr.blocks) {
        GradedPoly prod = GradedPoly::constant(raw_gens, 1);
        for (int v : vars) prod = prod * images[v];
        relations.push_back(std::move(prod));
    }

    // The truncation generator x is the survivor whose block relation is +-x^(n+1).
    std::optional<std::size_t> x_block;
    for (std::size_t b = 0; b < s && !x_block; ++b)
        if (is_unit_pure_power(relations[b], b, static_cast<unsigned>(fr.blocks[b].size())))
            x_block = b;
    if (!x_block)
        throw elimination_error("elimination does not produce a truncated-power relation; presentation shape unsupported");

    if (s == 1) {
        // CP^n: Z[x]/<x^(n+1)>, carried with a redundant degree-2 generator w == 0.
        auto gens = RingPresentation::generators_for("x", "w", 2);
        std::vector<GradedPoly> renamed;
        for (const auto& img : images) renamed.push_back(rename(img, gens, {0, 1}));
        RingPresentation ring(static_cast<int>(fr.blocks[0].size()) - 1, GradedPoly::generator(gens, 1));
        return Elimination{canonicalize(ring), std::move(renamed), survivors};
    }

    const std::size_t xb = *x_block, wb = 1 - xb;
    auto gens = RingPresentation::generators_for("x", "y", 2);
    std::vector<std::size_t> order = {xb, wb};
    GradedPoly f = rename(relations[wb], gens, order);
    const unsigned order_w = static_cast<unsigned>(fr.blocks[wb].size());
    Integer lead = f.coefficient(Monomial{0, order_w});
    if (lead == -1) {
        f = -f;
    } else if (lead != 1) {
        throw elimination_error("second block relation is not monic in its surviving variable");
    }
    std::vector<GradedPoly> renamed;
    for (const auto& img : images) renamed.push_back(rename(img, gens, order));
    RingPresentation ring(static_cast<int>(fr.blocks[xb].size()) - 1, std::move(f));
    return Elimination{canonicalize(ring), std::move(renamed), survivors};
}

}  // namespace detail

/// Solves the linear ideal for all but one facet variable per block and rewrites the
/// face-ring relations in the survivors. Without an explicit choice the last facet
/// variable of each block survives; if that block is not unimodular, the remaining
/// choices are tried in order.
inline Elimination eliminate_facets(const FaceRingPresentation& fr, const std::vector<GradedPoly>& forms,
                                    std::optional<std::vector<int>> survivors = std::nullopt)
{
    if (survivors) {
        if (survivors->size() != fr.blocks.size()) throw elimination_error("exactly one survivor per block required");
        for (std::size_t b = 0; b < fr.blocks.size(); ++b) {
            const auto& vars = fr.blocks[b];
            if (std::find(vars.begin(), vars.end(), (*survivors)[b]) == vars.end())
                throw elimination_error("survivor " + std::to_string((*survivors)[b] + 1) + " is not a facet of block " +
                                        std::to_string(b));
        }
        return detail::eliminate_with(fr, forms, *survivors);
    }
    if (fr.blocks.size() > 2) throw elimination_error("products of more than two simplices are not supported");

    // Candidate survivors per block: last facet first, then backwards.
    std::vector<std::vector<int>> options;
    for (const auto& vars : fr.blocks) options.emplace_back(vars.rbegin(), vars.rend());
    std::vector<std::size_t> idx(options.size(), 0);
    std::optional<elimination_error> first_error;
    while (true) {
        std::vector<int> choice;
        for (std::size_t b = 0; b < options.size(); ++b) choice.push_back(options[b][idx[b]]);
        try {
            return detail::eliminate_with(fr, forms, choice);
        } catch (const elimination_error& e) {
            if (!first_error) first_error = e;
        }
        std::size_t b = options.size();
        while (b > 0) {
            --b;
            if (++idx[b] < options[b].size()) break;
            idx[b] = 0;
            if (b == 0) throw *first_error;
        }
    }
}

inline RingPresentation eliminate(const FaceRingPresentation& fr, const std::vector<GradedPoly>& forms)
{
    return eliminate_facets(fr, forms).ring;
}

/// The n x (n+2) matrix of A(l,rho,k1,k2) over Delta^l x Delta^(k1+k2-1). Columns are
/// v_1..v_l, w_1..w_(k1+k2-1), v_(l+1), w_(k1+k2); B(l,rho,1,0) shares A(l,rho,1,1)'s matrix.
inline CharMatrix char_matrix_for(const ManifoldDescriptor& d)
{
    validate(d);
    ManifoldDescriptor a = d;
    if (d.family == Family::B) {
        if (d.k1 != 1 || d.k2 != 0)
            throw descriptor_error(render(d) + " is not quasitoric in this family (B needs k1=1, k2=0)");
        a = ManifoldDescriptor{Family::A, d.ell, d.rho, 1, 1};
    }
    const int ell = a.ell, k1 = a.k1, k2 = a.k2;
    const int fiber = k1 + k2 - 1;
    const int n = ell + fiber, m = n + 2;
    CharMatrix cm;
    cm.blocks.sizes = {ell, fiber};
    cm.rows.assign(n, std::vector<long long>(m, 0));
    const int v_last = n, w_last = n + 1;
    for (int i = 0; i < n; ++i) cm.rows[i][i] = 1;
    for (int i = 0; i < ell; ++i) cm.rows[i][v_last] = 1;
    for (int i = ell; i < ell + k1; ++i) {
        cm.rows[i][v_last] = a.rho;
        cm.rows[i][w_last] = 1;
    }
    for (int i = ell + k1; i < n; ++i) cm.rows[i][w_last] = 1;
    cm.column_blocks.assign(m, 1);
    for (int j = 0; j < ell; ++j) cm.column_blocks[j] = 0;
    cm.column_blocks[v_last] = 0;
    return cm;
}

struct DjClasses {
    NormalElement pontrjagin;
    NormalElement stiefel_whitney;
};

/// p = prod(1 + v_i^2) and w = prod(1 + v_i) (mod 2), pulled back along the elimination.
inline DjClasses dj_characteristic_classes(const Elimination& e)
{
    const RingPresentation& ring = e.ring;
    RingPresentation ring2 = reduce_mod2(ring);
    NormalElement p{ring, ring.one()};
    NormalElement w{ring2, ring2.one()};
    for (const auto& v : e.images) {
        p = ring_mul(p, normal_form(ring.one() + v * v, ring));
        w = ring_mul(w, normal_form(ring2.one() + reduce_mod2(v), ring2));
    }
    return DjClasses{std::move(p), std::move(w)};
}

inline DjClasses dj_characteristic_classes(const CharMatrix& m)
{
    return dj_characteristic_classes(eliminate_facets(face_ring(m), linear_ideal(m)));
}

}  // namespace torusclass
