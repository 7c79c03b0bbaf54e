#pragma once

// Command-line front end: descriptor parsing, JSON/TSV rendering and the
// subcommand dispatcher used by tools/torusclass.cpp.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classify.hpp"
#include "davisjan.hpp"

namespace torusclass {

using Json = nlohmann::ordered_json;

/// Malformed input text; `position` is the 1-based column of the offending character.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument("syntax error at position " + std::to_string(position) + ": " + what), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// `('A'|'B') '(' int ',' int ',' int ',' int ')'` with optional spaces, then validated.
inline ManifoldDescriptor parse_descriptor(const std::string& text)
{
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw parse_error(std::string("expected '") + c + "'" + (i < text.size() ? "" : " before end of input"), i + 1);
        ++i;
    };
    auto integer = [&]() -> long long {
        skip();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw parse_error("expected an integer", digits + 1);
        try {
            return std::stoll(text.substr(start, i - start));
        } catch (const std::out_of_range&) {
            throw parse_error("integer out of range", start + 1);
        }
    };
    auto small = [&](long long v, std::size_t pos) {
        if (v < -1000000 || v > 1000000) throw parse_error("parameter magnitude too large", pos);
        return static_cast<int>(v);
    };

    ManifoldDescriptor d;
    skip();
    if (i >= text.size() || (text[i] != 'A' && text[i] != 'B')) throw parse_error("expected family 'A' or 'B'", i + 1);
    d.family = text[i] == 'A' ? Family::A : Family::B;
    ++i;
    expect('(');
    std::size_t pos = i + 1;
    d.ell = small(integer(), pos);
    expect(',');
    d.rho = integer();
    expect(',');
    pos = i + 1;
    d.k1 = small(integer(), pos);
    expect(',');
    pos = i + 1;
    d.k2 = small(integer(), pos);
    expect(')');
    skip();
    if (i != text.size()) throw parse_error("unexpected trailing input", i + 1);
    validate(d);
    return d;
}

struct IntRange {
    long long lo = 0, hi = -1;
};

/// `a..b` or a single integer `a`; empty ranges are rejected.
inline IntRange parse_range(const std::string& text)
{
    auto number = [&](const std::string& s, std::size_t offset) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw parse_error("expected an integer in range '" + text + "'", offset + 1);
        }
        if (used != s.size()) throw parse_error("unexpected character in range '" + text + "'", offset + used + 1);
        return v;
    };
    auto dots = text.find("..");
    IntRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = number(text, 0);
    } else {
        r.lo = number(text.substr(0, dots), 0);
        r.hi = number(text.substr(dots + 2), dots + 2);
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
    if (r.hi - r.lo > 10000) throw std::invalid_argument("range '" + text + "' is too wide");
    return r;
}

enum class TableFormat { Json, Tsv };

struct TableSpec {
    IntRange ell, rho, k1, k2;
    std::optional<Family> family;
    TableFormat format = TableFormat::Json;
};

struct TableRow {
    ManifoldDescriptor descriptor;
    int dimension = 0;
    std::string cohomology, pontrjagin, stiefel_whitney;
    RigidityClass rigidity;
};

inline TableRow table_row(const ManifoldDescriptor& d)
{
    auto rep = report(d);
    return TableRow{d, rep.dimension, to_string(rep.cohomology), to_string(rep.pontrjagin.poly),
                    to_string(rep.stiefel_whitney.poly), rigidity_class(d)};
}

/// One row per valid descriptor, ordered by (family, l, rho, k1, k2). `jobs` threads
/// share the work; the output does not depend on it.
inline std::vector<TableRow> run_table(const TableSpec& spec, unsigned jobs = 1)
{
    std::vector<ManifoldDescriptor> grid;
    for (Family f : {Family::A, Family::B}) {
        if (spec.family && *spec.family != f) continue;
        for (long long l = spec.ell.lo; l <= spec.ell.hi; ++l)
            for (long long r = spec.rho.lo; r <= spec.rho.hi; ++r)
                for (long long a = spec.k1.lo; a <= spec.k1.hi; ++a)
                    for (long long b = spec.k2.lo; b <= spec.k2.hi; ++b) {
                        ManifoldDescriptor d{f, static_cast<int>(l), r, static_cast<int>(a), static_cast<int>(b)};
                        if (is_valid(d)) grid.push_back(d);
                    }
    }
    std::vector<std::optional<TableRow>> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    auto work = [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = start; i < grid.size(); i += stride) {
            try {
                rows[i] = table_row(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& th : pool) th.join();
    }
    std::vector<TableRow> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*rows[i]));
    }
    return out;
}

// ---------------------------------------------------------------- JSON rendering

inline Json descriptor_json(const ManifoldDescriptor& d)
{
    return Json{{"text", render(d)},
                {"family", std::string(1, to_char(d.family))},
                {"l", d.ell},
                {"rho", d.rho},
                {"k1", d.k1},
                {"k2", d.k2}};
}

/// `{"text":..., "gens":[["x",2],["z",8]], "ell":3, "relation":"z^2"}`
inline Json ring_json(const RingPresentation& ring)
{
    Json gens = Json::array();
    for (const auto& g : ring.generators()) gens.push_back(Json::array({g.name, g.degree}));
    return Json{{"text", to_string(ring)}, {"gens", gens}, {"ell", ring.ell()}, {"relation", to_string(ring.relation())}};
}

inline Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

inline Json invariants_json(const ManifoldDescriptor& d)
{
    auto rep = report(d);
    auto rig = rigidity_class(d);
    return Json{{"descriptor", descriptor_json(d)},
                {"dimension", rep.dimension},
                {"cohomology", ring_json(rep.cohomology)},
                {"pontrjagin", to_string(rep.pontrjagin.poly)},
                {"stiefel_whitney", to_string(rep.stiefel_whitney.poly)},
                {"rigidity", to_string(rig.tag)}};
}

inline Json verdict_json(const DiffeoVerdict& v)
{
    Json w = nullptr;
    if (v.witness) w = Json{{"epsilon", v.witness->epsilon}, {"r", v.witness->r.convert_to<long long>()}};
    return Json{{"outcome", to_string(v.outcome)}, {"reason", v.reason}, {"witness", w}};
}

inline Json compare_json(const CompareReport& r)
{
    return Json{{"first", descriptor_json(r.first)},
                {"second", descriptor_json(r.second)},
                {"dimensions", {r.dimension_first, r.dimension_second}},
                {"ring_isomorphic", r.ring_isomorphic},
                {"p_preservable", optional_bool(r.p_preservable)},
                {"w_preservable", optional_bool(r.w_preservable)},
                {"oracle", to_string(r.oracle)},
                {"verdict", verdict_json(r.verdict)},
                {"rigidity", {{"first", to_string(r.rigidity_first.tag)}, {"second", to_string(r.rigidity_second.tag)}}}};
}

inline Json rigidity_json(const ManifoldDescriptor& d)
{
    auto rig = rigidity_class(d);
    return Json{{"descriptor", descriptor_json(d)}, {"rigidity", to_string(rig.tag)}, {"clause", rig.clause}};
}

inline Json table_row_json(const TableRow& row)
{
    return Json{{"descriptor", render(row.descriptor)},
                {"dimension", row.dimension},
                {"cohomology", row.cohomology},
                {"pontrjagin", row.pontrjagin},
                {"stiefel_whitney", row.stiefel_whitney},
                {"rigidity", to_string(row.rigidity.tag)}};
}

inline std::string table_tsv(const std::vector<TableRow>& rows)
{
    std::string out = "descriptor\tdimension\tcohomology\tpontrjagin\tstiefel_whitney\trigidity\n";
    for (const auto& r : rows)
        out += render(r.descriptor) + "\t" + std::to_string(r.dimension) + "\t" + r.cohomology + "\t" + r.pontrjagin +
               "\t" + r.stiefel_whitney + "\t" + to_string(r.rigidity.tag) + "\n";
    return out;
}

/// `{"blocks":[l, n], "rows":[[...],...], "column_blocks":[...]}`; column_blocks is optional.
inline CharMatrix char_matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("blocks") || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON needs \"blocks\" and \"rows\"");
    CharMatrix m;
    m.blocks.sizes = j.at("blocks").get<std::vector<int>>();
    m.rows = j.at("rows").get<std::vector<std::vector<long long>>>();
    if (j.contains("column_blocks")) m.column_blocks = j.at("column_blocks").get<std::vector<int>>();
    m.validate();
    return m;
}

inline Json dj_json(const CharMatrix& m)
{
    auto e = eliminate_facets(face_ring(m), linear_ideal(m));
    auto classes = dj_characteristic_classes(e);
    Json images = Json::array();
    for (std::size_t j = 0; j < e.images.size(); ++j)
        images.push_back({{"variable", "v" + std::to_string(j + 1)}, {"image", to_string(e.images[j])}});
    Json survivors = Json::array();
    for (int s : e.survivors) survivors.push_back("v" + std::to_string(s + 1));
    return Json{{"blocks", m.blocks.sizes},
                {"cohomology", ring_json(e.ring)},
                {"survivors", survivors},
                {"images", images},
                {"pontrjagin", to_string(classes.pontrjagin.poly)},
                {"stiefel_whitney", to_string(classes.stiefel_whitney.poly)}};
}

inline Json oracle_json(const ManifoldDescriptor& d1, const ManifoldDescriptor& d2, const SearchConfig& cfg)
{
    RingPresentation p1 = cohomology(d1), p2 = cohomology(d2);
    IsoResult r = find_iso(p1, p2, cfg);
    Json witness = nullptr;
    if (r.witness) {
        Json images = Json::object();
        for (std::size_t i = 0; i < r.witness->images.size(); ++i)
            images[p1.generators()[i].name] = to_string(r.witness->images[i]);
        witness = Json{{"images", images}, {"text", to_string(*r.witness, p1)}, {"verified", r.witness->verified}};
    }
    return Json{{"first", descriptor_json(d1)},
                {"second", descriptor_json(d2)},
                {"mode", to_string(cfg.mode)},
                {"bound", cfg.bound.str()},
                {"outcome", to_string(r.outcome)},
                {"witness", witness},
                {"note", r.note}};
}

// ---------------------------------------------------------------- dispatcher

/// Exit codes: 0 success, 1 usage or input error, 2 internal consistency failure.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomology, characteristic classes and diffeomorphism classification of the A/B bundle families",
                 "torusclass"};
    app.require_subcommand(1, 1);

    std::string d1_text, d2_text, matrix_path, mode_text = "exact", format_text = "json", family_text;
    std::string l_range, rho_range, k1_range, k2_range, bound_text;
    unsigned jobs = 1;

    auto* inv = app.add_subcommand("invariants", "dimension, cohomology ring, p and w of a descriptor");
    inv->add_option("descriptor", d1_text, "e.g. B(3,2,1,3)")->required();

    auto* cmp = app.add_subcommand("compare", "ring isomorphism, class preservation and diffeomorphism verdict");
    cmp->add_option("first", d1_text)->required();
    cmp->add_option("second", d2_text)->required();

    auto* rig = app.add_subcommand("rigidity", "rigidity stratum R1/R2/R3 and the matching clause");
    rig->add_option("descriptor", d1_text)->required();

    auto* dj = app.add_subcommand("dj", "cohomology and classes from a characteristic matrix JSON file");
    dj->add_option("--matrix", matrix_path, "path to matrix JSON")->required();

    auto* orc = app.add_subcommand("oracle-iso", "search for a graded ring isomorphism");
    orc->add_option("first", d1_text)->required();
    orc->add_option("second", d2_text)->required();
    orc->add_option("--bound", bound_text, "coefficient search window (default from the descriptors)");
    orc->add_option("--mode", mode_text, "exact | enum")->check(CLI::IsMember({"exact", "enum"}));

    auto* tab = app.add_subcommand("table", "classification table over a parameter grid");
    tab->add_option("--l", l_range, "a..b")->required();
    tab->add_option("--rho", rho_range, "a..b")->required();
    tab->add_option("--k1", k1_range, "a..b")->required();
    tab->add_option("--k2", k2_range, "a..b")->required();
    tab->add_option("--family", family_text, "A | B")->check(CLI::IsMember({"A", "B"}));
    tab->add_option("--format", format_text, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
    tab->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (inv->parsed()) {
            out << invariants_json(parse_descriptor(d1_text)).dump(2) << "\n";
        } else if (cmp->parsed()) {
            auto a = parse_descriptor(d1_text), b = parse_descriptor(d2_text);
            out << compare_json(compare_report(a, b)).dump(2) << "\n";
        } else if (rig->parsed()) {
            out << rigidity_json(parse_descriptor(d1_text)).dump(2) << "\n";
        } else if (dj->parsed()) {
            std::ifstream in(matrix_path);
            if (!in) throw std::invalid_argument("cannot read matrix file '" + matrix_path + "'");
            Json j;
            try {
                j = Json::parse(in);
            } catch (const Json::parse_error& e) {
                throw std::invalid_argument(std::string("matrix file is not valid JSON: ") + e.what());
            } catch (const Json::type_error& e) {
                throw std::invalid_argument(std::string("matrix JSON has the wrong shape: ") + e.what());
            }
            CharMatrix m;
            try {
                m = char_matrix_from_json(j);
            } catch (const Json::exception& e) {
                throw std::invalid_argument(std::string("matrix JSON has the wrong shape: ") + e.what());
            }
            out << dj_json(m).dump(2) << "\n";
        } else if (orc->parsed()) {
            auto a = parse_descriptor(d1_text), b = parse_descriptor(d2_text);
            SearchConfig cfg{default_bound(a, b), mode_text == "enum" ? SearchMode::Enumerate : SearchMode::ExactSolve};
            if (!bound_text.empty()) {
                try {
                    cfg.bound = Integer(bound_text);
                } catch (const std::exception&) {
                    throw std::invalid_argument("--bound must be a positive integer");
                }
                if (cfg.bound < 1) throw std::invalid_argument("--bound must be a positive integer");
            }
            out << oracle_json(a, b, cfg).dump(2) << "\n";
        } else if (tab->parsed()) {
            TableSpec spec{parse_range(l_range), parse_range(rho_range), parse_range(k1_range), parse_range(k2_range), std::nullopt};
            if (!family_text.empty()) spec.family = family_text == "A" ? Family::A : Family::B;
            spec.format = format_text == "tsv" ? TableFormat::Tsv : TableFormat::Json;
            auto rows = run_table(spec, jobs);
            if (spec.format == TableFormat::Tsv) {
                out << table_tsv(rows);
            } else {
                Json arr = Json::array();
                for (const auto& r : rows) arr.push_back(table_row_json(r));
                out << Json{{"rows", arr}}.dump(2) << "\n";
            }
        }
    } catch (const internal_consistency_error& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace torusclass
