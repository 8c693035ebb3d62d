#pragma once

// Serialization: the generator file format, canonical JSON for reports, and
// the text rendering of the inertia-exponent table.
//
// JSON is emitted with fixed key order and no floating point; big integers
// are decimal strings, so parsing and re-serializing is byte-identical.

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gl2fp/mat2.hpp"
#include "gl2fp/oracle.hpp"
#include "gl2fp/reducible.hpp"
#include "gl2fp/subgroup.hpp"

namespace gl2fp {

using json = nlohmann::ordered_json;

/// Parsed generator file: line 1 is p, each further line "a b c d".
struct GeneratorFile {
    PrimeModulus mod;
    std::vector<Mat2> generators;
};

inline GeneratorFile parse_generator_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("generator file is empty");
    std::uint64_t p = 0;
    {
        std::istringstream first(line);
        std::string extra;
        if (!(first >> p) || (first >> extra))
            throw std::invalid_argument("first line must hold a single prime");
    }
    PrimeModulus mod(p);
    std::vector<Mat2> gens;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::uint64_t a, b, c, d;
        std::string extra;
        if (!(row >> a >> b >> c >> d) || (row >> extra))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected four decimal residues");
        if (a >= p || b >= p || c >= p || d >= p)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": residues must lie in [0, p-1]");
        gens.push_back(Mat2(mod, a, b, c, d));  // throws on singular input
    }
    return {mod, std::move(gens)};
}

inline std::string format_generator_file(PrimeModulus mod, const std::vector<Mat2>& gens) {
    std::ostringstream out;
    out << mod.value() << "\n";
    for (const Mat2& m : gens)
        out << m.a() << " " << m.b() << " " << m.c() << " " << m.d() << "\n";
    return out.str();
}

inline const char* exceptional_name(ExceptionalType t) {
    switch (t) {
        case ExceptionalType::A4: return "A4";
        case ExceptionalType::S4: return "S4";
        case ExceptionalType::A5: return "A5";
        default: return "none";
    }
}

inline json matrix_to_json(const Mat2& m) {
    return json::array({m.a(), m.b(), m.c(), m.d()});
}

inline json to_json(const ClassificationReport& r) {
    json j;
    j["order"] = r.order;
    j["p_divides_order"] = r.p_divides_order;
    j["contains_sl2"] = r.contains_sl2;
    j["in_borel"] = r.in_borel;
    j["in_split_cartan"] = r.in_split_cartan;
    j["in_split_normalizer"] = r.in_split_normalizer;
    j["in_nonsplit_cartan"] = r.in_nonsplit_cartan;
    j["in_nonsplit_normalizer"] = r.in_nonsplit_normalizer;
    j["exceptional"] = exceptional_name(r.exceptional);
    j["irreducible"] = r.irreducible;
    j["scalar_order"] = r.scalar_order;
    j["homothety_index"] = r.homothety_index;
    j["det_image_order"] = r.det_image_order;
    return j;
}

inline json to_json(const EnumerationResult& r) {
    json j;
    j["p"] = r.p.value();
    j["subgroup_count"] = r.subgroup_count;
    j["conjugacy_class_count"] = r.conjugacy_class_count;
    json failures = json::array();
    for (const PropertyFailure& f : r.failures) {
        json entry;
        json gens = json::array();
        for (const Mat2& m : f.generators) gens.push_back(matrix_to_json(m));
        entry["generators"] = gens;
        entry["property"] = f.property;
        failures.push_back(entry);
    }
    j["failures"] = failures;
    return j;
}

inline json to_json(const ReducibleOutcome& o) {
    json j;
    switch (o.kind) {
        case ReducibleOutcomeKind::homothety_exponent:
            j["kind"] = "homothety_exponent";
            j["exponent"] = o.exponent;
            break;
        case ReducibleOutcomeKind::squares:
            j["kind"] = "squares";
            break;
        case ReducibleOutcomeKind::prime_bounded:
            j["kind"] = "prime_bounded";
            j["bound"] = o.bound.str();
            break;
    }
    return j;
}

inline const char* congruence_text(ApCongruence c) {
    switch (c) {
        case ApCongruence::p2_mod3: return "p=2[3]";
        case ApCongruence::p3_mod4: return "p=3[4]";
        default: return "-";
    }
}

inline const char* congruence_json_name(ApCongruence c) {
    switch (c) {
        case ApCongruence::p2_mod3: return "p = 2 mod 3";
        case ApCongruence::p3_mod4: return "p = 3 mod 4";
        default: return "none";
    }
}

inline json ap_table_json() {
    json cells = json::array();
    for (const ApEntry& cell : ap_table()) {
        json c;
        c["e_ram"] = cell.e_ram;
        c["r"] = cell.r;
        c["valid"] = cell.valid;
        if (cell.valid) {
            c["a"] = cell.a;
            c["congruence"] = congruence_json_name(cell.congruence);
        } else {
            c["a"] = nullptr;
            c["congruence"] = nullptr;
        }
        cells.push_back(c);
    }
    json j;
    j["cells"] = cells;
    return j;
}

/// Text table in two blocks of e-columns, one sub-column per r, with "x"
/// marking cells whose congruence has no solution.
inline std::string ap_table_text() {
    auto render_block = [](const std::vector<std::uint32_t>& es) {
        std::vector<std::vector<std::string>> columns;  // per column: e, r, a, p
        for (std::uint32_t e : es) {
            for (std::uint32_t r = 0; r <= e; ++r) {
                ApEntry cell = ap_from_table(e, r);
                std::vector<std::string> col(4);
                col[0] = r == 0 ? std::to_string(e) : "";
                col[1] = std::to_string(r);
                col[2] = cell.valid ? std::to_string(cell.a) : "x";
                col[3] = cell.valid ? congruence_text(cell.congruence) : "x";
                columns.push_back(std::move(col));
            }
        }
        const char* labels[4] = {"e_ram", "r", "a", "p"};
        std::string lines[4];
        for (int row = 0; row < 4; ++row) {
            std::string s(labels[row]);
            s.resize(5, ' ');
            lines[row] = s + " |";
        }
        std::size_t ci = 0;
        for (std::uint32_t e : es) {
            for (std::uint32_t r = 0; r <= e; ++r, ++ci) {
                std::size_t width = 1;
                for (int row = 0; row < 4; ++row) width = std::max(width, columns[ci][row].size());
                for (int row = 0; row < 4; ++row) {
                    std::string cell = columns[ci][row];
                    cell.resize(width, ' ');
                    lines[row] += " " + cell;
                }
            }
            for (int row = 0; row < 4; ++row) lines[row] += " |";
        }
        std::string out;
        for (int row = 0; row < 4; ++row) {
            while (!lines[row].empty() && lines[row].back() == ' ') lines[row].pop_back();
            out += lines[row];
            out += "\n";
        }
        return out;
    };
    return render_block({1, 2, 3}) + "\n" + render_block({4, 6});
}

}  // namespace gl2fp
