#pragma once

#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "hn/instances/filtvec.hpp"
#include "hn/instances/phimod.hpp"
#include "hn/instances/quiver.hpp"

namespace hn::io {

using json = nlohmann::json;

// -------- parsing helpers (strict: schema errors become InvalidInput) ----

inline const json& require_field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(std::string("missing field \"") + key + "\"");
    return *it;
}

inline int require_int(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

inline std::vector<std::vector<int>> parse_int_matrix(const json& v, const char* what) {
    if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : v) {
        if (!r.is_array()) throw InvalidInput(std::string(what) + " rows must be arrays");
        std::vector<int> row;
        for (const auto& e : r) {
            if (!e.is_number_integer()) throw InvalidInput(std::string(what) + " entries must be integers");
            row.push_back(e.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// { "instance": "filtvec", "p", "dim", "imin", "imax",
//   "fil": [ { "i": int, "basis": [[int]] } ] }  -- every weight in
// [imin, imax+1] present exactly once; basis rows span fil(i).
inline fv::FiltVecObject parse_filtvec(const json& j) {
    ff::FieldPrime f(require_int(j, "p"));
    int dim = require_int(j, "dim");
    int imin = require_int(j, "imin");
    int imax = require_int(j, "imax");
    const json& fil = require_field(j, "fil");
    if (!fil.is_array()) throw InvalidInput("\"fil\" must be an array");
    if (imax < imin) throw InvalidInput("weight window [imin, imax] is empty");
    std::vector<bool> seen(static_cast<size_t>(imax - imin + 2), false);
    std::vector<ff::SubspaceFF> steps(static_cast<size_t>(imax - imin + 2), ff::SubspaceFF::zero(f, dim));
    for (const auto& entry : fil) {
        int i = require_int(entry, "i");
        if (i < imin || i > imax + 1) throw InvalidInput("fil entry weight outside [imin, imax+1]");
        size_t k = static_cast<size_t>(i - imin);
        if (seen[k]) throw InvalidInput("duplicate fil entry for weight " + std::to_string(i));
        seen[k] = true;
        auto rows = parse_int_matrix(require_field(entry, "basis"), "basis");
        steps[k] = ff::SubspaceFF::span(ff::MatrixFF::from_rows(f, dim, rows));
    }
    for (size_t k = 0; k < seen.size(); ++k)
        if (!seen[k]) throw InvalidInput("missing fil entry for weight " + std::to_string(imin + static_cast<int>(k)));
    return fv::FiltVecObject(f, dim, imin, imax, std::move(steps));
}

// { "instance": "quiver", "p", "vertices", "arrows": [[s,d]], "dims",
//   "maps": [ [[int]] ], "theta" }
inline qv::QuiverRepObject parse_quiver(const json& j) {
    ff::FieldPrime f(require_int(j, "p"));
    qv::QuiverShape shape;
    shape.vertices = require_int(j, "vertices");
    for (const auto& a : require_field(j, "arrows")) {
        if (!a.is_array() || a.size() != 2) throw InvalidInput("arrows must be [src, dst] pairs");
        shape.arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    std::vector<int> dims;
    for (const auto& d : require_field(j, "dims")) dims.push_back(d.get<int>());
    std::vector<Int> theta;
    for (const auto& t : require_field(j, "theta")) theta.push_back(t.get<Int>());
    const json& maps_json = require_field(j, "maps");
    if (!maps_json.is_array() || maps_json.size() != shape.arrows.size())
        throw InvalidInput("maps must list one matrix per arrow");
    std::vector<ff::MatrixFF> maps;
    for (size_t a = 0; a < shape.arrows.size(); ++a) {
        auto rows = parse_int_matrix(maps_json[a], "arrow map");
        auto [s, d] = shape.arrows[a];
        if (d < 0 || d >= static_cast<int>(dims.size()) || s < 0 || s >= static_cast<int>(dims.size()))
            throw InvalidInput("arrow endpoint out of range");
        if (static_cast<int>(rows.size()) != dims[d])
            throw InvalidInput("arrow map row count must equal destination dim");
        maps.push_back(ff::MatrixFF::from_rows(f, dims[s], rows));
    }
    return qv::QuiverRepObject(f, std::move(shape), std::move(dims), std::move(maps), std::move(theta));
}

// { "instance": "phimod", "p", "q", "rank",
//   "phi": [ [ [int] ] ] (rank x rank coefficient lists), "precision"? }
inline pm::PhiModObject parse_phimod(const json& j) {
    ff::FieldPrime f(require_int(j, "p"));
    int q = require_int(j, "q");
    int rank = require_int(j, "rank");
    int precision = j.contains("precision") ? require_int(j, "precision") : 32;
    const json& phi = require_field(j, "phi");
    if (!phi.is_array() || static_cast<int>(phi.size()) != rank)
        throw InvalidInput("phi must have one row per rank");
    std::vector<pm::SeriesPoly> entries;
    for (const auto& row : phi) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw InvalidInput("phi rows must have rank entries");
        for (const auto& coeffs : row) {
            if (!coeffs.is_array()) throw InvalidInput("phi entries must be coefficient lists");
            std::vector<int> c;
            for (const auto& e : coeffs) c.push_back(e.get<int>());
            entries.emplace_back(f, std::move(c));
        }
    }
    return pm::PhiModObject(f, q, rank, std::move(entries), precision);
}

using AnyObject = std::variant<fv::FiltVecObject, qv::QuiverRepObject, pm::PhiModObject>;

struct LoadedObject {
    std::string instance;
    AnyObject object;
};

inline LoadedObject parse_object(const json& j) {
    const json& inst = require_field(j, "instance");
    if (!inst.is_string()) throw InvalidInput("\"instance\" must be a string");
    std::string name = inst.get<std::string>();
    if (name == "filtvec") return {name, parse_filtvec(j)};
    if (name == "quiver") return {name, parse_quiver(j)};
    if (name == "phimod") return {name, parse_phimod(j)};
    throw InvalidInput("unknown instance \"" + name + "\"");
}

inline LoadedObject load_object_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInput("JSON parse error in " + path + ": " + e.what());
    }
    return parse_object(j);
}

// ------------------------------ serialization ----------------------------

inline json filtvec_to_json(const fv::FiltVecObject& x) {
    json fil = json::array();
    for (int i = x.imin; i <= x.imax + 1; ++i) {
        json basis = json::array();
        const auto& w = x.fil_at(i);
        for (int r = 0; r < w.basis.rows; ++r) basis.push_back(w.basis.row(r));
        fil.push_back({{"i", i}, {"basis", basis}});
    }
    return {{"instance", "filtvec"}, {"p", x.field.p}, {"dim", x.dim}, {"imin", x.imin},
            {"imax", x.imax}, {"fil", fil}};
}

inline json quiver_to_json(const qv::QuiverRepObject& x) {
    json arrows = json::array();
    for (auto [s, d] : x.shape.arrows) arrows.push_back({s, d});
    json maps = json::array();
    for (const auto& m : x.maps) {
        json rows = json::array();
        for (int r = 0; r < m.rows; ++r) rows.push_back(m.row(r));
        maps.push_back(rows);
    }
    return {{"instance", "quiver"}, {"p", x.field.p}, {"vertices", x.shape.vertices},
            {"arrows", arrows}, {"dims", x.dims}, {"maps", maps}, {"theta", x.theta}};
}

inline json phimod_to_json(const pm::PhiModObject& x) {
    json phi = json::array();
    for (int r = 0; r < x.n; ++r) {
        json row = json::array();
        for (int c = 0; c < x.n; ++c) row.push_back(x.at(r, c).c);
        phi.push_back(row);
    }
    return {{"instance", "phimod"}, {"p", x.field.p}, {"q", x.q}, {"rank", x.n},
            {"phi", phi}, {"precision", x.precision}};
}

} // namespace hn::io
