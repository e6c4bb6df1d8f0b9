#include "effsq/diagram_io.hpp"

#include <limits>

#include <json.hpp>

#include "effsq/errors.hpp"

namespace effsq {

using nlohmann::json;

bool DiagramDoc::operator==(const DiagramDoc& o) const {
    if (version != o.version || groups != o.groups) return false;
    auto same = [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return false;
        auto it = b.begin();
        for (const auto& [k, v] : a) {
            if (it->first != k || !(it->second == v)) return false;
            ++it;
        }
        return true;
    };
    if (!same(homs, o.homs) || !same(squares, o.squares)) return false;
    if (cubes.size() != o.cubes.size()) return false;
    {
        auto it = o.cubes.begin();
        for (const auto& [k, v] : cubes) {
            if (it->first != k) return false;
            const Cube& w = it->second;
            if (!(v.a() == w.a() && v.b() == w.b() && v.c() == w.c() && v.d() == w.d() &&
                  v.f0() == w.f0() && v.f1() == w.f1() && v.g0() == w.g0() && v.g1() == w.g1() &&
                  v.h0() == w.h0() && v.h1() == w.h1() && v.f0p() == w.f0p() &&
                  v.f1p() == w.f1p()))
                return false;
            ++it;
        }
    }
    if (cls.has_value() != o.cls.has_value()) return false;
    return !cls || *cls == *o.cls;
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw Error("diagram schema violation at " + path + ": " + what);
}

json matrix_to_json(const IntMatrix& m, const std::string& path) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e > std::numeric_limits<std::int64_t>::max() ||
                e < std::numeric_limits<std::int64_t>::min())
                schema_error(path, "matrix entry exceeds the 64-bit file format bound");
            row.push_back(static_cast<std::int64_t>(e));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j, const std::string& path, std::size_t expect_cols,
                           bool cols_known) {
    if (!j.is_array()) schema_error(path, "expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = cols_known ? expect_cols : 0;
    if (!cols_known && rows > 0) {
        if (!j[0].is_array()) schema_error(path + "[0]", "expected a row array");
        cols = j[0].size();
    }
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            schema_error(path + "[" + std::to_string(i) + "]",
                         "expected a row of " + std::to_string(cols) + " integers");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number_integer())
                schema_error(path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]",
                             "expected an integer");
            m.at(i, c) = Int(row[c].get<std::int64_t>());
        }
    }
    return m;
}

const json& require(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) schema_error(path, std::string("missing key '") + key + "'");
    return *it;
}

} // namespace

DiagramDoc parse_diagram(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("diagram parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) schema_error("$", "document must be an object");

    DiagramDoc doc;
    if (j.contains("schema")) {
        if (!j["schema"].is_string()) schema_error("$.schema", "expected a string");
        doc.version = j["schema"].get<std::string>();
    }
    if (j.contains("class")) {
        if (!j["class"].is_string()) schema_error("$.class", "expected a string");
        doc.cls = class_from_name(j["class"].get<std::string>());
    }

    if (j.contains("groups")) {
        const json& gs = j["groups"];
        if (!gs.is_object()) schema_error("$.groups", "expected an object of named groups");
        for (auto it = gs.begin(); it != gs.end(); ++it) {
            const std::string path = "$.groups." + it.key();
            const json& g = it.value();
            if (!g.is_object()) schema_error(path, "expected an object");
            const json& ng = require(g, "generators", path);
            if (!ng.is_number_unsigned()) schema_error(path + ".generators", "expected a count");
            std::size_t n = ng.get<std::size_t>();
            IntMatrix rel(0, n);
            if (g.contains("relations"))
                rel = matrix_from_json(g["relations"], path + ".relations", n, true);
            try {
                doc.groups.emplace(it.key(), make_group(n, rel));
            } catch (const std::exception& e) {
                schema_error(path, e.what());
            }
        }
    }

    auto find_group = [&](const json& ref, const std::string& path) -> const FpAbGroup& {
        if (!ref.is_string()) schema_error(path, "expected a group name");
        auto it = doc.groups.find(ref.get<std::string>());
        if (it == doc.groups.end())
            schema_error(path, "unresolved group reference '" + ref.get<std::string>() + "'");
        return it->second;
    };

    if (j.contains("homs")) {
        const json& hs = j["homs"];
        if (!hs.is_object()) schema_error("$.homs", "expected an object of named homs");
        for (auto it = hs.begin(); it != hs.end(); ++it) {
            const std::string path = "$.homs." + it.key();
            const json& h = it.value();
            if (!h.is_object()) schema_error(path, "expected an object");
            const FpAbGroup& src = find_group(require(h, "src", path), path + ".src");
            const FpAbGroup& dst = find_group(require(h, "dst", path), path + ".dst");
            IntMatrix m = matrix_from_json(require(h, "matrix", path), path + ".matrix",
                                           src.num_generators(), true);
            if (m.rows() != dst.num_generators())
                schema_error(path + ".matrix", "expected " + std::to_string(dst.num_generators()) +
                                                   " rows (target generators)");
            try {
                doc.homs.emplace(it.key(), make_hom(src, dst, m));
            } catch (const IllDefinedError& e) {
                schema_error(path, e.what());
            }
        }
    }

    auto find_hom = [&](const json& obj, const char* key, const std::string& path) -> const Hom& {
        const json& ref = require(obj, key, path);
        if (!ref.is_string()) schema_error(path + "." + key, "expected a hom name");
        auto it = doc.homs.find(ref.get<std::string>());
        if (it == doc.homs.end())
            schema_error(path + "." + key,
                         "unresolved hom reference '" + ref.get<std::string>() + "'");
        return it->second;
    };

    if (j.contains("squares")) {
        const json& ss = j["squares"];
        if (!ss.is_object()) schema_error("$.squares", "expected an object of named squares");
        for (auto it = ss.begin(); it != ss.end(); ++it) {
            const std::string path = "$.squares." + it.key();
            const json& s = it.value();
            if (!s.is_object()) schema_error(path, "expected an object");
            try {
                doc.squares.emplace(it.key(),
                                    make_square(find_hom(s, "f", path), find_hom(s, "g", path),
                                                find_hom(s, "h", path), find_hom(s, "k", path)));
            } catch (const MismatchError& e) {
                schema_error(path, e.what());
            }
        }
    }

    if (j.contains("cubes")) {
        const json& cs = j["cubes"];
        if (!cs.is_object()) schema_error("$.cubes", "expected an object of named cubes");
        for (auto it = cs.begin(); it != cs.end(); ++it) {
            const std::string path = "$.cubes." + it.key();
            const json& s = it.value();
            if (!s.is_object()) schema_error(path, "expected an object");
            try {
                doc.cubes.emplace(
                    it.key(),
                    make_cube(find_hom(s, "a", path), find_hom(s, "b", path),
                              find_hom(s, "c", path), find_hom(s, "d", path),
                              find_hom(s, "f0", path), find_hom(s, "f1", path),
                              find_hom(s, "g0", path), find_hom(s, "g1", path),
                              find_hom(s, "h0", path), find_hom(s, "h1", path),
                              find_hom(s, "f0p", path), find_hom(s, "f1p", path)));
            } catch (const MismatchError& e) {
                schema_error(path, e.what());
            }
        }
    }

    return doc;
}

std::string serialize_diagram(const DiagramDoc& doc) {
    json j;
    j["schema"] = doc.version;
    if (doc.cls) j["class"] = class_name(*doc.cls);

    // Serialization needs names for every endpoint; collect them and fail
    // on objects that are not in the tables.
    auto group_name = [&](const FpAbGroup& g, const std::string& path) -> std::string {
        for (const auto& [name, grp] : doc.groups)
            if (grp == g) return name;
        schema_error(path, "endpoint group is not among the named groups");
    };
    auto hom_name = [&](const Hom& h, const std::string& path) -> std::string {
        for (const auto& [name, hh] : doc.homs)
            if (hh == h) return name;
        schema_error(path, "edge hom is not among the named homs");
    };

    json gs = json::object();
    for (const auto& [name, g] : doc.groups) {
        json e;
        e["generators"] = g.num_generators();
        e["relations"] = matrix_to_json(g.relations(), "$.groups." + name);
        gs[name] = std::move(e);
    }
    j["groups"] = std::move(gs);

    json hs = json::object();
    for (const auto& [name, h] : doc.homs) {
        json e;
        e["src"] = group_name(h.src(), "$.homs." + name + ".src");
        e["dst"] = group_name(h.dst(), "$.homs." + name + ".dst");
        e["matrix"] = matrix_to_json(h.matrix(), "$.homs." + name + ".matrix");
        hs[name] = std::move(e);
    }
    j["homs"] = std::move(hs);

    json ss = json::object();
    for (const auto& [name, s] : doc.squares) {
        json e;
        const std::string path = "$.squares." + name;
        e["f"] = hom_name(s.f(), path);
        e["g"] = hom_name(s.g(), path);
        e["h"] = hom_name(s.h(), path);
        e["k"] = hom_name(s.k(), path);
        ss[name] = std::move(e);
    }
    j["squares"] = std::move(ss);

    json cs = json::object();
    for (const auto& [name, cu] : doc.cubes) {
        json e;
        const std::string path = "$.cubes." + name;
        e["a"] = hom_name(cu.a(), path);
        e["b"] = hom_name(cu.b(), path);
        e["c"] = hom_name(cu.c(), path);
        e["d"] = hom_name(cu.d(), path);
        e["f0"] = hom_name(cu.f0(), path);
        e["f1"] = hom_name(cu.f1(), path);
        e["g0"] = hom_name(cu.g0(), path);
        e["g1"] = hom_name(cu.g1(), path);
        e["h0"] = hom_name(cu.h0(), path);
        e["h1"] = hom_name(cu.h1(), path);
        e["f0p"] = hom_name(cu.f0p(), path);
        e["f1p"] = hom_name(cu.f1p(), path);
        cs[name] = std::move(e);
    }
    j["cubes"] = std::move(cs);

    return j.dump();
}

IntMatrix parse_matrix_doc(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("matrix parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (j.is_object() && j.contains("matrix"))
        return matrix_from_json(j["matrix"], "$.matrix", 0, false);
    return matrix_from_json(j, "$", 0, false);
}

} // namespace effsq
