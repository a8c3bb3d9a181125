#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "bpsdt/bps.hpp"
#include "bpsdt/correspondence.hpp"
#include "bpsdt/errors.hpp"
#include "bpsdt/pipeline.hpp"
#include "bpsdt/quiver_dt.hpp"
#include "bpsdt/rational.hpp"

namespace bpsdt::io {

using Json = nlohmann::ordered_json;

enum class Format { structured, csv };

enum class SeriesKind { local_gw, local_bps, relative_gw, relative_bps, euler };

inline const char* to_string(SeriesKind k) {
    switch (k) {
    case SeriesKind::local_gw: return "local_gw";
    case SeriesKind::local_bps: return "local_bps";
    case SeriesKind::relative_gw: return "relative_gw";
    case SeriesKind::relative_bps: return "relative_bps";
    case SeriesKind::euler: return "euler";
    }
    return "?";
}

inline SeriesKind series_kind(const GwVector& v) {
    return v.kind == Kind::local ? SeriesKind::local_gw : SeriesKind::relative_gw;
}
inline SeriesKind series_kind(const BpsVector& v) {
    return v.kind == Kind::local ? SeriesKind::local_bps : SeriesKind::relative_bps;
}
inline SeriesKind series_kind(const EulerSeries&) { return SeriesKind::euler; }

using SeriesData = std::variant<GwVector, BpsVector, EulerSeries>;

inline SeriesKind series_kind(const SeriesData& d) {
    return std::visit([](const auto& v) { return series_kind(v); }, d);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

[[noreturn]] inline void fail(std::string_view source, std::string_view where, const std::string& msg) {
    std::string text(source);
    if (!where.empty()) text += ": field '" + std::string(where) + "'";
    text += ": " + msg;
    bpsdt::detail::fail_input(text);
}

inline std::uint64_t read_count(const Json& doc, const char* key, std::string_view source) {
    const Json& v = doc.at(key);
    if (!v.is_number_integer()) fail(source, key, "must be an integer");
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > std::numeric_limits<std::uint32_t>::max()) fail(source, key, "out of range");
        return u;
    }
    const auto i = v.get<std::int64_t>();
    if (i < 0) fail(source, key, "must be nonnegative");
    return static_cast<std::uint64_t>(i);
}

} // namespace detail

/// Parses a series document:
///
///     {"kind": "local_gw", "w": 3, "coeffs": ["3", "-45/8", "244/9"]}
///
/// `w` is required for every kind except `euler`, which takes `m` instead.
/// Optional keys: `primitive` (bool, default true) and `source` (free text).
/// Coefficients are quoted rationals; index 0 is d = 1 (n = 0 for euler).
inline SeriesData parse_series(std::string_view text, std::string_view source = "<input>") {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        detail::fail(source, "", e.what());
    }
    if (!doc.is_object()) detail::fail(source, "", "top level must be an object");

    for (const auto& [key, _] : doc.items()) {
        if (key != "kind" && key != "w" && key != "m" && key != "coeffs" && key != "primitive" && key != "source") {
            detail::fail(source, key, "unknown field");
        }
    }

    if (!doc.contains("kind") || !doc["kind"].is_string()) detail::fail(source, "kind", "missing or not a string");
    const auto kind_name = doc["kind"].get<std::string>();
    SeriesKind kind{};
    if (kind_name == "local_gw") kind = SeriesKind::local_gw;
    else if (kind_name == "local_bps") kind = SeriesKind::local_bps;
    else if (kind_name == "relative_gw") kind = SeriesKind::relative_gw;
    else if (kind_name == "relative_bps") kind = SeriesKind::relative_bps;
    else if (kind_name == "euler") kind = SeriesKind::euler;
    else detail::fail(source, "kind", "unknown kind \"" + kind_name + "\"");

    if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) detail::fail(source, "coeffs", "missing or not an array");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < doc["coeffs"].size(); ++i) {
        const auto where = "coeffs[" + std::to_string(i) + "]";
        const Json& c = doc["coeffs"][i];
        if (!c.is_string()) detail::fail(source, where, "rationals must be quoted strings");
        try {
            coeffs.push_back(Rational::parse(c.get<std::string>()));
        } catch (const InvalidInput& e) {
            detail::fail(source, where, e.what());
        }
    }

    if (kind == SeriesKind::euler) {
        if (!doc.contains("m")) detail::fail(source, "m", "required for kind euler");
        if (doc.contains("w")) detail::fail(source, "w", "not allowed for kind euler");
        EulerSeries e{static_cast<std::uint32_t>(detail::read_count(doc, "m", source)), {}};
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (!coeffs[i].is_integer()) detail::fail(source, "coeffs[" + std::to_string(i) + "]", "Euler characteristics are integers");
            e.chi.push_back(coeffs[i].numerator());
        }
        if (e.chi.empty() || e.chi[0] != 1) detail::fail(source, "coeffs[0]", "chi_0 must be 1");
        return e;
    }

    if (!doc.contains("w")) detail::fail(source, "w", std::string("required for kind ") + kind_name);
    if (doc.contains("m")) detail::fail(source, "m", "only allowed for kind euler");
    const auto w = detail::read_count(doc, "w", source);
    if (w == 0) detail::fail(source, "w", "must be positive");
    if (coeffs.empty()) detail::fail(source, "coeffs", "must not be empty");
    GeometryParams geometry{static_cast<std::uint32_t>(w), true};
    if (doc.contains("primitive")) {
        if (!doc["primitive"].is_boolean()) detail::fail(source, "primitive", "must be a boolean");
        geometry.primitive_class = doc["primitive"].get<bool>();
    }

    switch (kind) {
    case SeriesKind::local_gw: return GwVector{Kind::local, geometry, std::move(coeffs)};
    case SeriesKind::relative_gw: return GwVector{Kind::relative, geometry, std::move(coeffs)};
    case SeriesKind::local_bps: return BpsVector{Kind::local, geometry, std::move(coeffs)};
    default: return BpsVector{Kind::relative, geometry, std::move(coeffs)};
    }
}

inline SeriesData read_series_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bpsdt::detail::fail_input("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_series(buf.str(), path.string());
}

// ---------------------------------------------------------------------------
// Emission

/// Header plus rows of already-rendered cells.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

namespace detail {

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline Json strings(const std::vector<Rational>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

inline Json strings(const std::vector<Integer>& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.get_str());
    return arr;
}

inline std::vector<std::string> index_header(std::size_t first, std::size_t count) {
    std::vector<std::string> h;
    for (std::size_t i = 0; i < count; ++i) h.push_back(std::to_string(first + i));
    return h;
}

} // namespace detail

inline std::string emit_table(const Table& t, Format format) {
    if (format == Format::structured) {
        Json doc;
        doc["columns"] = t.header;
        doc["rows"] = t.rows;
        return doc.dump(2) + "\n";
    }
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += detail::csv_cell(cells[i]);
        }
        out += '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return out;
}

// Structured views mirror the input schema so outputs can be fed back in.

inline Json to_json(const GwVector& v) {
    Json doc;
    doc["kind"] = to_string(series_kind(v));
    doc["w"] = v.geometry.w;
    doc["primitive"] = v.geometry.primitive_class;
    doc["coeffs"] = detail::strings(v.entries);
    return doc;
}

inline Json to_json(const BpsVector& v) {
    Json doc;
    doc["kind"] = to_string(series_kind(v));
    doc["w"] = v.geometry.w;
    doc["primitive"] = v.geometry.primitive_class;
    doc["coeffs"] = detail::strings(v.entries);
    return doc;
}

inline Json to_json(const EulerSeries& e) {
    Json doc;
    doc["kind"] = "euler";
    doc["m"] = e.m;
    doc["coeffs"] = detail::strings(e.chi);
    return doc;
}

inline Json to_json(const SeriesData& d) {
    return std::visit([](const auto& v) { return to_json(v); }, d);
}

inline Json to_json(const DtTable& t) {
    Json doc;
    doc["kind"] = "dt_table";
    Json rows = Json::array();
    if (!t.empty()) {
        for (std::uint32_t m = 0; m <= t.m_max(); ++m) {
            Json row;
            row["m"] = m;
            row["dt"] = detail::strings(t.row(m));
            rows.push_back(row);
        }
    }
    doc["rows"] = rows;
    return doc;
}

inline Json to_json(const IntMatrix& c, std::uint32_t w, bool inverse) {
    Json doc;
    doc["kind"] = inverse ? "correspondence_matrix_inverse" : "correspondence_matrix";
    doc["w"] = w;
    Json rows = Json::array();
    for (std::size_t s = 1; s <= c.size(); ++s) {
        Json row = Json::array();
        for (std::size_t t = 1; t <= c.size(); ++t) row.push_back(c(s, t).get_str());
        rows.push_back(row);
    }
    doc["rows"] = rows;
    return doc;
}

inline Json to_json(const IntegralityReport& r) {
    Json doc;
    doc["pass"] = r.pass;
    doc["non_integral"] = r.non_integral;
    return doc;
}

inline Json to_json(const PipelineReport& r) {
    Json doc;
    doc["kind"] = "pipeline";
    doc["w"] = r.geometry.w;
    doc["primitive"] = r.geometry.primitive_class;
    doc["local_gw"] = detail::strings(r.local_gw.entries);
    doc["local_bps"] = detail::strings(r.local_bps.entries);
    doc["relative_bps"] = detail::strings(r.relative_bps.entries);
    doc["relative_gw"] = detail::strings(r.relative_gw.entries);
    doc["local_integrality"] = to_json(r.local_integrality);
    doc["relative_integrality"] = to_json(r.relative_integrality);
    return doc;
}

/// One row of values under a header of their indices.
inline Table to_table(const std::vector<Rational>& v, std::size_t first_index = 1) {
    Table t{detail::index_header(first_index, v.size()), {}};
    if (!v.empty()) {
        std::vector<std::string> row;
        for (const auto& x : v) row.push_back(x.str());
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline Table to_table(const GwVector& v) { return to_table(v.entries); }
inline Table to_table(const BpsVector& v) { return to_table(v.entries); }
inline Table to_table(const EulerSeries& e) {
    return to_table(std::vector<Rational>(e.chi.begin(), e.chi.end()), 0);
}
inline Table to_table(const SeriesData& d) {
    return std::visit([](const auto& v) { return to_table(v); }, d);
}

/// Rows "m,DT_1,...,DT_n".
inline Table to_table(const DtTable& t) {
    Table out{{"m"}, {}};
    if (t.empty()) return out;
    const std::size_t n_max = t.row(0).size();
    for (const auto& h : detail::index_header(1, n_max)) out.header.push_back(h);
    for (std::uint32_t m = 0; m <= t.m_max(); ++m) {
        std::vector<std::string> row{std::to_string(m)};
        for (const auto& v : t.row(m)) row.push_back(v.get_str());
        out.rows.push_back(std::move(row));
    }
    return out;
}

inline Table to_table(const IntMatrix& c) {
    Table out{{"s"}, {}};
    for (const auto& h : detail::index_header(1, c.size())) out.header.push_back(h);
    for (std::size_t s = 1; s <= c.size(); ++s) {
        std::vector<std::string> row{std::to_string(s)};
        for (std::size_t t = 1; t <= c.size(); ++t) row.push_back(c(s, t).get_str());
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// Columns: stage, integral (pass/fail for BPS rows), then d = 1..N.
inline Table to_table(const PipelineReport& r) {
    Table out{{"stage", "integral"}, {}};
    for (const auto& h : detail::index_header(1, r.local_gw.entries.size())) out.header.push_back(h);
    auto add = [&out](const char* name, const char* integral, const std::vector<Rational>& v) {
        std::vector<std::string> row{name, integral};
        for (const auto& x : v) row.push_back(x.str());
        out.rows.push_back(std::move(row));
    };
    auto verdict = [](const IntegralityReport& rep) { return rep.pass ? "pass" : "fail"; };
    add("local_gw", "", r.local_gw.entries);
    add("local_bps", verdict(r.local_integrality), r.local_bps.entries);
    add("relative_bps", verdict(r.relative_integrality), r.relative_bps.entries);
    add("relative_gw", "", r.relative_gw.entries);
    return out;
}

inline Table to_table(const IntegralityReport& r) {
    std::string positions;
    for (std::size_t i = 0; i < r.non_integral.size(); ++i) {
        if (i) positions += ' ';
        positions += std::to_string(r.non_integral[i]);
    }
    return Table{{"pass", "non_integral"}, {{r.pass ? "true" : "false", positions}}};
}

/// Renders any emittable value; CSV goes through to_table, structured
/// through to_json.
template <class T>
std::string emit(const T& value, Format format) {
    if (format == Format::csv) return emit_table(to_table(value), Format::csv);
    return to_json(value).dump(2) + "\n";
}

} // namespace bpsdt::io
