#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ehrcomb/ehrhart.hpp"
#include "ehrcomb/identities.hpp"
#include "ehrcomb/poset.hpp"
#include "ehrcomb/poset_spec.hpp"
#include "ehrcomb/rational.hpp"

namespace ehrcomb {

using nlohmann::json;

// BigInt values are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
inline json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer())
        return BigInt(j.get<std::int64_t>());
    if (j.is_string())
        return detail::parse_big_int(j.get<std::string>(), 0);
    throw ParseError("expected an integer or integer string", 0);
}

inline void to_json(json& j, const Rational& r) { j = r.str(); }

inline void from_json(const json& j, Rational& r) {
    if (j.is_number_integer()) {
        r = Rational(BigInt(j.get<std::int64_t>()));
        return;
    }
    if (!j.is_string())
        throw ParseError("expected a rational string \"p/q\"", 0);
    r = Rational::parse(j.get<std::string>());
}

// Polynomial <-> array of coefficient strings, constant term first.
inline void to_json(json& j, const Polynomial& p) {
    j = json::array();
    for (const Rational& c : p.coefficients())
        j.push_back(c.str());
}

inline void from_json(const json& j, Polynomial& p) {
    std::vector<Rational> c;
    for (const auto& e : j)
        c.push_back(e.get<Rational>());
    p = Polynomial(std::move(c));
}

inline void to_json(json& j, const HStarVector& h) {
    j = json::object();
    j["dim"] = h.dim;
    json entries = json::array();
    for (const BigInt& e : h.entries)
        entries.push_back(bigint_to_json(e));
    j["entries"] = std::move(entries);
}

inline void from_json(const json& j, HStarVector& h) {
    h.dim = j.at("dim").get<int>();
    h.entries.clear();
    for (const auto& e : j.at("entries"))
        h.entries.push_back(bigint_from_json(e));
}

// Poset <-> {"size": n, "covers": [[a, b], ...]}; construction re-validates
// and re-normalizes, so any acyclic relation list is accepted.
inline void to_json(json& j, const Poset& p) {
    j = json::object();
    j["size"] = p.size();
    json covers = json::array();
    for (auto [a, b] : p.covers())
        covers.push_back(json::array({a, b}));
    j["covers"] = std::move(covers);
}

inline void from_json(const json& j, Poset& p) {
    int size = j.at("size").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : j.at("covers"))
        covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    p = Poset(size, covers);
}

inline void to_json(json& j, const EhrhartData& d) {
    j = json::object();
    j["dim"] = d.dim;
    j["ehrhart"] = d.ehrhart;
    j["hstar"] = d.hstar;
}

inline void from_json(const json& j, EhrhartData& d) {
    d.dim = j.at("dim").get<int>();
    d.ehrhart = j.at("ehrhart").get<Polynomial>();
    d.hstar = j.at("hstar").get<HStarVector>();
}

inline void to_json(json& j, const IdentityReport& r) {
    j = json::object();
    j["name"] = r.name;
    j["params"] = r.params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["lhs_path"] = r.lhs_path;
    j["rhs_path"] = r.rhs_path;
    j["pass"] = r.pass;
}

inline void from_json(const json& j, IdentityReport& r) {
    r.name = j.at("name").get<std::string>();
    r.params = j.at("params").get<std::string>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.lhs_path = j.at("lhs_path").get<std::string>();
    r.rhs_path = j.at("rhs_path").get<std::string>();
    r.pass = j.at("pass").get<bool>();
}

inline Poset load_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open poset file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(),
                         e.byte > 0 ? e.byte - 1 : 0);
    }
    return j.get<Poset>();
}

} // namespace ehrcomb
