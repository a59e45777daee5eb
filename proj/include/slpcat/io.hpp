/**
 * @file io.hpp
 * @brief JSON and DOT serialization. Every list is emitted in a canonical
 *        sorted order so output is byte-stable across runs.
 */

#pragma once

#include "characters.hpp"
#include "crystal.hpp"
#include "fock.hpp"
#include "hecke.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace slpcat {

using json = nlohmann::ordered_json;

inline json to_json(const Weight& w) { return w.entries(); }
inline json to_json(const Partition& p) { return p.parts(); }
inline json to_json(const WedgeLabel& w) { return w.entries(); }

/// [{weight, mult}] sorted lexicographically by weight.
inline json to_json(const FormalCharacter& c)
{
    json out = json::array();
    for (const auto& [w, m] : c.terms())
        out.push_back({{"weight", w.entries()}, {"mult", m}});
    return out;
}

template <typename Label>
json to_json(const FockVector<Label>& v)
{
    json out = json::array();
    for (const auto& [l, c] : v.terms())
        out.push_back({{"label", to_json(l)}, {"coeff", c}});
    return out;
}

inline json to_json(const RelationReport& r)
{
    json out = json::array();
    for (const RelationViolation& v : r)
        out.push_back({{"relation", v.relation}, {"label", v.label}});
    return out;
}

inline json to_json(const Signature& s)
{
    json out = json::array();
    for (const SignEntry& e : s.entries)
        out.push_back({{"row", e.row}, {"sign", e.sign == Sign::plus ? "+" : "-"}});
    return out;
}

/// {p, dims, entries} with entries row-major.
inline json to_json(const FpMatrix& m)
{
    return {{"p", m.modulus()}, {"dims", {m.rows(), m.cols()}}, {"entries", m.data()}};
}

namespace detail {

template <typename Vertex>
std::vector<std::pair<std::string, const Vertex*>> sorted_labels(const CrystalGraph<Vertex>& g)
{
    std::vector<std::pair<std::string, const Vertex*>> v;
    for (const Vertex& x : g.vertices)
        v.emplace_back(to_string(x), &x);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

inline const char* residue_colour(int alpha)
{
    static constexpr const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple",
                                              "brown", "magenta", "cyan", "gold", "gray"};
    return palette[static_cast<std::size_t>(alpha) % std::size(palette)];
}

} // namespace detail

template <typename Vertex>
json to_json(const CrystalGraph<Vertex>& g)
{
    json vertices = json::array();
    for (const auto& [label, v] : detail::sorted_labels(g))
        vertices.push_back(label);
    std::vector<std::tuple<std::string, int, std::string>> edges;
    for (const auto& e : g.edges)
        edges.emplace_back(to_string(e.source), e.alpha, to_string(e.target));
    std::sort(edges.begin(), edges.end());
    json jedges = json::array();
    for (const auto& [s, a, t] : edges)
        jedges.push_back({{"source", s}, {"alpha", a}, {"target", t}});
    return {{"p", g.p}, {"vertices", vertices}, {"edges", jedges}};
}

/// Vertices sorted by label string; edges coloured by residue.
template <typename Vertex>
std::string to_dot(const CrystalGraph<Vertex>& g)
{
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (const auto& [label, v] : detail::sorted_labels(g))
        os << "  \"" << label << "\";\n";
    std::vector<std::tuple<std::string, int, std::string>> edges;
    for (const auto& e : g.edges)
        edges.emplace_back(to_string(e.source), e.alpha, to_string(e.target));
    std::sort(edges.begin(), edges.end());
    for (const auto& [s, a, t] : edges)
        os << "  \"" << s << "\" -> \"" << t << "\" [label=\"" << a << "\", color=" << detail::residue_colour(a)
           << "];\n";
    os << "}\n";
    return os.str();
}

} // namespace slpcat
