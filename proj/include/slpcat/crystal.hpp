/**
 * @file crystal.hpp
 * @brief Signature-rule crystal operators on dominant weights and partitions.
 *
 * For a dominant weight lambda and a residue alpha, rows are read top to
 * bottom. Row i contributes
 *   '+' if lambda + e_i is dominant and lambda_i + 1 - i = alpha (mod p),
 *   '-' if lambda - e_i is dominant and lambda_i - i     = alpha (mod p).
 * Adjacent "-+" pairs cancel until every '+' precedes every '-'. f~ moves the
 * right-most surviving '+', e~ the left-most surviving '-'.
 */

#pragma once

#include "combinatorics.hpp"

#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <tuple>

namespace slpcat {

enum class Sign { plus, minus };

struct SignEntry {
    int row;
    Sign sign;
    friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

struct Signature {
    enum class Stage { raw, reduced };

    std::vector<SignEntry> entries;
    Stage stage = Stage::raw;

    int count(Sign s) const
    {
        return static_cast<int>(std::count_if(entries.begin(), entries.end(), [s](const SignEntry& e) { return e.sign == s; }));
    }

    /// "+-" string in row order.
    std::string symbols() const
    {
        std::string s;
        for (const SignEntry& e : entries)
            s += e.sign == Sign::plus ? '+' : '-';
        return s;
    }

    std::vector<int> rows() const
    {
        std::vector<int> r;
        for (const SignEntry& e : entries)
            r.push_back(e.row);
        return r;
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature alpha_signature(const Weight& lambda, const Residue& alpha)
{
    require_dominant(lambda, "alpha_signature");
    const int n = lambda.size();
    Signature s;
    for (int i = 1; i <= n; ++i) {
        const bool addable = i == 1 || lambda(i - 1) > lambda(i);
        const bool removable = i == n || lambda(i) > lambda(i + 1);
        // Both signs cannot share a row: their residues differ by one.
        if (addable && alpha.matches(static_cast<long long>(lambda(i)) + 1 - i))
            s.entries.push_back({i, Sign::plus});
        else if (removable && alpha.matches(static_cast<long long>(lambda(i)) - i))
            s.entries.push_back({i, Sign::minus});
    }
    return s;
}

/// Single pass: each '+' cancels the nearest unmatched '-' to its left.
inline Signature reduce_signature(const Signature& raw)
{
    std::vector<std::size_t> open_minus;
    std::vector<bool> keep(raw.entries.size(), true);
    for (std::size_t k = 0; k < raw.entries.size(); ++k) {
        if (raw.entries[k].sign == Sign::minus) {
            open_minus.push_back(k);
        } else if (!open_minus.empty()) {
            keep[open_minus.back()] = false;
            keep[k] = false;
            open_minus.pop_back();
        }
    }
    Signature out;
    out.stage = Signature::Stage::reduced;
    for (std::size_t k = 0; k < raw.entries.size(); ++k)
        if (keep[k])
            out.entries.push_back(raw.entries[k]);
    return out;
}

namespace detail {

inline std::optional<int> rightmost_plus(const Signature& reduced)
{
    for (auto it = reduced.entries.rbegin(); it != reduced.entries.rend(); ++it)
        if (it->sign == Sign::plus)
            return it->row;
    return std::nullopt;
}

inline std::optional<int> leftmost_minus(const Signature& reduced)
{
    for (const SignEntry& e : reduced.entries)
        if (e.sign == Sign::minus)
            return e.row;
    return std::nullopt;
}

} // namespace detail

inline std::optional<Weight> crystal_f(const Weight& lambda, const Residue& alpha)
{
    if (auto row = detail::rightmost_plus(reduce_signature(alpha_signature(lambda, alpha))))
        return lambda.plus_unit(*row);
    return std::nullopt;
}

inline std::optional<Weight> crystal_e(const Weight& lambda, const Residue& alpha)
{
    if (auto row = detail::leftmost_minus(reduce_signature(alpha_signature(lambda, alpha))))
        return lambda.minus_unit(*row);
    return std::nullopt;
}

struct StringLengths {
    int epsilon;  ///< number of times e~ applies
    int phi;      ///< number of times f~ applies
    friend bool operator==(const StringLengths&, const StringLengths&) = default;
};

inline StringLengths string_lengths(const Weight& lambda, const Residue& alpha)
{
    const Signature r = reduce_signature(alpha_signature(lambda, alpha));
    return {r.count(Sign::minus), r.count(Sign::plus)};
}

// ---------------------------------------------------------------------------
// Partitions: embed into |lambda| + 1 rows. The last row then has length 0,
// and its "removable" sign (lambda_n may go negative for GL_n) is dropped.

inline Signature alpha_signature(const Partition& lambda, const Residue& alpha)
{
    const int n = lambda.size() + 1;
    Signature s = alpha_signature(lambda.to_weight(n), alpha);
    if (!s.entries.empty() && s.entries.back().row == n && s.entries.back().sign == Sign::minus)
        s.entries.pop_back();
    return s;
}

inline std::optional<Partition> crystal_f(const Partition& lambda, const Residue& alpha)
{
    if (auto row = detail::rightmost_plus(reduce_signature(alpha_signature(lambda, alpha))))
        return lambda.with_box(*row);
    return std::nullopt;
}

inline std::optional<Partition> crystal_e(const Partition& lambda, const Residue& alpha)
{
    if (auto row = detail::leftmost_minus(reduce_signature(alpha_signature(lambda, alpha))))
        return lambda.without_box(*row);
    return std::nullopt;
}

inline StringLengths string_lengths(const Partition& lambda, const Residue& alpha)
{
    const Signature r = reduce_signature(alpha_signature(lambda, alpha));
    return {r.count(Sign::minus), r.count(Sign::plus)};
}

// ---------------------------------------------------------------------------
// Crystal graphs.

template <typename Vertex>
struct CrystalEdge {
    Vertex source;
    int alpha;
    Vertex target;
    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
    friend auto operator<=>(const CrystalEdge& a, const CrystalEdge& b)
    {
        return std::tie(a.source, a.alpha, a.target) <=> std::tie(b.source, b.alpha, b.target);
    }
};

template <typename Vertex>
struct CrystalGraph {
    int p = 0;
    std::set<Vertex> vertices;
    std::set<CrystalEdge<Vertex>> edges;  ///< (b, alpha, f~_alpha b)
};

/**
 * Closure of the seeds under every f~_alpha and e~_alpha, breadth first, using
 * at most max_steps applications from a seed. Vertices rejected by keep() are
 * neither added nor expanded; edges are recorded between kept vertices only.
 */
template <typename Vertex>
CrystalGraph<Vertex> crystal_graph(const std::vector<Vertex>& seeds, int p, int max_steps,
                                   const std::function<bool(const Vertex&)>& keep = {})
{
    require_prime(p);
    CrystalGraph<Vertex> g;
    g.p = p;
    std::deque<std::pair<Vertex, int>> frontier;
    auto admit = [&](const Vertex& v, int depth) {
        if (keep && !keep(v))
            return false;
        if (g.vertices.insert(v).second)
            frontier.emplace_back(v, depth);
        return true;
    };
    for (const Vertex& s : seeds)
        admit(s, 0);
    const std::vector<Residue> res = residues(p);
    while (!frontier.empty()) {
        auto [v, depth] = frontier.front();
        frontier.pop_front();
        if (max_steps >= 0 && depth >= max_steps)
            continue;
        for (const Residue& a : res) {
            if (auto up = crystal_f(v, a); up && admit(*up, depth + 1))
                g.edges.insert({v, a.value(), *up});
            if (auto down = crystal_e(v, a); down && admit(*down, depth + 1))
                g.edges.insert({*down, a.value(), v});
        }
    }
    return g;
}

/// Vertices killed by every e~_alpha.
template <typename Vertex>
std::set<Vertex> singular_vertices(const CrystalGraph<Vertex>& g)
{
    std::set<Vertex> out;
    if (g.vertices.empty())
        return out;
    const std::vector<Residue> res = residues(g.p);
    for (const Vertex& v : g.vertices)
        if (std::none_of(res.begin(), res.end(), [&](const Residue& a) { return crystal_e(v, a).has_value(); }))
            out.insert(v);
    return out;
}

/// lambda_i - lambda_{i+1} < p for every i (including the last nonzero row).
inline bool in_empty_component(const Partition& lambda, int p)
{
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) - lambda.row(i + 1) >= p)
            return false;
    return true;
}

struct ComponentClassification {
    std::set<Partition> computed;
    std::set<Partition> predicted;
    bool equal;
};

/// Component of the empty partition, truncated at size max_size, against the
/// closed-form description by row gaps.
inline ComponentClassification empty_component_classification(int p, int max_size)
{
    require_prime(p);
    const auto g = crystal_graph<Partition>({Partition{}}, p, -1,
                                            [max_size](const Partition& v) { return v.size() <= max_size; });
    ComponentClassification out;
    out.computed = g.vertices;
    for (const Partition& l : partitions_up_to(max_size))
        if (in_empty_component(l, p))
            out.predicted.insert(l);
    out.equal = out.computed == out.predicted;
    return out;
}

/// Socle labels of the restriction from S_d to S_{d-1}: (alpha, e~_alpha lambda).
inline std::vector<std::pair<Residue, Partition>> branching(const Partition& lambda, int p)
{
    require_prime(p);
    if (!in_empty_component(lambda, p))
        throw invalid_input("branching: " + to_string(lambda) + " has a row gap >= p");
    std::vector<std::pair<Residue, Partition>> out;
    for (const Residue& a : residues(p))
        if (auto mu = crystal_e(lambda, a))
            out.emplace_back(a, *mu);
    return out;
}

} // namespace slpcat
