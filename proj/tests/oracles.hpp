// Independent reference computations used only by the tests. None of these
// call into the code path they are compared against.

#pragma once

#include <slpcat/characters.hpp>
#include <slpcat/crystal.hpp>

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using slpcat::Partition;

/// Character of a partition shape by enumerating every filling in {1..n}
/// and keeping the semistandard ones. Keys are content vectors.
inline std::map<std::vector<int>, long long> brute_ssyt_character(const Partition& shape, int n)
{
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.row(r); ++c)
            cells.emplace_back(r, c);
    std::map<std::vector<int>, long long> out;
    std::vector<int> fill(cells.size(), 1);
    auto value = [&](int r, int c) {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k] == std::make_pair(r, c))
                return fill[k];
        return -1;
    };
    while (true) {
        bool ok = true;
        for (std::size_t k = 0; k < cells.size() && ok; ++k) {
            auto [r, c] = cells[k];
            if (c > 1 && value(r, c - 1) > fill[k])
                ok = false;
            if (r > 1 && value(r - 1, c) >= fill[k])
                ok = false;
        }
        if (ok) {
            std::vector<int> content(static_cast<std::size_t>(n), 0);
            for (int v : fill)
                ++content[static_cast<std::size_t>(v - 1)];
            ++out[content];
        }
        std::size_t k = 0;
        while (k < fill.size() && fill[k] == n)
            fill[k++] = 1;
        if (k == fill.size())
            break;
        ++fill[k];
    }
    return out;
}

/// prod over boxes (n + content) / hook.
inline long long hook_content_dimension(const Partition& shape, int n)
{
    long long num = 1, den = 1;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.row(r); ++c) {
            int leg = 0;
            while (shape.row(r + leg + 1) >= c)
                ++leg;
            num *= n + c - r;
            den *= shape.row(r) - c + leg + 1;
        }
    return num / den;
}

/// Cancels a randomly chosen adjacent "-+" pair among survivors until none remain.
inline slpcat::Signature random_order_reduce(const slpcat::Signature& raw, std::mt19937& rng)
{
    std::vector<slpcat::SignEntry> cur = raw.entries;
    while (true) {
        std::vector<std::size_t> spots;
        for (std::size_t k = 0; k + 1 < cur.size(); ++k)
            if (cur[k].sign == slpcat::Sign::minus && cur[k + 1].sign == slpcat::Sign::plus)
                spots.push_back(k);
        if (spots.empty())
            break;
        const std::size_t k = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(k), cur.begin() + static_cast<std::ptrdiff_t>(k + 2));
    }
    slpcat::Signature s;
    s.entries = cur;
    s.stage = slpcat::Signature::Stage::reduced;
    return s;
}

/// Generic exterior-algebra action: move each factor, then sort into
/// decreasing order tracking the permutation sign; repeated factors vanish.
inline std::map<std::vector<int>, long long> exterior_apply(bool f, int p, int alpha, const std::vector<int>& wedge)
{
    std::map<std::vector<int>, long long> out;
    for (std::size_t j = 0; j < wedge.size(); ++j) {
        const int a = wedge[j];
        const int res = ((f ? a : a - 1) % p + p) % p;
        if (res != alpha)
            continue;
        std::vector<int> v = wedge;
        v[j] = f ? a + 1 : a - 1;
        int sign = 1;
        for (std::size_t x = 0; x < v.size(); ++x)
            for (std::size_t y = 0; y + 1 < v.size() - x; ++y)
                if (v[y] < v[y + 1]) {
                    std::swap(v[y], v[y + 1]);
                    sign = -sign;
                }
        bool repeated = false;
        for (std::size_t k = 1; k < v.size(); ++k)
            repeated = repeated || v[k] == v[k - 1];
        if (repeated)
            continue;
        out[v] += sign;
        if (out[v] == 0)
            out.erase(v);
    }
    return out;
}

/// Partition crystal from addable/removable boxes read top row first.
inline std::optional<Partition> box_crystal(bool f, const Partition& lambda, int p, int alpha)
{
    struct Item { int row; bool plus; };
    std::vector<Item> sig;
    for (int r = 1; r <= lambda.length() + 1; ++r) {
        const bool addable = r == 1 || lambda.row(r - 1) > lambda.row(r);
        const bool removable = r <= lambda.length() && lambda.row(r) > lambda.row(r + 1);
        const int add_content = lambda.row(r) + 1 - r;
        const int rem_content = lambda.row(r) - r;
        if (addable && ((add_content % p) + p) % p == alpha)
            sig.push_back({r, true});
        if (removable && ((rem_content % p) + p) % p == alpha)
            sig.push_back({r, false});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < sig.size(); ++k)
            if (!sig[k].plus && sig[k + 1].plus) {
                sig.erase(sig.begin() + static_cast<std::ptrdiff_t>(k), sig.begin() + static_cast<std::ptrdiff_t>(k + 2));
                changed = true;
                break;
            }
    }
    if (f) {
        for (auto it = sig.rbegin(); it != sig.rend(); ++it)
            if (it->plus)
                return lambda.with_box(it->row);
    } else {
        for (const Item& it : sig)
            if (!it.plus)
                return lambda.without_box(it.row);
    }
    return std::nullopt;
}

} // namespace oracle
