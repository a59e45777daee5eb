/**
 * @file combinatorics.hpp
 * @brief GL_n weights, partitions and the box/content/residue calculus.
 *
 * Conventions used throughout the library:
 * - rows and columns are 1-based, row 1 is the top row;
 * - the content of the box in row x and column y is y - x;
 * - a Weight is a dense n-tuple, a Partition drops trailing zeros.
 */

#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slpcat {

class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class unsupported_modulus : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr bool is_prime(long long m) noexcept
{
    if (m < 2)
        return false;
    for (long long q = 2; q * q <= m; ++q)
        if (m % q == 0)
            return false;
    return true;
}

/// Least nonnegative residue of x modulo m (m > 0).
constexpr int mod_floor(long long x, int m) noexcept
{
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

inline void require_prime(int p)
{
    if (!is_prime(p))
        throw invalid_input("modulus " + std::to_string(p) + " is not prime");
}

/// An element of F_p. Carries its modulus so mismatched residues cannot mix.
class Residue {
public:
    Residue(int modulus, int value) : p_(modulus), value_(value)
    {
        require_prime(modulus);
        if (value < 0 || value >= modulus)
            throw invalid_input("residue value " + std::to_string(value) + " outside [0, "
                                + std::to_string(modulus) + ")");
    }

    /// Reduces an arbitrary integer modulo p.
    static Residue of(int modulus, long long x)
    {
        require_prime(modulus);
        return Residue(modulus, mod_floor(x, modulus));
    }

    int modulus() const noexcept { return p_; }
    int value() const noexcept { return value_; }

    bool matches(long long x) const noexcept { return mod_floor(x, p_) == value_; }

    Residue operator+(int k) const { return of(p_, static_cast<long long>(value_) + k); }
    Residue operator-(int k) const { return of(p_, static_cast<long long>(value_) - k); }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;

private:
    int p_;
    int value_;
};

/// All residues of F_p in increasing order.
inline std::vector<Residue> residues(int p)
{
    require_prime(p);
    std::vector<Residue> out;
    out.reserve(static_cast<std::size_t>(p));
    for (int a = 0; a < p; ++a)
        out.emplace_back(p, a);
    return out;
}

/// A character of the diagonal torus of GL_n: an n-tuple of integers.
class Weight {
public:
    explicit Weight(std::vector<int> entries) : entries_(std::move(entries))
    {
        if (entries_.empty())
            throw invalid_input("weight must have at least one entry");
    }

    static Weight zero(int n) { return Weight(std::vector<int>(static_cast<std::size_t>(check_n(n)), 0)); }

    /// Coordinate vector epsilon_i, 1-based.
    static Weight unit(int n, int i)
    {
        Weight w = zero(n);
        w.at(i) = 1;
        return w;
    }

    /// rho = (n, n-1, ..., 1).
    static Weight rho(int n)
    {
        std::vector<int> e(static_cast<std::size_t>(check_n(n)));
        for (int i = 0; i < n; ++i)
            e[static_cast<std::size_t>(i)] = n - i;
        return Weight(std::move(e));
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const noexcept { return entries_; }

    /// 1-based access.
    int operator()(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

    Weight plus_unit(int i) const
    {
        Weight w = *this;
        ++w.at(i);
        return w;
    }
    Weight minus_unit(int i) const
    {
        Weight w = *this;
        --w.at(i);
        return w;
    }

    Weight operator+(const Weight& o) const
    {
        same_length(o);
        Weight w = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            w.entries_[k] += o.entries_[k];
        return w;
    }
    Weight operator-(const Weight& o) const
    {
        same_length(o);
        Weight w = *this;
        for (std::size_t k = 0; k < entries_.size(); ++k)
            w.entries_[k] -= o.entries_[k];
        return w;
    }

    /// Adds k to every entry (twist by the k-th power of the determinant).
    Weight shifted(int k) const
    {
        Weight w = *this;
        for (int& x : w.entries_)
            x += k;
        return w;
    }

    long long total() const noexcept
    {
        return std::accumulate(entries_.begin(), entries_.end(), 0LL);
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    static int check_n(int n)
    {
        if (n < 1)
            throw invalid_input("weight length must be positive");
        return n;
    }
    int& at(int i)
    {
        if (i < 1 || i > size())
            throw invalid_input("row index " + std::to_string(i) + " out of range");
        return entries_[static_cast<std::size_t>(i - 1)];
    }
    void same_length(const Weight& o) const
    {
        if (o.size() != size())
            throw invalid_input("weight length mismatch");
    }

    std::vector<int> entries_;
};

struct BoxCoord {
    int row;
    int col;

    BoxCoord(int r, int c) : row(r), col(c)
    {
        if (r < 1 || c < 1)
            throw invalid_input("box coordinates are 1-based");
    }

    friend bool operator==(const BoxCoord&, const BoxCoord&) = default;
    friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

constexpr int box_content(const BoxCoord& b) noexcept { return b.col - b.row; }

/// A Young diagram. Trailing zeros are stripped so equal diagrams compare equal.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 0)
                throw invalid_input("partition parts must be nonnegative");
            if (k > 0 && parts_[k] > parts_[k - 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    /// Interprets a dominant weight with nonnegative entries as a diagram.
    static Partition from_weight(const Weight& w) { return Partition(w.entries()); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row i (1-based); zero past the last row.
    int row(int i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Pads with zeros to an n-row weight; n must be at least length().
    Weight to_weight(int n) const
    {
        if (n < length() || n < 1)
            throw invalid_input("partition does not fit in " + std::to_string(n) + " rows");
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        std::copy(parts_.begin(), parts_.end(), e.begin());
        return Weight(std::move(e));
    }

    Partition with_box(int r) const
    {
        std::vector<int> e = parts_;
        if (r == length() + 1)
            e.push_back(0);
        e.at(static_cast<std::size_t>(r - 1)) += 1;
        return Partition(std::move(e));
    }
    Partition without_box(int r) const
    {
        std::vector<int> e = parts_;
        e.at(static_cast<std::size_t>(r - 1)) -= 1;
        return Partition(std::move(e));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline bool dominance_leq(const Weight& a, const Weight& b)
{
    if (a.size() != b.size())
        throw invalid_input("dominance_leq: weight length mismatch");
    long long sa = 0, sb = 0;
    for (int k = 1; k <= a.size(); ++k) {
        sa += a(k);
        sb += b(k);
        if (k < a.size() && sa > sb)
            return false;
    }
    return sa == sb;
}

inline bool is_dominant(const Weight& a) noexcept
{
    return std::is_sorted(a.entries().rbegin(), a.entries().rend());
}

inline void require_dominant(const Weight& a, std::string_view where)
{
    if (!is_dominant(a))
        throw invalid_input(std::string(where) + ": weight is not dominant");
}

/// Rows i with lambda + epsilon_i dominant, increasing.
inline std::vector<int> addable_rows(const Weight& lambda)
{
    require_dominant(lambda, "addable_rows");
    std::vector<int> rows{1};
    for (int i = 2; i <= lambda.size(); ++i)
        if (lambda(i - 1) > lambda(i))
            rows.push_back(i);
    return rows;
}

/// Rows i with lambda - epsilon_i dominant, increasing. Row n always qualifies.
inline std::vector<int> removable_rows(const Weight& lambda)
{
    require_dominant(lambda, "removable_rows");
    std::vector<int> rows;
    for (int i = 1; i < lambda.size(); ++i)
        if (lambda(i) > lambda(i + 1))
            rows.push_back(i);
    rows.push_back(lambda.size());
    return rows;
}

/// Addable boxes of any content, top row first, using at most max_rows rows.
inline std::vector<BoxCoord> addable_boxes(const Partition& lambda, int max_rows)
{
    if (max_rows < 1)
        throw invalid_input("addable_boxes: max_rows must be positive");
    std::vector<BoxCoord> out;
    const int last = std::min(lambda.length() + 1, max_rows);
    for (int i = 1; i <= last; ++i)
        if (i == 1 || lambda.row(i - 1) > lambda.row(i))
            out.emplace_back(i, lambda.row(i) + 1);
    return out;
}

inline std::vector<BoxCoord> addable_boxes(const Partition& lambda, const Residue& alpha, int max_rows)
{
    std::vector<BoxCoord> out;
    for (const BoxCoord& b : addable_boxes(lambda, max_rows))
        if (alpha.matches(box_content(b)))
            out.push_back(b);
    return out;
}

inline std::vector<BoxCoord> removable_boxes(const Partition& lambda)
{
    std::vector<BoxCoord> out;
    for (int i = 1; i <= lambda.length(); ++i)
        if (lambda.row(i) > lambda.row(i + 1))
            out.emplace_back(i, lambda.row(i));
    return out;
}

inline std::vector<BoxCoord> removable_boxes(const Partition& lambda, const Residue& alpha)
{
    std::vector<BoxCoord> out;
    for (const BoxCoord& b : removable_boxes(lambda))
        if (alpha.matches(box_content(b)))
            out.push_back(b);
    return out;
}

/// lambda -> (lambda_i + 1 - i)_i, the wedge label of a dominant weight.
inline std::vector<int> weight_to_beta(const Weight& lambda)
{
    require_dominant(lambda, "weight_to_beta");
    std::vector<int> beta(static_cast<std::size_t>(lambda.size()));
    for (int i = 1; i <= lambda.size(); ++i)
        beta[static_cast<std::size_t>(i - 1)] = lambda(i) + 1 - i;
    return beta;
}

inline Weight beta_to_weight(const std::vector<int>& beta)
{
    for (std::size_t k = 1; k < beta.size(); ++k)
        if (beta[k] >= beta[k - 1])
            throw invalid_input("beta_to_weight: entries must be strictly decreasing");
    std::vector<int> e(beta.size());
    for (std::size_t k = 0; k < beta.size(); ++k)
        e[k] = beta[k] - 1 + static_cast<int>(k + 1);
    return Weight(std::move(e));
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

/// Partitions of d with at most max_parts rows, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int d, int max_parts = -1)
{
    std::vector<Partition> out;
    if (d < 0)
        return out;
    if (max_parts < 0)
        max_parts = d;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts)
            return;
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

inline std::vector<Partition> partitions_up_to(int max_size, int max_parts = -1)
{
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d)
        for (Partition& p : partitions_of(d, max_parts))
            out.push_back(std::move(p));
    return out;
}

/// Dominant weights of length n with entries in [lo, hi].
inline std::vector<Weight> dominant_weights(int n, int lo, int hi)
{
    std::vector<Weight> out;
    if (n < 1 || lo > hi)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int cap) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (int v = cap; v >= lo; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, hi);
    return out;
}

// ---------------------------------------------------------------------------
// Text syntax: comma-separated integers, no spaces, e.g. "18,16,-4".

inline std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        if (tok.empty())
            throw invalid_input("empty entry in integer list");
        int v = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec == std::errc::result_out_of_range)
            throw invalid_input("integer out of range: '" + std::string(tok) + "'");
        if (ec != std::errc{} || end != tok.data() + tok.size())
            throw invalid_input("not an integer: '" + std::string(tok) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline std::string format_int_list(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k];
    return os.str();
}

inline std::string to_string(const Weight& w) { return format_int_list(w.entries()); }

/// The empty diagram prints as "()"; others as comma lists.
inline std::string to_string(const Partition& p)
{
    return p.empty() ? std::string("()") : format_int_list(p.parts());
}

inline Weight parse_weight(std::string_view text) { return Weight(parse_int_list(text)); }

inline Partition parse_partition(std::string_view text)
{
    if (text == "()" || text.empty())
        return Partition{};
    return Partition(parse_int_list(text));
}

} // namespace slpcat
