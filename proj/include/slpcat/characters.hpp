/**
 * @file characters.hpp
 * @brief Formal characters of Weyl modules and their filtration bookkeeping.
 *
 * ch Delta(lambda) is built from semistandard tableaux (the answer does not
 * depend on the characteristic). The Weyl character formula and the
 * single-box Pieri rules are exposed as checkable identities between
 * formal characters rather than used as constructors.
 */

#pragma once

#include "combinatorics.hpp"

#include <map>
#include <optional>
#include <utility>

namespace slpcat {

/// Finite Z-linear combination of torus weights e^chi of a fixed length n.
class FormalCharacter {
public:
    explicit FormalCharacter(int n) : n_(n)
    {
        if (n < 1)
            throw invalid_input("character rank must be positive");
    }

    int rank() const noexcept { return n_; }
    const std::map<Weight, long long>& terms() const& noexcept { return terms_; }
    std::map<Weight, long long> terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }

    long long multiplicity(const Weight& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Weight& w, long long coeff)
    {
        if (w.size() != n_)
            throw invalid_input("character term has wrong length");
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(w, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    FormalCharacter& operator+=(const FormalCharacter& o)
    {
        same_rank(o);
        for (const auto& [w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }

    /// Product in the group ring: e^a * e^b = e^(a+b).
    friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b)
    {
        a.same_rank(b);
        FormalCharacter out(a.n_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                out.add(wa + wb, ca * cb);
        return out;
    }

    friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

private:
    void same_rank(const FormalCharacter& o) const
    {
        if (o.n_ != n_)
            throw invalid_input("characters of different rank");
    }

    int n_;
    std::map<Weight, long long> terms_;
};

/**
 * Calls visit(content) for every semistandard tableau of the given shape with
 * entries in {1..n}; content[k] is the number of entries equal to k+1.
 * Cells are filled row by row. An entry in row r of a column of height h is
 * kept within [r, n - h + r] so every partial filling completes.
 */
template <typename Visitor>
void for_each_ssyt(const Partition& shape, int n, Visitor&& visit)
{
    if (shape.length() > n)
        return;
    const int rows = shape.length();
    std::vector<int> col_height(static_cast<std::size_t>(shape.row(1)), 0);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= shape.row(r); ++c)
            col_height[static_cast<std::size_t>(c - 1)] = r;

    std::vector<std::vector<int>> tab(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        tab[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.row(r + 1)), 0);
    std::vector<int> content(static_cast<std::size_t>(n), 0);

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            visit(std::as_const(content));
            return;
        }
        if (c == shape.row(r + 1)) {
            self(self, r + 1, 0);
            return;
        }
        auto& row = tab[static_cast<std::size_t>(r)];
        int lo = r + 1;
        if (c > 0)
            lo = std::max(lo, row[static_cast<std::size_t>(c - 1)]);
        if (r > 0)
            lo = std::max(lo, tab[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        const int hi = n - col_height[static_cast<std::size_t>(c)] + r + 1;
        for (int v = lo; v <= hi; ++v) {
            row[static_cast<std::size_t>(c)] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
}

inline long long count_ssyt(const Partition& shape, int n)
{
    long long count = 0;
    for_each_ssyt(shape, n, [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Number of standard Young tableaux (hook length formula).
inline long long count_syt(const Partition& shape)
{
    // d! fits in 64 bits up to d = 20.
    if (shape.size() > 20)
        throw invalid_input("count_syt: shape too large");
    unsigned long long factorial = 1, hooks = 1;
    for (int k = 2; k <= shape.size(); ++k)
        factorial *= static_cast<unsigned long long>(k);
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.row(r); ++c) {
            int leg = 0;
            while (shape.row(r + leg + 1) >= c)
                ++leg;
            hooks *= static_cast<unsigned long long>(shape.row(r) - c + leg + 1);
        }
    return static_cast<long long>(factorial / hooks);
}

/// ch Delta(lambda) for a dominant weight of length n.
inline FormalCharacter weyl_character(const Weight& lambda)
{
    require_dominant(lambda, "weyl_character");
    const int n = lambda.size();
    const int shift = -lambda(n);
    const Partition shape = Partition::from_weight(lambda.shifted(shift));
    FormalCharacter ch(n);
    for_each_ssyt(shape, n, [&](const std::vector<int>& content) {
        std::vector<int> w(content);
        for (int& x : w)
            x -= shift;
        ch.add(Weight(std::move(w)), 1);
    });
    return ch;
}

/// Sum over S_n of sign(w) e^{w mu}, w permuting entries.
inline FormalCharacter alternant(const Weight& mu)
{
    const int n = mu.size();
    FormalCharacter out(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inversions;
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            e[static_cast<std::size_t>(k)] = mu.entries()[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
        out.add(Weight(std::move(e)), inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// alternant(lambda + rho) == ch Delta(lambda) * alternant(rho), rho = (n, ..., 1).
inline bool verify_weyl_formula(const Weight& lambda)
{
    const Weight rho = Weight::rho(lambda.size());
    return alternant(lambda + rho) == weyl_character(lambda) * alternant(rho);
}

inline long long dimension(const FormalCharacter& c)
{
    long long d = 0;
    for (const auto& [w, m] : c.terms()) {
        if (m < 0)
            throw invalid_input("dimension of a signed character");
        d += m;
    }
    return d;
}

/// Weyl subquotients of V (x) Delta(lambda), bottom of the filtration first.
inline std::vector<Weight> tensor_filtration_F(const Weight& lambda, const std::optional<Residue>& alpha = std::nullopt)
{
    std::vector<Weight> out;
    for (int i : addable_rows(lambda))
        if (!alpha || alpha->matches(static_cast<long long>(lambda(i)) + 1 - i))
            out.push_back(lambda.plus_unit(i));
    return out;
}

/// Weyl subquotients of V* (x) Delta(lambda), in decreasing row order. The
/// residue filter is on lambda_i - i, the content of the removed box.
inline std::vector<Weight> tensor_filtration_E(const Weight& lambda, const std::optional<Residue>& alpha = std::nullopt)
{
    std::vector<Weight> out;
    const std::vector<int> rows = removable_rows(lambda);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        const int i = *it;
        if (!alpha || alpha->matches(static_cast<long long>(lambda(i)) - i))
            out.push_back(lambda.minus_unit(i));
    }
    return out;
}

/// ch V * ch Delta(lambda) == sum of ch Delta(lambda + epsilon_i), i in I+.
inline bool verify_pieri(const Weight& lambda)
{
    FormalCharacter rhs(lambda.size());
    for (const Weight& mu : tensor_filtration_F(lambda))
        rhs += weyl_character(mu);
    return weyl_character(Weight::unit(lambda.size(), 1)) * weyl_character(lambda) == rhs;
}

/// ch V* * ch Delta(lambda) == sum of ch Delta(lambda - epsilon_i), i in I-.
inline bool verify_dual_pieri(const Weight& lambda)
{
    const int n = lambda.size();
    FormalCharacter rhs(n);
    for (const Weight& mu : tensor_filtration_E(lambda))
        rhs += weyl_character(mu);
    const Weight dual = Weight::zero(n) - Weight::unit(n, n);
    return weyl_character(dual) * weyl_character(lambda) == rhs;
}

/// Scalar by which the Casimir sum E_ij E_ji acts on Delta(mu).
inline long long casimir_scalar(const Weight& mu)
{
    const long long n = mu.size();
    long long s = 0;
    for (int i = 1; i <= mu.size(); ++i)
        s += static_cast<long long>(mu(i)) * (mu(i) + n + 1 - 2LL * i);
    return s;
}

} // namespace slpcat
