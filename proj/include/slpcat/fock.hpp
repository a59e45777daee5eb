/**
 * @file fock.hpp
 * @brief The level-0 wedge space and the level-1 partition Fock space of
 *        affine sl_p, with a checker for the Kac-Moody defining relations.
 *
 * Both models have structure constants in {0, 1}, so vectors carry integer
 * coefficients. Wedge labels are kept strictly decreasing: e and f move one
 * entry by one step and a collision with a neighbour annihilates the term,
 * so no reordering (and no sign) ever occurs.
 */

#pragma once

#include "characters.hpp"
#include "combinatorics.hpp"
#include "detail/parallel.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>

namespace slpcat {

enum class Generator { e, f };

inline std::string_view to_string(Generator g) noexcept { return g == Generator::e ? "e" : "f"; }

/// Basis wedge v_{a_1} ^ ... ^ v_{a_n} with a_1 > ... > a_n.
class WedgeLabel {
public:
    explicit WedgeLabel(std::vector<int> entries) : entries_(std::move(entries))
    {
        if (entries_.empty())
            throw invalid_input("wedge label must be nonempty");
        for (std::size_t k = 1; k < entries_.size(); ++k)
            if (entries_[k] >= entries_[k - 1])
                throw invalid_input("wedge label entries must be strictly decreasing");
    }

    static WedgeLabel from_weight(const Weight& lambda) { return WedgeLabel(weight_to_beta(lambda)); }
    Weight to_weight() const { return beta_to_weight(entries_); }

    const std::vector<int>& entries() const noexcept { return entries_; }
    int size() const noexcept { return static_cast<int>(entries_.size()); }

    friend bool operator==(const WedgeLabel&, const WedgeLabel&) = default;
    friend auto operator<=>(const WedgeLabel&, const WedgeLabel&) = default;

private:
    std::vector<int> entries_;
};

inline std::string to_string(const WedgeLabel& w) { return format_int_list(w.entries()); }

template <typename Label>
class FockVector {
public:
    using label_type = Label;

    FockVector() = default;
    explicit FockVector(const Label& basis) { terms_.emplace(basis, 1); }

    const std::map<Label, long long>& terms() const& noexcept { return terms_; }
    std::map<Label, long long> terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    long long coefficient(const Label& l) const
    {
        auto it = terms_.find(l);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Label& l, long long c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(l, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o)
    {
        for (const auto& [l, c] : o.terms_)
            add(l, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o)
    {
        for (const auto& [l, c] : o.terms_)
            add(l, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(long long k, FockVector v)
    {
        if (k == 0)
            return {};
        for (auto& [l, c] : v.terms_)
            c *= k;
        return v;
    }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    std::map<Label, long long> terms_;
};

// ---------------------------------------------------------------------------
// The natural representation on C^Z.

/// f_alpha v_i = v_{i+1} when i = alpha mod p, else 0.
inline std::optional<long long> chevalley_f_line(const Residue& alpha, long long i)
{
    if (alpha.matches(i))
        return i + 1;
    return std::nullopt;
}

/// e_alpha v_j = v_{j-1} when j-1 = alpha mod p, else 0.
inline std::optional<long long> chevalley_e_line(const Residue& alpha, long long j)
{
    if (alpha.matches(j - 1))
        return j - 1;
    return std::nullopt;
}

inline FockVector<WedgeLabel> wedge_apply(Generator g, const Residue& alpha, const WedgeLabel& w)
{
    FockVector<WedgeLabel> out;
    const auto& a = w.entries();
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<int> moved = a;
        if (g == Generator::f) {
            if (!chevalley_f_line(alpha, a[j]))
                continue;
            if (j > 0 && a[j] + 1 == a[j - 1])
                continue;
            ++moved[j];
        } else {
            if (!chevalley_e_line(alpha, a[j]))
                continue;
            if (j + 1 < n && a[j] - 1 == a[j + 1])
                continue;
            --moved[j];
        }
        out.add(WedgeLabel(std::move(moved)), 1);
    }
    return out;
}

inline FockVector<Partition> fock_apply(Generator g, const Residue& alpha, const Partition& lambda)
{
    FockVector<Partition> out;
    if (g == Generator::f) {
        for (const BoxCoord& b : addable_boxes(lambda, alpha, lambda.length() + 1))
            out.add(lambda.with_box(b.row), 1);
    } else {
        for (const BoxCoord& b : removable_boxes(lambda, alpha))
            out.add(lambda.without_box(b.row), 1);
    }
    return out;
}

struct WedgeModel {
    using label_type = WedgeLabel;
    static constexpr std::string_view name = "level0-wedge";
    FockVector<WedgeLabel> operator()(Generator g, const Residue& a, const WedgeLabel& w) const
    {
        return wedge_apply(g, a, w);
    }
};

struct PartitionModel {
    using label_type = Partition;
    static constexpr std::string_view name = "level1-partition";
    FockVector<Partition> operator()(Generator g, const Residue& a, const Partition& l) const
    {
        return fock_apply(g, a, l);
    }
};

/// Extends a basis-level operator op(g, alpha, label) linearly.
template <typename Label, typename Op>
FockVector<Label> apply(const Op& op, Generator g, const Residue& alpha, const FockVector<Label>& v)
{
    FockVector<Label> out;
    for (const auto& [l, c] : v.terms())
        out += c * op(g, alpha, l);
    return out;
}

/// h_alpha = e_alpha f_alpha - f_alpha e_alpha.
template <typename Label, typename Op>
FockVector<Label> h_apply(const Op& op, const Residue& alpha, const FockVector<Label>& v)
{
    return apply(op, Generator::e, alpha, apply(op, Generator::f, alpha, v))
         - apply(op, Generator::f, alpha, apply(op, Generator::e, alpha, v));
}

inline FockVector<WedgeLabel> h_apply(const Residue& alpha, const FockVector<WedgeLabel>& v)
{
    return h_apply(WedgeModel{}, alpha, v);
}

inline FockVector<Partition> h_apply(const Residue& alpha, const FockVector<Partition>& v)
{
    return h_apply(PartitionModel{}, alpha, v);
}

// ---------------------------------------------------------------------------
// Weights of basis vectors.

/// A multiset of residues mod p stored as counts per residue.
struct ResidueMultiset {
    int p;
    std::vector<int> counts;

    explicit ResidueMultiset(int modulus) : p(modulus), counts(static_cast<std::size_t>(modulus), 0)
    {
        require_prime(modulus);
    }

    void insert(long long x) { ++counts[static_cast<std::size_t>(mod_floor(x, p))]; }
    int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

    std::vector<int> sorted() const
    {
        std::vector<int> out;
        for (int r = 0; r < p; ++r)
            out.insert(out.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(r)]), r);
        return out;
    }

    friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;
};

inline ResidueMultiset weight_of(const WedgeLabel& w, int p)
{
    ResidueMultiset m(p);
    for (int a : w.entries())
        m.insert(a);
    return m;
}

/// Multiset of box contents mod p.
inline ResidueMultiset weight_of(const Partition& lambda, int p)
{
    ResidueMultiset m(p);
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.row(r); ++c)
            m.insert(c - r);
    return m;
}

// ---------------------------------------------------------------------------
// Defining relations of affine sl_p.

struct RelationViolation {
    std::string relation;
    std::string label;
};

using RelationReport = std::vector<RelationViolation>;

/**
 * Evaluates every listed relation of affine sl_p on each basis vector, with
 * h_alpha := [e_alpha, f_alpha]. Operators are applied exactly, so labels
 * leaving the basis window are never truncated. Requires p >= 3: for p = 2
 * the neighbours alpha +- 1 coincide and the relation list degenerates.
 */
template <typename Label, typename Op>
RelationReport check_kac_moody_relations(std::span<const Label> basis, int p, const Op& op)
{
    require_prime(p);
    if (p < 3)
        throw unsupported_modulus("Kac-Moody relation check needs p >= 3");
    const std::vector<Residue> res = residues(p);

    auto check_one = [&](std::size_t idx) {
        RelationReport bad;
        const FockVector<Label> x(basis[idx]);
        auto E = [&](const Residue& a, const FockVector<Label>& v) { return apply(op, Generator::e, a, v); };
        auto F = [&](const Residue& a, const FockVector<Label>& v) { return apply(op, Generator::f, a, v); };
        auto H = [&](const Residue& a, const FockVector<Label>& v) { return E(a, F(a, v)) - F(a, E(a, v)); };
        auto fail = [&](std::string name) { bad.push_back({std::move(name), to_string(basis[idx])}); };
        auto sub = [](const Residue& a) { return std::to_string(a.value()); };

        for (const Residue& a : res) {
            const auto ex = E(a, x), fx = F(a, x), hx = H(a, x);
            if (H(a, ex) - E(a, hx) != 2 * ex)
                fail("[h_" + sub(a) + ",e_" + sub(a) + "]=2e_" + sub(a));
            if (H(a, fx) - F(a, hx) != -2 * fx)
                fail("[h_" + sub(a) + ",f_" + sub(a) + "]=-2f_" + sub(a));

            for (const Residue& b : res) {
                if (a == b)
                    continue;
                const bool adjacent = (b == a + 1) || (b == a - 1);
                const auto ebx = E(b, x), fbx = F(b, x);
                const std::string tag = sub(a) + "," + sub(b);

                if (E(a, fbx) - F(b, ex) != FockVector<Label>{})
                    fail("[e_" + sub(a) + ",f_" + sub(b) + "]=0");

                const auto h_e = H(a, ebx) - E(b, hx);
                const auto h_f = H(a, fbx) - F(b, hx);
                if (adjacent) {
                    if (h_e != -1 * ebx)
                        fail("[h_" + sub(a) + ",e_" + sub(b) + "]=-e_" + sub(b));
                    if (h_f != fbx)
                        fail("[h_" + sub(a) + ",f_" + sub(b) + "]=f_" + sub(b));
                    // ad(x)^2 y = x x y - 2 x y x + y x x
                    const auto serre_e = E(a, E(a, ebx)) - 2 * E(a, E(b, ex)) + E(b, E(a, ex));
                    if (!serre_e.is_zero())
                        fail("[e_" + sub(a) + ",[e_" + sub(a) + ",e_" + sub(b) + "]]=0");
                    const auto serre_f = F(a, F(a, fbx)) - 2 * F(a, F(b, fx)) + F(b, F(a, fx));
                    if (!serre_f.is_zero())
                        fail("[f_" + sub(a) + ",[f_" + sub(a) + ",f_" + sub(b) + "]]=0");
                } else {
                    if (!h_e.is_zero())
                        fail("[h_" + sub(a) + ",e_" + sub(b) + "]=0");
                    if (!h_f.is_zero())
                        fail("[h_" + sub(a) + ",f_" + sub(b) + "]=0");
                    if (E(a, ebx) != E(b, ex))
                        fail("[e_" + sub(a) + ",e_" + sub(b) + "]=0");
                    if (F(a, fbx) != F(b, fx))
                        fail("[f_" + sub(a) + ",f_" + sub(b) + "]=0");
                }
            }
        }
        return bad;
    };
    return detail::parallel_concat(basis.size(), check_one);
}

/// Strictly decreasing n-tuples with entries in [-window, window].
inline std::vector<WedgeLabel> wedge_labels_in_window(int n, int window)
{
    std::vector<WedgeLabel> out;
    if (n < 1 || window < 0)
        return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int cap) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        const int need = n - static_cast<int>(cur.size()) - 1;
        for (int v = cap; v - need >= -window; --v) {
            cur.push_back(v);
            self(self, v - 1);
            cur.pop_back();
        }
    };
    rec(rec, window);
    return out;
}

inline RelationReport check_wedge_relations(int p, int n, int window)
{
    const auto basis = wedge_labels_in_window(n, window);
    return check_kac_moody_relations<WedgeLabel>(basis, p, WedgeModel{});
}

inline RelationReport check_partition_relations(int p, int max_size)
{
    const auto basis = partitions_up_to(max_size);
    return check_kac_moody_relations<Partition>(basis, p, PartitionModel{});
}

// ---------------------------------------------------------------------------
// Grothendieck-group dictionary [Delta(lambda)] <-> wedge of (lambda_i + 1 - i).

/// [F_alpha Delta(lambda)] written in the wedge basis.
inline FockVector<WedgeLabel> groth_f(const Residue& alpha, const Weight& lambda)
{
    FockVector<WedgeLabel> out;
    for (const Weight& mu : tensor_filtration_F(lambda, alpha))
        out.add(WedgeLabel::from_weight(mu), 1);
    return out;
}

inline FockVector<WedgeLabel> groth_e(const Residue& alpha, const Weight& lambda)
{
    FockVector<WedgeLabel> out;
    for (const Weight& mu : tensor_filtration_E(lambda, alpha))
        out.add(WedgeLabel::from_weight(mu), 1);
    return out;
}

/// Both sides of the dictionary agree for e and f at (alpha, lambda).
inline bool verify_intertwiner(const Residue& alpha, const Weight& lambda)
{
    const WedgeLabel w = WedgeLabel::from_weight(lambda);
    return groth_f(alpha, lambda) == wedge_apply(Generator::f, alpha, w)
        && groth_e(alpha, lambda) == wedge_apply(Generator::e, alpha, w);
}

} // namespace slpcat
