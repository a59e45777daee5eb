/**
 * @file hecke.hpp
 * @brief Exact F_p matrices for gl_n-operators on tensor powers of V = F^n.
 *
 * Slots of V^{(x)D} are numbered 1..D from the left; the basis is all index
 * tuples (b_1, ..., b_D) in lexicographic order, slot 1 most significant.
 * For F^N(M) with M = V^{(x)d}, the N functor slots are 1..N (slot 1 the
 * outermost copy of V) and M occupies slots N+1..N+d.
 */

#pragma once

#include "characters.hpp"
#include "fp_matrix.hpp"

#include <map>
#include <string>

namespace slpcat {

class TensorSpace {
public:
    TensorSpace(int n, int factors) : n_(n), factors_(factors)
    {
        if (n < 1 || factors < 0)
            throw invalid_input("TensorSpace: need n >= 1 and a nonnegative factor count");
        dim_ = 1;
        for (int k = 0; k < factors; ++k)
            dim_ *= static_cast<std::size_t>(n);
    }

    int n() const noexcept { return n_; }
    int factors() const noexcept { return factors_; }
    std::size_t dim() const noexcept { return dim_; }

    /// Index tuple (1-based entries) of basis vector idx.
    std::vector<int> decode(std::size_t idx) const
    {
        std::vector<int> b(static_cast<std::size_t>(factors_));
        for (int a = factors_ - 1; a >= 0; --a) {
            b[static_cast<std::size_t>(a)] = static_cast<int>(idx % static_cast<std::size_t>(n_)) + 1;
            idx /= static_cast<std::size_t>(n_);
        }
        return b;
    }

    std::size_t encode(const std::vector<int>& b) const
    {
        std::size_t idx = 0;
        for (int x : b)
            idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x - 1);
        return idx;
    }

private:
    int n_;
    int factors_;
    std::size_t dim_;
};

namespace detail {

inline void check_slots(const std::vector<int>& slots, const TensorSpace& space)
{
    std::vector<int> seen;
    for (int a : slots) {
        if (a < 1 || a > space.factors())
            throw invalid_input("tensor slot " + std::to_string(a) + " out of range");
        if (std::find(seen.begin(), seen.end(), a) != seen.end())
            throw invalid_input("tensor slot " + std::to_string(a) + " repeated");
        seen.push_back(a);
    }
}

inline void require_odd_prime(int p)
{
    require_prime(p);
    if (p < 3)
        throw unsupported_modulus("characteristic 2 is excluded here");
}

} // namespace detail

/// Sum over slots a in `slots` of E_ij acting at slot a.
inline FpMatrix matrix_unit_action(int i, int j, const std::vector<int>& slots, const TensorSpace& space, int p)
{
    if (i < 1 || i > space.n() || j < 1 || j > space.n())
        throw invalid_input("matrix unit index out of range");
    detail::check_slots(slots, space);
    FpMatrix m = FpMatrix::zero(p, space.dim());
    for (std::size_t col = 0; col < space.dim(); ++col) {
        std::vector<int> b = space.decode(col);
        for (int a : slots) {
            int& entry = b[static_cast<std::size_t>(a - 1)];
            if (entry != j)
                continue;
            entry = i;
            m.add_to(space.encode(b), col, 1);
            entry = j;
        }
    }
    return m;
}

/// C = sum_{i,j} E_ij E_ji acting on the given slots.
inline FpMatrix casimir(const std::vector<int>& slots, const TensorSpace& space, int p)
{
    detail::require_odd_prime(p);
    FpMatrix c = FpMatrix::zero(p, space.dim());
    for (int i = 1; i <= space.n(); ++i)
        for (int j = 1; j <= space.n(); ++j)
            c += matrix_unit_action(i, j, slots, space, p) * matrix_unit_action(j, i, slots, space, p);
    return c;
}

/// The same element rewritten as 2 sum_{i>j} E_ij E_ji + sum_i E_ii (E_ii + n + 1 - 2i).
inline FpMatrix casimir_expanded(const std::vector<int>& slots, const TensorSpace& space, int p)
{
    detail::require_odd_prime(p);
    const int n = space.n();
    const FpMatrix id = FpMatrix::identity(p, space.dim());
    FpMatrix c = FpMatrix::zero(p, space.dim());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            c += 2 * (matrix_unit_action(i, j, slots, space, p) * matrix_unit_action(j, i, slots, space, p));
    for (int i = 1; i <= n; ++i) {
        const FpMatrix eii = matrix_unit_action(i, i, slots, space, p);
        c += eii * (eii + static_cast<long long>(n + 1 - 2 * i) * id);
    }
    return c;
}

/// X = sum_{i,j} (E_ij at slot a)(E_ji on the slots in `rest`).
inline FpMatrix tensor_casimir(int a, const std::vector<int>& rest, const TensorSpace& space, int p)
{
    detail::require_odd_prime(p);
    if (std::find(rest.begin(), rest.end(), a) != rest.end())
        throw invalid_input("tensor_casimir: slot " + std::to_string(a) + " appears on both sides");
    detail::check_slots({a}, space);
    detail::check_slots(rest, space);
    FpMatrix x = FpMatrix::zero(p, space.dim());
    if (rest.empty())
        return x;
    for (int i = 1; i <= space.n(); ++i)
        for (int j = 1; j <= space.n(); ++j)
            x += matrix_unit_action(i, j, {a}, space, p) * matrix_unit_action(j, i, rest, space, p);
    return x;
}

/// Permutation matrix exchanging tensor slots a and b.
inline FpMatrix slot_swap(int a, int b, const TensorSpace& space, int p)
{
    detail::check_slots({a}, space);
    detail::check_slots({b}, space);
    FpMatrix m = FpMatrix::zero(p, space.dim());
    for (std::size_t col = 0; col < space.dim(); ++col) {
        std::vector<int> t = space.decode(col);
        std::swap(t[static_cast<std::size_t>(a - 1)], t[static_cast<std::size_t>(b - 1)]);
        m.set(space.encode(t), col, 1);
    }
    return m;
}

/// X_i on F^N(V^{(x)d}): X at functor slot N-i+1, paired with every slot to its right.
inline FpMatrix build_Xi(int i, int N, int d, int n, int p)
{
    if (N < 1 || d < 0 || i < 1 || i > N)
        throw invalid_input("build_Xi: need 1 <= i <= N and d >= 0");
    const TensorSpace space(n, N + d);
    const int a = N - i + 1;
    std::vector<int> rest;
    for (int s = a + 1; s <= N + d; ++s)
        rest.push_back(s);
    return tensor_casimir(a, rest, space, p);
}

/// T_i on F^N(V^{(x)d}): swaps functor slots N-i and N-i+1.
inline FpMatrix build_Ti(int i, int N, int d, int n, int p)
{
    if (N < 2 || d < 0 || i < 1 || i > N - 1)
        throw invalid_input("build_Ti: need 1 <= i <= N-1 and d >= 0");
    detail::require_odd_prime(p);
    return slot_swap(N - i, N - i + 1, TensorSpace(n, N + d), p);
}

/// Sum of the transpositions (k, m) for m = k+1..D on V^{(x)D}.
inline FpMatrix jucys_murphy(int k, const TensorSpace& space, int p)
{
    FpMatrix m = FpMatrix::zero(p, space.dim());
    for (int other = k + 1; other <= space.factors(); ++other)
        m += slot_swap(k, other, space, p);
    return m;
}

struct HeckeOperators {
    int n, N, d, p;
    std::vector<FpMatrix> X;  ///< X[k] is X_{k+1}
    std::vector<FpMatrix> T;  ///< T[k] is T_{k+1}
};

inline HeckeOperators build_hecke_operators(int n, int N, int d, int p)
{
    HeckeOperators ops{n, N, d, p, {}, {}};
    for (int i = 1; i <= N; ++i)
        ops.X.push_back(build_Xi(i, N, d, n, p));
    for (int i = 1; i + 1 <= N; ++i)
        ops.T.push_back(build_Ti(i, N, d, n, p));
    return ops;
}

using HeckeReport = std::vector<std::string>;

/// Checks the degenerate affine Hecke relations on the given matrices.
inline HeckeReport verify_hecke_relations(const HeckeOperators& ops)
{
    HeckeReport bad;
    const int N = static_cast<int>(ops.X.size());
    if (N == 0)
        return bad;
    const FpMatrix id = FpMatrix::identity(ops.p, ops.X.front().rows());
    auto X = [&](int i) -> const FpMatrix& { return ops.X[static_cast<std::size_t>(i - 1)]; };
    auto T = [&](int i) -> const FpMatrix& { return ops.T[static_cast<std::size_t>(i - 1)]; };
    auto s = [](int i) { return std::to_string(i); };

    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            if (X(i) * X(j) != X(j) * X(i))
                bad.push_back("X_" + s(i) + " X_" + s(j) + " = X_" + s(j) + " X_" + s(i));
    for (int i = 1; i < N; ++i) {
        if (T(i) * T(i) != id)
            bad.push_back("T_" + s(i) + "^2 = 1");
        for (int j = i + 2; j < N; ++j)
            if (T(i) * T(j) != T(j) * T(i))
                bad.push_back("T_" + s(i) + " T_" + s(j) + " = T_" + s(j) + " T_" + s(i));
        if (i + 1 < N && T(i) * T(i + 1) * T(i) != T(i + 1) * T(i) * T(i + 1))
            bad.push_back("T_" + s(i) + " T_" + s(i + 1) + " T_" + s(i) + " = T_" + s(i + 1) + " T_" + s(i) + " T_"
                          + s(i + 1));
        if (T(i) * X(i + 1) - X(i) * T(i) != id)
            bad.push_back("T_" + s(i) + " X_" + s(i + 1) + " - X_" + s(i) + " T_" + s(i) + " = 1");
        for (int j = 1; j <= N; ++j)
            if (j != i && j != i + 1 && T(i) * X(j) != X(j) * T(i))
                bad.push_back("T_" + s(i) + " X_" + s(j) + " = X_" + s(j) + " T_" + s(i));
    }
    return bad;
}

inline HeckeReport verify_hecke_relations(int n, int N, int d, int p)
{
    return verify_hecke_relations(build_hecke_operators(n, N, d, p));
}

struct EigenDimensions {
    int p;
    std::vector<std::size_t> dims;  ///< dims[alpha] = dim of the generalized alpha-eigenspace
    std::size_t total;              ///< size of the matrix
    bool complete() const
    {
        return std::accumulate(dims.begin(), dims.end(), std::size_t{0}) == total;
    }
};

/// dim ker (m - alpha)^k for each alpha in F_p, with k a power of two >= dim.
inline EigenDimensions generalized_eigenspaces(const FpMatrix& m)
{
    if (!m.square())
        throw invalid_input("generalized_eigenspaces: matrix is not square");
    const int p = m.modulus();
    const std::size_t dim = m.rows();
    std::uint64_t exponent = 1;
    while (exponent < dim)
        exponent <<= 1;
    EigenDimensions out{p, std::vector<std::size_t>(static_cast<std::size_t>(p), 0), dim};
    const FpMatrix id = FpMatrix::identity(p, dim);
    for (int alpha = 0; alpha < p; ++alpha) {
        const FpMatrix shifted = m - static_cast<long long>(alpha) * id;
        out.dims[static_cast<std::size_t>(alpha)] = dim - shifted.pow(exponent).rank();
    }
    return out;
}

/// X acting on V (x) V^{(x)d}: the operator whose eigenspaces split F(V^{(x)d}).
inline FpMatrix tensor_casimir_on_tensor_power(int n, int d, int p)
{
    return build_Xi(1, 1, d, n, p);
}

/**
 * Combinatorial prediction of the generalized eigenspace dimensions of X on
 * V (x) V^{(x)d}: V^{(x)d} has Weyl multiplicities f^lambda, and V (x) Delta(lambda)
 * has Weyl subquotients Delta(lambda + box) on which X acts by the box content.
 */
inline std::vector<long long> predicted_F_alpha_dims(int n, int d, int p)
{
    require_prime(p);
    std::vector<long long> dims(static_cast<std::size_t>(p), 0);
    for (const Partition& lambda : partitions_of(d, n)) {
        const long long f = count_syt(lambda);
        for (const BoxCoord& b : addable_boxes(lambda, n))
            dims[static_cast<std::size_t>(mod_floor(box_content(b), p))]
                += f * count_ssyt(lambda.with_box(b.row), n);
    }
    return dims;
}

} // namespace slpcat
