#include <slpcat/hecke.hpp>
#include <slpcat/io.hpp>

#include <gtest/gtest.h>

using namespace slpcat;

namespace {

std::vector<int> range(int lo, int hi)
{
    std::vector<int> v;
    for (int k = lo; k <= hi; ++k)
        v.push_back(k);
    return v;
}

std::vector<long long> dims_of(const EigenDimensions& e) { return {e.dims.begin(), e.dims.end()}; }

} // namespace

TEST(FpMatrix, ArithmeticAndRank)
{
    FpMatrix a(5, 2, 2);
    a.set(0, 0, 1);
    a.set(0, 1, 2);
    a.set(1, 0, 2);
    a.set(1, 1, 4);  // second row = 2 * first row
    EXPECT_EQ(a.rank(), 1u);
    EXPECT_EQ(FpMatrix::identity(5, 4).rank(), 4u);
    EXPECT_EQ((a - a).rank(), 0u);
    EXPECT_EQ(a * FpMatrix::identity(5, 2), a);
    EXPECT_EQ(5 * a, FpMatrix::zero(5, 2));
    EXPECT_EQ(a.pow(0), FpMatrix::identity(5, 2));
    // a^2 = 5a = 0 mod 5
    EXPECT_TRUE(a.pow(2).is_zero());
    EXPECT_THROW(FpMatrix(4, 2, 2), invalid_input);
    EXPECT_THROW(FpMatrix(5, 2, 3) * FpMatrix(5, 2, 3), invalid_input);
}

TEST(TensorSpace, LexicographicBasis)
{
    const TensorSpace s(3, 2);
    EXPECT_EQ(s.dim(), 9u);
    EXPECT_EQ(s.decode(0), (std::vector<int>{1, 1}));
    EXPECT_EQ(s.decode(1), (std::vector<int>{1, 2}));
    EXPECT_EQ(s.decode(3), (std::vector<int>{2, 1}));
    for (std::size_t k = 0; k < s.dim(); ++k)
        EXPECT_EQ(s.encode(s.decode(k)), k);
}

TEST(MatrixUnits, Examples)
{
    const TensorSpace v(2, 1);
    const FpMatrix e12 = matrix_unit_action(1, 2, {1}, v, 3);
    FpMatrix want = FpMatrix::zero(3, 2);
    want.set(0, 1, 1);  // v_2 -> v_1
    EXPECT_EQ(e12, want);

    const TensorSpace s(3, 3);
    const FpMatrix diag = matrix_unit_action(2, 2, {2}, s, 5);
    for (std::size_t c = 0; c < s.dim(); ++c)
        for (std::size_t r = 0; r < s.dim(); ++r)
            EXPECT_EQ(diag(r, c), (r == c && s.decode(c)[1] == 2) ? 1u : 0u);

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            EXPECT_EQ(matrix_unit_action(i, j, {1, 3}, s, 5),
                      matrix_unit_action(i, j, {1}, s, 5) + matrix_unit_action(i, j, {3}, s, 5));

    EXPECT_THROW(matrix_unit_action(0, 1, {1}, s, 5), invalid_input);
    EXPECT_THROW(matrix_unit_action(1, 1, {4}, s, 5), invalid_input);
}

TEST(Casimir, OnVIsNTimesIdentity)
{
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(casimir({1}, TensorSpace(n, 1), p), static_cast<long long>(n) * FpMatrix::identity(p, static_cast<std::size_t>(n)));
    EXPECT_TRUE(casimir({}, TensorSpace(2, 2), 3).is_zero());
    EXPECT_THROW(casimir({1}, TensorSpace(2, 1), 2), unsupported_modulus);
}

TEST(Casimir, TwoExpansionsAgree)
{
    for (int p : {3, 5})
        for (int n = 1; n <= 3; ++n)
            for (int D = 1; D <= 3; ++D) {
                const TensorSpace s(n, D);
                EXPECT_EQ(casimir(range(1, D), s, p), casimir_expanded(range(1, D), s, p));
                EXPECT_EQ(casimir({D}, s, p), casimir_expanded({D}, s, p));
            }
}

TEST(Casimir, ActsOnSymmetricSquareByScalar)
{
    // On V (x) V the Casimir is c(2,0) on Sym^2 and c(1,1) on wedge^2; the
    // generalized eigenspace dimensions pin that down.
    const int p = 5, n = 3;
    const auto e = generalized_eigenspaces(casimir({1, 2}, TensorSpace(n, 2), p));
    const long long sym = casimir_scalar(parse_weight("2,0,0")), alt = casimir_scalar(parse_weight("1,1,0"));
    EXPECT_EQ(e.dims[static_cast<std::size_t>(mod_floor(sym, p))], 6u);
    EXPECT_EQ(e.dims[static_cast<std::size_t>(mod_floor(alt, p))], 3u);
}

TEST(TensorCasimir, FlipIdentity)
{
    for (int p : {3, 5})
        for (int n = 1; n <= 4; ++n) {
            const TensorSpace s(n, 2);
            EXPECT_EQ(tensor_casimir(1, {2}, s, p), slot_swap(1, 2, s, p));
        }
}

TEST(TensorCasimir, CoproductIdentity)
{
    for (int p : {3, 5})
        for (int n = 1; n <= 3; ++n)
            for (int D = 1; D <= 4; ++D) {
                const TensorSpace s(n, D);
                for (int a = 1; a <= D; ++a) {
                    std::vector<int> rest;
                    for (int k = 1; k <= D; ++k)
                        if (k != a && (k % 2 == 0 || k > a))
                            rest.push_back(k);
                    std::vector<int> all = rest;
                    all.push_back(a);
                    EXPECT_EQ(casimir(all, s, p) - casimir({a}, s, p) - casimir(rest, s, p),
                              2 * tensor_casimir(a, rest, s, p));
                }
            }
}

TEST(TensorCasimir, EdgeCases)
{
    const TensorSpace s(2, 3);
    EXPECT_TRUE(tensor_casimir(1, {}, s, 3).is_zero());
    EXPECT_THROW(tensor_casimir(1, {1, 2}, s, 3), invalid_input);
}

TEST(HeckeOperators, SmallCases)
{
    EXPECT_TRUE(build_Xi(1, 1, 0, 2, 3).is_zero());
    EXPECT_EQ(build_Xi(2, 2, 0, 2, 3), slot_swap(1, 2, TensorSpace(2, 2), 3));
    EXPECT_EQ(build_Ti(1, 2, 0, 2, 3), slot_swap(1, 2, TensorSpace(2, 2), 3));
    for (int N = 2; N <= 3; ++N)
        for (int d = 0; d <= 2; ++d)
            for (int i = 1; i < N; ++i) {
                const FpMatrix t = build_Ti(i, N, d, 2, 3);
                EXPECT_EQ(t * t, FpMatrix::identity(3, t.rows()));
                for (std::size_t c = 0; c < t.cols(); ++c) {
                    int ones = 0;
                    for (std::size_t r = 0; r < t.rows(); ++r) {
                        EXPECT_LE(t(r, c), 1u);
                        ones += static_cast<int>(t(r, c));
                    }
                    EXPECT_EQ(ones, 1);
                }
            }
    EXPECT_THROW(build_Xi(0, 2, 0, 2, 3), invalid_input);
    EXPECT_THROW(build_Ti(2, 2, 0, 2, 3), invalid_input);
}

TEST(HeckeOperators, XiAreJucysMurphyElementsWithoutModule)
{
    for (int p : {3, 5})
        for (int n = 1; n <= 3; ++n)
            for (int N = 1; N <= 4; ++N) {
                const TensorSpace s(n, N);
                for (int i = 1; i <= N; ++i)
                    EXPECT_EQ(build_Xi(i, N, 0, n, p), jucys_murphy(N - i + 1, s, p));
            }
}

TEST(HeckeRelations, Hold)
{
    EXPECT_TRUE(verify_hecke_relations(2, 2, 1, 3).empty());
    EXPECT_TRUE(verify_hecke_relations(3, 3, 0, 5).empty());
    EXPECT_TRUE(verify_hecke_relations(2, 4, 0, 3).empty());
}

TEST(HeckeRelations, UniformShiftIsInvisible)
{
    // X_i -> X_i + c for every i preserves all relations, including T X - X T = 1.
    HeckeOperators ops = build_hecke_operators(2, 3, 1, 3);
    const FpMatrix id = FpMatrix::identity(3, ops.X.front().rows());
    for (FpMatrix& x : ops.X)
        x += id;
    EXPECT_TRUE(verify_hecke_relations(ops).empty());
}

TEST(HeckeRelations, MutationsAreDetected)
{
    HeckeOperators shifted = build_hecke_operators(2, 2, 1, 3);
    shifted.X[0] += FpMatrix::identity(3, shifted.X[0].rows());
    const HeckeReport r1 = verify_hecke_relations(shifted);
    ASSERT_EQ(r1.size(), 1u);
    EXPECT_EQ(r1[0], "T_1 X_2 - X_1 T_1 = 1");

    HeckeOperators scaled = build_hecke_operators(2, 2, 1, 3);
    for (FpMatrix& x : scaled.X)
        x = 2 * x;
    EXPECT_FALSE(verify_hecke_relations(scaled).empty());

    HeckeOperators wrong_swap = build_hecke_operators(2, 3, 0, 3);
    wrong_swap.T[0] = slot_swap(1, 3, TensorSpace(2, 3), 3);
    EXPECT_FALSE(verify_hecke_relations(wrong_swap).empty());
}

TEST(Eigenspaces, Examples)
{
    const FpMatrix flip = slot_swap(1, 2, TensorSpace(2, 2), 3);
    EXPECT_EQ(dims_of(generalized_eigenspaces(flip)), (std::vector<long long>{0, 3, 1}));

    const auto zero = generalized_eigenspaces(FpMatrix::zero(5, 7));
    EXPECT_EQ(dims_of(zero), (std::vector<long long>{7, 0, 0, 0, 0}));

    const auto x = generalized_eigenspaces(tensor_casimir_on_tensor_power(3, 1, 3));
    EXPECT_EQ(dims_of(x), (std::vector<long long>{0, 6, 3}));
    EXPECT_TRUE(x.complete());
}

TEST(Eigenspaces, NilpotentPartIsCounted)
{
    FpMatrix j = FpMatrix::zero(5, 3);
    j.set(0, 0, 2);
    j.set(1, 1, 2);
    j.set(0, 1, 1);  // Jordan block of size 2 at eigenvalue 2
    j.set(2, 2, 4);
    EXPECT_EQ(dims_of(generalized_eigenspaces(j)), (std::vector<long long>{0, 0, 2, 0, 1}));
}

TEST(Eigenspaces, IncompleteWhenSpectrumLeavesFp)
{
    // x^2 + 1 has no roots mod 3.
    FpMatrix rot = FpMatrix::zero(3, 2);
    rot.set(0, 1, 2);
    rot.set(1, 0, 1);
    EXPECT_FALSE(generalized_eigenspaces(rot).complete());
}

TEST(Predicted, Examples)
{
    EXPECT_EQ(predicted_F_alpha_dims(3, 1, 3), (std::vector<long long>{0, 6, 3}));
    for (int n = 1; n <= 4; ++n) {
        std::vector<long long> want(5, 0);
        want[0] = n;
        EXPECT_EQ(predicted_F_alpha_dims(n, 0, 5), want);
    }
    // lambda = (2): boxes of content 2 and -1; lambda = (1,1): content 1 only (n = 2).
    EXPECT_EQ(predicted_F_alpha_dims(2, 2, 3), (std::vector<long long>{0, 2, 6}));
}

TEST(Predicted, MatchesMatrixSpectrum)
{
    for (int p : {3, 5})
        for (int n = 1; n <= 3; ++n)
            for (int d = 0; d <= 3; ++d) {
                const auto got = generalized_eigenspaces(tensor_casimir_on_tensor_power(n, d, p));
                EXPECT_TRUE(got.complete());
                EXPECT_EQ(dims_of(got), predicted_F_alpha_dims(n, d, p)) << "n=" << n << " d=" << d << " p=" << p;
            }
}

TEST(Export, MatrixJson)
{
    const json j = to_json(slot_swap(1, 2, TensorSpace(2, 2), 3));
    EXPECT_EQ(j.dump(), R"({"p":3,"dims":[4,4],"entries":[1,0,0,0,0,0,1,0,0,1,0,0,0,0,0,1]})");
}
