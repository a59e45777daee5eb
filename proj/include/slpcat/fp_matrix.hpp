#pragma once

#include "combinatorics.hpp"

#include <cstdint>
#include <vector>

namespace slpcat {

/// Dense matrix over the prime field F_p, row-major, entries in [0, p).
class FpMatrix {
public:
    using value_type = std::uint32_t;

    FpMatrix(int p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0)
    {
        require_prime(p);
        // Products accumulate in 64 bits before reduction.
        if (p >= (1 << 16))
            throw invalid_input("FpMatrix: modulus too large");
    }

    static FpMatrix zero(int p, std::size_t dim) { return FpMatrix(p, dim, dim); }

    static FpMatrix identity(int p, std::size_t dim)
    {
        FpMatrix m(p, dim, dim);
        for (std::size_t k = 0; k < dim; ++k)
            m.data_[k * dim + k] = 1;
        return m;
    }

    int modulus() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    const std::vector<value_type>& data() const noexcept { return data_; }

    value_type operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = static_cast<value_type>(mod_floor(v, p_)); }
    void add_to(std::size_t r, std::size_t c, long long v)
    {
        set(r, c, static_cast<long long>(data_[r * cols_ + c]) + v);
    }

    FpMatrix& operator+=(const FpMatrix& o)
    {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] = static_cast<value_type>((data_[k] + o.data_[k]) % static_cast<value_type>(p_));
        return *this;
    }
    FpMatrix& operator-=(const FpMatrix& o)
    {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] = static_cast<value_type>((data_[k] + static_cast<value_type>(p_) - o.data_[k]) % static_cast<value_type>(p_));
        return *this;
    }
    friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
    friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }

    friend FpMatrix operator*(long long k, FpMatrix m)
    {
        const auto kk = static_cast<std::uint64_t>(mod_floor(k, m.p_));
        for (auto& x : m.data_)
            x = static_cast<value_type>(kk * x % static_cast<std::uint64_t>(m.p_));
        return m;
    }

    /// Skips zero entries of the left factor, so sparse operators stay cheap.
    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b)
    {
        if (a.p_ != b.p_ || a.cols_ != b.rows_)
            throw invalid_input("FpMatrix: incompatible product");
        FpMatrix out(a.p_, a.rows_, b.cols_);
        std::vector<std::uint64_t> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t aik = a.data_[i * a.cols_ + k];
                if (aik == 0)
                    continue;
                const value_type* brow = &b.data_[k * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j)
                    acc[j] += aik * brow[j];
            }
            for (std::size_t j = 0; j < b.cols_; ++j)
                out.data_[i * b.cols_ + j] = static_cast<value_type>(acc[j] % static_cast<std::uint64_t>(a.p_));
        }
        return out;
    }

    bool is_zero() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), [](value_type x) { return x == 0; });
    }

    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const
    {
        std::vector<value_type> m = data_;
        const auto P = static_cast<std::uint64_t>(p_);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && m[piv * cols_ + c] == 0)
                ++piv;
            if (piv == rows_)
                continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j)
                    std::swap(m[piv * cols_ + j], m[r * cols_ + j]);
            const std::uint64_t inv = inverse(m[r * cols_ + c]);
            for (std::size_t j = c; j < cols_; ++j)
                m[r * cols_ + j] = static_cast<value_type>(m[r * cols_ + j] * inv % P);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                const std::uint64_t f = m[i * cols_ + c];
                if (f == 0)
                    continue;
                for (std::size_t j = c; j < cols_; ++j)
                    m[i * cols_ + j] = static_cast<value_type>((m[i * cols_ + j] + (P - f) * m[r * cols_ + j]) % P);
            }
            ++r;
        }
        return r;
    }

    /// m^e by repeated squaring.
    FpMatrix pow(std::uint64_t e) const
    {
        if (!square())
            throw invalid_input("FpMatrix::pow on a non-square matrix");
        FpMatrix result = identity(p_, rows_);
        FpMatrix base = *this;
        while (e) {
            if (e & 1)
                result = result * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return result;
    }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::uint64_t inverse(std::uint64_t a) const
    {
        // Fermat: a^(p-2).
        std::uint64_t r = 1, b = a % static_cast<std::uint64_t>(p_);
        for (std::uint64_t e = static_cast<std::uint64_t>(p_) - 2; e; e >>= 1) {
            if (e & 1)
                r = r * b % static_cast<std::uint64_t>(p_);
            b = b * b % static_cast<std::uint64_t>(p_);
        }
        return r;
    }

    void same_shape(const FpMatrix& o) const
    {
        if (o.p_ != p_ || o.rows_ != rows_ || o.cols_ != cols_)
            throw invalid_input("FpMatrix: shape or modulus mismatch");
    }

    int p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

} // namespace slpcat
