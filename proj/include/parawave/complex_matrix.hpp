#pragma once

#include "parawave/symbols.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace parawave {

using ComplexVector = std::vector<complex_t>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(std::size_t n)
    {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] std::size_t size() const { return n_; }

    complex_t& operator()(std::size_t i, std::size_t j)
    {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }
    const complex_t& operator()(std::size_t i, std::size_t j) const
    {
        assert(i < n_ && j < n_);
        return data_[i * n_ + j];
    }

    [[nodiscard]] std::span<const complex_t> data() const { return data_; }

    [[nodiscard]] ComplexVector column(std::size_t j) const
    {
        ComplexVector c(n_);
        for (std::size_t i = 0; i < n_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    [[nodiscard]] bool all_finite() const
    {
        return std::all_of(data_.begin(), data_.end(),
                           [](complex_t z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
    }

    [[nodiscard]] double max_abs() const
    {
        double m = 0.0;
        for (complex_t z : data_)
            m = std::max(m, std::abs(z));
        return m;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& other)
    {
        check_same(other);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= other.data_[k];
        return *this;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
    {
        a.check_same(b);
        const std::size_t n = a.n_;
        ComplexMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const complex_t aik = a(i, k);
                if (aik == complex_t{})
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend ComplexVector operator*(const ComplexMatrix& a, std::span<const complex_t> x)
    {
        if (x.size() != a.n_)
            throw std::invalid_argument("matrix-vector size mismatch");
        ComplexVector y(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) {
            complex_t s{};
            for (std::size_t j = 0; j < a.n_; ++j)
                s += a(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

private:
    void check_same(const ComplexMatrix& other) const
    {
        if (other.n_ != n_)
            throw std::invalid_argument("matrix size mismatch");
    }

    std::size_t n_ = 0;
    ComplexVector data_;
};

[[nodiscard]] inline ComplexMatrix matrix_power(const ComplexMatrix& a, int p)
{
    ComplexMatrix result = ComplexMatrix::identity(a.size());
    ComplexMatrix base = a;
    for (; p > 0; p >>= 1) {
        if (p & 1)
            result = result * base;
        if (p > 1)
            base = base * base;
    }
    return result;
}

[[nodiscard]] inline double norm2(std::span<const complex_t> x)
{
    double s = 0.0;
    for (complex_t z : x)
        s += std::norm(z);
    return std::sqrt(s);
}

} // namespace parawave
