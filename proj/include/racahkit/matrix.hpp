///
/// \file   racahkit/matrix.hpp
///
/// \brief  Dense square matrices of exact rationals.
///

#ifndef RACAHKIT_MATRIX_HPP
#define RACAHKIT_MATRIX_HPP

#include "racahkit/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace racahkit
{

class RationalMatrix
{
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    RationalMatrix(std::initializer_list<std::initializer_list<BigRational>> rows) : RationalMatrix(rows.size())
    {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != order_)
                throw DomainError("matrix literal is not square");
            std::size_t j = 0;
            for (const auto& x : row)
                (*this)(i, j++) = x;
            ++i;
        }
    }

    static RationalMatrix identity(std::size_t order)
    {
        RationalMatrix m(order);
        for (std::size_t i = 0; i < order; ++i)
            m(i, i) = 1;
        return m;
    }

    static RationalMatrix diagonal(const std::vector<BigRational>& d)
    {
        RationalMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t order() const { return order_; }

    BigRational&       operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
    const BigRational& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

    RationalMatrix& operator+=(const RationalMatrix& o)
    {
        check_order(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] += o.entries_[k];
        return *this;
    }

    RationalMatrix& operator-=(const RationalMatrix& o)
    {
        check_order(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] -= o.entries_[k];
        return *this;
    }

    RationalMatrix& operator*=(const BigRational& s)
    {
        for (auto& x : entries_)
            x *= s;
        return *this;
    }

    friend RationalMatrix operator+(RationalMatrix x, const RationalMatrix& y) { return x += y; }
    friend RationalMatrix operator-(RationalMatrix x, const RationalMatrix& y) { return x -= y; }
    friend RationalMatrix operator*(RationalMatrix x, const BigRational& s) { return x *= s; }
    friend RationalMatrix operator*(const BigRational& s, RationalMatrix x) { return x *= s; }

    /// Zero entries are skipped; most operands here are banded.
    friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y)
    {
        x.check_order(y);
        const std::size_t n = x.order_;
        RationalMatrix r(n);
        BigRational t;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const BigRational& xik = x(i, k);
                if (sgn(xik) == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const BigRational& ykj = y(k, j);
                    if (sgn(ykj) == 0)
                        continue;
                    mpq_mul(t.get_mpq_t(), xik.get_mpq_t(), ykj.get_mpq_t());
                    r(i, j) += t;
                }
            }
        }
        return r;
    }

    std::vector<BigRational> operator*(const std::vector<BigRational>& v) const
    {
        if (v.size() != order_)
            throw DomainError("matrix-vector order mismatch");
        std::vector<BigRational> r(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j)
                r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<BigRational> column(std::size_t j) const
    {
        std::vector<BigRational> c(order_);
        for (std::size_t i = 0; i < order_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    bool operator==(const RationalMatrix& o) const { return order_ == o.order_ && entries_ == o.entries_; }

private:
    void check_order(const RationalMatrix& o) const
    {
        if (o.order_ != order_)
            throw DomainError("matrix order mismatch");
    }

    std::size_t              order_ = 0;
    std::vector<BigRational> entries_;
};

} // namespace racahkit

#endif // RACAHKIT_MATRIX_HPP
