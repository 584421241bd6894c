#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace hankel {

/// Dense row-major matrix of rationals. Values are immutable once built;
/// every operation returns a fresh matrix.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
    }
    Mat(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        e_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static Mat generate(std::size_t rows, std::size_t cols,
                        const std::function<Rational(std::size_t, std::size_t)>& f) {
        std::vector<Rational> e;
        e.reserve(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) e.push_back(f(i, j));
        return Mat(rows, cols, std::move(e));
    }
    static Mat identity(std::size_t n) {
        return generate(n, n, [](std::size_t i, std::size_t j) { return Rational(i == j ? 1 : 0); });
    }
    static Mat diagonal(const std::vector<Rational>& d) {
        return generate(d.size(), d.size(),
                        [&](std::size_t i, std::size_t j) { return i == j ? d[i] : Rational(0); });
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<Rational>& entries() const { return e_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
        return (*this)(i, j);
    }

    Mat transpose() const {
        return generate(cols_, rows_, [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
    }

    Mat scaled(const Rational& k) const {
        auto e = e_;
        for (auto& x : e) x *= k;
        return Mat(rows_, cols_, std::move(e));
    }

    /// Removes row r and column c.
    Mat minor(std::size_t r, std::size_t c) const {
        std::vector<Rational> e;
        e.reserve((rows_ - 1) * (cols_ - 1));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (j != c) e.push_back((*this)(i, j));
        }
        return Mat(rows_ - 1, cols_ - 1, std::move(e));
    }

    bool is_integer_valued() const {
        for (const auto& x : e_)
            if (!x.is_integer()) return false;
        return true;
    }
    bool is_symmetric() const { return is_square() && *this == transpose(); }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        std::vector<Rational> e(a.rows_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) e[i * b.cols_ + j] += aik * b(k, j);
            }
        return Mat(a.rows_, b.cols_, std::move(e));
    }

    friend bool operator==(const Mat&, const Mat&) = default;

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ", [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += (*this)(i, j).str();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> e_;
};

}  // namespace hankel
