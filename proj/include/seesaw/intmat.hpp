#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "seesaw/rational.hpp"

namespace seesaw {

// Integer 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};

    static Mat2 identity() { return {}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }

    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

    // Inverse for det = ±1 matrices.
    Mat2 inverse_unimodular() const {
        Int dt = det();
        if (dt == 1) return {d, -b, -c, a};
        if (dt == -1) return {-d, b, c, -a};
        throw std::domain_error("inverse_unimodular: determinant not ±1");
    }

    Mat2 mod(const Int& m) const { return {mod_pos(a, m), mod_pos(b, m), mod_pos(c, m), mod_pos(d, m)}; }

    Mat2 pow(unsigned long e) const {
        Mat2 r = identity(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        return "[[" + to_string(a) + "," + to_string(b) + "],[" + to_string(c) + "," + to_string(d) + "]]";
    }
};

inline Mat2 mat2_S() { return {0, -1, 1, 0}; }
inline Mat2 mat2_T(long n = 1) { return {1, n, 0, 1}; }

// Dense integer matrix, row-major; small sizes only.
class IntMat {
public:
    IntMat() = default;
    IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMat transpose() const {
        IntMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend IntMat operator*(const IntMat& m, const IntMat& n) {
        if (m.cols_ != n.rows_) throw std::domain_error("IntMat shape mismatch");
        IntMat r(m.rows_, n.cols_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t k = 0; k < m.cols_; ++k) {
                if (m.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < n.cols_; ++j) r.at(i, j) += m.at(i, k) * n.at(k, j);
            }
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Row-style Hermite normal form. Returns H with the same row span as A over Z,
// rows of H are the nonzero HNF rows (row echelon, positive pivots).
IntMat hnf(const IntMat& A);

// Smith normal form diagonal entries d1 | d2 | ... (nonnegative) of A.
std::vector<Int> snf_diagonal(IntMat A);

// Exact determinant by Bareiss fraction-free elimination.
Int det_bareiss(IntMat A);

// Solve A x = b over the rationals (A square nonsingular). Throws on singular.
std::vector<Rat> solve_rational(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

// Rank of a rational matrix by fraction-free elimination.
std::size_t rank_rational(std::vector<std::vector<Rat>> A);

}  // namespace seesaw
