#include "seesaw/intmat.hpp"

#include <algorithm>

namespace seesaw {

IntMat hnf(const IntMat& A) {
    IntMat H = A;
    std::size_t rows = H.rows(), cols = H.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // find nonzero pivot in column c at or below row r
        std::size_t piv = r;
        bool found = false;
        for (std::size_t i = r; i < rows; ++i)
            if (H.at(i, c) != 0) { piv = i; found = true; break; }
        if (!found) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(H.at(r, j), H.at(piv, j));
        // gcd out the column below the pivot
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (H.at(i, c) == 0) continue;
                if (abs(H.at(i, c)) < abs(H.at(r, c))) {
                    for (std::size_t j = 0; j < cols; ++j) std::swap(H.at(r, j), H.at(i, j));
                }
                Int q = floor_div(H.at(i, c), H.at(r, c));
                for (std::size_t j = 0; j < cols; ++j) H.at(i, j) -= q * H.at(r, j);
                if (H.at(i, c) != 0) again = true;
            }
        }
        if (sign(H.at(r, c)) < 0)
            for (std::size_t j = 0; j < cols; ++j) H.at(r, j) = -H.at(r, j);
        // reduce rows above the pivot
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(H.at(i, c), H.at(r, c));
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) H.at(i, j) -= q * H.at(r, j);
        }
        ++r;
    }
    IntMat out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = H.at(i, j);
    return out;
}

std::vector<Int> snf_diagonal(IntMat A) {
    std::size_t n = std::min(A.rows(), A.cols());
    std::vector<Int> d;
    std::size_t top = 0;
    while (top < n) {
        // find a nonzero entry in the submatrix
        bool nonzero = false;
        std::size_t pi = top, pj = top;
        for (std::size_t i = top; i < A.rows() && !nonzero; ++i)
            for (std::size_t j = top; j < A.cols() && !nonzero; ++j)
                if (A.at(i, j) != 0) { pi = i; pj = j; nonzero = true; }
        if (!nonzero) break;
        for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(top, j), A.at(pi, j));
        for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A.at(i, top), A.at(i, pj));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = top + 1; i < A.rows(); ++i) {
                if (A.at(i, top) == 0) continue;
                clean = false;
                if (abs(A.at(i, top)) < abs(A.at(top, top)))
                    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A.at(top, j), A.at(i, j));
                Int q = floor_div(A.at(i, top), A.at(top, top));
                for (std::size_t j = 0; j < A.cols(); ++j) A.at(i, j) -= q * A.at(top, j);
            }
            for (std::size_t j = top + 1; j < A.cols(); ++j) {
                if (A.at(top, j) == 0) continue;
                clean = false;
                if (abs(A.at(top, j)) < abs(A.at(top, top)))
                    for (std::size_t i = 0; i < A.rows(); ++i) std::swap(A.at(i, top), A.at(i, j));
                Int q = floor_div(A.at(top, j), A.at(top, top));
                for (std::size_t i = 0; i < A.rows(); ++i) A.at(i, j) -= q * A.at(i, top);
            }
        }
        d.push_back(abs(A.at(top, top)));
        ++top;
    }
    // enforce divisibility chain
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Int g = gcd(d[i], d[j]);
            Int l = (g == 0) ? Int(0) : d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    return d;
}

Int det_bareiss(IntMat A) {
    if (A.rows() != A.cols()) throw std::domain_error("det of non-square matrix");
    std::size_t n = A.rows();
    if (n == 0) return 1;
    Int denom = 1;
    int sgnflip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && A.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(p, j));
            sgnflip = -sgnflip;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / denom;
        denom = A.at(k, k);
    }
    return sgnflip > 0 ? A.at(n - 1, n - 1) : -A.at(n - 1, n - 1);
}

std::vector<Rat> solve_rational(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b) {
    std::size_t n = A.size();
    if (n == 0 || A[0].size() != n || b.size() != n) throw std::domain_error("solve_rational: bad shape");
    std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
        M[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && M[p][k] == 0) ++p;
        if (p == n) throw std::domain_error("solve_rational: singular system");
        std::swap(M[k], M[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || M[i][k] == 0) continue;
            Rat f = M[i][k] / M[k][k];
            for (std::size_t j = k; j <= n; ++j) M[i][j] -= f * M[k][j];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = M[i][n] / M[i][i];
    return x;
}

std::size_t rank_rational(std::vector<std::vector<Rat>> A) {
    if (A.empty()) return 0;
    std::size_t rows = A.size(), cols = A[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && A[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(A[r], A[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (A[i][c] == 0) continue;
            Rat f = A[i][c] / A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace seesaw
