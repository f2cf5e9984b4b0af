#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "seesaw/rational.hpp"

namespace seesaw {

// Element x + y*sqrt(D) of a real quadratic field, D > 0 and not a square.
// D is kept as-is (form discriminants like 12 are not reduced to their
// squarefree kernel); equality across different D goes through
// same_field_value below.
class QuadIrr {
public:
    QuadIrr() : disc_(5), x_(0), y_(0) {}

    QuadIrr(Int disc, Rat x, Rat y) : disc_(std::move(disc)), x_(std::move(x)), y_(std::move(y)) {
        if (disc_ <= 0 || is_square(disc_))
            throw std::domain_error("QuadIrr needs a positive non-square discriminant");
    }

    static QuadIrr rational(Int disc, Rat x) { return QuadIrr(std::move(disc), std::move(x), Rat(0)); }
    static QuadIrr sqrt_of(Int disc) { Int d = disc; return QuadIrr(std::move(d), Rat(0), Rat(1)); }

    const Int& disc() const { return disc_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    QuadIrr conj() const { return QuadIrr(disc_, x_, -y_); }
    Rat norm() const { return x_ * x_ - y_ * y_ * Rat(disc_); }
    Rat trace() const { return 2 * x_; }

    QuadIrr operator-() const { return QuadIrr(disc_, -x_, -y_); }

    friend QuadIrr operator+(const QuadIrr& a, const QuadIrr& b) {
        a.check(b);
        return QuadIrr(a.disc_, a.x_ + b.x_, a.y_ + b.y_);
    }
    friend QuadIrr operator-(const QuadIrr& a, const QuadIrr& b) {
        a.check(b);
        return QuadIrr(a.disc_, a.x_ - b.x_, a.y_ - b.y_);
    }
    friend QuadIrr operator*(const QuadIrr& a, const QuadIrr& b) {
        a.check(b);
        return QuadIrr(a.disc_, a.x_ * b.x_ + a.y_ * b.y_ * Rat(a.disc_), a.x_ * b.y_ + a.y_ * b.x_);
    }
    friend QuadIrr operator*(const Rat& c, const QuadIrr& a) { return QuadIrr(a.disc_, c * a.x_, c * a.y_); }
    friend QuadIrr operator*(const QuadIrr& a, const Rat& c) { return c * a; }

    QuadIrr inverse() const {
        Rat n = norm();
        if (n == 0) throw std::domain_error("inverse of zero-norm QuadIrr");
        return QuadIrr(disc_, x_ / n, -y_ / n);
    }
    friend QuadIrr operator/(const QuadIrr& a, const QuadIrr& b) { return a * b.inverse(); }

    QuadIrr pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QuadIrr r = rational(disc_, Rat(1));
        QuadIrr base = *this;
        unsigned long u = static_cast<unsigned long>(e);
        while (u) {
            if (u & 1) r = r * base;
            base = base * base;
            u >>= 1;
        }
        return r;
    }

    // Exact sign of x + y*sqrt(D), decided by rationalizing.
    int sign() const {
        int sx = seesaw::sign(x_), sy = seesaw::sign(y_);
        if (sy == 0) return sx;
        if (sx == 0) return sy;
        if (sx == sy) return sx;
        // opposite signs: compare x^2 against y^2 D
        Rat lhs = x_ * x_, rhs = y_ * y_ * Rat(disc_);
        if (lhs == rhs) return 0;  // impossible for nonsquare D with y != 0, kept for safety
        return (lhs > rhs) ? sx : sy;
    }

    bool operator==(const QuadIrr& o) const { return disc_ == o.disc_ && x_ == o.x_ && y_ == o.y_; }

    bool operator<(const QuadIrr& o) const { return (*this - o).sign() < 0; }
    bool operator>(const QuadIrr& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const QuadIrr& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const QuadIrr& o) const { return (*this - o).sign() >= 0; }

    // Equality as real numbers, across possibly different stored discriminants.
    static bool same_field_value(const QuadIrr& a, const QuadIrr& b) {
        Int ka, fa, kb, fb;
        square_split(a.disc_, ka, fa);
        square_split(b.disc_, kb, fb);
        if (ka != kb) return a.y_ == 0 && b.y_ == 0 && a.x_ == b.x_;
        return a.x_ == b.x_ && a.y_ * Rat(fa) == b.y_ * Rat(fb);
    }

    Int floor() const {
        if (y_ == 0) return floor_rat(x_);
        // floor(x) + correction, found by exact sign bisection on n <= v < n+1
        Int lo = floor_rat(x_) + floor_rat(y_ * Rat(isqrt(disc_)))
                 - 2;  // slack below
        Int hi = lo + 8 + abs(num(y_)) / den(y_) * (isqrt(disc_) + 2);
        while (lo < hi) {
            Int mid = floor_div(lo + hi + 1, 2);
            if ((*this - rational(disc_, Rat(mid))).sign() >= 0)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    std::string str() const {
        return to_string(x_) + (seesaw::sign(y_) >= 0 ? "+" : "") + to_string(y_) + "*sqrt(" +
               to_string(disc_) + ")";
    }

private:
    void check(const QuadIrr& o) const {
        if (disc_ != o.disc_) throw std::domain_error("QuadIrr discriminant mismatch");
    }

    Int disc_;
    Rat x_, y_;
};

struct PellSolution {
    Int u, v;
    Int disc;
};

// Minimal positive (t, u) with t^2 - D u^2 = 4; (t + u sqrt(D))/2 is the
// fundamental norm-one unit of the order of discriminant D.
struct Pell4Solution {
    Int t, u;
    Int disc;
};

struct CFrac {
    std::vector<Int> terms;   // a0; a1, a2, ...
    std::size_t period_start = 1;
    std::size_t period_len = 0;
};

// Continued fraction of sqrt(D) with the period detected from the
// (P, Q) state recurrence, not from repeated partial quotients.
CFrac cfrac_sqrt(const Int& D, std::size_t max_terms = 0);

// Minimal positive (u, v) with u^2 - D v^2 = 1.
PellSolution pell_fundamental(const Int& D);

// Minimal positive (t, u) with t^2 - D u^2 = 4, by exact root descent from the
// Pell solution (the unit group is cyclic, so the fundamental element is
// reached by taking exact square/cube roots while they exist).
Pell4Solution pell4_fundamental(const Int& D);

// Exact dyadic enclosure sqrt(D) in [lo, hi] with hi - lo <= 2^-bits.
void sqrt_enclosure(const Int& D, int bits, Rat& lo, Rat& hi);

}  // namespace seesaw
