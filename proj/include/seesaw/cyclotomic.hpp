#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "seesaw/rational.hpp"

namespace seesaw {

// Root of unity e^{2 pi i e/m}, stored as the reduced angle e/m mod 1.
struct RootOfUnity {
    long order = 1;     // m
    long exponent = 0;  // e, 0 <= e < m, gcd-reduced together with m

    RootOfUnity() = default;
    RootOfUnity(long m, long e) {
        if (m <= 0) throw std::domain_error("root of unity needs positive order");
        e %= m;
        if (e < 0) e += m;
        long g = std::__gcd(e == 0 ? m : e, m);
        order = m / g;
        exponent = e / g;
        if (e == 0) { order = 1; exponent = 0; }
    }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        long m = a.order / std::__gcd(a.order, b.order) * b.order;
        return RootOfUnity(m, a.exponent * (m / a.order) + b.exponent * (m / b.order));
    }

    RootOfUnity inverse() const { return RootOfUnity(order, -exponent); }
    bool operator==(const RootOfUnity& o) const { return order == o.order && exponent == o.exponent; }
    bool is_one() const { return order == 1; }
    bool is_minus_one() const { return order == 2 && exponent == 1; }
    bool is_real() const { return order <= 2; }

    std::string str() const {
        if (is_one()) return "1";
        if (is_minus_one()) return "-1";
        return "zeta" + std::to_string(order) + "^" + std::to_string(exponent);
    }
};

// Element of Q(zeta_m): coefficient vector in the power basis 1, z, ..., z^{deg-1}
// of Z[x]/Phi_m(x). Orders are promoted to the lcm on mixed arithmetic.
class Cyclo {
public:
    Cyclo() : order_(1), coeffs_(1, Rat(0)) {}
    explicit Cyclo(const Rat& r) : order_(1), coeffs_(1, r) {}
    explicit Cyclo(const RootOfUnity& z);

    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(Rat(1)); }

    long order() const { return order_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Rat& c, const Cyclo& a);
    Cyclo operator-() const;
    bool operator==(const Cyclo& o) const;

    std::string str() const;

    // Phi_m over Q, computed by dividing x^m - 1 by the cyclotomic
    // polynomials of the proper divisors.
    static std::vector<Rat> cyclotomic_poly(long m);

private:
    Cyclo promoted(long m) const;  // re-express in Q(zeta_m), order_ | m
    void reduce();                 // reduce mod Phi_m

    long order_;
    std::vector<Rat> coeffs_;
};

}  // namespace seesaw
