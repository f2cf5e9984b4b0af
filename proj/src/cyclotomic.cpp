#include "seesaw/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace seesaw {

namespace {

// quotient of exact polynomial division (a / b), remainder must be zero
std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat lead = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
        if (a.size() < b.size()) throw std::domain_error("poly_div_exact: nonzero remainder");
    }
    return q;
}

}  // namespace

std::vector<Rat> Cyclo::cyclotomic_poly(long m) {
    // x^m - 1
    std::vector<Rat> p(static_cast<std::size_t>(m) + 1, Rat(0));
    p[0] = Rat(-1);
    p.back() = Rat(1);
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        p = poly_div_exact(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

Cyclo::Cyclo(const RootOfUnity& z) : order_(z.order) {
    auto phi = cyclotomic_poly(order_);
    std::size_t deg = phi.size() - 1;
    coeffs_.assign(std::max<std::size_t>(deg, 1), Rat(0));
    if (order_ == 1) {
        coeffs_[0] = Rat(1);
        return;
    }
    // z^exponent reduced mod Phi
    std::vector<Rat> raw(static_cast<std::size_t>(z.exponent) + 1, Rat(0));
    raw.back() = Rat(1);
    // reduce
    while (raw.size() > deg) {
        Rat lead = raw.back();
        std::size_t shift = raw.size() - 1 - deg;
        for (std::size_t i = 0; i <= deg; ++i) raw[shift + i] -= lead * phi[i];
        while (!raw.empty() && raw.back() == 0) raw.pop_back();
        if (raw.empty()) break;
    }
    for (std::size_t i = 0; i < raw.size(); ++i) coeffs_[i] = raw[i];
}

void Cyclo::reduce() {
    auto phi = cyclotomic_poly(order_);
    std::size_t deg = phi.size() - 1;
    while (coeffs_.size() > deg) {
        Rat lead = coeffs_.back();
        if (lead != 0) {
            std::size_t shift = coeffs_.size() - 1 - deg;
            for (std::size_t i = 0; i <= deg; ++i) coeffs_[shift + i] -= lead * phi[i];
        }
        coeffs_.pop_back();
    }
    coeffs_.resize(std::max<std::size_t>(deg, 1), Rat(0));
}

Cyclo Cyclo::promoted(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::domain_error("Cyclo promotion: order must divide target");
    Cyclo out;
    out.order_ = m;
    auto phi = cyclotomic_poly(m);
    std::size_t deg = phi.size() - 1;
    out.coeffs_.assign(std::max<std::size_t>(deg, 1), Rat(0));
    long step = m / order_;
    // zeta_order^k = zeta_m^{k*step}
    std::vector<Rat> raw(static_cast<std::size_t>(step) * (coeffs_.size() - 1) + 1, Rat(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) raw[k * static_cast<std::size_t>(step)] += coeffs_[k];
    out.coeffs_.assign(raw.begin(), raw.end());
    out.reduce();
    return out;
}

bool Cyclo::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclo value is not rational: " + str());
    return coeffs_[0];
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    long m = std::lcm(a.order_, b.order_);
    Cyclo x = a.promoted(m), y = b.promoted(m);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo Cyclo::operator-() const {
    Cyclo x = *this;
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    long m = std::lcm(a.order_, b.order_);
    Cyclo x = a.promoted(m), y = b.promoted(m);
    Cyclo out;
    out.order_ = m;
    out.coeffs_.assign(x.coeffs_.size() + y.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
            out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    out.reduce();
    return out;
}

Cyclo operator*(const Rat& c, const Cyclo& a) {
    Cyclo x = a;
    for (auto& v : x.coeffs_) v *= c;
    return x;
}

bool Cyclo::operator==(const Cyclo& o) const { return (*this - o).is_zero(); }

std::string Cyclo::str() const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) s += " + ";
        s += to_string(coeffs_[i]);
        if (i > 0) s += "*z" + std::to_string(order_) + "^" + std::to_string(i);
        first = false;
    }
    return first ? "0" : s;
}

}  // namespace seesaw
