#pragma once

#include <optional>
#include <string>
#include <vector>

#include "doublet/rational.hpp"

namespace doublet {

// Element of the cyclotomic field Q(zeta_N), stored as a rational coefficient
// vector in the power basis 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the
// N-th cyclotomic polynomial.  Arithmetic between different conductors embeds
// both operands into Q(zeta_lcm) first.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_(1) {}
    explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}
    Cyclotomic(long long n) : conductor_(1), coeffs_{Rational(n)} {}

    // zeta_n^k, with k/n reduced so the stored conductor divides n.
    static Cyclotomic root_of_unity(int n, long long k);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // throws if not rational

    // Lossless embedding into Q(zeta_target); target must be a multiple of
    // the current conductor.
    Cyclotomic embedded(int target) const;

    // Galois conjugation zeta -> zeta^{-1} (complex conjugation on roots of
    // unity; never numeric).
    Cyclotomic conj() const;

    Cyclotomic inverse() const;  // throws on zero

    // Smallest divisor d of the conductor with the value in Q(zeta_d).
    Cyclotomic reduced() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic operator/(const Rational& r) const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Deterministic total order on values used to fix character-row and
    // basis orderings: lower conductor first after reduction, then the
    // lexicographically *greater* coefficient vector first, so 1 precedes
    // every other root of unity and omega precedes omega^2.
    static bool value_order_less(const Cyclotomic& a, const Cyclotomic& b);

    // Compact display: exact for rationals and Q(zeta_3) ("w" is a primitive
    // cube root); empty otherwise.
    std::string display() const;
    std::string str() const;  // always defined, power-basis form

private:
    static const std::vector<long long>& cyclotomic_poly(int n);
    static const std::vector<std::vector<long long>>& power_table(int n);

    int conductor_;
    std::vector<Rational> coeffs_;  // size phi(conductor_)
};

int euler_phi(int n);

}  // namespace doublet
