#pragma once

#include "heckehom/rational.hpp"

#include <string>
#include <vector>

namespace heckehom {

/// Exact element of the cyclotomic field Q(ζ_m).
///
/// Canonical form: the residue in the power basis ζ^0..ζ^{φ(m)-1} modulo the
/// m-th cyclotomic polynomial Φ_m. Representation in that basis is unique, so
/// equality is a coefficient comparison (after lifting both operands to the
/// lcm conductor). Conductors stay fixed per scenario; no automatic descent
/// to a smaller field.
class Cyclotomic {
public:
    Cyclotomic() : m_(1), c_(1) {}
    /*implicit*/ Cyclotomic(const Rational& r) : m_(1), c_{r} {}
    /*implicit*/ Cyclotomic(long n) : m_(1), c_{Rational(n)} {}

    // Σ coeffs[j]·ζ_m^j, any length up to the caller; reduced mod Φ_m.
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    static Cyclotomic zero(int m = 1);
    static Cyclotomic one(int m = 1);
    /// ζ_m^k
    static Cyclotomic root_of_unity(int m, long k);

    int conductor() const { return m_; }
    /// Canonical coefficients (length φ(m), degree < deg Φ_m).
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    /// Re-express in Q(ζ_n) for m | n.
    Cyclotomic lifted_to(int n) const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    /// Throws DomainError on division by zero.
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    /// Deterministic total order (conductor-lifted lexicographic); used only
    /// for canonical sorting, no arithmetic meaning.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

private:
    int m_;
    std::vector<Rational> c_;

    void reduce_(std::vector<Rational> raw);
};

/// Coefficients of Φ_m (integral, monic), cached per conductor.
const std::vector<Rational>& cyclotomic_polynomial(int m);

/// Euler φ(m) = deg Φ_m.
int euler_phi(int m);

long lcm_long(long a, long b);

} // namespace heckehom
