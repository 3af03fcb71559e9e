#pragma once

#include "heckehom/cyclotomic.hpp"

#include <string>
#include <vector>

namespace heckehom {

/// Dense univariate polynomial over Q(ζ), ascending coefficients, no trailing
/// zeros. The single variable is "t" by convention (graded-dimension series).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Cyclotomic c);
    explicit UniPoly(std::vector<Cyclotomic> coeffs);

    static UniPoly t();

    const std::vector<Cyclotomic>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    Cyclotomic coeff(std::size_t i) const;
    Cyclotomic eval(const Cyclotomic& x) const;
    Cyclotomic leading() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Cyclotomic& c) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// (quotient, remainder) of exact field division.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
    static UniPoly gcd(UniPoly a, UniPoly b); // monic

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Cyclotomic> c_;
    void trim_();
};

/// Rational function in t over Q(ζ), normalized so that gcd(num,den) = 1 and
/// the denominator is monic. Houses graded dimension series of HH summands.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(UniPoly(Cyclotomic(1))) {}
    RationalFunction(UniPoly num, UniPoly den);

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction constant(const Cyclotomic& c) {
        return RationalFunction(UniPoly(c), UniPoly(Cyclotomic(1)));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction scaled(const Cyclotomic& c) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Power-series coefficients of t^0..t^order. Requires den(0) ≠ 0
    /// (no pole at t = 0); throws DomainError otherwise.
    std::vector<Cyclotomic> series(int order) const;

    std::string str(const std::string& var = "t") const;

private:
    UniPoly num_, den_;
    void normalize_();
};

} // namespace heckehom
