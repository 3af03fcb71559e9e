#pragma once

#include "heckehom/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace heckehom {

class ExactMatrix;

/// Multivariate polynomial over Q(ζ): map from exponent vectors to nonzero
/// coefficients. Variable names live with the scenario; a polynomial only
/// knows how many variables it has. Map ordering makes iteration (and hence
/// printing and arithmetic) deterministic.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Cyclotomic& c);
    static MultiPoly variable(int nvars, int i);
    /// Σ coeffs[i]·x_i (a linear form).
    static MultiPoly linear_form(const std::vector<Cyclotomic>& coeffs);
    static MultiPoly monomial(int nvars, const Exponents& e, const Cyclotomic& c);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Cyclotomic>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Cyclotomic constant_term() const;
    int total_degree() const; // -1 for the zero polynomial
    void set_term(const Exponents& e, const Cyclotomic& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Cyclotomic& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
    friend bool operator<(const MultiPoly& a, const MultiPoly& b);

    Cyclotomic eval(const std::vector<Cyclotomic>& point) const;
    MultiPoly derivative(int i) const;

    /// Substitute x_i ← Σ_j M(i,j)·x_j (M square, nvars×nvars).
    MultiPoly substitute_linear(const ExactMatrix& M) const;
    /// Substitute x_i ← forms[i]; forms may live in a ring with a different
    /// number of variables (all forms must agree).
    MultiPoly substitute(const std::vector<MultiPoly>& forms) const;

    /// Exact multivariate division (single divisor, lex order); throws
    /// DomainError if the remainder is nonzero.
    static MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exponents, Cyclotomic> t_;
};

} // namespace heckehom
