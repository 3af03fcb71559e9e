#include "heckehom/ratfun.hpp"

#include <sstream>

namespace heckehom {

void UniPoly::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly::UniPoly(Cyclotomic c) : c_{std::move(c)} { trim_(); }

UniPoly::UniPoly(std::vector<Cyclotomic> coeffs) : c_(std::move(coeffs)) { trim_(); }

UniPoly UniPoly::t() { return UniPoly(std::vector<Cyclotomic>{Cyclotomic(0), Cyclotomic(1)}); }

Cyclotomic UniPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Cyclotomic(0);
}

Cyclotomic UniPoly::eval(const Cyclotomic& x) const {
    Cyclotomic acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Cyclotomic UniPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Cyclotomic> c(std::max(a.c_.size(), b.c_.size()), Cyclotomic(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return UniPoly();
    std::vector<Cyclotomic> c(a.c_.size() + b.c_.size() - 1, Cyclotomic(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Cyclotomic& s) const {
    UniPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim_();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Cyclotomic> rem = num.c_;
    if (rem.size() < den.c_.size()) return {UniPoly(), num};
    std::vector<Cyclotomic> q(rem.size() - den.c_.size() + 1, Cyclotomic(0));
    const Cyclotomic lead_inv = den.c_.back().inverse();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Cyclotomic f = rem[i + den.c_.size() - 1] * lead_inv;
        q[i] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < den.c_.size(); ++j) rem[i + j] -= f * den.c_[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(a.leading().inverse());
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string coeff = c_[i].str();
        if (!first) os << " + ";
        first = false;
        bool needs_parens = coeff.find(' ') != std::string::npos ||
                            (coeff.find('-') != std::string::npos && i > 0);
        if (i == 0) {
            os << coeff;
        } else {
            if (coeff != "1") os << (needs_parens ? "(" + coeff + ")" : coeff) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize_();
}

void RationalFunction::normalize_() {
    if (num_.is_zero()) {
        den_ = UniPoly(Cyclotomic(1));
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::divmod(num_, g).first;
        den_ = UniPoly::divmod(den_, g).first;
    }
    Cyclotomic lead = den_.leading();
    if (lead != Cyclotomic(1)) {
        Cyclotomic inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::scaled(const Cyclotomic& c) const {
    RationalFunction r = *this;
    r.num_ = r.num_.scaled(c);
    r.normalize_();
    return r;
}

std::vector<Cyclotomic> RationalFunction::series(int order) const {
    if (den_.coeff(0).is_zero()) throw DomainError("series expansion with pole at t = 0");
    const Cyclotomic d0_inv = den_.coeff(0).inverse();
    std::vector<Cyclotomic> out(static_cast<std::size_t>(order) + 1, Cyclotomic(0));
    for (int n = 0; n <= order; ++n) {
        Cyclotomic acc = num_.coeff(n);
        for (int j = 1; j <= n; ++j) acc -= den_.coeff(j) * out[n - j];
        out[n] = acc * d0_inv;
    }
    return out;
}

std::string RationalFunction::str(const std::string& var) const {
    if (num_.is_zero()) return "0";
    if (den_ == UniPoly(Cyclotomic(1))) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace heckehom
