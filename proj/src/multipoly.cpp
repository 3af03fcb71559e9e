#include "heckehom/multipoly.hpp"

#include "heckehom/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace heckehom {

MultiPoly MultiPoly::constant(int nvars, const Cyclotomic& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_[Exponents(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.t_[e] = Cyclotomic(1);
    return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<Cyclotomic>& coeffs) {
    MultiPoly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.t_[e] = coeffs[i];
    }
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Exponents& e, const Cyclotomic& c) {
    MultiPoly p(nvars);
    if (!c.is_zero()) p.t_[e] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    if (t_.empty()) return true;
    if (t_.size() > 1) return false;
    const auto& e = t_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Cyclotomic MultiPoly::constant_term() const {
    auto it = t_.find(Exponents(nvars_, 0));
    return it == t_.end() ? Cyclotomic(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::set_term(const Exponents& e, const Cyclotomic& c) {
    if (c.is_zero())
        t_.erase(e);
    else
        t_[e] = c;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) {
        auto it = r.t_.find(e);
        if (it == r.t_.end()) {
            r.t_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    if (a.nvars_ != b.nvars_) throw DomainError("polynomial variable-count mismatch");
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("polynomial variable-count mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            MultiPoly::Exponents e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            auto it = r.t_.find(e);
            if (it == r.t_.end()) {
                Cyclotomic c = ca * cb;
                if (!c.is_zero()) r.t_[e] = c;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Cyclotomic& c) const {
    if (c.is_zero()) return MultiPoly(nvars_);
    MultiPoly r = *this;
    for (auto& [e, v] : r.t_) v *= c;
    return r;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    auto ia = a.t_.begin(), ib = b.t_.begin();
    for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ib != b.t_.end();
}

Cyclotomic MultiPoly::eval(const std::vector<Cyclotomic>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DomainError("evaluation point has wrong dimension");
    Cyclotomic acc(0);
    for (const auto& [e, c] : t_) {
        Cyclotomic term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= point[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(int i) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : t_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.t_[d] = c * Cyclotomic(Rational(e[i]));
    }
    return r;
}

MultiPoly MultiPoly::substitute_linear(const ExactMatrix& M) const {
    std::vector<MultiPoly> forms;
    forms.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        std::vector<Cyclotomic> row(nvars_);
        for (int j = 0; j < nvars_; ++j) row[j] = M.at(i, j);
        forms.push_back(MultiPoly::linear_form(row));
    }
    return substitute(forms);
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& forms) const {
    if (static_cast<int>(forms.size()) != nvars_)
        throw DomainError("substitution needs one form per variable");
    const int out_vars = forms.empty() ? 0 : forms[0].nvars();
    MultiPoly acc(out_vars);
    for (const auto& [e, c] : t_) {
        MultiPoly term = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= forms[i];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    MultiPoly rem = num, quot(num.nvars_);
    const auto& lead = *den.t_.rbegin(); // lex-largest term of divisor
    while (!rem.is_zero()) {
        // lex-largest term of the remainder must be divisible by lead
        const auto& top = *rem.t_.rbegin();
        Exponents diff(num.nvars_);
        bool divisible = true;
        for (int i = 0; i < num.nvars_; ++i) {
            diff[i] = top.first[i] - lead.first[i];
            if (diff[i] < 0) divisible = false;
        }
        if (!divisible)
            throw DomainError("exact polynomial division left a remainder");
        MultiPoly factor = MultiPoly::monomial(num.nvars_, diff, top.second / lead.second);
        quot += factor;
        rem -= factor * den;
    }
    return quot;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool is_one = (cs == "1");
        bool plain = cs.find(' ') == std::string::npos;
        bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        if (!has_vars) {
            os << (plain ? cs : "(" + cs + ")");
            continue;
        }
        if (!is_one) os << (plain ? cs : "(" + cs + ")") << "*";
        bool firstv = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!firstv) os << "*";
            firstv = false;
            os << names[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace heckehom
