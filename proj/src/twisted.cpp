#include "heckehom/twisted.hpp"

#include <sstream>

namespace heckehom {

TwistedElement TwistedElement::basis(const TwistedGroupDatum& d, int g) {
    return term(d, g, MultiPoly::constant(static_cast<int>(d.var_names.size()), Cyclotomic(1)));
}

TwistedElement TwistedElement::poly(const TwistedGroupDatum& d, const MultiPoly& f) {
    return term(d, d.group.identity(), f);
}

TwistedElement TwistedElement::term(const TwistedGroupDatum& d, int g, const MultiPoly& f) {
    (void)d;
    TwistedElement x(f.nvars());
    if (!f.is_zero()) x.t_[g] = f;
    return x;
}

void TwistedElement::add_term(int g, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto it = t_.find(g);
    if (it == t_.end()) {
        t_[g] = f;
        nvars_ = f.nvars();
    } else {
        it->second += f;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TwistedElement TwistedElement::operator-() const {
    TwistedElement r = *this;
    for (auto& [g, f] : r.t_) f = -f;
    return r;
}

TwistedElement operator+(const TwistedElement& a, const TwistedElement& b) {
    TwistedElement r = a;
    for (const auto& [g, f] : b.t_) r.add_term(g, f);
    return r;
}

TwistedElement operator-(const TwistedElement& a, const TwistedElement& b) { return a + (-b); }

TwistedElement TwistedElement::scaled(const Cyclotomic& c) const {
    TwistedElement r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [g, f] : t_) r.t_[g] = f.scaled(c);
    return r;
}

std::string TwistedElement::str(const TwistedGroupDatum& d) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, f] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "T[" << d.group.label(g) << "]*(" << f.str(d.var_names) << ")";
    }
    return os.str();
}

TwistedElement twisted_multiply(const TwistedElement& a, const TwistedElement& b,
                                const TwistedGroupDatum& d) {
    TwistedElement r(a.nvars());
    for (const auto& [g, f] : a.terms())
        for (const auto& [h, fp] : b.terms()) {
            // (T_g f)(T_h f') = ♮(g,h) T_{gh} (h^{-1}·f)·f'
            int gh = d.group.mult(g, h);
            MultiPoly moved = d.act_poly(d.group.inverse(h), f);
            r.add_term(gh, (moved * fp).scaled(d.cocycle_value(g, h)));
        }
    return r;
}

TwistedElement twisted_conjugate(const TwistedElement& x, int h, const TwistedGroupDatum& d) {
    // T_h^{-1} = ♮(h,h^{-1})^{-1} T_{h^{-1}}
    TwistedElement th = TwistedElement::basis(d, h);
    TwistedElement thinv = TwistedElement::basis(d, d.group.inverse(h))
                               .scaled(d.cocycle_value(h, d.group.inverse(h)).inverse());
    return twisted_multiply(twisted_multiply(th, x, d), thinv, d);
}

Cyclotomic TraceFunctional::eval(const TwistedElement& x, const TwistedGroupDatum& d) const {
    Cyclotomic acc(0);
    for (const auto& [gp, f] : x.terms()) {
        auto wit = weights.find(gp);
        if (wit == weights.end()) continue; // outside the support class
        if (!base_point) {
            acc += wit->second * f.constant_term();
            continue;
        }
        // ν_{g,v}(T_{g'}f) = ♮^g(w)^{-1} · (1/|Z_G(g')|) Σ_{h∈Z_G(g')} ♮^{g'}(h) f(h^{-1}·wv)
        // with w the stored canonical transporter folded into the weight.
        int w = d.group.transporter(rep, gp);
        std::vector<Cyclotomic> moved = d.action.act(w, *base_point);
        std::vector<int> Z = d.group.centralizer(gp);
        Cyclotomic avg(0);
        for (int h : Z)
            avg += d.nat_char(gp, h) * f.eval(d.action.act(d.group.inverse(h), moved));
        acc += wit->second * avg / Cyclotomic(Rational(static_cast<long>(Z.size())));
    }
    return acc;
}

int count_irreps(const TwistedGroupDatum& d) {
    int count = 0;
    for (const auto& cls : d.group.conjugacy_classes()) {
        int g = cls.front();
        if (d.cocycle.regular_on(d.group, g, d.group.centralizer(g))) ++count;
    }
    return count;
}

int center_dimension_oracle(const TwistedGroupDatum& d) {
    const int n = d.group.order();
    // Unknown x = Σ_g c_g T_g; impose x·T_h = T_h·x for every h by comparing
    // the coefficient of each T_k.
    std::vector<std::vector<Cyclotomic>> rows;
    rows.reserve(static_cast<std::size_t>(n) * n);
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
            std::vector<Cyclotomic> row(n, Cyclotomic(0));
            int g_left = d.group.mult(k, d.group.inverse(h)); // g·h = k
            row[g_left] += d.cocycle_value(g_left, h);
            int g_right = d.group.mult(d.group.inverse(h), k); // h·g = k
            row[g_right] -= d.cocycle_value(h, g_right);
            rows.push_back(std::move(row));
        }
    ExactMatrix M = ExactMatrix::from_rows(rows);
    return n - M.rank();
}

std::vector<TraceFunctional> trace_basis(const TwistedGroupDatum& d) {
    std::vector<TraceFunctional> basis;
    const auto& classes = d.group.conjugacy_classes();
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        int g = classes[ci].front();
        if (!d.cocycle.regular_on(d.group, g, d.group.centralizer(g))) continue;
        TraceFunctional nu;
        nu.class_id = static_cast<int>(ci);
        nu.rep = g;
        for (int gp : classes[ci]) {
            int h = d.group.transporter(g, gp);
            // ν_g(T_{hgh^{-1}}) = ♮^g(h)^{-1}; well-defined by ♮-regularity.
            nu.weights[gp] = d.nat_char(g, h).inverse();
        }
        basis.push_back(std::move(nu));
    }
    return basis;
}

} // namespace heckehom
