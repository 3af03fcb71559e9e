#pragma once

#include "heckehom/group.hpp"

#include <map>
#include <optional>

namespace heckehom {

/// Element Σ T_g·f_g of O(V) ⋊ C[G,♮] (polys on the right; constant polys
/// when used as a pure twisted-group-algebra element).
class TwistedElement {
public:
    TwistedElement() = default;
    explicit TwistedElement(int nvars) : nvars_(nvars) {}

    static TwistedElement basis(const TwistedGroupDatum& d, int g); // T_g
    static TwistedElement poly(const TwistedGroupDatum& d, const MultiPoly& f); // T_1·f
    static TwistedElement term(const TwistedGroupDatum& d, int g, const MultiPoly& f);

    int nvars() const { return nvars_; }
    const std::map<int, MultiPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(int g, const MultiPoly& f);

    TwistedElement operator-() const;
    friend TwistedElement operator+(const TwistedElement& a, const TwistedElement& b);
    friend TwistedElement operator-(const TwistedElement& a, const TwistedElement& b);
    TwistedElement scaled(const Cyclotomic& c) const;
    friend bool operator==(const TwistedElement& a, const TwistedElement& b) {
        return a.t_ == b.t_;
    }

    std::string str(const TwistedGroupDatum& d) const;

private:
    int nvars_ = 0;
    std::map<int, MultiPoly> t_;
};

/// (T_g f)(T_h f') = ♮(g,h) T_{gh} (h^{-1}·f)·f', extended bilinearly.
TwistedElement twisted_multiply(const TwistedElement& a, const TwistedElement& b,
                                const TwistedGroupDatum& d);

/// T_h x T_h^{-1}
TwistedElement twisted_conjugate(const TwistedElement& x, int h, const TwistedGroupDatum& d);

/// Linear functional on twisted elements supported on one conjugacy class:
/// ν_g of Lemma-2.3 type when base_point is absent, ν_{g,v} when present.
/// Weight at a conjugate g' = h g h^{-1} is ♮^g(h)^{-1}; with a base point the
/// polynomial part is folded in by the ♮^{g'}-twisted average over Z_G(g')
/// of evaluations along the orbit of the transported point.
struct TraceFunctional {
    int class_id = -1;
    int rep = -1; // class representative g
    std::optional<std::vector<Cyclotomic>> base_point; // v ∈ V^g, ambient coordinates
    std::map<int, Cyclotomic> weights; // per class member

    Cyclotomic eval(const TwistedElement& x, const TwistedGroupDatum& d) const;
};

/// Number of ♮-regular conjugacy classes = |Irr C[G,♮]| (Lemma 2.3.b).
int count_irreps(const TwistedGroupDatum& d);

/// dim Z(C[G,♮]) by exact nullspace of [x, T_h] = 0 for all h. Independent
/// cross-check of count_irreps (the algebra is semisimple).
int center_dimension_oracle(const TwistedGroupDatum& d);

/// One ν_g per ♮-regular class, normalized ν_g(T_g) = 1.
std::vector<TraceFunctional> trace_basis(const TwistedGroupDatum& d);

} // namespace heckehom
