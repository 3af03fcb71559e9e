#pragma once

#include "heckehom/matrix.hpp"
#include "heckehom/multipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace heckehom {

/// Finite group as a Cayley table. Elements are indices 0..order-1.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(mult_.size()); }
    int identity() const { return identity_; }
    int mult(int a, int b) const { return mult_[a][b]; }
    int inverse(int a) const { return inv_[a]; }
    int conj(int h, int g) const { return mult(mult(h, g), inv_[h]); } // h g h^{-1}
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int g) const { return labels_[g]; }
    std::optional<int> index_of_label(const std::string& s) const;

    /// Conjugacy classes ordered by smallest member; each class sorted.
    const std::vector<std::vector<int>>& conjugacy_classes() const;
    int class_of(int g) const;
    int class_rep(int g) const; // smallest-index member of g's class

    std::vector<int> centralizer(int g) const;
    /// Smallest h with h·g·h^{-1} = target, or -1.
    int transporter(int g, int target) const;

    std::vector<int> subgroup_closure(const std::vector<int>& gens) const;
    bool is_subgroup(const std::vector<int>& elems) const;
    /// Left coset representatives [G/H], smallest element index first.
    std::vector<int> coset_reps(const std::vector<int>& subgroup) const;

    /// Exhaustive associativity/identity/inverse validation (order ≤ 64),
    /// sampled above. Throws DomainError on failure.
    void validate() const;

    /// Same group, new element names.
    FiniteGroup with_labels(std::vector<std::string> labels) const;

private:
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    int identity_ = 0;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_index_;
    void build_classes_() const;
};

/// Linear action of a finite group: one exact matrix per element, indexed
/// like the group. Convention fixed project-wide: elements act on points by
/// v ↦ ρ(g)v and on functions by (g·f)(v) = f(g^{-1}v).
class LinearAction {
public:
    LinearAction() = default;
    LinearAction(int dim, std::vector<ExactMatrix> matrices);

    /// Build group + action together by closing generator matrices.
    static std::pair<FiniteGroup, LinearAction> from_generators(
        const std::vector<ExactMatrix>& gens, const std::vector<std::string>& gen_labels = {});

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(mats_.size()); }
    const ExactMatrix& matrix(int g) const { return mats_[g]; }

    std::vector<Cyclotomic> act(int g, const std::vector<Cyclotomic>& v) const {
        return mats_[g].apply(v);
    }
    /// (g·f)(v) = f(g^{-1}v)
    MultiPoly act_on_poly(const FiniteGroup& G, int g, const MultiPoly& f) const {
        return f.substitute_linear(mats_[G.inverse(g)]);
    }
    /// Stabilizer {g : ρ(g)v = v}.
    std::vector<int> stabilizer(const std::vector<Cyclotomic>& v) const;
    /// ρ(gh) = ρ(g)ρ(h) for all pairs, ρ(1) = I. Throws on failure.
    void validate(const FiniteGroup& G) const;

private:
    int dim_ = 0;
    std::vector<ExactMatrix> mats_;
};

struct CocycleViolation {
    int g = -1, h = -1, k = -1; // violating triple (or normalization row with h = k = -1)
};

struct CocycleCheck {
    bool ok = true;
    CocycleViolation violation;
};

/// 2-cocycle with values in the m-th roots of unity, stored as an exponent
/// table: ♮(g,h) = ζ_m^{exponents[g][h]}.
class TwoCocycle {
public:
    TwoCocycle() = default;
    TwoCocycle(int m, std::vector<std::vector<int>> exponents);

    static TwoCocycle trivial(int group_order);
    /// ♮(g,h) = ζ_m^{c(g)+c(h)-c(gh)}: a coboundary (cohomologically trivial).
    static TwoCocycle coboundary(const FiniteGroup& G, int m, const std::vector<int>& c);

    int order_of_values() const { return m_; }
    int size() const { return static_cast<int>(exp_.size()); }
    int exponent(int g, int h) const { return exp_[g][h]; }
    Cyclotomic value(int g, int h) const { return Cyclotomic::root_of_unity(m_, exp_[g][h]); }

    /// ♮^g(h) = T_h T_g T_h^{-1} T_{hgh^{-1}}^{-1} as a root-of-unity exponent.
    int natural_char_exponent(const FiniteGroup& G, int g, int h) const;
    Cyclotomic natural_char(const FiniteGroup& G, int g, int h) const {
        return Cyclotomic::root_of_unity(m_, natural_char_exponent(G, g, h));
    }
    /// ♮^g restricted to the given subgroup is the trivial character.
    bool regular_on(const FiniteGroup& G, int g, const std::vector<int>& subgroup) const;

    /// Restriction to a subgroup (element indices renumbered by position in
    /// elems, which must be sorted).
    TwoCocycle restricted(const std::vector<int>& elems) const;

private:
    int m_ = 1;
    std::vector<std::vector<int>> exp_;
};

/// Cocycle identity ♮(g,h)♮(gh,k) = ♮(h,k)♮(g,hk) for all triples plus the
/// normalization ♮(1,g) = ♮(g,1) = 1. Parallel over the outer index; the
/// serial twin is the testing reference.
CocycleCheck validate_cocycle(const FiniteGroup& G, const TwoCocycle& c);
CocycleCheck validate_cocycle_serial(const FiniteGroup& G, const TwoCocycle& c);

/// Finite group + 2-cocycle + linear action: the scenario datum everything
/// downstream consumes. Plain value type, immutable after construction.
struct TwistedGroupDatum {
    FiniteGroup group;
    TwoCocycle cocycle;
    LinearAction action;
    int conductor = 1; // lcm of cocycle order and character orders, fixed at load
    std::vector<std::string> var_names;

    int dim() const { return action.dim(); }
    Cyclotomic cocycle_value(int g, int h) const { return cocycle.value(g, h); }
    Cyclotomic nat_char(int g, int h) const { return cocycle.natural_char(group, g, h); }
    MultiPoly act_poly(int g, const MultiPoly& f) const {
        return action.act_on_poly(group, g, f);
    }
    void validate() const;
};

} // namespace heckehom
