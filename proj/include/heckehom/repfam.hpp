#pragma once

#include "heckehom/orbiforms.hpp"
#include "heckehom/twisted.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace heckehom {

/// Parabolic pair: subgroup G_P with a G_P-stable splitting V = V_P ⊕ V^P,
/// V^P pointwise fixed by G_P.
struct ParabolicDatum {
    std::string label;
    std::vector<int> subgroup;  // G_P, sorted element indices
    ExactMatrix v_p;            // basis of V_P (columns)
    ExactMatrix v_up;           // basis of V^P (columns)

    int param_dim() const { return v_up.cols(); }
    void validate(const TwistedGroupDatum& d) const;
};

/// Elliptic representation δ of O(V_P) ⋊ C[G_P,♮]: finite dimensional,
/// O(V_P) acting via evaluation at 0, T_g images given per element of G_P.
/// The map is keyed by parent-group element indices.
struct EllipticRep {
    std::string label;
    int dim = 0;
    std::map<int, ExactMatrix> matrices;

    const ExactMatrix& at(int g) const;
    void validate(const TwistedGroupDatum& d, const ParabolicDatum& P) const;
};

struct RepFamily {
    std::string label;
    ParabolicDatum parabolic;
    EllipticRep delta;

    int param_dim() const { return parabolic.param_dim(); }
};

/// π(P,δ,v) = ind_{O(V)⋊C[G_P,♮]}^{O(V)⋊C[G,♮]} (C_v ⊗ δ) with explicit
/// matrices: T_g permutes the coset blocks with cocycle factors, and a
/// function f acts diagonally by f(x_c·v) on the block of coset rep x_c.
class InducedRep {
public:
    InducedRep(const TwistedGroupDatum& d, const RepFamily& fam, std::vector<Cyclotomic> v,
               bool check_relations = false);

    int dim() const { return dim_; }
    const std::vector<Cyclotomic>& point() const { return v_; }
    const RepFamily& family() const { return *fam_; }
    const std::vector<int>& cosets() const { return cosets_; }

    ExactMatrix t_matrix(const TwistedGroupDatum& d, int g) const;
    ExactMatrix poly_matrix(const MultiPoly& f) const;
    ExactMatrix matrix(const TwistedGroupDatum& d, const TwistedElement& x) const;
    Cyclotomic char_value(const TwistedGroupDatum& d, const TwistedElement& x) const;

    /// All defining relations as matrix identities (group relations with
    /// cocycle; coordinate conjugation). Throws on violation.
    void verify_relations(const TwistedGroupDatum& d) const;

private:
    std::shared_ptr<const RepFamily> fam_;
    std::vector<Cyclotomic> v_;
    std::vector<int> cosets_;
    std::vector<std::vector<Cyclotomic>> block_points_; // x_c·v
    int dim_ = 0;
    int delta_dim_ = 0;
};

/// Formal C-combination of induced representations; evaluation is linear.
struct VirtualCharacter {
    std::vector<std::pair<Cyclotomic, std::shared_ptr<const InducedRep>>> terms;

    void add(const Cyclotomic& c, std::shared_ptr<const InducedRep> rep);
    Cyclotomic char_value(const TwistedGroupDatum& d, const TwistedElement& x) const;
};

InducedRep induce(const TwistedGroupDatum& d, const RepFamily& fam,
                  const std::vector<Cyclotomic>& v);

/// ν_{g,v} as a concrete functional (Eq. 2.29 normalization extended over the
/// full centralizer). Requires g relevant; the stabilizer condition
/// G_v ∩ Z_G(g) ⊆ ker ♮^g is enforced unless `formal`.
TraceFunctional nu_functional(const TwistedGroupDatum& d, int g,
                              const std::vector<Cyclotomic>& v, bool formal = false);

Cyclotomic nu_eval(const TwistedGroupDatum& d, int g, const std::vector<Cyclotomic>& v,
                   const TwistedElement& x, bool formal = false);

/// Group elements w with w(V^g) ⊆ V^P, ascending; empty when
/// dim V^g > dim V^P.
std::vector<int> find_transporters(const TwistedGroupDatum& d, int g, const ParabolicDatum& P);

/// Deterministic generic rational points of the column span of `basis`:
/// stabilizer equals the pointwise stabilizer of the whole subspace and all
/// proper intersections V^h ∩ span are avoided.
std::vector<std::vector<Cyclotomic>> generic_points(const TwistedGroupDatum& d,
                                                    const ExactMatrix& basis, int count,
                                                    std::uint64_t seed);

struct SolvedCoefficient {
    std::string family_label;
    Cyclotomic lambda;
    int phi = -1; // group element giving φ_{g,i}, or -1 when λ = 0 structurally
};

struct SolveResult {
    int g = -1;
    std::vector<SolvedCoefficient> coefficients;
};

/// Lemma 2.7 solver: λ_{g,i} and φ_{g,i} with
/// ν_{g,v} = Σ_i λ_{g,i} tr π(P_i,δ_i,φ_{g,i}(v)), solved exactly on a
/// rank-stabilized element sample at deterministic generic points and
/// verified on a fresh sample. Families must be a minimal spanning set.
SolveResult solve_coefficients(const TwistedGroupDatum& d, const std::vector<RepFamily>& families,
                               int g, std::uint64_t seed);

struct SelectionResult {
    std::vector<RepFamily> kept;
    std::vector<std::string> kept_labels;
};

/// Greedy minimal-family selection by descending parameter dimension; a
/// candidate is kept iff its character at generic points is independent of
/// the already-kept members with matching central character. Verifies the
/// spanning/irredundancy bullets afterwards.
SelectionResult select_minimal_families(const TwistedGroupDatum& d,
                                        const std::vector<RepFamily>& candidates,
                                        std::uint64_t seed);

struct MembershipResult {
    bool ok = true;
    std::string violated_relation; // empty when ok
};

/// Theorem 2.6.b membership: ω (one polynomial per family parameter space,
/// in that family's V^P coordinates) respects every linear relation between
/// family members found by exact character-nullspace at sampled points.
MembershipResult verify_hh0_membership(const TwistedGroupDatum& d,
                                       const std::vector<RepFamily>& families,
                                       const std::vector<MultiPoly>& omega, std::uint64_t seed);

} // namespace heckehom
