#pragma once

#include "heckehom/repfam.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heckehom {

/// Parameter k_α: a rational value, or coeff·k with k a polynomial variable.
struct KValue {
    bool symbolic = false;
    Rational value;            // used when rational
    Rational coeff = Rational(1); // used when symbolic (scaled by m_ε)
};

/// Raw root datum of a twisted graded Hecke algebra H(t, WΓ, k, ♮):
/// simple roots as functionals on t (rows), simple coroots as vectors
/// (columns), Γ generators as matrices on t, and a WΓ-invariant k.
struct RootDatum {
    int rank = 0;
    std::vector<std::vector<Rational>> simple_roots;   // α: row functionals
    std::vector<std::vector<Rational>> simple_coroots; // α^∨: column vectors
    std::vector<ExactMatrix> gamma_generators;
    std::vector<KValue> k; // per simple root
    int cocycle_m = 1;
    // exponent table on Γ indexed like the closed Γ group (built at load);
    // empty means trivial.
    std::vector<std::vector<int>> gamma_cocycle_exponents;

    ExactMatrix reflection_matrix(int alpha) const; // s_α = 1 - α^∨·α
};

/// Fully assembled Hecke datum: the group WΓ as matrices on t, the inflated
/// cocycle, fixed lex-smallest reduced words, and the polynomial ring
/// (coordinates of t in the chosen basis, plus a trailing "k" variable when
/// the parameter is symbolic).
class HeckeDatum {
public:
    HeckeDatum() = default;
    explicit HeckeDatum(RootDatum root, int conductor = 1);

    const RootDatum& root() const { return root_; }
    const FiniteGroup& wgamma() const { return wgamma_; }
    const LinearAction& action() const { return action_; }
    const TwoCocycle& cocycle() const { return cocycle_; }
    int rank() const { return root_.rank; }
    int nvars() const { return nvars_; }
    bool symbolic_k() const { return symbolic_k_; }
    const std::vector<std::string>& var_names() const { return var_names_; }

    int simple_reflection(int alpha) const { return s_index_[alpha]; }
    int num_simple() const { return static_cast<int>(s_index_.size()); }
    const std::vector<int>& reduced_word(int u) const { return words_[u]; }
    int gamma_part(int u) const { return gamma_part_[u]; } // wgamma index of the Γ component
    bool in_weyl(int u) const { return gamma_part_[u] == wgamma_.identity(); }

    /// α as a linear form in the polynomial ring.
    MultiPoly root_form(int alpha) const;
    /// k_α as a scalar polynomial (constant or the k variable).
    MultiPoly k_form(int alpha) const;
    /// Rational k_α; throws when symbolic.
    Rational k_value(int alpha) const;
    /// New datum with parameter ε·k (ε rational; symbolic k stays symbolic
    /// with coefficient ε).
    HeckeDatum with_parameter(const Rational& eps) const;

    /// w acting on a polynomial of this ring ((w·f)(λ) = f(w^{-1}λ); the k
    /// variable is untouched).
    MultiPoly act_on_poly(int u, const MultiPoly& f) const;

    /// The k = 0 crossed product O(t) ⋊ C[WΓ,♮] as a TwistedGroupDatum.
    TwistedGroupDatum crossed_datum() const;

    void validate() const;

private:
    RootDatum root_;
    FiniteGroup wgamma_;
    LinearAction action_;
    TwoCocycle cocycle_;
    FiniteGroup gamma_;
    std::vector<int> s_index_;
    std::vector<int> gamma_elems_; // wgamma indices of the Γ complement
    std::vector<std::vector<int>> words_;
    std::vector<int> gamma_part_;
    bool symbolic_k_ = false;
    int nvars_ = 0;
    int conductor_ = 1;
    std::vector<std::string> var_names_;
    std::vector<ExactMatrix> act_ext_; // action matrices extended to the k variable
};

/// Σ f_w T_w in normal form (polynomials on the left, zero terms absent).
class HeckeElement {
public:
    HeckeElement() = default;
    explicit HeckeElement(int nvars) : nvars_(nvars) {}

    static HeckeElement basis(const HeckeDatum& d, int u);
    static HeckeElement poly(const HeckeDatum& d, const MultiPoly& f);
    static HeckeElement term(const HeckeDatum& d, int u, const MultiPoly& f);

    const std::map<int, MultiPoly>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(int u, const MultiPoly& f);

    HeckeElement operator-() const;
    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    HeckeElement scaled(const Cyclotomic& c) const;
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.t_ == b.t_; }

    std::string str(const HeckeDatum& d) const;

private:
    int nvars_ = 0;
    std::map<int, MultiPoly> t_;
};

/// Demazure operator Δ_α f = (f - s_α f)/α; the quotient is always an exact
/// polynomial (asserted).
MultiPoly demazure(const HeckeDatum& d, int alpha, const MultiPoly& f);

/// Normal-form product, rewriting with T_s f = s(f) T_s + k_α Δ_α(f) along
/// the fixed reduced words.
HeckeElement hecke_multiply(const HeckeDatum& d, const HeckeElement& a, const HeckeElement& b);

/// T_u·f as Σ h_w T_w using an explicit reduced word for the Weyl part
/// (exposed so reduced-word independence is testable).
HeckeElement commute_left_with_word(const HeckeDatum& d, const std::vector<int>& word,
                                    int gamma_elem, const MultiPoly& f);

/// m_ε: H(t,WΓ,εk,♮) → H(t,WΓ,k,♮): scales t* by ε, identity on C[WΓ,♮].
/// `a` must be an element of d.with_parameter(eps); the result lives in d.
HeckeElement m_epsilon(const HeckeDatum& d, const Rational& eps, const HeckeElement& a);

/// Conversion to the k = 0 crossed product (polys moved to the right).
TwistedElement to_crossed(const HeckeDatum& d, const HeckeElement& a);

/// Matrix representation of the Hecke algebra: images of T_u for every
/// u ∈ WΓ and of the t-coordinates. `known_weights` carries witness points
/// for the central character when the construction provides them.
struct HeckeRep {
    std::string label;
    int dim = 0;
    std::vector<ExactMatrix> t_mats;  // indexed by wgamma element
    std::vector<ExactMatrix> x_mats;  // per t-coordinate
    std::vector<std::vector<Cyclotomic>> known_weights;

    static HeckeRep from_generators(const HeckeDatum& d,
                                    const std::map<int, ExactMatrix>& reflection_images,
                                    const std::map<int, ExactMatrix>& gamma_images,
                                    std::vector<ExactMatrix> x_images, std::string label = {});
    /// 1-dimensional evaluation representation of O(t) twisted by a sign
    /// character of W (eps_w = ±1 per element), e.g. Steinberg.
    static HeckeRep one_dimensional(const HeckeDatum& d, const std::vector<Cyclotomic>& signs,
                                    const std::vector<Cyclotomic>& point, std::string label = {});

    ExactMatrix poly_matrix(const HeckeDatum& d, const MultiPoly& f) const;
    ExactMatrix element_matrix(const HeckeDatum& d, const HeckeElement& a) const;
    Cyclotomic char_value(const HeckeDatum& d, const HeckeElement& a) const;
};

struct RepCheck {
    bool ok = true;
    std::string reason;
};

/// All defining relations as exact matrix identities: twisted group
/// relations, commuting coordinates, and the cross relation on x_j and
/// x_j·x_l. Requires rational k.
RepCheck is_representation(const HeckeDatum& d, const HeckeRep& rep);

/// Parabolic sub-datum: roots Δ_Q and a subgroup Γ_Q, with the splitting
/// t = t^Q ⊕ t_Q.
struct HeckeParabolic {
    std::string label;
    std::vector<int> root_subset;  // indices into Δ
    std::vector<int> gamma_elems;  // Γ_Q as wgamma element indices (must include identity)

    std::vector<int> subgroup(const HeckeDatum& d) const; // (WΓ)_Q elements
    ExactMatrix t_q_basis(const HeckeDatum& d) const;     // span of the Δ_Q coroots
    ExactMatrix t_up_basis(const HeckeDatum& d) const;    // ∩ ker α ∩ fixed(Γ_Q)
};

/// Finite-dimensional representation σ of the parabolic subalgebra
/// H(t_Q, (WΓ)_Q, k, ♮): T-images per subgroup element (parent indices),
/// t_Q-coordinate images, and an O(t_Q)-character representative cc(σ).
struct ParabolicRep {
    std::string label;
    int dim = 0;
    std::map<int, ExactMatrix> t_mats;
    std::vector<ExactMatrix> x_mats;       // per t_Q basis column
    std::vector<Cyclotomic> central_point; // cc(σ) in t_Q coordinates
};

/// π(Q,σ,λ) = ind_{H^Q}^{H} (C_λ ⊗ σ): basis T_x ⊗ V_σ over coset
/// representatives; T_w acts by twisted coset permutation; polynomials act
/// through normal-form rewriting and C_λ ⊗ σ. All relations verified when
/// check_relations is set.
HeckeRep hecke_induce(const HeckeDatum& d, const HeckeParabolic& Q, const ParabolicRep& sigma,
                      const std::vector<Cyclotomic>& lambda, bool check_relations = false);

struct CentralCharacter {
    bool scalar = false;                      // every invariant acts as a scalar
    std::vector<Cyclotomic> invariant_values; // values on the generating invariants
    std::optional<std::vector<Cyclotomic>> witness; // a point of the orbit, when determined
    std::string str() const;
};

/// Central character via the generating WΓ-invariants (monomial Reynolds
/// averages up to the stabilization bound). Equality of orbits is equality
/// of invariant-value vectors.
CentralCharacter central_character(const HeckeDatum& d, const HeckeRep& rep);

/// The generating invariants used by central_character (exposed for tests).
std::vector<MultiPoly> invariant_generators(const HeckeDatum& d);

/// Family of parabolically induced representations, with σ supplied at every
/// deformation parameter ε (the scenario provides the deformed elliptic
/// representations; the ζ_ε construction itself is external).
struct HeckeFamily {
    std::string label;
    std::string builder; // "trivial" | "steinberg" (for serialization)
    HeckeParabolic parabolic;
    std::function<ParabolicRep(const HeckeDatum& d_eps, const Rational& eps)> sigma_at;

    ParabolicRep sigma(const HeckeDatum& d, const Rational& eps) const;
};

/// Virtual character Σ c_i · tr π_i of H(t,WΓ,εk,♮).
struct HeckeVirtualCharacter {
    Rational eps;
    std::vector<std::pair<Cyclotomic, HeckeRep>> terms;
    Cyclotomic char_value(const HeckeDatum& d_eps, const HeckeElement& x) const;
};

/// ν^ε_{g,v} = Σ_i λ_{g,i} tr π(Q_i, σ_i^{(ε)}, φ_{g,i}(v)), with the
/// coefficients λ, φ solved at k = 0 on the crossed-product datum.
HeckeVirtualCharacter nu_epsilon(const HeckeDatum& d, const std::vector<HeckeFamily>& families,
                                 const SolveResult& coefficients,
                                 const std::vector<Cyclotomic>& v, const Rational& eps);

/// Crossed-product families matching the Hecke families at k = 0 (for the
/// Lemma 2.7 solve and the Eq. 4.6 consistency checks).
std::vector<RepFamily> crossed_families(const HeckeDatum& d,
                                        const std::vector<HeckeFamily>& families);

} // namespace heckehom
