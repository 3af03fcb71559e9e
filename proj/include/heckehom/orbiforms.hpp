#pragma once

#include "heckehom/ratfun.hpp"
#include "heckehom/twisted.hpp"

#include <map>
#include <string>
#include <vector>

namespace heckehom {

/// V^g = ker(ρ(g) - 1) with its centralizer data.
struct FixedSpace {
    int g = -1;
    ExactMatrix basis;                  // dim(V) × d, columns span V^g
    std::vector<int> centralizer;       // Z_G(g)
    std::vector<int> pointwise_stabilizer; // Z_G(g, V^g)

    int dim() const { return basis.cols(); }
    /// Matrix of ρ(h) restricted to V^g in the basis columns (h must
    /// centralize g).
    ExactMatrix restriction(const TwistedGroupDatum& d, int h) const;
    /// Coordinates of an ambient point lying in V^g.
    std::vector<Cyclotomic> coordinates(const std::vector<Cyclotomic>& ambient) const;
    std::vector<Cyclotomic> embed(const std::vector<Cyclotomic>& coords) const;
    bool contains(const std::vector<Cyclotomic>& ambient) const;
};

FixedSpace fixed_space(const TwistedGroupDatum& d, int g);

/// HH(A)-relevance dichotomy: g is relevant iff ♮^g is trivial on Z_G(g,V^g).
bool relevant(const TwistedGroupDatum& d, int g);

/// Graded dimension series of (Ω^n(V^g) ⊗ ♮^g)^{Z_G(g)}, graded by
/// polynomial coefficient degree (form generators in degree 0):
///   (1/|Z_G(g)|) Σ_{h∈Z_G(g)} ♮^g(h) · [s^n] det(1 + s·A_h) / det(1 - t·A_h)
/// with A_h the restriction of ρ(h^{-1}) to V^g. The exterior trace comes
/// from det(1 + s·M) = Σ_n s^n tr Λ^n M, keeping everything exact.
RationalFunction hh_summand_series(const TwistedGroupDatum& d, int g, int n);

struct HHClassEntry {
    int class_id = -1;
    int rep = -1;
    std::string label;
    bool relevant = false;
    RationalFunction series;
};

struct HHReport {
    int degree = 0;
    std::vector<HHClassEntry> entries; // one per conjugacy class, by class id
    RationalFunction total;
};

/// Per-class summands of HH_n(O(V) ⋊ C[G,♮]) and their sum. Classes are
/// independent; computed with the parallel kernel (serial twin below).
HHReport hh_report(const TwistedGroupDatum& d, int n);
HHReport hh_report_serial(const TwistedGroupDatum& d, int n);

/// Differential n-form on V^g in fixed-space coordinates: Σ_I f_I dy_I with
/// sorted index subsets I.
struct DifferentialForm {
    int dim = 0;    // dim V^g
    int degree = 0; // n
    std::map<std::vector<int>, MultiPoly> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& subset, const MultiPoly& f);
    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm scaled(const Cyclotomic& c) const;
    /// Pullback along the linear map y ↦ M·y (coefficients composed with M,
    /// dy_I expanded through minors of M).
    DifferentialForm pullback(const ExactMatrix& M) const;
    /// Evaluate all coefficient polynomials at a point; returns the component
    /// vector indexed by sorted subsets of {0..dim-1} of size `degree`.
    std::vector<Cyclotomic> eval(const std::vector<Cyclotomic>& point) const;
    std::string str(const std::string& var_prefix = "u") const;
};

/// Monomial basis forms y^a dy_I with |a| = coeff_degree, |I| = n.
std::vector<DifferentialForm> monomial_forms(int dim, int n, int coeff_degree);

/// ♮^g-twisted Reynolds average over Z_G(g):
///   ω ↦ (1/|Z_G(g)|) Σ_h ♮^g(h) · h·ω   with h·ω = (h^{-1})^*ω.
DifferentialForm reynolds_average(const TwistedGroupDatum& d, const FixedSpace& fs,
                                  const DifferentialForm& omega);

/// Basis of the twisted-invariant n-forms with coefficient degree ≤ max_degree,
/// via Reynolds averaging of monomial forms and exact rank selection.
/// Parallel over candidates; serial twin for tests.
std::vector<DifferentialForm> invariant_form_basis(const TwistedGroupDatum& d, int g, int n,
                                                   int max_degree);
std::vector<DifferentialForm> invariant_form_basis_serial(const TwistedGroupDatum& d, int g,
                                                          int n, int max_degree);

/// |{classes of G_v with ♮^g trivial on the class rep's centralizer in G_v}|
/// = number of irreducibles with central character Gv (Lemma 2.4).
int irreps_at_orbit(const TwistedGroupDatum& d, const std::vector<Cyclotomic>& v);

struct SpecializeResult {
    int dimension = 0;
    bool stabilized = true;
    int used_degree = 0;
};

/// Dimension of the evaluation image of the invariant-form bases at the orbit
/// of v (specialization of HH_n at Gv). max_degree grows until the rank is
/// steady twice, capped at 2|G|.
SpecializeResult specialize_hh(const TwistedGroupDatum& d, int n, const std::vector<Cyclotomic>& v);

/// Datum of a subgroup with the restricted cocycle and action (elements
/// renumbered by position in elems, which must be sorted and closed).
TwistedGroupDatum restrict_to_subgroup(const TwistedGroupDatum& d, const std::vector<int>& elems);

} // namespace heckehom
