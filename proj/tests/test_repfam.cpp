#include "heckehom/repfam.hpp"
#include "heckehom/scenario.hpp"

#include <doctest.h>

#include <random>

using namespace heckehom;

namespace {

constexpr std::uint64_t kSeed = 0x5eed0001;

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<Cyclotomic> pt(long a, long b) {
    return {Cyclotomic(Rational(a)), Cyclotomic(Rational(b))};
}

const RepFamily& family(const Scenario& s, const std::string& label) {
    for (const auto& f : s.families)
        if (f.label == label) return f;
    throw std::runtime_error("no family " + label);
}

// All T_g·(monomials of degree ≤ D), deterministic order.
std::vector<TwistedElement> sample_elements(const TwistedGroupDatum& d, int D) {
    std::vector<TwistedElement> out;
    const int nv = static_cast<int>(d.var_names.size());
    for (int g = 0; g < d.group.order(); ++g)
        for (int dx = 0; dx <= D; ++dx)
            for (int dy = 0; dy + dx <= D; ++dy) {
                MultiPoly::Exponents e{dx, dy};
                out.push_back(TwistedElement::term(d, g, MultiPoly::monomial(nv, e, Cyclotomic(1))));
            }
    return out;
}

} // namespace

TEST_CASE("induction dimensions and relations (Example 2.B)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    InducedRep pi_triv = induce(d, family(s, "triv"), pt(0, 3));
    CHECK(pi_triv.dim() == 4);
    InducedRep pi_i = induce(d, family(s, "delta_i"), pt(0, 3));
    CHECK(pi_i.dim() == 2);
    // full parabolic: dim preserved
    InducedRep pi_m2 = induce(d, family(s, "m2"), pt(0, 0));
    CHECK(pi_m2.dim() == 2);
    // point outside V^P rejected
    CHECK_THROWS_AS(induce(d, family(s, "delta_i"), pt(1, 3)), DomainError);
}

TEST_CASE("character evaluation basics") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    InducedRep pi = induce(d, family(s, "delta_i"), pt(0, 3));
    // char(T_1) = dim
    CHECK(pi.char_value(d, TwistedElement::basis(d, 0)) == Cyclotomic(Rational(2)));
    // hand oracle: tr π(i,δ_i,(0,y))(T_i·z2) = 2i·y; tr π(T_i) = 0
    MultiPoly z2 = MultiPoly::variable(2, 1);
    Cyclotomic two_i_y = Cyclotomic::root_of_unity(4, 1) * Cyclotomic(Rational(6));
    CHECK(pi.char_value(d, TwistedElement::term(d, 1, z2)) == two_i_y);
    CHECK(pi.char_value(d, TwistedElement::basis(d, 1)) == Cyclotomic(0));
    // no coset fixed: zero trace
    CHECK(pi.char_value(d, TwistedElement::basis(d, 2)) == Cyclotomic(0));
    CHECK(pi.char_value(d, TwistedElement::basis(d, 3)) == Cyclotomic(0));
    // class-function property: tr π(T_h x T_h^{-1}) = tr π(x)
    std::mt19937_64 rng(42);
    for (int t = 0; t < 30; ++t) {
        TwistedElement x(2);
        for (int k = 0; k < 3; ++k) {
            MultiPoly::Exponents e{static_cast<int>(rand_range(rng, 0, 2)),
                                   static_cast<int>(rand_range(rng, 0, 2))};
            x.add_term(static_cast<int>(rand_range(rng, 0, 3)),
                       MultiPoly::monomial(2, e, Cyclotomic(Rational(rand_range(rng, -3, 3)))));
        }
        int h = static_cast<int>(rand_range(rng, 0, 3));
        CHECK(pi.char_value(d, twisted_conjugate(x, h, d)) == pi.char_value(d, x));
    }
    // restriction to C[G,♮] is independent of the induction point
    InducedRep pi2 = induce(d, family(s, "delta_i"), pt(0, -5));
    for (int g = 0; g < 4; ++g)
        CHECK(pi.char_value(d, TwistedElement::basis(d, g)) ==
              pi2.char_value(d, TwistedElement::basis(d, g)));
}

TEST_CASE("Example 2.B character relations") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto elements = sample_elements(d, 4);
    // π(∅,triv,v_i) = π(i,δ_i,v_i) + π(i,δ_i,-v_i) for v_i ∈ V^i
    InducedRep lhs = induce(d, family(s, "triv"), pt(0, 3));
    InducedRep r1 = induce(d, family(s, "delta_i"), pt(0, 3));
    InducedRep r2 = induce(d, family(s, "delta_i"), pt(0, -3));
    for (const auto& x : elements)
        CHECK(lhs.char_value(d, x) == r1.char_value(d, x) + r2.char_value(d, x));
    // and the δ_{-i} route gives the same second member
    InducedRep r2b = induce(d, family(s, "delta_-i"), pt(0, 3));
    for (const auto& x : elements) CHECK(r2.char_value(d, x) == r2b.char_value(d, x));
    // π(∅,triv,0) = 2·π(i,δ_i,0)
    InducedRep l0 = induce(d, family(s, "triv"), pt(0, 0));
    InducedRep r0 = induce(d, family(s, "delta_i"), pt(0, 0));
    for (const auto& x : elements)
        CHECK(l0.char_value(d, x) == Cyclotomic(Rational(2)) * r0.char_value(d, x));
    // the j-analogue
    InducedRep lj = induce(d, family(s, "triv"), pt(3, 0));
    InducedRep rj1 = induce(d, family(s, "delta_j"), pt(3, 0));
    InducedRep rj2 = induce(d, family(s, "delta_j"), pt(-3, 0));
    for (const auto& x : elements)
        CHECK(lj.char_value(d, x) == rj1.char_value(d, x) + rj2.char_value(d, x));
}

TEST_CASE("nu functional: support, formal extension, equivariance") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    // ν_{g,v}(T_{g'}f) = 0 for g' not conjugate to g
    TraceFunctional nu_i = nu_functional(d, 1, pt(0, 3));
    CHECK(nu_i.eval(TwistedElement::basis(d, 0), d) == Cyclotomic(0));
    CHECK(nu_i.eval(TwistedElement::basis(d, 2), d) == Cyclotomic(0));
    // Eq. 2.29 at g = ±i, v = (0,y): ν(T_i·f) = (f(v) - f(-v))/2, so the
    // constant term dies and z2 picks out y
    CHECK(nu_i.eval(TwistedElement::basis(d, 1), d) == Cyclotomic(0));
    CHECK(nu_i.eval(TwistedElement::term(d, 1, MultiPoly::variable(2, 1)), d) ==
          Cyclotomic(Rational(3)));
    // irrelevant class rejected
    CHECK_THROWS_AS(nu_functional(d, 3, pt(0, 0)), DomainError);
    // stabilizer condition at v = 0 for g = ±i: error unless formal
    CHECK_THROWS_AS(nu_functional(d, 1, pt(0, 0)), DomainError);
    // formal extension: ν_{±i,0} = 0 identically, ν_{±1,0} ≠ 0
    TraceFunctional nu_i0 = nu_functional(d, 1, pt(0, 0), true);
    auto elements = sample_elements(d, 3);
    for (const auto& x : elements) CHECK(nu_i0.eval(x, d) == Cyclotomic(0));
    TraceFunctional nu_10 = nu_functional(d, 0, pt(0, 0));
    CHECK(nu_10.eval(TwistedElement::basis(d, 0), d) == Cyclotomic(1));
    // trivial cocycle, g = identity: ν_{1,v}(T_1 f) = (1/|G|) Σ f(h^{-1} v)
    Scenario d4 = preset_scenario("d4");
    TraceFunctional nu_e = nu_functional(d4.datum, d4.datum.group.identity(), pt(1, 2));
    MultiPoly z1z2 = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    Cyclotomic expect(0);
    for (int h = 0; h < 8; ++h)
        expect += z1z2.eval(d4.datum.action.act(d4.datum.group.inverse(h), pt(1, 2)));
    expect = expect / Cyclotomic(Rational(8));
    CHECK(nu_e.eval(TwistedElement::poly(d4.datum, z1z2), d4.datum) == expect);

    // Eq. 2.16 equivariance on random samples across twisted scenarios
    std::mt19937_64 rng(kSeed);
    for (const char* name : {"quaternion", "d4-twisted"}) {
        Scenario sc = preset_scenario(name);
        const TwistedGroupDatum& dd = sc.datum;
        auto els = sample_elements(dd, 2);
        int cases = 0;
        while (cases < 200) {
            int g = static_cast<int>(rand_range(rng, 0, dd.group.order() - 1));
            if (!relevant(dd, g)) continue;
            FixedSpace fs = fixed_space(dd, g);
            if (fs.dim() == 0) continue;
            std::vector<Cyclotomic> coords(fs.dim());
            for (auto& c : coords) c = Cyclotomic(Rational(rand_range(rng, -4, 4)));
            auto v = fs.embed(coords);
            int h = static_cast<int>(rand_range(rng, 0, dd.group.order() - 1));
            TraceFunctional nu_gv = nu_functional(dd, g, v, true);
            TraceFunctional nu_conj =
                nu_functional(dd, dd.group.conj(h, g), dd.action.act(h, v), true);
            const auto& x = els[static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(els.size()) - 1))];
            CHECK(nu_conj.eval(x, dd) == dd.nat_char(g, h) * nu_gv.eval(x, dd));
            ++cases;
        }
    }
}

TEST_CASE("transporters") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    // g = identity, P = ∅ (V^P = V): every group element
    CHECK(find_transporters(d, 0, family(s, "triv").parabolic) == std::vector<int>{0, 1, 2, 3});
    // V^{±i} into V^i: elements preserving the z2-axis = all of the Klein group
    CHECK(find_transporters(d, 1, family(s, "delta_i").parabolic) == std::vector<int>{0, 1, 2, 3});
    // dim V^g = 1 > dim V^P = 0: empty; and axis to other axis: empty
    CHECK(find_transporters(d, 1, family(s, "m2").parabolic).empty());
    CHECK(find_transporters(d, 1, family(s, "delta_j").parabolic).empty());
    // dim V^g = 2 > 1
    CHECK(find_transporters(d, 0, family(s, "delta_i").parabolic).empty());
}

TEST_CASE("minimal family selection keeps three quaternion families") {
    Scenario s = preset_scenario("quaternion");
    SelectionResult sel = select_minimal_families(s.datum, s.families, kSeed);
    CHECK(sel.kept_labels == std::vector<std::string>{"triv", "delta_i", "delta_j"});
    // trivial group: the single family C_v survives
    TwistedGroupDatum triv;
    triv.group = FiniteGroup({{0}}, {"e"});
    triv.cocycle = TwoCocycle::trivial(1);
    triv.action = LinearAction(1, {ExactMatrix::identity(1)});
    triv.conductor = 1;
    triv.var_names = {"z"};
    RepFamily f;
    f.label = "triv";
    f.parabolic = {"empty", {0}, ExactMatrix(1, 0), ExactMatrix::identity(1)};
    f.delta = {"triv", 1, {{0, ExactMatrix::identity(1)}}};
    SelectionResult sel2 = select_minimal_families(triv, {f}, kSeed);
    CHECK(sel2.kept_labels == std::vector<std::string>{"triv"});
}

TEST_CASE("coefficient solver reproduces Example 2.B") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto kept = select_minimal_families(d, s.families, kSeed).kept;
    REQUIRE(kept.size() == 3);

    Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
    // 4ν_{±1,v} = π(∅,triv,v): λ = 1/4 on the trivial family
    SolveResult r1 = solve_coefficients(d, kept, 0, kSeed);
    CHECK(r1.coefficients[0].lambda == Cyclotomic(Rational(1, 4)));
    CHECK(r1.coefficients[1].lambda == Cyclotomic(0));
    CHECK(r1.coefficients[2].lambda == Cyclotomic(0));
    // 4ν_{±i,v} = -2i·π(i,δ_i,v) + i·π(∅,triv,v)
    SolveResult ri = solve_coefficients(d, kept, 1, kSeed);
    CHECK(ri.coefficients[0].lambda == i4 * Cyclotomic(Rational(1, 4)));
    CHECK(ri.coefficients[1].lambda == -i4 * Cyclotomic(Rational(1, 2)));
    CHECK(ri.coefficients[2].lambda == Cyclotomic(0));
    CHECK(ri.coefficients[0].phi == 0);
    CHECK(ri.coefficients[1].phi == 0);
    // the ±j analogue
    SolveResult rj = solve_coefficients(d, kept, 2, kSeed);
    CHECK(rj.coefficients[0].lambda == i4 * Cyclotomic(Rational(1, 4)));
    CHECK(rj.coefficients[1].lambda == Cyclotomic(0));
    CHECK(rj.coefficients[2].lambda == -i4 * Cyclotomic(Rational(1, 2)));

    // functional identity on all elements T_g·f with deg f ≤ 4, several v
    auto elements = sample_elements(d, 4);
    for (long y : {2L, -3L, 5L}) {
        auto v = pt(0, y);
        TraceFunctional nu = nu_functional(d, 1, v);
        InducedRep p0 = induce(d, kept[0], v);
        InducedRep p1 = induce(d, kept[1], v);
        for (const auto& x : elements) {
            Cyclotomic rhs = ri.coefficients[0].lambda * p0.char_value(d, x) +
                             ri.coefficients[1].lambda * p1.char_value(d, x);
            CHECK(nu.eval(x, d) == rhs);
        }
    }

    // rank-deficient pool (both δ_i and δ_{-i}) is reported, naming the
    // undetermined direction
    CHECK_THROWS_WITH_AS(solve_coefficients(d, s.families, 1, kSeed),
                         doctest::Contains("rank-deficient"), DomainError);
}

TEST_CASE("projection property on the dihedral preset (Prop. 2.8 consequence)") {
    Scenario s = preset_scenario("d4");
    const TwistedGroupDatum& d = s.datum;
    auto kept = select_minimal_families(d, s.families, kSeed).kept;
    auto elements = sample_elements(d, 4);
    for (const auto& cls : d.group.conjugacy_classes()) {
        int g = cls.front();
        SolveResult r = solve_coefficients(d, kept, g, kSeed);
        FixedSpace fs = fixed_space(d, g);
        auto pts = generic_points(d, fs.basis, 2, kSeed + 5);
        for (const auto& v : pts) {
            std::vector<InducedRep> reps;
            std::vector<Cyclotomic> lambdas;
            for (std::size_t i = 0; i < kept.size(); ++i) {
                if (r.coefficients[i].lambda.is_zero()) continue;
                reps.emplace_back(d, kept[i], d.action.act(r.coefficients[i].phi, v), false);
                lambdas.push_back(r.coefficients[i].lambda);
            }
            TraceFunctional nu = nu_functional(d, g, v);
            for (const auto& x : elements) {
                Cyclotomic combo(0);
                for (std::size_t i = 0; i < reps.size(); ++i)
                    combo += lambdas[i] * reps[i].char_value(d, x);
                // annihilates other classes and reproduces the twisted
                // average on the class of g
                CHECK(combo == nu.eval(x, d));
            }
        }
    }
}

TEST_CASE("HH0 membership checking (Theorem 2.6.b)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto kept = select_minimal_families(d, s.families, kSeed).kept;
    // ω = characters of the fixed element a = T_1·z2²
    MultiPoly z2sq = MultiPoly::variable(2, 1) * MultiPoly::variable(2, 1);
    // tr π(∅,triv,(u1,u2))(a) = 4u2², tr π(i,δ_i,(0,c))(a) = 2c², tr π(j,...) = 0
    std::vector<MultiPoly> omega;
    omega.push_back(MultiPoly::monomial(2, {0, 2}, Cyclotomic(Rational(4))));
    omega.push_back(MultiPoly::monomial(1, {2}, Cyclotomic(Rational(2))));
    omega.push_back(MultiPoly(1));
    MembershipResult ok = verify_hh0_membership(d, kept, omega, kSeed);
    CHECK(ok.ok);
    // ω = 0
    std::vector<MultiPoly> zero{MultiPoly(2), MultiPoly(1), MultiPoly(1)};
    CHECK(verify_hh0_membership(d, kept, zero, kSeed).ok);
    // ω = (1, 0, 0) violates π(∅,triv,v_i) = π(i,δ_i,v_i) + π(i,δ_i,-v_i)
    std::vector<MultiPoly> bad{MultiPoly::constant(2, Cyclotomic(1)), MultiPoly(1), MultiPoly(1)};
    MembershipResult viol = verify_hh0_membership(d, kept, bad, kSeed);
    CHECK(!viol.ok);
    CHECK(!viol.violated_relation.empty());
}

TEST_CASE("semisimplification insensitivity of characters (Lemma 2.2.a)") {
    // Jet representation of O(C) over the trivial group: f ↦ [[f(a), f'(a)],[0, f(a)]]
    // versus its semisimplification diag(f(a), f(a)): identical traces.
    MultiPoly z = MultiPoly::variable(1, 0);
    Cyclotomic a(Rational(2, 3));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        MultiPoly f(1);
        for (int k = 0; k < 4; ++k)
            f += MultiPoly::monomial(1, {k}, Cyclotomic(Rational(rand_range(rng, -5, 5))));
        Cyclotomic tr_jet = Cyclotomic(Rational(2)) * f.eval({a});
        Cyclotomic tr_ss = Cyclotomic(Rational(2)) * f.eval({a});
        CHECK(tr_jet == tr_ss);
        // and the jet's off-diagonal entry (the derivative) does not leak
        // into the trace even for products
        MultiPoly g(1);
        for (int k = 0; k < 3; ++k)
            g += MultiPoly::monomial(1, {k}, Cyclotomic(Rational(rand_range(rng, -5, 5))));
        // tr of the product matrix [[f, f'],[0, f]]·[[g, g'],[0, g]]
        Cyclotomic prod_tr = Cyclotomic(Rational(2)) * (f * g).eval({a});
        CHECK(prod_tr == Cyclotomic(Rational(2)) * f.eval({a}) * g.eval({a}));
    }
}

TEST_CASE("virtual character linearity (Lemma 2.12)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto elements = sample_elements(d, 3);
    // Build 2·π(i,δ_i,0) two different ways: directly, and as π(∅,triv,0)
    auto p_triv = std::make_shared<InducedRep>(d, family(s, "triv"), pt(0, 0), false);
    auto p_i = std::make_shared<InducedRep>(d, family(s, "delta_i"), pt(0, 0), false);
    VirtualCharacter v1, v2;
    v1.add(Cyclotomic(Rational(2)), p_i);
    v2.add(Cyclotomic(1), p_triv);
    for (const auto& x : elements) CHECK(v1.char_value(d, x) == v2.char_value(d, x));
}

TEST_CASE("injectivity of the family-character realization (Theorem 2.6.a)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto kept = select_minimal_families(d, s.families, kSeed).kept;
    auto elements = sample_elements(d, 3);
    // point pool per family: generic, transported and special points
    std::vector<std::vector<std::vector<Cyclotomic>>> pools(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
        pools[i] = generic_points(d, kept[i].parabolic.v_up, 2, kSeed + 31 * i);
        pools[i].push_back(std::vector<Cyclotomic>(2, Cyclotomic(0)));
        if (kept[i].parabolic.param_dim() == 1) {
            auto p = pools[i][0];
            for (auto& c : p) c = -c;
            pools[i].push_back(p);
        }
    }
    // rows: images of the degree ≤ 3 invariant-function basis of every
    // relevant class, realized as T_g·f with f an ambient extension
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& cls : d.group.conjugacy_classes()) {
        int g = cls.front();
        if (!relevant(d, g)) continue;
        FixedSpace fs = fixed_space(d, g);
        // left inverse of the basis for the ambient extension
        ExactMatrix Bt = fs.basis.transpose();
        auto gram_inv = (Bt * fs.basis).inverse();
        REQUIRE(gram_inv.has_value());
        ExactMatrix L = (*gram_inv) * Bt; // L·B = 1
        for (const auto& w : invariant_form_basis(d, g, 0, 3)) {
            const MultiPoly& omega = w.terms.begin()->second;
            // ambient polynomial restricting to ω on V^g
            std::vector<MultiPoly> forms;
            for (int r = 0; r < fs.dim(); ++r) {
                std::vector<Cyclotomic> coeffs(2);
                for (int c = 0; c < 2; ++c) coeffs[c] = L.at(r, c);
                forms.push_back(MultiPoly::linear_form(coeffs));
            }
            MultiPoly ambient = omega.substitute(forms);
            TwistedElement x = TwistedElement::term(d, g, ambient);
            std::vector<Cyclotomic> row;
            for (std::size_t i = 0; i < kept.size(); ++i)
                for (const auto& p : pools[i]) {
                    InducedRep rep(d, kept[i], p, false);
                    row.push_back(rep.char_value(d, x));
                }
            rows.push_back(std::move(row));
        }
    }
    ExactMatrix M = ExactMatrix::from_rows(rows);
    CHECK(M.rank() == M.rows()); // full rank: the realization is injective
}
