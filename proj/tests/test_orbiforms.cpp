#include "heckehom/orbiforms.hpp"
#include "heckehom/scenario.hpp"

#include <doctest.h>

#include <functional>

using namespace heckehom;

namespace {

std::vector<long> expand(const RationalFunction& f, int order) {
    auto s = f.series(order);
    std::vector<long> out;
    for (const auto& c : s) {
        REQUIRE(c.is_rational());
        REQUIRE(c.rational_value().is_integer());
        out.push_back(c.rational_value().num().get_si());
    }
    return out;
}

// Independent oracle: dimension of the ♮^g-twisted Z_G(g)-invariant n-forms
// with coefficient degree exactly deg, by brute-force averaging of monomial
// forms and an exact rank count. Deliberately separate from the library's
// Reynolds/Molien code paths.
int averaging_dimension(const TwistedGroupDatum& d, int g, int n, int deg) {
    FixedSpace fs = fixed_space(d, g);
    const int dim = fs.dim();
    if (n > dim) return 0;
    // enumerate monomials of degree deg in dim variables
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(dim, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (dim == 0) return;
        if (i == dim - 1) {
            cur[i] = rem;
            monos.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, rem - e);
        }
    };
    if (dim == 0) {
        if (deg == 0 && n == 0) monos.push_back({});
        else return 0;
    } else {
        rec(0, deg);
    }
    // subsets of size n
    std::vector<std::vector<int>> subsets;
    std::vector<int> sub;
    std::function<void(int)> rec2 = [&](int start) {
        if (static_cast<int>(sub.size()) == n) {
            subsets.push_back(sub);
            return;
        }
        for (int i = start; i < dim; ++i) {
            sub.push_back(i);
            rec2(i + 1);
            sub.pop_back();
        }
    };
    rec2(0);
    if (dim == 0) subsets.push_back({});

    // averaged candidates, vectorized over (subset, monomial of degree deg)
    std::vector<std::vector<Cyclotomic>> rows;
    for (const auto& I : subsets)
        for (const auto& e : monos) {
            DifferentialForm w;
            w.dim = dim;
            w.degree = n;
            w.terms[I] = MultiPoly::monomial(dim, e, Cyclotomic(1));
            DifferentialForm avg = reynolds_average(d, fs, w);
            std::vector<Cyclotomic> row;
            for (const auto& J : subsets)
                for (const auto& e2 : monos) {
                    auto it = avg.terms.find(J);
                    Cyclotomic v(0);
                    if (it != avg.terms.end()) {
                        auto t = it->second.terms().find(e2);
                        if (t != it->second.terms().end()) v = t->second;
                    }
                    row.push_back(v);
                }
            rows.push_back(std::move(row));
        }
    if (rows.empty()) return 0;
    return ExactMatrix::from_rows(rows).rank();
}

} // namespace

TEST_CASE("fixed spaces of the quaternion example") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    CHECK(fixed_space(d, 0).dim() == 2);                 // identity: all of V
    FixedSpace fi = fixed_space(d, 1);                    // ±i: {0} × C
    CHECK(fi.dim() == 1);
    CHECK(fi.basis.at(0, 0) == Cyclotomic(0));
    CHECK(fi.basis.at(1, 0) == Cyclotomic(1));
    CHECK(fixed_space(d, 3).dim() == 0);                 // ±k: {(0,0)}
    // pointwise stabilizers: Z_G(i, V^i) = {1, i}; Z_G(k, {0}) = G
    CHECK(fi.pointwise_stabilizer == std::vector<int>{0, 1});
    CHECK(fixed_space(d, 3).pointwise_stabilizer == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("relevance dichotomy") {
    Scenario s = preset_scenario("quaternion");
    CHECK(relevant(s.datum, 0));
    CHECK(relevant(s.datum, 1));
    CHECK(relevant(s.datum, 2));
    CHECK(!relevant(s.datum, 3)); // ±k is HH-irrelevant
    // trivial cocycle: everything relevant
    Scenario d4 = preset_scenario("d4");
    for (int g = 0; g < d4.datum.group.order(); ++g) CHECK(relevant(d4.datum, g));
}

TEST_CASE("quaternion HH summand series (Example 2.A bullets)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    // g = ±k: zero in every degree
    CHECK(hh_summand_series(d, 3, 0).is_zero());
    CHECK(hh_summand_series(d, 3, 1).is_zero());
    // g = ±i, n = 0: odd functions -> t + t^3 + t^5 + t^7
    CHECK(expand(hh_summand_series(d, 1, 0), 8) ==
          std::vector<long>{0, 1, 0, 1, 0, 1, 0, 1, 0});
    // g = ±i, n = 1: even coefficient functions -> 1 + t^2 + ...
    CHECK(expand(hh_summand_series(d, 1, 1), 8) ==
          std::vector<long>{1, 0, 1, 0, 1, 0, 1, 0, 1});
    // g = ±j symmetric
    CHECK(expand(hh_summand_series(d, 2, 0), 8) == expand(hh_summand_series(d, 1, 0), 8));
    // g = ±1: Molien series of G-invariant n-forms on C^2
    CHECK(expand(hh_summand_series(d, 0, 0), 8) ==
          std::vector<long>{1, 0, 2, 0, 3, 0, 4, 0, 5}); // 1/(1-t^2)^2
    CHECK(expand(hh_summand_series(d, 0, 1), 8) ==
          std::vector<long>{0, 2, 0, 4, 0, 6, 0, 8, 0}); // 2t/(1-t^2)^2
    CHECK(expand(hh_summand_series(d, 0, 2), 8) ==
          std::vector<long>{0, 0, 1, 0, 2, 0, 3, 0, 4}); // t^2/(1-t^2)^2
}

TEST_CASE("Molien series match the brute-force averaging oracle") {
    for (const char* name : {"quaternion", "d4", "d4-twisted", "s3"}) {
        Scenario s = preset_scenario(name);
        const TwistedGroupDatum& d = s.datum;
        for (const auto& cls : d.group.conjugacy_classes()) {
            int g = cls.front();
            for (int n = 0; n <= 2; ++n) {
                auto series = hh_summand_series(d, g, n);
                auto coeffs = expand(series, 6);
                for (int deg = 0; deg <= 6; ++deg)
                    CHECK(coeffs[deg] == averaging_dimension(d, g, n, deg));
            }
        }
    }
}

TEST_CASE("hh_report totals and HKR for the trivial group") {
    // trivial group: HH_n(O(V)) = Ω^n(V), free of rank C(dim, n)
    TwistedGroupDatum d;
    d.group = FiniteGroup({{0}}, {"e"});
    d.cocycle = TwoCocycle::trivial(1);
    d.action = LinearAction(2, {ExactMatrix::identity(2)});
    d.conductor = 1;
    d.var_names = {"z1", "z2"};
    HHReport r0 = hh_report(d, 0);
    CHECK(expand(r0.total, 3) == std::vector<long>{1, 2, 3, 4}); // 1/(1-t)^2
    HHReport r1 = hh_report(d, 1);
    CHECK(expand(r1.total, 2) == std::vector<long>{2, 4, 6}); // 2/(1-t)^2
    HHReport r2 = hh_report(d, 2);
    CHECK(expand(r2.total, 2) == std::vector<long>{1, 2, 3});

    // quaternion full report: per-class entries match the individual series,
    // irrelevant class reported as zero, total = sum
    Scenario s = preset_scenario("quaternion");
    HHReport rq = hh_report(s.datum, 0);
    REQUIRE(rq.entries.size() == 4);
    CHECK(rq.entries[3].relevant == false);
    CHECK(rq.entries[3].series.is_zero());
    RationalFunction sum = RationalFunction::zero();
    for (const auto& e : rq.entries) sum = sum + e.series;
    CHECK(sum == rq.total);
    // parallel kernel output equals the serial reference
    HHReport rs = hh_report_serial(s.datum, 0);
    for (std::size_t i = 0; i < rq.entries.size(); ++i)
        CHECK(rq.entries[i].series == rs.entries[i].series);
}

TEST_CASE("invariant form bases (Example 2.A)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    // g = ±i, n = 0, degree ≤ 3: {u, u^3} (odd functions of the V^g coordinate)
    auto b = invariant_form_basis(d, 1, 0, 3);
    REQUIRE(b.size() == 2);
    CHECK(b[0].terms.at({}) == MultiPoly::monomial(1, {1}, Cyclotomic(1)));
    CHECK(b[1].terms.at({}) == MultiPoly::monomial(1, {3}, Cyclotomic(1)));
    // g = ±j, n = 1, degree ≤ 2: {du, u^2 du} (even f·dz1)
    auto bj = invariant_form_basis(d, 2, 1, 2);
    REQUIRE(bj.size() == 2);
    CHECK(bj[0].terms.at({0}) == MultiPoly::constant(1, Cyclotomic(1)));
    CHECK(bj[1].terms.at({0}) == MultiPoly::monomial(1, {2}, Cyclotomic(1)));
    // serial twin agrees with the parallel kernel
    auto bs = invariant_form_basis_serial(d, 1, 0, 3);
    REQUIRE(bs.size() == b.size());
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i].terms == bs[i].terms);
    // trivial action, n = 0, max_degree 1, dim 1: {1, z}
    TwistedGroupDatum triv;
    triv.group = FiniteGroup({{0}}, {"e"});
    triv.cocycle = TwoCocycle::trivial(1);
    triv.action = LinearAction(1, {ExactMatrix::identity(1)});
    triv.conductor = 1;
    triv.var_names = {"z"};
    auto bt = invariant_form_basis(triv, 0, 0, 1);
    REQUIRE(bt.size() == 2);
    // basis cardinality matches the series coefficients degree by degree
    for (int n = 0; n <= 1; ++n) {
        auto coeffs = expand(hh_summand_series(d, 1, n), 5);
        long total = 0;
        for (long c : coeffs) total += c;
        CHECK(static_cast<long>(invariant_form_basis(d, 1, n, 5).size()) == total);
    }
}

TEST_CASE("conjugation consistency across a nontrivial class (Eq. 2.32 style)") {
    Scenario s = preset_scenario("d4-twisted");
    const TwistedGroupDatum& d = s.datum;
    for (const auto& cls : d.group.conjugacy_classes()) {
        if (cls.size() < 2) continue;
        int g = cls[0], gp = cls[1];
        int h = d.group.transporter(g, gp);
        for (int n = 0; n <= 1; ++n) {
            CHECK(hh_summand_series(d, g, n) == hh_summand_series(d, gp, n));
            // explicit image check: the transported basis forms are twisted
            // invariants for the conjugate element
            FixedSpace fsg = fixed_space(d, g), fsp = fixed_space(d, gp);
            if (fsg.dim() == 0) continue;
            // transition y' = S y with basis_{g'}·S = ρ(h)·basis_g
            auto S = fsp.basis.solve_matrix(d.action.matrix(h) * fsg.basis);
            REQUIRE(S.has_value());
            auto Sinv = S->inverse();
            REQUIRE(Sinv.has_value());
            for (const auto& w : invariant_form_basis(d, g, n, 3)) {
                DifferentialForm moved = w.pullback(*Sinv).scaled(d.nat_char(g, h));
                DifferentialForm avg = reynolds_average(d, fsp, moved);
                CHECK(avg.terms == moved.terms); // already invariant
            }
        }
    }
}

TEST_CASE("irreps at orbit (Example 2.A table)") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto pt = [](long a, long b) {
        return std::vector<Cyclotomic>{Cyclotomic(Rational(a)), Cyclotomic(Rational(b))};
    };
    CHECK(irreps_at_orbit(d, pt(2, 3)) == 1); // z1 ≠ 0 ≠ z2
    CHECK(irreps_at_orbit(d, pt(0, 3)) == 2); // z1 = 0 ≠ z2
    CHECK(irreps_at_orbit(d, pt(2, 0)) == 2); // z1 ≠ 0 = z2
    CHECK(irreps_at_orbit(d, pt(0, 0)) == 1); // origin
    // trivial cocycle, free orbit -> 1; v = 0 -> class count
    Scenario d4 = preset_scenario("d4");
    CHECK(irreps_at_orbit(d4.datum, pt(2, 3)) == 1);
    CHECK(irreps_at_orbit(d4.datum, pt(0, 0)) == 5);
}

TEST_CASE("specialization of HH at orbits") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto pt = [](long a, long b) {
        return std::vector<Cyclotomic>{Cyclotomic(Rational(a)), Cyclotomic(Rational(b))};
    };
    // Example 2.B: dim of HH_1 specialization at the origin is 2 (C dz2 ⊕ C dz1),
    // while only one irreducible lives there
    SpecializeResult r1 = specialize_hh(d, 1, pt(0, 0));
    CHECK(r1.dimension == 2);
    CHECK(r1.stabilized);
    CHECK(irreps_at_orbit(d, pt(0, 0)) == 1);
    // degree-0 specializations equal the irrep counts at every sampled point
    for (auto v : {pt(0, 0), pt(0, 3), pt(2, 0), pt(2, 3), pt(1, 1)}) {
        SpecializeResult r = specialize_hh(d, 0, v);
        CHECK(r.stabilized);
        CHECK(r.dimension == irreps_at_orbit(d, v));
    }
    // trivial group: any point, n = 0 -> 1
    TwistedGroupDatum triv;
    triv.group = FiniteGroup({{0}}, {"e"});
    triv.cocycle = TwoCocycle::trivial(1);
    triv.action = LinearAction(1, {ExactMatrix::identity(1)});
    triv.conductor = 1;
    triv.var_names = {"z"};
    CHECK(specialize_hh(triv, 0, {Cyclotomic(Rational(5))}).dimension == 1);
    // dihedral cross-check of Lemma 2.4 at a reflection-axis point
    Scenario d4 = preset_scenario("d4");
    CHECK(specialize_hh(d4.datum, 0, pt(3, 0)).dimension == irreps_at_orbit(d4.datum, pt(3, 0)));
}
