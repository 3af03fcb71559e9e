#include "heckehom/orbiforms.hpp"
#include "heckehom/scenario.hpp"
#include "heckehom/twisted.hpp"

#include <doctest.h>

#include <random>

using namespace heckehom;

namespace {

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Quaternion group Q8 = {±1, ±i, ±j, ±k} as an abstract Cayley table,
// elements ordered 1,-1,i,-i,j,-j,k,-k. Used to derive the Klein cocycle
// from a section by hand.
FiniteGroup q8_group() {
    // encode elements as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    auto idx = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
    auto mul = [&](int a, int b) {
        int sa = (a % 2 == 0) ? 1 : -1, xa = a / 2;
        int sb = (b % 2 == 0) ? 1 : -1, xb = b / 2;
        static const int axis_table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign_table[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        // sign_table[xa][xb]: i*i=-1, i*j=+k, i*k=-j, j*i=-k, j*j=-1, j*k=+i,
        // k*i=+j, k*j=-i, k*k=-1
        return idx(sa * sb * sign_table[xa][xb], axis_table[xa][xb]);
    };
    std::vector<std::vector<int>> cayley(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) cayley[a][b] = mul(a, b);
    return FiniteGroup(cayley, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

} // namespace

TEST_CASE("q8 sanity") {
    FiniteGroup q8 = q8_group();
    q8.validate();
    CHECK(q8.order() == 8);
    // i*j = k, j*i = -k
    CHECK(q8.mult(2, 4) == 6);
    CHECK(q8.mult(4, 2) == 7);
}

TEST_CASE("quaternion cocycle equals the section-derived table") {
    // Section s: Klein -> Q8 sending 1,i,j,k to 1,i,j,k; the descended
    // cocycle is chi(s(g)s(h)s(gh)^{-1}) with chi the nontrivial character
    // of Z(Q8).
    FiniteGroup q8 = q8_group();
    int section[4] = {0, 2, 4, 6}; // indices of 1,i,j,k
    Scenario s = preset_scenario("quaternion");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int prod = q8.mult(section[a], section[b]);
            int ab = a ^ b; // Klein multiplication
            // prod = z * section[ab] with z in {1,-1}
            int z = q8.mult(prod, q8.inverse(section[ab]));
            int expected_exp = (z == 1) ? 1 : 0; // chi(-1) = -1
            CHECK(s.datum.cocycle.exponent(a, b) == expected_exp);
        }
    CHECK(validate_cocycle(s.datum.group, s.datum.cocycle).ok);
}

TEST_CASE("validate_cocycle: trivial, perturbed, parallel == serial") {
    Scenario s = preset_scenario("quaternion");
    TwoCocycle triv = TwoCocycle::trivial(4);
    CHECK(validate_cocycle(s.datum.group, triv).ok);
    CHECK(validate_cocycle_serial(s.datum.group, triv).ok);

    // perturb one entry
    std::vector<std::vector<int>> exps(4, std::vector<int>(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) exps[a][b] = s.datum.cocycle.exponent(a, b);
    exps[2][3] ^= 1;
    TwoCocycle bad(2, exps);
    CocycleCheck c1 = validate_cocycle(s.datum.group, bad);
    CocycleCheck c2 = validate_cocycle_serial(s.datum.group, bad);
    CHECK(!c1.ok);
    CHECK(!c2.ok);
    CHECK(c1.violation.g == c2.violation.g);
    CHECK(c1.violation.h == c2.violation.h);
    CHECK(c1.violation.k == c2.violation.k);
}

TEST_CASE("twisted multiplication in the quaternion algebra") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    // T_j T_i T_j^{-1} = -T_i (paper's Example 2.A computation)
    TwistedElement ti = TwistedElement::basis(d, 1);
    TwistedElement conj = twisted_conjugate(ti, 2, d);
    CHECK(conj == ti.scaled(Cyclotomic(Rational(-1))));
    // T_g T_{g^{-1}} = ♮(g,g^{-1}) T_1
    for (int g = 0; g < 4; ++g) {
        TwistedElement prod =
            twisted_multiply(TwistedElement::basis(d, g), TwistedElement::basis(d, d.group.inverse(g)), d);
        TwistedElement expect =
            TwistedElement::basis(d, d.group.identity()).scaled(d.cocycle_value(g, d.group.inverse(g)));
        CHECK(prod == expect);
    }
    // commutative polynomial subalgebra: (T_1 z1)(T_1 z2) = T_1 z1 z2
    MultiPoly z1 = MultiPoly::variable(2, 0), z2 = MultiPoly::variable(2, 1);
    TwistedElement p1 = TwistedElement::poly(d, z1), p2 = TwistedElement::poly(d, z2);
    CHECK(twisted_multiply(p1, p2, d) == TwistedElement::poly(d, z1 * z2));
    // associativity on random triples
    std::mt19937_64 rng(99);
    auto rand_elem = [&]() {
        TwistedElement x(2);
        for (int t = 0; t < 3; ++t) {
            MultiPoly::Exponents e{static_cast<int>(rand_range(rng, 0, 2)),
                                   static_cast<int>(rand_range(rng, 0, 2))};
            x.add_term(static_cast<int>(rand_range(rng, 0, 3)),
                       MultiPoly::monomial(2, e, Cyclotomic(Rational(rand_range(rng, -3, 3)))));
        }
        return x;
    };
    for (int t = 0; t < 25; ++t) {
        TwistedElement a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK(twisted_multiply(twisted_multiply(a, b, d), c, d) ==
              twisted_multiply(a, twisted_multiply(b, c, d), d));
    }
}

TEST_CASE("natural characters of the quaternion example") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    // ♮^{±1} = triv
    for (int h = 0; h < 4; ++h) CHECK(d.nat_char(0, h) == Cyclotomic(1));
    // ♮^{±i}(g) = 1 on <±i> = {1,i}, -1 otherwise
    CHECK(d.nat_char(1, 0) == Cyclotomic(1));
    CHECK(d.nat_char(1, 1) == Cyclotomic(1));
    CHECK(d.nat_char(1, 2) == Cyclotomic(Rational(-1)));
    CHECK(d.nat_char(1, 3) == Cyclotomic(Rational(-1)));
    // trivial cocycle: ♮^g ≡ 1
    Scenario c4 = preset_scenario("cyclic4");
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h) CHECK(c4.datum.nat_char(g, h) == Cyclotomic(1));
    // definition as an algebra identity: T_h T_g T_h^{-1} T_{hgh^{-1}}^{-1} = ♮^g(h)·1
    for (int g = 0; g < 4; ++g)
        for (int h = 0; h < 4; ++h) {
            TwistedElement lhs = twisted_conjugate(TwistedElement::basis(d, g), h, d);
            int tgt = d.group.conj(h, g);
            TwistedElement tinv = TwistedElement::basis(d, d.group.inverse(tgt))
                                      .scaled(d.cocycle_value(tgt, d.group.inverse(tgt)).inverse());
            TwistedElement prod = twisted_multiply(lhs, tinv, d);
            CHECK(prod == TwistedElement::basis(d, d.group.identity()).scaled(d.nat_char(g, h)));
        }
}

TEST_CASE("natural character properties on random cocycle scenarios") {
    std::mt19937_64 rng(2024);
    for (const char* name : {"quaternion", "d4-twisted", "cyclic4-twisted", "s3"}) {
        Scenario s = preset_scenario(name);
        const TwistedGroupDatum& d = s.datum;
        const int n = d.group.order();
        const int m = d.cocycle.order_of_values();
        // Lemma 2.10.a: ♮^g(h̃h) = ♮^{hgh^{-1}}(h̃)·♮^g(h)
        for (int t = 0; t < 200; ++t) {
            int g = static_cast<int>(rand_range(rng, 0, n - 1));
            int h = static_cast<int>(rand_range(rng, 0, n - 1));
            int ht = static_cast<int>(rand_range(rng, 0, n - 1));
            Cyclotomic lhs = d.nat_char(g, d.group.mult(ht, h));
            Cyclotomic rhs = d.nat_char(d.group.conj(h, g), ht) * d.nat_char(g, h);
            CHECK(lhs == rhs);
        }
        // ♮^g|_{Z_G(g)} is multiplicative
        for (int g = 0; g < n; ++g) {
            auto z = d.group.centralizer(g);
            for (int a : z)
                for (int b : z)
                    CHECK(d.nat_char(g, d.group.mult(a, b)) == d.nat_char(g, a) * d.nat_char(g, b));
        }
        // Lemma 2.10.b restated: for h̃ ∈ Z_G(hgh^{-1}):
        // ♮^{hgh^{-1}}(h̃)♮^g(h) = ♮^g(h)♮^g(h^{-1}h̃h)
        for (int t = 0; t < 200; ++t) {
            int g = static_cast<int>(rand_range(rng, 0, n - 1));
            int h = static_cast<int>(rand_range(rng, 0, n - 1));
            int tgt = d.group.conj(h, g);
            auto z = d.group.centralizer(tgt);
            int ht = z[static_cast<std::size_t>(rand_range(rng, 0, static_cast<long>(z.size()) - 1))];
            Cyclotomic lhs = d.nat_char(tgt, ht) * d.nat_char(g, h);
            Cyclotomic rhs = d.nat_char(g, h) * d.nat_char(g, d.group.conj(d.group.inverse(h), ht));
            CHECK(lhs == rhs);
        }
        // coboundary invariance: twist by a random c: G -> mu_m
        std::vector<int> c(n, 0);
        for (int g = 1; g < n; ++g) c[g] = static_cast<int>(rand_range(rng, 0, m - 1));
        c[d.group.identity()] = 0;
        std::vector<std::vector<int>> exps(n, std::vector<int>(n));
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h)
                exps[g][h] = d.cocycle.exponent(g, h) + c[g] + c[h] - c[d.group.mult(g, h)];
        TwoCocycle twisted(m, exps);
        REQUIRE(validate_cocycle(d.group, twisted).ok);
        // ♮^g restricted to Z_G(g) only sees the cohomology class; off the
        // centralizer the transported value picks up c(g)/c(hgh^{-1}), which
        // is exactly the basis-rescaling ambiguity.
        for (int g = 0; g < n; ++g) {
            for (int h : d.group.centralizer(g))
                CHECK(twisted.natural_char(d.group, g, h) == d.nat_char(g, h));
            for (int h = 0; h < n; ++h) {
                int corr = c[g] - c[d.group.conj(h, g)];
                Cyclotomic expect =
                    d.nat_char(g, h) * Cyclotomic::root_of_unity(m, corr);
                CHECK(twisted.natural_char(d.group, g, h) == expect);
            }
        }
    }
}

TEST_CASE("irrep counts against the center-dimension oracle") {
    // count_irreps must equal the center dimension on every preset scenario
    for (const char* name :
         {"quaternion", "cyclic4", "cyclic4-twisted", "cyclic6", "d4", "d4-twisted", "s3"}) {
        Scenario s = preset_scenario(name);
        CHECK(count_irreps(s.datum) == center_dimension_oracle(s.datum));
    }
    // pinned values
    CHECK(count_irreps(preset_scenario("quaternion").datum) == 1);
    CHECK(count_irreps(preset_scenario("cyclic4").datum) == 4);
    CHECK(count_irreps(preset_scenario("cyclic4-twisted").datum) == 4); // coboundary: unchanged
    CHECK(count_irreps(preset_scenario("s3").datum) == 3);
    CHECK(count_irreps(preset_scenario("d4").datum) == 5);
    CHECK(center_dimension_oracle(preset_scenario("s3").datum) == 3);
}

TEST_CASE("Z/2 with trivial cocycle has two irreducibles") {
    std::vector<std::vector<int>> cayley{{0, 1}, {1, 0}};
    TwistedGroupDatum d;
    d.group = FiniteGroup(cayley, {"e", "t"});
    d.cocycle = TwoCocycle::trivial(2);
    d.action = LinearAction(1, {ExactMatrix::identity(1),
                                ExactMatrix(1, 1, {Cyclotomic(Rational(-1))})});
    d.conductor = 2;
    d.var_names = {"z1"};
    d.validate();
    CHECK(count_irreps(d) == 2);
    CHECK(center_dimension_oracle(d) == 2);
}

TEST_CASE("trace basis") {
    Scenario s = preset_scenario("quaternion");
    const TwistedGroupDatum& d = s.datum;
    auto basis = trace_basis(d);
    // only the class {1} is ♮-regular
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].rep == 0);
    CHECK(basis[0].eval(TwistedElement::basis(d, 0), d) == Cyclotomic(1));
    for (int g = 1; g < 4; ++g)
        CHECK(basis[0].eval(TwistedElement::basis(d, g), d) == Cyclotomic(0));

    // trivial cocycle: one indicator per class, normalized at the rep
    Scenario s3 = preset_scenario("s3");
    auto b3 = trace_basis(s3.datum);
    REQUIRE(b3.size() == 3);
    for (const auto& nu : b3) {
        for (const auto& cls : s3.datum.group.conjugacy_classes()) {
            for (int g : cls) {
                Cyclotomic v = nu.eval(TwistedElement::basis(s3.datum, g), s3.datum);
                if (s3.datum.group.class_of(g) == nu.class_id)
                    CHECK(v == Cyclotomic(1)); // trivial cocycle: weight 1 on the whole class
                else
                    CHECK(v == Cyclotomic(0));
            }
        }
    }

    // trace property ν(ab) = ν(ba) on random pairs, twisted scenario
    std::mt19937_64 rng(5);
    auto rand_elem = [&](const TwistedGroupDatum& dd) {
        TwistedElement x(static_cast<int>(dd.var_names.size()));
        for (int t = 0; t < 3; ++t) {
            MultiPoly f = MultiPoly::constant(static_cast<int>(dd.var_names.size()),
                                              Cyclotomic(Rational(rand_range(rng, -4, 4))));
            x.add_term(static_cast<int>(rand_range(rng, 0, dd.group.order() - 1)), f);
        }
        return x;
    };
    for (const char* name : {"quaternion", "d4-twisted"}) {
        Scenario sc = preset_scenario(name);
        auto nus = trace_basis(sc.datum);
        for (int t = 0; t < 200; ++t) {
            TwistedElement a = rand_elem(sc.datum), b = rand_elem(sc.datum);
            TwistedElement ab = twisted_multiply(a, b, sc.datum);
            TwistedElement ba = twisted_multiply(b, a, sc.datum);
            for (const auto& nu : nus) CHECK(nu.eval(ab, sc.datum) == nu.eval(ba, sc.datum));
        }
    }
}

TEST_CASE("subgroup restriction keeps cocycle data consistent") {
    Scenario s = preset_scenario("quaternion");
    TwistedGroupDatum sub = restrict_to_subgroup(s.datum, {0, 1});
    sub.validate();
    CHECK(sub.group.order() == 2);
    CHECK(sub.cocycle.exponent(1, 1) == 1); // ♮(i,i) = -1 survives restriction
    CHECK(count_irreps(sub) == center_dimension_oracle(sub));
}
