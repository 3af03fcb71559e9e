#include "heckehom/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace heckehom {

using ordered_json = nlohmann::ordered_json;

namespace {

// ---- JSON value <-> exact numbers -------------------------------------

Rational rational_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    throw DomainError(where + ": expected integer or \"a/b\" string");
}

Cyclotomic cyclo_from_json(const ordered_json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j, where));
    if (j.is_object()) {
        if (!j.contains("conductor") || !j.contains("coeffs"))
            throw DomainError(where + ": cyclotomic object needs conductor and coeffs");
        int m = j.at("conductor").get<int>();
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) {
            if (c.is_array() && c.size() == 2)
                coeffs.push_back(Rational(mpz_class(c[0].get<std::string>()),
                                          mpz_class(c[1].get<std::string>())));
            else
                coeffs.push_back(rational_from_json(c, where));
        }
        return Cyclotomic(m, std::move(coeffs));
    }
    throw DomainError(where + ": expected a cyclotomic value");
}

ordered_json cyclo_to_json(const Cyclotomic& c) {
    if (c.is_rational()) return ordered_json(c.rational_value().str());
    ordered_json coeffs = ordered_json::array();
    for (const auto& r : c.coeffs())
        coeffs.push_back(ordered_json::array({r.num().get_str(), r.den().get_str()}));
    return ordered_json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

ExactMatrix matrix_from_json(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw DomainError(where + ": expected a matrix (array of rows)");
    std::vector<std::vector<Cyclotomic>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::vector<Cyclotomic> row;
        for (std::size_t k = 0; k < j[i].size(); ++k)
            row.push_back(cyclo_from_json(j[i][k], where + "[" + std::to_string(i) + "][" +
                                                       std::to_string(k) + "]"));
        rows.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(rows);
}

ordered_json matrix_to_json(const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cyclo_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// ---- preset helpers -----------------------------------------------------

ExactMatrix rat_matrix(const std::vector<std::vector<long>>& rows,
                       const std::vector<std::vector<long>>& dens = {}) {
    std::vector<std::vector<Cyclotomic>> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Cyclotomic> row;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            long den = dens.empty() ? 1 : dens[i][j];
            row.push_back(Cyclotomic(Rational(rows[i][j], den)));
        }
        out.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(out);
}

ExactMatrix one_by_one(const Cyclotomic& c) { return ExactMatrix(1, 1, {c}); }

// Element image from a generator-letter word label ("e" is empty).
ExactMatrix image_from_label(const std::string& label,
                             const std::map<char, ExactMatrix>& gen_images, int dim) {
    ExactMatrix m = ExactMatrix::identity(dim);
    if (label == "e") return m;
    for (char ch : label) m = m * gen_images.at(ch);
    return m;
}

// The Klein-four cocycle descended from the quaternion group Q8 via the
// section 1,i,j,k (elements ordered 1,i,j,k; value order m = 2).
const std::vector<std::vector<int>>& klein_quaternion_exponents() {
    static const std::vector<std::vector<int>> table{
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return table;
}

Scenario make_quaternion() {
    Scenario s;
    s.name = "quaternion";
    s.description = "Q8/Z(Q8) acting on C^2 by sign flips, with the nontrivial 2-cocycle "
                    "descended from Q8";
    // Klein four group: indices compose by XOR.
    std::vector<std::vector<int>> cayley(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) cayley[a][b] = a ^ b;
    s.datum.group = FiniteGroup(cayley, {"1", "i", "j", "k"});
    s.datum.cocycle = TwoCocycle(2, klein_quaternion_exponents());
    std::vector<ExactMatrix> mats{
        rat_matrix({{1, 0}, {0, 1}}), rat_matrix({{-1, 0}, {0, 1}}),
        rat_matrix({{1, 0}, {0, -1}}), rat_matrix({{-1, 0}, {0, -1}})};
    s.datum.action = LinearAction(2, std::move(mats));
    s.datum.conductor = 4;
    s.datum.var_names = {"z1", "z2"};

    ParabolicDatum p_empty{"empty", {0}, ExactMatrix(2, 0), rat_matrix({{1, 0}, {0, 1}})};
    ParabolicDatum p_i{"i", {0, 1}, rat_matrix({{1}, {0}}), rat_matrix({{0}, {1}})};
    ParabolicDatum p_j{"j", {0, 2}, rat_matrix({{0}, {1}}), rat_matrix({{1}, {0}})};
    ParabolicDatum p_full{"full", {0, 1, 2, 3}, rat_matrix({{1, 0}, {0, 1}}), ExactMatrix(2, 0)};

    Cyclotomic zi = Cyclotomic::root_of_unity(4, 1);
    auto one = one_by_one(Cyclotomic(1));
    s.families.push_back({"triv", p_empty, {"triv", 1, {{0, one}}}});
    s.families.push_back({"delta_i", p_i, {"delta_i", 1, {{0, one}, {1, one_by_one(zi)}}}});
    s.families.push_back({"delta_-i", p_i, {"delta_-i", 1, {{0, one}, {1, one_by_one(-zi)}}}});
    s.families.push_back({"delta_j", p_j, {"delta_j", 1, {{0, one}, {2, one_by_one(zi)}}}});
    s.families.push_back({"delta_-j", p_j, {"delta_-j", 1, {{0, one}, {2, one_by_one(-zi)}}}});
    // The unique irreducible of C[G,♮] (a 2-dim projective rep), as a
    // dimension-0 candidate family; minimal selection must drop it.
    EllipticRep m2;
    m2.label = "m2";
    m2.dim = 2;
    m2.matrices[0] = ExactMatrix::identity(2);
    m2.matrices[1] = ExactMatrix(2, 2, {zi, Cyclotomic(0), Cyclotomic(0), -zi});
    m2.matrices[2] = rat_matrix({{0, 1}, {-1, 0}});
    m2.matrices[3] = ExactMatrix(2, 2, {Cyclotomic(0), zi, zi, Cyclotomic(0)});
    s.families.push_back({"m2", p_full, std::move(m2)});
    return s;
}

Scenario make_cyclic(int n, bool twisted) {
    Scenario s;
    s.name = "cyclic" + std::to_string(n) + (twisted ? "-twisted" : "");
    s.description = twisted ? "Z/" + std::to_string(n) + " with a coboundary cocycle in mu_8"
                            : "Z/" + std::to_string(n) + " rotation action, trivial cocycle";
    std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = a == 0 ? "e" : "r" + std::to_string(a);
        for (int b = 0; b < n; ++b) cayley[a][b] = (a + b) % n;
    }
    s.datum.group = FiniteGroup(cayley, labels);
    std::vector<ExactMatrix> mats;
    if (n == 4) {
        // 90-degree rotation of C^2 (real rational matrices)
        ExactMatrix r = rat_matrix({{0, -1}, {1, 0}});
        ExactMatrix m = ExactMatrix::identity(2);
        for (int a = 0; a < n; ++a) {
            mats.push_back(m);
            m = m * r;
        }
        s.datum.var_names = {"z1", "z2"};
        s.datum.action = LinearAction(2, std::move(mats));
    } else {
        // primitive character action on C^1
        for (int a = 0; a < n; ++a) mats.push_back(one_by_one(Cyclotomic::root_of_unity(n, a)));
        s.datum.var_names = {"z1"};
        s.datum.action = LinearAction(1, std::move(mats));
    }
    if (twisted) {
        std::vector<int> c(n);
        for (int a = 0; a < n; ++a) c[a] = a;
        s.datum.cocycle = TwoCocycle::coboundary(s.datum.group, 8, c);
        s.datum.conductor = 8;
    } else {
        s.datum.cocycle = TwoCocycle::trivial(n);
        s.datum.conductor = lcm_long(4, n);
    }
    return s;
}

Scenario make_d4(bool twisted) {
    Scenario s;
    s.name = twisted ? "d4-twisted" : "d4";
    s.description = twisted
                        ? "dihedral group of the square with the Klein cocycle inflated along "
                          "D4 -> D4/<r^2>"
                        : "dihedral group of the square acting on C^2";
    auto [grp, act] = LinearAction::from_generators(
        {rat_matrix({{0, -1}, {1, 0}}), rat_matrix({{1, 0}, {0, -1}})}, {"r", "s"});
    s.datum.group = std::move(grp);
    s.datum.action = std::move(act);
    s.datum.conductor = 4;
    s.datum.var_names = {"z1", "z2"};
    const int n = s.datum.group.order();
    if (twisted) {
        // q: D4 -> Klein, r -> i, s -> j; pull the quaternion table back.
        std::vector<int> q(n, 0);
        for (int g = 0; g < n; ++g) {
            int x = 0;
            for (char ch : s.datum.group.label(g))
                if (ch == 'r') x ^= 1;
                else if (ch == 's') x ^= 2;
            q[g] = x;
        }
        const auto& base = klein_quaternion_exponents();
        std::vector<std::vector<int>> exps(n, std::vector<int>(n));
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) exps[g][h] = base[q[g]][q[h]];
        s.datum.cocycle = TwoCocycle(2, std::move(exps));
    } else {
        s.datum.cocycle = TwoCocycle::trivial(n);
    }

    // Families (untwisted preset only): trivial, the two reflection-axis
    // parabolics with their sign characters, and the five irreducibles of D4
    // as dimension-0 candidates.
    if (!twisted) {
        auto find_elem = [&](const ExactMatrix& m) {
            for (int g = 0; g < n; ++g)
                if (s.datum.action.matrix(g) == m) return g;
            throw DomainError("d4 preset: element not found");
        };
        int e = s.datum.group.identity();
        int refl_s = find_elem(rat_matrix({{1, 0}, {0, -1}}));
        int refl_rs = find_elem(rat_matrix({{0, 1}, {1, 0}}));
        auto one = one_by_one(Cyclotomic(1));
        auto minus = one_by_one(Cyclotomic(Rational(-1)));

        ParabolicDatum p_empty{"empty", {e}, ExactMatrix(2, 0), rat_matrix({{1, 0}, {0, 1}})};
        std::vector<int> sub_s{std::min(e, refl_s), std::max(e, refl_s)};
        ParabolicDatum p_s{"s", sub_s, rat_matrix({{0}, {1}}), rat_matrix({{1}, {0}})};
        std::vector<int> sub_rs{std::min(e, refl_rs), std::max(e, refl_rs)};
        ParabolicDatum p_rs{"rs", sub_rs, rat_matrix({{1}, {-1}}), rat_matrix({{1}, {1}})};
        std::vector<int> all(n);
        for (int g = 0; g < n; ++g) all[g] = g;
        ParabolicDatum p_full{"full", all, rat_matrix({{1, 0}, {0, 1}}), ExactMatrix(2, 0)};

        s.families.push_back({"triv", p_empty, {"triv", 1, {{e, one}}}});
        s.families.push_back({"sgn_s", p_s, {"sgn_s", 1, {{e, one}, {refl_s, minus}}}});
        s.families.push_back({"sgn_rs", p_rs, {"sgn_rs", 1, {{e, one}, {refl_rs, minus}}}});
        // 1-dim characters of D4 by (value at r, value at s), plus the 2-dim
        // reflection representation itself.
        auto char_family = [&](const std::string& label, long vr, long vs) {
            EllipticRep rep;
            rep.label = label;
            rep.dim = 1;
            for (int g = 0; g < n; ++g) {
                long v = 1;
                for (char ch : s.datum.group.label(g))
                    if (ch == 'r') v *= vr;
                    else if (ch == 's') v *= vs;
                rep.matrices[g] = one_by_one(Cyclotomic(Rational(v)));
            }
            s.families.push_back({label, p_full, std::move(rep)});
        };
        char_family("chi_triv", 1, 1);
        char_family("chi_r", 1, -1);
        char_family("chi_s", -1, 1);
        char_family("chi_rs", -1, -1);
        EllipticRep two;
        two.label = "rho2";
        two.dim = 2;
        for (int g = 0; g < n; ++g) two.matrices[g] = s.datum.action.matrix(g);
        s.families.push_back({"rho2", p_full, std::move(two)});
    }
    return s;
}

RootDatum a2_root_datum(const Rational& k) {
    RootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}};
    rd.simple_coroots = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    rd.k = {KValue{false, k}, KValue{false, k}};
    return rd;
}

// Steinberg of the parabolic spanned by `subset`: 1-dimensional, T_s -> -1,
// O(t_Q) acting at the point with <α, μ> = -k_α for α in the subset.
ParabolicRep steinberg_rep(const HeckeDatum& d_eps, const HeckeParabolic& Q,
                           const std::string& label) {
    ParabolicRep rep;
    rep.label = label;
    rep.dim = 1;
    for (int p : Q.subgroup(d_eps)) {
        if (d_eps.gamma_part(p) != d_eps.wgamma().identity())
            throw DomainError("steinberg builder needs a Γ-free parabolic");
        int len = static_cast<int>(d_eps.reduced_word(p).size());
        rep.t_mats[p] = one_by_one(Cyclotomic(Rational(len % 2 == 0 ? 1 : -1)));
    }
    ExactMatrix B_q = Q.t_q_basis(d_eps);
    // Solve <α, B_q c> = -k_α for the coordinates c of the evaluation point.
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<Cyclotomic> rhs;
    for (int a : Q.root_subset) {
        std::vector<Cyclotomic> row(B_q.cols(), Cyclotomic(0));
        for (int j = 0; j < B_q.cols(); ++j)
            for (int i = 0; i < d_eps.rank(); ++i)
                row[j] += Cyclotomic(d_eps.root().simple_roots[a][i]) * B_q.at(i, j);
        rows.push_back(std::move(row));
        rhs.push_back(Cyclotomic(-d_eps.k_value(a)));
    }
    auto c = ExactMatrix::from_rows(rows).solve(rhs);
    if (!c) throw DomainError("steinberg builder: no evaluation point");
    rep.central_point = *c;
    for (const auto& ci : *c) rep.x_mats.push_back(one_by_one(ci));
    return rep;
}

ParabolicRep trivial_rep(const HeckeDatum& d_eps, const HeckeParabolic& Q,
                         const std::string& label) {
    ParabolicRep rep;
    rep.label = label;
    rep.dim = 1;
    auto H = Q.subgroup(d_eps);
    if (H.size() != 1) throw DomainError("trivial builder applies to the empty parabolic only");
    rep.t_mats[H.front()] = one_by_one(Cyclotomic(1));
    if (Q.t_q_basis(d_eps).cols() != 0)
        throw DomainError("trivial builder applies to the empty parabolic only");
    return rep;
}

HeckeFamily make_hecke_family(const std::string& label, HeckeParabolic Q,
                              const std::string& builder) {
    HeckeFamily f;
    f.label = label;
    f.builder = builder;
    f.parabolic = std::move(Q);
    if (builder == "trivial") {
        f.sigma_at = [label, Q = f.parabolic](const HeckeDatum& d_eps, const Rational&) {
            return trivial_rep(d_eps, Q, label);
        };
    } else if (builder == "steinberg") {
        f.sigma_at = [label, Q = f.parabolic](const HeckeDatum& d_eps, const Rational&) {
            return steinberg_rep(d_eps, Q, label);
        };
    } else {
        throw DomainError("unknown sigma builder: " + builder);
    }
    return f;
}

Scenario make_a2(const Rational& k) {
    Scenario s;
    s.name = "a2";
    s.description = "graded Hecke algebra of type A2 (W = S3 on the coroot lattice), equal "
                    "parameters";
    s.hecke = HeckeDatum(a2_root_datum(k), 4);
    s.datum = s.hecke->crossed_datum();
    s.hecke_families.push_back(make_hecke_family("triv", {"empty", {}, {}}, "trivial"));
    s.hecke_families.push_back(make_hecke_family("st_a", {"alpha", {0}, {}}, "steinberg"));
    s.hecke_families.push_back(make_hecke_family("st_b", {"beta", {1}, {}}, "steinberg"));
    s.hecke_families.push_back(make_hecke_family("st", {"full", {0, 1}, {}}, "steinberg"));
    s.families = crossed_families(*s.hecke, s.hecke_families);
    return s;
}

Scenario make_s3() {
    Scenario s = make_a2(Rational(1));
    s.name = "s3";
    s.description = "S3 acting on the 2-dim reflection representation (coroot coordinates)";
    s.hecke.reset();
    s.hecke_families.clear();
    return s;
}

Scenario make_b2(const Rational& k) {
    Scenario s;
    s.name = "b2";
    s.description = "graded Hecke algebra of type B2, parameters (k, k)";
    RootDatum rd;
    rd.rank = 2;
    rd.simple_roots = {{Rational(2), Rational(-1)}, {Rational(-2), Rational(2)}};
    rd.simple_coroots = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    rd.k = {KValue{false, k}, KValue{false, k}};
    s.hecke = HeckeDatum(rd, 4);
    s.datum = s.hecke->crossed_datum();
    s.hecke_families.push_back(make_hecke_family("triv", {"empty", {}, {}}, "trivial"));
    s.hecke_families.push_back(make_hecke_family("st_a", {"alpha", {0}, {}}, "steinberg"));
    s.hecke_families.push_back(make_hecke_family("st_b", {"beta", {1}, {}}, "steinberg"));
    s.hecke_families.push_back(make_hecke_family("st", {"full", {0, 1}, {}}, "steinberg"));
    s.families = crossed_families(*s.hecke, s.hecke_families);
    return s;
}

Scenario make_quaternion_hecke() {
    // Degenerate Weyl part (no roots): H = O(C^2) ⋊ C[Γ,♮] with the Klein
    // action and cocycle, exercising the twisted paths of the Hecke engine.
    Scenario s;
    s.name = "quaternion-hecke";
    s.description = "graded Hecke datum with empty root system and Γ = Q8/Z(Q8) twisted by ♮";
    RootDatum rd;
    rd.rank = 2;
    rd.gamma_generators = {rat_matrix({{-1, 0}, {0, 1}}), rat_matrix({{1, 0}, {0, -1}})};
    rd.cocycle_m = 2;
    rd.gamma_cocycle_exponents = klein_quaternion_exponents();
    s.hecke = HeckeDatum(rd, 4);
    s.datum = s.hecke->crossed_datum();
    return s;
}

Scenario make_symbolic_a2() {
    Scenario s;
    s.name = "a2-symbolic";
    s.description = "type A2 with the parameter left as the symbol k (algebra operations only)";
    RootDatum rd = a2_root_datum(Rational(1));
    rd.k = {KValue{true, Rational(0), Rational(1)}, KValue{true, Rational(0), Rational(1)}};
    s.hecke = HeckeDatum(rd, 4);
    s.datum = s.hecke->crossed_datum();
    return s;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"quaternion", "d4", "d4-twisted", "s3", "cyclic4", "cyclic4-twisted",
            "cyclic6", "a2", "a2-symbolic", "b2", "quaternion-hecke"};
}

Scenario preset_scenario(const std::string& name) {
    Scenario s;
    if (name == "quaternion") s = make_quaternion();
    else if (name == "d4") s = make_d4(false);
    else if (name == "d4-twisted") s = make_d4(true);
    else if (name == "s3") s = make_s3();
    else if (name == "cyclic4") s = make_cyclic(4, false);
    else if (name == "cyclic4-twisted") s = make_cyclic(4, true);
    else if (name == "cyclic6") s = make_cyclic(6, false);
    else if (name == "a2") s = make_a2(Rational(1));
    else if (name == "a2-symbolic") s = make_symbolic_a2();
    else if (name == "b2") s = make_b2(Rational(1));
    else if (name == "quaternion-hecke") s = make_quaternion_hecke();
    else throw DomainError("unknown preset: " + name);

    s.datum.validate();
    for (const auto& f : s.families) {
        f.parabolic.validate(s.datum);
        f.delta.validate(s.datum, f.parabolic);
    }
    if (s.hecke) s.hecke->validate();
    return s;
}

namespace {

Scenario scenario_from_json(const ordered_json& j, const std::string& origin) {
    Scenario s;
    if (!j.contains("schema_version"))
        throw DomainError(origin + ": missing schema_version");
    s.schema_version = j.at("schema_version").get<int>();
    if (s.schema_version != 1)
        throw DomainError(origin + ": unsupported schema_version " +
                          std::to_string(s.schema_version));
    s.name = j.value("name", "unnamed");
    s.description = j.value("description", "");

    if (j.contains("group")) {
        const auto& jg = j.at("group");
        std::vector<std::string> labels;
        if (jg.contains("labels"))
            for (const auto& l : jg.at("labels")) labels.push_back(l.get<std::string>());
        if (jg.contains("cayley")) {
            std::vector<std::vector<int>> cayley;
            for (const auto& row : jg.at("cayley")) cayley.push_back(row.get<std::vector<int>>());
            s.datum.group = FiniteGroup(std::move(cayley), std::move(labels));
            if (!j.contains("action") || !j.at("action").contains("matrices"))
                throw DomainError(origin + ": cayley group needs action.matrices");
            std::vector<ExactMatrix> mats;
            for (std::size_t i = 0; i < j.at("action").at("matrices").size(); ++i)
                mats.push_back(matrix_from_json(j.at("action").at("matrices")[i],
                                                origin + ":action.matrices"));
            if (mats.empty()) throw DomainError(origin + ": empty action");
            s.datum.action = LinearAction(mats[0].rows(), std::move(mats));
        } else if (jg.contains("generators")) {
            std::vector<ExactMatrix> gens;
            for (std::size_t i = 0; i < jg.at("generators").size(); ++i)
                gens.push_back(matrix_from_json(jg.at("generators")[i], origin + ":group.generators"));
            auto [grp, act] = LinearAction::from_generators(gens, labels);
            s.datum.group = std::move(grp);
            s.datum.action = std::move(act);
        } else {
            throw DomainError(origin + ": group needs cayley or generators");
        }
        if (j.contains("cocycle")) {
            const auto& jc = j.at("cocycle");
            std::vector<std::vector<int>> exps;
            for (const auto& row : jc.at("exponents")) exps.push_back(row.get<std::vector<int>>());
            s.datum.cocycle = TwoCocycle(jc.at("m").get<int>(), std::move(exps));
        } else {
            s.datum.cocycle = TwoCocycle::trivial(s.datum.group.order());
        }
        s.datum.conductor = j.value("conductor", 1);
        if (j.contains("variables"))
            for (const auto& v : j.at("variables")) s.datum.var_names.push_back(v.get<std::string>());
        else
            for (int i = 0; i < s.datum.dim(); ++i)
                s.datum.var_names.push_back("z" + std::to_string(i + 1));
    }

    std::map<std::string, ParabolicDatum> parabolics;
    if (j.contains("parabolics"))
        for (const auto& jp : j.at("parabolics")) {
            ParabolicDatum p;
            p.label = jp.at("label").get<std::string>();
            for (const auto& l : jp.at("subgroup")) {
                auto idx = s.datum.group.index_of_label(l.get<std::string>());
                if (!idx) throw DomainError(origin + ": unknown element label in parabolic " + p.label);
                p.subgroup.push_back(*idx);
            }
            std::sort(p.subgroup.begin(), p.subgroup.end());
            p.v_p = jp.contains("v_p") ? matrix_from_json(jp.at("v_p"), origin + ":v_p")
                                       : ExactMatrix(s.datum.dim(), 0);
            p.v_up = jp.contains("v_up") ? matrix_from_json(jp.at("v_up"), origin + ":v_up")
                                         : ExactMatrix(s.datum.dim(), 0);
            parabolics[p.label] = p;
        }
    if (j.contains("families"))
        for (const auto& jf : j.at("families")) {
            RepFamily f;
            f.label = jf.at("label").get<std::string>();
            auto pit = parabolics.find(jf.at("parabolic").get<std::string>());
            if (pit == parabolics.end())
                throw DomainError(origin + ": family " + f.label + " references unknown parabolic");
            f.parabolic = pit->second;
            const auto& jd = jf.at("delta");
            f.delta.label = jd.value("label", f.label);
            f.delta.dim = jd.at("dim").get<int>();
            for (auto it = jd.at("matrices").begin(); it != jd.at("matrices").end(); ++it) {
                auto idx = s.datum.group.index_of_label(it.key());
                if (!idx) throw DomainError(origin + ": unknown element label in delta of " + f.label);
                f.delta.matrices[*idx] = matrix_from_json(it.value(), origin + ":delta");
            }
            s.families.push_back(std::move(f));
        }

    if (j.contains("hecke")) {
        const auto& jh = j.at("hecke");
        RootDatum rd;
        rd.rank = jh.at("rank").get<int>();
        if (jh.contains("simple_roots"))
            for (const auto& row : jh.at("simple_roots")) {
                std::vector<Rational> r;
                for (const auto& x : row) r.push_back(rational_from_json(x, origin + ":simple_roots"));
                rd.simple_roots.push_back(std::move(r));
            }
        if (jh.contains("simple_coroots"))
            for (const auto& row : jh.at("simple_coroots")) {
                std::vector<Rational> r;
                for (const auto& x : row) r.push_back(rational_from_json(x, origin + ":simple_coroots"));
                rd.simple_coroots.push_back(std::move(r));
            }
        if (jh.contains("gamma_generators"))
            for (const auto& m : jh.at("gamma_generators"))
                rd.gamma_generators.push_back(matrix_from_json(m, origin + ":gamma_generators"));
        if (jh.contains("k"))
            for (const auto& kv : jh.at("k")) {
                if (kv.is_string() && kv.get<std::string>() == "k")
                    rd.k.push_back(KValue{true, Rational(0), Rational(1)});
                else
                    rd.k.push_back(KValue{false, rational_from_json(kv, origin + ":k")});
            }
        if (jh.contains("cocycle")) {
            rd.cocycle_m = jh.at("cocycle").at("m").get<int>();
            for (const auto& row : jh.at("cocycle").at("exponents"))
                rd.gamma_cocycle_exponents.push_back(row.get<std::vector<int>>());
        }
        s.hecke = HeckeDatum(std::move(rd), j.value("conductor", 1));
        if (!j.contains("group")) s.datum = s.hecke->crossed_datum();
        if (jh.contains("families"))
            for (const auto& jf : jh.at("families")) {
                HeckeParabolic Q;
                Q.label = jf.at("parabolic").get<std::string>();
                if (jf.contains("roots")) Q.root_subset = jf.at("roots").get<std::vector<int>>();
                if (jf.contains("gamma"))
                    for (const auto& l : jf.at("gamma")) {
                        auto idx = s.hecke->wgamma().index_of_label(l.get<std::string>());
                        if (!idx) throw DomainError(origin + ": unknown Γ element in hecke family");
                        Q.gamma_elems.push_back(*idx);
                    }
                s.hecke_families.push_back(make_hecke_family(jf.at("label").get<std::string>(),
                                                             std::move(Q),
                                                             jf.at("sigma").get<std::string>()));
            }
        if (s.families.empty() && !s.hecke_families.empty())
            s.families = crossed_families(*s.hecke, s.hecke_families);
    }

    if (s.datum.group.order() == 0) throw DomainError(origin + ": scenario has no group");
    s.datum.validate();
    for (const auto& f : s.families) {
        f.parabolic.validate(s.datum);
        f.delta.validate(s.datum, f.parabolic);
    }
    if (s.hecke) s.hecke->validate();
    return s;
}

} // namespace

Scenario scenario_from_json_text(const std::string& text, const std::string& origin) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(origin + ": JSON parse error at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }
    return scenario_from_json(j, origin);
}

Scenario load_scenario(const std::string& path_or_preset) {
    for (const auto& p : preset_names())
        if (p == path_or_preset) return preset_scenario(p);
    std::ifstream in(path_or_preset);
    if (!in) throw DomainError("cannot open scenario file or unknown preset: " + path_or_preset);
    std::stringstream ss;
    ss << in.rdbuf();
    return scenario_from_json_text(ss.str(), path_or_preset);
}

std::string scenario_to_json(const Scenario& s) {
    ordered_json j;
    j["schema_version"] = s.schema_version;
    j["name"] = s.name;
    j["description"] = s.description;
    j["conductor"] = s.datum.conductor;
    j["variables"] = s.datum.var_names;
    ordered_json jg;
    ordered_json cayley = ordered_json::array();
    for (int a = 0; a < s.datum.group.order(); ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < s.datum.group.order(); ++b) row.push_back(s.datum.group.mult(a, b));
        cayley.push_back(row);
    }
    jg["cayley"] = cayley;
    jg["labels"] = s.datum.group.labels();
    j["group"] = jg;
    ordered_json jc;
    jc["m"] = s.datum.cocycle.order_of_values();
    ordered_json exps = ordered_json::array();
    for (int a = 0; a < s.datum.group.order(); ++a) {
        ordered_json row = ordered_json::array();
        for (int b = 0; b < s.datum.group.order(); ++b) row.push_back(s.datum.cocycle.exponent(a, b));
        exps.push_back(row);
    }
    jc["exponents"] = exps;
    j["cocycle"] = jc;
    ordered_json ja;
    ordered_json mats = ordered_json::array();
    for (int g = 0; g < s.datum.group.order(); ++g)
        mats.push_back(matrix_to_json(s.datum.action.matrix(g)));
    ja["matrices"] = mats;
    j["action"] = ja;
    if (!s.families.empty()) {
        ordered_json jps = ordered_json::array();
        ordered_json jfs = ordered_json::array();
        std::set<std::string> seen;
        for (const auto& f : s.families) {
            if (seen.insert(f.parabolic.label).second) {
                ordered_json jp;
                jp["label"] = f.parabolic.label;
                ordered_json sub = ordered_json::array();
                for (int g : f.parabolic.subgroup) sub.push_back(s.datum.group.label(g));
                jp["subgroup"] = sub;
                jp["v_p"] = matrix_to_json(f.parabolic.v_p);
                jp["v_up"] = matrix_to_json(f.parabolic.v_up);
                jps.push_back(jp);
            }
            ordered_json jf;
            jf["label"] = f.label;
            jf["parabolic"] = f.parabolic.label;
            ordered_json jd;
            jd["label"] = f.delta.label;
            jd["dim"] = f.delta.dim;
            ordered_json jm;
            for (const auto& [g, m] : f.delta.matrices) jm[s.datum.group.label(g)] = matrix_to_json(m);
            jd["matrices"] = jm;
            jf["delta"] = jd;
            jfs.push_back(jf);
        }
        j["parabolics"] = jps;
        j["families"] = jfs;
    }
    if (s.hecke) {
        const RootDatum& rd = s.hecke->root();
        ordered_json jh;
        jh["rank"] = rd.rank;
        ordered_json roots = ordered_json::array(), coroots = ordered_json::array();
        for (const auto& row : rd.simple_roots) {
            ordered_json r = ordered_json::array();
            for (const auto& x : row) r.push_back(x.str());
            roots.push_back(r);
        }
        for (const auto& row : rd.simple_coroots) {
            ordered_json r = ordered_json::array();
            for (const auto& x : row) r.push_back(x.str());
            coroots.push_back(r);
        }
        jh["simple_roots"] = roots;
        jh["simple_coroots"] = coroots;
        ordered_json jk = ordered_json::array();
        for (const auto& kv : rd.k) jk.push_back(kv.symbolic ? std::string("k") : kv.value.str());
        jh["k"] = jk;
        if (!rd.gamma_generators.empty()) {
            ordered_json gg = ordered_json::array();
            for (const auto& m : rd.gamma_generators) gg.push_back(matrix_to_json(m));
            jh["gamma_generators"] = gg;
            if (!rd.gamma_cocycle_exponents.empty()) {
                ordered_json jc2;
                jc2["m"] = rd.cocycle_m;
                jc2["exponents"] = rd.gamma_cocycle_exponents;
                jh["cocycle"] = jc2;
            }
        }
        if (!s.hecke_families.empty()) {
            ordered_json jf = ordered_json::array();
            for (const auto& f : s.hecke_families) {
                ordered_json e;
                e["label"] = f.label;
                e["parabolic"] = f.parabolic.label;
                e["roots"] = f.parabolic.root_subset;
                e["sigma"] = f.builder;
                jf.push_back(e);
            }
            jh["families"] = jf;
        }
        j["hecke"] = jh;
    }
    return j.dump(2) + "\n";
}

} // namespace heckehom
