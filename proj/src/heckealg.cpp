#include "heckehom/heckealg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace heckehom {

namespace {

std::vector<Cyclotomic> to_cyclo_row(const std::vector<Rational>& r) {
    std::vector<Cyclotomic> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) out[i] = Cyclotomic(r[i]);
    return out;
}

} // namespace

ExactMatrix RootDatum::reflection_matrix(int alpha) const {
    // s_α = 1 - α^∨ ⊗ α
    ExactMatrix m = ExactMatrix::identity(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            m.at(i, j) -= Cyclotomic(simple_coroots[alpha][i] * simple_roots[alpha][j]);
    return m;
}

HeckeDatum::HeckeDatum(RootDatum root, int conductor)
    : root_(std::move(root)), conductor_(conductor) {
    const int r = root_.rank;
    const int nsimple = static_cast<int>(root_.simple_roots.size());
    if (static_cast<int>(root_.simple_coroots.size()) != nsimple ||
        static_cast<int>(root_.k.size()) != nsimple)
        throw DomainError("root datum: roots, coroots and k must have equal length");
    for (int a = 0; a < nsimple; ++a) {
        Rational pairing(0);
        for (int i = 0; i < r; ++i) pairing += root_.simple_roots[a][i] * root_.simple_coroots[a][i];
        if (pairing != Rational(2)) throw DomainError("root datum: <α, α^∨> must equal 2");
    }

    std::vector<ExactMatrix> gens;
    std::vector<std::string> gen_labels;
    for (int a = 0; a < nsimple; ++a) {
        gens.push_back(root_.reflection_matrix(a));
        gen_labels.push_back(std::string(1, static_cast<char>('a' + a)));
    }
    for (std::size_t gi = 0; gi < root_.gamma_generators.size(); ++gi) {
        gens.push_back(root_.gamma_generators[gi]);
        gen_labels.push_back("c" + std::to_string(gi + 1));
    }
    auto [grp, act] = LinearAction::from_generators(gens, gen_labels);
    wgamma_ = std::move(grp);
    action_ = std::move(act);
    const int n = wgamma_.order();

    s_index_.resize(nsimple);
    for (int a = 0; a < nsimple; ++a) {
        bool found = false;
        for (int u = 0; u < n; ++u)
            if (action_.matrix(u) == gens[a]) { s_index_[a] = u; found = true; break; }
        if (!found) throw DomainError("root datum: reflection not found in closure");
    }

    // W = closure of the simple reflections; Γ = closure of the Γ generators.
    std::vector<int> w_elems = wgamma_.subgroup_closure(s_index_);
    std::set<int> w_set(w_elems.begin(), w_elems.end());
    std::vector<int> gamma_gen_idx;
    for (const auto& gmat : root_.gamma_generators)
        for (int u = 0; u < n; ++u)
            if (action_.matrix(u) == gmat) { gamma_gen_idx.push_back(u); break; }
    gamma_elems_ = wgamma_.subgroup_closure(gamma_gen_idx);
    for (int g : gamma_elems_)
        if (w_set.count(g) && g != wgamma_.identity())
            throw DomainError("root datum: W and Γ overlap nontrivially");
    if (w_elems.size() * gamma_elems_.size() != static_cast<std::size_t>(n))
        throw DomainError("root datum: WΓ does not factor as W⋊Γ");

    gamma_part_.assign(n, -1);
    for (int u = 0; u < n; ++u)
        for (int g : gamma_elems_)
            if (w_set.count(wgamma_.mult(u, wgamma_.inverse(g)))) { gamma_part_[u] = g; break; }
    for (int u = 0; u < n; ++u)
        if (gamma_part_[u] < 0) throw DomainError("root datum: element without Γ-part");

    // Lengths on W by BFS, then lex-smallest reduced words by greedy descent.
    std::vector<int> length(n, -1);
    length[wgamma_.identity()] = 0;
    std::vector<int> queue{wgamma_.identity()};
    std::size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int a = 0; a < nsimple; ++a) {
            int v = wgamma_.mult(s_index_[a], u);
            if (w_set.count(v) && length[v] < 0) {
                length[v] = length[u] + 1;
                queue.push_back(v);
            }
        }
    }
    words_.assign(n, {});
    for (int u = 0; u < n; ++u) {
        int w = wgamma_.mult(u, wgamma_.inverse(gamma_part_[u]));
        std::vector<int> word;
        int cur = w;
        while (cur != wgamma_.identity()) {
            bool moved = false;
            for (int a = 0; a < nsimple; ++a) {
                int next = wgamma_.mult(s_index_[a], cur);
                if (length[next] == length[cur] - 1) {
                    word.push_back(a);
                    cur = next;
                    moved = true;
                    break;
                }
            }
            if (!moved) throw DomainError("reduced word computation failed");
        }
        words_[u] = std::move(word);
    }

    // Inflated cocycle: ♮(u,v) = ♮_Γ(γ(u), γ(v)), Γ table indexed by the
    // standalone closure order of the Γ generators.
    std::vector<std::vector<int>> infl(n, std::vector<int>(n, 0));
    if (!root_.gamma_cocycle_exponents.empty() && !root_.gamma_generators.empty()) {
        auto [ggrp, gact] = LinearAction::from_generators(root_.gamma_generators);
        gamma_ = std::move(ggrp);
        if (static_cast<int>(root_.gamma_cocycle_exponents.size()) != gamma_.order())
            throw DomainError("Γ cocycle table size does not match the closed Γ group");
        std::vector<int> gidx(n, -1);
        for (int g : gamma_elems_) {
            for (int j = 0; j < gamma_.order(); ++j)
                if (gact.matrix(j) == action_.matrix(g)) { gidx[g] = j; break; }
            if (gidx[g] < 0) throw DomainError("Γ element not found in standalone closure");
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                infl[u][v] =
                    root_.gamma_cocycle_exponents[gidx[gamma_part_[u]]][gidx[gamma_part_[v]]];
    }
    cocycle_ = TwoCocycle(root_.cocycle_m, std::move(infl));
    if (conductor_ % root_.cocycle_m != 0) conductor_ = conductor_ * root_.cocycle_m;

    symbolic_k_ = std::any_of(root_.k.begin(), root_.k.end(),
                              [](const KValue& kv) { return kv.symbolic; });
    nvars_ = r + (symbolic_k_ ? 1 : 0);
    var_names_.clear();
    for (int i = 0; i < r; ++i) var_names_.push_back("x" + std::to_string(i + 1));
    if (symbolic_k_) var_names_.push_back("k");

    act_ext_.resize(n);
    for (int u = 0; u < n; ++u) {
        ExactMatrix m(nvars_, nvars_);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m.at(i, j) = action_.matrix(u).at(i, j);
        if (symbolic_k_) m.at(r, r) = Cyclotomic(1);
        act_ext_[u] = std::move(m);
    }

    // Readable labels from reduced words and Γ-parts.
    std::vector<std::string> labels(n);
    for (int u = 0; u < n; ++u) {
        std::string s;
        for (int a : words_[u]) s += static_cast<char>('a' + a);
        if (gamma_part_[u] != wgamma_.identity()) s += wgamma_.label(gamma_part_[u]);
        labels[u] = s.empty() ? "e" : s;
    }
    wgamma_ = wgamma_.with_labels(std::move(labels));
}

MultiPoly HeckeDatum::root_form(int alpha) const {
    std::vector<Cyclotomic> coeffs(nvars_, Cyclotomic(0));
    for (int j = 0; j < root_.rank; ++j) coeffs[j] = Cyclotomic(root_.simple_roots[alpha][j]);
    return MultiPoly::linear_form(coeffs);
}

MultiPoly HeckeDatum::k_form(int alpha) const {
    const KValue& kv = root_.k[alpha];
    if (!kv.symbolic) return MultiPoly::constant(nvars_, Cyclotomic(kv.value));
    return MultiPoly::variable(nvars_, root_.rank).scaled(Cyclotomic(kv.coeff));
}

Rational HeckeDatum::k_value(int alpha) const {
    if (root_.k[alpha].symbolic)
        throw DomainError("operation requires a rational parameter k; instantiate the symbol");
    return root_.k[alpha].value;
}

HeckeDatum HeckeDatum::with_parameter(const Rational& eps) const {
    RootDatum r = root_;
    for (auto& kv : r.k) {
        if (kv.symbolic)
            kv.coeff *= eps;
        else
            kv.value *= eps;
    }
    return HeckeDatum(std::move(r), conductor_);
}

MultiPoly HeckeDatum::act_on_poly(int u, const MultiPoly& f) const {
    return f.substitute_linear(act_ext_[wgamma_.inverse(u)]);
}

TwistedGroupDatum HeckeDatum::crossed_datum() const {
    TwistedGroupDatum d;
    d.group = wgamma_;
    d.cocycle = cocycle_;
    d.action = action_;
    d.conductor = conductor_;
    for (int i = 0; i < root_.rank; ++i) d.var_names.push_back("x" + std::to_string(i + 1));
    return d;
}

void HeckeDatum::validate() const {
    wgamma_.validate();
    action_.validate(wgamma_);
    CocycleCheck c = validate_cocycle(wgamma_, cocycle_);
    if (!c.ok) throw DomainError("inflated cocycle is invalid");
    const int nsimple = num_simple();
    for (int a = 0; a < nsimple; ++a) {
        int s = s_index_[a];
        if (wgamma_.mult(s, s) != wgamma_.identity())
            throw DomainError("simple reflection is not an involution");
        auto av = to_cyclo_row(root_.simple_coroots[a]);
        auto img = action_.act(s, av);
        for (int i = 0; i < root_.rank; ++i)
            if (img[i] != -av[i]) throw DomainError("s_α does not negate its coroot");
    }
    // WΓ-invariance of k: whenever u maps α to ±β among the simple roots,
    // require k_α = k_β.
    for (int u = 0; u < wgamma_.order(); ++u)
        for (int a = 0; a < nsimple; ++a) {
            const ExactMatrix& M = action_.matrix(wgamma_.inverse(u));
            std::vector<Cyclotomic> moved(root_.rank, Cyclotomic(0));
            for (int j = 0; j < root_.rank; ++j)
                for (int i = 0; i < root_.rank; ++i)
                    moved[j] += Cyclotomic(root_.simple_roots[a][i]) * M.at(i, j);
            for (int b = 0; b < nsimple; ++b) {
                auto beta = to_cyclo_row(root_.simple_roots[b]);
                bool plus = true, minus = true;
                for (int j = 0; j < root_.rank; ++j) {
                    if (moved[j] != beta[j]) plus = false;
                    if (moved[j] != -beta[j]) minus = false;
                }
                if (plus || minus) {
                    const KValue &ka = root_.k[a], &kb = root_.k[b];
                    if (ka.symbolic != kb.symbolic ||
                        (ka.symbolic ? ka.coeff != kb.coeff : ka.value != kb.value))
                        throw DomainError("parameter k is not WΓ-invariant");
                }
            }
        }
}

HeckeElement HeckeElement::basis(const HeckeDatum& d, int u) {
    return term(d, u, MultiPoly::constant(d.nvars(), Cyclotomic(1)));
}

HeckeElement HeckeElement::poly(const HeckeDatum& d, const MultiPoly& f) {
    return term(d, d.wgamma().identity(), f);
}

HeckeElement HeckeElement::term(const HeckeDatum& d, int u, const MultiPoly& f) {
    (void)d;
    HeckeElement x(f.nvars());
    if (!f.is_zero()) x.t_[u] = f;
    return x;
}

void HeckeElement::add_term(int u, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto it = t_.find(u);
    if (it == t_.end()) {
        t_[u] = f;
        nvars_ = f.nvars();
    } else {
        it->second += f;
        if (it->second.is_zero()) t_.erase(it);
    }
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r = *this;
    for (auto& [u, f] : r.t_) f = -f;
    return r;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    HeckeElement r = a;
    for (const auto& [u, f] : b.t_) r.add_term(u, f);
    return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }

HeckeElement HeckeElement::scaled(const Cyclotomic& c) const {
    HeckeElement r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [u, f] : t_) r.t_[u] = f.scaled(c);
    return r;
}

std::string HeckeElement::str(const HeckeDatum& d) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [u, f] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str(d.var_names()) << ")*T[" << d.wgamma().label(u) << "]";
    }
    return os.str();
}

MultiPoly demazure(const HeckeDatum& d, int alpha, const MultiPoly& f) {
    int s = d.simple_reflection(alpha);
    MultiPoly diff = f - d.act_on_poly(s, f);
    if (diff.is_zero()) return MultiPoly(d.nvars());
    return MultiPoly::exact_divide(diff, d.root_form(alpha));
}

HeckeElement commute_left_with_word(const HeckeDatum& d, const std::vector<int>& word,
                                    int gamma_elem, const MultiPoly& f) {
    // T_{s_{i1}}···T_{s_il}·T_γ·f in normal form: T_γ f = (γ·f) T_γ, then the
    // ladder T_s h = s(h) T_s + k_α Δ_α(h), walked from the innermost letter.
    HeckeElement acc(d.nvars());
    acc.add_term(gamma_elem, d.act_on_poly(gamma_elem, f));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int a = *it;
        int s = d.simple_reflection(a);
        HeckeElement next(d.nvars());
        for (const auto& [u, h] : acc.terms()) {
            next.add_term(d.wgamma().mult(s, u), d.act_on_poly(s, h));
            next.add_term(u, d.k_form(a) * demazure(d, a, h));
        }
        acc = std::move(next);
    }
    return acc;
}

HeckeElement hecke_multiply(const HeckeDatum& d, const HeckeElement& a, const HeckeElement& b) {
    HeckeElement r(d.nvars());
    for (const auto& [w, fw] : a.terms())
        for (const auto& [x, gx] : b.terms()) {
            HeckeElement moved = commute_left_with_word(d, d.reduced_word(w), d.gamma_part(w), gx);
            for (const auto& [u, hu] : moved.terms()) {
                Cyclotomic factor = d.cocycle().value(u, x);
                r.add_term(d.wgamma().mult(u, x), (fw * hu).scaled(factor));
            }
        }
    return r;
}

HeckeElement m_epsilon(const HeckeDatum& d, const Rational& eps, const HeckeElement& a) {
    ExactMatrix M(d.nvars(), d.nvars());
    for (int i = 0; i < d.rank(); ++i) M.at(i, i) = Cyclotomic(eps);
    if (d.symbolic_k()) M.at(d.rank(), d.rank()) = Cyclotomic(1);
    HeckeElement r(d.nvars());
    for (const auto& [u, f] : a.terms()) r.add_term(u, f.substitute_linear(M));
    return r;
}

TwistedElement to_crossed(const HeckeDatum& d, const HeckeElement& a) {
    if (d.symbolic_k())
        throw DomainError("crossed-product conversion requires a rational parameter k");
    TwistedElement out(d.nvars());
    for (const auto& [u, f] : a.terms())
        out.add_term(u, d.act_on_poly(d.wgamma().inverse(u), f)); // f T_u = T_u (u^{-1}·f)
    return out;
}

HeckeRep HeckeRep::from_generators(const HeckeDatum& d,
                                   const std::map<int, ExactMatrix>& reflection_images,
                                   const std::map<int, ExactMatrix>& gamma_images,
                                   std::vector<ExactMatrix> x_images, std::string label) {
    HeckeRep rep;
    rep.label = std::move(label);
    rep.x_mats = std::move(x_images);
    const int n = d.wgamma().order();
    if (rep.x_mats.empty()) throw DomainError("representation needs coordinate matrices");
    rep.dim = rep.x_mats[0].rows();
    rep.t_mats.resize(n);
    for (int u = 0; u < n; ++u) {
        ExactMatrix m = ExactMatrix::identity(rep.dim);
        for (int a : d.reduced_word(u)) m = m * reflection_images.at(d.simple_reflection(a));
        int g = d.gamma_part(u);
        if (g != d.wgamma().identity()) m = m * gamma_images.at(g);
        rep.t_mats[u] = std::move(m);
    }
    return rep;
}

HeckeRep HeckeRep::one_dimensional(const HeckeDatum& d, const std::vector<Cyclotomic>& signs,
                                   const std::vector<Cyclotomic>& point, std::string label) {
    HeckeRep rep;
    rep.label = std::move(label);
    rep.dim = 1;
    rep.t_mats.resize(d.wgamma().order());
    for (int u = 0; u < d.wgamma().order(); ++u)
        rep.t_mats[u] = ExactMatrix(1, 1, {signs[u]});
    for (int i = 0; i < d.rank(); ++i) rep.x_mats.push_back(ExactMatrix(1, 1, {point[i]}));
    rep.known_weights.push_back(point);
    return rep;
}

ExactMatrix HeckeRep::poly_matrix(const HeckeDatum& d, const MultiPoly& f) const {
    if (static_cast<int>(x_mats.size()) != d.rank())
        throw DomainError("representation has wrong number of coordinate matrices");
    if (d.symbolic_k()) {
        for (const auto& [e, c] : f.terms())
            if (static_cast<int>(e.size()) > d.rank() && e[d.rank()] != 0)
                throw DomainError("cannot apply a representation to a symbolic-k polynomial");
    }
    ExactMatrix acc(dim, dim);
    for (const auto& [e, c] : f.terms()) {
        ExactMatrix term = ExactMatrix::identity(dim).scaled(c);
        for (int i = 0; i < d.rank(); ++i)
            for (int p = 0; p < e[i]; ++p) term = term * x_mats[i];
        acc = acc + term;
    }
    return acc;
}

ExactMatrix HeckeRep::element_matrix(const HeckeDatum& d, const HeckeElement& a) const {
    ExactMatrix acc(dim, dim);
    for (const auto& [u, f] : a.terms()) acc = acc + poly_matrix(d, f) * t_mats[u];
    return acc;
}

Cyclotomic HeckeRep::char_value(const HeckeDatum& d, const HeckeElement& a) const {
    ExactMatrix m = element_matrix(d, a);
    Cyclotomic tr(0);
    for (int i = 0; i < dim; ++i) tr += m.at(i, i);
    return tr;
}

RepCheck is_representation(const HeckeDatum& d, const HeckeRep& rep) {
    if (d.symbolic_k()) throw DomainError("is_representation requires a rational parameter k");
    const int n = d.wgamma().order();
    if (static_cast<int>(rep.t_mats.size()) != n) return {false, "missing T-matrices"};
    for (int i = 0; i < d.rank(); ++i)
        for (int j = i + 1; j < d.rank(); ++j)
            if (rep.x_mats[i] * rep.x_mats[j] != rep.x_mats[j] * rep.x_mats[i])
                return {false, "coordinate matrices do not commute"};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            ExactMatrix lhs = rep.t_mats[u] * rep.t_mats[v];
            ExactMatrix rhs = rep.t_mats[d.wgamma().mult(u, v)].scaled(d.cocycle().value(u, v));
            if (lhs != rhs) return {false, "twisted group relation fails"};
        }
    // Cross relation f T_s - T_s s(f) = k_α Δ_α(f) on x_j and x_j·x_l.
    std::vector<MultiPoly> probes;
    for (int j = 0; j < d.rank(); ++j) probes.push_back(MultiPoly::variable(d.nvars(), j));
    for (int j = 0; j < d.rank(); ++j)
        for (int l = j; l < d.rank(); ++l)
            probes.push_back(MultiPoly::variable(d.nvars(), j) * MultiPoly::variable(d.nvars(), l));
    for (int a = 0; a < d.num_simple(); ++a) {
        int s = d.simple_reflection(a);
        for (const auto& f : probes) {
            ExactMatrix lhs = rep.poly_matrix(d, f) * rep.t_mats[s] -
                              rep.t_mats[s] * rep.poly_matrix(d, d.act_on_poly(s, f));
            ExactMatrix rhs =
                rep.poly_matrix(d, demazure(d, a, f)).scaled(Cyclotomic(d.k_value(a)));
            if (lhs != rhs) return {false, "cross relation fails on " + f.str(d.var_names())};
        }
    }
    for (int u = 0; u < n; ++u) {
        if (!d.reduced_word(u).empty() || u == d.wgamma().identity()) continue; // pure Γ
        for (int j = 0; j < d.rank(); ++j) {
            MultiPoly xj = MultiPoly::variable(d.nvars(), j);
            if (rep.t_mats[u] * rep.poly_matrix(d, xj) !=
                rep.poly_matrix(d, d.act_on_poly(u, xj)) * rep.t_mats[u])
                return {false, "Γ conjugation relation fails"};
        }
    }
    return {true, ""};
}

std::vector<int> HeckeParabolic::subgroup(const HeckeDatum& d) const {
    std::vector<int> gens;
    for (int a : root_subset) gens.push_back(d.simple_reflection(a));
    for (int g : gamma_elems) gens.push_back(g);
    if (gens.empty()) return {d.wgamma().identity()};
    return d.wgamma().subgroup_closure(gens);
}

ExactMatrix HeckeParabolic::t_q_basis(const HeckeDatum& d) const {
    // Canonical H-stable complement of t^H: span{(h-1)v}. Candidate columns
    // are the Δ_Q coroots first (so Weyl-only parabolics get coroot
    // coordinates), then the (h-1) images of the coordinate vectors.
    std::vector<std::vector<Cyclotomic>> cand;
    for (int a : root_subset) cand.push_back(to_cyclo_row(d.root().simple_coroots[a]));
    for (int h : subgroup(d)) {
        ExactMatrix m = d.action().matrix(h) - ExactMatrix::identity(d.rank());
        for (int j = 0; j < d.rank(); ++j) cand.push_back(m.col(j));
    }
    ExactMatrix basis(d.rank(), 0);
    for (const auto& v : cand) {
        if (std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); }))
            continue;
        ExactMatrix trial =
            basis.cols() == 0 ? ExactMatrix::column(v) : basis.hstack(ExactMatrix::column(v));
        if (trial.rank() > basis.cols()) basis = std::move(trial);
    }
    return basis;
}

ExactMatrix HeckeParabolic::t_up_basis(const HeckeDatum& d) const {
    // t^H: common fixed space of the parabolic subgroup.
    std::vector<std::vector<Cyclotomic>> rows;
    for (int h : subgroup(d)) {
        ExactMatrix m = d.action().matrix(h) - ExactMatrix::identity(d.rank());
        for (int i = 0; i < d.rank(); ++i) {
            std::vector<Cyclotomic> row(d.rank());
            for (int j = 0; j < d.rank(); ++j) row[j] = m.at(i, j);
            rows.push_back(std::move(row));
        }
    }
    return ExactMatrix::from_rows(rows).nullspace();
}

namespace {

// Σ T_y g_y equal to f·T_{s_{ij}}···T_{s_il}·T_γ (right-normal form), via
// f T_s = T_s s(f) + k_α Δ_α(f) and f T_γ = T_γ (γ^{-1}·f).
std::vector<std::pair<int, MultiPoly>> push_right(const HeckeDatum& d,
                                                  const std::vector<int>& word, std::size_t j,
                                                  int gamma_elem, const MultiPoly& f) {
    if (f.is_zero()) return {};
    if (j == word.size())
        return {{gamma_elem, d.act_on_poly(d.wgamma().inverse(gamma_elem), f)}};
    int a = word[j];
    int s = d.simple_reflection(a);
    auto first = push_right(d, word, j + 1, gamma_elem, d.act_on_poly(s, f));
    std::vector<std::pair<int, MultiPoly>> out;
    out.reserve(first.size() * 2);
    for (auto& [y, g] : first) out.emplace_back(d.wgamma().mult(s, y), std::move(g));
    auto second = push_right(d, word, j + 1, gamma_elem, d.k_form(a) * demazure(d, a, f));
    for (auto& [y, g] : second) out.emplace_back(y, std::move(g));
    return out;
}

// Reduced word of a parabolic element using only Δ_Q letters.
std::vector<int> parabolic_word(const HeckeDatum& d, const HeckeParabolic& Q, int p) {
    int w = d.wgamma().mult(p, d.wgamma().inverse(d.gamma_part(p)));
    std::vector<int> word;
    int guard = 0;
    while (w != d.wgamma().identity()) {
        if (++guard > 1000) throw DomainError("parabolic word computation failed");
        bool moved = false;
        for (int a : Q.root_subset) {
            int next = d.wgamma().mult(d.simple_reflection(a), w);
            if (d.reduced_word(next).size() < d.reduced_word(w).size()) {
                word.push_back(a);
                w = next;
                moved = true;
                break;
            }
        }
        if (!moved) throw DomainError("element is not in the parabolic subgroup");
    }
    return word;
}

} // namespace

HeckeRep hecke_induce(const HeckeDatum& d, const HeckeParabolic& Q, const ParabolicRep& sigma,
                      const std::vector<Cyclotomic>& lambda, bool check_relations) {
    if (d.symbolic_k()) throw DomainError("hecke_induce requires a rational parameter k");
    auto H = Q.subgroup(d);
    ExactMatrix B_q = Q.t_q_basis(d);
    ExactMatrix B_up = Q.t_up_basis(d);
    if (B_up.cols() > 0) {
        if (!B_up.solve(lambda).has_value())
            throw DomainError("induction point does not lie in t^Q");
    } else {
        for (const auto& c : lambda)
            if (!c.is_zero()) throw DomainError("induction point does not lie in t^Q");
    }
    if (static_cast<int>(sigma.x_mats.size()) != B_q.cols())
        throw DomainError("σ has the wrong number of t_Q coordinate matrices");

    auto cosets = d.wgamma().coset_reps(H);
    std::vector<int> coset_of(d.wgamma().order(), -1);
    for (std::size_t c = 0; c < cosets.size(); ++c)
        for (int h : H) coset_of[d.wgamma().mult(cosets[c], h)] = static_cast<int>(c);

    const int sdim = sigma.dim;
    const int dim = static_cast<int>(cosets.size()) * sdim;
    HeckeRep rep;
    rep.label = "ind(" + Q.label + "," + sigma.label + ")";
    rep.dim = dim;

    // Ambient coordinate operators on V_σ: X_i = λ_i·1 + Σ_j B_q(i,j)·σ.x[j].
    std::vector<ExactMatrix> X(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
        ExactMatrix m = ExactMatrix::identity(sdim).scaled(lambda[i]);
        for (int j = 0; j < B_q.cols(); ++j) m = m + sigma.x_mats[j].scaled(B_q.at(i, j));
        X[i] = std::move(m);
    }
    auto sigma_poly = [&](const MultiPoly& f) {
        ExactMatrix acc(sdim, sdim);
        for (const auto& [e, c] : f.terms()) {
            ExactMatrix term = ExactMatrix::identity(sdim).scaled(c);
            for (int i = 0; i < d.rank(); ++i)
                for (int p = 0; p < e[i]; ++p) term = term * X[i];
            acc = acc + term;
        }
        return acc;
    };
    auto apply_Tp_poly = [&](int p, const MultiPoly& g) {
        HeckeElement moved =
            commute_left_with_word(d, parabolic_word(d, Q, p), d.gamma_part(p), g);
        ExactMatrix acc(sdim, sdim);
        for (const auto& [q, h] : moved.terms()) acc = acc + sigma_poly(h) * sigma.t_mats.at(q);
        return acc;
    };

    rep.t_mats.resize(d.wgamma().order());
    for (int u = 0; u < d.wgamma().order(); ++u) {
        ExactMatrix M(dim, dim);
        for (std::size_t c = 0; c < cosets.size(); ++c) {
            int y = d.wgamma().mult(u, cosets[c]);
            int cp = coset_of[y];
            int p = d.wgamma().mult(d.wgamma().inverse(cosets[cp]), y);
            Cyclotomic factor =
                d.cocycle().value(u, cosets[c]) * d.cocycle().value(cosets[cp], p).inverse();
            const ExactMatrix& D = sigma.t_mats.at(p);
            for (int r = 0; r < sdim; ++r)
                for (int s = 0; s < sdim; ++s)
                    M.at(cp * sdim + r, static_cast<int>(c) * sdim + s) = factor * D.at(r, s);
        }
        rep.t_mats[u] = std::move(M);
    }

    for (int i = 0; i < d.rank(); ++i) {
        ExactMatrix M(dim, dim);
        MultiPoly xi = MultiPoly::variable(d.nvars(), i);
        for (std::size_t c = 0; c < cosets.size(); ++c) {
            int x = cosets[c];
            auto terms = push_right(d, d.reduced_word(x), 0, d.gamma_part(x), xi);
            for (const auto& [y, g] : terms) {
                int cp = coset_of[y];
                int p = d.wgamma().mult(d.wgamma().inverse(cosets[cp]), y);
                Cyclotomic factor = d.cocycle().value(cosets[cp], p).inverse();
                ExactMatrix block = apply_Tp_poly(p, g).scaled(factor);
                for (int r = 0; r < sdim; ++r)
                    for (int s = 0; s < sdim; ++s)
                        M.at(cp * sdim + r, static_cast<int>(c) * sdim + s) += block.at(r, s);
            }
        }
        rep.x_mats.push_back(std::move(M));
    }

    std::vector<Cyclotomic> cc_ambient =
        B_q.cols() > 0 ? B_q.apply(sigma.central_point)
                       : std::vector<Cyclotomic>(d.rank(), Cyclotomic(0));
    for (std::size_t c = 0; c < cosets.size(); ++c) {
        std::vector<Cyclotomic> w(d.rank());
        for (int i = 0; i < d.rank(); ++i) w[i] = lambda[i] + cc_ambient[i];
        rep.known_weights.push_back(d.action().act(cosets[c], w));
    }

    if (check_relations) {
        RepCheck chk = is_representation(d, rep);
        if (!chk.ok) throw DomainError("hecke_induce produced an invalid module: " + chk.reason);
    }
    return rep;
}

std::vector<MultiPoly> invariant_generators(const HeckeDatum& d) {
    // Monomial Reynolds averages up to the Noether bound (generating, hence
    // orbit-separating); deduplicated after normalization.
    const int n = d.wgamma().order();
    std::vector<MultiPoly> gens;
    std::set<MultiPoly> seen;
    std::vector<int> cur(d.rank(), 0);
    std::vector<MultiPoly::Exponents> monos;
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == d.rank() - 1) {
            cur[i] = rem;
            MultiPoly::Exponents e = cur;
            if (d.symbolic_k()) e.push_back(0);
            monos.push_back(e);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, rem - e);
        }
    };
    const int bound = std::min(n, 12);
    for (int deg = 1; deg <= bound; ++deg)
        if (d.rank() > 0) rec(0, deg);
    for (const auto& e : monos) {
        MultiPoly avg(d.nvars());
        MultiPoly mono = MultiPoly::monomial(d.nvars(), e, Cyclotomic(1));
        for (int u = 0; u < n; ++u) avg += d.act_on_poly(u, mono);
        if (avg.is_zero()) continue;
        avg = avg.scaled(avg.terms().begin()->second.inverse());
        if (seen.insert(avg).second) gens.push_back(avg);
    }
    return gens;
}

std::string CentralCharacter::str() const {
    if (!scalar) return "none";
    std::ostringstream os;
    if (witness) {
        os << "orbit of (";
        for (std::size_t i = 0; i < witness->size(); ++i) {
            if (i) os << ", ";
            os << (*witness)[i].str();
        }
        os << ")";
    } else {
        os << "orbit with invariant values [";
        for (std::size_t i = 0; i < invariant_values.size(); ++i) {
            if (i) os << ", ";
            os << invariant_values[i].str();
        }
        os << "]";
    }
    return os.str();
}

CentralCharacter central_character(const HeckeDatum& d, const HeckeRep& rep) {
    if (d.symbolic_k()) throw DomainError("central_character requires a rational parameter k");
    auto gens = invariant_generators(d);
    CentralCharacter cc;
    cc.scalar = true;
    for (const auto& p : gens) {
        ExactMatrix M = rep.poly_matrix(d, p);
        Cyclotomic c = M.at(0, 0);
        if (M != ExactMatrix::identity(rep.dim).scaled(c)) {
            cc.scalar = false;
            cc.invariant_values.clear();
            return cc;
        }
        cc.invariant_values.push_back(c);
    }
    auto verify = [&](const std::vector<Cyclotomic>& pt) {
        std::vector<Cyclotomic> ext = pt;
        if (d.symbolic_k()) ext.push_back(Cyclotomic(0));
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].eval(ext) != cc.invariant_values[i]) return false;
        return true;
    };
    std::vector<std::vector<Cyclotomic>> candidates = rep.known_weights;
    for (int b = 0; b < rep.dim; ++b) {
        std::vector<Cyclotomic> pt(d.rank());
        for (int i = 0; i < d.rank(); ++i) pt[i] = rep.x_mats[i].at(b, b);
        candidates.push_back(std::move(pt));
    }
    for (const auto& pt : candidates)
        if (verify(pt)) {
            cc.witness = pt;
            break;
        }
    return cc;
}

ParabolicRep HeckeFamily::sigma(const HeckeDatum& d, const Rational& eps) const {
    if (!sigma_at) throw DomainError("family " + label + " has no deformed representation data");
    return sigma_at(d.with_parameter(eps), eps);
}

Cyclotomic HeckeVirtualCharacter::char_value(const HeckeDatum& d_eps, const HeckeElement& x) const {
    Cyclotomic acc(0);
    for (const auto& [c, rep] : terms) acc += c * rep.char_value(d_eps, x);
    return acc;
}

HeckeVirtualCharacter nu_epsilon(const HeckeDatum& d, const std::vector<HeckeFamily>& families,
                                 const SolveResult& coefficients,
                                 const std::vector<Cyclotomic>& v, const Rational& eps) {
    HeckeDatum d_eps = d.with_parameter(eps);
    HeckeVirtualCharacter out;
    out.eps = eps;
    for (const auto& coeff : coefficients.coefficients) {
        if (coeff.lambda.is_zero()) continue;
        const HeckeFamily* fam = nullptr;
        for (const auto& f : families)
            if (f.label == coeff.family_label) { fam = &f; break; }
        if (!fam) throw DomainError("nu_epsilon: missing deformed family " + coeff.family_label);
        ParabolicRep sig = fam->sigma(d, eps);
        std::vector<Cyclotomic> pt = d.action().act(coeff.phi, v);
        out.terms.emplace_back(coeff.lambda, hecke_induce(d_eps, fam->parabolic, sig, pt, false));
    }
    return out;
}

std::vector<RepFamily> crossed_families(const HeckeDatum& d,
                                        const std::vector<HeckeFamily>& families) {
    std::vector<RepFamily> out;
    for (const auto& f : families) {
        ParabolicRep sig0 = f.sigma(d, Rational(0));
        for (const auto& m : sig0.x_mats)
            if (!m.is_zero())
                throw DomainError("family " + f.label + ": k=0 member is not elliptic at 0");
        RepFamily rf;
        rf.label = f.label;
        rf.parabolic.label = f.parabolic.label;
        rf.parabolic.subgroup = f.parabolic.subgroup(d);
        rf.parabolic.v_p = f.parabolic.t_q_basis(d);
        rf.parabolic.v_up = f.parabolic.t_up_basis(d);
        rf.delta.label = sig0.label;
        rf.delta.dim = sig0.dim;
        rf.delta.matrices = sig0.t_mats;
        out.push_back(std::move(rf));
    }
    return out;
}

} // namespace heckehom
