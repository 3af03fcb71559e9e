#include "heckehom/repfam.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace heckehom {

namespace {

// Deterministic across platforms (no uniform_int_distribution).
long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<MultiPoly::Exponents> monomials_up_to(int nvars, int max_degree) {
    std::vector<MultiPoly::Exponents> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(int, int)> exact = [&](int i, int rem) {
        if (i == nvars - 1) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[i] = e;
            exact(i + 1, rem - e);
        }
    };
    for (int d = 0; d <= max_degree; ++d) {
        if (nvars == 0) {
            if (d == 0) out.push_back({});
        } else {
            exact(0, d);
        }
    }
    return out;
}

// Element sample {T_g · x^a : g ∈ G, |a| ≤ max_degree}, deterministic order.
std::vector<TwistedElement> element_sample(const TwistedGroupDatum& d, int max_degree) {
    std::vector<TwistedElement> out;
    const int nv = static_cast<int>(d.var_names.size());
    for (int g = 0; g < d.group.order(); ++g)
        for (const auto& e : monomials_up_to(nv, max_degree))
            out.push_back(TwistedElement::term(d, g, MultiPoly::monomial(nv, e, Cyclotomic(1))));
    return out;
}

struct OnlineRank {
    std::vector<std::pair<std::size_t, std::vector<Cyclotomic>>> rows;
    bool insert(std::vector<Cyclotomic> v) {
        for (const auto& [p, r] : rows) {
            if (v[p].is_zero()) continue;
            Cyclotomic f = v[p];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * r[j];
        }
        std::size_t pivot = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) { pivot = j; break; }
        if (pivot == v.size()) return false;
        Cyclotomic inv = v[pivot].inverse();
        for (auto& x : v) x *= inv;
        rows.emplace_back(pivot, std::move(v));
        return true;
    }
};

} // namespace

void ParabolicDatum::validate(const TwistedGroupDatum& d) const {
    if (!d.group.is_subgroup(subgroup))
        throw DomainError("parabolic " + label + ": G_P is not a subgroup");
    if (v_p.cols() + v_up.cols() != d.dim())
        throw DomainError("parabolic " + label + ": splitting has wrong total dimension");
    if (v_p.cols() > 0 || v_up.cols() > 0) {
        ExactMatrix joint = v_p.cols() == 0 ? v_up : (v_up.cols() == 0 ? v_p : v_p.hstack(v_up));
        if (joint.rank() != d.dim())
            throw DomainError("parabolic " + label + ": V_P ⊕ V^P is not all of V");
    }
    for (int h : subgroup) {
        if (v_p.cols() > 0 && !v_p.spans(d.action.matrix(h) * v_p))
            throw DomainError("parabolic " + label + ": V_P is not G_P-stable");
        if (v_up.cols() > 0 && d.action.matrix(h) * v_up != v_up)
            throw DomainError("parabolic " + label + ": V^P is not pointwise G_P-fixed");
    }
}

const ExactMatrix& EllipticRep::at(int g) const {
    auto it = matrices.find(g);
    if (it == matrices.end()) throw DomainError("elliptic rep has no matrix for element");
    return it->second;
}

void EllipticRep::validate(const TwistedGroupDatum& d, const ParabolicDatum& P) const {
    for (int g : P.subgroup) {
        const ExactMatrix& M = at(g);
        if (M.rows() != dim || M.cols() != dim)
            throw DomainError("elliptic rep " + label + ": matrix size mismatch");
    }
    if (at(d.group.identity()) != ExactMatrix::identity(dim))
        throw DomainError("elliptic rep " + label + ": identity image is not 1");
    for (int g : P.subgroup)
        for (int h : P.subgroup) {
            if (at(g) * at(h) != at(d.group.mult(g, h)).scaled(d.cocycle_value(g, h)))
                throw DomainError("elliptic rep " + label + ": twisted relation fails");
        }
}

InducedRep::InducedRep(const TwistedGroupDatum& d, const RepFamily& fam, std::vector<Cyclotomic> v,
                       bool check_relations)
    : fam_(std::make_shared<RepFamily>(fam)), v_(std::move(v)) {
    const ParabolicDatum& P = fam_->parabolic;
    if (P.param_dim() > 0) {
        if (!P.v_up.solve(v_).has_value())
            throw DomainError("induction point does not lie in V^P");
    } else {
        for (const auto& c : v_)
            if (!c.is_zero()) throw DomainError("induction point does not lie in V^P");
    }
    cosets_ = d.group.coset_reps(P.subgroup);
    delta_dim_ = fam_->delta.dim;
    dim_ = static_cast<int>(cosets_.size()) * delta_dim_;
    block_points_.reserve(cosets_.size());
    for (int x : cosets_) block_points_.push_back(d.action.act(x, v_));
    if (check_relations) verify_relations(d);
}

ExactMatrix InducedRep::t_matrix(const TwistedGroupDatum& d, int g) const {
    const ParabolicDatum& P = fam_->parabolic;
    std::vector<int> coset_of(d.group.order(), -1);
    for (std::size_t c = 0; c < cosets_.size(); ++c)
        for (int h : P.subgroup) coset_of[d.group.mult(cosets_[c], h)] = static_cast<int>(c);
    ExactMatrix M(dim_, dim_);
    for (std::size_t c = 0; c < cosets_.size(); ++c) {
        int y = d.group.mult(g, cosets_[c]);
        int cp = coset_of[y];
        int p = d.group.mult(d.group.inverse(cosets_[cp]), y);
        Cyclotomic factor =
            d.cocycle_value(g, cosets_[c]) * d.cocycle_value(cosets_[cp], p).inverse();
        const ExactMatrix& D = fam_->delta.at(p);
        for (int r = 0; r < delta_dim_; ++r)
            for (int s = 0; s < delta_dim_; ++s)
                M.at(cp * delta_dim_ + r, static_cast<int>(c) * delta_dim_ + s) =
                    factor * D.at(r, s);
    }
    return M;
}

ExactMatrix InducedRep::poly_matrix(const MultiPoly& f) const {
    ExactMatrix M(dim_, dim_);
    for (std::size_t c = 0; c < cosets_.size(); ++c) {
        Cyclotomic val = f.eval(block_points_[c]);
        for (int r = 0; r < delta_dim_; ++r)
            M.at(static_cast<int>(c) * delta_dim_ + r, static_cast<int>(c) * delta_dim_ + r) = val;
    }
    return M;
}

ExactMatrix InducedRep::matrix(const TwistedGroupDatum& d, const TwistedElement& x) const {
    ExactMatrix M(dim_, dim_);
    for (const auto& [g, f] : x.terms()) M = M + t_matrix(d, g) * poly_matrix(f);
    return M;
}

Cyclotomic InducedRep::char_value(const TwistedGroupDatum& d, const TwistedElement& x) const {
    const ParabolicDatum& P = fam_->parabolic;
    std::vector<int> pos(d.group.order(), -1);
    for (std::size_t i = 0; i < P.subgroup.size(); ++i) pos[P.subgroup[i]] = static_cast<int>(i);
    Cyclotomic acc(0);
    for (const auto& [g, f] : x.terms()) {
        for (std::size_t c = 0; c < cosets_.size(); ++c) {
            int y = d.group.mult(g, cosets_[c]);
            int p = d.group.mult(d.group.inverse(cosets_[c]), y);
            if (pos[p] < 0) continue; // coset moved, no diagonal block
            Cyclotomic factor =
                d.cocycle_value(g, cosets_[c]) * d.cocycle_value(cosets_[c], p).inverse();
            Cyclotomic tr(0);
            const ExactMatrix& D = fam_->delta.at(p);
            for (int r = 0; r < delta_dim_; ++r) tr += D.at(r, r);
            acc += factor * tr * f.eval(block_points_[c]);
        }
    }
    return acc;
}

void InducedRep::verify_relations(const TwistedGroupDatum& d) const {
    const int n = d.group.order();
    std::vector<ExactMatrix> T(n);
    for (int g = 0; g < n; ++g) T[g] = t_matrix(d, g);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (T[g] * T[h] != T[d.group.mult(g, h)].scaled(d.cocycle_value(g, h)))
                throw DomainError("induced rep: twisted group relation fails");
    const int nv = d.dim();
    for (int g = 0; g < n; ++g)
        for (int j = 0; j < nv; ++j) {
            MultiPoly xj = MultiPoly::variable(nv, j);
            ExactMatrix lhs = T[g] * poly_matrix(xj);
            ExactMatrix rhs = poly_matrix(d.act_poly(g, xj)) * T[g];
            if (lhs != rhs) throw DomainError("induced rep: coordinate conjugation fails");
        }
}

void VirtualCharacter::add(const Cyclotomic& c, std::shared_ptr<const InducedRep> rep) {
    terms.emplace_back(c, std::move(rep));
}

Cyclotomic VirtualCharacter::char_value(const TwistedGroupDatum& d, const TwistedElement& x) const {
    Cyclotomic acc(0);
    for (const auto& [c, rep] : terms) acc += c * rep->char_value(d, x);
    return acc;
}

InducedRep induce(const TwistedGroupDatum& d, const RepFamily& fam,
                  const std::vector<Cyclotomic>& v) {
    return InducedRep(d, fam, v, /*check_relations=*/true);
}

TraceFunctional nu_functional(const TwistedGroupDatum& d, int g, const std::vector<Cyclotomic>& v,
                              bool formal) {
    if (!relevant(d, g)) throw DomainError("nu is undefined for an HH-irrelevant class");
    FixedSpace fs = fixed_space(d, g);
    if (!fs.contains(v)) throw DomainError("nu base point does not lie in V^g");
    if (!formal) {
        std::vector<int> stab = d.action.stabilizer(v);
        std::set<int> z(fs.centralizer.begin(), fs.centralizer.end());
        for (int h : stab)
            if (z.count(h) && d.cocycle.natural_char_exponent(d.group, g, h) != 0)
                throw DomainError("nu base point violates the stabilizer condition "
                                  "(pass formal=true for the formal extension)");
    }
    TraceFunctional nu;
    nu.class_id = d.group.class_of(g);
    nu.rep = g;
    nu.base_point = v;
    for (int gp : d.group.conjugacy_classes()[nu.class_id]) {
        int h = d.group.transporter(g, gp);
        nu.weights[gp] = d.nat_char(g, h).inverse();
    }
    return nu;
}

Cyclotomic nu_eval(const TwistedGroupDatum& d, int g, const std::vector<Cyclotomic>& v,
                   const TwistedElement& x, bool formal) {
    return nu_functional(d, g, v, formal).eval(x, d);
}

std::vector<int> find_transporters(const TwistedGroupDatum& d, int g, const ParabolicDatum& P) {
    FixedSpace fs = fixed_space(d, g);
    std::vector<int> out;
    if (fs.dim() > P.param_dim()) return out;
    for (int w = 0; w < d.group.order(); ++w) {
        if (fs.dim() == 0) { out.push_back(w); continue; }
        if (P.v_up.spans(d.action.matrix(w) * fs.basis)) out.push_back(w);
    }
    return out;
}

std::vector<std::vector<Cyclotomic>> generic_points(const TwistedGroupDatum& d,
                                                    const ExactMatrix& basis, int count,
                                                    std::uint64_t seed) {
    const int k = basis.cols();
    if (k == 0) return {std::vector<Cyclotomic>(d.dim(), Cyclotomic(0))};
    // Pointwise stabilizer of the whole span; a point is generic iff its
    // stabilizer is exactly this subgroup (equivalently it avoids every
    // proper intersection V^h ∩ span).
    std::vector<int> K;
    for (int h = 0; h < d.group.order(); ++h)
        if (d.action.matrix(h) * basis == basis) K.push_back(h);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Cyclotomic>> out;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 10000) throw DomainError("generic point sampling did not terminate");
        std::vector<Cyclotomic> coords(k);
        for (int i = 0; i < k; ++i)
            coords[i] = Cyclotomic(Rational(rand_range(rng, -9, 9), rand_range(rng, 1, 3)));
        std::vector<Cyclotomic> pt = basis.apply(coords);
        if (d.action.stabilizer(pt) != K) continue;
        if (std::find(out.begin(), out.end(), pt) != out.end()) continue;
        out.push_back(std::move(pt));
    }
    return out;
}

namespace {

struct ActiveFamily {
    std::size_t index; // into the input family list
    int phi;           // transporter element
};

// One solve attempt at a fixed element-sample degree. Returns nullopt if the
// system is solvable but should be retried (never happens; errors throw).
std::vector<Cyclotomic> solve_at_degree(const TwistedGroupDatum& d,
                                        const std::vector<RepFamily>& families,
                                        const std::vector<ActiveFamily>& active, int g,
                                        const std::vector<std::vector<Cyclotomic>>& pts,
                                        int degree) {
    auto elements = element_sample(d, degree);
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<Cyclotomic> rhs;
    for (const auto& pt : pts) {
        // Induced reps at the transported points, one per active family.
        std::vector<InducedRep> reps;
        reps.reserve(active.size());
        for (const auto& a : active)
            reps.emplace_back(d, families[a.index], d.action.act(a.phi, pt), false);
        TraceFunctional nu = nu_functional(d, g, pt, false);
        for (const auto& x : elements) {
            std::vector<Cyclotomic> row(active.size());
            for (std::size_t i = 0; i < active.size(); ++i) row[i] = reps[i].char_value(d, x);
            rows.push_back(std::move(row));
            rhs.push_back(nu.eval(x, d));
        }
    }
    ExactMatrix A = ExactMatrix::from_rows(rows);
    if (A.rank() < static_cast<int>(active.size())) {
        ExactMatrix ns = A.nullspace();
        std::ostringstream os;
        os << "solve_coefficients: rank-deficient system for class of "
           << d.group.label(g) << "; undetermined direction:";
        for (int i = 0; i < ns.rows(); ++i)
            if (!ns.at(i, 0).is_zero())
                os << " " << families[active[i].index].label << "*(" << ns.at(i, 0).str() << ")";
        throw DomainError(os.str());
    }
    auto sol = A.solve(rhs);
    if (!sol)
        throw DomainError("solve_coefficients: family members do not span the functional for class of " +
                          d.group.label(g));
    return *sol;
}

} // namespace

SolveResult solve_coefficients(const TwistedGroupDatum& d, const std::vector<RepFamily>& families,
                               int g, std::uint64_t seed) {
    FixedSpace fs = fixed_space(d, g);
    if (!relevant(d, g)) throw DomainError("solve_coefficients: class is HH-irrelevant");
    std::vector<ActiveFamily> active;
    SolveResult result;
    result.g = g;
    result.coefficients.resize(families.size());
    for (std::size_t i = 0; i < families.size(); ++i) {
        result.coefficients[i].family_label = families[i].label;
        result.coefficients[i].lambda = Cyclotomic(0);
        result.coefficients[i].phi = -1;
        if (families[i].param_dim() < fs.dim()) continue; // Lemma 2.5 support restriction
        auto tr = find_transporters(d, g, families[i].parabolic);
        if (tr.empty()) continue;
        active.push_back({i, tr.front()});
    }
    if (active.empty())
        throw DomainError("solve_coefficients: no family can carry the class of " + d.group.label(g));

    auto pts = generic_points(d, fs.basis, fs.dim() + 2, seed);
    const int cap = 2 * d.group.order();
    std::vector<Cyclotomic> lambda;
    for (int deg = 2; deg <= cap; ++deg) {
        lambda = solve_at_degree(d, families, active, g, pts, deg);
        // Verify on a fresh, larger sample.
        auto check_pts = generic_points(d, fs.basis, fs.dim() + 3, seed * 2 + 1);
        auto elements = element_sample(d, deg + 1);
        bool ok = true;
        for (const auto& pt : check_pts) {
            std::vector<InducedRep> reps;
            for (const auto& a : active)
                reps.emplace_back(d, families[a.index], d.action.act(a.phi, pt), false);
            TraceFunctional nu = nu_functional(d, g, pt, false);
            for (const auto& x : elements) {
                Cyclotomic lhs = nu.eval(x, d);
                Cyclotomic rhs(0);
                for (std::size_t i = 0; i < active.size(); ++i)
                    rhs += lambda[i] * reps[i].char_value(d, x);
                if (lhs != rhs) { ok = false; break; }
            }
            if (!ok) break;
        }
        if (ok) {
            for (std::size_t i = 0; i < active.size(); ++i) {
                result.coefficients[active[i].index].lambda = lambda[i];
                result.coefficients[active[i].index].phi = active[i].phi;
            }
            return result;
        }
    }
    throw DomainError("solve_coefficients: verification failed up to the degree cap");
}

namespace {

// Pool of sample points per family: a couple of generic points, the origin,
// and every transporter image of another family's points (matching central
// characters across families).
std::vector<std::vector<std::vector<Cyclotomic>>> family_point_pools(
    const TwistedGroupDatum& d, const std::vector<RepFamily>& families, std::uint64_t seed) {
    std::vector<std::vector<std::vector<Cyclotomic>>> pools(families.size());
    for (std::size_t i = 0; i < families.size(); ++i) {
        pools[i] = generic_points(d, families[i].parabolic.v_up, 2, seed + 17 * i);
        std::vector<Cyclotomic> zero(d.dim(), Cyclotomic(0));
        if (std::find(pools[i].begin(), pools[i].end(), zero) == pools[i].end())
            pools[i].push_back(zero);
    }
    // Transport matched points across families.
    auto base = pools;
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = 0; j < families.size(); ++j) {
            if (i == j) continue;
            for (int w = 0; w < d.group.order(); ++w) {
                if (families[i].parabolic.param_dim() > 0 &&
                    !families[j].parabolic.v_up.spans(d.action.matrix(w) *
                                                      families[i].parabolic.v_up))
                    continue;
                for (const auto& p : base[i]) {
                    auto q = d.action.act(w, p);
                    if (families[j].parabolic.param_dim() == 0) {
                        bool zero = std::all_of(q.begin(), q.end(),
                                                [](const Cyclotomic& c) { return c.is_zero(); });
                        if (!zero) continue;
                    }
                    if (std::find(pools[j].begin(), pools[j].end(), q) == pools[j].end())
                        pools[j].push_back(q);
                }
            }
        }
    return pools;
}

} // namespace

SelectionResult select_minimal_families(const TwistedGroupDatum& d,
                                        const std::vector<RepFamily>& candidates,
                                        std::uint64_t seed) {
    // Greedy by descending parameter dimension, stable within a dimension.
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return candidates[a].param_dim() > candidates[b].param_dim();
    });

    std::vector<RepFamily> kept;
    const int cap = 2 * d.group.order();
    for (std::size_t oi : order) {
        const RepFamily& cand = candidates[oi];
        auto pts = generic_points(d, cand.parabolic.v_up, 1, seed + 101 * oi);
        const auto& pt = pts.front();
        // Members of kept families with the same central character G·pt.
        std::vector<std::pair<std::size_t, std::vector<Cyclotomic>>> matched;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            std::set<std::vector<Cyclotomic>> seen;
            for (int w = 0; w < d.group.order(); ++w) {
                auto q = d.action.act(w, pt);
                if (kept[j].parabolic.param_dim() == 0) {
                    if (!std::all_of(q.begin(), q.end(),
                                     [](const Cyclotomic& c) { return c.is_zero(); }))
                        continue;
                } else if (!kept[j].parabolic.v_up.solve(q).has_value()) {
                    continue;
                }
                if (seen.insert(q).second) matched.emplace_back(j, q);
            }
        }
        auto verdict_at = [&](int deg) {
            auto elements = element_sample(d, deg);
            OnlineRank rank;
            for (const auto& [j, q] : matched) {
                InducedRep rep(d, kept[j], q, false);
                std::vector<Cyclotomic> row(elements.size());
                for (std::size_t e = 0; e < elements.size(); ++e)
                    row[e] = rep.char_value(d, elements[e]);
                rank.insert(std::move(row));
            }
            InducedRep crep(d, cand, pt, false);
            std::vector<Cyclotomic> row(elements.size());
            for (std::size_t e = 0; e < elements.size(); ++e)
                row[e] = crep.char_value(d, elements[e]);
            return rank.insert(std::move(row));
        };
        bool independent = verdict_at(2);
        for (int deg = 3; deg <= cap; ++deg) {
            bool next = verdict_at(deg);
            if (next == independent) break; // steady verdict
            independent = next;
        }
        if (independent) kept.push_back(cand);
    }

    // Eq. 2.38 bullets: kept members span what all candidates span on the
    // sampled block, and no kept family is redundant.
    auto cand_pools = family_point_pools(d, candidates, seed + 7);
    auto elements = element_sample(d, 3);
    auto char_row = [&](const RepFamily& f, const std::vector<Cyclotomic>& p) {
        InducedRep rep(d, f, p, false);
        std::vector<Cyclotomic> row(elements.size());
        for (std::size_t e = 0; e < elements.size(); ++e) row[e] = rep.char_value(d, elements[e]);
        return row;
    };
    OnlineRank full;
    int full_rank = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (const auto& p : cand_pools[i])
            if (full.insert(char_row(candidates[i], p))) ++full_rank;
    auto kept_rank_without = [&](std::size_t skip) {
        auto pools = family_point_pools(d, kept, seed + 7);
        OnlineRank r;
        int rank = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (i == skip) continue;
            for (const auto& p : pools[i])
                if (r.insert(char_row(kept[i], p))) ++rank;
        }
        return rank;
    };
    int kept_rank = kept_rank_without(kept.size());
    if (kept_rank != full_rank)
        throw DomainError("select_minimal_families: kept families do not span the candidate block");
    for (std::size_t j = 0; j < kept.size(); ++j)
        if (kept_rank_without(j) == kept_rank)
            throw DomainError("select_minimal_families: family " + kept[j].label +
                              " is redundant after selection");

    SelectionResult res;
    res.kept = std::move(kept);
    for (const auto& f : res.kept) res.kept_labels.push_back(f.label);
    return res;
}

MembershipResult verify_hh0_membership(const TwistedGroupDatum& d,
                                       const std::vector<RepFamily>& families,
                                       const std::vector<MultiPoly>& omega, std::uint64_t seed) {
    if (omega.size() != families.size())
        throw DomainError("verify_hh0_membership: one polynomial per family required");
    auto pools = family_point_pools(d, families, seed);
    std::vector<std::pair<std::size_t, std::vector<Cyclotomic>>> members;
    for (std::size_t i = 0; i < families.size(); ++i)
        for (const auto& p : pools[i]) members.emplace_back(i, p);

    // Character matrix rows at growing element degree until the relation
    // space (left nullspace) stabilizes twice.
    const int cap = 2 * d.group.order();
    ExactMatrix relations;
    int prev_dim = -1, steady = 0;
    for (int deg = 2; deg <= cap; ++deg) {
        auto elements = element_sample(d, deg);
        std::vector<std::vector<Cyclotomic>> rows;
        for (const auto& [i, p] : members) {
            InducedRep rep(d, families[i], p, false);
            std::vector<Cyclotomic> row(elements.size());
            for (std::size_t e = 0; e < elements.size(); ++e)
                row[e] = rep.char_value(d, elements[e]);
            rows.push_back(std::move(row));
        }
        relations = ExactMatrix::from_rows(rows).transpose().nullspace();
        if (relations.cols() == prev_dim) {
            if (++steady >= 2) break;
        } else {
            steady = 0;
        }
        prev_dim = relations.cols();
    }

    for (int r = 0; r < relations.cols(); ++r) {
        Cyclotomic acc(0);
        for (std::size_t m = 0; m < members.size(); ++m) {
            const Cyclotomic& mu = relations.at(static_cast<int>(m), r);
            if (mu.is_zero()) continue;
            const auto& [i, p] = members[m];
            std::vector<Cyclotomic> coords;
            if (families[i].parabolic.param_dim() > 0) {
                auto c = families[i].parabolic.v_up.solve(p);
                coords = *c;
            }
            acc += mu * omega[i].eval(coords);
        }
        if (!acc.is_zero()) {
            std::ostringstream os;
            os << "violated relation:";
            for (std::size_t m = 0; m < members.size(); ++m) {
                const Cyclotomic& mu = relations.at(static_cast<int>(m), r);
                if (mu.is_zero()) continue;
                os << " (" << mu.str() << ")*pi[" << families[members[m].first].label << "]";
            }
            os << "  evaluates to " << acc.str();
            return {false, os.str()};
        }
    }
    return {true, ""};
}

} // namespace heckehom
