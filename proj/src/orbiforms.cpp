#include "heckehom/orbiforms.hpp"

#include "heckehom/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace heckehom {

namespace {

// det(I + x·A) over UniPoly by cofactor expansion; sizes here are the
// fixed-space dimensions (tiny).
UniPoly char_det(const ExactMatrix& A, bool minus) {
    const int n = A.rows();
    if (n == 0) return UniPoly(Cyclotomic(1));
    // entries of I + xA (or I - xA)
    std::vector<std::vector<UniPoly>> M(n, std::vector<UniPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cyclotomic a = minus ? -A.at(i, j) : A.at(i, j);
            std::vector<Cyclotomic> c{i == j ? Cyclotomic(1) : Cyclotomic(0), a};
            M[i][j] = UniPoly(std::move(c));
        }
    // expansion over rows with a column mask
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    std::function<UniPoly(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& cs) -> UniPoly {
        if (cs.empty()) return UniPoly(Cyclotomic(1));
        UniPoly acc;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            int c = cs[k];
            if (M[row][c].is_zero()) continue;
            std::vector<int> rest;
            rest.reserve(cs.size() - 1);
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (j != k) rest.push_back(cs[j]);
            UniPoly sub = rec(row + 1, rest);
            UniPoly term = M[row][c] * sub;
            if (k % 2 == 1) term = -term;
            acc = acc + term;
        }
        return acc;
    };
    return rec(0, cols);
}

std::vector<std::vector<int>> sorted_subsets(int dim, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < dim; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> monomials_of_degree(int nvars, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == nvars - 1) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, rem - e);
        }
    };
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    rec(0, deg);
    return out;
}

} // namespace

ExactMatrix FixedSpace::restriction(const TwistedGroupDatum& d, int h) const {
    // Solve basis·X = ρ(h)·basis; consistent because h preserves V^g.
    ExactMatrix rhs = d.action.matrix(h) * basis;
    auto X = basis.solve_matrix(rhs);
    if (!X) throw DomainError("restriction: element does not preserve the fixed space");
    return *X;
}

std::vector<Cyclotomic> FixedSpace::coordinates(const std::vector<Cyclotomic>& ambient) const {
    auto x = basis.solve(ambient);
    if (!x) throw DomainError("point does not lie in the fixed subspace");
    return *x;
}

std::vector<Cyclotomic> FixedSpace::embed(const std::vector<Cyclotomic>& coords) const {
    return basis.apply(coords);
}

bool FixedSpace::contains(const std::vector<Cyclotomic>& ambient) const {
    return basis.solve(ambient).has_value();
}

FixedSpace fixed_space(const TwistedGroupDatum& d, int g) {
    FixedSpace fs;
    fs.g = g;
    ExactMatrix m = d.action.matrix(g) - ExactMatrix::identity(d.dim());
    fs.basis = m.nullspace();
    fs.centralizer = d.group.centralizer(g);
    for (int h : fs.centralizer) {
        if (d.action.matrix(h) * fs.basis == fs.basis) fs.pointwise_stabilizer.push_back(h);
    }
    return fs;
}

bool relevant(const TwistedGroupDatum& d, int g) {
    FixedSpace fs = fixed_space(d, g);
    return d.cocycle.regular_on(d.group, g, fs.pointwise_stabilizer);
}

RationalFunction hh_summand_series(const TwistedGroupDatum& d, int g, int n) {
    FixedSpace fs = fixed_space(d, g);
    if (n > fs.dim()) return RationalFunction::zero();
    RationalFunction acc = RationalFunction::zero();
    for (int h : fs.centralizer) {
        ExactMatrix A = fs.restriction(d, d.group.inverse(h));
        UniPoly numer_poly = char_det(A, /*minus=*/false); // det(1 + s·A)
        Cyclotomic coeff_n = numer_poly.coeff(static_cast<std::size_t>(n));
        if (coeff_n.is_zero()) continue;
        UniPoly den = char_det(A, /*minus=*/true); // det(1 - t·A)
        Cyclotomic weight = d.nat_char(g, h) * coeff_n;
        acc = acc + RationalFunction(UniPoly(weight), den);
    }
    Cyclotomic inv_order = Cyclotomic(Rational(1, static_cast<long>(fs.centralizer.size())));
    return acc.scaled(inv_order);
}

namespace {

HHClassEntry hh_class_entry(const TwistedGroupDatum& d, int class_id, int n) {
    const auto& cls = d.group.conjugacy_classes()[class_id];
    HHClassEntry e;
    e.class_id = class_id;
    e.rep = cls.front();
    e.label = d.group.label(e.rep);
    e.relevant = relevant(d, e.rep);
    e.series = hh_summand_series(d, e.rep, n);
    return e;
}

HHReport assemble_report(const TwistedGroupDatum& d, int n, std::vector<HHClassEntry> entries) {
    HHReport r;
    r.degree = n;
    r.entries = std::move(entries);
    r.total = RationalFunction::zero();
    for (const auto& e : r.entries) r.total = r.total + e.series;
    (void)d;
    return r;
}

} // namespace

HHReport hh_report(const TwistedGroupDatum& d, int n) {
    const std::size_t nclasses = d.group.conjugacy_classes().size();
    auto entries = map_indexed<HHClassEntry>(
        nclasses, [&](std::size_t c) { return hh_class_entry(d, static_cast<int>(c), n); });
    return assemble_report(d, n, std::move(entries));
}

HHReport hh_report_serial(const TwistedGroupDatum& d, int n) {
    const std::size_t nclasses = d.group.conjugacy_classes().size();
    auto entries = map_indexed_serial<HHClassEntry>(
        nclasses, [&](std::size_t c) { return hh_class_entry(d, static_cast<int>(c), n); });
    return assemble_report(d, n, std::move(entries));
}

void DifferentialForm::add(const std::vector<int>& subset, const MultiPoly& f) {
    if (f.is_zero()) return;
    auto it = terms.find(subset);
    if (it == terms.end()) {
        terms[subset] = f;
    } else {
        it->second += f;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    DifferentialForm r = *this;
    for (const auto& [s, f] : o.terms) r.add(s, f);
    return r;
}

DifferentialForm DifferentialForm::scaled(const Cyclotomic& c) const {
    DifferentialForm r;
    r.dim = dim;
    r.degree = degree;
    if (c.is_zero()) return r;
    for (const auto& [s, f] : terms) r.terms[s] = f.scaled(c);
    return r;
}

DifferentialForm DifferentialForm::pullback(const ExactMatrix& M) const {
    DifferentialForm r;
    r.dim = dim;
    r.degree = degree;
    for (const auto& [I, f] : terms) {
        MultiPoly moved = f.substitute_linear(M);
        if (degree == 0) {
            r.add(I, moved);
            continue;
        }
        for (const auto& J : sorted_subsets(dim, degree)) {
            Cyclotomic minor = M.submatrix(I, J).determinant();
            if (minor.is_zero()) continue;
            r.add(J, moved.scaled(minor));
        }
    }
    return r;
}

std::vector<Cyclotomic> DifferentialForm::eval(const std::vector<Cyclotomic>& point) const {
    auto subsets = sorted_subsets(dim, degree);
    std::vector<Cyclotomic> out(subsets.size(), Cyclotomic(0));
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        auto it = terms.find(subsets[k]);
        if (it != terms.end()) out[k] = it->second.eval(point);
    }
    return out;
}

std::string DifferentialForm::str(const std::string& var_prefix) const {
    if (terms.empty()) return "0";
    std::vector<std::string> names(dim);
    for (int i = 0; i < dim; ++i) names[i] = var_prefix + std::to_string(i + 1);
    std::ostringstream os;
    bool first = true;
    for (const auto& [I, f] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.str(names) << ")";
        for (int i : I) os << " d" << names[i];
    }
    return os.str();
}

std::vector<DifferentialForm> monomial_forms(int dim, int n, int coeff_degree) {
    std::vector<DifferentialForm> out;
    for (const auto& I : sorted_subsets(dim, n))
        for (const auto& e : monomials_of_degree(dim, coeff_degree)) {
            DifferentialForm w;
            w.dim = dim;
            w.degree = n;
            w.terms[I] = MultiPoly::monomial(dim, e, Cyclotomic(1));
            out.push_back(std::move(w));
        }
    return out;
}

DifferentialForm reynolds_average(const TwistedGroupDatum& d, const FixedSpace& fs,
                                  const DifferentialForm& omega) {
    DifferentialForm acc;
    acc.dim = omega.dim;
    acc.degree = omega.degree;
    for (int h : fs.centralizer) {
        ExactMatrix M = fs.restriction(d, d.group.inverse(h)); // h acts by (h^{-1})^*
        acc = acc + omega.pullback(M).scaled(d.nat_char(fs.g, h));
    }
    return acc.scaled(Cyclotomic(Rational(1, static_cast<long>(fs.centralizer.size()))));
}

namespace {

// Vectorize a form against the full monomial grid up to max_degree; layout is
// (subset, monomial) in deterministic order.
std::vector<Cyclotomic> vectorize_form(const DifferentialForm& w, int dim, int n, int max_degree) {
    std::vector<Cyclotomic> out;
    for (const auto& I : sorted_subsets(dim, n)) {
        auto it = w.terms.find(I);
        for (int deg = 0; deg <= max_degree; ++deg)
            for (const auto& e : monomials_of_degree(dim, deg)) {
                if (it == w.terms.end()) {
                    out.push_back(Cyclotomic(0));
                } else {
                    auto t = it->second.terms().find(e);
                    out.push_back(t == it->second.terms().end() ? Cyclotomic(0) : t->second);
                }
            }
    }
    return out;
}

// Online row reduction: returns true (and absorbs the reduced row) if v is
// independent of the rows seen so far.
struct OnlineRank {
    std::vector<std::pair<std::size_t, std::vector<Cyclotomic>>> rows; // (pivot, row)
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

std::vector<DifferentialForm> invariant_basis_impl(const TwistedGroupDatum& d, int g, int n,
                                                   int max_degree, bool parallel) {
    FixedSpace fs = fixed_space(d, g);
    const int dim = fs.dim();
    if (n > dim) return {};
    std::vector<DifferentialForm> candidates;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (auto& w : monomial_forms(dim, n, deg)) candidates.push_back(std::move(w));

    auto average = [&](std::size_t i) { return reynolds_average(d, fs, candidates[i]); };
    std::vector<DifferentialForm> averaged =
        parallel ? map_indexed<DifferentialForm>(candidates.size(), average)
                 : map_indexed_serial<DifferentialForm>(candidates.size(), average);

    std::vector<DifferentialForm> basis;
    OnlineRank rank;
    for (auto& w : averaged) {
        if (w.is_zero()) continue;
        if (rank.insert(vectorize_form(w, dim, n, max_degree))) basis.push_back(std::move(w));
    }
    return basis;
}

} // namespace

std::vector<DifferentialForm> invariant_form_basis(const TwistedGroupDatum& d, int g, int n,
                                                   int max_degree) {
    return invariant_basis_impl(d, g, n, max_degree, true);
}

std::vector<DifferentialForm> invariant_form_basis_serial(const TwistedGroupDatum& d, int g,
                                                          int n, int max_degree) {
    return invariant_basis_impl(d, g, n, max_degree, false);
}

TwistedGroupDatum restrict_to_subgroup(const TwistedGroupDatum& d, const std::vector<int>& elems) {
    const int n = static_cast<int>(elems.size());
    std::vector<int> pos(d.group.order(), -1);
    for (int i = 0; i < n; ++i) pos[elems[i]] = i;
    std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int a = 0; a < n; ++a) {
        labels[a] = d.group.label(elems[a]);
        for (int b = 0; b < n; ++b) {
            int prod = d.group.mult(elems[a], elems[b]);
            if (pos[prod] < 0) throw DomainError("subgroup restriction: set is not closed");
            cayley[a][b] = pos[prod];
        }
    }
    TwistedGroupDatum sub;
    sub.group = FiniteGroup(std::move(cayley), std::move(labels));
    sub.cocycle = d.cocycle.restricted(elems);
    std::vector<ExactMatrix> mats(n);
    for (int i = 0; i < n; ++i) mats[i] = d.action.matrix(elems[i]);
    sub.action = LinearAction(d.dim(), std::move(mats));
    sub.conductor = d.conductor;
    sub.var_names = d.var_names;
    return sub;
}

int irreps_at_orbit(const TwistedGroupDatum& d, const std::vector<Cyclotomic>& v) {
    std::vector<int> stab = d.action.stabilizer(v);
    TwistedGroupDatum sub = restrict_to_subgroup(d, stab);
    return count_irreps(sub);
}

SpecializeResult specialize_hh(const TwistedGroupDatum& d, int n, const std::vector<Cyclotomic>& v) {
    // Orbit of v, then per relevant class: evaluate the invariant-form basis
    // at Z_G(g)-orbit representatives of V^g ∩ Gv; total dimension is the sum
    // of per-class evaluation ranks (the summands are independent).
    std::set<std::vector<Cyclotomic>> orbit_set;
    for (int h = 0; h < d.group.order(); ++h) orbit_set.insert(d.action.act(h, v));
    std::vector<std::vector<Cyclotomic>> orbit(orbit_set.begin(), orbit_set.end());

    const int cap = 2 * d.group.order();
    SpecializeResult res;
    for (const auto& cls : d.group.conjugacy_classes()) {
        int g = cls.front();
        if (!relevant(d, g)) continue;
        FixedSpace fs = fixed_space(d, g);
        // Z_G(g)-orbit representatives of V^g ∩ Gv, in fixed-space coordinates
        std::vector<std::vector<Cyclotomic>> pts;
        std::set<std::vector<Cyclotomic>> seen;
        for (const auto& p : orbit) {
            if (!fs.contains(p) || seen.count(p)) continue;
            std::set<std::vector<Cyclotomic>> suborbit;
            for (int h : fs.centralizer) suborbit.insert(d.action.act(h, p));
            // Keep the smallest member as representative.
            const auto& rep = *suborbit.begin();
            if (!seen.count(rep)) pts.push_back(fs.coordinates(rep));
            seen.insert(suborbit.begin(), suborbit.end());
        }
        if (pts.empty()) continue;

        int prev_rank = -1, steady = 0, used = 0, rank_now = 0;
        for (int deg = 0; deg <= cap; ++deg) {
            auto basis = invariant_form_basis(d, g, n, deg);
            OnlineRank r;
            int rank = 0;
            for (const auto& w : basis) {
                std::vector<Cyclotomic> row;
                for (const auto& p : pts) {
                    auto vals = w.eval(p);
                    row.insert(row.end(), vals.begin(), vals.end());
                }
                if (r.insert(std::move(row))) ++rank;
            }
            used = deg;
            rank_now = rank;
            if (rank == prev_rank) {
                if (++steady >= 2) break;
            } else {
                steady = 0;
            }
            prev_rank = rank;
        }
        res.dimension += rank_now;
        res.used_degree = std::max(res.used_degree, used);
        if (steady < 2) res.stabilized = false;
    }
    return res;
}

} // namespace heckehom
