#include "heckehom/group.hpp"

#include "heckehom/parallel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace heckehom {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels)
    : mult_(std::move(cayley)), labels_(std::move(labels)) {
    const int n = order();
    for (const auto& row : mult_)
        if (static_cast<int>(row.size()) != n) throw DomainError("Cayley table is not square");
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = (mult_[e][g] == g && mult_[g][e] == g);
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw DomainError("Cayley table has no identity");
    inv_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mult_[g][h] == identity_ && mult_[h][g] == identity_) { inv_[g] = h; break; }
        if (inv_[g] < 0) throw DomainError("Cayley table element without inverse");
    }
    if (labels_.empty()) {
        labels_.resize(n);
        for (int g = 0; g < n; ++g) labels_[g] = "g" + std::to_string(g);
    }
    if (static_cast<int>(labels_.size()) != n) throw DomainError("label count mismatch");
}

std::optional<int> FiniteGroup::index_of_label(const std::string& s) const {
    for (int g = 0; g < order(); ++g)
        if (labels_[g] == s) return g;
    return std::nullopt;
}

void FiniteGroup::build_classes_() const {
    if (!classes_.empty()) return;
    const int n = order();
    class_index_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (class_index_[g] >= 0) continue;
        std::set<int> cls;
        for (int h = 0; h < n; ++h) cls.insert(conj(h, g));
        int id = static_cast<int>(classes_.size());
        classes_.emplace_back(cls.begin(), cls.end());
        for (int x : classes_.back()) class_index_[x] = id;
    }
}

const std::vector<std::vector<int>>& FiniteGroup::conjugacy_classes() const {
    build_classes_();
    return classes_;
}

int FiniteGroup::class_of(int g) const {
    build_classes_();
    return class_index_[g];
}

int FiniteGroup::class_rep(int g) const {
    build_classes_();
    return classes_[class_index_[g]].front();
}

std::vector<int> FiniteGroup::centralizer(int g) const {
    std::vector<int> z;
    for (int h = 0; h < order(); ++h)
        if (mult(h, g) == mult(g, h)) z.push_back(h);
    return z;
}

int FiniteGroup::transporter(int g, int target) const {
    for (int h = 0; h < order(); ++h)
        if (conj(h, g) == target) return h;
    return -1;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
    std::set<int> seen{identity_};
    std::vector<int> queue{identity_};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int g : gens) {
            int y = mult(x, g);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(identity_)) return false;
    for (int a : elems)
        for (int b : elems)
            if (!s.count(mult(a, b))) return false;
    return true;
}

std::vector<int> FiniteGroup::coset_reps(const std::vector<int>& subgroup) const {
    std::vector<bool> covered(order(), false);
    std::vector<int> reps;
    for (int g = 0; g < order(); ++g) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (int h : subgroup) covered[mult(g, h)] = true;
    }
    return reps;
}

void FiniteGroup::validate() const {
    const int n = order();
    for (const auto& row : mult_)
        for (int x : row)
            if (x < 0 || x >= n) throw DomainError("Cayley table entry out of range");
    auto check = [&](int a, int b, int c) {
        if (mult(mult(a, b), c) != mult(a, mult(b, c)))
            throw DomainError("Cayley table is not associative");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check(a, b, c);
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<int> d(0, n - 1);
        for (int t = 0; t < 20000; ++t) check(d(rng), d(rng), d(rng));
    }
}

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const {
    return FiniteGroup(mult_, std::move(labels));
}

LinearAction::LinearAction(int dim, std::vector<ExactMatrix> matrices)
    : dim_(dim), mats_(std::move(matrices)) {}

std::pair<FiniteGroup, LinearAction> LinearAction::from_generators(
    const std::vector<ExactMatrix>& gens, const std::vector<std::string>& gen_labels) {
    if (gens.empty()) throw DomainError("group closure needs at least one generator");
    const int d = gens[0].rows();
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw DomainError("generator matrices must be square of equal size");

    std::vector<ExactMatrix> elems{ExactMatrix::identity(d)};
    std::map<ExactMatrix, int> index{{elems[0], 0}};
    std::vector<std::string> words{"e"};
    std::size_t head = 0;
    while (head < elems.size()) {
        ExactMatrix cur = elems[head];
        std::string cur_word = words[head];
        ++head;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            ExactMatrix next = cur * gens[gi];
            if (index.count(next)) continue;
            if (elems.size() >= 4096) throw DomainError("generator closure exceeded 4096 elements");
            index[next] = static_cast<int>(elems.size());
            std::string glabel =
                gi < gen_labels.size() ? gen_labels[gi] : std::string(1, char('a' + gi));
            words.push_back(cur_word == "e" ? glabel : cur_word + glabel);
            elems.push_back(next);
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> cayley(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = index.find(elems[a] * elems[b]);
            if (it == index.end())
                throw DomainError("generator closure is not multiplicatively closed");
            cayley[a][b] = it->second;
        }
    FiniteGroup g(std::move(cayley), std::move(words));
    LinearAction act(d, std::move(elems));
    return {std::move(g), std::move(act)};
}

std::vector<int> LinearAction::stabilizer(const std::vector<Cyclotomic>& v) const {
    std::vector<int> st;
    for (int g = 0; g < size(); ++g)
        if (act(g, v) == v) st.push_back(g);
    return st;
}

void LinearAction::validate(const FiniteGroup& G) const {
    if (size() != G.order()) throw DomainError("action needs one matrix per group element");
    if (mats_[G.identity()] != ExactMatrix::identity(dim_))
        throw DomainError("action of identity is not the identity matrix");
    for (int g = 0; g < G.order(); ++g)
        for (int h = 0; h < G.order(); ++h)
            if (mats_[g] * mats_[h] != mats_[G.mult(g, h)])
                throw DomainError("action is not a homomorphism");
}

TwoCocycle::TwoCocycle(int m, std::vector<std::vector<int>> exponents)
    : m_(m), exp_(std::move(exponents)) {
    if (m_ < 1) throw DomainError("cocycle value order must be positive");
    const std::size_t n = exp_.size();
    for (auto& row : exp_) {
        if (row.size() != n) throw DomainError("cocycle table is not square");
        for (auto& e : row) e = ((e % m_) + m_) % m_;
    }
}

TwoCocycle TwoCocycle::trivial(int group_order) {
    return TwoCocycle(1, std::vector<std::vector<int>>(group_order, std::vector<int>(group_order, 0)));
}

TwoCocycle TwoCocycle::coboundary(const FiniteGroup& G, int m, const std::vector<int>& c) {
    const int n = G.order();
    if (((c[G.identity()] % m) + m) % m != 0)
        throw DomainError("coboundary function must vanish at the identity");
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) e[g][h] = c[g] + c[h] - c[G.mult(g, h)];
    return TwoCocycle(m, std::move(e));
}

int TwoCocycle::natural_char_exponent(const FiniteGroup& G, int g, int h) const {
    // ♮^g(h) = ♮(h,g)·♮(hg,h^{-1})·♮(h,h^{-1})^{-1}, from expanding
    // T_h T_g T_h^{-1} T_{hgh^{-1}}^{-1} with T_h^{-1} = ♮(h,h^{-1})^{-1} T_{h^{-1}}.
    const int hg = G.mult(h, g);
    const int hinv = G.inverse(h);
    int e = exp_[h][g] + exp_[hg][hinv] - exp_[h][hinv];
    return ((e % m_) + m_) % m_;
}

bool TwoCocycle::regular_on(const FiniteGroup& G, int g, const std::vector<int>& subgroup) const {
    for (int h : subgroup)
        if (natural_char_exponent(G, g, h) != 0) return false;
    return true;
}

TwoCocycle TwoCocycle::restricted(const std::vector<int>& elems) const {
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) e[a][b] = exp_[elems[a]][elems[b]];
    return TwoCocycle(m_, std::move(e));
}

namespace {

CocycleCheck check_row(const FiniteGroup& G, const TwoCocycle& c, int g) {
    const int n = G.order();
    const int m = c.order_of_values();
    const int e = G.identity();
    if (c.exponent(e, g) != 0 || c.exponent(g, e) != 0) return {false, {g, -1, -1}};
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
            int lhs = c.exponent(g, h) + c.exponent(G.mult(g, h), k);
            int rhs = c.exponent(h, k) + c.exponent(g, G.mult(h, k));
            if (((lhs - rhs) % m + m) % m != 0) return {false, {g, h, k}};
        }
    return {true, {}};
}

} // namespace

CocycleCheck validate_cocycle_serial(const FiniteGroup& G, const TwoCocycle& c) {
    if (c.size() != G.order()) return {false, {-1, -1, -1}};
    for (int g = 0; g < G.order(); ++g) {
        CocycleCheck r = check_row(G, c, g);
        if (!r.ok) return r;
    }
    return {true, {}};
}

CocycleCheck validate_cocycle(const FiniteGroup& G, const TwoCocycle& c) {
    if (c.size() != G.order()) return {false, {-1, -1, -1}};
    const int n = G.order();
    auto results = map_indexed<CocycleCheck>(
        static_cast<std::size_t>(n), [&](std::size_t g) { return check_row(G, c, static_cast<int>(g)); });
    for (const auto& r : results)
        if (!r.ok) return r;
    return {true, {}};
}

void TwistedGroupDatum::validate() const {
    group.validate();
    action.validate(group);
    CocycleCheck c = validate_cocycle(group, cocycle);
    if (!c.ok)
        throw DomainError("invalid 2-cocycle at triple (" + std::to_string(c.violation.g) + "," +
                          std::to_string(c.violation.h) + "," + std::to_string(c.violation.k) + ")");
    if (conductor % cocycle.order_of_values() != 0)
        throw DomainError("scenario conductor must be divisible by the cocycle value order");
    if (static_cast<int>(var_names.size()) != action.dim())
        throw DomainError("variable names must match the action dimension");
}

} // namespace heckehom
