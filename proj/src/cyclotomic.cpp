#include "heckehom/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace heckehom {

namespace {

// Quotient of exact polynomial division (dense, ascending coefficients).
// Remainder must vanish; callers rely on that.
std::vector<Rational> exact_div(std::vector<Rational> num, const std::vector<Rational>& den) {
    while (!num.empty() && num.back().is_zero()) num.pop_back();
    if (num.empty()) return {};
    if (num.size() < den.size()) throw DomainError("exact_div: degree underflow");
    std::vector<Rational> q(num.size() - den.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Rational f = num[i + den.size() - 1] / den.back();
        q[i] = f;
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    for (const auto& r : num)
        if (!r.is_zero()) throw DomainError("exact_div: nonzero remainder");
    return q;
}

} // namespace

int euler_phi(int m) {
    int result = m, n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

const std::vector<Rational>& cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<Rational>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Φ_m = (x^m - 1) / Π_{d|m, d<m} Φ_d, computed bottom-up so every
    // divisor is already in the cache.
    std::vector<int> divisors;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        if (!cache.count(d)) {
            // Recurse without holding a second lock: fill directly.
            std::vector<Rational> xm1(d + 1);
            xm1[0] = Rational(-1);
            xm1[d] = Rational(1);
            std::vector<Rational> acc{Rational(1)};
            for (int e = 1; e < d; ++e)
                if (d % e == 0) {
                    const auto& phi_e = cache.at(e);
                    std::vector<Rational> prod(acc.size() + phi_e.size() - 1);
                    for (std::size_t i = 0; i < acc.size(); ++i)
                        for (std::size_t j = 0; j < phi_e.size(); ++j)
                            prod[i + j] += acc[i] * phi_e[j];
                    acc = std::move(prod);
                }
            cache[d] = exact_div(std::move(xm1), acc);
        }
    }
    std::vector<Rational> xm1(m + 1);
    xm1[0] = Rational(-1);
    xm1[m] = Rational(1);
    std::vector<Rational> acc{Rational(1)};
    for (int d : divisors) {
        const auto& phi_d = cache.at(d);
        std::vector<Rational> prod(acc.size() + phi_d.size() - 1);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                prod[i + j] += acc[i] * phi_d[j];
        acc = std::move(prod);
    }
    auto [pos, inserted] = cache.emplace(m, exact_div(std::move(xm1), acc));
    return pos->second;
}

void Cyclotomic::reduce_(std::vector<Rational> raw) {
    const auto& phi = cyclotomic_polynomial(m_);
    const std::size_t deg = phi.size() - 1; // = φ(m)
    // First fold exponents mod m (ζ^m = 1), then reduce mod Φ_m.
    if (raw.size() > static_cast<std::size_t>(m_)) {
        std::vector<Rational> folded(m_);
        for (std::size_t j = 0; j < raw.size(); ++j) folded[j % m_] += raw[j];
        raw = std::move(folded);
    }
    while (raw.size() > deg) {
        std::size_t top = raw.size() - 1;
        Rational lead = raw[top];
        raw.pop_back();
        if (lead.is_zero()) continue;
        // x^top ≡ -(Φ_m - x^deg)·x^(top-deg) mod Φ_m  (Φ_m monic)
        for (std::size_t j = 0; j < deg; ++j) raw[top - deg + j] -= lead * phi[j];
    }
    raw.resize(deg);
    c_ = std::move(raw);
}

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) : m_(conductor) {
    if (conductor < 1) throw DomainError("conductor must be positive");
    reduce_(std::move(coeffs));
}

Cyclotomic Cyclotomic::zero(int m) { return Cyclotomic(m, {}); }

Cyclotomic Cyclotomic::one(int m) { return Cyclotomic(m, {Rational(1)}); }

Cyclotomic Cyclotomic::root_of_unity(int m, long k) {
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = Rational(1);
    return Cyclotomic(m, std::move(c));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic value is not rational: " + str());
    return c_.empty() ? Rational(0) : c_[0];
}

Cyclotomic Cyclotomic::lifted_to(int n) const {
    if (n == m_) return *this;
    if (n % m_ != 0) throw DomainError("conductor lift must go to a multiple");
    const long step = n / m_;
    std::vector<Rational> raw(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero()) raw[(j * step) % n] += c_[j];
    return Cyclotomic(n, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        int n = static_cast<int>(lcm_long(a.m_, b.m_));
        return a.lifted_to(n) + b.lifted_to(n);
    }
    Cyclotomic r = a;
    for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        int n = static_cast<int>(lcm_long(a.m_, b.m_));
        return a.lifted_to(n) * b.lifted_to(n);
    }
    std::vector<Rational> prod(a.c_.size() + b.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Cyclotomic(a.m_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DomainError("cyclotomic division by zero");
    if (is_rational()) {
        Cyclotomic r = *this;
        r.c_[0] = Rational(1) / c_[0];
        for (std::size_t j = 1; j < r.c_.size(); ++j) r.c_[j] = Rational(0);
        return r;
    }
    // Extended Euclid in Q[x]: u·self + v·Φ_m = gcd = const (Φ_m irreducible).
    using Poly = std::vector<Rational>;
    auto trim = [](Poly& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    Poly r0 = cyclotomic_polynomial(m_);
    Poly r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rational(1)}; // track coefficient of self
    while (true) {
        trim(r1);
        if (r1.empty()) throw DomainError("cyclotomic inverse: unexpected zero remainder");
        if (r1.size() == 1) break;
        // r0 = q·r1 + r
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0);
        Poly rem = r0;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            if (rem.size() < r1.size() + i) continue;
            Rational f = rem[i + r1.size() - 1] / r1.back();
            q[i] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= f * r1[j];
        }
        trim(rem);
        // s_new = s0 - q·s1
        Poly snew = s0;
        snew.resize(std::max(snew.size(), q.size() + s1.size()), Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    Rational unit = r1[0];
    for (auto& x : s1) x /= unit;
    return Cyclotomic(m_, std::move(s1));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        int n = static_cast<int>(lcm_long(a.m_, b.m_));
        return a.lifted_to(n) / b.lifted_to(n);
    }
    return a * b.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this, acc = Cyclotomic::one(m_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        int n = static_cast<int>(lcm_long(a.m_, b.m_));
        return a.lifted_to(n) == b.lifted_to(n);
    }
    return a.c_ == b.c_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.m_ != b.m_) {
        int n = static_cast<int>(lcm_long(a.m_, b.m_));
        return a.lifted_to(n) < b.lifted_to(n);
    }
    for (std::size_t j = 0; j < a.c_.size(); ++j) {
        if (a.c_[j] != b.c_[j]) return a.c_[j] < b.c_[j];
    }
    return false;
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        Rational v = c_[j];
        if (first) {
            if (v.sign() < 0) { os << "-"; v = -v; }
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        first = false;
        if (j == 0) {
            os << v.str();
        } else {
            if (v != Rational(1)) os << v.str() << "*";
            os << "z" << m_;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

} // namespace heckehom
