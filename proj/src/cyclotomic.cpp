#include "doublet/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace doublet {

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::map<int, std::vector<long long>> g_poly_cache;
std::map<int, std::vector<std::vector<long long>>> g_power_cache;
std::mutex g_cache_mutex;

// Exact division of integer polynomials, remainder must vanish.
std::vector<long long> poly_div(std::vector<long long> num, const std::vector<long long>& den) {
    std::vector<long long> quot(num.size() - den.size() + 1, 0);
    for (int i = (int)quot.size() - 1; i >= 0; --i) {
        long long c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

}  // namespace

const std::vector<long long>& Cyclotomic::cyclotomic_poly(int n) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_poly_cache.find(n);
    if (it != g_poly_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0 || g_poly_cache.count(m)) continue;
        std::vector<long long> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        std::vector<long long> acc{1};
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const auto& phi_d = g_poly_cache.at(d);
            std::vector<long long> next(acc.size() + phi_d.size() - 1, 0);
            for (size_t i = 0; i < acc.size(); ++i)
                for (size_t j = 0; j < phi_d.size(); ++j) next[i + j] += acc[i] * phi_d[j];
            acc = std::move(next);
        }
        g_poly_cache.emplace(m, poly_div(std::move(num), acc));
    }
    return g_poly_cache.at(n);
}

// power_table(n)[j] = coefficients of zeta_n^j in the power basis, for
// j < max(n, 2*phi(n)); covers both products and conductor embeddings.
const std::vector<std::vector<long long>>& Cyclotomic::power_table(int n) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_power_cache.find(n);
        if (it != g_power_cache.end()) return it->second;
    }
    const auto& phi_poly = cyclotomic_poly(n);
    int deg = (int)phi_poly.size() - 1;
    int limit = std::max(n, 2 * deg);
    std::vector<std::vector<long long>> table;
    table.reserve(limit);
    std::vector<long long> cur(deg, 0);
    cur[0] = 1;
    for (int j = 0; j < limit; ++j) {
        table.push_back(cur);
        // multiply by zeta and reduce the overflow term via Phi_n (monic).
        long long top = cur[deg - 1];
        for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (int i = 0; i < deg; ++i) cur[i] -= top * phi_poly[i];
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_power_cache.emplace(n, std::move(table)).first->second;
}

Cyclotomic Cyclotomic::root_of_unity(int n, long long k) {
    if (n <= 0) throw std::invalid_argument("root_of_unity: order must be positive");
    k %= n;
    if (k < 0) k += n;
    long long g = std::gcd((long long)n, k == 0 ? (long long)n : k);
    int nn = (int)(n / g);
    long long kk = k / g;
    if (nn == 1) return Cyclotomic(1);
    if (nn == 2) return Cyclotomic(-1);
    Cyclotomic r;
    r.conductor_ = nn;
    const auto& pw = power_table(nn)[kk];
    r.coeffs_.assign(pw.size(), Rational());
    for (size_t i = 0; i < pw.size(); ++i) r.coeffs_[i] = Rational(pw[i]);
    return r;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(int target) const {
    if (target == conductor_) return *this;
    if (target % conductor_ != 0)
        throw std::invalid_argument("embedding target must be a multiple of the conductor");
    int step = target / conductor_;
    const auto& pw = power_table(target);
    int deg = euler_phi(target);
    Cyclotomic r;
    r.conductor_ = target;
    r.coeffs_.assign(deg, Rational());
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        const auto& rep = pw[j * step];
        for (int i = 0; i < deg; ++i)
            if (rep[i] != 0) r.coeffs_[i] += coeffs_[j] * Rational(rep[i]);
    }
    return r;
}

Cyclotomic Cyclotomic::conj() const {
    if (conductor_ == 1) return *this;
    const auto& pw = power_table(conductor_);
    int deg = (int)coeffs_.size();
    Cyclotomic r;
    r.conductor_ = conductor_;
    r.coeffs_.assign(deg, Rational());
    for (int j = 0; j < deg; ++j) {
        if (coeffs_[j].is_zero()) continue;
        const auto& rep = pw[j == 0 ? 0 : conductor_ - j];
        for (int i = 0; i < deg; ++i)
            if (rep[i] != 0) r.coeffs_[i] += coeffs_[j] * Rational(rep[i]);
    }
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    int l = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.embedded(l), y = b.embedded(l);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    int l = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.embedded(l), y = b.embedded(l);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    int l = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.embedded(l), y = b.embedded(l);
    size_t deg = x.coeffs_.size();
    std::vector<Rational> raw(2 * deg - 1);
    for (size_t i = 0; i < deg; ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < deg; ++j) {
            if (y.coeffs_[j].is_zero()) continue;
            raw[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    Cyclotomic r;
    r.conductor_ = l;
    r.coeffs_.assign(deg, Rational());
    const auto& pw = power_table(l);
    for (size_t e = 0; e < raw.size(); ++e) {
        if (raw[e].is_zero()) continue;
        if (e < deg) {
            r.coeffs_[e] += raw[e];
        } else {
            const auto& rep = pw[e];
            for (size_t i = 0; i < deg; ++i)
                if (rep[i] != 0) r.coeffs_[i] += raw[e] * Rational(rep[i]);
        }
    }
    return r;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c *= q;
    return r;
}

Cyclotomic Cyclotomic::operator/(const Rational& q) const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c /= q;
    return r;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    // Solve (this) * x = 1 in the power basis by Gaussian elimination.
    int deg = (int)coeffs_.size();
    const auto& pw = power_table(conductor_);
    std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
    for (int j = 0; j < deg; ++j) {
        // column j: coefficients of zeta^j * this
        for (int i = 0; i < deg; ++i) {
            if (coeffs_[i].is_zero()) continue;
            int e = i + j;
            if (e < deg) {
                m[e][j] += coeffs_[i];
            } else {
                const auto& rep = pw[e];
                for (int r = 0; r < deg; ++r)
                    if (rep[r] != 0) m[r][j] += coeffs_[i] * Rational(rep[r]);
            }
        }
    }
    m[0][deg] = Rational(1);
    for (int col = 0; col < deg; ++col) {
        int pivot = -1;
        for (int r = col; r < deg; ++r)
            if (!m[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::logic_error("singular cyclotomic inversion");
        std::swap(m[col], m[pivot]);
        Rational p = m[col][col];
        for (int c = col; c <= deg; ++c) m[col][c] /= p;
        for (int r = 0; r < deg; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (int c = col; c <= deg; ++c) m[r][c] -= f * m[col][c];
        }
    }
    Cyclotomic x;
    x.conductor_ = conductor_;
    x.coeffs_.assign(deg, Rational());
    for (int i = 0; i < deg; ++i) x.coeffs_[i] = m[i][deg];
    return x;
}

Cyclotomic Cyclotomic::reduced() const {
    if (conductor_ == 1) return *this;
    if (is_rational()) return Cyclotomic(coeffs_[0]);
    for (int d = 2; d < conductor_; ++d) {
        if (conductor_ % d != 0) continue;
        // value in Q(zeta_d) iff expressible over the embedded power basis
        int sub = euler_phi(d);
        std::vector<Cyclotomic> basis(sub);
        for (int j = 0; j < sub; ++j) basis[j] = root_of_unity(d, j).embedded(conductor_);
        int deg = (int)coeffs_.size();
        std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(sub + 1));
        for (int j = 0; j < sub; ++j)
            for (int i = 0; i < deg; ++i) m[i][j] = basis[j].coeffs()[i];
        for (int i = 0; i < deg; ++i) m[i][sub] = coeffs_[i];
        // least squares-free exact solve; consistency check included
        std::vector<int> pivot_col(deg, -1);
        int row = 0;
        for (int col = 0; col < sub && row < deg; ++col) {
            int p = -1;
            for (int r = row; r < deg; ++r)
                if (!m[r][col].is_zero()) { p = r; break; }
            if (p < 0) continue;
            std::swap(m[row], m[p]);
            Rational pv = m[row][col];
            for (int c = col; c <= sub; ++c) m[row][c] /= pv;
            for (int r = 0; r < deg; ++r) {
                if (r == row || m[r][col].is_zero()) continue;
                Rational f = m[r][col];
                for (int c = col; c <= sub; ++c) m[r][c] -= f * m[row][c];
            }
            pivot_col[row] = col;
            ++row;
        }
        bool consistent = true;
        for (int r = 0; r < deg; ++r) {
            bool all_zero = true;
            for (int c = 0; c < sub; ++c)
                if (!m[r][c].is_zero()) { all_zero = false; break; }
            if (all_zero && !m[r][sub].is_zero()) { consistent = false; break; }
        }
        if (!consistent) continue;
        Cyclotomic r;
        r.conductor_ = d;
        r.coeffs_.assign(sub, Rational());
        for (int rr = 0; rr < deg; ++rr)
            if (pivot_col[rr] >= 0) r.coeffs_[pivot_col[rr]] = m[rr][sub];
        return r;
    }
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    int l = std::lcm(a.conductor_, b.conductor_);
    Cyclotomic x = a.embedded(l), y = b.embedded(l);
    return x.coeffs_ == y.coeffs_;
}

bool Cyclotomic::value_order_less(const Cyclotomic& a, const Cyclotomic& b) {
    int l = std::lcm(a.conductor(), b.conductor());
    Cyclotomic x = a.embedded(l), y = b.embedded(l);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] != y.coeffs_[i]) return x.coeffs_[i] > y.coeffs_[i];
    }
    return false;
}

std::string Cyclotomic::display() const {
    Cyclotomic r = reduced();
    if (r.is_rational()) return r.coeffs_[0].str();
    if (r.conductor() == 3) {
        const Rational& a = r.coeffs_[0];
        const Rational& b = r.coeffs_[1];
        std::string s;
        if (!a.is_zero()) s = a.str();
        if (!b.is_zero()) {
            std::string bs;
            if (b == Rational(1)) bs = "w";
            else if (b == Rational(-1)) bs = "-w";
            else bs = b.str() + "*w";
            if (s.empty()) s = bs;
            else s += (bs[0] == '-' ? bs : "+" + bs);
        }
        return s;
    }
    return "";
}

std::string Cyclotomic::str() const {
    if (is_rational()) return coeffs_[0].str();
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::string term = coeffs_[i].str();
        if (i > 0) {
            if (term == "1") term = "";
            else if (term == "-1") term = "-";
            term += "z" + std::to_string(conductor_);
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s.empty() ? "0" : s;
}

}  // namespace doublet
