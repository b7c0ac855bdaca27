#include "doublet/zmodsolve.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace doublet {

namespace {

// extended gcd: returns g, sets u, v with u*a + v*b = g
long long ext_gcd(long long a, long long b, long long& u, long long& v) {
    if (b == 0) {
        u = 1;
        v = 0;
        return a;
    }
    long long u1, v1;
    long long g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

inline int norm_mod(long long x, int n) {
    x %= n;
    if (x < 0) x += n;
    return (int)x;
}

}  // namespace

long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

long long mod_inverse(long long a, long long mod) {
    long long u, v;
    long long g = ext_gcd(norm_mod(a, (int)mod), mod, u, v);
    if (g != 1) throw std::domain_error("element not invertible in Z/N");
    return norm_mod(u, (int)mod);
}

ZModAffineSolver::ZModAffineSolver(int nvars, int modulus)
    : nvars_(nvars), modulus_(modulus), t0_(nvars, 0), cols_(nvars) {
    for (int j = 0; j < nvars; ++j) {
        cols_[j].assign(nvars, 0);
        cols_[j][j] = 1;
    }
}

bool ZModAffineSolver::add_constraint(const std::vector<std::pair<int, int>>& coeffs, int rhs) {
    if (!feasible_) return false;
    const int N = modulus_;
    int s = (int)cols_.size();
    std::vector<int> c(s, 0);
    long long r = rhs;
    for (auto [var, a] : coeffs) {
        r -= (long long)a * t0_[var];
        for (int j = 0; j < s; ++j) {
            int lv = cols_[j][var];
            if (lv) c[j] = norm_mod(c[j] + (long long)a * lv, N);
        }
    }
    int rr = norm_mod(r, N);
    int lead = -1;
    for (int j = 0; j < s; ++j)
        if (c[j] != 0) { lead = j; break; }
    if (lead < 0) {
        if (rr != 0) feasible_ = false;
        return feasible_;
    }
    if (lead != 0) {
        std::swap(c[0], c[lead]);
        std::swap(cols_[0], cols_[lead]);
    }
    // unimodular column ops folding c to (g, 0, ..., 0)
    for (int j = 1; j < s; ++j) {
        if (c[j] == 0) continue;
        long long u, v;
        long long a = c[0], b = c[j];
        long long g = ext_gcd(a, b, u, v);
        long long af = a / g, bf = b / g;
        std::vector<int>& c0 = cols_[0];
        std::vector<int>& cj = cols_[j];
        for (int i = 0; i < nvars_; ++i) {
            long long x = c0[i], y = cj[i];
            c0[i] = norm_mod(u * x + v * y, N);
            cj[i] = norm_mod(-bf * x + af * y, N);
        }
        c[0] = norm_mod(g, N);
        c[j] = 0;
    }
    long long g = c[0];
    long long G = std::gcd(g, (long long)N);
    if (rr % G != 0) {
        feasible_ = false;
        return false;
    }
    // particular step along column 0, then restrict it to the kernel direction
    long long y0 = (rr / G) * mod_inverse(g / G, N / G) % (N / G);
    if (y0 != 0)
        for (int i = 0; i < nvars_; ++i)
            t0_[i] = norm_mod(t0_[i] + y0 * cols_[0][i], N);
    long long scale = N / G;
    for (int i = 0; i < nvars_; ++i) cols_[0][i] = norm_mod((long long)cols_[0][i] * scale, N);
    return true;
}

const std::vector<int>& ZModAffineSolver::particular() const {
    if (!feasible_) throw std::logic_error("system is infeasible");
    return t0_;
}

std::vector<std::vector<int>> ZModAffineSolver::enumerate(std::size_t cap) const {
    if (!feasible_) return {};
    const int N = modulus_;
    std::set<std::vector<int>> seen{t0_};
    std::vector<std::vector<int>> frontier{t0_};
    while (!frontier.empty()) {
        std::vector<int> cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& col : cols_) {
            std::vector<int> next(nvars_);
            bool same = true;
            for (int i = 0; i < nvars_; ++i) {
                next[i] = norm_mod(cur[i] + col[i], N);
                if (next[i] != cur[i]) same = false;
            }
            if (same) continue;
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::runtime_error("solution set exceeds enumeration cap");
                frontier.push_back(std::move(next));
            }
        }
    }
    return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

SmithDecomposition smith_normal_form(const std::vector<std::vector<int>>& columns, int rows,
                                     int modulus) {
    const int N = modulus;
    int cols = (int)columns.size();
    // row-major working copy
    std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) a[i][j] = norm_mod(columns[j][i], N);
    // pinv: columns generate coker factors; starts as identity
    std::vector<std::vector<int>> pinv(rows, std::vector<int>(rows, 0));
    for (int i = 0; i < rows; ++i) pinv[i][i] = 1;
    auto balanced = [N](int v) { return v > N / 2 ? N - v : v; };

    int t = 0;
    int limit = std::min(rows, cols);
    while (t < limit) {
        // locate minimal nonzero entry in the trailing submatrix
        int pi = -1, pj = -1, best = N + 1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0 && balanced(a[i][j]) < best) {
                    best = balanced(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) {
            std::swap(a[t], a[pi]);
            for (int i = 0; i < rows; ++i) std::swap(pinv[i][t], pinv[i][pi]);
        }
        if (pj != t)
            for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

        bool clean = true;
        // clear column t with unimodular row ops (mirrored on pinv columns)
        for (int i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) continue;
            long long u, v;
            long long p = a[t][t], q = a[i][t];
            long long g = ext_gcd(p, q, u, v);
            long long pf = p / g, qf = q / g;
            for (int j = t; j < cols; ++j) {
                long long x = a[t][j], y = a[i][j];
                a[t][j] = norm_mod(u * x + v * y, N);
                a[i][j] = norm_mod(-qf * x + pf * y, N);
            }
            // row op matrix M = [[u, v], [-qf, pf]], det 1; pinv *= M^{-1}
            // M^{-1} = [[pf, -v], [qf, u]]
            for (int r = 0; r < rows; ++r) {
                long long x = pinv[r][t], y = pinv[r][i];
                pinv[r][t] = norm_mod(pf * x + qf * y, N);
                pinv[r][i] = norm_mod(-v * x + u * y, N);
            }
            clean = false;
        }
        // clear row t with column ops (no tracking needed)
        for (int j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) continue;
            long long u, v;
            long long p = a[t][t], q = a[t][j];
            long long g = ext_gcd(p, q, u, v);
            long long pf = p / g, qf = q / g;
            for (int i = t; i < rows; ++i) {
                long long x = a[i][t], y = a[i][j];
                a[i][t] = norm_mod(u * x + v * y, N);
                a[i][j] = norm_mod(-qf * x + pf * y, N);
            }
            clean = false;
        }
        if (!clean) continue;  // pivot may have changed; redo this step
        // divisibility: fold in any entry not divisible by the pivot
        long long d = std::gcd((long long)a[t][t], (long long)N);
        int bad_row = -1;
        for (int i = t + 1; i < rows && bad_row < 0; ++i)
            for (int j = t + 1; j < cols; ++j)
                if (a[i][j] % d != 0) { bad_row = i; break; }
        if (bad_row >= 0) {
            for (int j = t; j < cols; ++j) a[t][j] = norm_mod(a[t][j] + a[bad_row][j], N);
            // row t += row bad_row  ->  pinv column bad_row -= column t
            for (int r = 0; r < rows; ++r)
                pinv[r][bad_row] = norm_mod(pinv[r][bad_row] - pinv[r][t], N);
            continue;
        }
        ++t;
    }
    SmithDecomposition out;
    out.diagonal.assign(rows, 0);
    for (int i = 0; i < limit; ++i) out.diagonal[i] = a[i][i];
    out.coimage.assign(rows, std::vector<int>(rows, 0));
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < rows; ++i) out.coimage[j][i] = pinv[i][j];
    return out;
}

}  // namespace doublet
