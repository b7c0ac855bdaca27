#include "doublet/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "doublet/zmodsolve.hpp"

namespace doublet {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long find_dixon_prime(int order, int exponent) {
    long long bound = (long long)(2.0 * std::sqrt((double)order) * exponent);
    long long p = exponent + 1;
    while (p <= bound || (p - 1) % exponent != 0 || !is_prime(p)) {
        p += exponent;
        if (p > 10'000'000) throw std::runtime_error("no suitable prime for character lifting");
    }
    return p;
}

long long element_of_order(long long p, long long e) {
    // z = w^((p-1)/e) for a generator w of F_p^*
    std::vector<long long> prime_factors;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long long w = 2; w < p; ++w) {
        bool generator = true;
        for (long long q : prime_factors)
            if (mod_pow(w, (p - 1) / q, p) == 1) { generator = false; break; }
        if (generator) return mod_pow(w, (p - 1) / e, p);
    }
    throw std::logic_error("no generator of F_p^*");
}

using Col = std::vector<long long>;

// reduced column echelon form; returns pivot rows
std::vector<int> echelonize(std::vector<Col>& basis, long long p) {
    std::vector<int> pivots;
    int k = basis.empty() ? 0 : (int)basis[0].size();
    size_t col = 0;
    for (int row = 0; row < k && col < basis.size(); ++row) {
        size_t sel = col;
        while (sel < basis.size() && basis[sel][row] == 0) ++sel;
        if (sel == basis.size()) continue;
        std::swap(basis[col], basis[sel]);
        long long inv = mod_inverse(basis[col][row], p);
        for (int r = 0; r < k; ++r) basis[col][r] = basis[col][r] * inv % p;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (j == col || basis[j][row] == 0) continue;
            long long f = basis[j][row];
            for (int r = 0; r < k; ++r)
                basis[j][r] = ((basis[j][r] - f * basis[col][r]) % p + p) % p;
        }
        pivots.push_back(row);
        ++col;
    }
    basis.resize(col);
    return pivots;
}

std::vector<long long> char_poly(const std::vector<Col>& r, long long p) {
    // det(xI - R) by interpolation at x = 0..d
    int d = (int)r.size();
    std::vector<long long> xs(d + 1), ys(d + 1);
    for (int t = 0; t <= d; ++t) {
        xs[t] = t;
        std::vector<Col> m(d, Col(d));
        for (int j = 0; j < d; ++j)
            for (int i = 0; i < d; ++i)
                m[j][i] = ((t * (i == j ? 1 : 0) - r[j][i]) % p + p) % p;
        long long det = 1;
        for (int col = 0; col < d && det != 0; ++col) {
            int sel = -1;
            for (int j = col; j < d; ++j)
                if (m[j][col] != 0) { sel = j; break; }
            if (sel < 0) { det = 0; break; }
            if (sel != col) { std::swap(m[sel], m[col]); det = p - det; }
            det = det * m[col][col] % p;
            long long inv = mod_inverse(m[col][col], p);
            for (int j = col + 1; j < d; ++j) {
                if (m[j][col] == 0) continue;
                long long f = m[j][col] * inv % p;
                for (int i = col; i < d; ++i)
                    m[j][i] = ((m[j][i] - f * m[col][i]) % p + p) % p;
            }
        }
        ys[t] = det % p;
    }
    // Lagrange interpolation, degree d
    std::vector<long long> poly(d + 1, 0);
    for (int t = 0; t <= d; ++t) {
        std::vector<long long> basis{1};
        long long denom = 1;
        for (int s = 0; s <= d; ++s) {
            if (s == t) continue;
            basis.resize(basis.size() + 1, 0);
            for (int i = (int)basis.size() - 1; i > 0; --i)
                basis[i] = (basis[i - 1] + basis[i] * (p - xs[s])) % p;
            basis[0] = basis[0] * (p - xs[s]) % p;
            denom = denom * ((xs[t] - xs[s]) % p + p) % p;
        }
        long long scale = ys[t] * mod_inverse(denom, p) % p;
        for (size_t i = 0; i < basis.size(); ++i)
            poly[i] = (poly[i] + scale * basis[i]) % p;
    }
    return poly;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g) {
    int n = g->order();
    if (n > size_cap())
        throw std::runtime_error("character table cap exceeded (order " + std::to_string(n) + ")");
    CharacterTable t;
    t.group = g;
    t.classes = conjugacy_classes(g);
    int k = t.num_classes();
    int e = g->exponent();
    if (n == 1) {
        t.degrees = {1};
        t.rows = {{Cyclotomic(1)}};
        return t;
    }
    long long p = find_dixon_prime(n, e);
    long long z = element_of_order(p, e);

    // class-sum matrices: (M_i)[j][l] = #{(x,y) in K_i x K_j : xy = rep_l}
    std::vector<std::vector<Col>> mats(k);  // mats[i][j] is a column of length k
    for (int i = 0; i < k; ++i) {
        mats[i].assign(k, Col(k, 0));
        for (int l = 0; l < k; ++l) {
            int target = t.classes.classes[l].rep;
            for (int x : t.classes.classes[i].members) {
                int y = g->op(g->inv(x), target);
                ++mats[i][t.classes.class_of[y]][l];
            }
        }
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) mats[i][j][l] %= p;
    }

    // common eigenvector splitting; subspaces held as echelonized bases
    std::vector<std::pair<std::vector<Col>, std::vector<int>>> spaces;
    {
        std::vector<Col> full(k, Col(k, 0));
        for (int j = 0; j < k; ++j) full[j][j] = 1;
        std::vector<int> pivots(k);
        std::iota(pivots.begin(), pivots.end(), 0);
        spaces.emplace_back(std::move(full), std::move(pivots));
    }
    for (int i = 1; i < k; ++i) {
        std::vector<std::pair<std::vector<Col>, std::vector<int>>> next;
        for (auto& [basis, pivots] : spaces) {
            int d = (int)basis.size();
            if (d == 1) {
                next.emplace_back(std::move(basis), std::move(pivots));
                continue;
            }
            // restriction R with columns in the basis coordinates
            std::vector<Col> r(d, Col(d));
            for (int j = 0; j < d; ++j) {
                Col image(k, 0);
                for (int row = 0; row < k; ++row) {
                    const Col& mrow = mats[i][row];
                    long long acc = 0;
                    for (int l = 0; l < k; ++l)
                        if (mrow[l] && basis[j][l]) acc = (acc + mrow[l] * basis[j][l]) % p;
                    image[row] = acc;
                }
                for (int c = 0; c < d; ++c) r[j][c] = image[pivots[c]];
                // verify the image lies in the subspace
                Col residual = image;
                for (int c = 0; c < d; ++c) {
                    long long f = r[j][c];
                    if (f == 0) continue;
                    for (int row = 0; row < k; ++row)
                        residual[row] = ((residual[row] - f * basis[c][row]) % p + p) % p;
                }
                for (int row = 0; row < k; ++row)
                    if (residual[row] != 0)
                        throw std::logic_error("class-sum matrix does not preserve eigenspace");
            }
            auto poly = char_poly(r, p);
            std::vector<long long> roots;
            for (long long lam = 0; lam < p; ++lam) {
                long long v = 0;
                for (int c = (int)poly.size() - 1; c >= 0; --c) v = (v * lam + poly[c]) % p;
                if (v == 0) roots.push_back(lam);
            }
            int lifted_dims = 0;
            for (long long lam : roots) {
                // kernel of (R - lam I)
                std::vector<Col> m(d, Col(d));
                for (int j = 0; j < d; ++j)
                    for (int c = 0; c < d; ++c)
                        m[j][c] = ((r[j][c] - (j == c ? lam : 0)) % p + p) % p;
                // kernel of the transposed system by row reduction
                int rank = 0;
                std::vector<Col> rowmat(d, Col(d));
                for (int row = 0; row < d; ++row)
                    for (int col = 0; col < d; ++col) rowmat[row][col] = m[col][row];
                std::vector<int> pivcol;
                for (int col = 0; col < d && rank < d; ++col) {
                    int sel = -1;
                    for (int row = rank; row < d; ++row)
                        if (rowmat[row][col] != 0) { sel = row; break; }
                    if (sel < 0) continue;
                    std::swap(rowmat[rank], rowmat[sel]);
                    long long inv = mod_inverse(rowmat[rank][col], p);
                    for (int c2 = 0; c2 < d; ++c2) rowmat[rank][c2] = rowmat[rank][c2] * inv % p;
                    for (int row = 0; row < d; ++row) {
                        if (row == rank || rowmat[row][col] == 0) continue;
                        long long f = rowmat[row][col];
                        for (int c2 = 0; c2 < d; ++c2)
                            rowmat[row][c2] = ((rowmat[row][c2] - f * rowmat[rank][c2]) % p + p) % p;
                    }
                    pivcol.push_back(col);
                    ++rank;
                }
                std::vector<Col> kernel;
                std::vector<char> is_piv(d, 0);
                for (int c2 : pivcol) is_piv[c2] = 1;
                for (int free = 0; free < d; ++free) {
                    if (is_piv[free]) continue;
                    Col v(d, 0);
                    v[free] = 1;
                    for (int row = 0; row < rank; ++row)
                        v[pivcol[row]] = (p - rowmat[row][free]) % p;
                    kernel.push_back(std::move(v));
                }
                if (kernel.empty()) continue;
                // lift back: new basis columns = sum kernel coords * basis cols
                std::vector<Col> sub;
                for (const Col& v : kernel) {
                    Col w(k, 0);
                    for (int c = 0; c < d; ++c) {
                        if (v[c] == 0) continue;
                        for (int row = 0; row < k; ++row)
                            w[row] = (w[row] + v[c] * basis[c][row]) % p;
                    }
                    sub.push_back(std::move(w));
                }
                auto piv = echelonize(sub, p);
                lifted_dims += (int)sub.size();
                next.emplace_back(std::move(sub), std::move(piv));
            }
            if (lifted_dims != d)
                throw std::logic_error("eigenspace dimensions do not add up");
        }
        spaces = std::move(next);
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& s) { return s.first.size() == 1; });
        if (all_one) break;
    }
    if ((int)spaces.size() != k) throw std::logic_error("eigenspace splitting incomplete");

    // assemble characters
    std::vector<int> inverse_class(k);
    for (int l = 0; l < k; ++l)
        inverse_class[l] = t.classes.class_of[g->inv(t.classes.classes[l].rep)];
    struct Row {
        int degree;
        std::vector<Cyclotomic> values;
    };
    std::vector<Row> rows;
    for (auto& [basis, pivots] : spaces) {
        Col omega = basis[0];
        long long w0 = omega[0];
        if (w0 == 0) throw std::logic_error("central character vanishes at identity");
        long long inv0 = mod_inverse(w0, p);
        for (int l = 0; l < k; ++l) omega[l] = omega[l] * inv0 % p;
        long long s = 0;
        for (int l = 0; l < k; ++l) {
            long long sz = (long long)t.classes.classes[l].members.size() % p;
            s = (s + omega[l] * omega[inverse_class[l]] % p * mod_inverse(sz, p)) % p;
        }
        long long d2 = (long long)n % p * mod_inverse(s, p) % p;
        int degree = -1;
        for (int d = 1; (long long)d * d <= n; ++d)
            if ((long long)d * d % p == d2) { degree = d; break; }
        if (degree < 0) throw std::logic_error("character degree not recognized");
        std::vector<long long> chi_bar(k);
        for (int l = 0; l < k; ++l) {
            long long sz = (long long)t.classes.classes[l].members.size() % p;
            chi_bar[l] = (long long)degree % p * omega[l] % p * mod_inverse(sz, p) % p;
        }
        // lift values: chi(g) = sum_t m_t zeta_r^t with r = ord(g)
        std::vector<Cyclotomic> values(k);
        for (int l = 0; l < k; ++l) {
            int rep = t.classes.classes[l].rep;
            int r = g->element_order(rep);
            long long zr = mod_pow(z, e / r, p);
            long long zr_inv = mod_inverse(zr, p);
            std::vector<long long> chi_pow(r);
            int x = 0;  // rep^s
            for (int s2 = 0; s2 < r; ++s2) {
                chi_pow[s2] = chi_bar[t.classes.class_of[x]];
                x = g->op(x, rep);
            }
            long long rinv = mod_inverse(r, p);
            Cyclotomic val(0);
            long long total = 0;
            for (int m = 0; m < r; ++m) {
                long long acc = 0;
                for (int s2 = 0; s2 < r; ++s2)
                    acc = (acc + chi_pow[s2] * mod_pow(zr_inv, (long long)m * s2 % r, p)) % p;
                long long mult = acc * rinv % p;
                if (mult > degree)
                    throw std::logic_error("eigenvalue multiplicity exceeds degree");
                total += mult;
                if (mult > 0) val += Cyclotomic::root_of_unity(r, m) * Rational(mult);
            }
            if (total != degree) throw std::logic_error("multiplicities do not sum to degree");
            values[l] = std::move(val);
        }
        rows.push_back(Row{degree, std::move(values)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (int i = 0; i < (int)a.values.size(); ++i)
            if (a.values[i] != b.values[i])
                return Cyclotomic::value_order_less(a.values[i], b.values[i]);
        return false;
    });
    for (auto& r : rows) {
        t.degrees.push_back(r.degree);
        t.rows.push_back(std::move(r.values));
    }
    for (int l = 0; l < k; ++l)
        if (t.rows[0][l] != Cyclotomic(1)) throw std::logic_error("first character is not trivial");
    return t;
}

Cyclotomic inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& chi,
                         const std::vector<Cyclotomic>& psi) {
    if (chi.size() != psi.size() || (int)chi.size() != t.num_classes())
        throw std::invalid_argument("class function size mismatch");
    Cyclotomic acc(0);
    for (int l = 0; l < t.num_classes(); ++l) {
        long long sz = (long long)t.classes.classes[l].members.size();
        acc += chi[l] * psi[l].conj() * Rational(sz);
    }
    return acc / Rational(t.group->order());
}

}  // namespace doublet
