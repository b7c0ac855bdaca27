#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace doublet {

// Affine solution set of a linear system over Z/N, maintained incrementally:
// solutions are t0 + span(columns of L).  Constraints are folded in one at a
// time with unimodular column operations, so N may be composite.
class ZModAffineSolver {
public:
    ZModAffineSolver(int nvars, int modulus);

    // sum coeff_i * x_i = rhs (mod N).  Returns false once the system has
    // become infeasible (and stays false).
    bool add_constraint(const std::vector<std::pair<int, int>>& coeffs, int rhs);

    bool feasible() const { return feasible_; }
    int nvars() const { return nvars_; }
    int modulus() const { return modulus_; }

    const std::vector<int>& particular() const;  // throws if infeasible
    // column-major generators of the homogeneous part (nvars entries each)
    const std::vector<std::vector<int>>& generators() const { return cols_; }

    // All solutions, each of length nvars; throws if more than cap.
    std::vector<std::vector<int>> enumerate(std::size_t cap = 200000) const;

private:
    int nvars_;
    int modulus_;
    bool feasible_ = true;
    std::vector<int> t0_;
    std::vector<std::vector<int>> cols_;
};

// P*A*Q = diag(d_0, d_1, ...) over Z/N with P, Q invertible; d_i | d_{i+1}.
// `coimage` holds the columns of P^{-1}: the i-th column generates the i-th
// cyclic factor of coker(A) = (Z/N)^rows / im(A), of order gcd(d_i, N)
// (d_i = 0 for i beyond the diagonal support).
struct SmithDecomposition {
    std::vector<int> diagonal;               // length = rows
    std::vector<std::vector<int>> coimage;   // rows x rows, column-major
};

SmithDecomposition smith_normal_form(const std::vector<std::vector<int>>& columns, int rows,
                                     int modulus);

long long mod_pow(long long base, long long exp, long long mod);
long long mod_inverse(long long a, long long mod);

}  // namespace doublet
