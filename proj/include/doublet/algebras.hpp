#pragma once

#include <vector>

#include "doublet/cohomology.hpp"
#include "doublet/group.hpp"
#include "doublet/moddata.hpp"

namespace doublet {

// H-action coefficients on the basis of k[F, gamma]:
// h(e_f) = zeta^eps(h,f) e_{h f h^-1}.
struct EpsilonMap {
    Subgroup h;
    Subgroup f;
    int modulus = 1;
    std::vector<int> table;  // |H| x |F| exponents

    int at(int hpos, int fpos) const { return table[hpos * f.order() + fpos]; }
    int& at(int hpos, int fpos) { return table[hpos * f.order() + fpos]; }
};

// Quadruple (H, F <| H, gamma in Z^2(F, mu_N), eps) classifying an
// indecomposable commutative separable algebra in Z(G).
struct AlgebraDatum {
    Subgroup h;
    Subgroup f;
    Cocycle2 gamma;
    EpsilonMap eps;
};

struct TrivialisingAlgebra {
    Subgroup h;
    Cocycle2 gamma;  // on h
};

bool is_trivialising(const AlgebraDatum& a);
AlgebraDatum trivialising_datum(const TrivialisingAlgebra& t);
TrivialisingAlgebra as_trivialising(const AlgebraDatum& a);

// All eps solving the action/multiplicativity/commutativity identities for
// (H, F, gamma), with exponents in Z/(gamma.modulus * exp F).  Possibly empty.
std::vector<EpsilonMap> solve_epsilon(const Subgroup& h, const Subgroup& f,
                                      const Cocycle2& gamma, std::size_t cap = 200000);

void check_epsilon(const AlgebraDatum& a);  // throws if the identities fail
bool twist_check(const AlgebraDatum& a);    // eps_f(f) = 1 for all f in F

// Isomorphism of algebra data over the same ambient group: simultaneous
// conjugacy of (H, F) plus a cochain witness relating (gamma, eps).
bool algebras_isomorphic(const AlgebraDatum& a, const AlgebraDatum& b);

// One representative per isomorphism class, deterministic order.
std::vector<AlgebraDatum> classify_algebras(const GroupPtr& g);

// chi(f,g) = 1/|H| sum over x in G with both conjugates in H of the
// commutator pairing of gamma at the conjugated pair.
PairFunction algebra_character(const ZContext& ctx, const TrivialisingAlgebra& t);

// Transfer of a pair function on a subgroup (given through its view) to the
// ambient group of ctx.
PairFunction transfer_character(const ZContext& ctx, const SubgroupView& h_view,
                                const PairFunction& chi_on_h);

struct InvariantMatrix {
    std::vector<std::vector<long long>> m;    // coefficient of chi_i conj(chi_j)
    std::vector<std::vector<long long>> raw;  // product-basis coefficients
};

// Partition-function matrix of the trivialising algebra A(U, gamma) in
// Z(G x Q); U is a subgroup of the product underlying prodctx.
InvariantMatrix modular_invariant(const ZContext& gctx, const ZContext& qctx,
                                  const ZContext& prodctx, const Subgroup& u,
                                  const Cocycle2& gamma);

struct InvarianceReport {
    bool s_fixed = false;
    bool t_fixed = false;
    bool ok() const { return s_fixed && t_fixed; }
};
InvarianceReport verify_invariance(const ZContext& ctx, const PairFunction& chi);

// All group homomorphisms c: F -> Z/M with c(identity) = 0.
std::vector<std::vector<int>> character_shifts(const SubgroupView& f_view, int modulus);

}  // namespace doublet
