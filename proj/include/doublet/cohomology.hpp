#pragma once

#include <optional>
#include <vector>

#include "doublet/group.hpp"

namespace doublet {

// Normalized 2-cocycle on a subgroup H, with values recorded as exponents in
// Z/N (the cocycle value at (a,b) is zeta_N^table).  Entries are indexed by
// positions in domain.members.
struct Cocycle2 {
    Subgroup domain;
    int modulus = 1;
    std::vector<int> table;  // |H| x |H| exponents

    int order() const { return domain.order(); }
    int at(int pos_a, int pos_b) const { return table[pos_a * domain.order() + pos_b]; }
    int& at(int pos_a, int pos_b) { return table[pos_a * domain.order() + pos_b]; }
    int position(int parent_elem) const;
    bool is_zero() const;

    static Cocycle2 trivial(const Subgroup& h, int modulus);
    // same cocycle with exponents rescaled into Z/target (modulus | target)
    Cocycle2 rescaled(int target) const;
    // pull back along conjugation by x (x must normalize the domain):
    // result(a, b) = this(x^-1 a x, x^-1 b x)
    Cocycle2 conjugated(int x) const;
    void check() const;  // normalization + cocycle identity, throws
};

struct CohomologyGroup {
    Subgroup domain;
    int modulus = 1;
    std::vector<Cocycle2> representatives;  // trivial class first
    std::vector<int> structure;             // cyclic factor orders > 1
    std::size_t size() const { return representatives.size(); }
};

// H^2(H, k*) with representatives valued in mu_N, N = modulus (default |H|).
// Classes are taken modulo coboundaries of k*-valued cochains, so the result
// is the Schur multiplier, not H^2(H, mu_N).
CohomologyGroup second_cohomology(const Subgroup& h, int modulus = 0);

// Witness c with (dc)(f,g) = c(f) + c(g) - c(fg) = table(f,g) mod N, as a
// vector over member positions (c at identity = 0); nullopt if gamma is not
// a mu_N-coboundary.
std::optional<std::vector<int>> is_coboundary(const Cocycle2& gamma);

// Coboundary of a k*-valued cochain: witness exponents live in
// Z/(N * exp H); nullopt if the class is nontrivial in H^2(H, k*).
std::optional<std::vector<int>> kstar_coboundary_witness(const Cocycle2& gamma);
bool cohomologous(const Cocycle2& a, const Cocycle2& b);
// Index into coh.representatives of gamma's class.
int class_of(const Cocycle2& gamma, const CohomologyGroup& coh);

// gamma_f(g) = gamma(f,g) - gamma(g,f) on the centralizer of f in H.
struct CommutatorCharacter {
    std::vector<int> members;    // centralizer of f, parent indices
    std::vector<int> exponents;  // parallel to members, mod gamma.modulus
    int modulus = 1;
    int exponent_at(int parent_elem) const;
};
CommutatorCharacter commutator_character(const Cocycle2& gamma, int f_parent);

Cocycle2 restrict_cocycle(const Cocycle2& gamma, const Subgroup& s);

// Orbit representatives of the conjugation action of the normalizer of H in
// its parent group on the classes of coh.
std::vector<Cocycle2> classes_up_to_symmetry(const Subgroup& h, const CohomologyGroup& coh);
std::vector<std::vector<int>> symmetry_orbits(const Subgroup& h, const CohomologyGroup& coh);
// Same, under conjugation by an explicit element set.
std::vector<std::vector<int>> symmetry_orbits(const std::vector<int>& conjugators,
                                              const CohomologyGroup& coh);

}  // namespace doublet
