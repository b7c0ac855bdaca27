#pragma once

#include <string>
#include <vector>

#include "doublet/group.hpp"
#include "doublet/rational.hpp"

namespace doublet {

// Finitely presented group <x_1..x_n | relators>; relator words are
// sequences of signed 1-based generator indices (-i means x_i^{-1}).
struct GroupPresentation {
    std::string name;
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

// Built-in closed 3-manifold fundamental groups: S^3, S1xS2, T^3, T^2xS1
// alias T^3; lens spaces L(2)..L(6); the Poincare sphere; Z^2 proxy.
const std::vector<GroupPresentation>& manifold_catalog();
GroupPresentation find_manifold(const std::string& name);

// Literal syntax "<n; x1 x2 x1^-1, x2^3>".
GroupPresentation parse_presentation(const std::string& text);

// Number of homomorphisms from the presented group to G, by pruned search
// over generator images (OpenMP over the first generator).
long long count_homomorphisms(const GroupPresentation& p, const GroupPtr& g,
                              long long budget = 10'000'000);
// Plain nested enumeration without pruning; reference for the kernel above.
long long count_homomorphisms_reference(const GroupPresentation& p, const GroupPtr& g,
                                        long long budget = 10'000'000);

// Z_G(M) = |Hom(pi_1(M), G)| / |G|
Rational dw_invariant(const GroupPresentation& p, const GroupPtr& g);

struct DWComparison {
    std::string manifold;
    Rational left, right;
    bool equal;
};
// Evaluates both invariants over the catalog (or a custom list) and reports
// every manifold; `all_equal` summarizes.
struct DWReport {
    std::vector<DWComparison> rows;
    bool all_equal = true;
};
DWReport cross_validate(const GroupPtr& g, const GroupPtr& q,
                        const std::vector<GroupPresentation>& catalog = manifold_catalog());

}  // namespace doublet
