#pragma once

#include <vector>

#include "doublet/cyclotomic.hpp"
#include "doublet/group.hpp"

namespace doublet {

// Ordinary character table with exact cyclotomic entries.  Rows: trivial
// character first, then ascending degree, ties broken by the deterministic
// value order.  Columns follow conjugacy_classes(g).
struct CharacterTable {
    GroupPtr group;
    ConjClasses classes;
    std::vector<int> degrees;
    std::vector<std::vector<Cyclotomic>> rows;  // rows[r][class]

    int num_classes() const { return (int)classes.classes.size(); }
    const Cyclotomic& value(int row, int element) const {
        return rows[row][classes.class_of[element]];
    }
};

// Exact table computed by eigenvector splitting of the class-sum matrices
// modulo a prime p = 1 (mod exp G), p > 2*sqrt(|G|)*exp(G), followed by a
// discrete-log lift of eigenvalue multiplicities to roots of unity.
CharacterTable character_table(const GroupPtr& g);

// (1/|G|) sum_g chi(g) * conj(psi(g)) for class functions given by values on
// the classes of t.
Cyclotomic inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& chi,
                         const std::vector<Cyclotomic>& psi);

}  // namespace doublet
