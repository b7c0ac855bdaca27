#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "doublet/chartab.hpp"
#include "doublet/cyclotomic.hpp"
#include "doublet/group.hpp"

namespace doublet {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

// Simple object (g, psi): conjugacy class representative g together with an
// irreducible character psi of its centralizer.
struct SimpleObject {
    int class_index;
    int class_rep;
    int char_index;  // row in the centralizer's character table
    int degree;      // psi(e)
    long long dim;   // [G : C_G(g)] * degree
    std::string label;
};

// k-valued function on the commuting pairs of G.
struct PairFunction {
    GroupPtr group;
    std::vector<Cyclotomic> values;  // aligned with commuting_pairs(group)
};

// Everything derived from G that the double's modular data needs: classes,
// centralizer character tables, the simple-object basis, commuting pairs and
// the simple characters.  Built once per group and passed around explicitly.
struct ZContext {
    GroupPtr group;
    ConjClasses classes;
    std::vector<Subgroup> centralizers;       // per class
    std::vector<SubgroupView> cent_views;     // per class
    std::vector<CharacterTable> cent_tables;  // per class
    std::vector<SimpleObject> simples;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_idx;  // f * |G| + g -> index, -1 if not commuting
    std::vector<PairFunction> simple_chars;
    std::vector<int> dual_perm;  // i -> index of the dual simple

    int pair_at(int f, int g) const { return pair_idx[f * group->order() + g]; }
    const Cyclotomic& value(const PairFunction& pf, int f, int g) const {
        return pf.values[pair_at(f, g)];
    }
};

ZContext make_z_context(const GroupPtr& g);

const std::vector<SimpleObject>& simple_objects(const ZContext& ctx);

// chi_X(f, h) = tr_{X_f}(h), computed by the transfer formula from the
// centralizer character.
PairFunction simple_character(const ZContext& ctx, int simple_index);

// S_{(f,psi),(g,xi)} = 1/|G| sum over commuting (u, v), u ~ f, v ~ g of
// psi(x v^-1 x^-1) xi(y u^-1 y^-1) with x u x^-1 = f, y v y^-1 = g.  The
// entries are independent of the witness choice; seed != 0 randomizes it.
CycMatrix s_matrix(const ZContext& ctx, std::uint64_t seed = 0);
// Entry-by-entry serial evaluation, kept as the reference for the blocked
// OpenMP kernel above.
CycMatrix s_matrix_reference(const ZContext& ctx);

CycMatrix t_matrix(const ZContext& ctx);

PairFunction dual_character(const ZContext& ctx, const PairFunction& chi);

enum class SL2Gen { S, T };
// S(chi)(f,g) = chi(g, f^-1); T(chi)(f,g) = chi(f, fg).
PairFunction sl2_act(const ZContext& ctx, SL2Gen gen, const PairFunction& chi);

Cyclotomic pair_inner_product(const ZContext& ctx, const PairFunction& a, const PairFunction& b);

// Multiplicities of chi in the simple basis; throws if any multiplicity is
// not a nonnegative integer or the reconstruction is inexact.
std::vector<long long> decompose(const ZContext& ctx, const PairFunction& chi);

long long global_dimension(const ZContext& ctx);

struct ModularityReport {
    bool s_symmetric = false;
    bool s_fourth_power_identity = false;
    bool ts_cubed_relation = false;
    bool dims_positive = false;
    Cyclotomic lambda;
    bool ok() const {
        return s_symmetric && s_fourth_power_identity && ts_cubed_relation && dims_positive;
    }
};
ModularityReport verify_modularity(const ZContext& ctx);
ModularityReport verify_modularity(const ZContext& ctx, const CycMatrix& s, const CycMatrix& t);

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
bool mat_equal(const CycMatrix& a, const CycMatrix& b);

}  // namespace doublet
