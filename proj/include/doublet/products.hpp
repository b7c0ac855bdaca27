#pragma once

#include <string>
#include <vector>

#include "doublet/algebras.hpp"

namespace doublet {

// Maximal indecomposable commutative separable algebra A(U, gamma) in
// Z(G x Q), with its two parents.
struct MaximalAlgebra {
    Subgroup u;       // subgroup-class representative of G x Q
    Cocycle2 gamma;   // cohomology-orbit representative, modulus |U|
    AlgebraDatum left_parent;   // in Z(G)
    AlgebraDatum right_parent;  // in Z(Q)
    std::string label;          // AxB / d(P)(AxB) style, ",y" if gamma nontrivial
};

struct EquivalenceDatum {
    Subgroup u;
    Cocycle2 gamma;
};

// All (U, gamma) up to conjugacy and normalizer action on cohomology.
std::vector<MaximalAlgebra> maximal_algebras(const GroupPtr& product);

// Hom_{Z(G)}(1, A(U,gamma)) in Z(Q) and its mirror.
AlgebraDatum parent_right(const Subgroup& u, const Cocycle2& gamma);
AlgebraDatum parent_left(const Subgroup& u, const Cocycle2& gamma);

// Ribbon equivalences Z(G) ~ Z(Q): full projections plus a nondegenerate
// commutator pairing between the two intersection subgroups.
std::vector<EquivalenceDatum> ribbon_equivalences(const GroupPtr& product);

struct ParentGraph {
    std::vector<AlgebraDatum> left_classes;   // classify_algebras of the left factor
    std::vector<AlgebraDatum> right_classes;  // of the right factor
    std::vector<MaximalAlgebra> algebras;
    struct Edge {
        int algebra_index;
        int left;   // index into left_classes
        int right;  // index into right_classes
    };
    std::vector<Edge> edges;
    // connected components over the union of left/right vertices (identified
    // pointwise when the factors coincide)
    int components = 0;
};

ParentGraph build_parent_graph(const GroupPtr& product);

// Index of the class in `classes` isomorphic to `a`; throws unless unique.
int identify_algebra_class(const std::vector<AlgebraDatum>& classes, const AlgebraDatum& a);

}  // namespace doublet
