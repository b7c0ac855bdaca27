#include "doublet/products.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace doublet {

namespace {

struct Intersections {
    std::vector<int> left;   // positions in U of elements (a, e)
    std::vector<int> right;  // positions in U of elements (e, b)
};

Intersections intersections(const Subgroup& u) {
    const GroupPtr& prod = u.parent;
    Intersections out;
    for (size_t i = 0; i < u.members.size(); ++i) {
        int x = u.members[i];
        if (prod->pair_right(x) == 0) out.left.push_back((int)i);
        if (prod->pair_left(x) == 0) out.right.push_back((int)i);
    }
    return out;
}

int pairing_exponent(const Cocycle2& gamma, int pos_a, int pos_b) {
    int v = gamma.at(pos_a, pos_b) - gamma.at(pos_b, pos_a);
    return ((v % gamma.modulus) + gamma.modulus) % gamma.modulus;
}

// parent on one side; `take_right` selects Hom_{Z(G)}(1,-) (a Z(Q)-algebra)
AlgebraDatum parent_side(const Subgroup& u, const Cocycle2& gamma, bool take_right) {
    const GroupPtr& prod = u.parent;
    if (!prod->is_product()) throw std::invalid_argument("parent group is not a product");
    GroupPtr factor = take_right ? prod->right_factor() : prod->left_factor();
    auto coord = [&](int x) { return take_right ? prod->pair_right(x) : prod->pair_left(x); };
    Intersections is = intersections(u);
    const std::vector<int>& own = take_right ? is.right : is.left;
    const std::vector<int>& other = take_right ? is.left : is.right;
    const int N = gamma.modulus;

    // projection of U onto the chosen factor
    std::set<int> proj;
    for (int x : u.members) proj.insert(coord(x));
    Subgroup h{factor, {proj.begin(), proj.end()}};

    // kernel of the pairing against the opposite intersection
    std::vector<int> kernel_positions;
    for (int v : own) {
        bool in_kernel = true;
        for (int w : other)
            if (pairing_exponent(gamma, w, v) != 0) { in_kernel = false; break; }
        if (in_kernel) kernel_positions.push_back(v);
    }
    std::vector<int> kmem;
    for (int pos : kernel_positions) kmem.push_back(coord(u.members[pos]));
    std::sort(kmem.begin(), kmem.end());
    Subgroup k{factor, kmem};
    if (!is_normal_in(k, h)) throw std::logic_error("parent kernel is not normal");

    // restricted cocycle on K
    Cocycle2 gk{k, N, std::vector<int>(k.order() * k.order(), 0)};
    std::vector<int> upos_of_k(k.order());
    for (size_t i = 0; i < kernel_positions.size(); ++i) {
        int pos = kernel_positions[i];
        int c = coord(u.members[pos]);
        int ki = (int)(std::lower_bound(kmem.begin(), kmem.end(), c) - kmem.begin());
        upos_of_k[ki] = pos;
    }
    for (int i = 0; i < k.order(); ++i)
        for (int j = 0; j < k.order(); ++j) gk.at(i, j) = gamma.at(upos_of_k[i], upos_of_k[j]);

    // eps_q(v) = gamma(a, v) - gamma(a v a^-1, a) for any lift a of q;
    // independence of the lift is asserted over all lifts
    EpsilonMap eps{h, k, N, std::vector<int>(h.order() * k.order(), 0)};
    SubgroupView uview = subgroup_group(u);
    for (int qi = 0; qi < h.order(); ++qi) {
        int q = h.members[qi];
        for (int vi = 0; vi < k.order(); ++vi) {
            int vpos = upos_of_k[vi];
            int value = -1;
            for (size_t ui = 0; ui < u.members.size(); ++ui) {
                if (coord(u.members[ui]) != q) continue;
                int conj = uview.group->op(uview.group->op((int)ui, vpos),
                                           uview.group->inv((int)ui));
                int e = gamma.at((int)ui, vpos) - gamma.at(conj, (int)ui);
                e = ((e % N) + N) % N;
                if (value < 0)
                    value = e;
                else if (value != e)
                    throw std::logic_error("parent eps depends on the lift");
            }
            eps.at(qi, vi) = value;
        }
    }
    AlgebraDatum out{h, k, gk, eps};
    check_epsilon(out);
    return out;
}

std::string algebra_label(const Subgroup& u, bool gamma_trivial_class) {
    std::string s = product_subgroup_display_name(u);
    if (!gamma_trivial_class) s = "(" + s + ",y)";
    return s;
}

}  // namespace

AlgebraDatum parent_right(const Subgroup& u, const Cocycle2& gamma) {
    return parent_side(u, gamma, true);
}

AlgebraDatum parent_left(const Subgroup& u, const Cocycle2& gamma) {
    return parent_side(u, gamma, false);
}

std::vector<MaximalAlgebra> maximal_algebras(const GroupPtr& product) {
    if (!product->is_product()) throw std::invalid_argument("maximal algebras need a product group");
    if (product->order() > size_cap())
        throw std::runtime_error("product order exceeds cap (" + std::to_string(product->order()) +
                                 " > " + std::to_string(size_cap()) + ")");
    std::vector<MaximalAlgebra> out;
    for (const Subgroup& u : subgroup_classes(product)) {
        CohomologyGroup coh = second_cohomology(u);
        auto orbits = symmetry_orbits(u, coh);
        for (const auto& orbit : orbits) {
            const Cocycle2& gamma = coh.representatives[orbit.front()];
            MaximalAlgebra alg{u, gamma, parent_left(u, gamma), parent_right(u, gamma),
                               algebra_label(u, orbit.front() == 0)};
            out.push_back(std::move(alg));
        }
    }
    return out;
}

std::vector<EquivalenceDatum> ribbon_equivalences(const GroupPtr& product) {
    if (!product->is_product())
        throw std::invalid_argument("ribbon equivalences need a product group");
    GroupPtr g = product->left_factor(), q = product->right_factor();
    std::vector<EquivalenceDatum> out;
    for (const Subgroup& u : subgroup_classes(product)) {
        // surjectivity of both projections
        std::set<int> p1, p2;
        for (int x : u.members) {
            p1.insert(product->pair_left(x));
            p2.insert(product->pair_right(x));
        }
        if ((int)p1.size() != g->order() || (int)p2.size() != q->order()) continue;
        Intersections is = intersections(u);
        if (is.left.size() != is.right.size()) continue;
        // a nondegenerate pairing needs both intersections abelian
        SubgroupView uview = subgroup_group(u);
        auto abelian = [&](const std::vector<int>& positions) {
            for (int a : positions)
                for (int b : positions)
                    if (uview.group->op(a, b) != uview.group->op(b, a)) return false;
            return true;
        };
        if (!abelian(is.left) || !abelian(is.right)) continue;
        CohomologyGroup coh = second_cohomology(u);
        for (const auto& orbit : symmetry_orbits(u, coh)) {
            const Cocycle2& gamma = coh.representatives[orbit.front()];
            // gamma(.|.) nondegenerate: trivial kernels on both sides
            auto kernel_trivial = [&](const std::vector<int>& side,
                                      const std::vector<int>& opposite) {
                for (int a : side) {
                    if (u.members[a] == 0) continue;
                    bool all_zero = true;
                    for (int b : opposite)
                        if (pairing_exponent(gamma, a, b) != 0) { all_zero = false; break; }
                    if (all_zero) return false;
                }
                return true;
            };
            if (!kernel_trivial(is.left, is.right)) continue;
            if (!kernel_trivial(is.right, is.left)) continue;
            out.push_back(EquivalenceDatum{u, gamma});
        }
    }
    return out;
}

int identify_algebra_class(const std::vector<AlgebraDatum>& classes, const AlgebraDatum& a) {
    int found = -1;
    for (size_t i = 0; i < classes.size(); ++i) {
        if (!algebras_isomorphic(a, classes[i])) continue;
        if (found >= 0) throw std::logic_error("algebra matches two distinct classes");
        found = (int)i;
    }
    if (found < 0) throw std::logic_error("algebra matches no class");
    return found;
}

ParentGraph build_parent_graph(const GroupPtr& product) {
    ParentGraph graph;
    GroupPtr g = product->left_factor(), q = product->right_factor();
    graph.left_classes = classify_algebras(g);
    graph.right_classes = g == q ? graph.left_classes : classify_algebras(q);
    graph.algebras = maximal_algebras(product);
    for (size_t i = 0; i < graph.algebras.size(); ++i) {
        ParentGraph::Edge e;
        e.algebra_index = (int)i;
        e.left = identify_algebra_class(graph.left_classes, graph.algebras[i].left_parent);
        e.right = identify_algebra_class(graph.right_classes, graph.algebras[i].right_parent);
        graph.edges.push_back(e);
    }
    // components over the merged vertex set
    int nl = (int)graph.left_classes.size(), nr = (int)graph.right_classes.size();
    bool merged = g == q;
    int nv = merged ? nl : nl + nr;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : graph.edges) {
        int a = find(e.left);
        int b = find(merged ? e.right : nl + e.right);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::set<int> roots;
    for (int v = 0; v < nv; ++v) roots.insert(find(v));
    graph.components = (int)roots.size();
    return graph;
}

}  // namespace doublet
