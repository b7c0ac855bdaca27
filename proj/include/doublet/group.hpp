#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace doublet {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group on elements 0..n-1 given by an explicit multiplication table.
// Element 0 is always the identity.  Immutable after construction.
class FiniteGroup {
public:
    FiniteGroup(std::vector<int> mult_table, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int op(int a, int b) const { return mult_[a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int identity() const { return 0; }
    // g x g^{-1}
    int conj(int x, int g) const { return op(op(g, x), inv_[g]); }

    int element_order(int x) const;
    int exponent() const;
    bool is_abelian() const;

    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Set when built via direct_product; used by Goursat decomposition.
    GroupPtr left_factor() const { return left_; }
    GroupPtr right_factor() const { return right_; }
    bool is_product() const { return left_ != nullptr; }
    int pair_index(int a, int b) const { return a * (int)right_->order() + b; }
    int pair_left(int x) const { return x / right_->order(); }
    int pair_right(int x) const { return x % right_->order(); }

    // Throws if the table is not a group (associativity, unit, inverses).
    void validate() const;

private:
    friend GroupPtr direct_product(const GroupPtr&, const GroupPtr&);

    int n_;
    std::vector<int> mult_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    GroupPtr left_, right_;
};

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted parent indices, closed, contains 0

    int order() const { return (int)members.size(); }
    bool contains(int x) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool operator<(const Subgroup& o) const;
};

// A subgroup materialized as a FiniteGroup of its own, with index maps.
struct SubgroupView {
    GroupPtr group;               // order = members.size(), identity first
    std::vector<int> to_parent;   // subgroup index -> parent index
    std::vector<int> from_parent; // parent index -> subgroup index or -1
};

struct QuotientView {
    GroupPtr group;               // cosets, identity coset first
    std::vector<int> projection;  // parent-of-H index (H members only) -> coset
};

struct ConjClass {
    int rep;                   // minimal member
    std::vector<int> members;  // sorted
};

struct ConjClasses {
    std::vector<ConjClass> classes;
    std::vector<int> class_of;  // element -> class index
    std::vector<int> witness;   // element u -> some x with x u x^{-1} = rep
};

// Goursat description of a subgroup U of a direct product G x Q:
// U = {(g,q) : g in M, q in N, i(g) = j(q)} for surjections i, j onto P.
struct GoursatDatum {
    Subgroup m;             // in left factor
    Subgroup n;             // in right factor
    GroupPtr p;             // common quotient
    std::vector<int> i;     // indexed by position in m.members
    std::vector<int> j;     // indexed by position in n.members
};

// Group descriptor grammar: catalog name (S3, A3, Cn, Dn, Q8, S4, A4,
// C2xC2, Cn:k), products written GxH, or "perm: (1 2 3)(4 5), (1 2)".
GroupPtr build_group(const std::string& spec, int closure_cap = 4096);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

ConjClasses conjugacy_classes(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, int x);
Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup closure_subgroup(const GroupPtr& g, std::vector<int> generators);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
bool is_normal_in(const Subgroup& f, const Subgroup& h);

SubgroupView subgroup_group(const Subgroup& h);
QuotientView quotient_group(const SubgroupView& h, const std::vector<int>& normal_members);

// One representative per conjugacy class of subgroups, the representative
// being the lexicographically least member set in its class; ordered by
// (order, member list).
std::vector<Subgroup> subgroup_classes(const GroupPtr& g);

// All subgroups conjugate to h, each as a sorted member list.
std::vector<std::vector<int>> conjugates_of(const GroupPtr& g, const Subgroup& h);
std::vector<int> conjugated_members(const GroupPtr& g, const std::vector<int>& members, int x);

std::vector<std::pair<int, int>> commuting_pairs(const GroupPtr& g);

GoursatDatum goursat_decompose(const Subgroup& u);
Subgroup goursat_compose(const GroupPtr& product, const GoursatDatum& d);

// Heuristic display name for small groups: {e}, Cn, C2xC2, S3, D4, Q8, ...
std::string group_display_name(const GroupPtr& g);
std::string subgroup_display_name(const Subgroup& h);
// For subgroups of a direct product: AxB, d(G), d(P)(AxB) style names.
std::string product_subgroup_display_name(const Subgroup& u);

// Enumeration cap (default 64), overridable via DOUBLET_SIZE_CAP.
int size_cap();

}  // namespace doublet
