#include "doublet/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "doublet/zmodsolve.hpp"

namespace doublet {

int Cocycle2::position(int parent_elem) const {
    auto it = std::lower_bound(domain.members.begin(), domain.members.end(), parent_elem);
    if (it == domain.members.end() || *it != parent_elem)
        throw std::out_of_range("element not in cocycle domain");
    return (int)(it - domain.members.begin());
}

bool Cocycle2::is_zero() const {
    return std::all_of(table.begin(), table.end(), [](int v) { return v == 0; });
}

Cocycle2 Cocycle2::trivial(const Subgroup& h, int modulus) {
    return Cocycle2{h, modulus, std::vector<int>(h.order() * h.order(), 0)};
}

Cocycle2 Cocycle2::rescaled(int target) const {
    if (target % modulus != 0)
        throw std::invalid_argument("cocycle rescale target must be a multiple of the modulus");
    int f = target / modulus;
    Cocycle2 out{domain, target, table};
    for (int& v : out.table) v = v * f % target;
    return out;
}

Cocycle2 Cocycle2::conjugated(int x) const {
    const GroupPtr& g = domain.parent;
    int n = order();
    int xi = g->inv(x);
    Cocycle2 out{domain, modulus, std::vector<int>(n * n, 0)};
    std::vector<int> pre(n);  // position of x^-1 a x for each position a
    for (int a = 0; a < n; ++a) pre[a] = position(g->conj(domain.members[a], xi));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.at(a, b) = at(pre[a], pre[b]);
    return out;
}

void Cocycle2::check() const {
    int n = order();
    SubgroupView view = subgroup_group(domain);
    for (int a = 0; a < n; ++a)
        if (at(0, a) != 0 || at(a, 0) != 0) throw std::logic_error("cocycle is not normalized");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int ab = view.group->op(a, b), bc = view.group->op(b, c);
                long long lhs = at(a, b) + at(ab, c);
                long long rhs = at(b, c) + at(a, bc);
                if ((lhs - rhs) % modulus != 0) throw std::logic_error("cocycle identity fails");
            }
}

namespace {

// variable index of the pair (a, b) with a, b nonidentity positions
inline int pair_var(int a, int b, int n) { return (a - 1) * (n - 1) + (b - 1); }

std::vector<std::pair<int, int>> combine_terms(std::vector<std::pair<int, int>> terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<std::pair<int, int>> out;
    for (auto [v, c] : terms) {
        if (!out.empty() && out.back().first == v)
            out.back().second += c;
        else
            out.emplace_back(v, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](auto& p) { return p.second == 0; }),
              out.end());
    return out;
}

}  // namespace

namespace {
CohomologyGroup second_cohomology_uncached(const Subgroup& h, int modulus);
}

CohomologyGroup second_cohomology(const Subgroup& h, int modulus) {
    // keyed by group identity, member set and modulus; entries are immutable
    struct Key {
        const FiniteGroup* g;
        std::vector<int> members;
        int modulus;
        bool operator<(const Key& o) const {
            return std::tie(g, members, modulus) < std::tie(o.g, o.members, o.modulus);
        }
    };
    static std::map<Key, CohomologyGroup> cache;
    static std::mutex cache_mutex;
    Key key{h.parent.get(), h.members, modulus > 0 ? modulus : h.order()};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CohomologyGroup result = second_cohomology_uncached(h, modulus);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

namespace {

CohomologyGroup second_cohomology_uncached(const Subgroup& h, int modulus) {
    int n = h.order();
    if (n > size_cap())
        throw std::runtime_error("cohomology cap exceeded (order " + std::to_string(n) + ")");
    const int N = modulus > 0 ? modulus : n;
    SubgroupView view = subgroup_group(h);
    const GroupPtr& grp = view.group;
    CohomologyGroup out;
    out.domain = h;
    out.modulus = N;
    if (n == 1) {
        out.representatives.push_back(Cocycle2::trivial(h, N));
        return out;
    }
    const int nvars = (n - 1) * (n - 1);

    // cocycles with values in mu_N: kernel of the degree-2 differential
    ZModAffineSolver kernel(nvars, N);
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            for (int c = 1; c < n; ++c) {
                std::vector<std::pair<int, int>> terms;
                terms.reserve(4);
                int ab = grp->op(a, b), bc = grp->op(b, c);
                terms.emplace_back(pair_var(a, b, n), 1);
                if (ab != 0) terms.emplace_back(pair_var(ab, c, n), 1);
                terms.emplace_back(pair_var(b, c, n), -1);
                if (bc != 0) terms.emplace_back(pair_var(a, bc, n), -1);
                terms = combine_terms(std::move(terms));
                if (!terms.empty()) kernel.add_constraint(terms, 0);
            }
    if (!kernel.feasible()) throw std::logic_error("cocycle kernel infeasible");

    // classes modulo k*-coboundaries: a cochain c: H -> k* trivializing a
    // mu_N-valued cocycle has values in mu_M, M = N * exp(H)
    const int M = N * grp->exponent();
    const auto& gens = kernel.generators();
    int s = (int)gens.size();
    int cvars = n - 1;
    ZModAffineSolver relation(s + cvars, M);
    int scale = M / N;
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            int var = pair_var(a, b, n);
            std::vector<std::pair<int, int>> terms;
            for (int j = 0; j < s; ++j)
                if (gens[j][var]) terms.emplace_back(j, gens[j][var] * scale % M);
            int ab = grp->op(a, b);
            terms.emplace_back(s + a - 1, -1);
            terms.emplace_back(s + b - 1, -1);
            if (ab != 0) terms.emplace_back(s + ab - 1, 1);
            terms = combine_terms(std::move(terms));
            if (!terms.empty()) relation.add_constraint(terms, 0);
        }
    if (!relation.feasible()) throw std::logic_error("coboundary relation infeasible");
    std::vector<std::vector<int>> rel_cols;
    for (const auto& col : relation.generators()) {
        std::vector<int> y(s);
        bool nonzero = false;
        for (int j = 0; j < s; ++j) {
            y[j] = col[j] % N;
            if (y[j]) nonzero = true;
        }
        if (nonzero) rel_cols.push_back(std::move(y));
    }

    SmithDecomposition snf = smith_normal_form(rel_cols, s, N);
    std::vector<std::pair<int, std::vector<int>>> factors;  // (order, generator in y-space)
    long long total = 1;
    for (int i = 0; i < s; ++i) {
        int ord = (int)std::gcd((long long)snf.diagonal[i], (long long)N);
        if (ord <= 1) continue;
        total *= ord;
        if (total > 100000) throw std::runtime_error("second cohomology too large to enumerate");
        factors.emplace_back(ord, snf.coimage[i]);
        out.structure.push_back(ord);
    }

    // enumerate all classes, zero tuple (the trivial class) first
    std::vector<int> tuple(factors.size(), 0);
    auto emit = [&]() {
        std::vector<int> y(s, 0);
        for (size_t k = 0; k < factors.size(); ++k)
            for (int j = 0; j < s; ++j)
                y[j] = (y[j] + tuple[k] * factors[k].second[j]) % N;
        Cocycle2 rep = Cocycle2::trivial(h, N);
        bool all_zero = std::all_of(tuple.begin(), tuple.end(), [](int v) { return v == 0; });
        if (!all_zero) {
            std::vector<int> t(nvars, 0);
            for (int j = 0; j < s; ++j) {
                if (y[j] == 0) continue;
                for (int var = 0; var < nvars; ++var)
                    t[var] = (t[var] + y[j] * gens[j][var]) % N;
            }
            for (int a = 1; a < n; ++a)
                for (int b = 1; b < n; ++b) rep.at(a, b) = t[pair_var(a, b, n)];
        }
        out.representatives.push_back(std::move(rep));
    };
    emit();
    while (true) {
        size_t k = 0;
        while (k < factors.size()) {
            if (++tuple[k] < factors[k].first) break;
            tuple[k] = 0;
            ++k;
        }
        if (k == factors.size()) break;
        emit();
    }
    return out;
}

}  // namespace

namespace {

std::optional<std::vector<int>> coboundary_witness_mod(const Cocycle2& gamma, int witness_mod) {
    int n = gamma.order();
    if (n == 1) return std::vector<int>{0};
    SubgroupView view = subgroup_group(gamma.domain);
    const GroupPtr& grp = view.group;
    int scale = witness_mod / gamma.modulus;
    ZModAffineSolver solver(n - 1, witness_mod);
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            std::vector<std::pair<int, int>> terms;
            int ab = grp->op(a, b);
            terms.emplace_back(a - 1, 1);
            terms.emplace_back(b - 1, 1);
            if (ab != 0) terms.emplace_back(ab - 1, -1);
            terms = combine_terms(std::move(terms));
            if (!solver.add_constraint(terms, gamma.at(a, b) * scale % witness_mod))
                return std::nullopt;
        }
    std::vector<int> c(n, 0);
    const auto& t = solver.particular();
    for (int a = 1; a < n; ++a) c[a] = t[a - 1];
    return c;
}

}  // namespace

std::optional<std::vector<int>> is_coboundary(const Cocycle2& gamma) {
    return coboundary_witness_mod(gamma, gamma.modulus);
}

std::optional<std::vector<int>> kstar_coboundary_witness(const Cocycle2& gamma) {
    SubgroupView view = subgroup_group(gamma.domain);
    return coboundary_witness_mod(gamma, gamma.modulus * view.group->exponent());
}

bool cohomologous(const Cocycle2& a, const Cocycle2& b) {
    if (a.domain.members != b.domain.members) throw std::invalid_argument("domain mismatch");
    int l = std::lcm(a.modulus, b.modulus);
    Cocycle2 x = a.rescaled(l), y = b.rescaled(l);
    Cocycle2 diff = x;
    for (size_t i = 0; i < diff.table.size(); ++i)
        diff.table[i] = ((x.table[i] - y.table[i]) % l + l) % l;
    return kstar_coboundary_witness(diff).has_value();
}

int class_of(const Cocycle2& gamma, const CohomologyGroup& coh) {
    for (size_t i = 0; i < coh.representatives.size(); ++i)
        if (cohomologous(gamma, coh.representatives[i])) return (int)i;
    throw std::logic_error("cocycle matches no cohomology class");
}

int CommutatorCharacter::exponent_at(int parent_elem) const {
    auto it = std::lower_bound(members.begin(), members.end(), parent_elem);
    if (it == members.end() || *it != parent_elem)
        throw std::out_of_range("element not in centralizer");
    return exponents[it - members.begin()];
}

CommutatorCharacter commutator_character(const Cocycle2& gamma, int f_parent) {
    const GroupPtr& g = gamma.domain.parent;
    int fpos = gamma.position(f_parent);
    CommutatorCharacter out;
    out.modulus = gamma.modulus;
    for (int b = 0; b < gamma.order(); ++b) {
        int bp = gamma.domain.members[b];
        if (g->op(f_parent, bp) != g->op(bp, f_parent)) continue;
        out.members.push_back(bp);
        int v = gamma.at(fpos, b) - gamma.at(b, fpos);
        out.exponents.push_back(((v % gamma.modulus) + gamma.modulus) % gamma.modulus);
    }
    return out;
}

Cocycle2 restrict_cocycle(const Cocycle2& gamma, const Subgroup& s) {
    for (int m : s.members)
        if (!gamma.domain.contains(m))
            throw std::invalid_argument("restriction target is not contained in the domain");
    int k = s.order();
    Cocycle2 out{s, gamma.modulus, std::vector<int>(k * k, 0)};
    for (int a = 0; a < k; ++a) {
        int pa = gamma.position(s.members[a]);
        for (int b = 0; b < k; ++b) out.at(a, b) = gamma.at(pa, gamma.position(s.members[b]));
    }
    return out;
}

std::vector<std::vector<int>> symmetry_orbits(const std::vector<int>& conjugators,
                                              const CohomologyGroup& coh) {
    int k = (int)coh.size();
    std::vector<int> parent_of(k);
    std::iota(parent_of.begin(), parent_of.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent_of[x] != x) x = parent_of[x] = parent_of[parent_of[x]];
        return x;
    };
    for (int x : conjugators) {
        if (x == 0) continue;
        for (int i = 0; i < k; ++i) {
            Cocycle2 moved = coh.representatives[i].conjugated(x);
            int j = class_of(moved, coh);
            int a = find(i), b = find(j);
            if (a != b) parent_of[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<int, std::vector<int>> orbits;
    for (int i = 0; i < k; ++i) orbits[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : orbits) out.push_back(members);
    return out;
}

std::vector<std::vector<int>> symmetry_orbits(const Subgroup& h, const CohomologyGroup& coh) {
    return symmetry_orbits(normalizer(h.parent, h).members, coh);
}

std::vector<Cocycle2> classes_up_to_symmetry(const Subgroup& h, const CohomologyGroup& coh) {
    std::vector<Cocycle2> out;
    for (const auto& orbit : symmetry_orbits(h, coh))
        out.push_back(coh.representatives[orbit.front()]);
    return out;
}

}  // namespace doublet
