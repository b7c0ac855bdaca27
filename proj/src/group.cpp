#include "doublet/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace doublet {

int size_cap() {
    static int cap = [] {
        if (const char* env = std::getenv("DOUBLET_SIZE_CAP")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 64;
    }();
    return cap;
}

FiniteGroup::FiniteGroup(std::vector<int> mult_table, std::vector<std::string> labels)
    : mult_(std::move(mult_table)), labels_(std::move(labels)) {
    n_ = 0;
    while (n_ * n_ < (int)mult_.size()) ++n_;
    if (n_ * n_ != (int)mult_.size() || n_ == 0)
        throw std::invalid_argument("multiplication table is not square");
    for (int a = 0; a < n_; ++a)
        if (op(0, a) != a || op(a, 0) != a)
            throw std::invalid_argument("element 0 is not a two-sided identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (op(a, b) == 0 && op(b, a) == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) throw std::invalid_argument("element without two-sided inverse");
    }
    if (labels_.empty()) {
        labels_.resize(n_);
        labels_[0] = "e";
        for (int i = 1; i < n_; ++i) labels_[i] = "g" + std::to_string(i);
    }
    if ((int)labels_.size() != n_) throw std::invalid_argument("label count mismatch");
}

void FiniteGroup::validate() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw std::logic_error("multiplication table is not associative");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if ((int)distinct.size() != n_) throw std::logic_error("labels are not distinct");
}

int FiniteGroup::element_order(int x) const {
    int k = 1, y = x;
    while (y != 0) {
        y = op(y, x);
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int x = 0; x < n_; ++x) e = std::lcm(e, (long long)element_order(x));
    return (int)e;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (op(a, b) != op(b, a)) return false;
    return true;
}

bool Subgroup::contains(int x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool Subgroup::operator<(const Subgroup& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
}

// ---------------------------------------------------------------- builders

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {  // (a*b)(p) = a(b(p))
    Perm r(a.size());
    for (size_t p = 0; p < a.size(); ++p) r[p] = a[b[p]];
    return r;
}

std::string cycle_label(const Perm& p) {
    std::string s;
    std::vector<char> seen(p.size(), 0);
    bool wide = p.size() > 9;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == (int)i) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first && wide) s += " ";
            s += std::to_string(j + 1);
            first = false;
            j = p[j];
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

GroupPtr group_from_perms(const std::vector<Perm>& gens, int closure_cap) {
    if (gens.empty()) throw std::invalid_argument("no permutation generators");
    size_t pts = gens[0].size();
    Perm id(pts);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (size_t k = 0; k < elems.size(); ++k) {
        for (const Perm& g : gens) {
            Perm prod = compose(elems[k], g);
            if (index.emplace(prod, (int)elems.size()).second) {
                elems.push_back(prod);
                if ((int)elems.size() > closure_cap)
                    throw std::runtime_error("group closure exceeds size cap " +
                                             std::to_string(closure_cap));
            }
        }
    }
    int n = (int)elems.size();
    std::vector<int> table(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = cycle_label(elems[i]);
    return std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
}

Perm parse_cycles(const std::string& text, int pts) {
    Perm p(pts);
    std::iota(p.begin(), p.end(), 0);
    size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace((unsigned char)text[pos])) { ++pos; continue; }
        if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation: " + text);
        size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("malformed cycle notation: " + text);
        std::istringstream in(text.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        int v;
        while (in >> v) {
            if (v < 1 || v > pts) throw std::invalid_argument("cycle point out of range");
            cyc.push_back(v - 1);
        }
        if (!in.eof()) throw std::invalid_argument("malformed cycle notation: " + text);
        Perm c(pts);
        std::iota(c.begin(), c.end(), 0);
        for (size_t i = 0; i < cyc.size(); ++i) c[cyc[i]] = cyc[(i + 1) % cyc.size()];
        p = compose(c, p);
        pos = close + 1;
    }
    return p;
}

GroupPtr parse_perm_spec(const std::string& body, int closure_cap) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : body) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    int pts = 0;
    for (const auto& part : parts)
        for (size_t i = 0; i < part.size(); ++i)
            if (std::isdigit((unsigned char)part[i])) {
                int v = std::atoi(part.c_str() + i);
                pts = std::max(pts, v);
                while (i + 1 < part.size() && std::isdigit((unsigned char)part[i + 1])) ++i;
            }
    if (pts == 0) throw std::invalid_argument("no points in permutation spec");
    std::vector<Perm> gens;
    for (const auto& part : parts) gens.push_back(parse_cycles(part, pts));
    return group_from_perms(gens, closure_cap);
}

Perm n_cycle(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

GroupPtr build_quaternion() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    auto unit_mul = [](int a, int b, int& sign) {
        // units 0=1, 1=i, 2=j, 3=k
        static const int tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return tab[a][b];
    };
    auto decode = [](int x) { return std::pair<int, int>{x / 2, x % 2 == 0 ? 1 : -1}; };
    auto encode = [](int unit, int sign) { return unit * 2 + (sign > 0 ? 0 : 1); };
    std::vector<int> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            auto [ua, sa] = decode(a);
            auto [ub, sb] = decode(b);
            int s;
            int u = unit_mul(ua, ub, s);
            table[a * 8 + b] = encode(u, sa * sb * s);
        }
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
}

GroupPtr build_semidirect(int n, int k) {
    // C_n : C_k with the action x -> x^a for the least a of order k mod n
    int a = -1;
    for (int c = 2; c < n; ++c) {
        if (std::gcd(c, n) != 1) continue;
        long long pw = 1;
        int ord = 0;
        do {
            pw = pw * c % n;
            ++ord;
        } while (pw != 1);
        if (ord == k) { a = c; break; }
    }
    if (a < 0 && k == 1) a = 1;
    if (a < 0)
        throw std::invalid_argument("Cn:k — no automorphism of order " + std::to_string(k) +
                                    " acting on C" + std::to_string(n));
    std::vector<long long> apow(k, 1);
    for (int j = 1; j < k; ++j) apow[j] = apow[j - 1] * a % n;
    auto idx = [&](int i, int j) { return i * k + j; };
    std::vector<int> table(n * k * n * k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j)
            for (int i2 = 0; i2 < n; ++i2)
                for (int j2 = 0; j2 < k; ++j2)
                    table[idx(i, j) * n * k + idx(i2, j2)] =
                        idx((int)((i + i2 * apow[j]) % n), (j + j2) % k);
    std::vector<std::string> labels(n * k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            std::string s;
            if (i > 0) s += "x" + (i > 1 ? std::to_string(i) : "");
            if (j > 0) s += "y" + (j > 1 ? std::to_string(j) : "");
            labels[idx(i, j)] = s.empty() ? "e" : s;
        }
    return std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

GroupPtr build_group(const std::string& raw_spec, int closure_cap) {
    std::string spec = trim(raw_spec);
    if (spec.empty()) throw std::invalid_argument("empty group descriptor");
    if (spec.rfind("perm:", 0) == 0) return parse_perm_spec(spec.substr(5), closure_cap);
    // product GxH (any number of factors)
    if (spec.find('x') != std::string::npos) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : spec) {
            if (ch == 'x') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        parts.push_back(cur);
        GroupPtr g = build_group(parts[0], closure_cap);
        for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, build_group(parts[i], closure_cap));
        return g;
    }
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string base = trim(spec.substr(0, colon));
        if (base.size() < 2 || base[0] != 'C')
            throw std::invalid_argument("unknown group descriptor: " + spec);
        int n = std::atoi(base.c_str() + 1);
        int k = std::atoi(spec.c_str() + colon + 1);
        if (n < 1 || k < 1) throw std::invalid_argument("unknown group descriptor: " + spec);
        return build_semidirect(n, k);
    }
    if (spec == "Q8") return build_quaternion();
    char kind = spec[0];
    int n = std::atoi(spec.c_str() + 1);
    bool numeric = spec.size() > 1 &&
                   std::all_of(spec.begin() + 1, spec.end(),
                               [](char c) { return std::isdigit((unsigned char)c); });
    if (!numeric || n < 1) throw std::invalid_argument("unknown group descriptor: " + spec);
    switch (kind) {
        case 'C': {
            if (n == 1) return group_from_perms({Perm{0}}, closure_cap);
            return group_from_perms({n_cycle(n)}, closure_cap);
        }
        case 'S': {
            if (n < 2) return build_group("C1", closure_cap);
            std::vector<Perm> gens{n_cycle(n)};
            Perm t(n);
            std::iota(t.begin(), t.end(), 0);
            std::swap(t[0], t[1]);
            gens.push_back(t);
            return group_from_perms(gens, closure_cap);
        }
        case 'A': {
            if (n < 3) return build_group("C1", closure_cap);
            Perm c3(n);
            std::iota(c3.begin(), c3.end(), 0);
            c3[0] = 1; c3[1] = 2; c3[2] = 0;
            if (n == 3) return group_from_perms({c3}, closure_cap);
            std::vector<Perm> gens{c3};
            if (n % 2 == 1) {
                gens.push_back(n_cycle(n));
            } else {
                Perm c(n);
                std::iota(c.begin(), c.end(), 0);
                for (int i = 1; i < n; ++i) c[i] = i == n - 1 ? 1 : i + 1;
                gens.push_back(c);
            }
            return group_from_perms(gens, closure_cap);
        }
        case 'D': {
            if (n < 2) return build_group("C2", closure_cap);
            Perm refl(n);
            for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
            return group_from_perms({n_cycle(n), refl}, closure_cap);
        }
        default:
            throw std::invalid_argument("unknown group descriptor: " + spec);
    }
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    int na = a->order(), nb = b->order(), n = na * nb;
    std::vector<int> table(n * n);
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1)
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    table[(x1 * nb + y1) * n + (x2 * nb + y2)] =
                        a->op(x1, x2) * nb + b->op(y1, y2);
    std::vector<std::string> labels(n);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y)
            labels[x * nb + y] = "(" + a->label(x) + "," + b->label(y) + ")";
    auto g = std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
    g->left_ = a;
    g->right_ = b;
    return g;
}

// ------------------------------------------------------------- conjugation

ConjClasses conjugacy_classes(const GroupPtr& g) {
    int n = g->order();
    ConjClasses out;
    out.class_of.assign(n, -1);
    out.witness.assign(n, -1);
    for (int rep = 0; rep < n; ++rep) {
        if (out.class_of[rep] >= 0) continue;
        int ci = (int)out.classes.size();
        ConjClass cls;
        cls.rep = rep;
        for (int x = 0; x < n; ++x) {
            int u = g->conj(rep, g->inv(x));  // x^{-1} rep x
            if (out.class_of[u] < 0) {
                out.class_of[u] = ci;
                out.witness[u] = x;  // x u x^{-1} = rep
                cls.members.push_back(u);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        out.classes.push_back(std::move(cls));
    }
    return out;
}

Subgroup centralizer(const GroupPtr& g, int x) {
    Subgroup s{g, {}};
    for (int y = 0; y < g->order(); ++y)
        if (g->op(x, y) == g->op(y, x)) s.members.push_back(y);
    return s;
}

Subgroup whole_group(const GroupPtr& g) {
    Subgroup s{g, std::vector<int>(g->order())};
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup closure_subgroup(const GroupPtr& g, std::vector<int> generators) {
    std::set<int> s{0};
    for (int x : generators) s.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g->op(a, b)).second) grew = true;
    }
    return Subgroup{g, std::vector<int>(s.begin(), s.end())};
}

std::vector<int> conjugated_members(const GroupPtr& g, const std::vector<int>& members, int x) {
    std::vector<int> out;
    out.reserve(members.size());
    for (int m : members) out.push_back(g->conj(m, x));
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& h) {
    Subgroup s{g, {}};
    for (int x = 0; x < g->order(); ++x)
        if (conjugated_members(g, h.members, x) == h.members) s.members.push_back(x);
    return s;
}

bool is_normal_in(const Subgroup& f, const Subgroup& h) {
    const GroupPtr& g = f.parent;
    for (int x : h.members)
        if (conjugated_members(g, f.members, x) != f.members) return false;
    return true;
}

std::vector<std::vector<int>> conjugates_of(const GroupPtr& g, const Subgroup& h) {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < g->order(); ++x) seen.insert(conjugated_members(g, h.members, x));
    return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

// ------------------------------------------------------------ sub/quotient

SubgroupView subgroup_group(const Subgroup& h) {
    const GroupPtr& g = h.parent;
    int m = (int)h.members.size();
    SubgroupView view;
    view.to_parent = h.members;
    view.from_parent.assign(g->order(), -1);
    for (int i = 0; i < m; ++i) view.from_parent[h.members[i]] = i;
    std::vector<int> table(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            int prod = g->op(h.members[a], h.members[b]);
            int idx = view.from_parent[prod];
            if (idx < 0) throw std::invalid_argument("member set is not closed under multiplication");
            table[a * m + b] = idx;
        }
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = g->label(h.members[i]);
    view.group = std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
    return view;
}

QuotientView quotient_group(const SubgroupView& h, const std::vector<int>& normal_members) {
    const GroupPtr& grp = h.group;
    int n = grp->order();
    std::vector<int> coset_min(n, -1);
    std::vector<int> mins;
    for (int x = 0; x < n; ++x) {
        if (coset_min[x] >= 0) continue;
        int mn = x;
        std::vector<int> coset;
        for (int k : normal_members) coset.push_back(grp->op(x, k));
        for (int y : coset) mn = std::min(mn, y);
        for (int y : coset) coset_min[y] = mn;
        mins.push_back(mn);
    }
    std::sort(mins.begin(), mins.end());
    std::map<int, int> index;
    for (size_t i = 0; i < mins.size(); ++i) index[mins[i]] = (int)i;
    QuotientView q;
    q.projection.assign(n, -1);
    for (int x = 0; x < n; ++x) q.projection[x] = index.at(coset_min[x]);
    int m = (int)mins.size();
    std::vector<int> table(m * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            table[a * m + b] = q.projection[grp->op(mins[a], mins[b])];
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = "[" + grp->label(mins[i]) + "]";
    q.group = std::make_shared<FiniteGroup>(std::move(table), std::move(labels));
    return q;
}

// ------------------------------------------------------- subgroup lattice

namespace {

std::vector<int> canonical_class_rep(const GroupPtr& g, const std::vector<int>& members) {
    std::vector<int> best = members;
    for (int x = 1; x < g->order(); ++x) {
        std::vector<int> c = conjugated_members(g, members, x);
        if (c < best) best = c;
    }
    return best;
}

}  // namespace

std::vector<Subgroup> subgroup_classes(const GroupPtr& g) {
    int n = g->order();
    if (n > size_cap())
        throw std::runtime_error("subgroup enumeration cap exceeded (order " + std::to_string(n) +
                                 " > " + std::to_string(size_cap()) + ")");
    std::set<std::vector<int>> reps;
    std::vector<std::vector<int>> frontier;
    std::vector<int> triv{0};
    reps.insert(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<int> s = std::move(frontier.back());
        frontier.pop_back();
        for (int x = 1; x < n; ++x) {
            if (std::binary_search(s.begin(), s.end(), x)) continue;
            Subgroup ext = closure_subgroup(g, [&] {
                std::vector<int> gens = s;
                gens.push_back(x);
                return gens;
            }());
            std::vector<int> canon = canonical_class_rep(g, ext.members);
            if (reps.insert(canon).second) frontier.push_back(canon);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(reps.size());
    for (const auto& m : reps) out.push_back(Subgroup{g, m});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> commuting_pairs(const GroupPtr& g) {
    std::vector<std::pair<int, int>> out;
    int n = g->order();
    for (int f = 0; f < n; ++f)
        for (int h = 0; h < n; ++h)
            if (g->op(f, h) == g->op(h, f)) out.emplace_back(f, h);
    return out;
}

// ---------------------------------------------------------------- Goursat

GoursatDatum goursat_decompose(const Subgroup& u) {
    const GroupPtr& prod = u.parent;
    if (!prod->is_product())
        throw std::invalid_argument("Goursat decomposition requires a direct-product parent");
    GroupPtr g = prod->left_factor(), q = prod->right_factor();
    std::set<int> ms, ns, kernel;  // kernel: left coords of U cap (G x e)
    for (int x : u.members) {
        ms.insert(prod->pair_left(x));
        ns.insert(prod->pair_right(x));
        if (prod->pair_right(x) == 0) kernel.insert(prod->pair_left(x));
    }
    GoursatDatum d;
    d.m = Subgroup{g, {ms.begin(), ms.end()}};
    d.n = Subgroup{q, {ns.begin(), ns.end()}};
    SubgroupView mv = subgroup_group(d.m);
    std::vector<int> kernel_positions;
    for (int k : kernel) kernel_positions.push_back(mv.from_parent[k]);
    QuotientView qv = quotient_group(mv, kernel_positions);
    d.p = qv.group;
    d.i.assign(d.m.members.size(), -1);
    for (size_t i = 0; i < d.m.members.size(); ++i) d.i[i] = qv.projection[(int)i];
    d.j.assign(d.n.members.size(), -1);
    for (int x : u.members) {
        int l = prod->pair_left(x), r = prod->pair_right(x);
        int rpos = (int)(std::lower_bound(d.n.members.begin(), d.n.members.end(), r) -
                         d.n.members.begin());
        d.j[rpos] = d.i[mv.from_parent[l]];
    }
    return d;
}

namespace {

void check_surjective_hom(const SubgroupView& sv, const GroupPtr& p, const std::vector<int>& f,
                          const char* side) {
    std::set<int> image(f.begin(), f.end());
    if ((int)image.size() != p->order())
        throw std::invalid_argument(std::string("Goursat map ") + side + " is not surjective");
    int m = sv.group->order();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (f[sv.group->op(a, b)] != p->op(f[a], f[b]))
                throw std::invalid_argument(std::string("Goursat map ") + side +
                                            " is not a homomorphism");
}

}  // namespace

Subgroup goursat_compose(const GroupPtr& product, const GoursatDatum& d) {
    if (!product->is_product())
        throw std::invalid_argument("Goursat composition requires a direct-product parent");
    check_surjective_hom(subgroup_group(d.m), d.p, d.i, "i");
    check_surjective_hom(subgroup_group(d.n), d.p, d.j, "j");
    Subgroup u{product, {}};
    for (size_t a = 0; a < d.m.members.size(); ++a)
        for (size_t b = 0; b < d.n.members.size(); ++b)
            if (d.i[a] == d.j[b])
                u.members.push_back(product->pair_index(d.m.members[a], d.n.members[b]));
    std::sort(u.members.begin(), u.members.end());
    return u;
}

// ------------------------------------------------------------------ names

std::string group_display_name(const GroupPtr& g) {
    int n = g->order();
    if (n == 1) return "{e}";
    int ex = g->exponent();
    if (ex == n) return "C" + std::to_string(n);  // cyclic
    bool ab = g->is_abelian();
    if (ab) {
        if (n == 4) return "C2xC2";
        if (n == 8 && ex == 2) return "C2xC2xC2";
        if (n == 8 && ex == 4) return "C4xC2";
        if (n == 9) return "C3xC3";
        return "Ab" + std::to_string(n);
    }
    if (n == 6) return "S3";
    if (n == 8) {
        int involutions = 0;
        for (int x = 1; x < n; ++x)
            if (g->element_order(x) == 2) ++involutions;
        return involutions == 1 ? "Q8" : "D4";
    }
    if (n == 12) {
        if (ex == 6) {
            int involutions = 0;
            for (int x = 1; x < n; ++x)
                if (g->element_order(x) == 2) ++involutions;
            if (involutions == 1) return "Dic3";
            return "D6";
        }
        return "A4";
    }
    if (n == 24 && ex == 12) return "S4";
    if (n == 36 && ex == 6) return "S3xS3";
    return "G" + std::to_string(n);
}

std::string subgroup_display_name(const Subgroup& h) {
    if (h.order() == 1) return "{e}";
    return group_display_name(subgroup_group(h).group);
}

std::string product_subgroup_display_name(const Subgroup& u) {
    const GroupPtr& prod = u.parent;
    if (!prod->is_product()) return subgroup_display_name(u);
    GoursatDatum d = goursat_decompose(u);
    if ((int)u.members.size() == d.m.order() * d.n.order())
        return subgroup_display_name(d.m) + "x" + subgroup_display_name(d.n);
    std::set<int> k1, k2;
    for (int x : u.members) {
        if (prod->pair_right(x) == 0) k1.insert(prod->pair_left(x));
        if (prod->pair_left(x) == 0) k2.insert(prod->pair_right(x));
    }
    std::string pname = group_display_name(d.p);
    if (k1.size() == 1 && k2.size() == 1) return "d(" + subgroup_display_name(d.m) + ")";
    Subgroup s1{prod->left_factor(), {k1.begin(), k1.end()}};
    Subgroup s2{prod->right_factor(), {k2.begin(), k2.end()}};
    return "d(" + pname + ")(" + subgroup_display_name(s1) + "x" + subgroup_display_name(s2) + ")";
}

}  // namespace doublet
