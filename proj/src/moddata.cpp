#include "doublet/moddata.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doublet/parallel.hpp"

namespace doublet {

ZContext make_z_context(const GroupPtr& g) {
    ZContext ctx;
    ctx.group = g;
    ctx.classes = conjugacy_classes(g);
    int n = g->order();
    int k = (int)ctx.classes.classes.size();
    ctx.centralizers.reserve(k);
    for (int c = 0; c < k; ++c) {
        ctx.centralizers.push_back(centralizer(g, ctx.classes.classes[c].rep));
        ctx.cent_views.push_back(subgroup_group(ctx.centralizers.back()));
        ctx.cent_tables.push_back(character_table(ctx.cent_views.back().group));
    }
    for (int c = 0; c < k; ++c) {
        const CharacterTable& tab = ctx.cent_tables[c];
        int index = n / ctx.centralizers[c].order();
        for (int r = 0; r < (int)tab.rows.size(); ++r) {
            SimpleObject s;
            s.class_index = c;
            s.class_rep = ctx.classes.classes[c].rep;
            s.char_index = r;
            s.degree = tab.degrees[r];
            s.dim = (long long)index * tab.degrees[r];
            s.label = "(" + g->label(s.class_rep) + ",chi" + std::to_string(r) + ")";
            ctx.simples.push_back(std::move(s));
        }
    }
    ctx.pairs = commuting_pairs(g);
    ctx.pair_idx.assign(n * n, -1);
    for (size_t i = 0; i < ctx.pairs.size(); ++i)
        ctx.pair_idx[ctx.pairs[i].first * n + ctx.pairs[i].second] = (int)i;
    ctx.simple_chars.reserve(ctx.simples.size());
    for (size_t i = 0; i < ctx.simples.size(); ++i)
        ctx.simple_chars.push_back(simple_character(ctx, (int)i));
    // dual permutation via chi_{X*}(f,g) = chi_X(f^-1, g^-1)
    ctx.dual_perm.assign(ctx.simples.size(), -1);
    for (size_t i = 0; i < ctx.simples.size(); ++i) {
        PairFunction d = dual_character(ctx, ctx.simple_chars[i]);
        int found = -1;
        for (size_t j = 0; j < ctx.simples.size(); ++j) {
            if (ctx.simples[j].class_index !=
                ctx.classes.class_of[g->inv(ctx.simples[i].class_rep)])
                continue;
            if (d.values == ctx.simple_chars[j].values) { found = (int)j; break; }
        }
        if (found < 0) throw std::logic_error("dual simple not found in basis");
        ctx.dual_perm[i] = found;
    }
    return ctx;
}

const std::vector<SimpleObject>& simple_objects(const ZContext& ctx) { return ctx.simples; }

PairFunction simple_character(const ZContext& ctx, int simple_index) {
    const GroupPtr& g = ctx.group;
    const SimpleObject& s = ctx.simples[simple_index];
    const Subgroup& cent = ctx.centralizers[s.class_index];
    const SubgroupView& view = ctx.cent_views[s.class_index];
    const CharacterTable& tab = ctx.cent_tables[s.class_index];
    int rep = s.class_rep;
    PairFunction out{g, std::vector<Cyclotomic>(ctx.pairs.size())};
    for (size_t idx = 0; idx < ctx.pairs.size(); ++idx) {
        auto [f, h] = ctx.pairs[idx];
        if (ctx.classes.class_of[f] != s.class_index) continue;  // zero off the class
        // all x with x f x^-1 = rep form the coset C_G(rep) * witness(f)
        int w = ctx.classes.witness[f];
        Cyclotomic acc(0);
        for (int c : cent.members) {
            int x = g->op(c, w);
            int y = g->conj(h, x);
            int pos = view.from_parent[y];
            if (pos < 0) continue;
            acc += tab.value(s.char_index, pos);
        }
        out.values[idx] = acc / Rational(cent.order());
    }
    return out;
}

namespace {

struct WitnessTable {
    // for each element u: some x with x u x^-1 = class representative
    std::vector<int> x_of;
};

WitnessTable make_witnesses(const ZContext& ctx, std::uint64_t seed) {
    const GroupPtr& g = ctx.group;
    WitnessTable wt;
    wt.x_of = ctx.classes.witness;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (int u = 0; u < g->order(); ++u) {
            const Subgroup& cent = ctx.centralizers[ctx.classes.class_of[u]];
            int c = cent.members[rng() % cent.members.size()];
            wt.x_of[u] = g->op(c, wt.x_of[u]);
        }
    }
    return wt;
}

}  // namespace

CycMatrix s_matrix(const ZContext& ctx, std::uint64_t seed) {
    const GroupPtr& g = ctx.group;
    int ns = (int)ctx.simples.size();
    int k = (int)ctx.classes.classes.size();
    WitnessTable wt = make_witnesses(ctx, seed);
    CycMatrix s(ns, std::vector<Cyclotomic>(ns));
    // first simple index per class
    std::vector<int> base(k, -1);
    for (int i = 0; i < ns; ++i)
        if (base[ctx.simples[i].class_index] < 0) base[ctx.simples[i].class_index] = i;
    // one block of basis entries per ordered class pair; blocks are disjoint,
    // so the kernel runs without synchronization
    parallel_for(k * k, [&](int block) {
        int ci = block / k, cj = block % k;
        const CharacterTable& ti = ctx.cent_tables[ci];
        const CharacterTable& tj = ctx.cent_tables[cj];
        const SubgroupView& vi = ctx.cent_views[ci];
        const SubgroupView& vj = ctx.cent_views[cj];
        int ri = (int)ti.rows.size(), rj = (int)tj.rows.size();
        for (int u : ctx.classes.classes[ci].members) {
            for (int v : ctx.classes.classes[cj].members) {
                if (g->op(u, v) != g->op(v, u)) continue;
                int x = wt.x_of[u], y = wt.x_of[v];
                int a = g->conj(g->inv(v), x);  // x v^-1 x^-1, in C(rep_i)
                int b = g->conj(g->inv(u), y);  // y u^-1 y^-1, in C(rep_j)
                int pa = vi.from_parent[a], pb = vj.from_parent[b];
                if (pa < 0 || pb < 0) throw std::logic_error("conjugate fell outside centralizer");
                int ca = ti.classes.class_of[pa], cb = tj.classes.class_of[pb];
                for (int p = 0; p < ri; ++p)
                    for (int q = 0; q < rj; ++q)
                        s[base[ci] + p][base[cj] + q] += ti.rows[p][ca] * tj.rows[q][cb];
            }
        }
    });
    Rational inv_order(1, g->order());
    for (auto& row : s)
        for (auto& e : row) e = e * inv_order;
    return s;
}

CycMatrix s_matrix_reference(const ZContext& ctx) {
    const GroupPtr& g = ctx.group;
    int ns = (int)ctx.simples.size();
    CycMatrix s(ns, std::vector<Cyclotomic>(ns));
    for (int i = 0; i < ns; ++i) {
        const SimpleObject& si = ctx.simples[i];
        const CharacterTable& ti = ctx.cent_tables[si.class_index];
        const SubgroupView& vi = ctx.cent_views[si.class_index];
        for (int j = 0; j < ns; ++j) {
            const SimpleObject& sj = ctx.simples[j];
            const CharacterTable& tj = ctx.cent_tables[sj.class_index];
            const SubgroupView& vj = ctx.cent_views[sj.class_index];
            Cyclotomic acc(0);
            for (int u : ctx.classes.classes[si.class_index].members) {
                for (int v : ctx.classes.classes[sj.class_index].members) {
                    if (g->op(u, v) != g->op(v, u)) continue;
                    int x = ctx.classes.witness[u], y = ctx.classes.witness[v];
                    int pa = vi.from_parent[g->conj(g->inv(v), x)];
                    int pb = vj.from_parent[g->conj(g->inv(u), y)];
                    acc += ti.value(si.char_index, pa) * tj.value(sj.char_index, pb);
                }
            }
            s[i][j] = acc / Rational(g->order());
        }
    }
    return s;
}

CycMatrix t_matrix(const ZContext& ctx) {
    int ns = (int)ctx.simples.size();
    CycMatrix t(ns, std::vector<Cyclotomic>(ns));
    for (int i = 0; i < ns; ++i) {
        const SimpleObject& s = ctx.simples[i];
        const SubgroupView& view = ctx.cent_views[s.class_index];
        const CharacterTable& tab = ctx.cent_tables[s.class_index];
        int pos = view.from_parent[s.class_rep];
        t[i][i] = tab.value(s.char_index, pos) / Rational(s.degree);
    }
    return t;
}

PairFunction dual_character(const ZContext& ctx, const PairFunction& chi) {
    const GroupPtr& g = ctx.group;
    PairFunction out{g, std::vector<Cyclotomic>(ctx.pairs.size())};
    for (size_t idx = 0; idx < ctx.pairs.size(); ++idx) {
        auto [f, h] = ctx.pairs[idx];
        out.values[idx] = chi.values[ctx.pair_at(g->inv(f), g->inv(h))];
    }
    return out;
}

PairFunction sl2_act(const ZContext& ctx, SL2Gen gen, const PairFunction& chi) {
    const GroupPtr& g = ctx.group;
    PairFunction out{g, std::vector<Cyclotomic>(ctx.pairs.size())};
    for (size_t idx = 0; idx < ctx.pairs.size(); ++idx) {
        auto [f, h] = ctx.pairs[idx];
        if (gen == SL2Gen::S)
            out.values[idx] = chi.values[ctx.pair_at(h, g->inv(f))];
        else
            out.values[idx] = chi.values[ctx.pair_at(f, g->op(f, h))];
    }
    return out;
}

Cyclotomic pair_inner_product(const ZContext& ctx, const PairFunction& a, const PairFunction& b) {
    if (a.group != ctx.group || b.group != ctx.group)
        throw std::invalid_argument("pair functions over different groups");
    Cyclotomic acc(0);
    for (size_t i = 0; i < ctx.pairs.size(); ++i) {
        if (a.values[i].is_zero() || b.values[i].is_zero()) continue;
        acc += a.values[i] * b.values[i].conj();
    }
    return acc / Rational(ctx.group->order());
}

std::vector<long long> decompose(const ZContext& ctx, const PairFunction& chi) {
    int ns = (int)ctx.simples.size();
    std::vector<long long> mult(ns, 0);
    std::vector<Cyclotomic> coeff(ns);
    parallel_for(ns, [&](int i) { coeff[i] = pair_inner_product(ctx, chi, ctx.simple_chars[i]); });
    for (int i = 0; i < ns; ++i) {
        if (!coeff[i].is_rational())
            throw std::domain_error("multiplicity of " + ctx.simples[i].label + " is irrational");
        Rational r = coeff[i].rational_value();
        if (!r.is_integer() || r.num() < 0)
            throw std::domain_error("multiplicity of " + ctx.simples[i].label +
                                    " is not a nonnegative integer: " + r.str());
        mult[i] = r.num();
    }
    // exact reconstruction
    for (size_t idx = 0; idx < ctx.pairs.size(); ++idx) {
        Cyclotomic acc(0);
        for (int i = 0; i < ns; ++i)
            if (mult[i] != 0) acc += ctx.simple_chars[i].values[idx] * Rational(mult[i]);
        if (acc != chi.values[idx])
            throw std::domain_error("decomposition does not reconstruct the character");
    }
    return mult;
}

long long global_dimension(const ZContext& ctx) {
    long long total = 0;
    for (const auto& s : ctx.simples) total += s.dim * s.dim;
    return total;
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b) {
    int n = (int)a.size();
    CycMatrix c(n, std::vector<Cyclotomic>(n));
    parallel_for(n, [&](int i) {
        for (int l = 0; l < n; ++l) {
            if (a[i][l].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[l][j].is_zero()) continue;
                c[i][j] += a[i][l] * b[l][j];
            }
        }
    });
    return c;
}

bool mat_equal(const CycMatrix& a, const CycMatrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    return true;
}

ModularityReport verify_modularity(const ZContext& ctx) {
    return verify_modularity(ctx, s_matrix(ctx), t_matrix(ctx));
}

ModularityReport verify_modularity(const ZContext& ctx, const CycMatrix& s, const CycMatrix& t) {
    ModularityReport rep;
    int n = (int)s.size();
    rep.s_symmetric = true;
    for (int i = 0; i < n && rep.s_symmetric; ++i)
        for (int j = i + 1; j < n; ++j)
            if (s[i][j] != s[j][i]) { rep.s_symmetric = false; break; }
    CycMatrix s2 = mat_mul(s, s);
    CycMatrix s4 = mat_mul(s2, s2);
    CycMatrix id(n, std::vector<Cyclotomic>(n));
    for (int i = 0; i < n; ++i) id[i][i] = Cyclotomic(1);
    rep.s_fourth_power_identity = mat_equal(s4, id);
    CycMatrix ts = s;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ts[i][j] = t[i][i] * s[i][j];
    CycMatrix ts3 = mat_mul(mat_mul(ts, ts), ts);
    // (TS)^3 = lambda * S^2 for a single scalar lambda
    rep.ts_cubed_relation = true;
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
        for (int j = 0; j < n && !found; ++j)
            if (!s2[i][j].is_zero()) {
                rep.lambda = ts3[i][j] / s2[i][j];
                found = true;
            }
    if (!found) {
        rep.ts_cubed_relation = false;
    } else {
        for (int i = 0; i < n && rep.ts_cubed_relation; ++i)
            for (int j = 0; j < n; ++j)
                if (ts3[i][j] != s2[i][j] * rep.lambda) { rep.ts_cubed_relation = false; break; }
    }
    rep.dims_positive = true;
    for (int j = 0; j < n; ++j) {
        Cyclotomic scaled = s[0][j] * Rational(ctx.group->order());
        if (!scaled.is_rational() || !(scaled.rational_value() == Rational(ctx.simples[j].dim))) {
            rep.dims_positive = false;
            break;
        }
    }
    return rep;
}

}  // namespace doublet
