#include "doublet/algebras.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doublet/zmodsolve.hpp"

namespace doublet {

bool is_trivialising(const AlgebraDatum& a) { return a.f.members == a.h.members; }

AlgebraDatum trivialising_datum(const TrivialisingAlgebra& t) {
    const GroupPtr& g = t.h.parent;
    int n = t.h.order();
    int N = t.gamma.modulus;
    AlgebraDatum a{t.h, t.h, t.gamma, EpsilonMap{t.h, t.h, N, std::vector<int>(n * n, 0)}};
    // conjugation coefficient of k[H, gamma]: eps_h(f) = gamma(h,f) - gamma(hfh^-1, h)
    for (int hp = 0; hp < n; ++hp)
        for (int fp = 0; fp < n; ++fp) {
            int h = t.h.members[hp], f = t.h.members[fp];
            int conj = t.gamma.position(g->conj(f, h));
            int v = t.gamma.at(hp, fp) - t.gamma.at(conj, hp);
            a.eps.at(hp, fp) = ((v % N) + N) % N;
        }
    return a;
}

TrivialisingAlgebra as_trivialising(const AlgebraDatum& a) {
    if (!is_trivialising(a)) throw std::invalid_argument("algebra is not trivialising");
    return TrivialisingAlgebra{a.h, a.gamma};
}

namespace {

struct PairContext {
    const Subgroup& h;
    const Subgroup& f;
    SubgroupView h_view;
    SubgroupView f_view;
    std::vector<int> f_pos_in_h;  // F position -> H position

    PairContext(const Subgroup& h_, const Subgroup& f_)
        : h(h_), f(f_), h_view(subgroup_group(h_)), f_view(subgroup_group(f_)) {
        f_pos_in_h.resize(f.order());
        for (int i = 0; i < f.order(); ++i) {
            int hp = h_view.from_parent[f.members[i]];
            if (hp < 0) throw std::invalid_argument("F is not contained in H");
            f_pos_in_h[i] = hp;
        }
    }

    int var(int hpos, int fpos) const { return hpos * f.order() + fpos; }
};

}  // namespace

std::vector<EpsilonMap> solve_epsilon(const Subgroup& h, const Subgroup& f,
                                      const Cocycle2& gamma, std::size_t cap) {
    if (!is_normal_in(f, h)) throw std::invalid_argument("F must be normal in H");
    const GroupPtr& g = h.parent;
    PairContext pc(h, f);
    int nh = h.order(), nf = f.order();
    const int M = gamma.modulus * pc.f_view.group->exponent();
    const int scale = M / gamma.modulus;
    auto gam = [&](int fpos, int gpos) { return gamma.at(fpos, gpos) * scale % M; };
    auto f_conj_pos = [&](int fpos, int by_parent) {
        return gamma.position(g->conj(f.members[fpos], by_parent));
    };
    ZModAffineSolver solver(nh * nf, M);
    // action axiom: eps_{gh}(f) = eps_g(h f h^-1) + eps_h(f)
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) {
            int ab = pc.h_view.group->op(a, b);
            int bp = h.members[b];
            for (int fp = 0; fp < nf; ++fp) {
                int fc = f_conj_pos(fp, bp);
                solver.add_constraint(
                    {{pc.var(ab, fp), 1}, {pc.var(a, fc), -1}, {pc.var(b, fp), -1}}, 0);
            }
        }
    // multiplicativity: gamma(f,g) + eps_h(fg) = eps_h(f) + eps_h(g) + gamma(hfh^-1, hgh^-1)
    for (int a = 0; a < nh; ++a) {
        int ap = h.members[a];
        for (int fp = 0; fp < nf; ++fp)
            for (int gp = 0; gp < nf; ++gp) {
                int fg = pc.f_view.group->op(fp, gp);
                int rhs = gam(f_conj_pos(fp, ap), f_conj_pos(gp, ap)) - gam(fp, gp);
                solver.add_constraint(
                    {{pc.var(a, fg), 1}, {pc.var(a, fp), -1}, {pc.var(a, gp), -1}}, rhs);
            }
    }
    // commutativity: gamma(f,g) = eps_f(g) + gamma(f g f^-1, f)
    for (int fp = 0; fp < nf; ++fp) {
        int fh = pc.f_pos_in_h[fp];
        int fparent = f.members[fp];
        for (int gp = 0; gp < nf; ++gp) {
            int rhs = gam(fp, gp) - gam(f_conj_pos(gp, fparent), fp);
            solver.add_constraint({{pc.var(fh, gp), 1}}, rhs);
        }
    }
    std::vector<EpsilonMap> out;
    if (!solver.feasible()) return out;
    for (auto& sol : solver.enumerate(cap))
        out.push_back(EpsilonMap{h, f, M, std::move(sol)});
    return out;
}

void check_epsilon(const AlgebraDatum& a) {
    const GroupPtr& g = a.h.parent;
    PairContext pc(a.h, a.f);
    int nh = a.h.order(), nf = a.f.order();
    const int M = a.eps.modulus;
    if (M % a.gamma.modulus != 0) throw std::logic_error("eps/gamma moduli incompatible");
    const int scale = M / a.gamma.modulus;
    auto gam = [&](int fpos, int gpos) { return a.gamma.at(fpos, gpos) * scale % M; };
    auto fcp = [&](int fpos, int by) { return a.gamma.position(g->conj(a.f.members[fpos], by)); };
    for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y) {
            int xy = pc.h_view.group->op(x, y);
            for (int fp = 0; fp < nf; ++fp) {
                int fc = fcp(fp, a.h.members[y]);
                if ((a.eps.at(xy, fp) - a.eps.at(x, fc) - a.eps.at(y, fp)) % M != 0)
                    throw std::logic_error("eps action identity fails");
            }
        }
    for (int x = 0; x < nh; ++x) {
        int xp = a.h.members[x];
        for (int fp = 0; fp < nf; ++fp)
            for (int gp = 0; gp < nf; ++gp) {
                int fg = pc.f_view.group->op(fp, gp);
                long long lhs = gam(fp, gp) + a.eps.at(x, fg);
                long long rhs = a.eps.at(x, fp) + a.eps.at(x, gp) + gam(fcp(fp, xp), fcp(gp, xp));
                if ((lhs - rhs) % M != 0) throw std::logic_error("eps multiplicativity fails");
            }
    }
    for (int fp = 0; fp < nf; ++fp) {
        int fh = pc.f_pos_in_h[fp];
        int fparent = a.f.members[fp];
        for (int gp = 0; gp < nf; ++gp) {
            long long lhs = gam(fp, gp);
            long long rhs = a.eps.at(fh, gp) + gam(fcp(gp, fparent), fp);
            if ((lhs - rhs) % M != 0) throw std::logic_error("eps commutativity fails");
        }
    }
}

bool twist_check(const AlgebraDatum& a) {
    PairContext pc(a.h, a.f);
    for (int fp = 0; fp < a.f.order(); ++fp)
        if (a.eps.at(pc.f_pos_in_h[fp], fp) % a.eps.modulus != 0) return false;
    return true;
}

namespace {

AlgebraDatum conjugate_datum(const AlgebraDatum& a, int x) {
    const GroupPtr& g = a.h.parent;
    AlgebraDatum out;
    out.h = Subgroup{g, conjugated_members(g, a.h.members, x)};
    out.f = Subgroup{g, conjugated_members(g, a.f.members, x)};
    out.gamma = Cocycle2{out.f, a.gamma.modulus,
                         std::vector<int>(a.f.order() * a.f.order(), 0)};
    int xi = g->inv(x);
    for (int i = 0; i < out.f.order(); ++i)
        for (int j = 0; j < out.f.order(); ++j)
            out.gamma.at(i, j) = a.gamma.at(a.gamma.position(g->conj(out.f.members[i], xi)),
                                            a.gamma.position(g->conj(out.f.members[j], xi)));
    out.eps = EpsilonMap{out.h, out.f, a.eps.modulus,
                         std::vector<int>(a.h.order() * a.f.order(), 0)};
    SubgroupView hv = subgroup_group(a.h), fv = subgroup_group(a.f);
    for (int i = 0; i < out.h.order(); ++i)
        for (int j = 0; j < out.f.order(); ++j) {
            int hp = hv.from_parent[g->conj(out.h.members[i], xi)];
            int fp = fv.from_parent[g->conj(out.f.members[j], xi)];
            out.eps.at(i, j) = a.eps.at(hp, fp);
        }
    return out;
}

// c-witness equations for k[F,gamma,eps] ~ k[F,gamma',eps'] with everything
// rescaled into Z/M; unknowns are c at nonidentity positions of F.
bool cochain_witness_exists(const Subgroup& f, const SubgroupView& f_view,
                            const SubgroupView& h_view, const Subgroup& h,
                            const std::vector<int>& gamma_a, const std::vector<int>& gamma_b,
                            const std::vector<int>& eps_a, const std::vector<int>& eps_b, int M) {
    const GroupPtr& g = f.parent;
    int nf = f.order(), nh = h.order();
    ZModAffineSolver solver(nf - 1 > 0 ? nf - 1 : 1, M);
    auto cvar = [&](int fpos) { return fpos - 1; };
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            int ij = f_view.group->op(i, j);
            std::vector<std::pair<int, int>> terms;
            if (ij != 0) terms.emplace_back(cvar(ij), 1);
            if (i != 0) terms.emplace_back(cvar(i), -1);
            if (j != 0) terms.emplace_back(cvar(j), -1);
            std::sort(terms.begin(), terms.end());
            std::vector<std::pair<int, int>> merged;
            for (auto [v, c] : terms) {
                if (!merged.empty() && merged.back().first == v)
                    merged.back().second += c;
                else
                    merged.emplace_back(v, c);
            }
            int rhs = ((gamma_b[i * nf + j] - gamma_a[i * nf + j]) % M + M) % M;
            if (!solver.add_constraint(merged, rhs)) return false;
        }
    for (int x = 0; x < nh; ++x) {
        int xp = h.members[x];
        for (int j = 0; j < nf; ++j) {
            int cj = f_view.from_parent[g->conj(f.members[j], xp)];
            std::vector<std::pair<int, int>> terms;
            if (cj != 0) terms.emplace_back(cvar(cj), 1);
            if (j != 0) terms.emplace_back(cvar(j), -1);
            if (terms.size() == 2 && terms[0].first == terms[1].first) terms.clear();
            int rhs = ((eps_b[x * nf + j] - eps_a[x * nf + j]) % M + M) % M;
            if (!solver.add_constraint(terms, rhs)) return false;
        }
    }
    return solver.feasible();
}

}  // namespace

bool algebras_isomorphic(const AlgebraDatum& a, const AlgebraDatum& b) {
    if (a.h.parent != b.h.parent) return false;
    if (a.h.order() != b.h.order() || a.f.order() != b.f.order()) return false;
    const GroupPtr& g = a.h.parent;
    int L = std::lcm(std::lcm(a.gamma.modulus, b.gamma.modulus),
                     std::lcm(a.eps.modulus, b.eps.modulus));
    SubgroupView fb_view = subgroup_group(b.f);
    SubgroupView hb_view = subgroup_group(b.h);
    const int M = L * fb_view.group->exponent();
    auto rescale = [&](const std::vector<int>& t, int mod) {
        std::vector<int> out(t.size());
        int s = M / mod;
        for (size_t i = 0; i < t.size(); ++i) out[i] = t[i] % mod * s % M;
        return out;
    };
    std::vector<int> gb = rescale(b.gamma.table, b.gamma.modulus);
    std::vector<int> eb = rescale(b.eps.table, b.eps.modulus);
    for (int x = 0; x < g->order(); ++x) {
        if (conjugated_members(g, a.h.members, x) != b.h.members) continue;
        if (conjugated_members(g, a.f.members, x) != b.f.members) continue;
        AlgebraDatum ax = conjugate_datum(a, x);
        std::vector<int> ga = rescale(ax.gamma.table, ax.gamma.modulus);
        std::vector<int> ea = rescale(ax.eps.table, ax.eps.modulus);
        if (cochain_witness_exists(b.f, fb_view, hb_view, b.h, ga, gb, ea, eb, M)) return true;
    }
    return false;
}

std::vector<std::vector<int>> character_shifts(const SubgroupView& f_view, int modulus) {
    int nf = f_view.group->order();
    if (nf == 1) return {std::vector<int>{0}};
    ZModAffineSolver solver(nf - 1, modulus);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            int ij = f_view.group->op(i, j);
            std::vector<std::pair<int, int>> terms;
            if (ij != 0) terms.emplace_back(ij - 1, 1);
            if (i != 0) terms.emplace_back(i - 1, -1);
            if (j != 0) terms.emplace_back(j - 1, -1);
            std::sort(terms.begin(), terms.end());
            std::vector<std::pair<int, int>> merged;
            for (auto [v, c] : terms) {
                if (!merged.empty() && merged.back().first == v)
                    merged.back().second += c;
                else
                    merged.emplace_back(v, c);
            }
            if (!merged.empty()) solver.add_constraint(merged, 0);
        }
    std::vector<std::vector<int>> out;
    for (auto& sol : solver.enumerate(100000)) {
        std::vector<int> c(nf, 0);
        for (int i = 1; i < nf; ++i) c[i] = sol[i - 1];
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<AlgebraDatum> classify_algebras(const GroupPtr& g) {
    std::vector<AlgebraDatum> out;
    for (const Subgroup& h : subgroup_classes(g)) {
        Subgroup nh = normalizer(g, h);
        SubgroupView h_view = subgroup_group(h);
        // normal subgroups F of H, up to the N_G(H)-action
        std::vector<Subgroup> f_reps;
        {
            std::set<std::vector<int>> seen;
            for (const Subgroup& fs : subgroup_classes(h_view.group)) {
                std::vector<int> parent_members;
                for (int pos : fs.members) parent_members.push_back(h_view.to_parent[pos]);
                std::sort(parent_members.begin(), parent_members.end());
                Subgroup f{g, parent_members};
                if (!is_normal_in(f, h)) continue;
                std::vector<int> canon = parent_members;
                for (int x : nh.members) {
                    std::vector<int> c = conjugated_members(g, parent_members, x);
                    if (c < canon) canon = c;
                }
                if (seen.insert(canon).second) f_reps.push_back(Subgroup{g, canon});
            }
        }
        std::sort(f_reps.begin(), f_reps.end());
        for (const Subgroup& f : f_reps) {
            std::vector<int> stab;
            for (int x : nh.members)
                if (conjugated_members(g, f.members, x) == f.members) stab.push_back(x);
            CohomologyGroup coh = second_cohomology(f, h.order());
            auto orbits = symmetry_orbits(stab, coh);
            SubgroupView f_view = subgroup_group(f);
            for (const auto& orbit : orbits) {
                const Cocycle2& gamma = coh.representatives[orbit.front()];
                std::vector<EpsilonMap> sols = solve_epsilon(h, f, gamma);
                if (sols.empty()) continue;
                const int M = sols.front().modulus;
                // orbit the eps solutions under cochain shifts and the
                // stabilizer of the cohomology class
                std::set<std::vector<int>> pool;
                for (const auto& e : sols) pool.insert(e.table);
                std::vector<std::vector<int>> shifts = character_shifts(f_view, M);
                struct Mover {
                    std::vector<int> h_perm;  // H position permutation by conj
                    std::vector<int> f_perm;
                    std::vector<int> witness;  // cochain b over F positions, mod M
                };
                std::vector<Mover> movers;
                for (int x : stab) {
                    if (x == 0) continue;
                    Cocycle2 moved = gamma.conjugated(x);
                    if (class_of(moved, coh) != orbit.front()) continue;
                    // b with db = moved - gamma (exponents mod M)
                    Cocycle2 diff{f, M, std::vector<int>(f.order() * f.order(), 0)};
                    int s = M / gamma.modulus;
                    for (size_t i = 0; i < diff.table.size(); ++i)
                        diff.table[i] =
                            ((moved.table[i] - gamma.table[i]) % gamma.modulus + gamma.modulus) %
                            gamma.modulus * s % M;
                    auto b = is_coboundary(diff);
                    if (!b) throw std::logic_error("class stabilizer without cochain witness");
                    Mover mv;
                    mv.witness = *b;
                    int xi = g->inv(x);
                    mv.h_perm.resize(h.order());
                    for (int i = 0; i < h.order(); ++i)
                        mv.h_perm[i] = h_view.from_parent[g->conj(h.members[i], xi)];
                    mv.f_perm.resize(f.order());
                    for (int i = 0; i < f.order(); ++i)
                        mv.f_perm[i] = f_view.from_parent[g->conj(f.members[i], xi)];
                    movers.push_back(std::move(mv));
                }
                std::vector<int> f_in_h(f.order());
                for (int i = 0; i < f.order(); ++i)
                    f_in_h[i] = h_view.from_parent[f.members[i]];
                std::vector<std::vector<int>> conj_in_f(f.order(), std::vector<int>(h.order()));
                for (int j = 0; j < f.order(); ++j)
                    for (int i = 0; i < h.order(); ++i)
                        conj_in_f[j][i] =
                            f_view.from_parent[g->conj(f.members[j], h.members[i])];
                std::set<std::vector<int>> visited;
                int nf = f.order();
                for (const auto& seed : pool) {
                    if (visited.count(seed)) continue;
                    // BFS over the orbit of seed
                    std::vector<std::vector<int>> frontier{seed};
                    std::vector<int> least = seed;
                    visited.insert(seed);
                    while (!frontier.empty()) {
                        std::vector<int> cur = std::move(frontier.back());
                        frontier.pop_back();
                        std::vector<std::vector<int>> nexts;
                        for (const auto& c : shifts) {
                            std::vector<int> nx(cur.size());
                            for (int i = 0; i < h.order(); ++i)
                                for (int j = 0; j < nf; ++j) {
                                    int cj = conj_in_f[j][i];
                                    nx[i * nf + j] =
                                        ((cur[i * nf + j] + c[cj] - c[j]) % M + M) % M;
                                }
                            nexts.push_back(std::move(nx));
                        }
                        for (const auto& mv : movers) {
                            std::vector<int> nx(cur.size());
                            for (int i = 0; i < h.order(); ++i)
                                for (int j = 0; j < nf; ++j) {
                                    int moved = cur[mv.h_perm[i] * nf + mv.f_perm[j]];
                                    int cj = conj_in_f[j][i];
                                    nx[i * nf + j] =
                                        ((moved + mv.witness[cj] - mv.witness[j]) % M + M) % M;
                                }
                            nexts.push_back(std::move(nx));
                        }
                        for (auto& nx : nexts) {
                            if (!pool.count(nx))
                                throw std::logic_error("eps orbit left the solution set");
                            if (visited.insert(nx).second) {
                                if (nx < least) least = nx;
                                frontier.push_back(std::move(nx));
                            }
                        }
                    }
                    AlgebraDatum a{h, f, gamma, EpsilonMap{h, f, M, least}};
                    check_epsilon(a);
                    out.push_back(std::move(a));
                }
            }
        }
    }
    return out;
}

PairFunction algebra_character(const ZContext& ctx, const TrivialisingAlgebra& t) {
    const GroupPtr& g = ctx.group;
    const int N = t.gamma.modulus;
    SubgroupView view = subgroup_group(t.h);
    PairFunction out{g, std::vector<Cyclotomic>(ctx.pairs.size())};
    for (size_t idx = 0; idx < ctx.pairs.size(); ++idx) {
        auto [f, h] = ctx.pairs[idx];
        Cyclotomic acc(0);
        for (int x = 0; x < g->order(); ++x) {
            int a = view.from_parent[g->conj(f, x)];
            if (a < 0) continue;
            int b = view.from_parent[g->conj(h, x)];
            if (b < 0) continue;
            acc += Cyclotomic::root_of_unity(N, t.gamma.at(a, b) - t.gamma.at(b, a));
        }
        out.values[idx] = acc / Rational(t.h.order());
    }
    return out;
}

PairFunction transfer_character(const ZContext& ctx, const SubgroupView& h_view,
                                const PairFunction& chi_on_h) {
    const GroupPtr& g = ctx.group;
    if (chi_on_h.group != h_view.group)
        throw std::invalid_argument("character is not defined on the given subgroup");
    auto h_pairs = commuting_pairs(h_view.group);
    int hn = h_view.group->order();
    std::vector<int> h_idx(hn * hn, -1);
    for (size_t i = 0; i < h_pairs.size(); ++i)
        h_idx[h_pairs[i].first * hn + h_pairs[i].second] = (int)i;
    PairFunction out{g, std::vector<Cyclotomic>(ctx.pairs.size())};
    for (size_t idx = 0; idx < ctx.pairs.size(); ++idx) {
        auto [f, h] = ctx.pairs[idx];
        Cyclotomic acc(0);
        for (int x = 0; x < g->order(); ++x) {
            int a = h_view.from_parent[g->conj(f, x)];
            if (a < 0) continue;
            int b = h_view.from_parent[g->conj(h, x)];
            if (b < 0) continue;
            acc += chi_on_h.values[h_idx[a * hn + b]];
        }
        out.values[idx] = acc / Rational(hn);
    }
    return out;
}

InvariantMatrix modular_invariant(const ZContext& gctx, const ZContext& qctx,
                                  const ZContext& prodctx, const Subgroup& u,
                                  const Cocycle2& gamma) {
    const GroupPtr& prod = prodctx.group;
    if (u.parent != prod) throw std::invalid_argument("subgroup does not live in the product");
    PairFunction chi = algebra_character(prodctx, TrivialisingAlgebra{u, gamma});
    int ng = (int)gctx.simples.size(), nq = (int)qctx.simples.size();
    InvariantMatrix inv;
    inv.raw.assign(ng, std::vector<long long>(nq, 0));
    inv.m.assign(ng, std::vector<long long>(nq, 0));
    std::vector<Cyclotomic> recon(prodctx.pairs.size());
    for (int i = 0; i < ng; ++i) {
        for (int j = 0; j < nq; ++j) {
            Cyclotomic acc(0);
            for (size_t idx = 0; idx < prodctx.pairs.size(); ++idx) {
                if (chi.values[idx].is_zero()) continue;
                auto [fp, hp] = prodctx.pairs[idx];
                int f1 = prod->pair_left(fp), f2 = prod->pair_right(fp);
                int h1 = prod->pair_left(hp), h2 = prod->pair_right(hp);
                const Cyclotomic& a = gctx.value(gctx.simple_chars[i], f1, h1);
                if (a.is_zero()) continue;
                const Cyclotomic& b = qctx.value(qctx.simple_chars[j], f2, h2);
                if (b.is_zero()) continue;
                acc += chi.values[idx] * (a * b).conj();
            }
            acc = acc / Rational(prod->order());
            if (!acc.is_rational() || !acc.rational_value().is_integer() ||
                acc.rational_value().num() < 0)
                throw std::logic_error("invariant coefficient is not a nonnegative integer");
            long long c = acc.rational_value().num();
            inv.raw[i][j] = c;
            if (c != 0) {
                for (size_t idx = 0; idx < prodctx.pairs.size(); ++idx) {
                    auto [fp, hp] = prodctx.pairs[idx];
                    recon[idx] += gctx.value(gctx.simple_chars[i], prod->pair_left(fp),
                                             prod->pair_left(hp)) *
                                  qctx.value(qctx.simple_chars[j], prod->pair_right(fp),
                                             prod->pair_right(hp)) *
                                  Rational(c);
                }
            }
        }
    }
    for (size_t idx = 0; idx < prodctx.pairs.size(); ++idx)
        if (recon[idx] != chi.values[idx])
            throw std::logic_error("invariant decomposition does not reconstruct the character");
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nq; ++j) inv.m[i][j] = inv.raw[i][qctx.dual_perm[j]];
    return inv;
}

InvarianceReport verify_invariance(const ZContext& ctx, const PairFunction& chi) {
    InvarianceReport rep;
    rep.s_fixed = sl2_act(ctx, SL2Gen::S, chi).values == chi.values;
    rep.t_fixed = sl2_act(ctx, SL2Gen::T, chi).values == chi.values;
    return rep;
}

}  // namespace doublet
