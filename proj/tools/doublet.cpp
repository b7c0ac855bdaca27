#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "doublet/algebras.hpp"
#include "doublet/dw.hpp"
#include "doublet/output.hpp"
#include "doublet/products.hpp"

namespace dd = doublet;

namespace {

struct Options {
    std::string format = "json";
    bool verify = false;
    std::uint64_t seed = 0;
};

int g_exit_code = 0;

void fail_verification(const std::string& what) {
    std::cerr << "verification failed: " << what << "\n";
    g_exit_code = 1;
}

void print_payload(const std::string& command, const dd::Json& payload, const Options& opt,
                   const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    if (opt.format == "json") {
        std::cout << dd::make_document(command, payload).dump(2) << "\n";
    } else if (opt.format == "md") {
        std::cout << dd::markdown_table(header, rows);
    } else {
        std::cout << dd::csv_table(header, rows);
    }
}

std::string cyc_str(const dd::Cyclotomic& c) {
    std::string d = c.display();
    return d.empty() ? c.str() : d;
}

dd::Json matrix_json(const dd::CycMatrix& m, const std::vector<dd::SimpleObject>& basis) {
    dd::Json j;
    dd::Json labels = dd::Json::array();
    for (const auto& s : basis) labels.push_back(s.label);
    j["basis"] = labels;
    dd::Json rows = dd::Json::array();
    for (const auto& row : m) {
        dd::Json r = dd::Json::array();
        for (const auto& e : row) r.push_back(dd::cyclotomic_json(e));
        rows.push_back(std::move(r));
    }
    j["entries"] = rows;
    return j;
}

void matrix_table(const dd::CycMatrix& m, const std::vector<dd::SimpleObject>& basis,
                  std::vector<std::string>& header, std::vector<std::vector<std::string>>& rows) {
    header.push_back("");
    for (const auto& s : basis) header.push_back(s.label);
    for (size_t i = 0; i < m.size(); ++i) {
        std::vector<std::string> row{basis[i].label};
        for (const auto& e : m[i]) row.push_back(cyc_str(e));
        rows.push_back(std::move(row));
    }
}

void verify_modular_data(const dd::ZContext& ctx) {
    auto rep = dd::verify_modularity(ctx);
    if (!rep.ok()) fail_verification("modular relations (S^4, (TS)^3, symmetry, dims)");
    if (dd::global_dimension(ctx) !=
        (long long)ctx.group->order() * ctx.group->order())
        fail_verification("global dimension != |G|^2");
    int n = (int)ctx.simples.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            dd::Cyclotomic ip =
                dd::pair_inner_product(ctx, ctx.simple_chars[i], ctx.simple_chars[j]);
            if (ip != dd::Cyclotomic(i == j ? 1 : 0)) {
                fail_verification("simple characters are not orthonormal");
                return;
            }
        }
}

void verify_trivialising_sweep(const dd::ZContext& ctx) {
    for (const auto& h : dd::subgroup_classes(ctx.group)) {
        dd::CohomologyGroup coh = dd::second_cohomology(h);
        for (const auto& gamma : dd::classes_up_to_symmetry(h, coh)) {
            dd::PairFunction chi = dd::algebra_character(ctx, dd::TrivialisingAlgebra{h, gamma});
            if (!dd::verify_invariance(ctx, chi).ok())
                fail_verification("trivialising character not modular invariant");
            dd::decompose(ctx, chi);
        }
    }
}

std::string subgroup_desc(const dd::Subgroup& s) { return dd::subgroup_display_name(s); }

dd::Json algebra_json(const dd::AlgebraDatum& a) {
    dd::Json j;
    j["H"] = subgroup_desc(a.h);
    j["F"] = subgroup_desc(a.f);
    j["orderH"] = a.h.order();
    j["orderF"] = a.f.order();
    j["gammaTrivial"] = a.gamma.is_zero();
    j["trivialising"] = dd::is_trivialising(a);
    return j;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"exact modular data, algebras and invariants of Drinfeld doubles"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "md", "csv"}));
    app.add_flag("--verify", opt.verify, "run property checks on the produced objects");
    app.add_option("--seed", opt.seed, "randomize internal witness choices (0 = canonical)");

    std::string g_spec, q_spec, manifold;

    auto add_group_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("group", g_spec, "group descriptor")->required();
        return c;
    };
    auto* simples_cmd = add_group_cmd("simples", "simple objects of Z(G)");
    auto* smatrix_cmd = add_group_cmd("smatrix", "S-matrix of Z(G)");
    auto* tmatrix_cmd = add_group_cmd("tmatrix", "T-matrix of Z(G)");
    auto* chars_cmd = add_group_cmd("characters", "simple characters on commuting pairs");
    auto* algebras_cmd = add_group_cmd("algebras", "commutative separable algebras in Z(G)");
    auto* verify_cmd = add_group_cmd("verify", "run the property suite for Z(G)");
    auto* inv_cmd = add_group_cmd("invariants", "modular invariants of Z(G) x Z(Q)");
    inv_cmd->add_option("second", q_spec, "right-hand group (defaults to the first)");
    auto add_pair_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("group", g_spec, "left group")->required();
        c->add_option("second", q_spec, "right group")->required();
        return c;
    };
    auto* parents_cmd = add_pair_cmd("parents", "parents of maximal algebras in Z(GxQ)");
    auto* equiv_cmd = add_pair_cmd("equivalences", "ribbon equivalences Z(G) ~ Z(Q)");
    auto* graph_cmd = add_pair_cmd("graph", "parent graph of maximal algebras");
    auto* dw_cmd = add_group_cmd("dw", "Dijkgraaf-Witten invariant");
    dw_cmd->add_option("manifold", manifold, "manifold name or presentation <n; words>")
        ->required();

    CLI11_PARSE(app, argc, argv);

    auto G = dd::build_group(g_spec);

    if (simples_cmd->parsed() || smatrix_cmd->parsed() || tmatrix_cmd->parsed() ||
        chars_cmd->parsed() || verify_cmd->parsed()) {
        dd::ZContext ctx = dd::make_z_context(G);
        if (simples_cmd->parsed()) {
            dd::Json payload;
            payload["group"] = g_spec;
            payload["count"] = ctx.simples.size();
            dd::Json list = dd::Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& s : ctx.simples) {
                dd::Json j;
                j["label"] = s.label;
                j["classRep"] = G->label(s.class_rep);
                j["degree"] = s.degree;
                j["dim"] = s.dim;
                j["dual"] = ctx.simples[ctx.dual_perm[&s - ctx.simples.data()]].label;
                list.push_back(std::move(j));
                rows.push_back({s.label, G->label(s.class_rep), std::to_string(s.degree),
                                std::to_string(s.dim)});
            }
            payload["simples"] = list;
            if (opt.verify) verify_modular_data(ctx);
            print_payload("simples", payload, opt, {"label", "class", "degree", "dim"}, rows);
        } else if (smatrix_cmd->parsed() || tmatrix_cmd->parsed()) {
            bool is_s = smatrix_cmd->parsed();
            dd::CycMatrix m = is_s ? dd::s_matrix(ctx, opt.seed) : dd::t_matrix(ctx);
            dd::Json payload;
            payload["group"] = g_spec;
            payload["matrix"] = matrix_json(m, ctx.simples);
            std::vector<std::string> header;
            std::vector<std::vector<std::string>> rows;
            matrix_table(m, ctx.simples, header, rows);
            if (opt.verify) {
                auto repm = dd::verify_modularity(ctx, dd::s_matrix(ctx, opt.seed),
                                                  dd::t_matrix(ctx));
                if (!repm.ok()) fail_verification("modular relations");
            }
            print_payload(is_s ? "smatrix" : "tmatrix", payload, opt, header, rows);
        } else if (chars_cmd->parsed()) {
            dd::Json payload;
            payload["group"] = g_spec;
            dd::Json pairs = dd::Json::array();
            for (auto [f, g2] : ctx.pairs)
                pairs.push_back("(" + G->label(f) + ";" + G->label(g2) + ")");
            payload["pairs"] = pairs;
            dd::Json list = dd::Json::array();
            std::vector<std::string> header{"simple"};
            for (auto [f, g2] : ctx.pairs)
                header.push_back("(" + G->label(f) + ";" + G->label(g2) + ")");
            std::vector<std::vector<std::string>> rows;
            for (size_t i = 0; i < ctx.simples.size(); ++i) {
                dd::Json j;
                j["label"] = ctx.simples[i].label;
                dd::Json vals = dd::Json::array();
                std::vector<std::string> row{ctx.simples[i].label};
                for (const auto& v : ctx.simple_chars[i].values) {
                    vals.push_back(dd::cyclotomic_json(v));
                    row.push_back(cyc_str(v));
                }
                j["values"] = vals;
                list.push_back(std::move(j));
                rows.push_back(std::move(row));
            }
            payload["characters"] = list;
            if (opt.verify) verify_modular_data(ctx);
            print_payload("characters", payload, opt, header, rows);
        } else {
            // verify subcommand
            verify_modular_data(ctx);
            verify_trivialising_sweep(ctx);
            dd::Json payload;
            payload["group"] = g_spec;
            payload["ok"] = g_exit_code == 0;
            print_payload("verify", payload, opt, {"group", "ok"},
                          {{g_spec, g_exit_code == 0 ? "true" : "false"}});
        }
        return g_exit_code;
    }

    if (algebras_cmd->parsed()) {
        dd::ZContext ctx = dd::make_z_context(G);
        auto algebras = dd::classify_algebras(G);
        dd::Json list = dd::Json::array();
        std::vector<std::vector<std::string>> rows;
        for (const auto& a : algebras) {
            dd::Json j = algebra_json(a);
            std::string decomp;
            if (dd::is_trivialising(a)) {
                auto chi = dd::algebra_character(ctx, dd::as_trivialising(a));
                auto mult = dd::decompose(ctx, chi);
                for (size_t i = 0; i < mult.size(); ++i) {
                    if (mult[i] == 0) continue;
                    if (!decomp.empty()) decomp += "+";
                    if (mult[i] > 1) decomp += std::to_string(mult[i]);
                    decomp += "x" + std::to_string(i);
                }
                j["character"] = decomp;
            }
            if (opt.verify) {
                dd::check_epsilon(a);
                if (!dd::twist_check(a)) fail_verification("twist is not trivial");
            }
            rows.push_back({j["H"].get<std::string>(), j["F"].get<std::string>(),
                            a.gamma.is_zero() ? "1" : "y", decomp});
            list.push_back(std::move(j));
        }
        dd::Json payload;
        payload["group"] = g_spec;
        payload["count"] = algebras.size();
        payload["algebras"] = list;
        print_payload("algebras", payload, opt, {"H", "F", "gamma", "character"}, rows);
        return g_exit_code;
    }

    if (inv_cmd->parsed() || parents_cmd->parsed() || equiv_cmd->parsed() ||
        graph_cmd->parsed()) {
        if (q_spec.empty()) q_spec = g_spec;
        auto Q = dd::build_group(q_spec);
        auto P = dd::direct_product(G, Q);
        if (inv_cmd->parsed()) {
            dd::ZContext gctx = dd::make_z_context(G);
            dd::ZContext qctx = g_spec == q_spec ? gctx : dd::make_z_context(Q);
            dd::ZContext pctx = dd::make_z_context(P);
            auto algebras = dd::maximal_algebras(P);
            dd::Json list = dd::Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& alg : algebras) {
                auto inv = dd::modular_invariant(gctx, qctx, pctx, alg.u, alg.gamma);
                std::string pf = dd::partition_function_string(inv.m);
                dd::Json j;
                j["algebra"] = alg.label;
                j["orderU"] = alg.u.order();
                j["partition"] = pf;
                j["matrix"] = inv.m;
                j["productBasisMatrix"] = inv.raw;
                if (opt.verify) {
                    auto chi =
                        dd::algebra_character(pctx, dd::TrivialisingAlgebra{alg.u, alg.gamma});
                    if (!dd::verify_invariance(pctx, chi).ok())
                        fail_verification("algebra character is not modular invariant");
                    if (inv.m[0][0] != 1) fail_verification("unit multiplicity is not 1");
                }
                list.push_back(std::move(j));
                rows.push_back({alg.label, pf});
            }
            dd::Json payload;
            payload["left"] = g_spec;
            payload["right"] = q_spec;
            payload["count"] = algebras.size();
            payload["invariants"] = list;
            print_payload("invariants", payload, opt, {"algebra", "partition function"}, rows);
        } else if (parents_cmd->parsed()) {
            auto algebras = dd::maximal_algebras(P);
            dd::Json list = dd::Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& alg : algebras) {
                dd::Json j;
                j["algebra"] = alg.label;
                j["left"] = algebra_json(alg.left_parent);
                j["right"] = algebra_json(alg.right_parent);
                list.push_back(std::move(j));
                rows.push_back({alg.label,
                                subgroup_desc(alg.left_parent.h) + ">" +
                                    subgroup_desc(alg.left_parent.f),
                                subgroup_desc(alg.right_parent.h) + ">" +
                                    subgroup_desc(alg.right_parent.f)});
            }
            dd::Json payload;
            payload["left"] = g_spec;
            payload["right"] = q_spec;
            payload["parents"] = list;
            print_payload("parents", payload, opt, {"algebra", "left parent", "right parent"},
                          rows);
        } else if (equiv_cmd->parsed()) {
            auto eqs = dd::ribbon_equivalences(P);
            dd::Json list = dd::Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : eqs) {
                dd::Json j;
                j["subgroup"] = dd::product_subgroup_display_name(e.u);
                j["orderU"] = e.u.order();
                j["gammaTrivial"] = e.gamma.is_zero();
                list.push_back(std::move(j));
                rows.push_back({dd::product_subgroup_display_name(e.u),
                                std::to_string(e.u.order()), e.gamma.is_zero() ? "1" : "y"});
            }
            dd::Json payload;
            payload["left"] = g_spec;
            payload["right"] = q_spec;
            payload["count"] = eqs.size();
            payload["equivalences"] = list;
            if (opt.verify && !eqs.empty()) {
                auto rep = dd::cross_validate(G, Q);
                if (!rep.all_equal) fail_verification("DW invariants differ");
            }
            print_payload("equivalences", payload, opt, {"subgroup", "orderU", "gamma"}, rows);
        } else {
            auto graph = dd::build_parent_graph(P);
            dd::Json vertices = dd::Json::array();
            for (const auto& v : graph.left_classes)
                vertices.push_back("(" + subgroup_desc(v.h) + "," + subgroup_desc(v.f) + ")");
            dd::Json edges = dd::Json::array();
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : graph.edges) {
                dd::Json j;
                j["algebra"] = graph.algebras[e.algebra_index].label;
                j["from"] = e.left;
                j["to"] = e.right;
                edges.push_back(std::move(j));
                rows.push_back({graph.algebras[e.algebra_index].label,
                                vertices[e.left].get<std::string>(),
                                vertices[e.right].get<std::string>()});
            }
            dd::Json payload;
            payload["left"] = g_spec;
            payload["right"] = q_spec;
            payload["vertices"] = vertices;
            payload["edges"] = edges;
            payload["components"] = graph.components;
            print_payload("graph", payload, opt, {"algebra", "from", "to"}, rows);
        }
        return g_exit_code;
    }

    if (dw_cmd->parsed()) {
        dd::GroupPresentation pres = manifold[0] == '<' ? dd::parse_presentation(manifold)
                                                        : dd::find_manifold(manifold);
        dd::Rational z = dd::dw_invariant(pres, G);
        if (opt.verify) {
            long long ref = dd::count_homomorphisms_reference(pres, G);
            if (dd::Rational(ref, G->order()) != z)
                fail_verification("pruned and reference homomorphism counts differ");
        }
        dd::Json payload;
        payload["group"] = g_spec;
        payload["manifold"] = pres.name;
        payload["value"] = z.str();
        print_payload("dw", payload, opt, {"group", "manifold", "value"},
                      {{g_spec, pres.name, z.str()}});
        return g_exit_code;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
