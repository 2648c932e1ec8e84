#include "treetorsor/catalog.hpp"
#include "treetorsor/divisor.hpp"
#include "treetorsor/text_format.hpp"
#include "treetorsor/torsor.hpp"
#include "treetorsor/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::json;
using namespace treetorsor;

namespace {

struct Options {
    bool as_json = false;
    std::string file;
    std::string catalog_name;
};

RibbonGraph input_graph(const Options& opt) {
    if (!opt.file.empty() && !opt.catalog_name.empty())
        fail(ErrorKind::SyntaxError, "give either --file or --catalog, not both");
    if (!opt.file.empty()) return load_graph_file(opt.file);
    if (!opt.catalog_name.empty()) return catalog_graph(opt.catalog_name);
    fail(ErrorKind::SyntaxError, "an input graph is required: --file FILE or --catalog NAME");
}

std::vector<std::string> edge_names(const RibbonGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<std::string> out;
    for (EdgeId e : edges) out.push_back(g.edge_name(e));
    return out;
}

std::vector<std::string> vertex_names(const RibbonGraph& g, const std::vector<VertexId>& vs) {
    std::vector<std::string> out;
    for (VertexId v : vs) out.push_back(g.vertex_name(v));
    return out;
}

json tree_json(const RibbonGraph& g, const SpanningTree& t) { return edge_names(g, tree_edges(g, t)); }

std::string tree_text(const RibbonGraph& g, const SpanningTree& t) {
    std::string out = "{";
    bool first = true;
    for (EdgeId e : tree_edges(g, t)) {
        if (!first) out += ",";
        out += g.edge_name(e);
        first = false;
    }
    return out + "}";
}

json divisor_json(const RibbonGraph& g, const Divisor& d) {
    json out = json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[g.vertex_name(v)] = d[v];
    return out;
}

json permutation_json(const TreePermutation& p) {
    return json{{"cycles", p.to_string()}, {"cycle_type", p.cycle_type()}};
}

json pair_json(const RibbonGraph& g, const WitnessPair& w) {
    json out{{"cycle", {{"vertices", vertex_names(g, w.cycle.vertices)},
                        {"edges", edge_names(g, w.cycle.edges)}}},
             {"path", {{"vertices", vertex_names(g, w.path.vertices)},
                       {"edges", edge_names(g, w.path.edges)}}},
             {"proper", w.proper},
             {"tight", w.tight},
             {"z", g.vertex_name(w.z)}};
    if (w.x) out["x"] = g.vertex_name(*w.x);
    return out;
}

std::string pair_text(const RibbonGraph& g, const WitnessPair& w) {
    std::string out = "cycle:";
    for (size_t i = 0; i < w.cycle.edges.size(); ++i) {
        out += " " + g.vertex_name(w.cycle.vertices[i]) + " -" + g.edge_name(w.cycle.edges[i]) + "-";
    }
    out += "> " + g.vertex_name(w.cycle.vertices[0]) + "\npath: ";
    out += g.vertex_name(w.path.vertices[0]);
    for (size_t i = 0; i < w.path.edges.size(); ++i)
        out += " -" + g.edge_name(w.path.edges[i]) + "- " + g.vertex_name(w.path.vertices[i + 1]);
    out += w.proper ? "\nkind: proper" : (w.tight ? "\nkind: tight" : "\nkind: improper");
    return out;
}

json comparison_json(const RibbonGraph& g, const BaseComparison& bc) {
    json out{{"vertex", g.vertex_name(bc.base)}, {"agree", bc.agree}};
    if (bc.witness) {
        out["witness"] = {{"generator", g.vertex_name(bc.witness->generator)},
                          {"tree", bc.witness->tree_index + 1},
                          {"rotor_image", bc.witness->rotor_image + 1},
                          {"bernardi_image", bc.witness->bernardi_image + 1}};
    }
    json diffs = json::array();
    for (const auto& [v, perm] : bc.differences) {
        json d = permutation_json(perm);
        d["generator"] = g.vertex_name(v);
        diffs.push_back(std::move(d));
    }
    out["differences"] = std::move(diffs);
    return out;
}

void print_comparison(const RibbonGraph& g, const BaseComparison& bc) {
    std::cout << "base " << g.vertex_name(bc.base) << ": " << (bc.agree ? "agree" : "disagree") << "\n";
    if (bc.witness) {
        std::cout << "  witness: generator " << g.vertex_name(bc.witness->generator) << ", tree "
                  << bc.witness->tree_index + 1 << " -> rotor " << bc.witness->rotor_image + 1
                  << ", bernardi " << bc.witness->bernardi_image + 1 << "\n";
    }
    for (const auto& [v, perm] : bc.differences)
        std::cout << "  difference[" << g.vertex_name(v) << "]: " << perm.to_string() << "\n";
}

std::string join_types(const std::vector<int>& type) {
    std::string out;
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(type[i]);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"divisor classes, break divisors, and the two spanning-tree torsors of ribbon graphs"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "machine-readable output");
    app.add_option("--file", opt.file, "graph file in the line-oriented vertex/edge format");
    app.add_option("--catalog", opt.catalog_name, "named catalog graph");

    auto* cmd_genus = app.add_subcommand("genus", "surface genus from face tracing");

    auto* cmd_trees = app.add_subcommand("trees", "spanning trees in canonical order");
    bool trees_count = false;
    cmd_trees->add_flag("--count", trees_count, "print only the number of trees");

    auto* cmd_picard = app.add_subcommand("picard", "invariant factors of the Picard group");

    auto* cmd_action = app.add_subcommand("action", "permutation of a generator divisor class");
    std::string act_kind, act_base, act_gen, act_edge;
    int act_tree = 0;
    bool act_trace = false;
    cmd_action->add_option("--kind", act_kind, "bernardi or rotor")->required();
    cmd_action->add_option("--base", act_base, "base vertex q")->required();
    cmd_action->add_option("--generator", act_gen, "vertex v of the class (v)-(q)")->required();
    cmd_action->add_option("--edge", act_edge, "tour edge at q (bernardi only)");
    cmd_action->add_option("--tree", act_tree, "1-based tree index to report the image of");
    cmd_action->add_flag("--trace", act_trace, "emit the rotor step sequence (rotor only)");

    auto* cmd_compare = app.add_subcommand("compare", "rotor vs bernardi torsor at one or all bases");
    std::string cmp_base;
    bool cmp_all = false;
    cmd_compare->add_option("--base", cmp_base, "base vertex");
    cmd_compare->add_flag("--all-bases", cmp_all, "scan every base vertex");

    auto* cmd_witness = app.add_subcommand("witness", "nonseparating cycles and witness pairs");
    bool wit_proper = false, wit_tight = false, wit_construct = false;
    cmd_witness->add_flag("--proper", wit_proper, "search for a proper witness pair");
    cmd_witness->add_flag("--tight", wit_tight, "search for a tight witness pair");
    cmd_witness->add_flag("--construct", wit_construct,
                          "build a tree exhibiting a base where the torsors disagree");

    auto* cmd_catalog = app.add_subcommand("catalog", "list or print catalog graphs");
    std::string cat_name;
    bool cat_calibrate = false;
    cmd_catalog->add_option("name", cat_name, "catalog entry to print");
    cmd_catalog->add_flag("--calibrate", cat_calibrate, "audit the calibration of a bowtie entry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cmd_catalog->parsed()) {
        if (cat_calibrate) {
            const std::string name = cat_name.empty() ? opt.catalog_name : cat_name;
            CalibrationReport rep = calibrate_catalog(name);
            if (opt.as_json) {
                json cands = json::array();
                for (const auto& c : rep.candidates)
                    cands.push_back({{"rotation", c.hub_rotation}, {"genus", c.genus},
                                     {"satisfies", c.satisfies}});
                std::cout << json{{"graph", rep.graph},
                                  {"hub", rep.hub_vertex},
                                  {"selected", rep.selected},
                                  {"candidates", cands}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "calibration of " << rep.graph << " (rotations at " << rep.hub_vertex << ")\n";
                for (size_t i = 0; i < rep.candidates.size(); ++i) {
                    const auto& c = rep.candidates[i];
                    std::cout << "  [" << i << "]";
                    for (const auto& e : c.hub_rotation) std::cout << " " << e;
                    std::cout << " | genus " << c.genus << " | "
                              << (c.satisfies ? "satisfies" : "rejected")
                              << (static_cast<int>(i) == rep.selected ? "  <- selected" : "") << "\n";
                }
            }
            return 0;
        }
        if (cat_name.empty()) {
            if (opt.as_json) {
                std::cout << json(catalog_names()).dump(2) << "\n";
            } else {
                for (const auto& n : catalog_names()) std::cout << n << "\n";
            }
            return 0;
        }
        CatalogEntry entry = catalog(cat_name);
        if (opt.as_json) {
            std::cout << json{{"name", entry.name},
                              {"planar", entry.planar},
                              {"genus", entry.graph.surface_genus()},
                              {"note", entry.note},
                              {"text", entry.serialized}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "# " << entry.name << ": " << entry.note << "\n";
            std::cout << "# planar: " << (entry.planar ? "yes" : "no") << "\n";
            std::cout << entry.serialized;
        }
        return 0;
    }

    RibbonGraph g = input_graph(opt);

    if (cmd_genus->parsed()) {
        const int f = static_cast<int>(g.faces().size());
        if (opt.as_json) {
            std::cout << json{{"vertices", g.vertex_count()},
                              {"edges", g.edge_count()},
                              {"faces", f},
                              {"genus", g.surface_genus()},
                              {"cycle_rank", g.first_betti()}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
                      << "\nfaces: " << f << "\ngenus: " << g.surface_genus()
                      << "\ncycle-rank: " << g.first_betti() << "\n";
        }
        return 0;
    }

    if (cmd_trees->parsed()) {
        TreeList trees = enumerate_trees(g);
        if (trees_count) {
            if (opt.as_json)
                std::cout << json{{"count", trees.size()}}.dump(2) << "\n";
            else
                std::cout << trees.size() << "\n";
            return 0;
        }
        if (opt.as_json) {
            json list = json::array();
            for (int i = 0; i < trees.size(); ++i) list.push_back(tree_json(g, trees[i]));
            std::cout << json{{"count", trees.size()}, {"trees", list}}.dump(2) << "\n";
        } else {
            for (int i = 0; i < trees.size(); ++i)
                std::cout << i + 1 << ": " << tree_text(g, trees[i]) << "\n";
        }
        return 0;
    }

    if (cmd_picard->parsed()) {
        PicardStructure pic = picard_structure(g);
        if (opt.as_json) {
            std::cout << json{{"order", pic.order}, {"invariant_factors", pic.invariant_factors}}.dump(2)
                      << "\n";
        } else {
            std::cout << "order: " << pic.order << "\ninvariant-factors:";
            for (long long f : pic.invariant_factors) std::cout << " " << f;
            std::cout << "\n";
        }
        return 0;
    }

    if (cmd_action->parsed()) {
        if (act_kind != "bernardi" && act_kind != "rotor")
            fail(ErrorKind::SyntaxError, "--kind must be bernardi or rotor");
        const ActionKind kind = act_kind == "bernardi" ? ActionKind::Bernardi : ActionKind::Rotor;
        const VertexId q = g.vertex(act_base);
        const VertexId v = g.vertex(act_gen);
        TreeList trees = enumerate_trees(g);
        Divisor d = zero_divisor(g);
        d[v] += 1;
        d[q] -= 1;

        TreePermutation perm;
        std::optional<BernardiTable> table;
        if (kind == ActionKind::Bernardi) {
            const EdgeId e = act_edge.empty() ? default_tour_edge(g, q) : g.edge(act_edge);
            table.emplace(g, trees, q, e);
            perm = bernardi_permutation(g, trees, *table, d);
        } else {
            if (!act_edge.empty()) fail(ErrorKind::SyntaxError, "--edge only applies to the bernardi kind");
            perm = action_permutation(g, trees, kind, q, d);
        }

        json out{{"kind", act_kind},
                 {"base", act_base},
                 {"generator", act_gen},
                 {"permutation", perm.to_string()},
                 {"cycle_type", perm.cycle_type()}};
        if (!opt.as_json) {
            std::cout << "permutation: " << perm.to_string() << "\ncycle-type: ("
                      << join_types(perm.cycle_type()) << ")\n";
        }
        if (table) {
            json breaks = json::array();
            for (int i = 0; i < trees.size(); ++i) {
                if (!opt.as_json)
                    std::cout << "tree " << i + 1 << " " << tree_text(g, trees[i]) << ": break "
                              << format_divisor(g, table->break_divisor(i)) << "\n";
                breaks.push_back({{"tree", i + 1}, {"break", divisor_json(g, table->break_divisor(i))}});
            }
            out["break_divisors"] = std::move(breaks);
        }
        if (act_tree > 0) {
            if (act_tree > trees.size()) fail(ErrorKind::SyntaxError, "tree index out of range");
            out["image"] = perm.apply(act_tree - 1) + 1;
            if (!opt.as_json)
                std::cout << "tree " << act_tree << " -> " << perm.apply(act_tree - 1) + 1 << "\n";
        }
        if (act_trace) {
            if (kind != ActionKind::Rotor) fail(ErrorKind::SyntaxError, "--trace only applies to rotor");
            const int start = act_tree > 0 ? act_tree - 1 : 0;
            RotorConfiguration c = tree_to_rotor(g, trees[start], q);
            RoutingResult r = route_to_sink(g, std::move(c), v, q, /*want_trace=*/true);
            json steps = json::array();
            for (const auto& s : r.trace) {
                steps.push_back({{"chip", g.vertex_name(s.from)},
                                 {"edge", g.edge_name(s.edge)},
                                 {"to", g.vertex_name(s.to)}});
                if (!opt.as_json)
                    std::cout << "chip " << g.vertex_name(s.from) << " -[" << g.edge_name(s.edge) << "]-> "
                              << g.vertex_name(s.to) << "\n";
            }
            out["trace"] = std::move(steps);
            out["final_tree"] = tree_json(g, r.tree);
            if (!opt.as_json)
                std::cout << "final tree: " << tree_text(g, r.tree) << "\n";
        }
        if (opt.as_json) std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (cmd_compare->parsed()) {
        TreeList trees = enumerate_trees(g);
        if (!cmp_base.empty()) {
            BaseComparison bc = compare_torsors(g, trees, g.vertex(cmp_base));
            if (opt.as_json)
                std::cout << comparison_json(g, bc).dump(2) << "\n";
            else
                print_comparison(g, bc);
            return 0;
        }
        AgreementReport rep = scan_bases(g, trees);
        if (opt.as_json) {
            json bases = json::array();
            for (const auto& bc : rep.bases) bases.push_back(comparison_json(g, bc));
            std::cout << json{{"genus", rep.surface_genus},
                              {"bernardi_base_independent", rep.bernardi_base_independent},
                              {"rotor_base_independent", rep.rotor_base_independent},
                              {"bases", bases}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "genus: " << rep.surface_genus << "\n"
                      << "bernardi base-independent: " << (rep.bernardi_base_independent ? "yes" : "no")
                      << "\n"
                      << "rotor base-independent: " << (rep.rotor_base_independent ? "yes" : "no") << "\n";
            for (const auto& bc : rep.bases) print_comparison(g, bc);
        }
        return 0;
    }

    if (cmd_witness->parsed()) {
        if (wit_construct) {
            TreeList trees = enumerate_trees(g);
            auto ev = construct_disagreement(g, trees);
            if (!ev) {
                if (opt.as_json) std::cout << json{{"found", false}}.dump(2) << "\n";
                else std::cout << "no constructive disagreement (planar, or a multigraph without "
                                  "proper pairs)\n";
                return 1;
            }
            if (opt.as_json) {
                std::cout << json{{"found", true},
                                  {"route", ev->route},
                                  {"base", g.vertex_name(ev->q)},
                                  {"z", g.vertex_name(ev->z)},
                                  {"tree", tree_json(g, ev->tree)},
                                  {"rotor_image", tree_json(g, ev->rotor_image)},
                                  {"tour_edge", g.edge_name(ev->tour_edge)},
                                  {"translated_break", divisor_json(g, ev->translated)},
                                  {"image_break", divisor_json(g, ev->image_break)},
                                  {"pair", pair_json(g, ev->pair)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "route: " << ev->route << "\nbase q: " << g.vertex_name(ev->q)
                          << "\nshared vertex z: " << g.vertex_name(ev->z)
                          << "\ntree T: " << tree_text(g, ev->tree)
                          << "\nrotor image of (z)-(q): " << tree_text(g, ev->rotor_image)
                          << "\ntour edge: " << g.edge_name(ev->tour_edge)
                          << "\n(z)-(q) + break(T): " << format_divisor(g, ev->translated)
                          << "\nbreak(rotor image): " << format_divisor(g, ev->image_break)
                          << "\nthe two classes differ, so the torsors disagree at "
                          << g.vertex_name(ev->q) << "\n";
            }
            return 0;
        }
        if (wit_proper || wit_tight) {
            std::optional<WitnessPair> pair =
                wit_proper ? find_proper_witness_pair(g) : find_tight_witness_pair(g);
            if (!pair) {
                if (opt.as_json) std::cout << json{{"found", false}}.dump(2) << "\n";
                else std::cout << "none\n";
                return 1;
            }
            if (opt.as_json)
                std::cout << json{{"found", true}, {"pair", pair_json(g, *pair)}}.dump(2) << "\n";
            else
                std::cout << pair_text(g, *pair) << "\n";
            return 0;
        }
        // default: first nonseparating cycle with its witness
        for (const auto& c : enumerate_cycles(g)) {
            if (auto path = find_witness_path(g, c)) {
                WitnessPair w;
                w.cycle = c;
                w.path = *path;
                w.proper = path->front() != path->back();
                w.z = path->back();
                if (w.proper) w.x = path->front();
                if (opt.as_json)
                    std::cout << json{{"nonseparating", true}, {"pair", pair_json(g, w)}}.dump(2) << "\n";
                else
                    std::cout << "nonseparating cycle found\n" << pair_text(g, w) << "\n";
                return 0;
            }
        }
        if (opt.as_json) std::cout << json{{"nonseparating", false}}.dump(2) << "\n";
        else std::cout << "every cycle separates (planar rotation system)\n";
        return 1;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SyntaxError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
