#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli_internal.hpp"
#include "dicolor/bounds.hpp"
#include "dicolor/coloring.hpp"
#include "dicolor/errors.hpp"
#include "dicolor/formats.hpp"
#include "dicolor/generators.hpp"
#include "dicolor/lll.hpp"

namespace dicolor::cli {

using nlohmann::ordered_json;

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt_fixed4(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

const char* kind_name(BlockKind kind) {
    switch (kind) {
        case BlockKind::DirectedCycle: return "directed-cycle";
        case BlockKind::Digon: return "digon";
        case BlockKind::OddBidirectedCycle: return "odd-bidirected-cycle";
        case BlockKind::BidirectedComplete: return "bidirected-complete";
        case BlockKind::Other: return "other";
    }
    return "other";
}

std::string join_ints(const std::vector<int>& values, char sep) {
    std::string s;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(values[i]);
    }
    return s;
}

std::string arcs_compact(const Digraph& d) {
    std::string s;
    d.for_each_arc([&](int u, int v) {
        if (!s.empty()) s += ';';
        s += std::to_string(u);
        s += '>';
        s += std::to_string(v);
    });
    return s;
}

namespace {

Digraph load_digraph(const std::string& path) {
    if (path == "-") return parse_digraph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return parse_digraph(in);
}

PartialColoring load_coloring(const std::string& path, int n, int palette_override) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return parse_coloring(in, n, palette_override);
}

ListAssignment load_lists(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return parse_lists(in, n);
}

std::vector<int> colors_vector(const PartialColoring& coloring) { return coloring.colors; }

ordered_json digraph_json(const Digraph& d) {
    ordered_json j;
    j["n"] = d.vertex_count();
    j["m"] = d.arc_count();
    auto arcs = ordered_json::array();
    d.for_each_arc([&](int u, int v) { arcs.push_back({u, v}); });
    j["arcs"] = std::move(arcs);
    return j;
}

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << '\n'; }

// ----------------------------------------------------------------- stats --

int cmd_stats(const CommandContext& ctx, const std::string& file) {
    Digraph d = load_digraph(file);
    DegreeProfile profile = degree_profile(d);
    auto digons = find_digons(d);
    EulerianCheck euler = is_eulerian(d);
    bool connected = is_weakly_connected(d);

    int kind_counts[5] = {0, 0, 0, 0, 0};
    auto block_list = blocks(d);
    for (const auto& block : block_list)
        ++kind_counts[static_cast<int>(classify_block(block).kind)];

    BoundReport bounds = bound_report(d);

    ordered_json doc;
    doc["command"] = "stats";
    doc["n"] = d.vertex_count();
    doc["m"] = d.arc_count();
    doc["max_out_degree"] = profile.max_out_degree;
    doc["max_in_degree"] = profile.max_in_degree;
    doc["max_degree_product"] = profile.max_degree_product;
    doc["degree_geo"] = profile.degree_geo_max;
    doc["degree_geo_ceil"] = profile.degree_geo_ceil;
    doc["digons"] = static_cast<int>(digons.size());
    doc["digon_free"] = digons.empty();
    doc["eulerian"] = euler.eulerian;
    doc["connected"] = connected;
    doc["blocks"] = static_cast<int>(block_list.size());
    doc["blocks_directed_cycle"] = kind_counts[0];
    doc["blocks_digon"] = kind_counts[1];
    doc["blocks_odd_bidirected_cycle"] = kind_counts[2];
    doc["blocks_bidirected_complete"] = kind_counts[3];
    doc["blocks_other"] = kind_counts[4];
    doc["degree_bound"] = bounds.degree_bound;
    doc["geo_ceiling_bound"] = bounds.geo_ceiling_bound;
    doc["geo_ceiling_applicable"] = bounds.geo_ceiling_applicable;
    doc["shaved_bound"] = bounds.shaved_bound;
    doc["shaved_applicable"] = bounds.shaved_applicable;
    doc["alpha_bound"] = bounds.alpha_bound;
    doc["alpha_applicable"] = bounds.alpha_applicable;
    doc["delta1"] = bounds.threshold_delta1;
    doc["alpha"] = bounds.alpha;

    if (ctx.json) {
        emit_json(ctx.out, doc);
    } else {
        for (auto& [key, value] : doc.items()) {
            if (key == "command") continue;
            if (value.is_boolean())
                ctx.out << key << '=' << bool_str(value.get<bool>()) << '\n';
            else if (value.is_number_float())
                ctx.out << key << '=' << fmt_double(value.get<double>()) << '\n';
            else
                ctx.out << key << '=' << value.dump() << '\n';
        }
    }
    return 0;
}

// ----------------------------------------------------------------- color --

struct LLLFlagValues {
    std::optional<double> c1, c2, retention;
    std::optional<int> palette, final_palette, max_rounds;
};

int cmd_color(const CommandContext& ctx, const std::string& file, const std::string& algo,
              const std::string& coloring_file, int palette_override,
              const LLLFlagValues& lll_flags) {
    Digraph d = load_digraph(file);
    int n = d.vertex_count();

    ordered_json doc;
    doc["command"] = "color";
    doc["algo"] = algo;
    doc["n"] = n;

    PartialColoring result;
    int exit_code = 0;
    if (algo == "greedy-out") {
        result = greedy_color(d, ascending_order(n), GreedySide::Out);
    } else if (algo == "greedy-in") {
        result = greedy_color(d, ascending_order(n), GreedySide::In);
    } else if (algo == "peel") {
        PeelResult peel = peel_color(d);
        doc["rounds"] = static_cast<int>(peel.round_ceilings.size());
        doc["round_ceilings"] = peel.round_ceilings;
        if (!ctx.json) {
            ctx.err << "rounds=" << peel.round_ceilings.size() << '\n';
            ctx.err << "round_ceilings=" << join_ints(peel.round_ceilings) << '\n';
        }
        result = std::move(peel.coloring);
    } else if (algo == "extend") {
        if (coloring_file.empty())
            throw std::invalid_argument("--algo extend requires --coloring FILE");
        PartialColoring base = load_coloring(coloring_file, n, palette_override);
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
            if (!base.is_colored(v)) order.push_back(v);
        ExtendResult extended = extend_partial(d, base, order);
        doc["success"] = extended.success;
        if (!extended.success) {
            doc["failed_vertex"] = extended.failed_vertex;
            if (ctx.json) {
                emit_json(ctx.out, doc);
            } else {
                ctx.err << "success=false\n";
                ctx.err << "failed_vertex=" << extended.failed_vertex << '\n';
            }
            return 1;
        }
        if (!ctx.json) ctx.err << "success=true\n";
        result = std::move(extended.coloring);
    } else if (algo == "lll") {
        LLLParams params;
        params.seed = ctx.seed;
        if (lll_flags.c1) params.c1 = *lll_flags.c1;
        if (lll_flags.c2) params.c2 = *lll_flags.c2;
        if (lll_flags.retention) params.retention = *lll_flags.retention;
        if (lll_flags.palette) params.palette = *lll_flags.palette;
        if (lll_flags.final_palette) params.final_palette = *lll_flags.final_palette;
        if (lll_flags.max_rounds) params.max_rounds = *lll_flags.max_rounds;
        LLLResult lll = lll_color(d, params);

        doc["degree_geo"] = lll.degree_geo;
        doc["palette_random_phase"] = lll.palette;
        doc["retention"] = lll.retention;
        doc["final_palette"] = lll.final_palette;
        doc["core"] = lll.core_size;
        doc["removed"] = lll.removed_count;
        doc["outcome"] = lll.outcome == LLLOutcome::Completed ? "completed" : "fallback";
        switch (lll.reason) {
            case FallbackReason::None: break;
            case FallbackReason::RoundCap: doc["reason"] = "round-cap"; break;
            case FallbackReason::ExtensionFailed: doc["reason"] = "extension-failed"; break;
            case FallbackReason::ReinsertionFailed: doc["reason"] = "reinsertion-failed"; break;
        }
        auto rounds = ordered_json::array();
        for (const auto& round : lll.rounds)
            rounds.push_back({{"round", round.round},
                              {"failed", round.failed},
                              {"min_x", round.min_x},
                              {"mean_x", round.mean_x}});
        doc["rounds"] = std::move(rounds);
        if (!ctx.json) {
            for (const auto& round : lll.rounds)
                ctx.err << "round " << round.round << " failed=" << round.failed
                        << " minX=" << round.min_x << " meanX=" << fmt_fixed4(round.mean_x)
                        << '\n';
            ctx.err << "degree_geo=" << fmt_double(lll.degree_geo) << '\n';
            ctx.err << "palette_random_phase=" << lll.palette << '\n';
            ctx.err << "retention=" << fmt_double(lll.retention) << '\n';
            ctx.err << "final_palette=" << lll.final_palette << '\n';
            ctx.err << "core=" << lll.core_size << '\n';
            ctx.err << "removed=" << lll.removed_count << '\n';
            ctx.err << "outcome=" << doc["outcome"].get<std::string>() << '\n';
            if (doc.contains("reason"))
                ctx.err << "reason=" << doc["reason"].get<std::string>() << '\n';
        }
        result = std::move(lll.coloring);
    } else {
        throw std::invalid_argument("unknown --algo: " + algo +
                                    " (expected greedy-out, greedy-in, peel, lll, extend)");
    }

    ColoringCheck check = validate_coloring(d, result);
    doc["palette"] = result.palette_size;
    doc["valid"] = check.valid;
    doc["colors"] = colors_vector(result);
    if (ctx.json) {
        emit_json(ctx.out, doc);
    } else {
        ctx.err << "palette=" << result.palette_size << '\n';
        ctx.err << "valid=" << bool_str(check.valid) << '\n';
        write_coloring(ctx.out, result);
    }
    return check.valid ? exit_code : 1;
}

// ------------------------------------------------------------------- chi --

int cmd_chi(const CommandContext& ctx, const std::string& file, int k) {
    Digraph d = load_digraph(file);
    ordered_json doc;
    doc["command"] = "chi";

    if (k >= 0) {
        SolveResult solve = is_k_colorable(d, k, ctx.limits);
        doc["k"] = k;
        doc["nodes"] = solve.nodes;
        if (solve.status == SolveStatus::ResourceLimit) {
            doc["status"] = "resource-limit";
            if (ctx.json)
                emit_json(ctx.out, doc);
            else
                ctx.out << "status=resource-limit\nnodes=" << solve.nodes << '\n';
            return 3;
        }
        bool colorable = solve.status == SolveStatus::Found;
        doc["status"] = "done";
        doc["colorable"] = colorable;
        if (colorable) doc["colors"] = colors_vector(solve.coloring);
        if (ctx.json) {
            emit_json(ctx.out, doc);
        } else {
            ctx.out << "k=" << k << '\n';
            ctx.out << "colorable=" << bool_str(colorable) << '\n';
            ctx.out << "nodes=" << solve.nodes << '\n';
            if (colorable) ctx.out << "coloring=" << join_ints(solve.coloring.colors) << '\n';
        }
        return colorable ? 0 : 1;
    }

    ChiResult chi = chromatic_number(d, ctx.limits);
    doc["nodes"] = chi.nodes;
    if (chi.status == SolveStatus::ResourceLimit) {
        doc["status"] = "resource-limit";
        if (ctx.json)
            emit_json(ctx.out, doc);
        else
            ctx.out << "status=resource-limit\nnodes=" << chi.nodes << '\n';
        return 3;
    }
    doc["status"] = "found";
    doc["chi"] = chi.chi;
    doc["colors"] = colors_vector(chi.coloring);
    if (ctx.json) {
        emit_json(ctx.out, doc);
    } else {
        ctx.out << "chi=" << chi.chi << '\n';
        ctx.out << "nodes=" << chi.nodes << '\n';
        ctx.out << "coloring=" << join_ints(chi.coloring.colors) << '\n';
    }
    return 0;
}

// -------------------------------------------------------------- list-chi --

int cmd_list_chi(const CommandContext& ctx, const std::string& file,
                 const std::string& lists_file) {
    Digraph d = load_digraph(file);
    if (lists_file.empty()) throw std::invalid_argument("list-chi requires --lists FILE");
    ListAssignment lists = load_lists(lists_file, d.vertex_count());
    SolveResult solve = list_colorable(d, lists, ctx.limits);

    ordered_json doc;
    doc["command"] = "list-chi";
    doc["universe"] = lists.universe;
    doc["nodes"] = solve.nodes;
    if (solve.status == SolveStatus::ResourceLimit) {
        doc["status"] = "resource-limit";
        if (ctx.json)
            emit_json(ctx.out, doc);
        else
            ctx.out << "status=resource-limit\nnodes=" << solve.nodes << '\n';
        return 3;
    }
    bool found = solve.status == SolveStatus::Found;
    doc["status"] = "done";
    doc["found"] = found;
    if (found) doc["colors"] = colors_vector(solve.coloring);
    if (ctx.json) {
        emit_json(ctx.out, doc);
    } else {
        ctx.out << "found=" << bool_str(found) << '\n';
        ctx.out << "nodes=" << solve.nodes << '\n';
        if (found) ctx.out << "coloring=" << join_ints(solve.coloring.colors) << '\n';
    }
    return found ? 0 : 1;
}

// ----------------------------------------------------------------- check --

int cmd_check(const CommandContext& ctx, const std::string& file,
              const std::string& coloring_file, int palette_override) {
    Digraph d = load_digraph(file);
    if (coloring_file.empty()) throw std::invalid_argument("check requires --coloring FILE");
    PartialColoring coloring = load_coloring(coloring_file, d.vertex_count(), palette_override);
    ColoringCheck check = validate_coloring(d, coloring);

    ordered_json doc;
    doc["command"] = "check";
    doc["palette"] = coloring.palette_size;
    doc["colored"] = coloring.colored_count();
    doc["valid"] = check.valid;
    if (!check.valid) {
        doc["bad_color"] = check.bad_color;
        doc["cycle"] = check.cycle;
    }
    if (ctx.json) {
        emit_json(ctx.out, doc);
    } else {
        ctx.out << "palette=" << coloring.palette_size << '\n';
        ctx.out << "colored=" << coloring.colored_count() << '\n';
        ctx.out << "valid=" << bool_str(check.valid) << '\n';
        if (!check.valid) {
            ctx.out << "bad_color=" << check.bad_color << '\n';
            ctx.out << "cycle=" << join_ints(check.cycle) << '\n';
        }
    }
    return check.valid ? 0 : 1;
}

// ---------------------------------------------------------------- blocks --

int cmd_blocks(const CommandContext& ctx, const std::string& file) {
    Digraph d = load_digraph(file);
    auto block_list = blocks(d);

    ordered_json doc;
    doc["command"] = "blocks";
    doc["blocks"] = static_cast<int>(block_list.size());
    auto items = ordered_json::array();
    if (!ctx.json) ctx.out << "blocks=" << block_list.size() << '\n';
    for (size_t i = 0; i < block_list.size(); ++i) {
        BlockClass cls = classify_block(block_list[i]);
        if (ctx.json) {
            items.push_back({{"block", i},
                             {"size", cls.size},
                             {"kind", kind_name(cls.kind)},
                             {"vertices", block_list[i].vertices}});
        } else {
            ctx.out << "block=" << i << " size=" << cls.size << " kind=" << kind_name(cls.kind)
                    << " vertices=" << join_ints(block_list[i].vertices) << '\n';
        }
    }
    if (ctx.json) {
        doc["list"] = std::move(items);
        emit_json(ctx.out, doc);
    }
    return 0;
}

// ----------------------------------------------------------- obstruction --

int cmd_obstruction(const CommandContext& ctx, const std::string& file, int k,
                    const std::string& lists_file) {
    Digraph d = load_digraph(file);
    ordered_json doc;
    doc["command"] = "obstruction";

    if (!lists_file.empty()) {
        ListAssignment lists = load_lists(lists_file, d.vertex_count());
        GallaiCandidate candidate = gallai_candidate(d, lists);
        doc["mode"] = "list-obstruction";
        doc["hypothesis_ok"] = candidate.hypothesis_ok;
        doc["eulerian"] = candidate.eulerian;
        doc["lists_tight"] = candidate.lists_tight;
        doc["blocks_ok"] = candidate.blocks_ok;
        doc["candidate"] = candidate.candidate;
        if (ctx.json) {
            emit_json(ctx.out, doc);
        } else {
            ctx.out << "hypothesis_ok=" << bool_str(candidate.hypothesis_ok) << '\n';
            ctx.out << "eulerian=" << bool_str(candidate.eulerian) << '\n';
            ctx.out << "lists_tight=" << bool_str(candidate.lists_tight) << '\n';
            ctx.out << "blocks_ok=" << bool_str(candidate.blocks_ok) << '\n';
            ctx.out << "candidate=" << bool_str(candidate.candidate) << '\n';
        }
        return candidate.candidate ? 0 : 1;
    }

    if (k < 2) throw std::invalid_argument("obstruction requires --k K (K >= 2) or --lists FILE");
    ObstructionCheck check = brooks_obstruction(d, k, ctx.limits);
    doc["mode"] = "critical-obstruction";
    doc["k"] = k;
    doc["regular"] = check.regular_ok;
    doc["shape"] = check.shape_ok;
    doc["matches"] = check.matches;
    doc["critical"] = check.critical;
    if (check.matches) doc["kind"] = kind_name(check.kind);
    if (ctx.json) {
        emit_json(ctx.out, doc);
    } else {
        ctx.out << "k=" << k << '\n';
        ctx.out << "regular=" << bool_str(check.regular_ok) << '\n';
        ctx.out << "shape=" << bool_str(check.shape_ok) << '\n';
        ctx.out << "matches=" << bool_str(check.matches) << '\n';
        ctx.out << "critical=" << bool_str(check.critical) << '\n';
        if (check.matches) ctx.out << "kind=" << kind_name(check.kind) << '\n';
    }
    return check.matches ? 0 : 1;
}

// ------------------------------------------------------------------- gen --

int parse_int_arg(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int value = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("gen: expected an integer for ") + what +
                                    ", got '" + s + "'");
    }
}

int cmd_gen(const CommandContext& ctx, const std::string& kind,
            const std::vector<std::string>& args) {
    auto need = [&](size_t count) {
        if (args.size() != count)
            throw std::invalid_argument("gen " + kind + ": expected " + std::to_string(count) +
                                        " argument(s), got " + std::to_string(args.size()));
    };
    Digraph d;
    if (kind == "cycle") {
        need(1);
        d = gen_directed_cycle(parse_int_arg(args[0], "n"));
    } else if (kind == "bidirected-cycle") {
        need(1);
        d = gen_bidirected_cycle(parse_int_arg(args[0], "n"));
    } else if (kind == "complete") {
        need(1);
        d = gen_bidirected_complete(parse_int_arg(args[0], "k"));
    } else if (kind == "chorded-cycle") {
        need(1);
        d = gen_chorded_cycle(parse_int_arg(args[0], "n"));
    } else if (kind == "shared-triangles") {
        need(0);
        d = gen_shared_triangles();
    } else if (kind == "fano") {
        if (args.size() > 1) need(1);
        int orientation = args.empty() ? 0 : parse_int_arg(args[0], "orientation");
        if (orientation < 0) throw std::invalid_argument("gen fano: orientation must be >= 0");
        d = gen_fano(static_cast<unsigned>(orientation));
    } else if (kind == "tournament") {
        need(1);
        d = gen_random_tournament(parse_int_arg(args[0], "n"), ctx.seed);
    } else if (kind == "regular") {
        need(2);
        d = gen_random_regular_digonfree(parse_int_arg(args[0], "n"),
                                         parse_int_arg(args[1], "delta"), ctx.seed);
    } else if (kind == "rotational") {
        need(2);
        int n = parse_int_arg(args[0], "n");
        std::vector<int> residues;
        std::stringstream ss(args[1]);
        std::string token;
        while (std::getline(ss, token, ','))
            residues.push_back(parse_int_arg(token, "residue"));
        d = gen_rotational_tournament(n, residues);
    } else {
        throw std::invalid_argument(
            "unknown gen kind: " + kind +
            " (expected cycle, bidirected-cycle, complete, chorded-cycle, shared-triangles, "
            "fano, tournament, regular, rotational)");
    }

    if (ctx.json) {
        ordered_json wrapped;
        wrapped["command"] = "gen";
        wrapped["kind"] = kind;
        wrapped.update(digraph_json(d));
        emit_json(ctx.out, wrapped);
    } else {
        write_digraph(ctx.out, d);
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Acyclic-coloring toolkit for directed graphs"};
    app.name("dicolor");
    app.fallthrough(true);
    app.require_subcommand(1);

    bool json = false;
    bool timings = false;
    uint64_t seed = 1;
    int samples = 1000;
    uint64_t limit_nodes = 0;  // 0: unlimited
    double limit_seconds = 0.0;
    app.add_flag("--json", json, "emit one JSON document on stdout instead of text");
    app.add_flag("--timings", timings, "include runtimes in reports (off keeps output seed-stable)");
    app.add_option("--seed", seed, "PRNG seed (default 1)");
    app.add_option("--samples", samples, "number of random samples (default 1000)")
        ->check(CLI::PositiveNumber);
    app.add_option("--limits-nodes", limit_nodes, "search-node budget for exact solves (0: unlimited)");
    app.add_option("--limits-seconds", limit_seconds, "wall-clock budget for exact solves (0: unlimited)");

    std::string file = "-";
    std::string algo = "greedy-out";
    std::string coloring_file, lists_file;
    int k = -1;
    LLLFlagValues lll_flags;
    double flag_c1 = 0, flag_c2 = 0, flag_retention = 0;
    int flag_palette = 0, flag_final = 0, flag_rounds = 0;
    std::string gen_kind;
    std::vector<std::string> gen_args;
    int delta0_target = 4;
    std::string delta0_mode = "sample";

    auto* stats = app.add_subcommand("stats", "degree, digon, block and bound summary");
    stats->add_option("file", file, "digraph file, or - for stdin");

    auto* color = app.add_subcommand("color", "color a digraph; coloring on stdout, report on stderr");
    color->add_option("file", file, "digraph file, or - for stdin");
    color->add_option("--algo", algo, "greedy-out | greedy-in | peel | lll | extend");
    color->add_option("--coloring", coloring_file, "partial coloring to extend (--algo extend)");
    color->add_option("--k", k, "palette override for the partial coloring file");
    auto* c1_opt = color->add_option("--c1", flag_c1, "lower degree-window factor (--algo lll)");
    auto* c2_opt = color->add_option("--c2", flag_c2, "upper degree-window factor (--algo lll)");
    auto* pal_opt = color->add_option("--palette", flag_palette, "random-phase palette (--algo lll)");
    auto* ret_opt = color->add_option("--retention", flag_retention, "retention threshold (--algo lll)");
    auto* fin_opt = color->add_option("--final-palette", flag_final, "final palette (--algo lll)");
    auto* rnd_opt = color->add_option("--max-rounds", flag_rounds, "resampling round cap (--algo lll)");

    auto* chi = app.add_subcommand("chi", "exact minimum number of acyclic classes");
    chi->add_option("file", file, "digraph file, or - for stdin");
    chi->add_option("--k", k, "only decide k-colorability instead of computing the minimum");

    auto* list_chi = app.add_subcommand("list-chi", "exact coloring from per-vertex lists");
    list_chi->add_option("file", file, "digraph file, or - for stdin");
    list_chi->add_option("--lists", lists_file, "list-assignment file")->required();

    auto* check = app.add_subcommand("check", "validate a coloring file against a digraph");
    check->add_option("file", file, "digraph file, or - for stdin");
    check->add_option("--coloring", coloring_file, "coloring file")->required();
    check->add_option("--k", k, "palette override for the coloring file");

    auto* blocks_cmd = app.add_subcommand("blocks", "blocks of the underlying multigraph, classified");
    blocks_cmd->add_option("file", file, "digraph file, or - for stdin");

    auto* obstruction = app.add_subcommand(
        "obstruction", "critical-obstruction shape test (--k) or list-obstruction test (--lists)");
    obstruction->add_option("file", file, "digraph file, or - for stdin");
    obstruction->add_option("--k", k, "test against the k-chromatic obstruction shape");
    obstruction->add_option("--lists", lists_file, "list assignment for the candidate test");

    auto* gen = app.add_subcommand("gen", "generate a digraph on stdout");
    gen->add_option("kind", gen_kind,
                    "cycle N | bidirected-cycle N | complete K | chorded-cycle N | "
                    "shared-triangles | fano [ORIENTATION] | tournament N | regular N DELTA | "
                    "rotational N R1,R2,...")
        ->required();
    gen->add_option("args", gen_args, "kind-specific arguments");

    auto* verify = app.add_subcommand("verify-claims", "replay the desk-scale claim suite");
    (void)verify;

    auto* order7 = app.add_subcommand(
        "search-order7", "enumerate the 3-regular tournaments on 7 vertices and their exact colorings");
    (void)order7;

    auto* delta0 = app.add_subcommand(
        "search-delta0", "hunt digon-free digraphs whose exact coloring number meets its ceiling bound");
    delta0->add_option("--target", delta0_target, "ceiling value to probe (default 4)");
    delta0->add_option("--mode", delta0_mode, "sample | exhaustive (exhaustive: target 4 only)");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("dicolor");
        for (const auto& arg : args) argv.push_back(arg.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    CommandContext ctx{out, err, json, seed, samples, SolveLimits{}, timings};
    if (limit_nodes > 0) ctx.limits.max_nodes = limit_nodes;
    if (limit_seconds > 0) ctx.limits.max_seconds = limit_seconds;

    if (c1_opt->count()) lll_flags.c1 = flag_c1;
    if (c2_opt->count()) lll_flags.c2 = flag_c2;
    if (ret_opt->count()) lll_flags.retention = flag_retention;
    if (pal_opt->count()) lll_flags.palette = flag_palette;
    if (fin_opt->count()) lll_flags.final_palette = flag_final;
    if (rnd_opt->count()) lll_flags.max_rounds = flag_rounds;

    try {
        if (stats->parsed()) return cmd_stats(ctx, file);
        if (color->parsed()) return cmd_color(ctx, file, algo, coloring_file, k, lll_flags);
        if (chi->parsed()) return cmd_chi(ctx, file, k);
        if (list_chi->parsed()) return cmd_list_chi(ctx, file, lists_file);
        if (check->parsed()) return cmd_check(ctx, file, coloring_file, k);
        if (blocks_cmd->parsed()) return cmd_blocks(ctx, file);
        if (obstruction->parsed()) return cmd_obstruction(ctx, file, k, lists_file);
        if (gen->parsed()) return cmd_gen(ctx, gen_kind, gen_args);
        if (verify->parsed()) return run_verify_claims(ctx);
        if (order7->parsed()) return run_search_order7(ctx);
        if (delta0->parsed()) return run_search_delta0(ctx, delta0_target, delta0_mode);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << '\n';
        return 2;
    } catch (const GuardError& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace dicolor::cli
