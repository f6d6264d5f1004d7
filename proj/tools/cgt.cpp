// Command-line front end for the game engine, the Hex region evaluator and
// the strip solver.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "cgt/algebra.hpp"
#include "cgt/canonical.hpp"
#include "cgt/enumerate.hpp"
#include "cgt/error.hpp"
#include "cgt/game.hpp"
#include "cgt/hex_region.hpp"
#include "cgt/lr_equiv.hpp"
#include "cgt/monotone.hpp"
#include "cgt/poset.hpp"
#include "cgt/strip.hpp"

#ifndef CGT_DATA_DIR
#define CGT_DATA_DIR "data"
#endif

namespace {

using namespace cgt;

enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kPrecondition = 3, kResource = 4, kProperty = 5 };

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::parse: return kParse;
    case ErrorKind::invalid_argument:
    case ErrorKind::precondition:
    case ErrorKind::unsupported_poset:
    case ErrorKind::size_limit:
    case ErrorKind::invalid_region: return kPrecondition;
    case ErrorKind::resource_limit: return kResource;
    case ErrorKind::property_violation: return kProperty;
    case ErrorKind::internal_consistency: return kOther;
    }
    return kOther;
}

struct Globals {
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_mb = 0;
    int jobs = 0;
    std::string format = "human";
};

// Writes either the human text or one key<TAB>value record per call.
class Report {
public:
    explicit Report(bool records) : records_(records) {}
    void line(const std::string& human, const std::string& key, const std::string& value) {
        if (records_) std::cout << key << '\t' << value << '\n';
        else std::cout << human << '\n';
    }
    void human(const std::string& text) {
        if (!records_) std::cout << text << '\n';
    }
    void record(const std::string& key, const std::string& value) {
        if (records_) std::cout << key << '\t' << value << '\n';
    }
    bool records() const { return records_; }

private:
    bool records_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_argument, "cannot open '" + path + "'");
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// A poset file, or one of the built-in names bool, lin<n>, anti<k>, nc<n>.
PosetPtr resolve_poset(const std::string& spec) {
    if (std::filesystem::is_regular_file(spec)) return load_poset(spec);
    std::smatch m;
    static const std::regex builtin(R"((lin|anti|nc)(\d+))", std::regex::icase);
    std::string lower = spec;
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "bool") return bool_poset();
    if (std::regex_match(lower, m, builtin)) {
        const int n = std::stoi(m[2]);
        if (m[1] == "lin") return linear_poset(n);
        if (m[1] == "anti") return antichain_poset(n);
        return non_crossing_poset(n);
    }
    fail(ErrorKind::invalid_argument, "'" + spec + "' is neither a poset file nor a built-in poset");
}

std::string stats(Universe& u, GameId g) {
    return "depth " + std::to_string(u.depth(g)) + ", nodes " + std::to_string(u.dag_size(g));
}

void run_enumerate(const Globals& gl, const std::string& poset_spec, int depth, const std::string& hasse_path,
                   bool classes) {
    Report out(gl.format == "records");
    World w;
    Universe& u = w.universe(resolve_poset(poset_spec));
    EnumerateOptions opt;
    opt.max_depth = depth;
    opt.budget_candidates = gl.budget_nodes;
    opt.budget_mb = gl.budget_mb;
    ValueCatalog cat = enumerate_canonical_passable(u, opt);
    for (std::size_t i = 0; i < cat.games.size(); ++i) {
        const std::string name = "G" + std::to_string(i);
        std::string text = print_game(u, cat.games[i]);
        std::string human = name + " " + std::to_string(cat.depth[i]) + " " + text;
        if (classes)
            human += "  [L" + std::to_string(cat.left_class[i]) + " R" + std::to_string(cat.right_class[i]) + "]";
        out.line(human, "value", name + " " + std::to_string(cat.depth[i]) + " " + text);
    }
    for (std::size_t d = 0; d < cat.per_depth.size(); ++d)
        out.record("count_depth_" + std::to_string(d), std::to_string(cat.per_depth[d]));
    out.record("total", std::to_string(cat.total()));
    out.record("candidates", std::to_string(cat.candidates));
    std::cerr << "total " << cat.total() << " (";
    for (std::size_t d = 0; d < cat.per_depth.size(); ++d) std::cerr << (d ? "/" : "") << cat.per_depth[d];
    std::cerr << " by depth)\n";
    if (!hasse_path.empty()) {
        std::ofstream h(hasse_path);
        if (!h) fail(ErrorKind::invalid_argument, "cannot write '" + hasse_path + "'");
        for (auto [a, b] : hasse(cat)) h << "edge G" << a << " G" << b << '\n';
    }
    if (!cat.complete) fail(ErrorKind::resource_limit, "enumeration stopped early: " + cat.incomplete_reason);
}

void run_canon(const Globals& gl, const std::string& poset_spec, const std::string& expr, bool trace) {
    Report out(gl.format == "records");
    World w;
    Universe& u = w.universe(resolve_poset(poset_spec));
    const GameId g = parse_game(u, expr);
    SimplificationTrace steps;
    const GameId c = canonical_form(u, g, trace ? &steps : nullptr);
    out.line(print_game(u, c), "canonical", print_game(u, c));
    for (const auto& s : steps) out.line(format_step(u, s), "step", format_step(u, s));
}

void run_compare(const Globals& gl, const std::string& poset_spec, const std::string& a, const std::string& b) {
    Report out(gl.format == "records");
    World w;
    Universe& u = w.universe(resolve_poset(poset_spec));
    const GameId g = parse_game(u, a);
    const GameId h = parse_game(u, b);
    const bool le = u.leq(g, h), ge = u.leq(h, g);
    const char* rel = le && ge ? "equivalent" : le ? "less" : ge ? "greater" : "incomparable";
    out.line(rel, "relation", rel);
    const bool t1 = u.tri(g, h), t2 = u.tri(h, g);
    out.line(std::string("G tri H: ") + (t1 ? "yes" : "no"), "tri", t1 ? "1" : "0");
    out.line(std::string("H tri G: ") + (t2 ? "yes" : "no"), "tri_reverse", t2 ? "1" : "0");
}

void run_monotonize(const Globals& gl, const std::string& poset_spec, const std::string& expr) {
    Report out(gl.format == "records");
    World w;
    Universe& u = w.universe(resolve_poset(poset_spec));
    const GameId g = parse_game(u, expr);
    if (!u.is_passable(g)) fail(ErrorKind::precondition, "the game is not passable");
    const GameId m = to_monotone(u, g);
    const GameId s = shrink_monotone(u, m);
    if (!u.is_monotone(m) || !u.equivalent(m, g) || !u.is_monotone(s) || !u.equivalent(s, g))
        fail(ErrorKind::property_violation, "monotone witness check failed");
    out.line("input:   " + stats(u, g), "input_stats", stats(u, g));
    out.line("witness: " + print_game(u, m), "witness", print_game(u, m));
    out.line("         " + stats(u, m), "witness_stats", stats(u, m));
    out.line("shrunk:  " + print_game(u, s), "shrunk", print_game(u, s));
    out.line("         " + stats(u, s), "shrunk_stats", stats(u, s));
}

void run_sum(const Globals& gl, const std::string& pa, const std::string& a, const std::string& pb,
             const std::string& b) {
    Report out(gl.format == "records");
    World w;
    Universe& ua = w.universe(resolve_poset(pa));
    Universe& ub = w.universe(resolve_poset(pb));
    Game s = sum(w, Game{&ua, parse_game(ua, a)}, Game{&ub, parse_game(ub, b)});
    const GameId c = canonical_form(*s.u, s.id);
    out.line("poset " + s.u->poset().name(), "poset", s.u->poset().name());
    out.line(print_game(*s.u, c), "sum", print_game(*s.u, c));
}

void run_opp(const Globals& gl, const std::string& pa, const std::string& a) {
    Report out(gl.format == "records");
    World w;
    Universe& ua = w.universe(resolve_poset(pa));
    Game o = opposite(w, Game{&ua, parse_game(ua, a)});
    const GameId c = canonical_form(*o.u, o.id);
    out.line("poset " + o.u->poset().name(), "poset", o.u->poset().name());
    out.line(print_game(*o.u, c), "opposite", print_game(*o.u, c));
}

void run_map(const Globals& gl, const std::string& map_file, const std::string& target, const std::string& pa,
             const std::string& a, const std::string& pb, const std::string& b) {
    Report out(gl.format == "records");
    World w;
    PosetPtr A = resolve_poset(pa), Bp = resolve_poset(pb), C = resolve_poset(target);
    MonotoneMap f = parse_binary_map(slurp(map_file), A, Bp, C);
    Universe& ua = w.universe(A);
    Universe& ub = w.universe(Bp);
    Game r = sum_map(w, f, Game{&ua, parse_game(ua, a)}, Game{&ub, parse_game(ub, b)});
    const GameId c = canonical_form(*r.u, r.id);
    out.line(print_game(*r.u, c), "mapped", print_game(*r.u, c));
}

void run_lr_classes(const Globals& gl, const std::string& poset_spec, const std::vector<std::string>& exprs,
                    const std::string& side) {
    Report out(gl.format == "records");
    World w;
    Universe& u = w.universe(resolve_poset(poset_spec));
    GameSet games;
    for (const auto& e : exprs) games.push_back(canonical_form(u, parse_game(u, e)));
    auto show = [&](const GameSet& s) {
        std::string t;
        for (GameId g : s) t += (t.empty() ? "" : ", ") + print_game(u, g);
        return "{" + t + "}";
    };
    if (side == "left" || side == "both")
        for (const auto& s : left_classes(u, games)) out.line("left  " + show(s), "left", show(s));
    if (side == "right" || side == "both")
        for (const auto& s : right_classes(u, games)) out.line("right " + show(s), "right", show(s));
}

void run_hex_eval(const Globals& gl, const std::string& path, int max_empty, bool no_cache, bool prune) {
    Report out(gl.format == "records");
    World w;
    Region r = load_region(path);
    RegionValueOptions opt;
    opt.max_empty = max_empty;
    opt.transposition_cache = !no_cache;
    opt.prune_dead = prune;
    Game g = region_value(w, r, opt);
    out.line("value " + print_game(*g.u, g.id), "value", print_game(*g.u, g.id));
    out.line("empty cells " + std::to_string(r.empty_cells().size()), "empty_cells",
             std::to_string(r.empty_cells().size()));
    std::istringstream poset(g.u->poset().to_text());
    std::string line;
    while (std::getline(poset, line)) out.line(line, "outcome_poset", line);
}

void run_hex_sweep(const Globals& gl, int max_empty) {
    Report out(gl.format == "records");
    World w;
    SweepReport rep = no_star_4terminal_sweep(w, max_empty);
    out.line("shapes " + std::to_string(rep.shapes), "shapes", std::to_string(rep.shapes));
    out.line("regions " + std::to_string(rep.regions), "regions", std::to_string(rep.regions));
    out.line("distinct outcome tables " + std::to_string(rep.distinct_tables), "tables",
             std::to_string(rep.distinct_tables));
    out.line(rep.clean ? "no region with value {T|B}" : "counterexample: " + rep.counterexample, "clean",
             rep.clean ? "1" : "0");
    if (!rep.clean) fail(ErrorKind::property_violation, "a 4-terminal region has value {T|B}");
}

std::string pattern_text(const std::vector<std::pair<int, int>>& cells) {
    std::string t;
    for (auto [r, c] : cells) t += (t.empty() ? "" : " ") + ("(" + std::to_string(r) + "," + std::to_string(c) + ")");
    return t;
}

void run_strip_min_stones(const Globals& gl, int k, int n) {
    Report out(gl.format == "records");
    World w;
    const int s = min_connecting_stones(w, k, n);
    out.line(std::to_string(s), "min_stones", std::to_string(s));
}

void run_strip_table(const Globals& gl, int k, int from, int to) {
    Report out(gl.format == "records");
    if (from < 1 || to < from) fail(ErrorKind::invalid_argument, "need 1 <= --from <= --to");
    World w;
    StripSolver s(w, k);
    const int direct = std::min(to, k <= 4 ? 30 : 12);
    std::string widths = "n", stones = "s";
    for (int n = from; n <= to; ++n) {
        const int v = n <= direct ? s.min_stones_direct(n, gl.budget_nodes) : min_connecting_stones(w, k, n);
        widths += " " + std::to_string(n);
        stones += " " + std::to_string(v);
        out.record("min_stones_" + std::to_string(n), std::to_string(v));
    }
    out.human(widths);
    out.human(stones);
}

void run_strip_patterns(const Globals& gl, int k, int n) {
    Report out(gl.format == "records");
    World w;
    StripSolver s(w, k);
    const auto& f = s.frontiers(n, gl.budget_nodes)[n];
    for (const auto& t : f) {
        const std::string v = print_game(s.outcomes(), t.value);
        const std::string vc = s.virtual_connection(t.value) ? " vc" : "";
        out.line("triple " + std::to_string(t.stones) + " " + std::to_string(t.width) + vc + " " + v, "triple",
                 std::to_string(t.stones) + " " + std::to_string(t.width) + " " + v);
        for (auto [r, c] : t.black) out.line("B " + std::to_string(r) + " " + std::to_string(c), "stone",
                                             std::to_string(r) + " " + std::to_string(c));
    }
    out.record("count", std::to_string(f.size()));
}

void run_strip_period(const Globals& gl, int k, int max_width) {
    Report out(gl.format == "records");
    World w;
    StripSolver s(w, k);
    PeriodResult p = s.detect_period(max_width > 0 ? max_width : (k <= 4 ? 24 : 12), gl.budget_nodes);
    if (!p.found) fail(ErrorKind::resource_limit, "no period within the computed widths");
    const std::string t = std::to_string(p.p) + " " + std::to_string(p.q) + " " + std::to_string(p.base);
    out.line("period " + t, "period", t);
}

void run_strip_poset(const Globals& gl, int k, const std::string& order) {
    Report out(gl.format == "records");
    const OpenAutomaton& a =
        build_outcome_poset(k, order == "simulation" ? OpenOrder::simulation : OpenOrder::refinement);
    std::istringstream text(a.outcomes->to_text());
    std::string line;
    while (std::getline(text, line)) out.line(line, "outcome_poset", line);
    out.line("frontier states " + std::to_string(a.frontier_states), "frontier_states",
             std::to_string(a.frontier_states));
    out.line("columns " + std::to_string(a.columns->size()), "columns", std::to_string(a.columns->size()));
}

void run_strip_value(const Globals& gl, const std::string& path) {
    Report out(gl.format == "records");
    World w;
    StripPosition p = parse_strip_position(slurp(path));
    StripSolver s(w, p.k);
    const GameId v = s.value(p);
    out.line(print_game(s.outcomes(), v), "value", print_game(s.outcomes(), v));
    out.line(std::string("virtual connection: ") + (s.virtual_connection(v) ? "yes" : "no"), "virtual_connection",
             s.virtual_connection(v) ? "1" : "0");
}

void run_strip_certify(const Globals& gl, int k, const std::string& fixtures, bool no_base) {
    Report out(gl.format == "records");
    World w;
    StripSolver s(w, k);
    auto named = certificate_values(s, parse_pattern_fixtures(slurp(fixtures)));
    CertificateReport rep = verify_certificate(s, named, !no_base);
    for (const auto& c : rep.steps) {
        const std::string t = "G" + std::to_string(c.value_index) + " k" + std::to_string(c.column) + " " +
                              std::to_string(c.lhs) + " <= " + std::to_string(c.rhs) + (c.ok ? " ok" : " FAIL");
        if (c.value_index == 29)
            out.record("step", "T k" + std::to_string(c.column) + " " + std::to_string(c.lhs) + " " + std::to_string(c.rhs) + (c.ok ? " ok" : " FAIL"));
        else out.record("step", t);
    }
    out.line("cost checks " + std::to_string(rep.cost_checks), "cost_checks", std::to_string(rep.cost_checks));
    out.line("benefit checks " + std::to_string(rep.benefit_checks), "benefit_checks",
             std::to_string(rep.benefit_checks));
    out.line("step cases " + std::to_string(rep.step_cases) + ", failures " + std::to_string(rep.step_failures),
             "step_failures", std::to_string(rep.step_failures));
    out.line("base cases " + std::to_string(rep.base_cases) + ", failures " + std::to_string(rep.base_failures),
             "base_failures", std::to_string(rep.base_failures));
    for (const auto& f : rep.failures) out.line("failure: " + f, "failure", f);
    out.line(rep.ok ? "certificate holds" : "certificate FAILS", "ok", rep.ok ? "1" : "0");
    if (!rep.ok) fail(ErrorKind::property_violation, "certificate check failed");
}

void run_poset(const Globals& gl, const std::string& spec) {
    Report out(gl.format == "records");
    std::istringstream text(resolve_poset(spec)->to_text());
    std::string line;
    while (std::getline(text, line)) out.line(line, "poset", line);
}

} // namespace

// Values of every subcommand's options; only the chosen subcommand's are read.
struct Args {
    std::string poset, poset_b, game, game_b, map_file, target, path, hasse_path;
    std::string side = "both";
    std::string order = "refinement";
    std::string fixtures = std::string(CGT_DATA_DIR) + "/strip/best_k4.txt";
    std::vector<std::string> games;
    int depth = 2;
    int max_empty = 14;
    int sweep_max_empty = 4;
    int k = 4;
    int n = 0;
    int from = 0;
    int to = 0;
    int max_width = 0;
    bool classes = false;
    bool trace = false;
    bool no_cache = false;
    bool prune = false;
    bool no_base = false;
};

int main(int argc, char** argv) {
    CLI::App app{"Partizan games over partially ordered outcomes, Hex regions and strips"};
    app.require_subcommand(1);
    Globals gl;
    Args x;
    std::function<void()> action;
    app.add_option("--budget-nodes", gl.budget_nodes, "Node or candidate budget (0 = unlimited)");
    app.add_option("--budget-mb", gl.budget_mb, "Memory budget in MiB for enumeration (0 = unlimited)");
    app.add_option("--jobs", gl.jobs, "Worker threads (accepted; work is currently serialized)");
    app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"human", "records"}));
    auto on = [&](CLI::App* c, std::function<void()> f) { c->callback([&action, f] { action = f; }); };

    auto* c = app.add_subcommand("enumerate", "List canonical passable values by depth");
    c->add_option("poset", x.poset, "Poset file or built-in name (bool, lin<n>, anti<k>, nc<n>)")->required();
    c->add_option("--depth", x.depth, "Maximum depth")->required();
    c->add_option("--hasse", x.hasse_path, "Write the cover relation, one 'edge a b' line per cover");
    c->add_flag("--classes", x.classes, "Show left and right equivalence class ids");
    on(c, [&] { run_enumerate(gl, x.poset, x.depth, x.hasse_path, x.classes); });

    c = app.add_subcommand("canon", "Canonical form of a game");
    c->add_option("poset", x.poset)->required();
    c->add_option("game", x.game)->required();
    c->add_flag("--trace", x.trace, "Print every simplification step");
    on(c, [&] { run_canon(gl, x.poset, x.game, x.trace); });

    c = app.add_subcommand("compare", "Order relation between two games");
    c->add_option("poset", x.poset)->required();
    c->add_option("first", x.game, "First game")->required();
    c->add_option("second", x.game_b, "Second game")->required();
    on(c, [&] { run_compare(gl, x.poset, x.game, x.game_b); });

    c = app.add_subcommand("monotonize", "Equivalent monotone game of a passable game");
    c->add_option("poset", x.poset)->required();
    c->add_option("game", x.game)->required();
    on(c, [&] { run_monotonize(gl, x.poset, x.game); });

    c = app.add_subcommand("sum", "Sum of two games over the product poset");
    c->add_option("poset_a", x.poset)->required();
    c->add_option("first", x.game, "First game")->required();
    c->add_option("poset_b", x.poset_b)->required();
    c->add_option("second", x.game_b, "Second game")->required();
    on(c, [&] { run_sum(gl, x.poset, x.game, x.poset_b, x.game_b); });

    c = app.add_subcommand("opp", "Opposite of a game");
    c->add_option("poset", x.poset)->required();
    c->add_option("game", x.game)->required();
    on(c, [&] { run_opp(gl, x.poset, x.game); });

    c = app.add_subcommand("map", "f(G + H) for a binary monotone map file");
    c->add_option("map_file", x.map_file)->required();
    c->add_option("target", x.target, "Target poset")->required();
    c->add_option("poset_a", x.poset)->required();
    c->add_option("first", x.game, "First game")->required();
    c->add_option("poset_b", x.poset_b)->required();
    c->add_option("second", x.game_b, "Second game")->required();
    on(c, [&] { run_map(gl, x.map_file, x.target, x.poset, x.game, x.poset_b, x.game_b); });

    c = app.add_subcommand("lr-classes", "Left and right equivalence classes of option sets");
    c->add_option("poset", x.poset)->required();
    c->add_option("games", x.games)->required();
    c->add_option("--side", x.side)->check(CLI::IsMember({"left", "right", "both"}));
    on(c, [&] { run_lr_classes(gl, x.poset, x.games, x.side); });

    c = app.add_subcommand("hex-eval", "Value of a Hex region");
    c->add_option("region", x.path)->required();
    c->add_option("--max-empty", x.max_empty, "Refuse regions with more empty cells");
    c->add_flag("--no-cache", x.no_cache, "Disable the transposition table");
    c->add_flag("--prune-dead", x.prune, "Fill dead cells before the search");
    on(c, [&] { run_hex_eval(gl, x.path, x.max_empty, x.no_cache, x.prune); });

    c = app.add_subcommand("hex-sweep", "Search small 4-terminal regions for the value {T|B}");
    c->add_option("--max-empty", x.sweep_max_empty);
    on(c, [&] { run_hex_sweep(gl, x.sweep_max_empty); });

    c = app.add_subcommand("poset", "Print a poset in the text format");
    c->add_option("poset", x.poset)->required();
    on(c, [&] { run_poset(gl, x.poset); });

    auto* strip = app.add_subcommand("strip", "Open regions of height k");
    strip->require_subcommand(1);
    strip->add_option("-k", x.k, "Height")->required();

    c = strip->add_subcommand("min-stones", "Fewest black stones in a virtual connection");
    c->add_option("-n", x.n, "Width")->required();
    on(c, [&] { run_strip_min_stones(gl, x.k, x.n); });

    c = strip->add_subcommand("table", "Minimum stones for a range of widths");
    c->add_option("--from", x.from, "First width (default k)");
    c->add_option("--to", x.to, "Last width")->required();
    on(c, [&] { run_strip_table(gl, x.k, x.from > 0 ? x.from : x.k, x.to); });

    c = strip->add_subcommand("patterns", "Best patterns of one width");
    c->add_option("-n", x.n, "Width")->required();
    on(c, [&] { run_strip_patterns(gl, x.k, x.n); });

    c = strip->add_subcommand("period", "Periodicity of the best-pattern frontier");
    c->add_option("--max-width", x.max_width);
    on(c, [&] { run_strip_period(gl, x.k, x.max_width); });

    c = strip->add_subcommand("poset", "Outcome poset of open regions");
    c->add_option("--order", x.order)->check(CLI::IsMember({"refinement", "simulation"}));
    on(c, [&] { run_strip_poset(gl, x.k, x.order); });

    c = strip->add_subcommand("value", "Value of a strip position file");
    c->add_option("position", x.path)->required();
    on(c, [&] { run_strip_value(gl, x.path); });

    c = strip->add_subcommand("certify", "Check the cost/benefit certificate");
    c->add_option("--fixtures", x.fixtures, "Best-pattern fixture file");
    c->add_flag("--no-base", x.no_base, "Skip the exhaustive width-4 base case");
    on(c, [&] { run_strip_certify(gl, x.k, x.fixtures, x.no_base); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }
    try {
        action();
        std::cout.flush();
        return kOk;
    } catch (const Error& e) {
        std::cout.flush();
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cout.flush();
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
}
