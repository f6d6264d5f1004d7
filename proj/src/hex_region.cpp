#include "cgt/hex_region.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cgt/canonical.hpp"

namespace cgt {

namespace {

constexpr std::array<std::pair<int, int>, 6> kDirs{{{0, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}}};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool hex_adjacent(int r1, int c1, int r2, int c2) {
    for (auto [dr, dc] : kDirs)
        if (r1 + dr == r2 && c1 + dc == c2) return true;
    return false;
}

// Union-find over cells of one color plus the virtual edge nodes of that
// color; returns the representative of each terminal.
std::vector<int> terminal_roots(const Region& r, const std::vector<Stone>& filled, Stone color,
                                const std::vector<Terminal>& terms) {
    const int n = static_cast<int>(r.cells.size());
    UnionFind uf(n + static_cast<int>(terms.size()));
    for (int i = 0; i < n; ++i) {
        if (filled[i] != color) continue;
        for (int j : r.adj[i])
            if (j > i && filled[j] == color) uf.unite(i, j);
    }
    std::vector<int> roots;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const int node = n + static_cast<int>(t);
        if (terms[t].edge) {
            for (int c : terms[t].cells)
                if (filled[c] == color) uf.unite(node, c);
        } else {
            uf.unite(node, terms[t].cells.front());
        }
    }
    for (std::size_t t = 0; t < terms.size(); ++t) roots.push_back(uf.find(n + static_cast<int>(t)));
    return roots;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) parse_fail(line, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        parse_fail(line, "bad integer '" + s + "'");
    }
}

// Parses "(r,c) (r,c) ..." allowing spaces inside the parentheses.
std::vector<std::pair<int, int>> parse_coords(const std::string& s, int line) {
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0;
    while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) break;
        if (s[i] != '(') parse_fail(line, "expected '(' in coordinate list");
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) parse_fail(line, "unterminated coordinate");
        std::string inner = s.substr(i + 1, close - i - 1);
        const std::size_t comma = inner.find(',');
        if (comma == std::string::npos) parse_fail(line, "coordinate needs 'r,c'");
        auto trim = [](std::string x) {
            x.erase(0, x.find_first_not_of(" \t"));
            x.erase(x.find_last_not_of(" \t") + 1);
            return x;
        };
        out.emplace_back(parse_int(trim(inner.substr(0, comma)), line), parse_int(trim(inner.substr(comma + 1)), line));
        i = close + 1;
    }
    if (out.empty()) parse_fail(line, "empty coordinate list");
    return out;
}

} // namespace

const char* template_name(RegionTemplate t) {
    switch (t) {
    case RegionTemplate::nc: return "nc";
    case RegionTemplate::fork: return "fork";
    case RegionTemplate::one_sided_fork: return "one-sided-fork";
    case RegionTemplate::gap: return "gap";
    case RegionTemplate::fork_gap: return "fork-gap";
    }
    return "nc";
}

RegionTemplate template_from_name(const std::string& s) {
    for (auto t : {RegionTemplate::nc, RegionTemplate::fork, RegionTemplate::one_sided_fork, RegionTemplate::gap,
                   RegionTemplate::fork_gap})
        if (s == template_name(t)) return t;
    fail(ErrorKind::parse, "unknown region quotient '" + s + "'");
}

int Region::find(int r, int c) const {
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].r == r && cells[i].c == c) return static_cast<int>(i);
    return -1;
}

std::vector<int> Region::empty_cells() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].stone == Stone::empty) out.push_back(static_cast<int>(i));
    return out;
}

void Region::finalize() {
    const int n = static_cast<int>(cells.size());
    {
        std::set<std::pair<int, int>> seen;
        for (const auto& c : cells)
            if (!seen.emplace(c.r, c.c).second)
                fail(ErrorKind::invalid_region, "duplicate cell (" + std::to_string(c.r) + "," + std::to_string(c.c) + ")");
    }
    std::vector<std::set<int>> nb(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (hex_adjacent(cells[i].r, cells[i].c, cells[j].r, cells[j].c)) {
                nb[i].insert(j);
                nb[j].insert(i);
            }
    for (auto [a, b] : adjacency_add) {
        if (a == b) fail(ErrorKind::invalid_region, "a cell cannot be its own neighbour");
        nb[a].insert(b);
        nb[b].insert(a);
    }
    for (auto [a, b] : adjacency_remove) {
        nb[a].erase(b);
        nb[b].erase(a);
    }
    adj.assign(static_cast<std::size_t>(n), {});
    for (int i = 0; i < n; ++i) adj[i].assign(nb[i].begin(), nb[i].end());

    auto check_terms = [&](const std::vector<Terminal>& terms, Stone color, const char* what) {
        std::set<int> used;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const Terminal& term = terms[t];
            const std::string tag = std::string(what) + " " + std::to_string(t + 1);
            if (term.cells.empty()) fail(ErrorKind::invalid_region, tag + " is empty");
            if (term.edge) continue;
            for (int c : term.cells) {
                if (cells[c].stone != color) fail(ErrorKind::invalid_region, tag + " holds a cell without its stone");
                if (!used.insert(c).second) fail(ErrorKind::invalid_region, tag + " overlaps another terminal");
            }
            // Connected among its own stones.
            std::set<int> group(term.cells.begin(), term.cells.end()), reached{term.cells.front()};
            std::vector<int> stack{term.cells.front()};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (group.count(y) && reached.insert(y).second) stack.push_back(y);
            }
            if (reached.size() != group.size()) fail(ErrorKind::invalid_region, tag + " is not connected");
        }
    };
    check_terms(terminals, Stone::black, "terminal");
    check_terms(white_terminals, Stone::white, "white terminal");

    switch (kind) {
    case RegionTemplate::nc:
        if (terminals.empty() || terminals.size() > 8)
            fail(ErrorKind::invalid_region, "a region needs between 1 and 8 terminals");
        break;
    case RegionTemplate::fork:
    case RegionTemplate::one_sided_fork:
        if (terminals.size() != 3) fail(ErrorKind::invalid_region, "fork templates need exactly 3 terminals");
        break;
    case RegionTemplate::gap:
    case RegionTemplate::fork_gap:
        if (terminals.size() != 2 || white_terminals.size() != 2)
            fail(ErrorKind::invalid_region, "gap templates need 2 black and 2 white terminals");
        if (kind == RegionTemplate::fork_gap && gap < 0) fail(ErrorKind::invalid_region, "fork-gap needs a gap cell");
        break;
    }
}

Region parse_region(const std::string& text) {
    Region r;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool named = false;
    struct PendingTerm {
        int index;
        bool white;
        bool edge;
        std::vector<std::pair<int, int>> coords;
        int line;
    };
    std::vector<PendingTerm> pending;
    std::vector<std::array<int, 5>> pending_adj;  // op, r1, c1, r2, c2
    std::pair<int, int> gap{0, 0};
    bool has_gap = false;
    while (std::getline(in, raw)) {
        ++line;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        auto tok = split_ws(raw);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "region") {
            if (tok.size() != 2) parse_fail(line, "expected 'region <name>'");
            r.name = tok[1];
            named = true;
        } else if (kw == "cell") {
            if (tok.size() != 3 && tok.size() != 4) parse_fail(line, "expected 'cell r c [B|W|.]'");
            HexCell c{parse_int(tok[1], line), parse_int(tok[2], line), Stone::empty};
            if (tok.size() == 4) {
                if (tok[3] == "B") c.stone = Stone::black;
                else if (tok[3] == "W") c.stone = Stone::white;
                else if (tok[3] != ".") parse_fail(line, "cell state must be B, W or .");
            }
            r.cells.push_back(c);
        } else if (kw == "terminal" || kw == "edge" || kw == "white-terminal" || kw == "white-edge") {
            const std::size_t colon = raw.find(':');
            if (tok.size() < 2 || colon == std::string::npos) parse_fail(line, "expected '" + kw + " t: (r,c) ...'");
            std::string idx = split_ws(raw.substr(raw.find(kw) + kw.size(), colon - raw.find(kw) - kw.size())).at(0);
            PendingTerm p{parse_int(idx, line), kw.rfind("white", 0) == 0, kw.find("edge") != std::string::npos,
                          parse_coords(raw.substr(colon + 1), line), line};
            pending.push_back(std::move(p));
        } else if (kw == "gap") {
            if (tok.size() != 3) parse_fail(line, "expected 'gap r c'");
            gap = {parse_int(tok[1], line), parse_int(tok[2], line)};
            has_gap = true;
        } else if (kw == "adjacency") {
            if (tok.size() != 6 || (tok[1] != "add" && tok[1] != "remove"))
                parse_fail(line, "expected 'adjacency add|remove r1 c1 r2 c2'");
            pending_adj.push_back({tok[1] == "add" ? 1 : 0, parse_int(tok[2], line), parse_int(tok[3], line),
                                   parse_int(tok[4], line), parse_int(tok[5], line)});
        } else if (kw == "quotient") {
            if (tok.size() != 2) parse_fail(line, "expected 'quotient <name>'");
            r.kind = template_from_name(tok[1]);
        } else {
            parse_fail(line, "unknown directive '" + kw + "'");
        }
    }
    if (!named) fail(ErrorKind::parse, "missing 'region <name>' line");
    if (r.cells.empty()) fail(ErrorKind::parse, "region has no cells");
    auto cell_at = [&](int rr, int cc, int ln) {
        int i = r.find(rr, cc);
        if (i < 0) parse_fail(ln, "no cell (" + std::to_string(rr) + "," + std::to_string(cc) + ")");
        return i;
    };
    for (int white = 0; white < 2; ++white) {
        std::map<int, Terminal> byidx;
        for (const auto& p : pending) {
            if (p.white != (white == 1)) continue;
            if (byidx.count(p.index)) parse_fail(p.line, "terminal " + std::to_string(p.index) + " declared twice");
            Terminal t;
            t.edge = p.edge;
            for (auto [rr, cc] : p.coords) t.cells.push_back(cell_at(rr, cc, p.line));
            byidx.emplace(p.index, std::move(t));
        }
        int expect = 1;
        auto& out = white ? r.white_terminals : r.terminals;
        for (auto& [i, t] : byidx) {
            if (i != expect++) fail(ErrorKind::parse, "terminals must be numbered 1, 2, ... without gaps");
            out.push_back(std::move(t));
        }
    }
    for (const auto& a : pending_adj) {
        auto pr = std::make_pair(cell_at(a[1], a[2], 0), cell_at(a[3], a[4], 0));
        (a[0] ? r.adjacency_add : r.adjacency_remove).push_back(pr);
    }
    if (has_gap) r.gap = cell_at(gap.first, gap.second, 0);
    r.finalize();
    return r;
}

Region load_region(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::invalid_argument, "cannot open region file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_region(ss.str());
}

std::string region_to_text(const Region& r) {
    std::ostringstream o;
    auto coord = [&](int i) { return "(" + std::to_string(r.cells[i].r) + "," + std::to_string(r.cells[i].c) + ")"; };
    o << "region " << r.name << "\n";
    o << "quotient " << template_name(r.kind) << "\n";
    for (const auto& c : r.cells)
        o << "cell " << c.r << " " << c.c << " " << (c.stone == Stone::black ? "B" : c.stone == Stone::white ? "W" : ".")
          << "\n";
    auto terms = [&](const std::vector<Terminal>& ts, bool white) {
        for (std::size_t t = 0; t < ts.size(); ++t) {
            o << (white ? "white-" : "") << (ts[t].edge ? "edge " : "terminal ") << t + 1 << ":";
            for (int c : ts[t].cells) o << " " << coord(c);
            o << "\n";
        }
    };
    terms(r.terminals, false);
    terms(r.white_terminals, true);
    if (r.gap >= 0) o << "gap " << r.cells[r.gap].r << " " << r.cells[r.gap].c << "\n";
    for (auto [a, b] : r.adjacency_add)
        o << "adjacency add " << r.cells[a].r << " " << r.cells[a].c << " " << r.cells[b].r << " " << r.cells[b].c << "\n";
    for (auto [a, b] : r.adjacency_remove)
        o << "adjacency remove " << r.cells[a].r << " " << r.cells[a].c << " " << r.cells[b].r << " " << r.cells[b].c
          << "\n";
    return o.str();
}

MonotoneMap fork_quotient() {
    auto nc = non_crossing_poset(3);
    auto fork = antichain_poset(2);
    // Bottom and {12} collapse; {23} -> a, {13} -> b.
    std::vector<int> table(nc->size());
    for (int i = 0; i < nc->size(); ++i) {
        const std::string& n = nc->atom_name(i);
        table[i] = fork->index_of(n == "c" ? "B" : n);
    }
    return make_monotone_map(nc, fork, table);
}

MonotoneMap one_sided_fork_quotient() {
    auto nc = non_crossing_poset(3);
    auto lin = linear_poset(3);
    std::vector<int> table(nc->size());
    for (int i = 0; i < nc->size(); ++i) {
        const std::string& n = nc->atom_name(i);
        std::string to = (n == "B" || n == "c") ? "B" : (n == "a") ? "a" : "T";
        table[i] = lin->index_of(to);
    }
    return make_monotone_map(nc, lin, table);
}

PosetPtr region_outcome_poset(const Region& r) {
    switch (r.kind) {
    case RegionTemplate::nc: return non_crossing_poset(static_cast<int>(r.terminals.size()));
    case RegionTemplate::fork: return antichain_poset(2);
    case RegionTemplate::one_sided_fork:
    case RegionTemplate::gap: return linear_poset(3);
    case RegionTemplate::fork_gap: return linear_poset(4);
    }
    return nullptr;
}

Partition black_partition(const Region& r, const std::vector<Stone>& filled) {
    if (filled.size() != r.cells.size()) fail(ErrorKind::invalid_argument, "completion size differs from the region");
    for (Stone s : filled)
        if (s == Stone::empty) fail(ErrorKind::precondition, "completion is not total");
    auto roots = terminal_roots(r, filled, Stone::black, r.terminals);
    Partition p = normalize_partition(roots);
    if (!is_non_crossing(p)) fail(ErrorKind::invalid_region, "terminal partition crosses; adjacency is not planar");
    return p;
}

int outcome_of(const Region& r, const std::vector<Stone>& filled) {
    switch (r.kind) {
    case RegionTemplate::nc: return non_crossing_index(black_partition(r, filled));
    case RegionTemplate::fork: {
        static const MonotoneMap q = fork_quotient();
        return q(non_crossing_index(black_partition(r, filled)));
    }
    case RegionTemplate::one_sided_fork: {
        static const MonotoneMap q = one_sided_fork_quotient();
        return q(non_crossing_index(black_partition(r, filled)));
    }
    case RegionTemplate::gap:
    case RegionTemplate::fork_gap: {
        Partition p = black_partition(r, filled);
        auto w = terminal_roots(r, filled, Stone::white, r.white_terminals);
        const bool black = p[0] == p[1], white = w[0] == w[1];
        if (black && white) fail(ErrorKind::invalid_region, "both players connect their terminals");
        if (r.kind == RegionTemplate::gap) return black ? 2 : white ? 0 : 1;
        if (black) return 3;
        if (white) return 0;
        return filled[r.gap] == Stone::white ? 1 : 2;
    }
    }
    return 0;
}

namespace {

std::vector<Stone> base_fill(const Region& r) {
    std::vector<Stone> f;
    for (const auto& c : r.cells) f.push_back(c.stone);
    return f;
}

void fill_mask(std::vector<Stone>& f, const std::vector<int>& empties, std::uint32_t black) {
    for (std::size_t i = 0; i < empties.size(); ++i) f[empties[i]] = (black >> i) & 1 ? Stone::black : Stone::white;
}

void check_budget(std::size_t k, int max_empty) {
    if (static_cast<int>(k) > max_empty || k > 20)
        fail(ErrorKind::resource_limit,
             "region has " + std::to_string(k) + " empty cells; budget is " + std::to_string(std::min(max_empty, 20)));
}

} // namespace

Game region_value(World& w, const Region& r, const RegionValueOptions& opt) {
    Region work = r;
    if (opt.prune_dead)
        for (int c : dead_cells(r, opt.max_empty)) work.cells[c].stone = Stone::white;
    const auto empties = work.empty_cells();
    check_budget(empties.size(), opt.max_empty);
    Universe& u = w.universe(region_outcome_poset(work));
    const int k = static_cast<int>(empties.size());
    const std::uint32_t all = k == 0 ? 0u : ((1u << k) - 1);
    std::vector<Stone> scratch = base_fill(work);
    absl::flat_hash_map<std::uint64_t, GameId> memo;
    std::function<GameId(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t colored, std::uint32_t black) {
        const std::uint64_t key = (static_cast<std::uint64_t>(colored) << 32) | black;
        if (opt.transposition_cache)
            if (auto it = memo.find(key); it != memo.end()) return it->second;
        GameId out;
        if (colored == all) {
            fill_mask(scratch, empties, black);
            out = u.atomic(outcome_of(work, scratch));
        } else {
            GameSet left, right;
            for (int i = 0; i < k; ++i) {
                const std::uint32_t bit = 1u << i;
                if (colored & bit) continue;
                left.push_back(rec(colored | bit, black | bit));
                right.push_back(rec(colored | bit, black));
            }
            out = canonical_form(u, u.compose(std::move(left), std::move(right)));
        }
        if (opt.transposition_cache) memo.emplace(key, out);
        return out;
    };
    return Game{&u, rec(0, 0)};
}

std::vector<int> dead_cells(const Region& r, int max_empty) {
    const auto empties = r.empty_cells();
    check_budget(empties.size(), max_empty);
    const int k = static_cast<int>(empties.size());
    std::vector<int> table(std::size_t{1} << k);
    std::vector<Stone> f = base_fill(r);
    for (std::uint32_t m = 0; m < table.size(); ++m) {
        fill_mask(f, empties, m);
        table[m] = outcome_of(r, f);
    }
    std::vector<int> dead;
    for (int i = 0; i < k; ++i) {
        const std::uint32_t bit = 1u << i;
        bool same = true;
        for (std::uint32_t m = 0; m < table.size() && same; ++m)
            if (!(m & bit) && table[m] != table[m | bit]) same = false;
        if (same) dead.push_back(empties[i]);
    }
    return dead;
}

int black_components(const Region& r, const std::vector<Stone>& filled) {
    const int n = static_cast<int>(r.cells.size());
    UnionFind uf(n);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        if (filled[i] != Stone::black) continue;
        ++count;
        for (int j : r.adj[i])
            if (j < i && filled[j] == Stone::black && uf.find(i) != uf.find(j)) {
                uf.unite(i, j);
                --count;
            }
    }
    return count;
}

int component_delta_check(const Region& r, const std::vector<Stone>& filled, int cell) {
    if (cell < 0 || static_cast<std::size_t>(cell) >= r.cells.size() || filled.size() != r.cells.size())
        fail(ErrorKind::invalid_argument, "cell or completion out of range");
    if (filled[cell] != Stone::black) fail(ErrorKind::precondition, "component_delta_check needs a black cell");
    const int before = black_components(r, filled);
    std::vector<Stone> after = filled;
    after[cell] = Stone::white;
    const int delta = black_components(r, after) - before;
    if (delta > 2)
        fail(ErrorKind::property_violation,
             "turning one stone white added " + std::to_string(delta) + " black components");
    return delta;
}

int terminal_limit_guarantee(const Region& r, int free_moves, int max_empty) {
    if (free_moves < 0) fail(ErrorKind::invalid_argument, "free_moves must be non-negative");
    const auto empties = r.empty_cells();
    check_budget(empties.size(), max_empty);
    const int k = static_cast<int>(empties.size());
    const std::uint32_t all = k == 0 ? 0u : ((1u << k) - 1);
    std::vector<Stone> scratch = base_fill(r);
    auto score = [&](std::uint32_t black) {
        fill_mask(scratch, empties, black);
        Partition p = black_partition(r, scratch);
        std::vector<int> sizes(p.size(), 0);
        for (int b : p) ++sizes[b];
        return *std::max_element(sizes.begin(), sizes.end());
    };
    // Key: colored, black, free moves left, phase (0 Black to move, 1 White
    // before its move, 2 White after its move).
    std::map<std::tuple<std::uint32_t, std::uint32_t, int, int>, int> memo;
    std::function<int(std::uint32_t, std::uint32_t, int, int)> rec = [&](std::uint32_t colored, std::uint32_t black,
                                                                         int free, int phase) -> int {
        if (colored == all) return score(black);
        auto key = std::make_tuple(colored, black, free, phase);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int best;
        if (phase == 0) {
            best = -1;
            for (int i = 0; i < k; ++i)
                if (!(colored >> i & 1)) best = std::max(best, rec(colored | 1u << i, black | 1u << i, free, 1));
        } else {
            best = 1 << 20;
            if (phase == 2) best = rec(colored, black, free, 0);
            for (int i = 0; i < k; ++i) {
                if (colored >> i & 1) continue;
                if (phase == 1) best = std::min(best, rec(colored | 1u << i, black, free, 2));
                if (free > 0) best = std::min(best, rec(colored | 1u << i, black, free - 1, phase));
            }
        }
        memo.emplace(key, best);
        return best;
    };
    // White may spend free moves before Black's first move.
    return rec(0, 0, free_moves, 2);
}

namespace {

using Coord = std::pair<int, int>;

std::vector<std::vector<Coord>> fixed_polyhexes(int size) {
    std::set<std::vector<Coord>> level{{{0, 0}}};
    std::vector<std::vector<Coord>> all;
    if (size >= 1) all.push_back({{0, 0}});
    for (int s = 2; s <= size; ++s) {
        std::set<std::vector<Coord>> next;
        for (const auto& shape : level) {
            std::set<Coord> cells(shape.begin(), shape.end());
            for (auto [r, c] : shape)
                for (auto [dr, dc] : kDirs) {
                    Coord x{r + dr, c + dc};
                    if (cells.count(x)) continue;
                    std::vector<Coord> grown(shape);
                    grown.push_back(x);
                    std::sort(grown.begin(), grown.end());
                    const Coord o = grown.front();
                    for (auto& g : grown) g = {g.first - o.first, g.second - o.second};
                    next.insert(grown);
                }
        }
        level = std::move(next);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

// Ring cells in boundary order, or empty when the boundary is not a simple
// cycle (a ring cell touched twice, or an enclosed hole).
std::vector<Coord> boundary_ring(const std::vector<Coord>& shape) {
    std::set<Coord> in(shape.begin(), shape.end());
    auto outside = [&](Coord x, int d) { return Coord{x.first + kDirs[d].first, x.second + kDirs[d].second}; };
    // Start at a boundary edge of the lowest cell pointing down-left.
    Coord start = shape.front();
    int d0 = -1;
    for (int d = 0; d < 6; ++d)
        if (!in.count(outside(start, d)) && in.count(outside(start, (d + 5) % 6)) == 0) {
            d0 = d;
            break;
        }
    if (d0 < 0)
        for (int d = 0; d < 6; ++d)
            if (!in.count(outside(start, d))) {
                d0 = d;
                break;
            }
    std::vector<Coord> seq;
    Coord x = start;
    int d = d0;
    std::size_t edges = 0, total_edges = 0;
    for (const auto& c : shape)
        for (int e = 0; e < 6; ++e)
            if (!in.count(outside(c, e))) ++total_edges;
    do {
        Coord o = outside(x, d);
        if (seq.empty() || seq.back() != o) seq.push_back(o);
        ++edges;
        const int nd = (d + 1) % 6;
        Coord y = outside(x, nd);
        if (in.count(y)) {
            x = y;
            d = (nd + 4) % 6;
        } else {
            d = nd;
        }
    } while (!(x == start && d == d0) && edges <= total_edges);
    if (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
    // A boundary walk that misses some boundary edge means a hole.
    if (edges != total_edges) return {};
    std::set<Coord> uniq(seq.begin(), seq.end());
    if (uniq.size() != seq.size()) return {};
    return seq;
}

} // namespace

SweepReport no_star_4terminal_sweep(World& w, int max_empty) {
    if (max_empty < 0 || max_empty > 7) fail(ErrorKind::size_limit, "the sweep supports at most 7 empty cells");
    SweepReport rep;
    Universe& u = w.universe(non_crossing_poset(4));
    const GameId star = u.compose({u.top()}, {u.bottom()});
    std::map<std::vector<int>, bool> seen;
    for (const auto& shape : fixed_polyhexes(max_empty)) {
        const auto ring = boundary_ring(shape);
        if (ring.empty()) continue;
        ++rep.shapes;
        const int k = static_cast<int>(shape.size()), m = static_cast<int>(ring.size());
        std::vector<Coord> all(shape);
        all.insert(all.end(), ring.begin(), ring.end());
        const int n = k + m;
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (hex_adjacent(all[i].first, all[i].second, all[j].first, all[j].second)) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        for (std::uint32_t col = 0; col < (1u << m); ++col) {
            // Black runs along the ring.
            std::vector<int> run(m, -1);
            int start = -1;
            for (int i = 0; i < m; ++i)
                if (!(col >> i & 1)) {
                    start = i;
                    break;
                }
            if (start < 0) continue;
            int runs = 0;
            for (int s = 1; s <= m; ++s) {
                const int i = (start + s) % m;
                if (!(col >> i & 1)) continue;
                const int prev = (i + m - 1) % m;
                run[i] = (col >> prev & 1) ? run[prev] : runs++;
            }
            if (runs != 4) continue;
            // Distinct runs must not touch each other outside the region.
            bool touching = false;
            for (int i = 0; i < m && !touching; ++i)
                for (int j : adj[k + i])
                    if (j >= k && run[i] >= 0 && run[j - k] >= 0 && run[i] != run[j - k]) touching = true;
            if (touching) continue;
            ++rep.regions;
            std::vector<int> table(std::size_t{1} << k);
            for (std::uint32_t fill = 0; fill < table.size(); ++fill) {
                UnionFind uf(n);
                auto black = [&](int v) { return v < k ? (fill >> v & 1) != 0 : (col >> (v - k) & 1) != 0; };
                for (int v = 0; v < n; ++v)
                    if (black(v))
                        for (int x : adj[v])
                            if (x > v && black(x)) uf.unite(v, x);
                std::vector<int> rep_of(4, -1);
                for (int i = 0; i < m; ++i)
                    if (run[i] >= 0 && rep_of[run[i]] < 0) rep_of[run[i]] = uf.find(k + i);
                const int idx = non_crossing_index(normalize_partition(rep_of));
                if (idx < 0) fail(ErrorKind::internal_consistency, "crossing partition in a planar sweep region");
                table[fill] = idx;
            }
            auto it = seen.find(table);
            if (it == seen.end()) {
                GameId v = set_coloring_direct(u, k, [&](std::uint32_t b) { return table[b]; });
                it = seen.emplace(table, u.equivalent(v, star)).first;
            }
            if (it->second && rep.clean) {
                rep.clean = false;
                std::ostringstream o;
                o << "empty:";
                for (auto [r, c] : shape) o << " (" << r << "," << c << ")";
                o << " black ring:";
                for (int i = 0; i < m; ++i)
                    if (col >> i & 1) o << " (" << ring[i].first << "," << ring[i].second << ")";
                rep.counterexample = o.str();
            }
        }
    }
    rep.distinct_tables = seen.size();
    return rep;
}

bool no_star_4terminal(World& w, int max_empty) {
    SweepReport rep = no_star_4terminal_sweep(w, max_empty);
    if (!rep.clean) fail(ErrorKind::property_violation, "4-terminal region with value {T|B}: " + rep.counterexample);
    return true;
}

Region octagon_region() {
    Region r;
    r.name = "octagon";
    // Cells far apart so that no default adjacency applies.
    r.cells.push_back({0, 0, Stone::empty});
    for (int i = 0; i < 8; ++i) r.cells.push_back({10, 10 * (i + 1), i % 2 == 0 ? Stone::black : Stone::white});
    for (int i = 0; i < 8; ++i) {
        r.adjacency_add.emplace_back(0, 1 + i);
        r.adjacency_add.emplace_back(1 + i, 1 + (i + 1) % 8);
    }
    for (int i = 0; i < 4; ++i) r.terminals.push_back(Terminal{{1 + 2 * i}, false});
    r.finalize();
    return r;
}

} // namespace cgt
