#include "cgt/strip.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "cgt/canonical.hpp"

namespace cgt {

namespace {

constexpr int kMaxHeight = 5;

// Last column of a filled open region together with the connectivity that
// matters for the future. Black labels: -1 white, 0 joined to the left
// edge, >= 1 other components. White labels: -1 black, 0 joined to the top
// edge, 1 joined to the bottom edge, >= 2 other components.
struct FrontierState {
    int colors = 0;  // bit j set iff cell j (0-based, top first) is black
    std::array<std::int8_t, kMaxHeight> black{};
    std::array<std::int8_t, kMaxHeight> white{};
    bool white_won = false;

    std::uint64_t key(int k) const {
        if (white_won) return ~0ull;
        std::uint64_t x = static_cast<std::uint64_t>(colors);
        for (int j = 0; j < k; ++j) {
            x = (x << 4) | static_cast<std::uint64_t>(black[j] + 1);
            x = (x << 4) | static_cast<std::uint64_t>(white[j] + 1);
        }
        return x;
    }
};

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

FrontierState start_state(int k) {
    FrontierState s;
    s.colors = (1 << k) - 1;
    for (int j = 0; j < k; ++j) {
        s.black[j] = 0;
        s.white[j] = -1;
    }
    return s;
}

// Bit of cell j (0-based, top first) inside a column index.
inline bool column_black(int column, int k, int j) { return (column >> (k - 1 - j)) & 1; }

FrontierState advance(const FrontierState& s, int column, int k) {
    if (s.white_won) return s;
    // Nodes: old cells 0..k-1, new cells k..2k-1, left edge, top, bottom.
    const int L = 2 * k, TOP = 2 * k + 1, BOT = 2 * k + 2;
    UF uf(2 * k + 3);
    auto old_black = [&](int j) { return (s.colors >> j) & 1; };
    for (int i = 0; i < k; ++i) {
        if (old_black(i)) {
            if (s.black[i] == 0) uf.unite(i, L);
            for (int j = i + 1; j < k; ++j)
                if (old_black(j) && s.black[j] == s.black[i]) uf.unite(i, j);
        } else {
            if (s.white[i] == 0) uf.unite(i, TOP);
            if (s.white[i] == 1) uf.unite(i, BOT);
            for (int j = i + 1; j < k; ++j)
                if (!old_black(j) && s.white[j] == s.white[i]) uf.unite(i, j);
        }
    }
    for (int j = 0; j < k; ++j) {
        const bool b = column_black(column, k, j);
        const int node = k + j;
        auto join_old = [&](int i) {
            if (i < k && static_cast<bool>(old_black(i)) == b) uf.unite(node, i);
        };
        join_old(j);
        join_old(j + 1);
        if (j > 0 && column_black(column, k, j - 1) == b) uf.unite(node, node - 1);
        if (!b && j == 0) uf.unite(node, TOP);
        if (!b && j == k - 1) uf.unite(node, BOT);
    }
    FrontierState t;
    if (uf.find(TOP) == uf.find(BOT)) {
        t.white_won = true;
        return t;
    }
    std::map<int, int> bmap, wmap;
    for (int j = 0; j < k; ++j) {
        const int root = uf.find(k + j);
        if (column_black(column, k, j)) {
            t.colors |= 1 << j;
            t.white[j] = -1;
            if (root == uf.find(L)) t.black[j] = 0;
            else {
                auto it = bmap.emplace(root, static_cast<int>(bmap.size()) + 1).first;
                t.black[j] = static_cast<std::int8_t>(it->second);
            }
        } else {
            t.black[j] = -1;
            if (root == uf.find(TOP)) t.white[j] = 0;
            else if (root == uf.find(BOT)) t.white[j] = 1;
            else {
                auto it = wmap.emplace(root, static_cast<int>(wmap.size()) + 2).first;
                t.white[j] = static_cast<std::int8_t>(it->second);
            }
        }
    }
    return t;
}

bool black_wins(const FrontierState& s, int k) {
    if (s.white_won) return false;
    for (int j = 0; j < k; ++j)
        if (((s.colors >> j) & 1) && s.black[j] == 0) return true;
    return false;
}

PosetPtr column_poset(int k) {
    const int n = 1 << k;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("k" + std::to_string(i));
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < k; ++b)
            if (!((i >> b) & 1)) pairs.emplace_back(i, i | (1 << b));
    return Poset::from_relation("Col" + std::to_string(k), names, pairs);
}

// Words naming the ten height-4 outcomes after their representative fillings.
const std::vector<std::pair<std::string, std::vector<std::string>>>& height4_names() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> names{
        {"B", {"WWWW"}}, {"a", {"WWWB"}}, {"b", {"WWBW"}}, {"c", {"BBWW"}}, {"d", {"BWWW"}},
        {"e", {"WWBB"}}, {"f", {"BWWB"}}, {"g", {"BBBW"}}, {"h", {"BWWW", "BWBB"}}, {"T", {"BBBB"}},
    };
    return names;
}

// Connectivity of the cells just right of the frontier: each of the k
// outside cells (and the left edge, element k) gets a block id; an empty
// vector stands for "no outside cell reaches the left edge".
std::vector<int> outside_partition(const FrontierState& s, int k) {
    if (s.white_won) return {};
    UF uf(k + 1 + 2 * kMaxHeight + 2);
    auto node_of_label = [&](int label) { return label == 0 ? k : k + label; };
    for (int j = 0; j < k; ++j)
        for (int i : {j, j + 1})
            if (i < k && ((s.colors >> i) & 1)) uf.unite(j, node_of_label(s.black[i]));
    bool reaches = false;
    for (int j = 0; j < k; ++j) reaches = reaches || uf.find(j) == uf.find(k);
    if (!reaches) return {};
    std::vector<int> block(k + 1);
    std::map<int, int> ids;
    for (int j = 0; j <= k; ++j) block[j] = ids.emplace(uf.find(j), static_cast<int>(ids.size())).first->second;
    return block;
}

// Partition p refines partition q (empty = bottom).
bool refines(const std::vector<int>& p, const std::vector<int>& q) {
    if (p.empty()) return true;
    if (q.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] == p[j] && q[i] != q[j]) return false;
    return true;
}

std::unique_ptr<OpenAutomaton> make_automaton(int k, OpenOrder order_kind) {
    const int letters = 1 << k;
    std::vector<FrontierState> states{start_state(k)};
    absl::flat_hash_map<std::uint64_t, int> ids{{states[0].key(k), 0}};
    std::vector<std::vector<int>> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::vector<int> row(letters);
        for (int c = 0; c < letters; ++c) {
            FrontierState t = advance(states[i], c, k);
            auto [it, fresh] = ids.emplace(t.key(k), static_cast<int>(states.size()));
            if (fresh) states.push_back(t);
            row[c] = it->second;
        }
        delta.push_back(std::move(row));
    }
    const int ns = static_cast<int>(states.size());

    // Moore refinement starting from the closing classification.
    std::vector<int> cls(ns);
    for (int i = 0; i < ns; ++i) cls[i] = black_wins(states[i], k) ? 1 : 0;
    int count = 0;
    while (true) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(ns);
        for (int i = 0; i < ns; ++i) {
            std::vector<int> v{cls[i]};
            for (int c = 0; c < letters; ++c) v.push_back(cls[delta[i][c]]);
            next[i] = sig.emplace(std::move(v), static_cast<int>(sig.size())).first->second;
        }
        const int m = static_cast<int>(sig.size());
        cls = std::move(next);
        if (m == count) break;
        count = m;
    }
    // Renumber classes in order of first reachability.
    std::vector<int> order(count, -1);
    int seen = 0;
    for (int i = 0; i < ns; ++i)
        if (order[cls[i]] < 0) order[cls[i]] = seen++;
    for (int& c : cls) c = order[c];

    std::vector<std::vector<int>> cdelta(count, std::vector<int>(letters));
    std::vector<int> cwin(count);
    for (int i = 0; i < ns; ++i) {
        for (int c = 0; c < letters; ++c) cdelta[cls[i]][c] = cls[delta[i][c]];
        cwin[cls[i]] = black_wins(states[i], k) ? 1 : 0;
    }

    // Simulation preorder as a greatest fixpoint.
    std::vector<std::vector<char>> sim(count, std::vector<char>(count));
    for (int p = 0; p < count; ++p)
        for (int q = 0; q < count; ++q) sim[p][q] = cwin[p] <= cwin[q];
    for (bool changed = true; changed;) {
        changed = false;
        for (int p = 0; p < count; ++p)
            for (int q = 0; q < count; ++q) {
                if (!sim[p][q]) continue;
                for (int c = 0; c < letters; ++c)
                    if (!sim[cdelta[p][c]][cdelta[q][c]]) {
                        sim[p][q] = 0;
                        changed = true;
                        break;
                    }
            }
    }

    // Connection-refinement order on the outside-cell partitions: p <= q
    // when some filling in class p has a partition refining that of some
    // filling in class q, closed transitively. It must be contained in the
    // simulation preorder.
    std::vector<std::set<std::vector<int>>> parts(count);
    for (int i = 0; i < ns; ++i) parts[cls[i]].insert(outside_partition(states[i], k));
    std::vector<std::vector<char>> ref(count, std::vector<char>(count));
    for (int p = 0; p < count; ++p)
        for (int q = 0; q < count; ++q)
            for (const auto& x : parts[p])
                for (const auto& y : parts[q])
                    if (refines(x, y)) ref[p][q] = 1;
    for (int m = 0; m < count; ++m)
        for (int p = 0; p < count; ++p)
            for (int q = 0; q < count; ++q)
                if (ref[p][m] && ref[m][q]) ref[p][q] = 1;
    for (int p = 0; p < count; ++p)
        for (int q = 0; q < count; ++q)
            if (ref[p][q] && !sim[p][q])
                fail(ErrorKind::property_violation, "connection refinement is not contained in the semantic order");
    const auto& ord = order_kind == OpenOrder::refinement ? ref : sim;

    auto run_word = [&](const std::vector<int>& word) {
        int x = cls[0];
        for (int c : word) x = cdelta[x][c];
        return x;
    };
    // Atom order: bottom, the others, top.
    int bottom = -1, top = -1;
    for (int p = 0; p < count; ++p) {
        bool is_bot = true, is_top = true;
        for (int q = 0; q < count; ++q) {
            if (!ord[p][q]) is_bot = false;
            if (!ord[q][p]) is_top = false;
        }
        if (is_bot) bottom = p;
        if (is_top) top = p;
    }
    if (bottom < 0 || top < 0) fail(ErrorKind::internal_consistency, "open outcomes lack a top or bottom");
    std::vector<int> atom_of_class(count, -1);
    std::vector<std::string> names;
    if (k == 4) {
        for (const auto& [name, words] : height4_names()) {
            std::vector<int> w;
            for (const auto& s : words) w.push_back(column_index(s));
            const int c = run_word(w);
            if (atom_of_class[c] >= 0)
                fail(ErrorKind::internal_consistency, "two height-4 outcome names reach one class");
            atom_of_class[c] = static_cast<int>(names.size());
            names.push_back(name);
        }
        if (static_cast<int>(names.size()) != count)
            fail(ErrorKind::internal_consistency, "height 4 does not have exactly the ten named outcomes");
    } else {
        atom_of_class[bottom] = 0;
        names.push_back("B");
        int next = 1;
        for (int p = 0; p < count; ++p) {
            if (p == bottom || p == top) continue;
            atom_of_class[p] = static_cast<int>(names.size());
            names.push_back("o" + std::to_string(next++));
        }
        atom_of_class[top] = static_cast<int>(names.size());
        names.push_back("T");
    }
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < count; ++p)
        for (int q = 0; q < count; ++q)
            if (p != q && ord[p][q]) pairs.emplace_back(atom_of_class[p], atom_of_class[q]);

    auto a = std::make_unique<OpenAutomaton>();
    a->k = k;
    a->order = order_kind;
    a->outcomes = Poset::from_relation("Open" + std::to_string(k), names, pairs);
    a->columns = column_poset(k);
    a->frontier_states = states.size();
    a->start = atom_of_class[cls[0]];
    std::vector<int> table(static_cast<std::size_t>(count) * letters);
    for (int p = 0; p < count; ++p)
        for (int c = 0; c < letters; ++c)
            table[product_index(atom_of_class[p], c, letters)] = atom_of_class[cdelta[p][c]];
    auto prod = product_poset(a->outcomes, a->columns);
    if (!monotone_map_check(prod, a->outcomes, table))
        fail(ErrorKind::property_violation, "open-region transfer function is not monotone");
    a->transfer = make_monotone_map(prod, a->outcomes, table);
    std::vector<int> close(count);
    for (int p = 0; p < count; ++p) close[atom_of_class[p]] = cwin[p];
    a->closing = make_monotone_map(a->outcomes, bool_poset(), close);
    return a;
}

} // namespace

int OpenAutomaton::run(const std::vector<int>& word) const {
    int x = start;
    for (int c : word) x = step(x, c);
    return x;
}

const OpenAutomaton& build_outcome_poset(int k, OpenOrder order) {
    if (k < 1 || k > kMaxHeight) fail(ErrorKind::size_limit, "open regions support heights 1 to 5");
    static std::mutex mu;
    static std::map<std::pair<int, OpenOrder>, std::unique_ptr<OpenAutomaton>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{k, order}];
    if (!slot) slot = make_automaton(k, order);
    return *slot;
}

int column_index(const std::string& word) {
    int x = 0;
    for (char ch : word) {
        if (ch != 'B' && ch != 'W') fail(ErrorKind::invalid_argument, "column words use the letters B and W");
        x = (x << 1) | (ch == 'B');
    }
    return x;
}

void StripPosition::set(int r, int c, Stone s) {
    if (r < 1 || r > k || c < 1 || c > width)
        fail(ErrorKind::invalid_argument, "cell (" + std::to_string(r) + "," + std::to_string(c) + ") is off the strip");
    cells[static_cast<std::size_t>(c - 1) * k + (r - 1)] = s;
}

namespace {

std::vector<std::pair<int, int>> parse_cell_list(const std::string& s) {
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0;
    while ((i = s.find('(', i)) != std::string::npos) {
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) fail(ErrorKind::parse, "unterminated coordinate");
        int r = 0, c = 0;
        char comma = 0;
        std::istringstream in(s.substr(i + 1, close - i - 1));
        if (!(in >> r >> comma >> c) || comma != ',') fail(ErrorKind::parse, "bad coordinate '" + s.substr(i, close - i + 1) + "'");
        out.emplace_back(r, c);
        i = close + 1;
    }
    return out;
}

} // namespace

StripPosition parse_strip_position(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int k = -1, n = -1;
    std::vector<std::pair<Stone, std::vector<std::pair<int, int>>>> stones;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "height") {
            if (!(ls >> k)) fail(ErrorKind::parse, "expected 'height k'");
        } else if (kw == "width") {
            if (!(ls >> n)) fail(ErrorKind::parse, "expected 'width n'");
        } else if (kw == "black" || kw == "white") {
            std::string rest;
            std::getline(ls, rest);
            stones.emplace_back(kw == "black" ? Stone::black : Stone::white, parse_cell_list(rest));
        } else if (kw == "value") {
            continue;
        } else {
            fail(ErrorKind::parse, "unknown directive '" + kw + "'");
        }
    }
    if (k < 1 || n < 0) fail(ErrorKind::parse, "strip position needs 'height' and 'width'");
    StripPosition p(k, n);
    for (const auto& [s, list] : stones)
        for (auto [r, c] : list) p.set(r, c, s);
    return p;
}

std::vector<PatternFixture> parse_pattern_fixtures(const std::string& text) {
    std::vector<PatternFixture> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const auto colon = line.find(':');
        std::istringstream head(line.substr(0, colon));
        PatternFixture f;
        if (!(head >> f.label)) continue;
        if (colon == std::string::npos || !(head >> f.stones >> f.width))
            fail(ErrorKind::parse, "expected 'label stones width : (r,c) ...'");
        f.black = parse_cell_list(line.substr(colon + 1));
        out.push_back(std::move(f));
    }
    return out;
}

StripSolver::StripSolver(World& w, int k, OpenOrder order) : w_(w), k_(k), a_(&build_outcome_poset(k, order)) {
    out_ = &w.universe(a_->outcomes);
    col_ = &w.universe(a_->columns);
    bool_ = &w.universe(bool_poset());
    sum_memo_.canonical_positions = true;
}

GameId StripSolver::column_value(std::uint32_t black, std::uint32_t white) {
    const std::uint32_t all = (1u << k_) - 1;
    if ((black & white) || ((black | white) & ~all)) fail(ErrorKind::invalid_argument, "bad column masks");
    const std::uint64_t key = (static_cast<std::uint64_t>(black) << 32) | white;
    if (auto it = column_memo_.find(key); it != column_memo_.end()) return it->second;
    std::vector<int> free_bits;
    for (int b = 0; b < k_; ++b)
        if (!(((black | white) >> b) & 1)) free_bits.push_back(b);
    GameId v = set_coloring_direct(*col_, static_cast<int>(free_bits.size()), [&](std::uint32_t m) {
        std::uint32_t col = black;
        for (std::size_t i = 0; i < free_bits.size(); ++i)
            if ((m >> i) & 1) col |= 1u << free_bits[i];
        return static_cast<int>(col);
    });
    column_memo_.emplace(key, v);
    return v;
}

GameId StripSolver::extend(GameId value, GameId column, bool canonicalize) {
    GameId x = sum_map(w_, a_->transfer, Game{out_, value}, Game{col_, column}, &sum_memo_).id;
    return canonicalize ? canonical_form(*out_, x) : x;
}

GameId StripSolver::start_value() { return out_->atomic(a_->start); }

GameId StripSolver::value(const StripPosition& p, bool canonicalize_each) {
    if (p.k != k_) fail(ErrorKind::invalid_argument, "position height differs from the solver's");
    GameId v = start_value();
    for (int c = 1; c <= p.width; ++c) {
        std::uint32_t black = 0, white = 0;
        for (int r = 1; r <= k_; ++r) {
            const std::uint32_t bit = 1u << (k_ - r);
            if (p.at(r, c) == Stone::black) black |= bit;
            if (p.at(r, c) == Stone::white) white |= bit;
        }
        v = extend(v, column_value(black, white), canonicalize_each);
    }
    return canonicalize_each ? v : canonical_form(*out_, v);
}

bool StripSolver::virtual_connection(GameId v) {
    if (auto it = closing_memo_.find(v); it != closing_memo_.end()) return it->second != 0;
    Game m = map_game(w_, a_->closing, Game{out_, v});
    const bool vc = bool_->equivalent(m.id, bool_->top());
    closing_memo_.emplace(v, vc ? 1 : 0);
    return vc;
}

const std::vector<std::vector<PatternTriple>>& StripSolver::frontiers(int n, std::uint64_t budget_nodes) {
    if (n < 0) fail(ErrorKind::invalid_argument, "width must be non-negative");
    if (frontier_.empty()) frontier_.push_back({PatternTriple{start_value(), 0, 0, {}}});
    const int letters = 1 << k_;
    while (static_cast<int>(frontier_.size()) <= n) {
        const int width = static_cast<int>(frontier_.size());
        const auto& prev = frontier_.back();
        // (value, stones) -> least pattern.
        std::map<std::pair<GameId, int>, std::vector<std::pair<int, int>>> best;
        for (const auto& p : prev) {
            for (int c = 0; c < letters; ++c) {
                GameId g = extend(p.value, column_value(static_cast<std::uint32_t>(c), 0));
                if (budget_nodes && out_->num_games() > budget_nodes)
                    fail(ErrorKind::resource_limit, "best-pattern search exceeded the node budget");
                if (unacceptable(g)) continue;
                std::vector<std::pair<int, int>> cells = p.black;
                for (int r = 1; r <= k_; ++r)
                    if ((c >> (k_ - r)) & 1) cells.emplace_back(r, width);
                std::sort(cells.begin(), cells.end());
                const int s = p.stones + std::popcount(static_cast<unsigned>(c));
                auto [it, fresh] = best.emplace(std::make_pair(g, s), cells);
                if (!fresh && cells < it->second) it->second = std::move(cells);
            }
        }
        std::vector<PatternTriple> cand;
        for (auto& [key, cells] : best) cand.push_back(PatternTriple{key.first, key.second, width, std::move(cells)});
        std::vector<PatternTriple> keep;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < cand.size() && !dominated; ++j)
                if (i != j && cand[j].stones <= cand[i].stones && out_->leq(cand[i].value, cand[j].value))
                    dominated = true;
            if (!dominated) keep.push_back(cand[i]);
        }
        std::sort(keep.begin(), keep.end(), [](const PatternTriple& x, const PatternTriple& y) {
            return std::tie(x.stones, x.black) < std::tie(y.stones, y.black);
        });
        frontier_.push_back(std::move(keep));
    }
    return frontier_;
}

int StripSolver::min_stones_direct(int n, std::uint64_t budget_nodes) {
    const auto& f = frontiers(n, budget_nodes)[n];
    int best = -1;
    for (const auto& t : f)
        if (virtual_connection(t.value) && (best < 0 || t.stones < best)) best = t.stones;
    return best;
}

PeriodResult StripSolver::detect_period(int max_width, std::uint64_t budget_nodes) {
    const auto& f = frontiers(max_width, budget_nodes);
    PeriodResult res;
    res.widths_checked = max_width;
    auto sorted = [&](int n) {
        std::vector<std::pair<GameId, int>> v;
        for (const auto& t : f[n]) v.emplace_back(t.value, t.stones);
        std::sort(v.begin(), v.end());
        return v;
    };
    for (int p = 1; 3 * p <= max_width; ++p) {
        // Width 0 is the degenerate empty region and is not a base.
        for (int base = 1; base + 2 * p <= max_width; ++base) {
            bool ok = true;
            int q = 0;
            bool have_q = false;
            for (int n = base; n + p <= max_width && ok; ++n) {
                auto x = sorted(n), y = sorted(n + p);
                if (x.size() != y.size()) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < x.size() && ok; ++i) {
                    if (x[i].first != y[i].first) ok = false;
                    else if (!have_q) {
                        q = y[i].second - x[i].second;
                        have_q = true;
                    } else if (y[i].second - x[i].second != q) ok = false;
                }
            }
            if (ok && have_q) {
                res.found = true;
                res.p = p;
                res.q = q;
                res.base = base;
                return res;
            }
        }
    }
    return res;
}

const std::vector<std::vector<int>>& benefit_tiers() {
    static const std::vector<std::vector<int>> tiers{
        {21, 22}, {1, 2}, {13, 14, 15, 16, 17, 18}, {3, 7, 23, 24, 25, 26}, {4, 5, 6, 8}, {12, 19, 20}, {9, 27, 28},
    };
    return tiers;
}

int StripSolver::benefit(GameId v, const std::vector<GameId>& named) {
    if (unacceptable(v)) return kBenefitUnacceptable;
    const auto& tiers = benefit_tiers();
    for (std::size_t i = 0; i < tiers.size(); ++i)
        for (int j : tiers[i])
            if (out_->leq(v, named.at(j))) return static_cast<int>(i);
    return static_cast<int>(tiers.size());
}

namespace {

int default_direct_limit(int k) { return k <= 4 ? 30 : 12; }

} // namespace

GameId strip_value(World& w, const StripPosition& p) {
    StripSolver s(w, p.k);
    return s.value(p);
}

std::vector<PatternTriple> best_patterns(World& w, int k, int n, std::uint64_t budget_nodes) {
    StripSolver s(w, k);
    return s.frontiers(n, budget_nodes)[n];
}

PeriodResult detect_period(World& w, int k, int max_width) {
    StripSolver s(w, k);
    return s.detect_period(max_width > 0 ? max_width : (k <= 4 ? 24 : 15));
}

int min_connecting_stones(World& w, int k, int n) {
    if (n < 1) fail(ErrorKind::invalid_argument, "board width must be positive");
    StripSolver s(w, k);
    const int limit = default_direct_limit(k);
    if (n <= limit) return s.min_stones_direct(n);
    PeriodResult p = s.detect_period(limit);
    if (!p.found) fail(ErrorKind::resource_limit, "no period found within the computed widths");
    const int t = (n - limit + p.p - 1) / p.p;
    const int m = n - t * p.p;
    if (m < p.base) fail(ErrorKind::resource_limit, "period base lies beyond the computed widths");
    return s.min_stones_direct(m) + t * p.q;
}

std::vector<GameId> certificate_values(StripSolver& s, const std::vector<PatternFixture>& fixtures) {
    std::vector<GameId> named(30, -1);
    for (const auto& f : fixtures) {
        int idx;
        if (f.label == "T") idx = 29;
        else if (f.label.size() > 1 && f.label[0] == 'G') idx = std::stoi(f.label.substr(1));
        else fail(ErrorKind::parse, "unknown pattern label '" + f.label + "'");
        if (idx < 1 || idx > 29) fail(ErrorKind::parse, "pattern label out of range: " + f.label);
        StripPosition p(s.k(), f.width);
        for (auto [r, c] : f.black) p.set(r, c, Stone::black);
        const GameId v = s.value(p);
        if (named[idx] < 0) named[idx] = v;
        else if (named[idx] != v)
            fail(ErrorKind::property_violation, "patterns labelled " + f.label + " have different values");
    }
    for (int i = 1; i <= 29; ++i)
        if (named[i] < 0) fail(ErrorKind::precondition, "fixtures do not define value " + std::to_string(i));
    return named;
}

CertificateReport verify_certificate(StripSolver& s, const std::vector<GameId>& named, bool base_case) {
    if (s.k() != 4) fail(ErrorKind::precondition, "the certificate is defined for height 4");
    if (named.size() != 30) fail(ErrorKind::invalid_argument, "expected values G1..G28 and T");
    CertificateReport rep;
    auto failure = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    Universe& u = s.outcomes();

    // Cost additivity: adding a column of c stones changes the pattern cost
    // by the column cost.
    for (int st = 0; st <= 40; ++st)
        for (int n = 0; n <= 40; ++n)
            for (int c = 0; c <= 4; ++c) {
                ++rep.cost_checks;
                if (pattern_cost(st + c, n + 1) != pattern_cost(st, n) + column_cost(c))
                    failure("cost is not additive at s=" + std::to_string(st) + ", n=" + std::to_string(n));
            }

    // Benefit: monotone on the named values, each G_j within its tier, T at 7.
    std::vector<int> ben(30);
    for (int i = 1; i <= 29; ++i) ben[i] = s.benefit(named[i], named);
    const auto& tiers = benefit_tiers();
    for (std::size_t t = 0; t < tiers.size(); ++t)
        for (int j : tiers[t]) {
            ++rep.benefit_checks;
            if (ben[j] > static_cast<int>(t)) failure("G" + std::to_string(j) + " exceeds its tier");
        }
    ++rep.benefit_checks;
    if (ben[29] != static_cast<int>(tiers.size()) || named[29] != u.top()) failure("the top value does not have benefit 7");
    for (int i = 1; i <= 29; ++i)
        for (int j = 1; j <= 29; ++j) {
            if (!u.leq(named[i], named[j])) continue;
            ++rep.benefit_checks;
            if (ben[i] > ben[j]) failure("benefit is not monotone between values " + std::to_string(i) + " and " + std::to_string(j));
        }

    // Induction step over the named values and all 16 columns.
    for (int i = 1; i <= 29; ++i)
        for (int c = 0; c < 16; ++c) {
            CertificateCase cc;
            cc.value_index = i;
            cc.column = c;
            const GameId v = s.extend(named[i], s.column_value(static_cast<std::uint32_t>(c), 0));
            cc.lhs = s.benefit(v, named);
            cc.rhs = ben[i] + column_cost(std::popcount(static_cast<unsigned>(c)));
            cc.ok = cc.lhs <= cc.rhs;
            ++rep.step_cases;
            if (!cc.ok) {
                ++rep.step_failures;
                failure("step case value " + std::to_string(i) + ", column k" + std::to_string(c));
            }
            rep.steps.push_back(cc);
        }

    // Base case: every width-4 pattern.
    if (base_case) {
        std::vector<GameId> cols(16);
        for (int c = 0; c < 16; ++c) cols[c] = s.column_value(static_cast<std::uint32_t>(c), 0);
        std::function<void(GameId, int, int)> rec = [&](GameId v, int width, int stones) {
            if (width == 4) {
                ++rep.base_cases;
                if (s.benefit(v, named) > pattern_cost(stones, 4)) {
                    ++rep.base_failures;
                    if (rep.base_failures <= 10) failure("base case with " + std::to_string(stones) + " stones");
                    rep.ok = false;
                }
                return;
            }
            for (int c = 0; c < 16; ++c) rec(s.extend(v, cols[c]), width + 1, stones + std::popcount(static_cast<unsigned>(c)));
        };
        rec(s.start_value(), 0, 0);
    }
    return rep;
}

} // namespace cgt
