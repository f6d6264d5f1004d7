#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/algebra.hpp"
#include "cgt/canonical.hpp"
#include "cgt/game.hpp"
#include "cgt/poset.hpp"

#ifndef CGT_DATA_DIR
#define CGT_DATA_DIR "data"
#endif

namespace testing {

inline std::string data_path(const std::string& rel) { return std::string(CGT_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Golden catalog file: "value G<i> <expr>", "hasse G<i> G<j>",
// "left-class G.. ", "right-class G..".
struct Golden {
    std::vector<std::string> values;
    std::set<std::pair<int, int>> hasse;
    std::vector<std::vector<int>> left_classes, right_classes;
};

inline int golden_index(const std::string& name) { return std::stoi(name.substr(1)); }

inline Golden load_golden(const std::string& file) {
    Golden g;
    std::istringstream in(slurp(data_path("golden/" + file)));
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw) || kw[0] == '#') continue;
        if (kw == "value") {
            std::string name, expr;
            ls >> name >> expr;
            const int i = golden_index(name);
            if (static_cast<int>(g.values.size()) <= i) g.values.resize(i + 1);
            g.values[i] = expr;
        } else if (kw == "hasse") {
            std::string a, b;
            ls >> a >> b;
            g.hasse.emplace(golden_index(a), golden_index(b));
        } else if (kw == "left-class" || kw == "right-class") {
            std::vector<int> cls;
            std::string n;
            while (ls >> n) cls.push_back(golden_index(n));
            std::sort(cls.begin(), cls.end());
            (kw == "left-class" ? g.left_classes : g.right_classes).push_back(cls);
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Tree-shaped games with a direct, unshared evaluation of the two order
// relations, used as an oracle for the interned and memoized engine.

struct TreeGame {
    int atom = -1;
    std::vector<std::shared_ptr<const TreeGame>> left, right;
};
using TreePtr = std::shared_ptr<const TreeGame>;

inline TreePtr tree_atom(int a) {
    auto t = std::make_shared<TreeGame>();
    t->atom = a;
    return t;
}

inline TreePtr tree_compose(std::vector<TreePtr> l, std::vector<TreePtr> r) {
    auto t = std::make_shared<TreeGame>();
    t->left = std::move(l);
    t->right = std::move(r);
    return t;
}

class TreeOracle {
public:
    explicit TreeOracle(const cgt::Poset& p) : p_(p) {}

    bool leq(const TreeGame* g, const TreeGame* h) {
        auto key = std::make_tuple(0, g, h);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = true;
        for (const auto& gl : g->left) r = r && tri(gl.get(), h);
        for (const auto& hr : h->right) r = r && tri(g, hr.get());
        if (r && (g->atom >= 0 || h->atom >= 0)) r = tri(g, h);
        memo_[key] = r;
        return r;
    }

    bool tri(const TreeGame* g, const TreeGame* h) {
        auto key = std::make_tuple(1, g, h);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = false;
        for (const auto& gr : g->right) r = r || leq(gr.get(), h);
        for (const auto& hl : h->left) r = r || leq(g, hl.get());
        if (g->atom >= 0 && h->atom >= 0 && p_.leq(g->atom, h->atom)) r = true;
        memo_[key] = r;
        return r;
    }

private:
    const cgt::Poset& p_;
    std::map<std::tuple<int, const TreeGame*, const TreeGame*>, bool> memo_;
};

inline cgt::GameId intern_tree(cgt::Universe& u, const TreeGame& t) {
    if (t.atom >= 0) return u.atomic(t.atom);
    cgt::GameSet l, r;
    for (const auto& x : t.left) l.push_back(intern_tree(u, *x));
    for (const auto& x : t.right) r.push_back(intern_tree(u, *x));
    return u.compose(std::move(l), std::move(r));
}

// Random games of bounded depth with 1..max_options options per side.
class RandomGames {
public:
    RandomGames(std::uint32_t seed, int atoms) : rng_(seed), atoms_(atoms) {}

    TreePtr tree(int depth, int max_options = 3) {
        std::uniform_int_distribution<int> coin(0, 99);
        if (depth == 0 || coin(rng_) < 25) return tree_atom(pick(atoms_));
        std::vector<TreePtr> l, r;
        const int nl = 1 + pick(max_options), nr = 1 + pick(max_options);
        for (int i = 0; i < nl; ++i) l.push_back(tree(depth - 1, max_options));
        for (int i = 0; i < nr; ++i) r.push_back(tree(depth - 1, max_options));
        return tree_compose(std::move(l), std::move(r));
    }

    cgt::GameId game(cgt::Universe& u, int depth, int max_options = 3) { return intern_tree(u, *tree(depth, max_options)); }

    // A composite game whose options are drawn from `pool`.
    cgt::GameId compose_from(cgt::Universe& u, const std::vector<cgt::GameId>& pool, int max_options = 3) {
        cgt::GameSet l, r;
        const int nl = 1 + pick(max_options), nr = 1 + pick(max_options);
        for (int i = 0; i < nl; ++i) l.push_back(pool[pick(static_cast<int>(pool.size()))]);
        for (int i = 0; i < nr; ++i) r.push_back(pool[pick(static_cast<int>(pool.size()))]);
        return u.compose(std::move(l), std::move(r));
    }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
    int atoms_;
};

// ---------------------------------------------------------------------------
// Enumeration without the left/right class acceleration: every pair of
// non-empty subsets of the values found so far is tried as {L | R}.

inline std::set<std::string> naive_passable_values(cgt::Universe& u, int max_depth) {
    std::vector<cgt::GameId> values;
    for (int a = 0; a < u.poset().size(); ++a) values.push_back(u.atomic(a));
    auto known = [&](cgt::GameId g) {
        for (cgt::GameId v : values)
            if (u.equivalent(v, g)) return true;
        return false;
    };
    for (int d = 1; d <= max_depth; ++d) {
        const std::vector<cgt::GameId> base = values;
        const std::uint32_t n = static_cast<std::uint32_t>(base.size());
        std::vector<cgt::GameSet> subsets;
        for (std::uint32_t m = 1; m < (1u << n); ++m) {
            cgt::GameSet s;
            for (std::uint32_t i = 0; i < n; ++i)
                if ((m >> i) & 1) s.push_back(base[i]);
            subsets.push_back(s);
        }
        for (const auto& l : subsets)
            for (const auto& r : subsets) {
                const cgt::GameId g = u.compose(l, r);
                if (!u.is_passable(g)) continue;
                if (!known(g)) values.push_back(cgt::canonical_form(u, g));
            }
    }
    std::set<std::string> out;
    for (cgt::GameId v : values) out.insert(cgt::print_game(u, cgt::canonical_form(u, v)));
    return out;
}

// ---------------------------------------------------------------------------
// Whole-board Hex minimax on a k x n strip (Black joins left and right,
// White joins top and bottom; White moves first). Cells are indexed
// (c-1)*k + (r-1).

class StripMinimax {
public:
    StripMinimax(int k, int n) : k_(k), n_(n) {}

    bool black_connects(std::uint64_t black) const {
        std::vector<char> seen(k_ * n_, 0);
        std::vector<int> stack;
        for (int r = 0; r < k_; ++r)
            if ((black >> r) & 1) {
                seen[r] = 1;
                stack.push_back(r);
            }
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            const int c = x / k_, r = x % k_;
            if (c == n_ - 1) return true;
            const int d[6][2] = {{0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, -1}, {-1, 1}};
            for (auto& e : d) {
                const int rr = r + e[0], cc = c + e[1];
                if (rr < 0 || rr >= k_ || cc < 0 || cc >= n_) continue;
                const int y = cc * k_ + rr;
                if (!seen[y] && ((black >> y) & 1)) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    // Black wins with `black` already placed, White to move.
    bool black_wins(std::uint64_t black, std::uint64_t white, bool white_to_move) {
        const std::uint64_t all = (std::uint64_t{1} << (k_ * n_)) - 1;
        if ((black | white) == all) return black_connects(black);
        auto it = memo_.find({black, white, white_to_move});
        if (it != memo_.end()) return it->second;
        bool res = white_to_move;
        for (int x = 0; x < k_ * n_; ++x) {
            const std::uint64_t bit = std::uint64_t{1} << x;
            if ((black | white) & bit) continue;
            const bool r = white_to_move ? black_wins(black, white | bit, false) : black_wins(black | bit, white, true);
            if (white_to_move && !r) {
                res = false;
                break;
            }
            if (!white_to_move && r) {
                res = true;
                break;
            }
        }
        memo_[{black, white, white_to_move}] = res;
        return res;
    }

    // Fewest black stones that give Black a win with White moving first.
    int min_stones() {
        const int cells = k_ * n_;
        for (int s = 0; s <= cells; ++s) {
            std::vector<int> pick(s);
            std::function<bool(int, int, std::uint64_t)> rec = [&](int from, int left, std::uint64_t black) {
                if (left == 0) return black_wins(black, 0, true);
                for (int x = from; x < cells; ++x)
                    if (rec(x + 1, left - 1, black | (std::uint64_t{1} << x))) return true;
                return false;
            };
            if (rec(0, s, 0)) return s;
        }
        return -1;
    }

private:
    int k_, n_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, bool>, bool> memo_;
};

inline int ceil_div3(int num) {
    // ceil(num / 3) for any sign.
    return num >= 0 ? (num + 2) / 3 : -((-num) / 3);
}

} // namespace testing
