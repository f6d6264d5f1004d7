#include "cgt/enumerate.hpp"

#include <algorithm>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>
#include <absl/hash/hash.h>

namespace cgt {

namespace {

using Row = std::vector<std::uint64_t>;
using IndexSet = std::vector<int>;

bool test_bit(const Row& r, int j) { return (r[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u; }
void set_bit(Row& r, int j) { r[static_cast<std::size_t>(j) >> 6] |= 1ull << (j & 63); }

// Catalog of canonical passable values with dense relation bitsets, plus
// memoized evaluation of the four relations between every catalog value and
// one candidate game {L | R} whose options are catalog values.
class Engine {
public:
    explicit Engine(const Poset& p) : poset_(p) {}

    int size() const { return static_cast<int>(atom_.size()); }
    int depth(int g) const { return depth_[g]; }
    int atom(int g) const { return atom_[g]; }
    const IndexSet& left(int g) const { return l_[g]; }
    const IndexSet& right(int g) const { return r_[g]; }
    bool leq(int x, int y) const { return test_bit(leq_up_[x], y); }
    std::uint64_t bitset_bytes() const { return 4ull * atom_.size() * static_cast<std::uint64_t>(words_) * 8ull; }

    void add_atom(int a) {
        const int g = grow();
        atom_.push_back(a);
        l_.emplace_back();
        r_.emplace_back();
        depth_.push_back(0);
        for (int x = 0; x <= g; ++x) {
            if (atom_[x] < 0) continue;
            if (poset_.leq(atom_[x], a)) link_leq(x, g), link_tri(x, g);
            if (poset_.leq(a, atom_[x])) link_leq(g, x), link_tri(g, x);
        }
    }

    void add_composite(const IndexSet& l, const IndexSet& r) {
        int d = 0;
        for (int x : l) d = std::max(d, depth_[x] + 1);
        for (int x : r) d = std::max(d, depth_[x] + 1);
        begin(l, r);
        const int n = size();
        std::vector<char> a(n), b(n), c(n), e(n);
        for (int x = 0; x < n; ++x) {
            a[x] = u_leq(x);
            b[x] = d_leq(x);
            c[x] = u_tri(x);
            e[x] = d_tri(x);
        }
        const int g = grow();
        atom_.push_back(-1);
        l_.push_back(l);
        r_.push_back(r);
        depth_.push_back(d);
        for (int x = 0; x < n; ++x) {
            if (a[x]) link_leq(x, g);
            if (b[x]) link_leq(g, x);
            if (c[x]) link_tri(x, g);
            if (e[x]) link_tri(g, x);
        }
        link_leq(g, g);
        link_tri(g, g);
    }

    // Starts a new candidate; the vectors must outlive the queries and may be
    // replaced by equivalent option sets in between.
    void begin(const IndexSet& l, const IndexSet& r) {
        cl_ = &l;
        cr_ = &r;
        if (++epoch_ == 0) {
            for (auto& s : stamp_) std::fill(s.begin(), s.end(), 0);
            epoch_ = 1;
        }
        const std::size_t n = atom_.size();
        for (int k = 0; k < 4; ++k) {
            if (stamp_[k].size() < n) {
                stamp_[k].resize(n, 0);
                value_[k].resize(n, 0);
            }
        }
    }

    // x <= G
    bool u_leq(int x) {
        if (stamp_[0][x] == epoch_) return value_[0][x];
        bool res = true;
        for (int r : *cr_)
            if (!test_bit(tri_up_[x], r)) {
                res = false;
                break;
            }
        if (res)
            for (int xl : l_[x])
                if (!u_tri(xl)) {
                    res = false;
                    break;
                }
        if (res && atom_[x] >= 0) res = u_tri(x);
        stamp_[0][x] = epoch_;
        value_[0][x] = res;
        return res;
    }

    // y tri G
    bool u_tri(int y) {
        if (stamp_[1][y] == epoch_) return value_[1][y];
        bool res = false;
        for (int l : *cl_)
            if (test_bit(leq_up_[y], l)) {
                res = true;
                break;
            }
        if (!res)
            for (int yr : r_[y])
                if (u_leq(yr)) {
                    res = true;
                    break;
                }
        stamp_[1][y] = epoch_;
        value_[1][y] = res;
        return res;
    }

    // G <= x
    bool d_leq(int x) {
        if (stamp_[2][x] == epoch_) return value_[2][x];
        bool res = true;
        for (int l : *cl_)
            if (!test_bit(tri_dn_[x], l)) {
                res = false;
                break;
            }
        if (res)
            for (int xr : r_[x])
                if (!d_tri(xr)) {
                    res = false;
                    break;
                }
        if (res && atom_[x] >= 0) res = d_tri(x);
        stamp_[2][x] = epoch_;
        value_[2][x] = res;
        return res;
    }

    // G tri y
    bool d_tri(int y) {
        if (stamp_[3][y] == epoch_) return value_[3][y];
        bool res = false;
        for (int r : *cr_)
            if (test_bit(leq_dn_[y], r)) {
                res = true;
                break;
            }
        if (!res)
            for (int yl : l_[y])
                if (d_leq(yl)) {
                    res = true;
                    break;
                }
        stamp_[3][y] = epoch_;
        value_[3][y] = res;
        return res;
    }

private:
    int grow() {
        const int g = size();
        if (g + 1 > words_ * 64) {
            ++words_;
            for (auto* rows : {&leq_up_, &leq_dn_, &tri_up_, &tri_dn_})
                for (auto& row : *rows) row.push_back(0);
        }
        for (auto* rows : {&leq_up_, &leq_dn_, &tri_up_, &tri_dn_}) rows->emplace_back(words_, 0);
        return g;
    }

    void link_leq(int x, int y) {
        set_bit(leq_up_[x], y);
        set_bit(leq_dn_[y], x);
    }
    void link_tri(int x, int y) {
        set_bit(tri_up_[x], y);
        set_bit(tri_dn_[y], x);
    }

    const Poset& poset_;
    std::vector<int> atom_;
    std::vector<IndexSet> l_, r_;
    std::vector<int> depth_;
    int words_ = 0;
    // leq_up[x] = {y : x <= y}, leq_dn[x] = {y : y <= x}; same for tri.
    std::vector<Row> leq_up_, leq_dn_, tri_up_, tri_dn_;

    const IndexSet* cl_ = nullptr;
    const IndexSet* cr_ = nullptr;
    std::uint32_t epoch_ = 0;
    std::vector<std::uint32_t> stamp_[4];
    std::vector<std::uint8_t> value_[4];
};

struct ClassTable {
    std::vector<IndexSet> reps;
    std::vector<int> rep_depth;
    std::vector<Row> sigs;
};

// Left signature D(S) = {x : x tri {S | bottom}}; right signature
// E(S) = {x : {top | S} tri x}. Equal signatures mean equivalent sets.
Row signature(Engine& e, const IndexSet& s, bool left_side, int top, int bottom) {
    IndexSet other{left_side ? bottom : top};
    if (left_side) e.begin(s, other);
    else e.begin(other, s);
    const int n = e.size();
    Row sig(static_cast<std::size_t>((n + 63) / 64), 0);
    for (int x = 0; x < n; ++x)
        if (left_side ? e.u_tri(x) : e.d_tri(x)) set_bit(sig, x);
    return sig;
}

ClassTable build_classes(Engine& e, bool left_side, int top, int bottom) {
    ClassTable t;
    absl::flat_hash_set<Row, absl::Hash<Row>> seen;
    const int n = e.size();
    for (int g = 0; g < n; ++g) {
        const std::size_t existing = t.reps.size();
        auto consider = [&](IndexSet s, int d) {
            Row sig = signature(e, s, left_side, top, bottom);
            if (!seen.insert(sig).second) return;
            t.reps.push_back(std::move(s));
            t.rep_depth.push_back(d);
            t.sigs.push_back(std::move(sig));
        };
        consider(IndexSet{g}, e.depth(g));
        for (std::size_t i = 0; i < existing; ++i) {
            // g already absorbed by the class: adding it changes nothing.
            if (test_bit(t.sigs[i], g)) continue;
            IndexSet grown = t.reps[i];
            grown.push_back(g);
            consider(std::move(grown), std::max(t.rep_depth[i], e.depth(g)));
        }
    }
    return t;
}

void replace_option(IndexSet& side, std::size_t pos, const IndexSet& repl) {
    side.erase(side.begin() + static_cast<std::ptrdiff_t>(pos));
    side.insert(side.end(), repl.begin(), repl.end());
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
}

// Reduces the candidate to canonical form in place. Returns false when a
// passing option shows the value is already in the catalog.
bool canonicalize(Engine& e, IndexSet& l, IndexSet& r) {
    while (true) {
        for (int h : l)
            if (e.u_leq(h) && e.d_leq(h)) return false;
        for (int h : r)
            if (e.u_leq(h) && e.d_leq(h)) return false;
        bool removed = false;
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = 0; j < l.size(); ++j)
                if (i != j && e.leq(l[i], l[j])) {
                    l.erase(l.begin() + static_cast<std::ptrdiff_t>(i));
                    removed = true;
                    --i;
                    break;
                }
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j)
                if (i != j && e.leq(r[j], r[i])) {
                    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
                    removed = true;
                    --i;
                    break;
                }
        if (removed) continue;
        bool bypassed = false;
        for (std::size_t i = 0; i < l.size() && !bypassed; ++i) {
            const int h = l[i];
            if (e.atom(h) >= 0) continue;
            for (int k : e.right(h))
                if (e.u_leq(k)) {
                    replace_option(l, i, e.atom(k) >= 0 ? IndexSet{k} : e.left(k));
                    bypassed = true;
                    break;
                }
        }
        for (std::size_t i = 0; i < r.size() && !bypassed; ++i) {
            const int h = r[i];
            if (e.atom(h) >= 0) continue;
            for (int k : e.left(h))
                if (e.d_leq(k)) {
                    replace_option(r, i, e.atom(k) >= 0 ? IndexSet{k} : e.right(k));
                    bypassed = true;
                    break;
                }
        }
        if (!bypassed) return true;
    }
}

struct PairKeyHash {
    std::size_t operator()(const std::pair<IndexSet, IndexSet>& p) const {
        return absl::Hash<std::pair<IndexSet, IndexSet>>()(p);
    }
};

} // namespace

int ValueCatalog::index_of(GameId g) const {
    auto it = std::find(games.begin(), games.end(), g);
    return it == games.end() ? -1 : static_cast<int>(it - games.begin());
}

ValueCatalog enumerate_canonical_passable(Universe& u, const EnumerateOptions& opt) {
    const Poset& p = u.poset();
    if (!p.has_top() || !p.has_bottom())
        fail(ErrorKind::unsupported_poset, "enumeration needs a poset with top and bottom");
    if (opt.max_depth < 0) fail(ErrorKind::invalid_argument, "depth must be non-negative");
    ValueCatalog cat;
    cat.poset = u.poset_ptr();
    Engine e(p);
    for (int a = 0; a < p.size(); ++a) e.add_atom(a);
    cat.per_depth.push_back(static_cast<std::uint64_t>(p.size()));
    const int top = p.top_atom(), bottom = p.bottom_atom();

    for (int d = 0; d < opt.max_depth && cat.complete; ++d) {
        ClassTable lc = build_classes(e, true, top, bottom);
        ClassTable rc = build_classes(e, false, top, bottom);
        cat.left_reps_per_step.push_back(lc.reps.size());
        cat.right_reps_per_step.push_back(rc.reps.size());
        std::vector<std::pair<IndexSet, IndexSet>> found;
        absl::flat_hash_set<std::pair<IndexSet, IndexSet>, PairKeyHash> keys;
        IndexSet l, r;
        for (std::size_t i = 0; i < lc.reps.size() && cat.complete; ++i) {
            for (std::size_t j = 0; j < rc.reps.size(); ++j) {
                if (std::max(lc.rep_depth[i], rc.rep_depth[j]) != d) continue;
                if (opt.budget_candidates && cat.candidates >= opt.budget_candidates) {
                    cat.complete = false;
                    cat.incomplete_reason = "candidate budget exhausted at depth " + std::to_string(d + 1);
                    break;
                }
                ++cat.candidates;
                l = lc.reps[i];
                r = rc.reps[j];
                e.begin(l, r);
                bool passable = false;
                for (int x : r)
                    if (e.u_leq(x)) {
                        passable = true;
                        break;
                    }
                if (!passable)
                    for (int x : l)
                        if (e.d_leq(x)) {
                            passable = true;
                            break;
                        }
                if (!passable || !canonicalize(e, l, r)) continue;
                int depth = 0;
                for (int x : l) depth = std::max(depth, e.depth(x) + 1);
                for (int x : r) depth = std::max(depth, e.depth(x) + 1);
                if (depth != d + 1) continue;
                if (keys.insert({l, r}).second) found.emplace_back(l, r);
            }
        }
        if (!cat.complete) break;
        std::uint64_t added = 0;
        for (const auto& [fl, fr] : found) {
            if (opt.budget_values && static_cast<std::uint64_t>(e.size()) >= opt.budget_values) {
                cat.complete = false;
                cat.incomplete_reason = "value budget exhausted at depth " + std::to_string(d + 1);
                break;
            }
            if (opt.budget_mb && e.bitset_bytes() > opt.budget_mb * 1024ull * 1024ull) {
                cat.complete = false;
                cat.incomplete_reason = "memory budget exhausted at depth " + std::to_string(d + 1);
                break;
            }
            e.add_composite(fl, fr);
            ++added;
        }
        cat.per_depth.push_back(added);
    }

    const int n = e.size();
    cat.games.reserve(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
        if (e.atom(g) >= 0) {
            cat.games.push_back(u.atomic(e.atom(g)));
            cat.depth.push_back(0);
            continue;
        }
        GameSet l, r;
        for (int x : e.left(g)) l.push_back(cat.games[x]);
        for (int x : e.right(g)) r.push_back(cat.games[x]);
        cat.games.push_back(u.compose(std::move(l), std::move(r)));
        cat.depth.push_back(e.depth(g));
    }
    cat.leq.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cat.leq[i][j] = e.leq(i, j);
    for (bool left_side : {true, false}) {
        absl::flat_hash_map<Row, int, absl::Hash<Row>> ids;
        auto& out = left_side ? cat.left_class : cat.right_class;
        for (int g = 0; g < n; ++g) {
            Row sig = signature(e, IndexSet{g}, left_side, top, bottom);
            auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
            out.push_back(it->second);
        }
    }
    return cat;
}

std::vector<std::pair<int, int>> hasse(const ValueCatalog& cat) {
    const int n = static_cast<int>(cat.games.size());
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !cat.leq[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && cat.leq[a][c] && cat.leq[c][b]) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

std::vector<GameId> increasing_chain(Universe& u, int n) {
    const Poset& p = u.poset();
    int a = -1, b = -1;
    for (int x = 0; x < p.size() && a < 0; ++x)
        for (int y = x + 1; y < p.size(); ++y)
            if (!p.comparable(x, y)) {
                a = x;
                b = y;
                break;
            }
    if (a < 0) fail(ErrorKind::precondition, "increasing_chain needs two incomparable atoms");
    if (n < 0) fail(ErrorKind::invalid_argument, "chain length must be non-negative");
    const GameId ga = u.atomic(a), gb = u.atomic(b);
    std::vector<GameId> chain{ga};
    for (int k = 1; k <= n; ++k) chain.push_back(u.compose({ga, gb}, {chain.back()}));
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (!u.is_passable(chain[k])) fail(ErrorKind::property_violation, "chain element is not passable");
        if (k > 0 && (!u.leq(chain[k - 1], chain[k]) || u.leq(chain[k], chain[k - 1])))
            fail(ErrorKind::property_violation, "chain is not strictly increasing at step " + std::to_string(k));
    }
    return chain;
}

} // namespace cgt
