#include "cgt/algebra.hpp"

#include "cgt/canonical.hpp"

namespace cgt {

namespace {

std::uint64_t pair_key(GameId g, GameId h) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(h);
}

// Shared recursion for sum and sum_map: `atom_of` maps a pair of atom indices
// to an atom of the target universe.
class PairFold {
public:
    PairFold(Universe& a, Universe& b, Universe& target, std::function<int(int, int)> atom_of,
             absl::flat_hash_map<std::uint64_t, GameId>& memo, bool canonical = false)
        : a_(a), b_(b), t_(target), atom_of_(std::move(atom_of)), memo_(memo), canonical_(canonical) {}

    GameId run(GameId g, GameId h) {
        const std::uint64_t key = pair_key(g, h);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        GameId out;
        if (a_.is_atomic(g) && b_.is_atomic(h)) {
            out = t_.atomic(atom_of_(a_.atom_of(g), b_.atom_of(h)));
        } else {
            GameSet l, r;
            for (GameId x : a_.left_set(g)) l.push_back(run(x, h));
            for (GameId y : b_.left_set(h)) l.push_back(run(g, y));
            for (GameId x : a_.right_set(g)) r.push_back(run(x, h));
            for (GameId y : b_.right_set(h)) r.push_back(run(g, y));
            out = t_.compose(std::move(l), std::move(r));
            if (canonical_) out = canonical_form(t_, out);
        }
        memo_.emplace(key, out);
        return out;
    }

private:
    Universe& a_;
    Universe& b_;
    Universe& t_;
    std::function<int(int, int)> atom_of_;
    absl::flat_hash_map<std::uint64_t, GameId>& memo_;
    bool canonical_;
};

void need_game(const Game& g) {
    if (!g.u || g.id < 0 || static_cast<std::size_t>(g.id) >= g.u->num_games())
        fail(ErrorKind::invalid_argument, "game handle is not valid");
}

} // namespace

Game sum(World& w, Game g, Game h) {
    need_game(g);
    need_game(h);
    auto prod = product_poset(g.u->poset_ptr(), h.u->poset_ptr());
    Universe& t = w.universe(prod);
    const int nb = h.u->poset().size();
    absl::flat_hash_map<std::uint64_t, GameId> memo;
    PairFold fold(*g.u, *h.u, t, [nb](int x, int y) { return product_index(x, y, nb); }, memo);
    return Game{&t, fold.run(g.id, h.id)};
}

Game opposite(World& w, Game g) {
    need_game(g);
    Universe& t = w.universe(opposite_poset(g.u->poset_ptr()));
    absl::flat_hash_map<GameId, GameId> memo;
    std::function<GameId(GameId)> rec = [&](GameId x) -> GameId {
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        GameId out;
        if (g.u->is_atomic(x)) {
            out = t.atomic(g.u->atom_of(x));
        } else {
            GameSet l, r;
            for (GameId y : g.u->right_set(x)) l.push_back(rec(y));
            for (GameId y : g.u->left_set(x)) r.push_back(rec(y));
            out = t.compose(std::move(l), std::move(r));
        }
        memo.emplace(x, out);
        return out;
    };
    return Game{&t, rec(g.id)};
}

Game map_game(World& w, const MonotoneMap& f, Game g) {
    need_game(g);
    if (!f.source->same_as(g.u->poset())) fail(ErrorKind::invalid_argument, "map source differs from the game's poset");
    Universe& t = w.universe(f.target);
    absl::flat_hash_map<GameId, GameId> memo;
    std::function<GameId(GameId)> rec = [&](GameId x) -> GameId {
        if (auto it = memo.find(x); it != memo.end()) return it->second;
        GameId out;
        if (g.u->is_atomic(x)) {
            out = t.atomic(f(g.u->atom_of(x)));
        } else {
            GameSet l, r;
            for (GameId y : g.u->left_set(x)) l.push_back(rec(y));
            for (GameId y : g.u->right_set(x)) r.push_back(rec(y));
            out = t.compose(std::move(l), std::move(r));
        }
        memo.emplace(x, out);
        return out;
    };
    return Game{&t, rec(g.id)};
}

Game sum_map(World& w, const MonotoneMap& f, Game g, Game h, SumMapMemo* memo) {
    need_game(g);
    need_game(h);
    const int na = g.u->poset().size(), nb = h.u->poset().size();
    if (f.source->size() != na * nb) fail(ErrorKind::invalid_argument, "map source is not the product poset");
    if (!memo || memo->table.empty()) {
        auto prod = product_poset(g.u->poset_ptr(), h.u->poset_ptr());
        if (!f.source->same_as(*prod)) fail(ErrorKind::invalid_argument, "map source is not the product poset");
    }
    Universe& t = w.universe(f.target);
    SumMapMemo local;
    SumMapMemo& m = memo ? *memo : local;
    PairFold fold(*g.u, *h.u, t, [&f, nb](int x, int y) { return f(product_index(x, y, nb)); }, m.table,
                  m.canonical_positions);
    return Game{&t, fold.run(g.id, h.id)};
}

PosetPtr bool_poset() {
    static const PosetPtr p = linear_poset(2);
    return p;
}

namespace {

MonotoneMap payoff_on_square(const PosetPtr& a, bool left_favoured) {
    auto op = opposite_poset(a);
    auto prod = product_poset(a, op);
    const int n = a->size();
    std::vector<int> table(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            bool top = left_favoured ? a->leq(y, x) : !a->leq(x, y);
            table[product_index(x, y, n)] = top ? 1 : 0;
        }
    return make_monotone_map(prod, bool_poset(), table);
}

} // namespace

MonotoneMap lambda_map(const PosetPtr& a) { return payoff_on_square(a, true); }
MonotoneMap rho_map(const PosetPtr& a) { return payoff_on_square(a, false); }

CheckReport copycat_check(World& w, Game g, const std::vector<GameId>& probes) {
    need_game(g);
    if (!g.u->is_passable(g.id)) fail(ErrorKind::precondition, "copycat_check needs a passable game");
    CheckReport rep;
    const PosetPtr& a = g.u->poset_ptr();
    auto lam = lambda_map(a);
    auto rho = rho_map(a);
    Game gop = opposite(w, g);
    Universe& b = w.universe(bool_poset());
    const GameId top = b.top(), bot = b.bottom();
    const std::string name = print_game(*g.u, g.id);
    Game x = sum_map(w, lam, g, gop);
    rep.expect(b.equivalent(x.id, top), "G +lambda G^op is not equivalent to T for G = " + name);
    Game y = sum_map(w, rho, g, gop);
    rep.expect(b.equivalent(y.id, bot), "G +rho G^op is not equivalent to B for G = " + name);
    for (GameId hid : probes) {
        Game h{g.u, hid};
        Game z = sum_map(w, lam, h, gop);
        Game hop = opposite(w, h);
        Game v = sum_map(w, rho, g, hop);
        const std::string hn = print_game(*g.u, hid);
        const bool le = g.u->leq(g.id, hid), tr = g.u->tri(g.id, hid);
        rep.expect(le == b.leq(top, z.id), "leq(G,H) vs T <= H +lambda G^op for G = " + name + ", H = " + hn);
        rep.expect(le == b.leq(v.id, bot), "leq(G,H) vs G +rho H^op <= B for G = " + name + ", H = " + hn);
        rep.expect(tr == b.tri(top, z.id), "tri(G,H) vs T tri H +lambda G^op for G = " + name + ", H = " + hn);
        rep.expect(tr == b.tri(v.id, bot), "tri(G,H) vs G +rho H^op tri B for G = " + name + ", H = " + hn);
    }
    return rep;
}

bool is_strict_context(const Universe& a, const Context& c) {
    const Poset& pa = a.poset();
    if (!pa.has_top() || !pa.has_bottom()) return false;
    const int nb = c.poset->size();
    for (int y = 0; y < nb; ++y) {
        if (c.payoff(product_index(pa.top_atom(), y, nb)) != 1) return false;
        if (c.payoff(product_index(pa.bottom_atom(), y, nb)) != 0) return false;
    }
    return true;
}

CheckReport contextual_probe(World& w, Game g, Game h, const std::vector<Context>& contexts) {
    need_game(g);
    need_game(h);
    if (g.u != h.u) fail(ErrorKind::invalid_argument, "contextual_probe needs games over one poset");
    CheckReport rep;
    const bool le = g.u->leq(g.id, h.id), tr = g.u->tri(g.id, h.id);
    Universe& b = w.universe(bool_poset());
    const GameId top = b.top();
    for (std::size_t i = 0; i < contexts.size(); ++i) {
        const Context& c = contexts[i];
        Universe& cu = w.universe(c.poset);
        if (!cu.is_passable(c.game)) fail(ErrorKind::precondition, "context game is not passable");
        Game k{&cu, c.game};
        GameId x = sum_map(w, c.payoff, g, k).id;
        GameId y = sum_map(w, c.payoff, h, k).id;
        const bool first_x = b.tri(top, x), first_y = b.tri(top, y);
        const bool second_x = b.leq(top, x), second_y = b.leq(top, y);
        const std::string tag = "context " + std::to_string(i);
        if (le) {
            rep.expect(!first_x || first_y, tag + ": first-player win not transferred although G <= H");
            rep.expect(!second_x || second_y, tag + ": second-player win not transferred although G <= H");
        }
        if (tr) rep.expect(!second_x || first_y, tag + ": second-player win in G without first-player win in H");
    }
    return rep;
}

PosetPtr bool_cube_poset(int cells) {
    if (cells < 0 || cells > 12) fail(ErrorKind::size_limit, "set coloring games support at most 12 cells");
    PosetPtr p = linear_poset(1);
    if (cells == 0) return p;
    p = bool_poset();
    for (int i = 1; i < cells; ++i) p = product_poset(p, bool_poset());
    return p;
}

GameId set_coloring_value(World& w, int cells, const MonotoneMap& payoff) {
    auto cube = bool_cube_poset(cells);
    if (!payoff.source->same_as(*cube)) fail(ErrorKind::invalid_argument, "payoff source is not the assignment poset");
    Universe& t = w.universe(payoff.target);
    if (cells == 0) return t.atomic(payoff(0));
    Universe& bu = w.universe(bool_poset());
    Game star{&bu, bu.compose({bu.top()}, {bu.bottom()})};
    Game acc = star;
    for (int i = 1; i < cells; ++i) acc = sum(w, acc, star);
    Game mapped = map_game(w, payoff, acc);
    return canonical_form(t, mapped.id);
}

GameId set_coloring_direct(Universe& target, int cells, const std::function<int(std::uint32_t)>& payoff) {
    if (cells < 0 || cells > 12) fail(ErrorKind::size_limit, "set coloring games support at most 12 cells");
    absl::flat_hash_map<std::uint64_t, GameId> memo;
    const std::uint32_t all = (cells == 32) ? ~0u : ((1u << cells) - 1);
    std::function<GameId(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t colored, std::uint32_t black) {
        const std::uint64_t key = (static_cast<std::uint64_t>(colored) << 32) | black;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        GameId out;
        if (colored == all) {
            out = target.atomic(payoff(black));
        } else {
            GameSet l, r;
            for (int c = 0; c < cells; ++c) {
                const std::uint32_t bit = 1u << c;
                if (colored & bit) continue;
                l.push_back(rec(colored | bit, black | bit));
                r.push_back(rec(colored | bit, black));
            }
            out = canonical_form(target, target.compose(std::move(l), std::move(r)));
        }
        memo.emplace(key, out);
        return out;
    };
    return rec(0, 0);
}

} // namespace cgt
