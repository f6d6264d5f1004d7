#include "cgt/monotone.hpp"

#include <algorithm>

#include "cgt/lr_equiv.hpp"

namespace cgt {

namespace {

void need_passable(Universe& u, GameId g) {
    if (!u.poset().has_top() || !u.poset().has_bottom())
        fail(ErrorKind::unsupported_poset, "monotone construction needs a poset with top and bottom");
    if (!u.is_passable(g)) fail(ErrorKind::precondition, "input game is not passable: " + print_game(u, g));
}

GameId semi_rec(Universe& u, GameId g, absl::flat_hash_map<GameId, GameId>& memo) {
    if (u.is_atomic(g)) return g;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    GameSet l = u.left_set(g), r = u.right_set(g);
    for (GameId& x : l) x = semi_rec(u, x, memo);
    for (GameId& x : r) x = semi_rec(u, x, memo);
    GameId cur = u.compose(l, r);
    GameId good_l = -1, good_r = -1;
    for (GameId x : u.left_set(cur))
        if (good_l < 0 && u.leq(cur, x)) good_l = x;
    for (GameId x : u.right_set(cur))
        if (good_r < 0 && u.leq(x, cur)) good_r = x;
    if (good_l >= 0 && good_r < 0) {
        r.push_back(u.compose({good_l}, {u.bottom()}));
        cur = u.compose(l, r);
    } else if (good_r >= 0 && good_l < 0) {
        l.push_back(u.compose({u.top()}, {good_r}));
        cur = u.compose(l, r);
    } else if (good_l < 0 && good_r < 0) {
        fail(ErrorKind::internal_consistency, "passable position without a good option: " + print_game(u, cur));
    }
    memo[g] = cur;
    return cur;
}

GameId mono_rec(Universe& u, GameId g, absl::flat_hash_map<GameId, GameId>& memo) {
    if (u.is_monotone(g)) return g;
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    GameSet l = u.left_set(g), r = u.right_set(g);
    GameSet up, down;
    for (GameId x : l) up.push_back(upl(u, {mono_rec(u, x, memo)}));
    for (GameId x : r) down.push_back(downr(u, {mono_rec(u, x, memo)}));
    normalize_set(up);
    normalize_set(down);
    GameId out = u.compose({upl(u, up)}, {downr(u, down)});
    memo[g] = out;
    return out;
}

} // namespace

GameId to_semi_monotone(Universe& u, GameId g) {
    need_passable(u, g);
    absl::flat_hash_map<GameId, GameId> memo;
    return semi_rec(u, g, memo);
}

GameId to_monotone(Universe& u, GameId g) {
    need_passable(u, g);
    if (u.is_monotone(g)) return g;
    GameId s = to_semi_monotone(u, g);
    absl::flat_hash_map<GameId, GameId> memo;
    return mono_rec(u, s, memo);
}

GameId clique_embed(Universe& u, const GameSet& s, bool as_left, ClassLevel level) {
    if (s.empty()) fail(ErrorKind::invalid_argument, "clique_embed needs a non-empty set");
    for (GameId x : s) {
        bool ok = level == ClassLevel::monotone        ? u.is_monotone(x)
                  : level == ClassLevel::semi_monotone ? u.is_semi_monotone(x)
                                                       : u.is_passable(x);
        if (!ok) fail(ErrorKind::precondition, "clique member lacks the requested property: " + print_game(u, x));
    }
    for (GameId x : s)
        for (GameId y : s)
            if (!u.tri(x, y)) fail(ErrorKind::precondition, "set is not a tri-clique");
    return as_left ? u.compose(s, {u.bottom()}) : u.compose({u.top()}, s);
}

GameId shrink_monotone(Universe& u, GameId g) {
    if (!u.is_monotone(g)) fail(ErrorKind::precondition, "shrink_monotone needs a monotone game");
    if (u.is_atomic(g)) return g;
    GameSet l = u.left_set(g), r = u.right_set(g);
    for (GameId& x : l) x = shrink_monotone(u, x);
    for (GameId& x : r) x = shrink_monotone(u, x);
    normalize_set(l);
    normalize_set(r);
    GameId cur = u.compose(l, r);
    bool changed = true;
    while (changed) {
        changed = false;
        auto try_accept = [&](GameSet nl, GameSet nr) {
            if (nl.empty() || nr.empty()) return false;
            GameId cand = u.compose(std::move(nl), std::move(nr));
            if (cand == cur || !u.is_monotone(cand) || !u.equivalent(cand, cur)) return false;
            cur = cand;
            l = u.left_set(cur);
            r = u.right_set(cur);
            return true;
        };
        for (std::size_t i = 0; i < l.size() && !changed; ++i)
            for (std::size_t j = 0; j < l.size() && !changed; ++j)
                if (i != j && u.leq(l[i], l[j])) {
                    GameSet nl = l;
                    nl.erase(nl.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = try_accept(nl, r);
                }
        for (std::size_t i = 0; i < r.size() && !changed; ++i)
            for (std::size_t j = 0; j < r.size() && !changed; ++j)
                if (i != j && u.leq(r[j], r[i])) {
                    GameSet nr = r;
                    nr.erase(nr.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = try_accept(l, nr);
                }
        for (std::size_t i = 0; i < l.size() && !changed; ++i) {
            if (u.is_atomic(l[i])) continue;
            for (GameId k : u.right_set(l[i])) {
                if (changed || !u.leq(k, cur)) continue;
                GameSet nl = l;
                nl.erase(nl.begin() + static_cast<std::ptrdiff_t>(i));
                if (u.is_atomic(k)) nl.push_back(k);
                else for (GameId y : u.left_set(k)) nl.push_back(y);
                changed = try_accept(nl, r);
            }
        }
        for (std::size_t i = 0; i < r.size() && !changed; ++i) {
            if (u.is_atomic(r[i])) continue;
            for (GameId k : u.left_set(r[i])) {
                if (changed || !u.leq(cur, k)) continue;
                GameSet nr = r;
                nr.erase(nr.begin() + static_cast<std::ptrdiff_t>(i));
                if (u.is_atomic(k)) nr.push_back(k);
                else for (GameId y : u.right_set(k)) nr.push_back(y);
                changed = try_accept(l, nr);
            }
        }
    }
    return cur;
}

} // namespace cgt
