#include "cgt/lr_equiv.hpp"

#include "cgt/canonical.hpp"

namespace cgt {

namespace {

void need_bottom(const Universe& u) {
    if (!u.poset().has_bottom()) fail(ErrorKind::unsupported_poset, "left order needs a poset with a bottom");
}

void need_top(const Universe& u) {
    if (!u.poset().has_top()) fail(ErrorKind::unsupported_poset, "right order needs a poset with a top");
}

void need_nonempty(const GameSet& s) {
    if (s.empty()) fail(ErrorKind::invalid_argument, "game sets must be non-empty");
}

std::vector<GameSet> classes(Universe& u, const GameSet& games, bool left_side) {
    std::vector<GameSet> reps;
    absl::flat_hash_set<GameId> keys;
    auto key = [&](const GameSet& s) { return left_side ? left_key(u, s) : right_key(u, s); };
    for (GameId g : games) {
        std::size_t existing = reps.size();
        GameSet single{g};
        if (keys.insert(key(single)).second) reps.push_back(single);
        for (std::size_t i = 0; i < existing; ++i) {
            GameSet grown = reps[i];
            grown.push_back(g);
            normalize_set(grown);
            if (keys.insert(key(grown)).second) reps.push_back(std::move(grown));
        }
    }
    return reps;
}

} // namespace

bool leql(Universe& u, const GameSet& s, const GameSet& t) {
    need_bottom(u);
    need_nonempty(s);
    need_nonempty(t);
    GameId probe = u.compose(t, {u.bottom()});
    for (GameId x : s)
        if (!u.tri(x, probe)) return false;
    return true;
}

bool leqr(Universe& u, const GameSet& s, const GameSet& t) {
    need_top(u);
    need_nonempty(s);
    need_nonempty(t);
    GameId probe = u.compose({u.top()}, s);
    for (GameId x : t)
        if (!u.tri(probe, x)) return false;
    return true;
}

bool left_equivalent(Universe& u, const GameSet& s, const GameSet& t) { return leql(u, s, t) && leql(u, t, s); }
bool right_equivalent(Universe& u, const GameSet& s, const GameSet& t) { return leqr(u, s, t) && leqr(u, t, s); }

GameId upl(Universe& u, const GameSet& s) {
    need_top(u);
    need_bottom(u);
    need_nonempty(s);
    return u.compose({u.top()}, {u.compose(s, {u.bottom()})});
}

GameId downr(Universe& u, const GameSet& s) {
    need_top(u);
    need_bottom(u);
    need_nonempty(s);
    return u.compose({u.compose({u.top()}, s)}, {u.bottom()});
}

GameId left_key(Universe& u, const GameSet& s) {
    need_bottom(u);
    need_nonempty(s);
    return canonical_form(u, u.compose(s, {u.bottom()}));
}

GameId right_key(Universe& u, const GameSet& s) {
    need_top(u);
    need_nonempty(s);
    return canonical_form(u, u.compose({u.top()}, s));
}

std::vector<GameSet> left_classes(Universe& u, const GameSet& games) {
    need_top(u);
    need_bottom(u);
    return classes(u, games, true);
}

std::vector<GameSet> right_classes(Universe& u, const GameSet& games) {
    need_top(u);
    need_bottom(u);
    return classes(u, games, false);
}

bool leq_decomposition_check(Universe& u, GameId h, GameId k) {
    bool l = leql(u, {h}, {k});
    bool r = leqr(u, {h}, {k});
    if ((l && r) != u.leq(h, k))
        fail(ErrorKind::internal_consistency,
             "left/right decomposition disagrees with the order for " + print_game(u, h) + " and " + print_game(u, k));
    return l && r;
}

GameId right_order_join(Universe& u, GameId h, GameId k) { return u.join({downr(u, {h}), downr(u, {k})}); }

} // namespace cgt
