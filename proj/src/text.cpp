#include <algorithm>
#include <cctype>
#include <functional>

#include "cgt/game.hpp"

namespace cgt {

namespace {

bool is_meta(char ch) { return ch == '{' || ch == '}' || ch == '|' || ch == ',' || ch == '#'; }

class GameParser {
public:
    GameParser(Universe& u, std::string_view text) : u_(u), text_(text) {}

    GameId parse() {
        skip_ws();
        GameId g = expr();
        skip_ws();
        if (pos_ < text_.size()) error("unexpected trailing input");
        return g;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(ErrorKind::parse, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char ch) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == ch;
    }

    void expect(char ch) {
        if (!at(ch)) error(std::string("expected '") + ch + "'");
        ++pos_;
    }

    GameId expr() {
        skip_ws();
        if (pos_ >= text_.size()) error("unexpected end of input");
        if (text_[pos_] == '{') {
            ++pos_;
            GameSet l = list('|');
            expect('|');
            GameSet r = list('}');
            expect('}');
            return u_.compose(std::move(l), std::move(r));
        }
        return atom();
    }

    GameSet list(char terminator) {
        GameSet out;
        if (at(terminator)) error("empty option list");
        out.push_back(expr());
        while (at(',')) {
            ++pos_;
            out.push_back(expr());
        }
        return out;
    }

    GameId atom() {
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '(') ++depth;
            else if (ch == ')') {
                if (depth == 0) break;
                --depth;
            } else if (depth == 0 && (is_meta(ch) || std::isspace(static_cast<unsigned char>(ch)))) {
                break;
            } else if (depth > 0 && (ch == '{' || ch == '}' || ch == '|')) {
                break;
            }
            ++pos_;
        }
        if (pos_ == start) error("expected an atom or '{'");
        if (depth != 0) error("unbalanced parenthesis in atom");
        std::string name(text_.substr(start, pos_ - start));
        int a = u_.poset().find(name);
        if (a < 0) {
            pos_ = start;
            error("unknown atom '" + name + "'");
        }
        return u_.atomic(a);
    }

    Universe& u_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

GameId parse_game(Universe& u, std::string_view text) { return GameParser(u, text).parse(); }

std::string print_game(const Universe& u, GameId g) {
    absl::flat_hash_map<GameId, std::string> memo;
    std::function<std::string(GameId)> rec = [&](GameId x) -> std::string {
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        std::string s;
        if (u.is_atomic(x)) {
            s = u.poset().atom_name(u.atom_of(x));
        } else {
            auto side = [&](std::span<const GameId> opts) {
                std::vector<std::pair<int, std::string>> parts;
                for (GameId y : opts) parts.emplace_back(u.depth(y), rec(y));
                std::sort(parts.begin(), parts.end());
                std::string out;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (i) out += ",";
                    out += parts[i].second;
                }
                return out;
            };
            GameSet l = u.left_set(x), r = u.right_set(x);
            s = "{" + side(l) + "|" + side(r) + "}";
        }
        memo.emplace(x, s);
        return s;
    };
    return rec(g);
}

} // namespace cgt
