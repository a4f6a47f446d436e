#include "expr.hpp"

#include <cctype>
#include <cstring>

#include "catalog.hpp"
#include "handles.hpp"

namespace dessin {

bool JoinExpr::equals(const JoinExpr& o) const {
    if (kind != o.kind || name != o.name || k != o.k ||
        left_handle != o.left_handle || right_handle != o.right_handle ||
        children.size() != o.children.size() || x_handles != o.x_handles)
        return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (!children[i]->equals(*o.children[i])) return false;
    return true;
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error("expression syntax error at position " + std::to_string(i) +
                    ": " + msg);
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected integer");
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return v;
    }
    std::string ident() {
        ws();
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
            fail("expected name");
        std::size_t start = i;
        while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    }
    bool peek_word(const char* w) {
        ws();
        std::size_t len = std::strlen(w);
        return s.compare(i, len, w) == 0;
    }

    ExprPtr expr() {
        ExprPtr left = primary();
        for (;;) {
            ws();
            if (i < s.size() && s[i] == '(') {
                ++i;
                auto node = std::make_unique<JoinExpr>();
                node->kind = JoinExpr::Kind::kYJoin;
                node->k = integer();
                if (node->k < 1 || node->k > 3) fail("join k must be 1, 2 or 3");
                if (eat('@')) {
                    node->left_handle = integer();
                    expect(',');
                    node->right_handle = integer();
                }
                expect(')');
                node->children.push_back(std::move(left));
                node->children.push_back(operand());
                left = std::move(node);
            } else {
                break;
            }
        }
        return left;
    }

    ExprPtr operand() {  // atom or parenthesised expression
        ws();
        if (i < s.size() && s[i] == '(') {
            ++i;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        return primary();
    }

    ExprPtr primary() {
        ws();
        if (i >= s.size()) fail("unexpected end of expression");
        if (s[i] == '<') {
            ++i;
            std::size_t end = s.find('>', i);
            if (end == std::string::npos) fail("unterminated '<path>'");
            auto node = std::make_unique<JoinExpr>();
            node->kind = JoinExpr::Kind::kFile;
            node->name = s.substr(i, end - i);
            i = end + 1;
            return node;
        }
        if (peek_word("X(")) {
            i += 2;
            auto node = std::make_unique<JoinExpr>();
            node->kind = JoinExpr::Kind::kXJoin;
            do {
                node->children.push_back(expr());
                node->x_handles.push_back(eat('@') ? integer() : 0);
            } while (eat(','));
            expect(')');
            if (node->children.size() < 2) fail("X(...) needs at least two parts");
            return node;
        }
        if (peek_word("TWIST(")) {
            i += 6;
            auto node = std::make_unique<JoinExpr>();
            node->kind = JoinExpr::Kind::kTwist;
            node->children.push_back(expr());
            expect(',');
            node->children.push_back(expr());
            expect(')');
            return node;
        }
        auto node = std::make_unique<JoinExpr>();
        node->kind = JoinExpr::Kind::kAtom;
        node->name = ident();
        return node;
    }
};

std::string format_operand(const JoinExpr& e) {
    if (e.kind == JoinExpr::Kind::kYJoin)
        return "(" + format_expr(e) + ")";
    return format_expr(e);
}

Handle pick_y_handle(const Dessin& d, int k, int index, const std::string& side) {
    std::vector<Handle> match;
    for (const auto& h : y_handles(d))
        if (h.k == k) match.push_back(h);
    if (index < 0 || index >= static_cast<int>(match.size()))
        throw Error("no (" + std::to_string(k) + ")-handle with index " +
                    std::to_string(index) + " in " + side + " operand (" +
                    std::to_string(match.size()) + " available)");
    return match[index];
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expr();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return e;
}

std::string format_expr(const JoinExpr& e) {
    switch (e.kind) {
        case JoinExpr::Kind::kAtom:
            return e.name;
        case JoinExpr::Kind::kFile:
            return "<" + e.name + ">";
        case JoinExpr::Kind::kYJoin: {
            std::string sel;
            if (e.left_handle != 0 || e.right_handle != 0)
                sel = "@" + std::to_string(e.left_handle) + "," +
                      std::to_string(e.right_handle);
            return format_expr(*e.children[0]) + "(" + std::to_string(e.k) + sel +
                   ")" + format_operand(*e.children[1]);
        }
        case JoinExpr::Kind::kTwist:
            return "TWIST(" + format_expr(*e.children[0]) + "," +
                   format_expr(*e.children[1]) + ")";
        case JoinExpr::Kind::kXJoin: {
            std::string out = "X(";
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                if (i) out += ",";
                out += format_expr(*e.children[i]);
                if (e.x_handles[i] != 0) out += "@" + std::to_string(e.x_handles[i]);
            }
            return out + ")";
        }
    }
    return "?";
}

Dessin evaluate(const JoinExpr& e) {
    switch (e.kind) {
        case JoinExpr::Kind::kAtom:
            return named(e.name);
        case JoinExpr::Kind::kFile:
            return load_dsn(e.name);
        case JoinExpr::Kind::kYJoin: {
            Dessin left = evaluate(*e.children[0]);
            Dessin right = evaluate(*e.children[1]);
            Handle h1 = pick_y_handle(left, e.k, e.left_handle, "left");
            Handle h2 = pick_y_handle(right, e.k, e.right_handle, "right");
            return y_join(left, h1, right, h2);
        }
        case JoinExpr::Kind::kTwist: {
            Dessin left = evaluate(*e.children[0]);
            Dessin right = evaluate(*e.children[1]);
            auto lh = y_handles(left);
            if (lh.empty()) throw Error("TWIST: left operand has no y-handles");
            Handle h1 = lh.front();
            Handle h2 = pick_y_handle(right, h1.k, 0, "right");
            return twist_y_join(left, h1, right, h2);
        }
        case JoinExpr::Kind::kXJoin: {
            std::vector<std::pair<Dessin, Handle>> parts;
            for (std::size_t i = 0; i < e.children.size(); ++i) {
                Dessin d = evaluate(*e.children[i]);
                auto hs = x_handles(d);
                int idx = e.x_handles[i];
                if (idx < 0 || idx >= static_cast<int>(hs.size()))
                    throw Error("no x-handle with index " + std::to_string(idx) +
                                " in X(...) part " + std::to_string(i + 1) + " (" +
                                std::to_string(hs.size()) + " available)");
                Handle h = hs[idx];
                parts.emplace_back(std::move(d), h);
            }
            return x_join(parts);
        }
    }
    throw Error("corrupt expression");
}

Dessin evaluate(const std::string& text) { return evaluate(*parse_expr(text)); }

}  // namespace dessin
