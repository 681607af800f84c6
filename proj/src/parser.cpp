// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/parser.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "taz/errors.hpp"

namespace taz {
namespace {

// Guard and update constants beyond this are rejected so that
// shortest-path sums over n+1 edges stay far from integer limits.
constexpr std::int64_t kMaxConstant = std::int64_t(1) << 30;

struct Token {
    enum Kind { Ident, Number, Sym, End } kind = End;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= s_.size()) {
                out.push_back(t);
                return out;
            }
            char c = s_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t start = pos_;
                while (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                    advance();
                t.kind = Token::Ident;
                t.text = s_.substr(start, pos_ - start);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) advance();
                t.kind = Token::Number;
                t.text = s_.substr(start, pos_ - start);
                if (t.text.size() > 18) throw ParseError(t.line, t.col, "constant out of range");
                t.value = std::stoll(t.text);
            } else {
                t.kind = Token::Sym;
                if (match2("->") || match2("&&") || match2("<=") || match2(">=") || match2("==")) {
                    t.text = s_.substr(pos_, 2);
                    advance();
                    advance();
                } else if (std::string("{}[],;:=<>+-").find(c) != std::string::npos) {
                    t.text = std::string(1, c);
                    advance();
                } else {
                    throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
                }
            }
            out.push_back(t);
        }
    }

private:
    bool match2(const char* two) const {
        return pos_ + 1 < s_.size() && s_[pos_] == two[0] && s_[pos_ + 1] == two[1];
    }
    void skip_space() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(Lexer(text).run()) {}

    TimedAutomaton run() {
        a_.clock_names.push_back("0");
        bool have_system = false;
        while (peek().kind != Token::End) {
            const Token& t = peek();
            if (t.kind != Token::Ident)
                throw ParseError(t.line, t.col, "expected a statement keyword");
            if (t.text == "system") {
                if (have_system) throw ParseError(t.line, t.col, "duplicate system statement");
                have_system = true;
                next();
                a_.name = expect_ident("system name");
            } else if (t.text == "clock") {
                next();
                do {
                    const Token& c = peek();
                    std::string name = expect_ident("clock name");
                    if (a_.clock_index(name) != -1)
                        throw ParseError(c.line, c.col, "duplicate clock '" + name + "'");
                    a_.clock_names.push_back(name);
                } while (peek().kind == Token::Ident && !is_keyword(peek().text));
            } else if (t.text == "state") {
                next();
                parse_state();
            } else if (t.text == "trans") {
                next();
                parse_trans();
            } else {
                throw ParseError(t.line, t.col, "unknown statement '" + t.text + "'");
            }
        }
        if (!have_system) throw ParseError(1, 1, "missing system statement");
        if (a_.clock_count() < 1) throw ParseError(1, 1, "at least one clock is required");
        int initials = 0;
        for (const State& s : a_.states) initials += s.initial ? 1 : 0;
        if (initials != 1)
            throw ParseError(1, 1, "exactly one initial state is required, found " +
                                       std::to_string(initials));
        return a_;
    }

private:
    static bool is_keyword(const std::string& s) {
        return s == "system" || s == "clock" || s == "state" || s == "trans";
    }

    const Token& peek() const { return toks_[i_]; }
    const Token& next() { return toks_[i_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(peek().line, peek().col, msg);
    }

    std::string expect_ident(const char* what) {
        if (peek().kind != Token::Ident) fail(std::string("expected ") + what);
        return next().text;
    }

    void expect_sym(const char* sym) {
        if (peek().kind != Token::Sym || peek().text != sym)
            fail(std::string("expected '") + sym + "'");
        next();
    }

    bool peek_sym(const char* sym) const {
        return peek().kind == Token::Sym && peek().text == sym;
    }

    std::int64_t expect_int(bool allow_negative) {
        bool neg = false;
        if (peek_sym("-")) {
            if (!allow_negative) fail("negative constant not allowed here");
            neg = true;
            next();
        }
        if (peek().kind != Token::Number) fail("expected an integer");
        std::int64_t v = next().value;
        if (v > kMaxConstant) fail("constant out of range");
        return neg ? -v : v;
    }

    int expect_clock() {
        const Token& t = peek();
        std::string name = expect_ident("clock name");
        int idx = a_.clock_index(name);
        if (idx == -1) throw ParseError(t.line, t.col, "undeclared clock '" + name + "'");
        return idx;
    }

    int expect_state_ref() {
        const Token& t = peek();
        std::string name = expect_ident("state name");
        int idx = a_.state_index(name);
        if (idx == -1) throw ParseError(t.line, t.col, "undeclared state '" + name + "'");
        return idx;
    }

    Rel expect_rel() {
        if (peek().kind == Token::Sym) {
            const std::string& s = peek().text;
            if (s == "<") return next(), Rel::Lt;
            if (s == "<=") return next(), Rel::Le;
            if (s == "==") return next(), Rel::Eq;
            if (s == ">=") return next(), Rel::Ge;
            if (s == ">") return next(), Rel::Gt;
        }
        fail("expected a relation (<, <=, ==, >=, >)");
    }

    void parse_state() {
        const Token& t = peek();
        std::string name = expect_ident("state name");
        if (a_.state_index(name) != -1)
            throw ParseError(t.line, t.col, "duplicate state '" + name + "'");
        State s;
        s.name = name;
        if (peek_sym("[")) {
            next();
            while (true) {
                const Token& at = peek();
                std::string attr = expect_ident("state attribute");
                if (attr == "initial") {
                    s.initial = true;
                } else if (attr == "accepting") {
                    s.accepting = true;
                } else if (attr == "label") {
                    expect_sym("=");
                    std::string label = expect_ident("label value");
                    bool dup = false;
                    for (const std::string& l : s.labels) dup |= l == label;
                    if (!dup) s.labels.push_back(label);
                } else {
                    throw ParseError(at.line, at.col, "unknown state attribute '" + attr + "'");
                }
                if (peek_sym(",")) {
                    next();
                    continue;
                }
                break;
            }
            expect_sym("]");
        }
        a_.states.push_back(std::move(s));
    }

    AtomicConstraint parse_atom() {
        AtomicConstraint atom;
        atom.left = expect_clock();
        if (peek_sym("-")) {
            // x - y rel c
            next();
            atom.right = expect_clock();
            atom.rel = expect_rel();
            atom.constant = expect_int(true);
            return atom;
        }
        atom.rel = expect_rel();
        if (peek().kind == Token::Ident) {
            // x rel y + c desugars to x - y rel c
            atom.right = expect_clock();
            bool minus = peek_sym("-");
            if (!minus && !peek_sym("+")) fail("expected '+' or '-' after clock");
            next();
            std::int64_t c = expect_int(true);
            atom.constant = minus ? -c : c;
            return atom;
        }
        atom.right = 0;
        atom.constant = expect_int(true);
        return atom;
    }

    void parse_trans() {
        Transition t;
        t.src = expect_state_ref();
        expect_sym("->");
        t.dst = expect_state_ref();
        expect_sym("{");
        if (peek().kind == Token::Ident && peek().text == "guard") {
            next();
            expect_sym(":");
            if (peek().kind == Token::Ident && peek().text == "true") {
                next();
            } else {
                t.guard.push_back(parse_atom());
                while (peek_sym("&&")) {
                    next();
                    t.guard.push_back(parse_atom());
                }
            }
            expect_sym(";");
        }
        if (peek().kind == Token::Ident && peek().text == "do") {
            next();
            expect_sym(":");
            while (true) {
                const Token& ut = peek();
                Update u;
                u.target = expect_clock();
                expect_sym("=");
                if (peek().kind == Token::Ident) {
                    u.source = expect_clock();
                    bool minus = peek_sym("-");
                    if (!minus && !peek_sym("+")) fail("expected '+' or '-' after clock");
                    next();
                    std::int64_t c = expect_int(false);
                    u.offset = minus ? -c : c;
                } else {
                    u.source = 0;
                    u.offset = expect_int(false);
                }
                for (const Update& prev : t.updates)
                    if (prev.target == u.target)
                        throw ParseError(ut.line, ut.col,
                                         "clock '" + a_.clock_names[u.target] +
                                             "' updated twice in one transition");
                t.updates.push_back(u);
                if (peek_sym(",")) {
                    next();
                    continue;
                }
                break;
            }
            expect_sym(";");
        }
        expect_sym("}");
        a_.transitions.push_back(std::move(t));
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
    TimedAutomaton a_;
};

}  // namespace

TimedAutomaton parse_model(const std::string& text) { return Parser(text).run(); }

TimedAutomaton parse_model_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

std::string print_model(const TimedAutomaton& a) {
    std::string out = "system " + a.name + "\n";
    out += "clock";
    for (int i = 1; i <= a.clock_count(); ++i) out += " " + a.clock_names[i];
    out += "\n";
    for (const State& s : a.states) {
        out += "state " + s.name;
        std::vector<std::string> attrs;
        if (s.initial) attrs.push_back("initial");
        if (s.accepting) attrs.push_back("accepting");
        for (const std::string& l : s.labels) attrs.push_back("label=" + l);
        if (!attrs.empty()) {
            out += " [";
            for (size_t i = 0; i < attrs.size(); ++i) out += (i ? ", " : "") + attrs[i];
            out += "]";
        }
        out += "\n";
    }
    for (const Transition& t : a.transitions) out += "trans " + to_string(t, a) + "\n";
    return out;
}

}  // namespace taz
