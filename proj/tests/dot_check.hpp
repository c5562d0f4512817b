#pragma once

// Minimal recursive-descent checker for the DOT subset emitted by the CLI:
//
//   graph     : 'digraph' ID '{' stmt* '}'
//   stmt      : (attr_stmt | edge_stmt | node_stmt | ID '=' ID) ';'
//   attr_stmt : ('graph' | 'node' | 'edge') attr_list
//   edge_stmt : ID '->' ID ('->' ID)* attr_list?
//   node_stmt : ID attr_list?
//   attr_list : '[' (ID '=' ID (',' ID '=' ID)*)? ']'
//
// ID is an identifier, a number or a double-quoted string.

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dotcheck {

struct Result {
    bool ok = false;
    std::string error;
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
};

class Parser {
  public:
    explicit Parser(const std::string &text) : s_(text) {}

    Result run() {
        Result r;
        try {
            keyword("digraph");
            id();
            expect("{");
            while (!peek("}"))
                stmt(r);
            expect("}");
            skip();
            if (pos_ != s_.size())
                fail("trailing input");
            std::set<std::string> declared(r.nodes.begin(), r.nodes.end());
            for (const auto &[a, b] : r.edges)
                if (!declared.count(a) || !declared.count(b))
                    fail("edge uses undeclared node " + (declared.count(a) ? b : a));
            r.ok = true;
        } catch (const std::string &e) {
            r.error = e;
        }
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string &what) { throw what + " at offset " + std::to_string(pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(const std::string &tok) {
        skip();
        return s_.compare(pos_, tok.size(), tok) == 0;
    }

    void expect(const std::string &tok) {
        if (!peek(tok))
            fail("expected '" + tok + "'");
        pos_ += tok.size();
    }

    void keyword(const std::string &kw) {
        if (id() != kw)
            fail("expected keyword " + kw);
    }

    std::string id() {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        if (s_[pos_] == '"') {
            std::string out;
            for (++pos_; pos_ < s_.size() && s_[pos_] != '"'; ++pos_) {
                if (s_[pos_] == '\\' && pos_ + 1 < s_.size())
                    ++pos_;
                if (s_[pos_] == '\n')
                    fail("newline in string");
                out += s_[pos_];
            }
            if (pos_ >= s_.size())
                fail("unterminated string");
            ++pos_;
            return out;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '.' || (s_[pos_] == '-' && pos_ == start)))
            ++pos_;
        if (pos_ == start)
            fail("expected identifier");
        const std::string out = s_.substr(start, pos_ - start);
        if (std::isdigit(static_cast<unsigned char>(out[0])) &&
            out.find_first_not_of("0123456789.") != std::string::npos)
            fail("identifier starts with a digit");
        return out;
    }

    void attr_list() {
        expect("[");
        bool first = true;
        while (!peek("]")) {
            if (!first)
                expect(",");
            first = false;
            id();
            expect("=");
            id();
        }
        expect("]");
    }

    void stmt(Result &r) {
        const std::string head = id();
        if (head == "graph" || head == "node" || head == "edge") {
            attr_list();
        } else if (peek("=")) {
            expect("=");
            id();
        } else if (peek("->")) {
            std::string from = head;
            while (peek("->")) {
                expect("->");
                std::string to = id();
                r.edges.emplace_back(from, to);
                from = to;
            }
            if (peek("["))
                attr_list();
        } else {
            r.nodes.push_back(head);
            if (peek("["))
                attr_list();
        }
        expect(";");
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

inline Result check(const std::string &text) { return Parser(text).run(); }

} // namespace dotcheck
