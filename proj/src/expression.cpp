// SPDX-License-Identifier: Apache-2.0
#include "onesided/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "onesided/errors.hpp"

namespace onesided {

namespace {

struct Node {
    enum class Op { constant, var, neg, add, sub, mul, div, pow, call } op;
    double value = 0.0;
    double (*fn)(double) = nullptr;
    std::unique_ptr<Node> a;
    std::unique_ptr<Node> b;

    double eval(double x) const {
        switch (op) {
            case Op::constant: return value;
            case Op::var: return x;
            case Op::neg: return -a->eval(x);
            case Op::add: return a->eval(x) + b->eval(x);
            case Op::sub: return a->eval(x) - b->eval(x);
            case Op::mul: return a->eval(x) * b->eval(x);
            case Op::div: return a->eval(x) / b->eval(x);
            case Op::pow: return std::pow(a->eval(x), b->eval(x));
            case Op::call: return fn(a->eval(x));
        }
        return std::nan("");
    }
};

using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Op op, double value = 0.0) {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->value = value;
    return n;
}

NodePtr binary(Node::Op op, NodePtr a, NodePtr b) {
    auto n = leaf(op);
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double f_sin(double v) { return std::sin(v); }
double f_cos(double v) { return std::cos(v); }
double f_tan(double v) { return std::tan(v); }
double f_exp(double v) { return std::exp(v); }
double f_log(double v) { return std::log(v); }
double f_sqrt(double v) { return std::sqrt(v); }
double f_abs(double v) { return std::abs(v); }

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse() {
        NodePtr n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("expression column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (accept('+')) n = binary(Node::Op::add, std::move(n), term());
            else if (accept('-')) n = binary(Node::Op::sub, std::move(n), term());
            else return n;
        }
    }

    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = binary(Node::Op::mul, std::move(n), unary());
            else if (accept('/')) n = binary(Node::Op::div, std::move(n), unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) {
            auto n = leaf(Node::Op::neg);
            n->a = unary();
            return n;
        }
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (accept('^')) return binary(Node::Op::pow, std::move(base), unary());
        return base;
    }

    NodePtr primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (accept('(')) {
            NodePtr n = expr();
            expect(')');
            return n;
        }
        if ((c >= '0' && c <= '9') || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return name();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    NodePtr number() {
        double v = 0.0;
        const char* first = s_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
        if (ec != std::errc() || ptr == first) fail("malformed number");
        pos_ += static_cast<std::size_t>(ptr - first);
        return leaf(Node::Op::constant, v);
    }

    NodePtr name() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string_view id = s_.substr(start, pos_ - start);
        if (id == "x") return leaf(Node::Op::var);
        if (id == "pi") return leaf(Node::Op::constant, std::numbers::pi);
        if (id == "e") return leaf(Node::Op::constant, std::numbers::e);
        if (id == "pow") {
            expect('(');
            NodePtr a = expr();
            expect(',');
            NodePtr b = expr();
            expect(')');
            return binary(Node::Op::pow, std::move(a), std::move(b));
        }
        static constexpr std::pair<std::string_view, double (*)(double)> kFunctions[] = {
            {"sin", f_sin}, {"cos", f_cos},   {"tan", f_tan}, {"exp", f_exp},
            {"log", f_log}, {"sqrt", f_sqrt}, {"abs", f_abs},
        };
        for (const auto& [fname, fn] : kFunctions) {
            if (id != fname) continue;
            expect('(');
            auto n = leaf(Node::Op::call);
            n->fn = fn;
            n->a = expr();
            expect(')');
            return n;
        }
        pos_ = start;
        fail("unknown identifier '" + std::string(id) + "'");
    }
};

}  // namespace

RealFn compile_expression(std::string_view text) {
    std::shared_ptr<const Node> root = Parser(text).parse();
    return [root](double x) { return root->eval(x); };
}

FunctionModel expression_function(std::string_view text) {
    return FunctionModel(compile_expression(text), "expr:" + std::string(text));
}

}  // namespace onesided
