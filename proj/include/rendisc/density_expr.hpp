#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rendisc {

// Tiny arithmetic expressions over the disc radius n, used for declarative
// point-count laws such as "8*n^2*log(n)". Supported: numbers, n, +, *, ^
// (right-associative), log (natural), parentheses.
class DensityExpr {
public:
    static DensityExpr parse(std::string_view text) {
        Parser p{text, 0};
        DensityExpr e;
        e.root_ = std::shared_ptr<const Node>(p.expr().release());
        p.skip_ws();
        if (p.pos != text.size()) throw std::invalid_argument("malformed density expression");
        e.text_ = std::string(text);
        return e;
    }

    double eval(double n) const { return eval_node(*root_, n); }

    // Point count f(n) = ceil(expression).
    std::int64_t point_count(double n) const {
        const double v = eval(n);
        if (!std::isfinite(v) || v < 0.0 || v > 9e15)
            throw std::invalid_argument("density expression out of range at n=" + std::to_string(n));
        return static_cast<std::int64_t>(std::ceil(v));
    }

    const std::string& text() const { return text_; }

private:
    struct Node {
        enum class Kind { number, var, add, mul, pow, log } kind;
        double value = 0.0;
        std::unique_ptr<Node> lhs, rhs;
    };

    static double eval_node(const Node& node, double n) {
        switch (node.kind) {
            case Node::Kind::number: return node.value;
            case Node::Kind::var: return n;
            case Node::Kind::add: return eval_node(*node.lhs, n) + eval_node(*node.rhs, n);
            case Node::Kind::mul: return eval_node(*node.lhs, n) * eval_node(*node.rhs, n);
            case Node::Kind::pow: return std::pow(eval_node(*node.lhs, n), eval_node(*node.rhs, n));
            case Node::Kind::log: return std::log(eval_node(*node.lhs, n));
        }
        throw std::logic_error("unreachable");
    }

    struct Parser {
        std::string_view s;
        std::size_t pos;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        bool eat(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }

        std::unique_ptr<Node> expr() {
            auto lhs = term();
            while (eat('+')) {
                auto node = std::make_unique<Node>(Node{Node::Kind::add});
                node->lhs = std::move(lhs);
                node->rhs = term();
                lhs = std::move(node);
            }
            return lhs;
        }

        std::unique_ptr<Node> term() {
            auto lhs = factor();
            while (eat('*')) {
                auto node = std::make_unique<Node>(Node{Node::Kind::mul});
                node->lhs = std::move(lhs);
                node->rhs = factor();
                lhs = std::move(node);
            }
            return lhs;
        }

        std::unique_ptr<Node> factor() {
            auto lhs = base();
            if (eat('^')) {
                auto node = std::make_unique<Node>(Node{Node::Kind::pow});
                node->lhs = std::move(lhs);
                node->rhs = factor();
                return node;
            }
            return lhs;
        }

        std::unique_ptr<Node> base() {
            skip_ws();
            if (pos >= s.size()) throw std::invalid_argument("malformed density expression");
            if (eat('(')) {
                auto inner = expr();
                if (!eat(')')) throw std::invalid_argument("malformed density expression");
                return inner;
            }
            if (s.compare(pos, 3, "log") == 0) {
                pos += 3;
                if (!eat('(')) throw std::invalid_argument("malformed density expression");
                auto node = std::make_unique<Node>(Node{Node::Kind::log});
                node->lhs = expr();
                if (!eat(')')) throw std::invalid_argument("malformed density expression");
                return node;
            }
            if (s[pos] == 'n') {
                ++pos;
                return std::make_unique<Node>(Node{Node::Kind::var});
            }
            const char* begin = s.data() + pos;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) throw std::invalid_argument("malformed density expression");
            pos += static_cast<std::size_t>(end - begin);
            auto node = std::make_unique<Node>(Node{Node::Kind::number});
            node->value = v;
            return node;
        }
    };

    std::shared_ptr<const Node> root_;  // immutable after parse, so copies share it
    std::string text_;
};

}  // namespace rendisc
