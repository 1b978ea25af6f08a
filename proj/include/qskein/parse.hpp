#pragma once

// Recursive-descent parser for the element expression language:
//   expr   := ["+"|"-"] term (("+"|"-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" sint)?
//   atom   := "b(" int "," int ")" | "v(" int ")" | "Q" | "q" | int | "(" expr ")"
// Q denotes q^{1/2}. b(j,i) with j > i is accepted and canonicalized.

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "qskein/algebra.hpp"

namespace qskein {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct ast_node;
using ast_ptr = std::unique_ptr<ast_node>;

struct ast_int {
    bigint value;
};
struct ast_qhalf {};
struct ast_vgen {
    int i;
};
struct ast_bgen {
    int i, j;
};
struct ast_neg {
    ast_ptr child;
};
struct ast_add {
    ast_ptr lhs, rhs;
};
struct ast_mul {
    ast_ptr lhs, rhs;
};
struct ast_pow {
    ast_ptr base;
    int exponent;
};

struct ast_node {
    std::variant<ast_int, ast_qhalf, ast_vgen, ast_bgen, ast_neg, ast_add, ast_mul, ast_pow> v;
};

namespace detail {

class parser {
public:
    parser(std::string_view src, int n) : src_(src), n_(n) {}

    ast_ptr parse() {
        ast_ptr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return e;
    }

private:
    ast_ptr expr() {
        skip_ws();
        ast_ptr lhs;
        if (try_consume('-'))
            lhs = node(ast_neg{term()});
        else {
            try_consume('+');
            lhs = term();
        }
        while (true) {
            skip_ws();
            if (try_consume('+'))
                lhs = node(ast_add{std::move(lhs), term()});
            else if (try_consume('-'))
                lhs = node(ast_add{std::move(lhs), node(ast_neg{term()})});
            else
                return lhs;
        }
    }

    ast_ptr term() {
        ast_ptr lhs = factor();
        while (true) {
            skip_ws();
            if (try_consume('*'))
                lhs = node(ast_mul{std::move(lhs), factor()});
            else
                return lhs;
        }
    }

    ast_ptr factor() {
        ast_ptr base = atom();
        skip_ws();
        if (!try_consume('^')) return base;
        const size_t at = pos_;
        const int e = signed_int();
        if (std::holds_alternative<ast_bgen>(base->v) && e < 0)
            fail("negative power of a chord generator", at);
        return node(ast_pow{std::move(base), e});
    }

    ast_ptr atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected an atom");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ast_ptr e = expr();
            expect(')');
            return e;
        }
        if (c == 'Q') {
            ++pos_;
            return node(ast_qhalf{});
        }
        if (c == 'q') {
            ++pos_;
            return node(ast_pow{node(ast_qhalf{}), 2});
        }
        if (c == 'v') {
            ++pos_;
            expect('(');
            const int i = vertex();
            expect(')');
            return node(ast_vgen{i});
        }
        if (c == 'b') {
            ++pos_;
            expect('(');
            const size_t at = pos_;
            const int i = vertex();
            expect(',');
            const int j = vertex();
            expect(')');
            if (i == j) fail("no single-vertex generator b(i,i)", at);
            return node(ast_bgen{std::min(i, j), std::max(i, j)});
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return node(ast_int{unsigned_int()});
        fail("unexpected character");
    }

    int vertex() {
        skip_ws();
        const size_t at = pos_;
        const bigint raw = unsigned_int();
        if (raw < 1 || raw > n_) fail("vertex index out of range [1," + std::to_string(n_) + "]", at);
        return static_cast<int>(raw);
    }

    int signed_int() {
        skip_ws();
        const bool neg = try_consume('-');
        const size_t at = pos_;
        const bigint raw = unsigned_int();
        if (raw > 4096) fail("exponent too large", at);
        const int v = static_cast<int>(raw);
        return neg ? -v : v;
    }

    bigint unsigned_int() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected an integer");
        bigint v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    template <typename T>
    static ast_ptr node(T&& t) {
        auto p = std::make_unique<ast_node>();
        p->v = std::forward<T>(t);
        return p;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, size_t at) const { throw parse_error(msg, at); }

    std::string_view src_;
    int n_;
    size_t pos_ = 0;
};

}  // namespace detail

inline ast_ptr parse_expression(std::string_view src, int n) {
    return detail::parser(src, n).parse();
}

inline algebra_elem evaluate(const ast_node& node, int n) {
    return std::visit(
        [n](const auto& v) -> algebra_elem {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ast_int>)
                return algebra_elem::scalar(ring_elem::integer(n, v.value));
            else if constexpr (std::is_same_v<T, ast_qhalf>)
                return algebra_elem::scalar(ring_elem::q_half(n, 1));
            else if constexpr (std::is_same_v<T, ast_vgen>)
                return algebra_elem::scalar(ring_elem::v(n, v.i));
            else if constexpr (std::is_same_v<T, ast_bgen>)
                return algebra_elem::generator(n, make_chord(v.i, v.j, n));
            else if constexpr (std::is_same_v<T, ast_neg>)
                return -evaluate(*v.child, n);
            else if constexpr (std::is_same_v<T, ast_add>)
                return evaluate(*v.lhs, n) + evaluate(*v.rhs, n);
            else if constexpr (std::is_same_v<T, ast_mul>)
                return evaluate(*v.lhs, n) * evaluate(*v.rhs, n);
            else {  // ast_pow
                algebra_elem base = evaluate(*v.base, n);
                int e = v.exponent;
                if (e < 0) {
                    const auto& tm = base.terms();
                    if (tm.size() != 1 || !tm.begin()->first.empty() ||
                        !tm.begin()->second.is_unit_monomial())
                        throw std::invalid_argument(
                            "negative power of a non-invertible expression");
                    base = algebra_elem::scalar(tm.begin()->second.unit_inverse());
                    e = -e;
                }
                algebra_elem out = algebra_elem::one(n);
                for (int t = 0; t < e; ++t) out *= base;
                return out;
            }
        },
        node.v);
}

inline algebra_elem parse_element(std::string_view src, int n) {
    return evaluate(*parse_expression(src, n), n);
}

}  // namespace qskein
