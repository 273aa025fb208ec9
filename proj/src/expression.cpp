#include "altfix/expression.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace altfix::expr {

struct Expression::Node {
    enum class Kind { Number, Variable, Unary, Binary, Call };
    Kind kind;
    double number = 0.0;
    std::string name;  // variable, operator symbol, or function name
    std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make_number(double v) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Number;
    n->number = v;
    return n;
}

NodePtr make_named(Kind kind, std::string name,
                   std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = kind;
    n->name = std::move(name);
    n->args = std::move(args);
    return n;
}

int call_arity(const std::string& name) {
    if (name == "abs" || name == "ln" || name == "exp" || name == "sqrt")
        return 1;
    if (name == "min" || name == "max") return 2;
    return -1;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input, expected operator or end");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(pos_ + 1, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        NodePtr left = parse_product();
        while (true) {
            const char c = peek();
            if (c != '+' && c != '-') return left;
            ++pos_;
            NodePtr right = parse_product();
            left = make_named(Kind::Binary, std::string(1, c), {left, right});
        }
    }

    NodePtr parse_product() {
        NodePtr left = parse_unary();
        while (true) {
            const char c = peek();
            if (c != '*' && c != '/') return left;
            ++pos_;
            NodePtr right = parse_unary();
            left = make_named(Kind::Binary, std::string(1, c), {left, right});
        }
    }

    // -x^2 parses as -(x^2); 2^-3 and 2^3^2 (right-associative) both work.
    NodePtr parse_unary() {
        if (peek() == '-') {
            ++pos_;
            return make_named(Kind::Unary, "-", {parse_unary()});
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (peek() == '^') {
            ++pos_;
            NodePtr exp = parse_unary();
            return make_named(Kind::Binary, "^", {base, exp});
        }
        return base;
    }

    NodePtr parse_primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_sum();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_name();
        fail("expected number, name, '(', or '-'");
    }

    NodePtr parse_number() {
        skip_ws();
        // strtod needs a terminated buffer; a string_view may not have one.
        char buf[64];
        const std::size_t len =
            std::min(sizeof buf - 1, text_.size() - pos_);
        std::memcpy(buf, text_.data() + pos_, len);
        buf[len] = '\0';
        char* end = nullptr;
        const double v = std::strtod(buf, &end);
        if (end == buf) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - buf);
        return make_number(v);
    }

    NodePtr parse_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (peek() != '(') return make_named(Kind::Variable, std::move(name));

        const int arity = call_arity(name);
        if (arity < 0) {
            pos_ = start;
            fail("unknown function '" + name + "'");
        }
        ++pos_;  // '('
        std::vector<NodePtr> args;
        args.push_back(parse_sum());
        while (consume(',')) args.push_back(parse_sum());
        if (!consume(')')) fail("expected ')' after call arguments");
        if (static_cast<int>(args.size()) != arity)
            fail("'" + name + "' expects " + std::to_string(arity) +
                 " argument(s)");
        return make_named(Kind::Call, std::move(name), std::move(args));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void collect_vars(const NodePtr& n, std::set<std::string>& out) {
    if (n->kind == Kind::Variable) out.insert(n->name);
    for (const auto& a : n->args) collect_vars(a, out);
}

double eval_node(const Expression::Node& n,
                 const std::map<std::string, double>& env) {
    switch (n.kind) {
        case Kind::Number:
            return n.number;
        case Kind::Variable: {
            const auto it = env.find(n.name);
            if (it == env.end())
                throw eval_error("unbound name '" + n.name + "'");
            return it->second;
        }
        case Kind::Unary:
            return -eval_node(*n.args[0], env);
        case Kind::Binary: {
            const double a = eval_node(*n.args[0], env);
            const double b = eval_node(*n.args[1], env);
            double v = 0.0;
            switch (n.name[0]) {
                case '+': v = a + b; break;
                case '-': v = a - b; break;
                case '*': v = a * b; break;
                case '/':
                    if (b == 0.0) throw eval_error("division by zero");
                    v = a / b;
                    break;
                case '^': v = std::pow(a, b); break;
            }
            if (!std::isfinite(v))
                throw eval_error("non-finite result from '" + n.name + "'");
            return v;
        }
        case Kind::Call: {
            const double a = eval_node(*n.args[0], env);
            if (n.name == "abs") return std::fabs(a);
            if (n.name == "ln") {
                if (!(a > 0.0))
                    throw eval_error("ln of non-positive value");
                return std::log(a);
            }
            if (n.name == "exp") {
                const double v = std::exp(a);
                if (!std::isfinite(v)) throw eval_error("exp overflow");
                return v;
            }
            if (n.name == "sqrt") {
                if (a < 0.0) throw eval_error("sqrt of negative value");
                return std::sqrt(a);
            }
            const double b = eval_node(*n.args[1], env);
            return n.name == "min" ? std::min(a, b) : std::max(a, b);
        }
    }
    throw eval_error("corrupt expression node");
}

void print_node(const Expression::Node& n, std::string& out) {
    char buf[40];
    switch (n.kind) {
        case Kind::Number:
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            return;
        case Kind::Variable:
            out += n.name;
            return;
        case Kind::Unary:
            out += "(-";
            print_node(*n.args[0], out);
            out += ")";
            return;
        case Kind::Binary:
            out += "(";
            print_node(*n.args[0], out);
            out += " " + n.name + " ";
            print_node(*n.args[1], out);
            out += ")";
            return;
        case Kind::Call:
            out += n.name + "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out += ", ";
                print_node(*n.args[i], out);
            }
            out += ")";
            return;
    }
}

}  // namespace

Expression Expression::parse(std::string_view text) {
    Expression e;
    e.root_ = Parser(text).run();
    collect_vars(e.root_, e.vars_);
    return e;
}

double Expression::eval(const std::map<std::string, double>& env) const {
    if (!root_) throw eval_error("empty expression");
    return eval_node(*root_, env);
}

std::string Expression::print() const {
    if (!root_) return "";
    std::string out;
    print_node(*root_, out);
    return out;
}

}  // namespace altfix::expr
