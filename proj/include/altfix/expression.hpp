#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altfix::expr {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t column, const std::string& msg)
        : std::runtime_error(msg), column(column) {}
    std::size_t column;  // 1-based offset into the expression text
};

class eval_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic over doubles with + - * / ^, unary minus, and the calls
// abs, min, max, ln, exp, sqrt. Parse once, evaluate per binding.
class Expression {
public:
    Expression() = default;

    static Expression parse(std::string_view text);

    double eval(const std::map<std::string, double>& env) const;

    // Canonical fully parenthesized form; parse(print()) is structurally
    // identical, which gives the report round-trip property.
    std::string print() const;

    const std::set<std::string>& free_variables() const { return vars_; }
    bool valid() const { return root_ != nullptr; }

    struct Node;  // defined in expression.cpp

private:
    std::shared_ptr<const Node> root_;
    std::set<std::string> vars_;
};

}  // namespace altfix::expr
