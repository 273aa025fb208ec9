#include "altfix/problem_spec.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <tuple>

namespace altfix {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Token {
    std::string text;
    std::size_t col;  // 1-based
};

std::vector<Token> split_tokens(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() &&
               std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Split on commas that sit outside parentheses (map components can contain
// calls like min(x0, x1)).
std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

enum class ArgType { Double, UInt, AltRef, CmpRef, DecayRef,
                     PointOne, PointList, Source };

struct ArgRule {
    const char* key;
    ArgType type;
    bool required;
};

const std::map<std::string, std::vector<ArgRule>>& experiment_rules() {
    static const std::map<std::string, std::vector<ArgRule>> rules = {
        {"banach",
         {{"alpha", ArgType::Double, true},
          {"n_samples", ArgType::UInt, false}}},
        {"weak",
         {{"alpha", ArgType::Double, true},
          {"lambda", ArgType::Double, true},
          {"n_samples", ArgType::UInt, false}}},
        {"altering",
         {{"phi", ArgType::AltRef, true},
          {"psi", ArgType::CmpRef, true},
          {"n_samples", ArgType::UInt, false}}},
        {"abc",
         {{"phi", ArgType::AltRef, true},
          {"a", ArgType::CmpRef, true},
          {"b", ArgType::CmpRef, true},
          {"c", ArgType::CmpRef, true},
          {"n_samples", ArgType::UInt, false}}},
        {"theorem5",
         {{"a", ArgType::Double, true},
          {"b", ArgType::Double, true},
          {"K", ArgType::DecayRef, true},
          {"n_samples", ArgType::UInt, false}}},
        {"iterate",
         {{"start", ArgType::PointOne, true},
          {"max_iters", ArgType::UInt, false},
          {"tol", ArgType::Double, false},
          {"rate", ArgType::Double, false},
          {"phi", ArgType::AltRef, false}}},
        {"classify",
         {{"starts", ArgType::PointList, true},
          {"max_iters", ArgType::UInt, false},
          {"tol", ArgType::Double, false}}},
        {"cauchy",
         {{"source", ArgType::Source, true},
          {"eta", ArgType::Double, true},
          {"N", ArgType::UInt, false},
          {"J", ArgType::UInt, false},
          {"window", ArgType::UInt, false},
          {"tail", ArgType::UInt, false},
          {"tol", ArgType::Double, false}}},
        {"stability",
         {{"u0", ArgType::PointOne, true},
          {"delta", ArgType::Double, true},
          {"trials", ArgType::UInt, false},
          {"max_iters", ArgType::UInt, false},
          {"tol", ArgType::Double, false},
          {"rate", ArgType::Double, false}}},
    };
    return rules;
}

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    ProblemSpec run() {
        std::istringstream in(text_);
        std::string line;
        bool saw_header = false;
        while (std::getline(in, line)) {
            ++line_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto tokens = split_tokens(line);
            if (tokens.empty() || tokens[0].text[0] == '#') continue;
            if (!saw_header) {
                if (line != "altfix-spec v1")
                    fail(tokens[0].col,
                         "expected version header 'altfix-spec v1'");
                saw_header = true;
                continue;
            }
            dispatch(line, tokens);
        }
        if (!saw_header) fail(1, "empty spec: missing 'altfix-spec v1' header");
        if (!has_space_) fail(1, "missing 'space' declaration");
        return std::move(spec_);
    }

private:
    [[noreturn]] void fail(std::size_t col, const std::string& msg) const {
        throw spec_error(line_, col, msg);
    }

    double parse_double(const std::string& value, std::size_t value_col) const {
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (value.empty() || end != value.c_str() + value.size())
            fail(value_col, "malformed number '" + value + "'");
        return v;
    }

    std::uint64_t parse_uint(const std::string& value,
                             std::size_t value_col) const {
        if (value.empty() || value[0] == '-')
            fail(value_col, "expected a nonnegative integer");
        char* end = nullptr;
        const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
        if (end != value.c_str() + value.size())
            fail(value_col, "expected a nonnegative integer");
        return v;
    }

    std::vector<double> parse_double_list(const std::string& value,
                                          std::size_t col) const {
        std::vector<double> out;
        for (const std::string& part : split_top_level(value))
            out.push_back(parse_double(part, col));
        return out;
    }

    // key=value token, returning (key, value, value column).
    std::tuple<std::string, std::string, std::size_t> split_kv(
        const Token& t) const {
        const auto eq = t.text.find('=');
        if (eq == std::string::npos || eq == 0)
            fail(t.col, "expected key=value, got '" + t.text + "'");
        std::string key = t.text.substr(0, eq);
        if (!is_identifier(key)) fail(t.col, "bad key '" + key + "'");
        return {key, t.text.substr(eq + 1), t.col + eq + 1};
    }

    expr::Expression parse_expr(const std::string& text,
                                std::size_t col) const {
        try {
            return expr::Expression::parse(text);
        } catch (const expr::parse_error& e) {
            fail(col + e.column - 1, std::string("expression: ") + e.what());
        }
    }

    void dispatch(const std::string& line, const std::vector<Token>& tokens) {
        const std::string& head = tokens[0].text;
        if (head == "space") return parse_space(tokens);
        if (head == "map") return parse_map(line, tokens);
        if (head == "altering" || head == "comparison" || head == "decay")
            return parse_function(line, tokens);
        if (head == "seed" || head == "tol" || head == "max_iters" ||
            head == "n_samples")
            return parse_setting(tokens);
        if (head == "experiment") return parse_experiment(tokens);
        fail(tokens[0].col, "unknown directive '" + head + "'");
    }

    void parse_space(const std::vector<Token>& tokens) {
        if (has_space_) fail(tokens[0].col, "duplicate 'space' declaration");
        if (tokens.size() < 2)
            fail(tokens[0].col, "space: expected 'box' or 'finite'");
        SpaceDecl& d = spec_.space;
        std::map<std::string, std::pair<std::string, std::size_t>> kv;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            auto [key, value, col] = split_kv(tokens[i]);
            if (!kv.emplace(key, std::make_pair(value, col)).second)
                fail(tokens[i].col, "duplicate key '" + key + "'");
        }
        const auto take = [&](const char* key) {
            const auto it = kv.find(key);
            if (it == kv.end())
                fail(tokens[0].col,
                     std::string("space: missing key '") + key + "'");
            auto v = it->second;
            kv.erase(it);
            return v;
        };

        if (tokens[1].text == "box") {
            d.kind = CarrierKind::Box;
            auto [dim_s, dim_col] = take("dim");
            d.dim = parse_uint(dim_s, dim_col);
            if (d.dim == 0) fail(dim_col, "space: dim must be >= 1");
            auto [lo_s, lo_col] = take("lo");
            auto [hi_s, hi_col] = take("hi");
            d.lo = parse_double_list(lo_s, lo_col);
            d.hi = parse_double_list(hi_s, hi_col);
            if (d.lo.size() != d.dim || d.hi.size() != d.dim)
                fail(lo_col, "space: lo/hi must list dim coordinates");
            for (std::size_t j = 0; j < d.dim; ++j)
                if (!(d.lo[j] < d.hi[j]))
                    fail(lo_col, "space: need lo < hi per coordinate");
            if (kv.count("metric")) {
                auto [m, m_col] = take("metric");
                if (m != "euclid" && m != "max")
                    fail(m_col, "space: metric must be 'euclid' or 'max'");
                d.metric = m;
            }
        } else if (tokens[1].text == "finite") {
            d.kind = CarrierKind::Finite;
            auto [pts, pts_col] = take("points");
            for (const std::string& label : split_top_level(pts)) {
                if (!is_identifier(label))
                    fail(pts_col, "space: bad point label '" + label + "'");
                if (std::find(d.point_labels.begin(), d.point_labels.end(),
                              label) != d.point_labels.end())
                    fail(pts_col,
                         "space: duplicate point label '" + label + "'");
                d.point_labels.push_back(label);
            }
            auto [tab, tab_col] = take("table");
            std::size_t row_len = 0, rows = 0;
            std::stringstream ss(tab);
            std::string row;
            while (std::getline(ss, row, ';')) {
                const auto vals = parse_double_list(row, tab_col);
                if (rows == 0) row_len = vals.size();
                if (vals.size() != row_len)
                    fail(tab_col, "space: ragged table rows");
                d.table.insert(d.table.end(), vals.begin(), vals.end());
                ++rows;
            }
            if (rows != d.point_labels.size() ||
                row_len != d.point_labels.size())
                fail(tab_col, "space: table must be n*n for n points");
        } else {
            fail(tokens[1].col, "space: expected 'box' or 'finite'");
        }
        for (const auto& [key, v] : kv)
            fail(v.second, "space: unknown key '" + key + "'");
        has_space_ = true;
    }

    // `map NAME = rhs`: one expression per coordinate for boxes, or the
    // image index list for finite carriers.
    void parse_map(const std::string& line, const std::vector<Token>& tokens) {
        require_space(tokens[0].col);
        if (spec_.map) fail(tokens[0].col, "duplicate 'map' declaration");
        if (tokens.size() < 3 || tokens[2].text != "=")
            fail(tokens[0].col, "map: expected 'map NAME = <expr>'");
        if (!is_identifier(tokens[1].text))
            fail(tokens[1].col, "map: bad name '" + tokens[1].text + "'");
        const std::size_t rhs_col = tokens[2].col + 2;
        if (rhs_col - 1 >= line.size()) fail(rhs_col, "map: empty body");
        const std::string rhs = line.substr(rhs_col - 1);

        MapDecl decl;
        decl.name = tokens[1].text;
        if (spec_.space.kind == CarrierKind::Finite) {
            for (const std::string& part : split_top_level(rhs)) {
                std::string trimmed = part;
                trimmed.erase(0, trimmed.find_first_not_of(" \t"));
                trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
                const std::uint64_t idx = parse_uint(trimmed, rhs_col);
                if (idx >= spec_.space.point_labels.size())
                    fail(rhs_col,
                         "map: image index " + trimmed + " out of range");
                decl.images.push_back(idx);
            }
            if (decl.images.size() != spec_.space.point_labels.size())
                fail(rhs_col, "map: need one image per point");
        } else {
            std::size_t offset = 0;
            for (const std::string& part : split_top_level(rhs)) {
                decl.components.push_back(parse_expr(part, rhs_col + offset));
                offset += part.size() + 1;
            }
            if (decl.components.size() != spec_.space.dim)
                fail(rhs_col, "map: need one component per box dimension");
            for (const auto& comp : decl.components)
                for (const std::string& v : comp.free_variables())
                    if (!is_coordinate_var(v))
                        fail(rhs_col, "map: undeclared identifier '" + v +
                                          "' (coordinates are " +
                                          coordinate_vars_text() + ")");
        }
        spec_.map = std::move(decl);
    }

    bool is_coordinate_var(const std::string& v) const {
        if (spec_.space.dim == 1 && v == "x") return true;
        if (v.size() >= 2 && v[0] == 'x') {
            char* end = nullptr;
            const unsigned long long idx =
                std::strtoull(v.c_str() + 1, &end, 10);
            return end == v.c_str() + v.size() && idx < spec_.space.dim;
        }
        return false;
    }

    std::string coordinate_vars_text() const {
        if (spec_.space.dim == 1) return "x";
        return "x0..x" + std::to_string(spec_.space.dim - 1);
    }

    void parse_function(const std::string& line,
                        const std::vector<Token>& tokens) {
        const std::string& cls = tokens[0].text;
        if (tokens.size() < 3 || tokens[2].text != "=")
            fail(tokens[0].col,
                 cls + ": expected '" + cls + " NAME = <expr>'");
        if (!is_identifier(tokens[1].text))
            fail(tokens[1].col, cls + ": bad name '" + tokens[1].text + "'");
        const std::size_t rhs_col = tokens[2].col + 2;
        if (rhs_col - 1 >= line.size()) fail(rhs_col, cls + ": empty body");

        FuncDecl decl;
        decl.name = tokens[1].text;
        decl.var = cls == "comparison" ? "s" : "t";
        decl.body = parse_expr(line.substr(rhs_col - 1), rhs_col);
        for (const std::string& v : decl.body.free_variables())
            if (v != decl.var)
                fail(rhs_col, cls + ": undeclared identifier '" + v +
                                  "' (the variable is '" + decl.var + "')");

        auto& target = cls == "altering"     ? spec_.altering_decls
                       : cls == "comparison" ? spec_.comparison_decls
                                             : spec_.decay_decls;
        if (!target.emplace(decl.name, decl).second)
            fail(tokens[1].col, cls + ": duplicate name '" + decl.name + "'");
    }

    void parse_setting(const std::vector<Token>& tokens) {
        if (tokens.size() != 2)
            fail(tokens[0].col, tokens[0].text + ": expected a single value");
        const std::string& head = tokens[0].text;
        if (head == "seed") {
            spec_.seed = parse_uint(tokens[1].text, tokens[1].col);
        } else if (head == "tol") {
            spec_.tol = parse_double(tokens[1].text, tokens[1].col);
            if (!(spec_.tol > 0.0)) fail(tokens[1].col, "tol must be > 0");
        } else if (head == "max_iters") {
            spec_.max_iters = parse_uint(tokens[1].text, tokens[1].col);
            if (spec_.max_iters == 0)
                fail(tokens[1].col, "max_iters must be >= 1");
        } else {
            spec_.n_samples = parse_uint(tokens[1].text, tokens[1].col);
            if (spec_.n_samples == 0)
                fail(tokens[1].col, "n_samples must be >= 1");
        }
    }

    void parse_experiment(const std::vector<Token>& tokens) {
        require_space(tokens[0].col);
        if (tokens.size() < 2) fail(tokens[0].col, "experiment: missing kind");
        const std::string& kind = tokens[1].text;
        const auto rules_it = experiment_rules().find(kind);
        if (rules_it == experiment_rules().end())
            fail(tokens[1].col, "unknown experiment kind '" + kind + "'");
        const auto& rules = rules_it->second;

        ExperimentDecl decl;
        decl.kind = kind;
        decl.line = line_;
        for (std::size_t i = 2; i < tokens.size(); ++i) {
            auto [key, value, value_col] = split_kv(tokens[i]);
            const auto rule =
                std::find_if(rules.begin(), rules.end(),
                             [&](const ArgRule& r) { return r.key == key; });
            if (rule == rules.end())
                fail(tokens[i].col, "unknown key '" + key +
                                        "' for experiment '" + kind + "'");
            if (decl.args.count(key))
                fail(tokens[i].col, "duplicate key '" + key + "'");
            decl.args[key] = canonical_value(kind, *rule, value, value_col);
        }
        for (const ArgRule& r : rules)
            if (r.required && !decl.args.count(r.key))
                fail(tokens[0].col, "experiment '" + kind +
                                        "': missing required key '" +
                                        std::string(r.key) + "'");
        joint_checks(decl, tokens[0].col);
        spec_.experiments.push_back(std::move(decl));
    }

    std::string canonical_value(const std::string& kind, const ArgRule& rule,
                                const std::string& value,
                                std::size_t col) const {
        switch (rule.type) {
            case ArgType::Double: {
                const double v = parse_double(value, col);
                check_double_range(kind, rule.key, v, col);
                return fmt(v);
            }
            case ArgType::UInt: {
                const std::uint64_t v = parse_uint(value, col);
                check_uint_range(kind, rule.key, v, col);
                return std::to_string(v);
            }
            case ArgType::AltRef:
                if (!spec_.altering_decls.count(value))
                    fail(col, "undeclared altering function '" + value + "'");
                return value;
            case ArgType::CmpRef:
                if (!spec_.comparison_decls.count(value))
                    fail(col,
                         "undeclared comparison function '" + value + "'");
                return value;
            case ArgType::DecayRef:
                if (!spec_.decay_decls.count(value))
                    fail(col, "undeclared decay function '" + value + "'");
                return value;
            case ArgType::PointOne:
                return canonical_point(value, col);
            case ArgType::PointList: {
                std::string out;
                std::stringstream ss(value);
                std::string part;
                bool first = true;
                while (std::getline(ss, part, ';')) {
                    if (!first) out += ";";
                    out += canonical_point(part, col);
                    first = false;
                }
                if (out.empty()) fail(col, "empty point list");
                return out;
            }
            case ArgType::Source:
                if (value != "harmonic") fail(col, "source must be 'harmonic'");
                return value;
        }
        fail(col, "internal: unhandled arg type");
    }

    std::string canonical_point(const std::string& text,
                                std::size_t col) const {
        if (spec_.space.kind == CarrierKind::Finite) {
            const auto& labels = spec_.space.point_labels;
            if (std::find(labels.begin(), labels.end(), text) != labels.end())
                return text;
            fail(col, "unknown point label '" + text + "'");
        }
        const auto coords = parse_double_list(text, col);
        if (coords.size() != spec_.space.dim)
            fail(col, "point needs " + std::to_string(spec_.space.dim) +
                          " coordinates");
        std::string out;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            if (j) out += ",";
            out += fmt(coords[j]);
        }
        return out;
    }

    void check_double_range(const std::string& kind, const std::string& key,
                            double v, std::size_t col) const {
        if (key == "alpha" && !(v >= 0.0 && v < 1.0))
            fail(col, kind + ": alpha = " + fmt(v) +
                          " out of range, must be in [0,1)");
        if (key == "lambda" && !(v >= 0.0))
            fail(col, kind + ": lambda must be >= 0");
        if ((key == "a" || key == "b") && kind == "theorem5" && !(v >= 0.0))
            fail(col, "theorem5: need " + key + " >= 0");
        if (key == "eta" && !(v > 0.0)) fail(col, kind + ": eta must be > 0");
        if (key == "tol" && !(v > 0.0)) fail(col, kind + ": tol must be > 0");
        if (key == "delta" && !(v > 0.0))
            fail(col, kind + ": delta must be > 0");
        if (key == "rate" && !(v >= 0.0 && v < 1.0))
            fail(col, kind + ": rate must be in [0,1)");
    }

    void check_uint_range(const std::string& kind, const std::string& key,
                          std::uint64_t v, std::size_t col) const {
        if ((key == "n_samples" || key == "max_iters" || key == "window") &&
            v == 0)
            fail(col, kind + ": " + key + " must be >= 1");
        if (key == "trials" && v < 2)
            fail(col, kind + ": trials must be >= 2");
        if (key == "tail" && v < 2) fail(col, kind + ": tail must be >= 2");
        if (key == "N" && v < 2) fail(col, kind + ": N must be >= 2");
    }

    void joint_checks(const ExperimentDecl& decl, std::size_t col) const {
        if (decl.kind == "theorem5") {
            const double a = std::strtod(decl.args.at("a").c_str(), nullptr);
            const double b = std::strtod(decl.args.at("b").c_str(), nullptr);
            if (!(a + 2.0 * b < 1.0))
                fail(col, "theorem5: need a + 2b < 1, got a + 2b = " +
                              fmt(a + 2.0 * b));
        }
        const bool needs_map = decl.kind != "cauchy";
        if (needs_map && !spec_.map)
            fail(col, "experiment '" + decl.kind +
                          "' requires a 'map' declaration");
    }

    void require_space(std::size_t col) const {
        if (!has_space_)
            fail(col, "'space' must be declared before this directive");
    }

    const std::string& text_;
    ProblemSpec spec_;
    std::size_t line_ = 0;
    bool has_space_ = false;
};

}  // namespace

spec_error::spec_error(std::size_t line, std::size_t column,
                       const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

ProblemSpec parse_problem_spec(const std::string& text) {
    return SpecParser(text).run();
}

std::string ProblemSpec::to_text() const {
    std::string out = "altfix-spec v1\n";
    if (space.kind == CarrierKind::Box) {
        out += "space box dim=" + std::to_string(space.dim) + " lo=";
        for (std::size_t j = 0; j < space.lo.size(); ++j)
            out += (j ? "," : "") + fmt(space.lo[j]);
        out += " hi=";
        for (std::size_t j = 0; j < space.hi.size(); ++j)
            out += (j ? "," : "") + fmt(space.hi[j]);
        out += " metric=" + space.metric + "\n";
    } else {
        out += "space finite points=";
        for (std::size_t i = 0; i < space.point_labels.size(); ++i)
            out += (i ? "," : "") + space.point_labels[i];
        out += " table=";
        const std::size_t n = space.point_labels.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (i) out += ";";
            for (std::size_t j = 0; j < n; ++j)
                out += (j ? "," : "") + fmt(space.table[i * n + j]);
        }
        out += "\n";
    }
    if (map) {
        out += "map " + map->name + " = ";
        if (space.kind == CarrierKind::Finite) {
            for (std::size_t i = 0; i < map->images.size(); ++i)
                out += (i ? "," : "") + std::to_string(map->images[i]);
        } else {
            for (std::size_t i = 0; i < map->components.size(); ++i)
                out += (i ? ", " : "") + map->components[i].print();
        }
        out += "\n";
    }
    for (const auto& [name, d] : altering_decls)
        out += "altering " + name + " = " + d.body.print() + "\n";
    for (const auto& [name, d] : comparison_decls)
        out += "comparison " + name + " = " + d.body.print() + "\n";
    for (const auto& [name, d] : decay_decls)
        out += "decay " + name + " = " + d.body.print() + "\n";
    out += "seed " + std::to_string(seed) + "\n";
    out += "tol " + fmt(tol) + "\n";
    out += "max_iters " + std::to_string(max_iters) + "\n";
    out += "n_samples " + std::to_string(n_samples) + "\n";
    for (const ExperimentDecl& e : experiments) {
        out += "experiment " + e.kind;
        for (const auto& [k, v] : e.args) out += " " + k + "=" + v;
        out += "\n";
    }
    return out;
}

MetricSpace build_space(const ProblemSpec& spec) {
    if (spec.space.kind == CarrierKind::Finite)
        return MetricSpace::finite(spec.space.point_labels, spec.space.table,
                                   spec.seed);
    return MetricSpace::box(spec.space.dim, spec.space.lo, spec.space.hi,
                            spec.space.metric == "max"
                                ? BoxMetric::MaxCoordinate
                                : BoxMetric::Euclidean,
                            spec.seed);
}

SelfMap build_map(const ProblemSpec& spec) {
    if (!spec.map) throw spec_error(0, 0, "no 'map' declared");
    if (spec.space.kind == CarrierKind::Finite)
        return SelfMap::from_table(spec.map->images, spec.map->name);

    const std::size_t dim = spec.space.dim;
    auto components = spec.map->components;
    return SelfMap::from_function(
        [components, dim](const std::vector<double>& in) {
            std::map<std::string, double> env;
            for (std::size_t j = 0; j < dim; ++j)
                env["x" + std::to_string(j)] = in[j];
            if (dim == 1) env["x"] = in[0];
            std::vector<double> out(dim);
            for (std::size_t j = 0; j < dim; ++j)
                out[j] = components[j].eval(env);
            return out;
        },
        spec.map->name);
}

Point parse_point(const ProblemSpec& spec, const std::string& text) {
    if (spec.space.kind == CarrierKind::Finite) {
        const auto& labels = spec.space.point_labels;
        const auto it = std::find(labels.begin(), labels.end(), text);
        if (it == labels.end())
            throw std::invalid_argument("unknown point label '" + text + "'");
        return Point::at_index(static_cast<std::size_t>(it - labels.begin()));
    }
    std::vector<double> coords;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ','))
        coords.push_back(std::strtod(part.c_str(), nullptr));
    return Point::at(std::move(coords));
}

}  // namespace altfix
