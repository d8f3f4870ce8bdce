#include "aspbreak/smodels.hpp"

#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace aspbreak {

ParseError::ParseError(std::size_t line, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line)
{}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

/// Cursor over the integer tokens of one line.
class LineReader {
public:
    LineReader(std::string_view text, std::size_t line) : tokens_(split(text)), line_(line) {}

    bool empty() const { return tokens_.empty(); }
    bool done() const { return pos_ == tokens_.size(); }
    std::size_t remaining() const { return tokens_.size() - pos_; }
    std::string_view first() const { return tokens_.front(); }

    std::uint64_t number(const char* what)
    {
        if (done()) throw ParseError(line_, std::string("truncated rule line: missing ") + what);
        std::string_view tok = tokens_[pos_++];
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw ParseError(line_, "malformed integer '" + std::string(tok) + "' for " + what);
        }
        return value;
    }

    Atom atom(const char* what)
    {
        std::uint64_t v = number(what);
        if (v == 0 || v > 0xffffffffULL) {
            throw ParseError(line_, std::string("atom index out of range for ") + what);
        }
        return static_cast<Atom>(v);
    }

    std::vector<Atom> atoms(std::uint64_t n, const char* what)
    {
        if (n > remaining()) throw ParseError(line_, std::string("truncated rule line: missing ") + what);
        std::vector<Atom> out;
        out.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) out.push_back(atom(what));
        return out;
    }

    void finish()
    {
        if (!done()) throw ParseError(line_, "unexpected trailing tokens");
    }

    std::size_t line() const { return line_; }

private:
    std::vector<std::string_view> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

class Parser {
public:
    explicit Parser(std::istream& in) : in_(in) {}

    GroundProgram run()
    {
        GroundProgram p;
        read_rules(p);
        read_symbols(p);
        read_compute("B+", p.compute_plus);
        read_compute("B-", p.compute_minus);
        LineReader count = next_line("model count");
        p.model_count = count.number("model count");
        count.finish();
        while (std::getline(in_, text_)) {
            ++line_;
            if (!split(text_).empty()) throw ParseError(line_, "unexpected content after model count");
        }
        p.update_max_atom();
        return p;
    }

private:
    LineReader next_line(const char* expected)
    {
        while (std::getline(in_, text_)) {
            ++line_;
            LineReader r(text_, line_);
            if (!r.empty()) return r;
        }
        throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + expected);
    }

    void read_body(LineReader& r, Rule& rule)
    {
        std::uint64_t lits = r.number("literal count");
        std::uint64_t negs = r.number("negative literal count");
        if (negs > lits) throw ParseError(r.line(), "negative literal count exceeds literal count");
        read_body_atoms(r, rule, lits, negs);
    }

    void read_body_atoms(LineReader& r, Rule& rule, std::uint64_t lits, std::uint64_t negs)
    {
        rule.neg = r.atoms(negs, "negative body atom");
        rule.pos = r.atoms(lits - negs, "positive body atom");
    }

    void read_weights(LineReader& r, Rule& rule)
    {
        const std::size_t n = rule.pos.size() + rule.neg.size();
        if (r.remaining() != n) {
            throw ParseError(r.line(), "weight-count mismatch: expected " + std::to_string(n) +
                                           " weights, found " + std::to_string(r.remaining()));
        }
        for (std::size_t i = 0; i < n; ++i) {
            rule.weights.push_back(static_cast<Weight>(r.number("weight")));
        }
    }

    void read_rules(GroundProgram& p)
    {
        for (;;) {
            LineReader r = next_line("rule or section terminator");
            const std::uint64_t type = r.number("rule type");
            if (type == 0) {
                r.finish();
                return;
            }
            Rule rule;
            switch (type) {
            case 1:
                rule.kind = RuleKind::Basic;
                rule.heads = {r.atom("head")};
                read_body(r, rule);
                break;
            case 2: {
                rule.kind = RuleKind::Cardinality;
                rule.heads = {r.atom("head")};
                std::uint64_t lits = r.number("literal count");
                std::uint64_t negs = r.number("negative literal count");
                if (negs > lits) throw ParseError(r.line(), "negative literal count exceeds literal count");
                rule.bound = static_cast<Weight>(r.number("bound"));
                read_body_atoms(r, rule, lits, negs);
                break;
            }
            case 3:
            case 8: {
                rule.kind = type == 3 ? RuleKind::Choice : RuleKind::Disjunctive;
                std::uint64_t nheads = r.number("head count");
                if (nheads == 0) throw ParseError(r.line(), "rule needs at least one head atom");
                rule.heads = r.atoms(nheads, "head atom");
                read_body(r, rule);
                break;
            }
            case 5:
                rule.kind = RuleKind::Weight;
                rule.heads = {r.atom("head")};
                rule.bound = static_cast<Weight>(r.number("bound"));
                read_body(r, rule);
                read_weights(r, rule);
                break;
            case 6:
                rule.kind = RuleKind::Minimize;
                if (r.number("minimize marker") != 0) {
                    throw ParseError(r.line(), "minimize statement must start with '6 0'");
                }
                read_body(r, rule);
                read_weights(r, rule);
                break;
            default:
                throw ParseError(r.line(), "unknown rule type " + std::to_string(type));
            }
            r.finish();
            p.rules.push_back(std::move(rule));
        }
    }

    void read_symbols(GroundProgram& p)
    {
        std::set<std::string, std::less<>> names;
        for (;;) {
            LineReader r = next_line("symbol table entry or terminator");
            const Atom a = static_cast<Atom>(r.number("symbol atom"));
            if (a == 0) {
                r.finish();
                return;
            }
            // Names run to the end of the line; only surrounding whitespace is trimmed.
            std::string_view rest = text_;
            std::size_t i = 0;
            while (i < rest.size() && is_space(rest[i])) ++i;
            while (i < rest.size() && !is_space(rest[i])) ++i;
            while (i < rest.size() && is_space(rest[i])) ++i;
            std::size_t end = rest.size();
            while (end > i && is_space(rest[end - 1])) --end;
            std::string name(rest.substr(i, end - i));
            if (name.empty()) throw ParseError(line_, "symbol entry without a name");
            if (!names.insert(name).second) throw ParseError(line_, "duplicate symbol name '" + name + "'");
            if (!p.symbols.emplace(a, name).second) {
                throw ParseError(line_, "atom " + std::to_string(a) + " named twice");
            }
        }
    }

    void read_compute(std::string_view header, std::vector<Atom>& out)
    {
        LineReader h = next_line(std::string(header).c_str());
        if (h.first() != header || h.remaining() != 1) {
            throw ParseError(line_, "expected '" + std::string(header) + "'");
        }
        for (;;) {
            LineReader r = next_line("compute atom or terminator");
            const std::uint64_t a = r.number("compute atom");
            r.finish();
            if (a == 0) return;
            out.push_back(static_cast<Atom>(a));
        }
    }

    std::istream& in_;
    std::string text_;
    std::size_t line_ = 0;
};

void write_list(std::ostream& out, const std::vector<Atom>& atoms)
{
    for (Atom a : atoms) out << ' ' << a;
}

void write_body(std::ostream& out, const Rule& r)
{
    out << ' ' << r.pos.size() + r.neg.size() << ' ' << r.neg.size();
    write_list(out, r.neg);
    write_list(out, r.pos);
}

}  // namespace

GroundProgram parse_program(std::istream& in) { return Parser(in).run(); }

GroundProgram parse_program(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_program(in);
}

void write_program(const GroundProgram& p, std::ostream& out)
{
    for (const Rule& r : p.rules) {
        out << static_cast<int>(r.kind);
        switch (r.kind) {
        case RuleKind::Basic:
            out << ' ' << r.heads.at(0);
            write_body(out, r);
            break;
        case RuleKind::Cardinality:
            out << ' ' << r.heads.at(0) << ' ' << r.pos.size() + r.neg.size() << ' ' << r.neg.size()
                << ' ' << r.bound;
            write_list(out, r.neg);
            write_list(out, r.pos);
            break;
        case RuleKind::Choice:
        case RuleKind::Disjunctive:
            out << ' ' << r.heads.size();
            write_list(out, r.heads);
            write_body(out, r);
            break;
        case RuleKind::Weight:
            out << ' ' << r.heads.at(0) << ' ' << r.bound;
            write_body(out, r);
            for (Weight w : r.weights) out << ' ' << w;
            break;
        case RuleKind::Minimize:
            out << " 0";
            write_body(out, r);
            for (Weight w : r.weights) out << ' ' << w;
            break;
        }
        out << '\n';
    }
    out << "0\n";
    for (const auto& [atom, name] : p.symbols) out << atom << ' ' << name << '\n';
    out << "0\nB+\n";
    for (Atom a : p.compute_plus) out << a << '\n';
    out << "0\nB-\n";
    for (Atom a : p.compute_minus) out << a << '\n';
    out << "0\n" << p.model_count << '\n';
}

std::string write_program(const GroundProgram& p)
{
    std::ostringstream out;
    write_program(p, out);
    return out.str();
}

std::vector<Diagnostic> validate(const GroundProgram& p)
{
    std::vector<Diagnostic> out;
    auto report = [&out](DiagnosticKind k, std::size_t rule, std::string msg) {
        out.push_back(Diagnostic{k, rule, std::move(msg)});
    };
    auto check_range = [&](const std::vector<Atom>& atoms, std::size_t rule, const char* where) {
        for (Atom a : atoms) {
            if (a == 0 || a > p.max_atom) {
                report(DiagnosticKind::IndexRange, rule,
                       std::string(where) + ": atom " + std::to_string(a) + " outside 1.." +
                           std::to_string(p.max_atom));
            }
        }
    };

    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        const std::string where = "rule " + std::to_string(i) + " (" + to_string(r.kind) + ")";
        check_range(r.heads, i, where.c_str());
        check_range(r.pos, i, where.c_str());
        check_range(r.neg, i, where.c_str());
        switch (r.kind) {
        case RuleKind::Basic:
        case RuleKind::Cardinality:
        case RuleKind::Weight:
            if (r.heads.empty()) {
                report(DiagnosticKind::EmptyHead, i, where + ": headless rule is not representable");
            } else if (r.heads.size() > 1) {
                report(DiagnosticKind::HeadCount, i, where + ": expects exactly one head atom");
            }
            break;
        case RuleKind::Choice:
        case RuleKind::Disjunctive:
            if (r.heads.empty()) report(DiagnosticKind::EmptyHead, i, where + ": needs a head atom");
            break;
        case RuleKind::Minimize:
            if (!r.heads.empty()) report(DiagnosticKind::MinimizeHead, i, where + ": has head atoms");
            break;
        }
        if (r.has_bound() && r.bound < 0) {
            report(DiagnosticKind::NegativeBound, i, where + ": negative bound");
        }
        if (r.has_weights()) {
            if (r.weights.size() != r.pos.size() + r.neg.size()) {
                report(DiagnosticKind::WeightArity, i,
                       where + ": " + std::to_string(r.pos.size() + r.neg.size()) + " literals but " +
                           std::to_string(r.weights.size()) + " weights");
            }
            for (Weight w : r.weights) {
                if (w < 0) {
                    report(DiagnosticKind::NegativeWeight, i, where + ": negative weight");
                    break;
                }
            }
        } else if (!r.weights.empty()) {
            report(DiagnosticKind::WeightArity, i, where + ": weights on an unweighted rule");
        }
    }

    std::set<std::string, std::less<>> names;
    for (const auto& [atom, name] : p.symbols) {
        check_range({atom}, 0, "symbol table");
        if (!names.insert(name).second) {
            report(DiagnosticKind::DuplicateSymbol, 0, "duplicate symbol name '" + name + "'");
        }
    }
    check_range(p.compute_plus, 0, "B+");
    check_range(p.compute_minus, 0, "B-");
    return out;
}

}  // namespace aspbreak
