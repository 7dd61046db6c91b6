#include "varsamp/system_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace varsamp {

namespace {

struct Cursor {
    const std::string& line;
    int line_no;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= line.size();
    }
    char peek() {
        skip_ws();
        return line[pos];
    }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_no, col()); }

    bool eat(char c) {
        if (done() || line[pos] != c) return false;
        ++pos;
        return true;
    }

    std::uint64_t number() {
        skip_ws();
        if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
            fail("expected a number");
        std::uint64_t v = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(line[pos] - '0');
            if (v > (~0ull - digit) / 10) fail("number too large");
            v = v * 10 + digit;
            ++pos;
        }
        return v;
    }
};

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Longest declared variable name starting at the cursor, or npos.
std::size_t match_var(const Cursor& cur, const std::vector<std::string>& names) {
    std::size_t best = std::string::npos;
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string& nm = names[i];
        if (nm.size() > best_len && cur.line.compare(cur.pos, nm.size(), nm) == 0) {
            best = i;
            best_len = nm.size();
        }
    }
    return best;
}

MultiPoly parse_poly_line(const std::string& line, int line_no, const Field& field,
                          const std::vector<std::string>& names) {
    Cursor cur{line, line_no};
    const std::size_t n = names.size();
    std::vector<Term> terms;

    bool negative = false;
    if (cur.eat('-'))
        negative = true;
    else
        cur.eat('+');

    for (;;) {
        // One term: optional coefficient, then variable factors.
        if (cur.done()) cur.fail("expected a term");
        FieldElement coeff = field.one();
        Monomial mono(n);
        bool saw_factor = false;

        for (;;) {
            if (cur.done()) break;
            char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * field.element(cur.number());
                saw_factor = true;
            } else if (is_name_char(c)) {
                std::size_t vi = match_var(cur, names);
                if (vi == std::string::npos) {
                    std::size_t start = cur.pos;
                    while (start < cur.line.size() && is_name_char(cur.line[start])) ++start;
                    throw UndeclaredVariable("undeclared variable '" +
                                             cur.line.substr(cur.pos, start - cur.pos) +
                                             "' at line " + std::to_string(line_no));
                }
                cur.pos += names[vi].size();
                std::uint64_t e = 1;
                if (cur.eat('^')) e = cur.number();
                if (e > 1'000'000) cur.fail("exponent too large");
                mono[vi] += static_cast<std::uint32_t>(e);
                saw_factor = true;
            } else {
                break;
            }
            if (!cur.eat('*')) {
                // '*' is optional; keep consuming juxtaposed factors, but a
                // digit directly after a variable factor would be ambiguous.
                if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())) &&
                    saw_factor && !mono.is_constant())
                    cur.fail("exponents need '^' (digit cannot follow a variable)");
            }
        }
        if (!saw_factor) cur.fail("expected a coefficient or a variable");
        terms.push_back(Term{std::move(mono), negative ? -coeff : coeff});

        if (cur.done()) break;
        if (cur.eat('+'))
            negative = false;
        else if (cur.eat('-'))
            negative = true;
        else
            cur.fail("expected '+', '-' or end of line");
    }
    return MultiPoly(field, n, std::move(terms));
}

} // namespace

SystemFile parse_system(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    std::uint64_t q = 0;
    bool have_q = false;
    std::vector<std::string> names;
    bool have_vars = false;
    std::vector<std::pair<std::string, int>> poly_lines;

    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = line;
        if (auto hash = stripped.find('#'); hash != std::string::npos) stripped.resize(hash);
        bool blank = std::all_of(stripped.begin(), stripped.end(),
                                 [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (blank) continue;

        if (!have_q) {
            Cursor cur{stripped, line_no};
            if (!cur.eat('q')) cur.fail("expected header 'q=<prime>'");
            if (!cur.eat('=')) cur.fail("expected '=' after 'q'");
            q = cur.number();
            if (!cur.done()) cur.fail("trailing input after the modulus");
            have_q = true;
            continue;
        }
        if (!have_vars) {
            Cursor cur{stripped, line_no};
            cur.skip_ws();
            if (stripped.compare(cur.pos, 4, "vars") != 0)
                cur.fail("expected header 'vars: <names>'");
            cur.pos += 4;
            if (!cur.eat(':')) cur.fail("expected ':' after 'vars'");
            for (;;) {
                cur.skip_ws();
                std::size_t start = cur.pos;
                while (cur.pos < stripped.size() && is_name_char(stripped[cur.pos])) ++cur.pos;
                if (cur.pos == start) cur.fail("expected a variable name");
                std::string nm = stripped.substr(start, cur.pos - start);
                if (std::isdigit(static_cast<unsigned char>(nm[0])))
                    cur.fail("variable names cannot start with a digit");
                if (std::find(names.begin(), names.end(), nm) != names.end())
                    cur.fail("duplicate variable name '" + nm + "'");
                names.push_back(std::move(nm));
                if (!cur.eat(',')) break;
            }
            if (!cur.done()) cur.fail("trailing input after the variable list");
            have_vars = true;
            continue;
        }
        poly_lines.emplace_back(stripped, line_no);
    }

    if (!have_q) throw ParseError("missing 'q=<prime>' header", line_no + 1, 1);
    if (!have_vars) throw ParseError("missing 'vars:' header", line_no + 1, 1);
    if (poly_lines.empty()) throw ParseError("no polynomials given", line_no + 1, 1);
    if (poly_lines.size() > MAX_K)
        throw TooManyPolys("system has " + std::to_string(poly_lines.size()) +
                           " polynomials; the cap is " + std::to_string(MAX_K));

    Field field(q); // CompositeModulus / EvenModulus propagate from here
    std::vector<MultiPoly> polys;
    polys.reserve(poly_lines.size());
    for (const auto& [pl, no] : poly_lines) polys.push_back(parse_poly_line(pl, no, field, names));
    return SystemFile{PolySystem(field, names.size(), std::move(polys)), names};
}

std::string format_poly(const MultiPoly& f, const std::vector<std::string>& var_names) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : f.terms()) {
        if (!first) out << " + ";
        first = false;
        bool constant = t.mono.is_constant();
        bool need_coeff = constant || t.coeff.value() != 1;
        if (need_coeff) out << t.coeff.value();
        bool star = need_coeff;
        for (std::size_t v = 0; v < t.mono.num_vars(); ++v) {
            if (t.mono[v] == 0) continue;
            if (star) out << "*";
            out << var_names[v];
            if (t.mono[v] > 1) out << "^" << t.mono[v];
            star = true;
        }
    }
    return out.str();
}

std::string format_system(const SystemFile& s) {
    std::ostringstream out;
    out << "q=" << s.system.field().modulus() << "\n";
    out << "vars: ";
    for (std::size_t i = 0; i < s.var_names.size(); ++i) {
        if (i) out << ", ";
        out << s.var_names[i];
    }
    out << "\n";
    for (const MultiPoly& f : s.system.polys()) out << format_poly(f, s.var_names) << "\n";
    return out.str();
}

} // namespace varsamp
