#include <cctype>
#include <string>

#include "knotcalc/classify.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/formats.hpp"

namespace knotcalc {

namespace {

struct ExprParser {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) throw parse_error("expected '" + std::string(1, c) + "' in " + what);
    }
    std::string ident() {
        skip_ws();
        std::string out;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            out.push_back(s[i++]);
        return out;
    }
    int integer(const std::string& what) {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) throw parse_error("expected an integer for " + what);
        try {
            return std::stoi(s.substr(start, i - start));
        } catch (const std::exception&) {
            throw parse_error("integer out of range for " + what);
        }
    }
    // Quoted string, or a bare token running to the next ',' or ')'.
    std::string quoted_or_path(const std::string& what) {
        skip_ws();
        if (i < s.size() && s[i] == '"') {
            size_t end = s.find('"', i + 1);
            if (end == std::string::npos) throw parse_error("unterminated string in " + what);
            std::string out = s.substr(i + 1, end - i - 1);
            i = end + 1;
            return out;
        }
        size_t start = i;
        while (i < s.size() && s[i] != ',' && s[i] != ')' && s[i] != '(') ++i;
        size_t end = i;
        while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
        if (end == start) throw parse_error("expected a file path for " + what);
        return s.substr(start, end - start);
    }

    ExprPtr expr() {
        std::string name = ident();
        if (name.empty()) throw parse_error("expected a knot expression");
        if (name == "trivial") return make_trivial();
        if (name == "fig8") return make_figure_eight();
        if (name == "torus") {
            expect('(', "torus");
            int p = integer("torus p");
            expect(',', "torus");
            int q = integer("torus q");
            expect(')', "torus");
            return make_torus(p, q);
        }
        if (name == "twist") {
            expect('(', "twist");
            int n = integer("twist count");
            expect(')', "twist");
            return make_twist(n);
        }
        if (name == "mirror") {
            expect('(', "mirror");
            ExprPtr e = expr();
            expect(')', "mirror");
            return make_mirror(std::move(e));
        }
        if (name == "sum") {
            expect('(', "sum");
            ExprPtr a = expr();
            expect(',', "sum");
            ExprPtr b = expr();
            expect(')', "sum");
            return make_sum(std::move(a), std::move(b));
        }
        if (name == "nsum") {
            expect('(', "nsum");
            ExprPtr a = expr();
            expect(',', "nsum");
            int p = integer("copy count");
            expect(')', "nsum");
            return make_repeated_sum(std::move(a), p);
        }
        if (name == "braid") {
            expect('(', "braid");
            skip_ws();
            bool inline_word = i < s.size() && s[i] == '"';
            std::string arg = quoted_or_path("braid");
            expect(')', "braid");
            BraidWord w = inline_word ? parse_braid_text(arg) : load_braid_file(arg);
            return make_braid_closure(std::move(w));
        }
        if (name == "pd") {
            expect('(', "pd");
            std::string path = quoted_or_path("pd");
            expect(')', "pd");
            return make_diagram(load_pd_file(path));
        }
        if (name == "periodic") {
            expect('(', "periodic");
            std::string path = quoted_or_path("periodic");
            expect(',', "periodic");
            int p = integer("period");
            GeometricAssertions asserts;
            ExprPtr claimed;
            while (accept(',')) {
                std::string key = ident();
                expect('=', "periodic option");
                if (key == "assert") {
                    do {
                        std::string v = ident();
                        if (v == "fiber") asserts.fiber_excess = true;
                        else if (v == "perp") asserts.perpendicular = true;
                        else if (v == "irreducible") asserts.irreducible = true;
                        else throw parse_error("unknown assertion: " + v);
                    } while (accept('+'));
                } else if (key == "factor") {
                    claimed = expr();
                } else {
                    throw parse_error("unknown periodic option: " + key);
                }
            }
            expect(')', "periodic");
            return make_periodic(load_tangle_file(path), p, asserts, std::move(claimed));
        }
        if (name == "satellite") {
            expect('(', "satellite");
            ExprPtr pattern = expr();
            expect(',', "satellite");
            ExprPtr companion = expr();
            bool irreducible = false;
            while (accept(',')) {
                std::string key = ident();
                expect('=', "satellite option");
                if (key != "assert") throw parse_error("unknown satellite option: " + key);
                std::string v = ident();
                if (v != "irreducible") throw parse_error("unknown assertion: " + v);
                irreducible = true;
            }
            expect(')', "satellite");
            return make_satellite(std::move(pattern), std::move(companion), irreducible);
        }
        throw parse_error("unknown knot constructor: " + name);
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text) {
    ExprParser p{text};
    ExprPtr e = p.expr();
    p.skip_ws();
    if (p.i != text.size())
        throw parse_error("unexpected trailing text in knot expression");
    return e;
}

}  // namespace knotcalc
