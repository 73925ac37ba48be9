#include "knotcalc/formats.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

std::string strip_comments(const std::string& text) {
    std::string out;
    bool skip = false;
    for (char ch : text) {
        if (ch == '#') skip = true;
        if (ch == '\n') skip = false;
        if (!skip) out.push_back(ch);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Scanner {
    std::string s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    // No whitespace skipping: used for suffixes glued to the previous token.
    bool accept_immediate(char c) {
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!accept(c)) throw parse_error("expected '" + std::string(1, c) + "' in " + what);
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s.compare(i, w.size(), w) != 0) return false;
        size_t end = i + w.size();
        if (end < s.size() && word_char(s[end]) && word_char(w.back())) return false;
        i = end;
        return true;
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
};

// Union-find tracking sign parity between crossings; node `ground` is +.
struct ParityUF {
    std::vector<int> parent;
    std::vector<int> par;  // parity of the edge to the parent

    explicit ParityUF(int n) : parent(n), par(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, int> find(int x) {
        if (parent[x] == x) return {x, 0};
        auto [root, pp] = find(parent[x]);
        par[x] ^= pp;
        parent[x] = root;
        return {root, par[x]};
    }
    bool unite(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        parent[ra] = rb;
        par[ra] = pa ^ pb ^ rel;
        return true;
    }
};

struct PdRecord {
    std::array<EdgeId, 4> edge{};
    int sign = 0;  // 0 when the file leaves it implicit
};

PdRecord scan_crossing(Scanner& sc) {
    sc.expect('(', "crossing record");
    PdRecord r;
    for (int k = 0; k < 4; ++k) {
        r.edge[k] = sc.integer("edge label");
        if (r.edge[k] < 0) throw parse_error("edge labels must be nonnegative");
        if (k < 3) sc.expect(',', "crossing record");
    }
    sc.expect(')', "crossing record");
    if (sc.accept_immediate('+')) r.sign = 1;
    else if (sc.accept_immediate('-')) r.sign = -1;
    return r;
}

// Resolves implicit crossing signs so that every edge has one head and one
// tail.  Slots 0/2 are always in/out; slot 3 receives its edge exactly for
// positive crossings and slot 1 exactly for negative ones.
std::vector<Crossing> infer_signs(const std::vector<PdRecord>& recs) {
    int n = static_cast<int>(recs.size());
    ParityUF uf(n + 1);
    const int ground = n;
    auto force = [&](int c, int sign) {
        if (!uf.unite(c, ground, sign > 0 ? 0 : 1))
            throw parse_error("crossing " + std::to_string(c) +
                              ": orientations are inconsistent");
    };
    for (int c = 0; c < n; ++c)
        if (recs[c].sign != 0) force(c, recs[c].sign);

    std::map<EdgeId, std::vector<std::pair<int, int>>> occ;
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) occ[recs[c].edge[k]].push_back({c, k});

    for (const auto& [e, v] : occ) {
        if (v.size() != 2)
            throw parse_error("edge " + std::to_string(e) + " must appear exactly twice");
        // 0: head, 1: tail, 2: head iff sign +, 3: head iff sign -
        auto kind = [](int slot) { return slot == 0 ? 0 : slot == 2 ? 1 : slot == 3 ? 2 : 3; };
        int k1 = kind(v[0].second), c1 = v[0].first;
        int k2 = kind(v[1].second), c2 = v[1].first;
        if (k1 > k2) {
            std::swap(k1, k2);
            std::swap(c1, c2);
        }
        std::string tag = "edge " + std::to_string(e);
        if (k1 == 0 && k2 == 0) throw parse_error(tag + " runs into two crossings");
        if (k1 == 1 && k2 == 1) throw parse_error(tag + " runs out of two crossings");
        if (k1 <= 1 && k2 >= 2) {
            bool need_head = (k1 == 1);
            bool plus = (k2 == 2) ? need_head : !need_head;
            force(c2, plus ? 1 : -1);
        } else if (k1 >= 2) {
            // both ends on over-strands: same head-if-plus flag means the
            // signs must differ, opposite flags mean they must agree
            int rel = (k1 == k2) ? 1 : 0;
            if (!uf.unite(c1, c2, rel))
                throw parse_error(tag + ": orientations are inconsistent");
        }
    }

    int groot = uf.find(ground).first;
    std::vector<Crossing> out(n);
    for (int c = 0; c < n; ++c) {
        auto [root, parity] = uf.find(c);
        if (root != groot)
            throw parse_error("crossing " + std::to_string(c) +
                              ": sign is undetermined; add an explicit +/- suffix");
        out[c].edge = recs[c].edge;
        out[c].sign = parity == 0 ? 1 : -1;
    }
    return out;
}

}  // namespace

PlanarDiagram parse_pd_text(const std::string& text) {
    Scanner sc{strip_comments(text)};
    std::vector<PdRecord> recs;
    int loops = 0;
    while (!sc.done()) {
        if (sc.accept_word("loops")) {
            sc.expect(':', "loop count");
            loops = sc.integer("loop count");
            if (loops < 0) throw parse_error("loop count must be nonnegative");
            continue;
        }
        if (!sc.accept('X')) throw parse_error("expected a crossing record 'X(a,b,c,d)'");
        recs.push_back(scan_crossing(sc));
    }
    return PlanarDiagram(infer_signs(recs), loops);
}

std::string render_pd_text(const PlanarDiagram& d) {
    std::ostringstream os;
    for (const Crossing& c : d.crossings())
        os << "X(" << c.edge[0] << "," << c.edge[1] << "," << c.edge[2] << "," << c.edge[3]
           << ")" << (c.sign > 0 ? '+' : '-') << "\n";
    if (d.free_loops() > 0) os << "loops: " << d.free_loops() << "\n";
    return os.str();
}

PlanarDiagram load_pd_file(const std::string& path) { return parse_pd_text(read_file(path)); }

BraidWord parse_braid_text(const std::string& text) {
    Scanner sc{strip_comments(text)};
    if (!sc.accept_word("BR")) throw parse_error("braid text must start with 'BR n:'");
    int n = sc.integer("strand count");
    sc.expect(':', "braid header");
    std::vector<int> letters;
    while (!sc.done()) letters.push_back(sc.integer("braid letter"));
    return BraidWord(n, std::move(letters));
}

std::string render_braid_text(const BraidWord& b) {
    std::ostringstream os;
    os << "BR " << b.strands << ":";
    for (int w : b.letters) os << " " << w;
    os << "\n";
    return os.str();
}

BraidWord load_braid_file(const std::string& path) { return parse_braid_text(read_file(path)); }

namespace {

AnnularTangle::Boundary scan_boundary(Scanner& sc, const std::string& side) {
    AnnularTangle::Boundary entries;
    while (true) {
        int e = sc.integer(side + " boundary entry");
        if (e < 0) throw parse_error("edge labels must be nonnegative");
        int dir;
        if (sc.accept_immediate('+')) dir = 1;
        else if (sc.accept_immediate('-')) dir = -1;
        else throw parse_error(side + " boundary entry needs a direction suffix + or -");
        entries.push_back({e, dir});
        if (!sc.accept(',')) break;
    }
    return entries;
}

}  // namespace

AnnularTangle parse_tangle_text(const std::string& text) {
    Scanner sc{strip_comments(text)};
    std::vector<Crossing> crossings;
    while (!sc.done() && !sc.accept_word("L")) {
        if (!sc.accept('X')) throw parse_error("expected a crossing record or an 'L:' line");
        PdRecord r = scan_crossing(sc);
        if (r.sign == 0) throw parse_error("tangle crossings need explicit +/- signs");
        crossings.push_back({r.edge, r.sign});
    }
    sc.expect(':', "left boundary line");
    AnnularTangle::Boundary left = scan_boundary(sc, "left");
    if (!sc.accept_word("R")) throw parse_error("expected an 'R:' line");
    sc.expect(':', "right boundary line");
    AnnularTangle::Boundary right = scan_boundary(sc, "right");
    if (!sc.done()) throw parse_error("unexpected trailing text after the boundary lines");
    return AnnularTangle(std::move(crossings), std::move(left), std::move(right));
}

std::string render_tangle_text(const AnnularTangle& t) {
    std::ostringstream os;
    for (const Crossing& c : t.crossings())
        os << "X(" << c.edge[0] << "," << c.edge[1] << "," << c.edge[2] << "," << c.edge[3]
           << ")" << (c.sign > 0 ? '+' : '-') << "\n";
    auto side = [&](const char* name, const AnnularTangle::Boundary& b) {
        os << name << ":";
        for (size_t i = 0; i < b.size(); ++i)
            os << (i ? ", " : " ") << b[i].first << (b[i].second > 0 ? '+' : '-');
        os << "\n";
    };
    side("L", t.left());
    side("R", t.right());
    return os.str();
}

AnnularTangle load_tangle_file(const std::string& path) {
    return parse_tangle_text(read_file(path));
}

namespace {

struct SlopeExprParser {
    Scanner sc;

    SlopeSet expr() {
        SlopeSet v = term();
        while (sc.accept_word("u") || sc.accept_word("U")) v = v.unite(term());
        return v;
    }

    SlopeSet term() {
        sc.skip_ws();
        size_t save = sc.i;
        std::string name;
        while (sc.i < sc.s.size() && std::isalpha(static_cast<unsigned char>(sc.s[sc.i])))
            name.push_back(sc.s[sc.i++]);
        if (!name.empty() && sc.accept('(')) {
            if (name == "scale") {
                SlopeSet inner = expr();
                sc.expect(',', "scale arguments");
                Rational f = rational("scale factor");
                sc.expect(')', "scale arguments");
                return inner.scale(f);
            }
            if (name == "negate" || name == "complement") {
                SlopeSet inner = expr();
                sc.expect(')', name + " argument");
                return name == "negate" ? inner.negate() : inner.complement();
            }
            if (name == "union" || name == "intersect") {
                SlopeSet x = expr();
                sc.expect(',', name + " arguments");
                SlopeSet y = expr();
                sc.expect(')', name + " arguments");
                return name == "union" ? x.unite(y) : x.intersect(y);
            }
            throw parse_error("unknown slope operation: " + name);
        }
        sc.i = save;
        return literal();
    }

    Rational rational(const std::string& what) {
        sc.skip_ws();
        size_t start = sc.i;
        while (sc.i < sc.s.size() && (std::isdigit(static_cast<unsigned char>(sc.s[sc.i])) ||
                                      sc.s[sc.i] == '-' || sc.s[sc.i] == '/'))
            ++sc.i;
        if (sc.i == start) throw parse_error("expected a rational for " + what);
        return Rational::parse(sc.s.substr(start, sc.i - start));
    }

    SlopeSet literal() {
        sc.skip_ws();
        if (sc.accept_word("Q")) return SlopeSet::all();
        if (sc.i >= sc.s.size()) throw parse_error("expected a slope set");
        char open = sc.s[sc.i];
        // an interval may open with ( or [ and close with ) or ]
        size_t end = (open == '{')   ? sc.s.find('}', sc.i)
                     : (open == '(' || open == '[') ? sc.s.find_first_of(")]", sc.i)
                                                    : std::string::npos;
        if (end == std::string::npos) throw parse_error("expected a slope-set literal");
        std::string token = sc.s.substr(sc.i, end - sc.i + 1);
        sc.i = end + 1;
        return SlopeSet::parse(token);
    }
};

}  // namespace

SlopeSet parse_slope_expression(const std::string& text) {
    SlopeExprParser p{Scanner{text}};
    SlopeSet v = p.expr();
    if (!p.sc.done()) throw parse_error("unexpected trailing text in slope expression");
    return v;
}

}  // namespace knotcalc
