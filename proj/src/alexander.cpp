#include "knotcalc/alexander.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace knotcalc {

namespace {

using Matrix = std::vector<std::vector<LaurentPolynomial>>;

// Fraction-free elimination; every division is by a previous pivot and stays
// exact because the intermediate entries are minors of the input matrix.
LaurentPolynomial poly_det(Matrix m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPolynomial::constant(1);
    LaurentPolynomial prev = LaurentPolynomial::constant(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot == -1) return LaurentPolynomial();
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPolynomial one_minus_t() {
    LaurentPolynomial p = LaurentPolynomial::constant(1);
    return p - LaurentPolynomial::monomial(1, 1);
}

LaurentPolynomial geometric(int n) {  // 1 + t + ... + t^(n-1)
    LaurentPolynomial p;
    for (int i = 0; i < n; ++i) p = p + LaurentPolynomial::monomial(i, 1);
    return p;
}

void check_unit_at_one(const LaurentPolynomial& delta) {
    Integer v = delta.evaluate(1);
    if (v != 1 && v != -1)
        throw invariant_error("alexander polynomial must evaluate to a unit at 1");
}

}  // namespace

LaurentPolynomial canonical_alexander_form(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    LaurentPolynomial q = p.shifted(-p.min_exp());
    return q.coeff(0) < 0 ? -q : q;
}

LaurentPolynomial alexander_from_diagram(const PlanarDiagram& d) {
    if (d.component_count() != 1)
        throw invariant_error("alexander polynomial wants a single-component diagram");
    int n = d.crossing_count();
    if (n == 0) return LaurentPolynomial::constant(1);

    // Arcs are maximal over-strand runs: fuse the over-strand's in and out
    // edges at every crossing.
    std::vector<EdgeId> parent(d.edge_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId e) {
        while (parent[e] != e) e = parent[e] = parent[parent[e]];
        return e;
    };
    for (const Crossing& c : d.crossings()) parent[find(c.edge[1])] = find(c.edge[3]);
    std::vector<int> arc_of(d.edge_count(), -1);
    int arcs = 0;
    for (EdgeId e = 0; e < d.edge_count(); ++e) {
        EdgeId r = find(e);
        if (arc_of[r] == -1) arc_of[r] = arcs++;
        arc_of[e] = arc_of[r];
    }
    if (arcs != n) throw invariant_error("arc count must match crossing count");

    // Crossing relations: positive rows (1-t, t, -1), negative rows scaled by
    // a unit to stay polynomial: (t-1, 1, -t), indexed (over, in, out).
    Matrix m(n, std::vector<LaurentPolynomial>(n));
    LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
    LaurentPolynomial one = LaurentPolynomial::constant(1);
    for (int i = 0; i < n; ++i) {
        const Crossing& c = d.crossings()[i];
        int over = arc_of[c.edge[1]];
        int in = arc_of[c.edge[0]];
        int out = arc_of[c.edge[2]];
        if (c.sign > 0) {
            m[i][over] = m[i][over] + (one - t);
            m[i][in] = m[i][in] + t;
            m[i][out] = m[i][out] - one;
        } else {
            m[i][over] = m[i][over] + (t - one);
            m[i][in] = m[i][in] + one;
            m[i][out] = m[i][out] - t;
        }
    }
    Matrix minor(n - 1, std::vector<LaurentPolynomial>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) minor[i][j] = m[i][j];
    LaurentPolynomial delta = canonical_alexander_form(poly_det(std::move(minor)));
    check_unit_at_one(delta);
    return delta;
}

LaurentPolynomial alexander_from_braid(const BraidWord& b) {
    if (b.cycle_count() != 1) throw invariant_error("braid closure must be a knot");
    int n = b.strands;
    if (n == 1) return LaurentPolynomial::constant(1);

    int dim = n - 1;
    LaurentPolynomial t = LaurentPolynomial::monomial(1, 1);
    LaurentPolynomial tinv = LaurentPolynomial::monomial(-1, 1);
    Matrix m(dim, std::vector<LaurentPolynomial>(dim));
    for (int i = 0; i < dim; ++i) m[i][i] = LaurentPolynomial::constant(1);

    for (int l : b.letters) {
        int i = std::abs(l);  // basis indices 1..n-1, stored shifted by one
        Matrix g(dim, std::vector<LaurentPolynomial>(dim));
        for (int r = 0; r < dim; ++r) g[r][r] = LaurentPolynomial::constant(1);
        if (l > 0) {
            g[i - 1][i - 1] = -t;
            if (i - 2 >= 0) g[i - 1][i - 2] = t;
            if (i < dim) g[i - 1][i] = LaurentPolynomial::constant(1);
        } else {
            g[i - 1][i - 1] = -tinv;
            if (i - 2 >= 0) g[i - 1][i - 2] = LaurentPolynomial::constant(1);
            if (i < dim) g[i - 1][i] = tinv;
        }
        Matrix prod(dim, std::vector<LaurentPolynomial>(dim));
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                for (int k = 0; k < dim; ++k) prod[r][c] = prod[r][c] + m[r][k] * g[k][c];
        m = std::move(prod);
    }

    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            LaurentPolynomial diag = (r == c) ? LaurentPolynomial::constant(1) : LaurentPolynomial();
            m[r][c] = diag - m[r][c];
        }
    LaurentPolynomial det = canonical_alexander_form(poly_det(std::move(m)));
    if (det.is_zero()) throw invariant_error("reduced representation degenerated on a knot closure");
    LaurentPolynomial delta = canonical_alexander_form(det.divide_exact(geometric(n)));
    check_unit_at_one(delta);
    return delta;
}

LaurentPolynomial torus_alexander(int p, int q) {
    int pp = std::abs(p), qq = std::abs(q);
    if (pp < qq) std::swap(pp, qq);
    if (qq < 1 || std::gcd(pp, qq) != 1)
        throw invariant_error("torus parameters must be coprime and nonzero");
    if (qq == 1) return LaurentPolynomial::constant(1);

    auto power_minus_one = [](int e) {
        return LaurentPolynomial::monomial(e, 1) - LaurentPolynomial::constant(1);
    };
    LaurentPolynomial num = power_minus_one(pp * qq).divide_exact(power_minus_one(pp));
    LaurentPolynomial delta = (num * one_minus_t()).divide_exact(power_minus_one(qq));
    delta = canonical_alexander_form(delta);
    check_unit_at_one(delta);
    return delta;
}

LaurentPolynomial twist_alexander(int n) {
    if (n < 1) throw invariant_error("twist knots need at least one full twist");
    LaurentPolynomial p = LaurentPolynomial::constant(n);
    p = p - LaurentPolynomial::monomial(1, 2 * n + 1);
    p = p + LaurentPolynomial::monomial(2, n);
    return p;
}

LaurentPolynomial multiply_canonical(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return canonical_alexander_form(a * b);
}

Integer coefficient_of_t(const LaurentPolynomial& canonical) {
    if (canonical.min_exp() != 0 || canonical.coeff(0) != 1)
        throw invariant_error("t-coefficient is only well defined when the constant term is 1");
    return canonical.coeff(1);
}

LSpaceObstruction lspace_coefficient_obstruction(const LaurentPolynomial& canonical, bool strict) {
    if (canonical.is_zero()) throw invariant_error("zero polynomial is not an Alexander polynomial");
    int prev_sign = 0;
    for (int e = canonical.min_exp(); e <= canonical.max_exp(); ++e) {
        Integer c = canonical.coeff(e);
        if (c == 0) continue;
        if (c >= 2 || c <= -2) return LSpaceObstruction::Obstructed;
        if (strict) {
            int s = c > 0 ? 1 : -1;
            if (s == prev_sign) return LSpaceObstruction::Obstructed;
            prev_sign = s;
        }
    }
    return LSpaceObstruction::NotObstructed;
}

LaurentPolynomial symmetric_representative(const LaurentPolynomial& canonical) {
    if (canonical.is_zero()) return canonical;
    int span = canonical.span();
    if (span % 2 != 0) throw invariant_error("symmetric form needs even span");
    return canonical.shifted(-(canonical.min_exp() + span / 2));
}

bool monic(const LaurentPolynomial& p) {
    if (p.is_zero()) return false;
    Integer lo = p.coeff(p.min_exp()), hi = p.coeff(p.max_exp());
    return (lo == 1 || lo == -1) && (hi == 1 || hi == -1);
}

int alexander_genus_bound(const LaurentPolynomial& p) {
    if (p.is_zero()) return 0;
    int span = p.span();
    if (span % 2 != 0) throw invariant_error("knot polynomial must have even span");
    return span / 2;
}

namespace {

LaurentPolynomial normalized_mod(const LaurentPolynomial& p, int q) {
    LaurentPolynomial r = p.mod(q);
    if (r.is_zero()) return r;
    return r.shifted(-r.min_exp());
}

}  // namespace

bool murasugi_congruence(const LaurentPolynomial& whole, const LaurentPolynomial& factor, int p,
                         int lambda) {
    if (p < 2) throw invariant_error("period must be at least 2");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw invariant_error("period must be prime");
    if (lambda < 1) throw invariant_error("axis linking number must be positive");

    LaurentPolynomial rhs = LaurentPolynomial::constant(1);
    for (int i = 0; i < p; ++i) rhs = (rhs * factor).mod(p);
    LaurentPolynomial geo = geometric(lambda);
    for (int i = 0; i + 1 < p; ++i) rhs = (rhs * geo).mod(p);

    LaurentPolynomial lhs = normalized_mod(whole, p);
    LaurentPolynomial plus = normalized_mod(rhs, p);
    LaurentPolynomial minus = normalized_mod(-rhs, p);
    return lhs == plus || lhs == minus;
}

}  // namespace knotcalc
