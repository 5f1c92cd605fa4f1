#include "symrep/hecke.hpp"

#include <array>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

namespace {

void check_relations(const HeckeModuleLab& m) {
    const auto id = ExactMatrix::identity(m.dim);
    if (!(m.x * m.y == m.y * m.x)) throw domain_error("H2 relation xy = yx fails");
    if (!(m.s * m.s == id)) throw domain_error("H2 relation s^2 = 1 fails");
    if (!(m.s * m.x == m.y * m.s - id)) throw domain_error("H2 relation sx = ys - 1 fails");
}

} // namespace

HeckeModuleLab hecke_L(const Rational& a, const Rational& b) {
    HeckeModuleLab m;
    m.a = a;
    m.b = b;
    if (b == a + 1 || b == a - 1) {
        m.dim = 1;
        m.x = ExactMatrix(1);
        m.y = ExactMatrix(1);
        m.s = ExactMatrix(1);
        m.x(0, 0) = a;
        m.y(0, 0) = b;
        m.s(0, 0) = (b == a + 1) ? 1 : -1;
    } else {
        m.dim = 2;
        m.x = ExactMatrix(2);
        m.y = ExactMatrix(2);
        m.s = ExactMatrix(2);
        m.x(0, 0) = a; m.x(0, 1) = -1; m.x(1, 1) = b;
        m.y(0, 0) = b; m.y(0, 1) = 1;  m.y(1, 1) = a;
        m.s(0, 1) = 1; m.s(1, 0) = 1;
    }
    check_relations(m);
    return m;
}

bool hecke_iso_check(const Rational& a, const Rational& b,
                     const Rational& c, const Rational& d) {
    const HeckeModuleLab lhs = hecke_L(a, b);
    const HeckeModuleLab rhs = hecke_L(c, d);
    if (lhs.dim != 2 || rhs.dim != 2)
        throw domain_error("hecke_iso_check requires two-dimensional modules");

    // Unknown 2x2 matrix M with M lhs.g = rhs.g M for g in {x, y, s}:
    // a 12x4 homogeneous system, unknown M_{pq} at index 2p + q.
    std::vector<std::array<Rational, 4>> rows;
    using Member = ExactMatrix HeckeModuleLab::*;
    for (Member g : {&HeckeModuleLab::x, &HeckeModuleLab::y, &HeckeModuleLab::s}) {
        const ExactMatrix& l = lhs.*g;
        const ExactMatrix& r = rhs.*g;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                std::array<Rational, 4> row{};
                for (int k = 0; k < 2; ++k) {
                    row[2 * i + k] += l(k, j);
                    row[2 * k + j] -= r(i, k);
                }
                rows.push_back(row);
            }
    }

    // Reduced row echelon form.
    int rank = 0;
    std::array<int, 4> pivot_row{-1, -1, -1, -1};
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational f = rows[r][col] / rows[rank][col];
            for (int cc = 0; cc < 4; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    if (rank >= 4) return false; // only the zero intertwiner

    // The intertwiner space of two irreducible modules is at most one-
    // dimensional, so one nullspace vector decides the question.
    std::array<Rational, 4> sol{};
    int free_col = -1;
    for (int col = 0; col < 4; ++col)
        if (pivot_row[col] < 0) { free_col = col; break; }
    sol[free_col] = 1;
    for (int col = 0; col < 4; ++col) {
        if (pivot_row[col] < 0) continue;
        const auto& row = rows[pivot_row[col]];
        sol[col] = -row[free_col] / row[col];
    }
    const Rational det = sol[0] * sol[3] - sol[1] * sol[2];
    return det != 0;
}

bool hecke_iso_check(const Rational& a, const Rational& b) {
    if (a == b || a == b + 1 || a == b - 1)
        throw domain_error("hecke_iso_check requires a != b and a != b +- 1");
    return hecke_iso_check(a, b, b, a);
}

} // namespace symrep
