#include "innc/lattice.hpp"

#include "innc/errors.hpp"

#include <utility>

namespace innc {

namespace {

struct Workspace {
    IntegerMatrix rows;
    std::vector<Rational> phases;
    IntegerMatrix transform;
    bool track = false;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        std::swap(rows[a], rows[b]);
        std::swap(phases[a], phases[b]);
        if (track)
            std::swap(transform[a], transform[b]);
    }
    // row[dst] -= q * row[src]
    void subtract(std::size_t dst, std::size_t src, const Integer &q) {
        if (q == 0)
            return;
        for (std::size_t j = 0; j < rows[dst].size(); ++j)
            rows[dst][j] -= q * rows[src][j];
        phases[dst] = mod_one(phases[dst] - Rational(q) * phases[src]);
        if (track)
            for (std::size_t j = 0; j < transform[dst].size(); ++j)
                transform[dst][j] -= q * transform[src][j];
    }
    void negate(std::size_t i) {
        for (auto &v : rows[i])
            v = -v;
        phases[i] = mod_one(-phases[i]);
        if (track)
            for (auto &v : transform[i])
                v = -v;
    }
};

} // namespace

HermiteReduction hermite_reduce(IntegerMatrix rows, std::size_t cols, std::vector<Rational> phases,
                                bool track_transform) {
    for (const auto &row : rows)
        if (row.size() != cols)
            throw DimensionError("hermite_reduce: ragged matrix");
    if (phases.empty())
        phases.assign(rows.size(), Rational(0));
    if (phases.size() != rows.size())
        throw DimensionError("hermite_reduce: one phase per row required");

    Workspace w;
    w.track = track_transform;
    const std::size_t m = rows.size();
    w.rows = std::move(rows);
    w.phases.reserve(m);
    for (auto &p : phases)
        w.phases.push_back(mod_one(p));
    if (track_transform) {
        w.transform.assign(m, std::vector<Integer>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            w.transform[i][i] = 1;
    }

    HermiteReduction out;
    out.cols = cols;
    std::size_t prow = 0;
    for (std::size_t col = 0; col < cols && prow < m; ++col) {
        // Euclidean reduction of column `col` below prow.
        while (true) {
            std::size_t best = m;
            for (std::size_t i = prow; i < m; ++i)
                if (w.rows[i][col] != 0 &&
                    (best == m || abs(w.rows[i][col]) < abs(w.rows[best][col])))
                    best = i;
            if (best == m)
                break;
            w.swap_rows(prow, best);
            bool done = true;
            for (std::size_t i = prow + 1; i < m; ++i) {
                if (w.rows[i][col] == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), w.rows[i][col].get_mpz_t(),
                           w.rows[prow][col].get_mpz_t());
                w.subtract(i, prow, q);
                if (w.rows[i][col] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (w.rows[prow][col] == 0)
            continue;
        if (w.rows[prow][col] < 0)
            w.negate(prow);
        for (std::size_t i = 0; i < prow; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), w.rows[i][col].get_mpz_t(), w.rows[prow][col].get_mpz_t());
            w.subtract(i, prow, q);
        }
        out.pivots.push_back(col);
        ++prow;
    }
    for (std::size_t i = 0; i < prow; ++i) {
        out.basis.push_back(std::move(w.rows[i]));
        out.phases.push_back(w.phases[i]);
    }
    for (std::size_t i = prow; i < m; ++i) {
        out.relation_phases.push_back(w.phases[i]);
        if (track_transform)
            out.relations.push_back(std::move(w.transform[i]));
    }
    return out;
}

std::optional<Rational> lattice_phase(const HermiteReduction &h, const std::vector<Integer> &w) {
    if (w.size() != h.cols)
        throw DimensionError("lattice_phase: vector of wrong length");
    std::vector<Integer> rest = w;
    Rational phase = 0;
    for (std::size_t k = 0; k < h.basis.size(); ++k) {
        const std::size_t col = h.pivots[k];
        // Columns left of this pivot are already cleared.
        if (rest[col] == 0)
            continue;
        if (!mpz_divisible_p(rest[col].get_mpz_t(), h.basis[k][col].get_mpz_t()))
            return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), rest[col].get_mpz_t(), h.basis[k][col].get_mpz_t());
        for (std::size_t j = 0; j < h.cols; ++j)
            rest[j] -= q * h.basis[k][j];
        phase += Rational(q) * h.phases[k];
    }
    for (const auto &v : rest)
        if (v != 0)
            return std::nullopt;
    return mod_one(phase);
}

IntegerMatrix integer_kernel(const IntegerMatrix &m, std::size_t cols) {
    // Column operations on m are row operations on its transpose.
    IntegerMatrix transposed(cols, std::vector<Integer>(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != cols)
            throw DimensionError("integer_kernel: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
            transposed[j][i] = m[i][j];
    }
    auto red = hermite_reduce(std::move(transposed), m.size(), {}, true);
    return hermite_reduce(std::move(red.relations), cols).basis;
}

IntegerMatrix saturate(const IntegerMatrix &rows, std::size_t cols) {
    return integer_kernel(integer_kernel(rows, cols), cols);
}

} // namespace innc
