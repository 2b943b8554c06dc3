#include "innc/geometry.hpp"

#include "innc/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace innc {

bool AffineForm::is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer &c) { return c == 0; });
}

AffineForm AffineForm::operator+(const AffineForm &other) const {
    if (dim() != other.dim())
        throw DimensionError("adding forms of dimension " + std::to_string(dim()) + " and " +
                             std::to_string(other.dim()));
    AffineForm out{coeffs, constant + other.constant};
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.coeffs[i] += other.coeffs[i];
    return out;
}

AffineForm AffineForm::scaled(const Integer &factor) const {
    AffineForm out{coeffs, constant * Rational(factor)};
    for (auto &c : out.coeffs)
        c *= factor;
    return out;
}

CubePoint::CubePoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] < 0 || coords_[i] > 1)
            throw DomainError("coordinate " + std::to_string(i) + " = " + to_string(coords_[i]) +
                              " lies outside [0, 1]");
}

HalfspaceSystem::HalfspaceSystem(std::size_t r, std::vector<AffineForm> forms)
    : r_(r), forms_(std::move(forms)) {
    for (const auto &f : forms_)
        if (f.dim() != r_)
            throw DimensionError("form of dimension " + std::to_string(f.dim()) +
                                 " in a system of dimension " + std::to_string(r_));
}

HalfspaceSystem HalfspaceSystem::without(std::size_t index) const {
    auto forms = forms_;
    forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(index));
    return HalfspaceSystem(r_, std::move(forms));
}

Rational evaluate_form(const AffineForm &form, const CubePoint &p) {
    if (form.dim() != p.dim())
        throw DimensionError("form of dimension " + std::to_string(form.dim()) +
                             " evaluated at a point of dimension " + std::to_string(p.dim()));
    Rational value = -form.constant;
    for (std::size_t i = 0; i < form.dim(); ++i)
        value += Rational(form.coeffs[i]) * p[i];
    return value;
}

bool contains(const HalfspaceSystem &sys, const CubePoint &p) {
    if (sys.dim() != p.dim())
        throw DimensionError("system of dimension " + std::to_string(sys.dim()) +
                             " queried at a point of dimension " + std::to_string(p.dim()));
    return std::all_of(sys.forms().begin(), sys.forms().end(),
                       [&](const AffineForm &f) { return evaluate_form(f, p) <= 0; });
}

std::vector<std::size_t> tight_set(const HalfspaceSystem &sys, const CubePoint &p) {
    if (!contains(sys, p))
        throw DomainError("tight_set: point is not a solution of the system");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < sys.forms().size(); ++i)
        if (evaluate_form(sys.forms()[i], p) == 0)
            out.push_back(i);
    return out;
}

std::size_t integer_rank(std::vector<std::vector<Integer>> rows) {
    // Bareiss elimination: every intermediate entry is a minor of the input.
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer v = rows[rank][col] * rows[i][j] - rows[i][col] * rows[rank][j];
                mpz_divexact(rows[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][col] = 0;
        }
        prev = rows[rank][col];
        ++rank;
    }
    return rank;
}

int face_dimension(std::span<const AffineForm> tight) {
    if (tight.empty())
        throw DomainError("face_dimension: empty system");
    const std::size_t r = tight.front().dim();
    std::vector<std::vector<Integer>> coeff_rows;
    std::vector<std::vector<Integer>> augmented_rows;
    for (const auto &f : tight) {
        if (f.dim() != r)
            throw DimensionError("face_dimension: forms of different dimension");
        coeff_rows.push_back(f.coeffs);
        // Clear the constant's denominator so the augmented row is integral.
        const Integer &den = f.constant.get_den();
        std::vector<Integer> row;
        row.reserve(r + 1);
        for (const auto &c : f.coeffs)
            row.push_back(c * den);
        row.push_back(f.constant.get_num());
        augmented_rows.push_back(std::move(row));
    }
    const std::size_t rank = integer_rank(coeff_rows);
    if (integer_rank(augmented_rows) != rank)
        throw DomainError("face_dimension: inconsistent system of equations");
    return static_cast<int>(r) - static_cast<int>(rank);
}

std::vector<AffineForm> box_tight_forms(const CubePoint &p) {
    std::vector<AffineForm> out;
    const std::size_t r = p.dim();
    for (std::size_t i = 0; i < r; ++i) {
        if (p[i] == 0) {
            AffineForm f{std::vector<Integer>(r, 0), 0};
            f.coeffs[i] = -1;
            out.push_back(std::move(f));
        } else if (p[i] == 1) {
            AffineForm f{std::vector<Integer>(r, 0), 1};
            f.coeffs[i] = 1;
            out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {

// Divides by the content of the coefficient vector so that parallel
// halfspaces share a coefficient key.
AffineForm primitive(AffineForm f) {
    Integer g = 0;
    for (const auto &c : f.coeffs)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1) {
        for (auto &c : f.coeffs)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        f.constant /= Rational(g);
    }
    return f;
}

struct CoeffLess {
    bool operator()(const std::vector<Integer> &a, const std::vector<Integer> &b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Keeps the tightest constant per coefficient direction. Returns false when
// a constant form 0 <= constant is violated.
bool reduce(std::vector<AffineForm> &forms) {
    std::map<std::vector<Integer>, Rational, CoeffLess> best;
    for (auto &raw : forms) {
        AffineForm f = primitive(std::move(raw));
        if (f.is_constant()) {
            if (f.constant < 0)
                return false;
            continue;
        }
        auto [it, inserted] = best.emplace(f.coeffs, f.constant);
        if (!inserted && f.constant < it->second)
            it->second = f.constant;
    }
    forms.clear();
    for (auto &[coeffs, constant] : best)
        forms.push_back(AffineForm{coeffs, constant});
    return true;
}

std::vector<AffineForm> eliminate(const std::vector<AffineForm> &forms, std::size_t var) {
    std::vector<const AffineForm *> upper, lower;
    std::vector<AffineForm> out;
    for (const auto &f : forms) {
        const int s = sgn(f.coeffs[var]);
        if (s > 0)
            upper.push_back(&f);
        else if (s < 0)
            lower.push_back(&f);
        else
            out.push_back(f);
    }
    for (const auto *u : upper) {
        for (const auto *l : lower) {
            Integer lu = abs(l->coeffs[var]);
            Integer uu = u->coeffs[var];
            out.push_back(u->scaled(lu) + l->scaled(uu));
        }
    }
    return out;
}

} // namespace

std::optional<CubePoint> relative_interior_point(std::size_t r,
                                                 std::span<const AffineForm> inequalities,
                                                 std::span<const AffineForm> equalities) {
    std::vector<AffineForm> forms;
    for (const auto &f : inequalities) {
        if (f.dim() != r)
            throw DimensionError("relative_interior_point: inequality of wrong dimension");
        forms.push_back(f);
    }
    for (const auto &f : equalities) {
        if (f.dim() != r)
            throw DimensionError("relative_interior_point: equality of wrong dimension");
        forms.push_back(f);
        forms.push_back(f.scaled(-1));
    }
    for (std::size_t i = 0; i < r; ++i) {
        AffineForm low{std::vector<Integer>(r, 0), 0};
        low.coeffs[i] = -1;
        AffineForm high{std::vector<Integer>(r, 0), 1};
        high.coeffs[i] = 1;
        forms.push_back(std::move(low));
        forms.push_back(std::move(high));
    }

    // levels[k] constrains x_0 .. x_{k-1} only; it is the exact projection.
    std::vector<std::vector<AffineForm>> levels(r + 1);
    if (!reduce(forms))
        return std::nullopt;
    levels[r] = std::move(forms);
    for (std::size_t k = r; k-- > 0;) {
        auto next = eliminate(levels[k + 1], k);
        if (!reduce(next))
            return std::nullopt;
        levels[k] = std::move(next);
    }

    std::vector<Rational> x(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
        std::optional<Rational> lo, hi;
        for (const auto &f : levels[k + 1]) {
            const Integer &ck = f.coeffs[k];
            if (ck == 0)
                continue;
            Rational rest = f.constant;
            for (std::size_t i = 0; i < k; ++i)
                rest -= Rational(f.coeffs[i]) * x[i];
            Rational bound = rest / Rational(ck);
            if (ck > 0) {
                if (!hi || bound < *hi)
                    hi = bound;
            } else if (!lo || bound > *lo) {
                lo = bound;
            }
        }
        if (!lo || !hi || *lo > *hi)
            throw InconsistencyError("relative_interior_point: projection lost feasibility");
        x[k] = (*lo + *hi) / 2;
    }
    return CubePoint(std::move(x));
}

std::vector<std::vector<Rational>> affine_span_key(std::span<const AffineForm> forms) {
    std::vector<std::vector<Rational>> rows;
    for (const auto &f : forms) {
        std::vector<Rational> row;
        for (const auto &c : f.coeffs)
            row.emplace_back(c);
        row.push_back(f.constant);
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        return rows;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[rank]);
        Rational inv = 1 / rows[rank][col];
        for (auto &v : rows[rank])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            Rational factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

} // namespace innc
