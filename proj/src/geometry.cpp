#include "barycalc/geometry.hpp"

#include "barycalc/errors.hpp"

#include <cstddef>
#include <vector>

namespace barycalc {

namespace {

// Phase-I tableau: minimize the sum of artificial variables subject to
//   [G; 1^T] w + I a = [p; 1],  w >= 0, a >= 0,
// after flipping rows so the right-hand side is nonnegative. Feasibility of
// the original system is equivalent to an optimum of zero. Bland's rule
// (least-index entering, least-index leaving on ratio ties) guarantees
// termination without any magnitude heuristics.
class PhaseOneSimplex {
public:
    PhaseOneSimplex(const std::vector<Coordinates>& gens, const Coordinates& p) {
        rows_ = p.size() + 1;
        structural_ = gens.size();
        cols_ = structural_ + rows_;
        a_.assign(rows_, std::vector<Rational>(cols_, Rational(0)));
        b_.assign(rows_, Rational(0));
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t j = 0; j < structural_; ++j) {
                a_[r][j] = (r + 1 == rows_) ? Rational(1) : gens[j][r];
            }
            b_[r] = (r + 1 == rows_) ? Rational(1) : p[r];
            if (b_[r].sign() < 0) {
                b_[r] = -b_[r];
                for (auto& v : a_[r]) {
                    v = -v;
                }
            }
            a_[r][structural_ + r] = Rational(1);
        }
        basis_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            basis_[r] = structural_ + r;
        }
    }

    bool feasible() {
        while (true) {
            // Reduced cost of nonbasic column j for the phase-I objective:
            // c_j minus the accumulated cost of the artificial basic rows it
            // touches, where c_j is 1 on artificials and 0 otherwise.
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
                if (is_basic(j)) {
                    continue;
                }
                Rational reduced = j >= structural_ ? Rational(1) : Rational(0);
                for (std::size_t r = 0; r < rows_; ++r) {
                    if (basis_[r] >= structural_) {
                        reduced -= a_[r][j];
                    }
                }
                if (reduced.sign() < 0) {
                    enter = j;
                }
            }
            if (enter == cols_) {
                break;  // optimal
            }
            std::size_t leave = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (a_[r][enter].sign() <= 0) {
                    continue;
                }
                Rational ratio = b_[r] / a_[r][enter];
                if (leave == rows_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == rows_) {
                break;  // unbounded cannot happen in phase I; bail out
            }
            pivot(leave, enter);
        }
        Rational objective;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] >= structural_) {
                objective += b_[r];
            }
        }
        return objective.is_zero();
    }

private:
    bool is_basic(std::size_t j) const {
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] == j) {
                return true;
            }
        }
        return false;
    }

    void pivot(std::size_t leave, std::size_t enter) {
        const Rational inv = a_[leave][enter].reciprocal();
        for (auto& v : a_[leave]) {
            v *= inv;
        }
        b_[leave] *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == leave || a_[r][enter].is_zero()) {
                continue;
            }
            const Rational f = a_[r][enter];
            for (std::size_t j = 0; j < cols_; ++j) {
                a_[r][j] -= f * a_[leave][j];
            }
            b_[r] -= f * b_[leave];
        }
        basis_[leave] = enter;
    }

    std::size_t rows_ = 0;
    std::size_t structural_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_;
    std::vector<std::size_t> basis_;
};

}  // namespace

bool hull_contains(const std::vector<Coordinates>& generators, const Coordinates& p) {
    if (generators.empty()) {
        return false;
    }
    if (generators[0].size() != p.size()) {
        throw DimensionError("hull_contains: dimension mismatch");
    }
    return PhaseOneSimplex(generators, p).feasible();
}

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs) {
    if (rows.size() != rhs.size()) {
        throw DimensionError("solve_linear: row count does not match rhs");
    }
    const std::size_t m = rows.size();
    const std::size_t n = m ? rows[0].size() : 0;
    std::vector<std::size_t> pivot_col(m, n);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pr = m;
        for (std::size_t r = rank; r < m; ++r) {
            if (!rows[r][col].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == m) {
            continue;
        }
        std::swap(rows[rank], rows[pr]);
        std::swap(rhs[rank], rhs[pr]);
        const Rational inv = rows[rank][col].reciprocal();
        for (auto& v : rows[rank]) {
            v *= inv;
        }
        rhs[rank] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == rank || rows[r][col].is_zero()) {
                continue;
            }
            const Rational f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                rows[r][c] -= f * rows[rank][c];
            }
            rhs[r] -= f * rhs[rank];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (std::size_t r = rank; r < m; ++r) {
        if (!rhs[r].is_zero()) {
            return std::nullopt;
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) {
        x[pivot_col[r]] = rhs[r];
    }
    return x;
}

std::size_t affine_dimension(const std::vector<Coordinates>& points) {
    if (points.empty()) {
        return 0;
    }
    std::vector<Coordinates> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        diffs.push_back(sub(points[i], points[0]));
    }
    // Plain Gaussian rank over Q.
    std::size_t rank = 0;
    const std::size_t dim = points[0].size();
    for (std::size_t col = 0; col < dim && rank < diffs.size(); ++col) {
        std::size_t pivot = diffs.size();
        for (std::size_t r = rank; r < diffs.size(); ++r) {
            if (!diffs[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == diffs.size()) {
            continue;
        }
        std::swap(diffs[rank], diffs[pivot]);
        for (std::size_t r = rank + 1; r < diffs.size(); ++r) {
            if (diffs[r][col].is_zero()) {
                continue;
            }
            const Rational f = diffs[r][col] / diffs[rank][col];
            for (std::size_t c = col; c < dim; ++c) {
                diffs[r][c] -= f * diffs[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace barycalc
