#include "hartogs/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace hartogs {

namespace {

void require_same_size(const RatVec& a, const RatVec& b, const char* who) {
    if (a.size() != b.size()) {
        throw DimensionMismatch(std::string(who) + ": vector lengths " +
                                std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

}  // namespace

bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Rat dot(const RatVec& a, const RatVec& b) {
    require_same_size(a, b, "dot");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    require_same_size(a, b, "vec_add");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    require_same_size(a, b, "vec_sub");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec vec_neg(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit_vec(std::size_t n, std::size_t i) {
    RatVec r(n, Rat(0));
    r.at(i) = 1;
    return r;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    require_same_size(a, b, "lex_less");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

void sort_unique(RatMat& rows) {
    std::sort(rows.begin(), rows.end(), lex_less);
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::string vec_to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_to_string(v[i]);
    }
    return s + ")";
}

RatMat rref(RatMat rows) {
    if (rows.empty()) return rows;
    const std::size_t ncols = rows[0].size();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < ncols && lead < rows.size(); ++col) {
        // first row at or below `lead` with a nonzero entry in this column
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[lead], rows[pivot]);
        const Rat inv = Rat(1) / rows[lead][col];
        for (auto& x : rows[lead]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] == 0) continue;
            const Rat f = rows[i][col];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[lead][j];
        }
        ++lead;
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const RatVec& r) { return is_zero(r); }),
               rows.end());
    return rows;
}

std::size_t rank(const RatMat& rows) { return rref(rows).size(); }

RatMat nullspace(const RatMat& rows, std::size_t ncols) {
    const RatMat r = rref(rows);
    // pivot column of each RREF row
    std::vector<std::size_t> pivot_col(r.size());
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::size_t c = 0;
        while (c < ncols && r[i][c] == 0) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    RatMat basis;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        RatVec x = zero_vec(ncols);
        x[j] = 1;
        for (std::size_t i = 0; i < r.size(); ++i) x[pivot_col[i]] = -r[i][j];
        basis.push_back(primitive(x));
    }
    return basis;
}

RatVec primitive(const RatVec& v) {
    if (is_zero(v)) throw ZeroVector();
    // common denominator, then divide out the gcd of the numerators
    Int den = 1;
    for (const auto& x : v) den = lcm(den, Int(denominator(x)));
    Int g = 0;
    RatVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i] * den;
        g = gcd(g, Int(numerator(scaled[i])));
    }
    for (auto& x : scaled) x /= g;  // g > 0, so direction is preserved
    return scaled;
}

RatVec canonical_normal(const RatVec& v) {
    RatVec p = primitive(v);
    for (const auto& x : p) {
        if (x != 0) return x > 0 ? p : vec_neg(p);
    }
    return p;  // unreachable: primitive() rejects zero
}

std::optional<RatVec> solve_membership(const RatMat& basis, const RatVec& v) {
    const std::size_t m = basis.size();
    if (m == 0) {
        if (is_zero(v)) return RatVec{};
        return std::nullopt;
    }
    const std::size_t n = basis[0].size();
    require_same_size(basis[0], v, "solve_membership");
    // solve basis^T c = v: build the n x (m+1) augmented system and reduce
    RatMat aug(n, RatVec(m + 1, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug[i][j] = basis[j][i];
        aug[i][m] = v[i];
    }
    const RatMat r = rref(std::move(aug));
    RatVec c = zero_vec(m);
    for (const auto& row : r) {
        std::size_t p = 0;
        while (p < m + 1 && row[p] == 0) ++p;
        if (p == m) return std::nullopt;  // 0 = nonzero: inconsistent
        c[p] = row[m];                    // free coefficients stay 0
    }
    return c;
}

std::optional<RatVec> nonnegative_combination(const RatMat& gens, const RatVec& target) {
    const std::size_t m = target.size();
    const std::size_t n = gens.size();
    for (const auto& g : gens) require_same_size(g, target, "nonnegative_combination");
    if (n == 0) {
        if (is_zero(target)) return RatVec{};
        return std::nullopt;
    }
    // phase-1 simplex: minimize the sum of m artificial variables subject to
    //   sum_j c_j gens[j] + (sign-adjusted) artificials = target, c, artificials >= 0
    const std::size_t cols = n + m;        // structural + artificial
    RatMat tab(m, RatVec(cols + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = target[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = flip ? -gens[j][i] : gens[j][i];
        tab[i][n + i] = 1;
        tab[i][cols] = flip ? -target[i] : target[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    const auto reduced_cost = [&](std::size_t j) {
        // cost vector: 0 on structural, 1 on artificial columns
        Rat r = j >= n ? Rat(1) : Rat(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] >= n) r -= tab[i][j];
        }
        return r;
    };

    for (;;) {
        // Bland's rule: smallest column index with negative reduced cost
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (reduced_cost(j) < 0) { enter = j; break; }
        }
        if (enter == cols) break;
        // ratio test, ties by smallest basis variable index
        std::size_t leave = m;
        Rat best = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            const Rat ratio = tab[i][cols] / tab[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot happen with cost >= 0; defensive
        // pivot on (leave, enter)
        const Rat inv = Rat(1) / tab[leave][enter];
        for (auto& x : tab[leave]) x *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    Rat objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) objective += tab[i][cols];
    }
    if (objective != 0) return std::nullopt;
    RatVec c = zero_vec(n);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) c[basis[i]] = tab[i][cols];
    }
    return c;
}

}  // namespace hartogs
