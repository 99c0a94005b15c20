#include "tilepot/spectrum.hpp"

#include <algorithm>

namespace tilepot {

Matrix construction_matrix(const Pot& pot, const Rat& totals) {
    const int p = pot.tile_count();
    const int s = pot.symbol_count();
    Matrix m(s + 1, std::vector<Rat>(p + 1, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < p; ++j) m[i][j] = pot.tile(j).net_count(i);
    for (int j = 0; j < p; ++j) m[s][j] = 1;
    m[s][p] = totals;
    return m;
}

Matrix rref(Matrix m, std::vector<int>* pivot_columns) {
    if (pivot_columns) pivot_columns->clear();
    if (m.empty()) return m;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        const Rat inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_columns) pivot_columns->push_back(c);
        ++r;
    }
    return m;
}

std::vector<Rat> SpectrumSolution::at(const std::vector<Rat>& free_values) const {
    std::vector<Rat> r = constants;
    for (size_t f = 0; f < basis.size(); ++f)
        for (size_t j = 0; j < r.size(); ++j) r[j] += free_values[f] * basis[f][j];
    return r;
}

SpectrumSolution spectrum(const Pot& pot) {
    const int p = pot.tile_count();
    std::vector<int> pivots;
    Matrix m = rref(construction_matrix(pot), &pivots);

    SpectrumSolution sol;
    sol.constants.assign(p, 0);
    if (!pivots.empty() && pivots.back() == p) {  // pivot in the rhs column
        sol.consistent = false;
        return sol;
    }
    std::vector<char> is_pivot(p, 0);
    for (int c : pivots) is_pivot[c] = 1;
    for (int j = 0; j < p; ++j)
        if (!is_pivot[j]) sol.free_columns.push_back(j);

    for (size_t r = 0; r < pivots.size(); ++r) sol.constants[pivots[r]] = m[r][p];
    for (int f : sol.free_columns) {
        std::vector<Rat> dir(p, 0);
        dir[f] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) dir[pivots[r]] = -m[r][f];
        sol.basis.push_back(std::move(dir));
    }
    return sol;
}

bool counts_balanced(const Pot& pot, const std::vector<long>& counts) {
    for (int i = 0; i < pot.symbol_count(); ++i) {
        long long acc = 0;
        for (int j = 0; j < pot.tile_count(); ++j)
            acc += static_cast<long long>(pot.tile(j).net_count(i)) * counts[j];
        if (acc != 0) return false;
    }
    return true;
}

namespace {

/// All balanced nonnegative count vectors with sum n, for a pot whose
/// spectrum has at most two degrees of freedom. Sorted lexicographically.
std::vector<OrderWitness> parametric_witnesses_at(const SpectrumSolution& sol, long n) {
    std::vector<OrderWitness> out;
    const int p = static_cast<int>(sol.constants.size());
    const int dof = sol.free_count();

    std::vector<long> ys(dof, 0);
    auto emit = [&] {
        std::vector<Rat> free_values(dof);
        for (int f = 0; f < dof; ++f) {
            free_values[f] = Rat(ys[f], n);
            free_values[f].canonicalize();
        }
        std::vector<Rat> r = sol.at(free_values);
        std::vector<long> counts(p);
        for (int j = 0; j < p; ++j) {
            Rat scaled = r[j] * n;
            scaled.canonicalize();
            if (scaled < 0 || scaled.get_den() != 1 || !scaled.get_num().fits_slong_p()) return;
            counts[j] = scaled.get_num().get_si();
        }
        out.push_back({n, std::move(counts)});
    };

    // A free variable is a proportion coordinate, so its scaled value
    // ranges over the integers 0..n.
    if (dof == 0) {
        emit();
    } else if (dof == 1) {
        for (ys[0] = 0; ys[0] <= n; ++ys[0]) emit();
    } else {
        for (ys[0] = 0; ys[0] <= n; ++ys[0])
            for (ys[1] = 0; ys[1] <= n; ++ys[1]) emit();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Exhaustive route: compositions of n into tile counts, filtered by the
/// balance rows. Correct for any number of free variables.
std::vector<OrderWitness> exhaustive_witnesses_at(const Pot& pot, long n) {
    std::vector<OrderWitness> out;
    const int p = pot.tile_count();
    std::vector<long> counts(p, 0);
    auto rec = [&](auto&& self, int j, long remaining) -> void {
        if (j == p - 1) {
            counts[j] = remaining;
            if (counts_balanced(pot, counts)) out.push_back({n, counts});
            return;
        }
        for (long c = 0; c <= remaining; ++c) {
            counts[j] = c;
            self(self, j + 1, remaining - c);
        }
    };
    if (p == 0) return out;
    rec(rec, 0, n);
    return out;  // generated in lexicographic order already
}

}  // namespace

MinOrderResult min_order(const Pot& pot, long max_order, bool fallback) {
    MinOrderResult res;
    SpectrumSolution sol = spectrum(pot);
    res.free_count = sol.free_count();
    if (!sol.consistent) return res;

    if (sol.free_count() >= 3 && !fallback) {
        res.status = MinOrderResult::Status::TooManyFreeVariables;
        return res;
    }

    if (sol.free_count() == 0) {
        // Unique solution: the least feasible order is the LCD of the
        // proportions, and every witness order is a multiple of it.
        for (const Rat& c : sol.constants)
            if (c < 0) return res;
        mpz_class lcd = 1;
        for (const Rat& c : sol.constants) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), c.get_den().get_mpz_t());
        if (!lcd.fits_slong_p()) return res;
        for (long n = lcd.get_si(); n <= max_order; n += lcd.get_si()) {
            auto ws = parametric_witnesses_at(sol, n);
            res.witnesses.insert(res.witnesses.end(), ws.begin(), ws.end());
        }
        return res;
    }

    for (long n = 1; n <= max_order; ++n) {
        auto ws = sol.free_count() <= 2 ? parametric_witnesses_at(sol, n)
                                        : exhaustive_witnesses_at(pot, n);
        res.witnesses.insert(res.witnesses.end(), ws.begin(), ws.end());
    }
    return res;
}

std::vector<OrderWitness> witnesses_at(const Pot& pot, long k) {
    SpectrumSolution sol = spectrum(pot);
    if (!sol.consistent) return {};
    return sol.free_count() <= 2 ? parametric_witnesses_at(sol, k)
                                 : exhaustive_witnesses_at(pot, k);
}

std::optional<OrderWitness> integer_feasible_at(const Pot& pot, long k) {
    auto ws = witnesses_at(pot, k);
    if (ws.empty()) return std::nullopt;
    return ws.front();
}

}  // namespace tilepot
