#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "tilepot/pot.hpp"

namespace tilepot {

// All arithmetic in this module is exact: mpq_class rationals over
// arbitrary-precision integers. No floating point anywhere.
using Rat = mpq_class;
using Matrix = std::vector<std::vector<Rat>>;

/// The augmented construction matrix of a pot: one balance row per bond
/// symbol (net counts, rhs 0) plus the all-ones totals row with rhs
/// `totals` (1 in proportion mode, k in count mode).
Matrix construction_matrix(const Pot& pot, const Rat& totals = 1);

/// Exact reduced row-echelon form, in place semantics on a copy. Pivot
/// columns are reported in order.
Matrix rref(Matrix m, std::vector<int>* pivot_columns = nullptr);

/// Parametric description of the spectrum S(P): the solution set of the
/// construction matrix. The free variables are the non-pivot coordinates
/// themselves, so a solution is constants + sum of t_f * basis[f] with
/// each t_f the value of coordinate free_columns[f].
struct SpectrumSolution {
    bool consistent = true;
    std::vector<Rat> constants;
    std::vector<std::vector<Rat>> basis;
    std::vector<int> free_columns;

    int free_count() const { return static_cast<int>(free_columns.size()); }
    std::vector<Rat> at(const std::vector<Rat>& free_values) const;
};

SpectrumSolution spectrum(const Pot& pot);

/// A realized-order witness: tile usage counts summing to `order` whose
/// proportions lie in the spectrum.
struct OrderWitness {
    long order = 0;
    std::vector<long> counts;

    friend auto operator<=>(const OrderWitness&, const OrderWitness&) = default;
};

struct MinOrderResult {
    enum class Status {
        Ok,
        TooManyFreeVariables,  // >= 3 degrees of freedom and no fallback
    };
    Status status = Status::Ok;
    int free_count = 0;
    std::vector<OrderWitness> witnesses;  // sorted by (order, counts)
};

/// All order witnesses up to max_order, smallest order first. Pots with
/// 0..2 degrees of freedom are solved parametrically; 3+ degrees require
/// the exhaustive fallback (compositions of n filtered by the balance
/// rows) to be enabled.
MinOrderResult min_order(const Pot& pot, long max_order, bool fallback = false);

/// Least witness at exactly order k, if any.
std::optional<OrderWitness> integer_feasible_at(const Pot& pot, long k);

/// All balanced nonnegative count vectors summing to exactly k, sorted
/// lexicographically. Parametric for <= 2 degrees of freedom, otherwise
/// exhaustive over compositions of k.
std::vector<OrderWitness> witnesses_at(const Pot& pot, long k);

/// Checks the balance rows exactly for a count vector.
bool counts_balanced(const Pot& pot, const std::vector<long>& counts);

}  // namespace tilepot
