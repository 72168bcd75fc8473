// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#include "prelog/property_a.hpp"

#include <numeric>

#include "prelog/errors.hpp"
#include "prelog/svd.hpp"

namespace prelog {

namespace {

// Lexicographic successor of a k-combination of {0, ..., n-1}; false at the end.
bool next_combination(std::vector<int> &c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

struct RankTester {
    const CorrelationRoot &root;
    double rel_tol;
    long budget;
    long performed = 0;
    long flagged_marginal = 0;

    // Full-rank test of the Q x Q submatrix formed by the given rows.
    bool full_rank(const std::vector<int> &rows) {
        if (performed >= budget) {
            throw BudgetError("subset rank-test budget exceeded; the instance is too large "
                              "for exhaustive certification");
        }
        ++performed;

        const std::size_t q = root.q();
        ComplexMatrix sub(rows.size(), q);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (std::size_t c = 0; c < q; ++c) {
                sub(r, c) = root.mat(static_cast<std::size_t>(rows[r]), c);
            }
        }
        const std::vector<double> s = singular_values(sub);
        if (s.front() <= 0.0) {
            return false;
        }
        const double ratio = s.back() / s.front();
        if (ratio >= 0.1 * rel_tol && ratio <= 10.0 * rel_tol) {
            ++flagged_marginal;
        }
        return ratio > rel_tol;
    }
};

// True when every q-subset of the given candidate rows has full rank.
bool all_subsets_full_rank(RankTester &tester, const std::vector<int> &candidate, int q) {
    std::vector<int> positions = first_combination(q);
    const int k = static_cast<int>(candidate.size());
    std::vector<int> rows(q);
    do {
        for (int i = 0; i < q; ++i) {
            rows[i] = candidate[positions[i]];
        }
        if (!tester.full_rank(rows)) {
            return false;
        }
    } while (next_combination(positions, k));
    return true;
}

} // namespace

int required_cardinality(int q, int m, int n) {
    if (m == 1) {
        throw ValidationError("cardinality formula undefined for single antenna");
    }
    if (m < 1 || q < 1 || q > n) {
        throw ValidationError("required_cardinality: need m >= 2 and 1 <= q <= n");
    }
    const int numerator = q * m - 1;
    const int ceil_div = (numerator + m - 2) / (m - 1);
    return std::min(ceil_div, n);
}

PropertyAReport check_property_a(const CorrelationRoot &root, int m, double rel_tol,
                                 const SubsetBudget &budget) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw ValidationError("check_property_a: rel_tol must lie in (0, 1)");
    }
    const int n = static_cast<int>(root.n());
    const int q = static_cast<int>(root.q());
    const int k = required_cardinality(q, m, n);

    PropertyAReport report;
    report.cardinality_k = k;

    RankTester tester{root, rel_tol, budget.max_rank_tests};
    std::vector<int> candidate = first_combination(k);
    do {
        if (all_subsets_full_rank(tester, candidate, q)) {
            report.holds = true;
            report.witness_k = candidate;
            break;
        }
    } while (next_combination(candidate, n));

    report.failures_examined = tester.performed;
    report.flagged_marginal_tests = tester.flagged_marginal;
    return report;
}

bool check_strong_condition(const CorrelationRoot &root, double rel_tol,
                            const SubsetBudget &budget) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
        throw ValidationError("check_strong_condition: rel_tol must lie in (0, 1)");
    }
    const int n = static_cast<int>(root.n());
    const int q = static_cast<int>(root.q());

    RankTester tester{root, rel_tol, budget.max_rank_tests};
    std::vector<int> rows = first_combination(q);
    do {
        if (!tester.full_rank(rows)) {
            return false;
        }
    } while (next_combination(rows, n));
    return true;
}

} // namespace prelog
