#pragma once

#include "taut/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace taut {

// Parameters (g, d, n_1..n_k) of one relation of the main family. The
// relation lives in codimension g - d; it is nonzero only inside the window
// sum n_i <= g, d <= k - 1.
struct RelationSpec {
    int g = 0;
    int d = 0;
    std::vector<int> ns;  // each > 1

    int k() const { return static_cast<int>(ns.size()); }
    int weight_sum() const;
    bool in_window() const;
};

// The set-partition form: sum over partitions of {1..k} into m blocks of
//   binom(m-1, d+m-k) prod b(I_j) p_1^[g-d-m+k-sum n_i] prod p_{d(I_j)}.
// Out-of-window parameters give the zero polynomial.
Polynomial relation_partition_form(const RelationSpec& spec);

// The same element written through divided powers of Delta:
//   sum_{j=0}^{d} binom(k-1-j, d-j) p_1^[g+j-d-sum n_i] Delta^[j](p_{n_1}..p_{n_k}).
Polynomial relation_divided_form(const RelationSpec& spec);

// Right-hand side of the reduction identity: expresses
// p_1^[g-d-sum n_i] p_{n_1}..p_{n_k} (k > d >= 1) through terms with at most
// d non-p_1 factors. The difference LHS - RHS lies in the ideal.
Polynomial few_factor_reduction(const std::vector<int>& ns, int d, int g);

struct RelationRow {
    int d;
    long codim;
    Polynomial poly;  // primitive integer coefficients, pivot coefficient positive
    RelationRow(int d_, long codim_, Polynomial p) : d(d_), codim(codim_), poly(std::move(p)) {}
};

struct RelationTable {
    int g = 0;
    std::vector<RelationRow> rows;  // grouped by d descending, then by codim
};

// Enumerates the whole nontriviality window, reduces each (d, codim) group to
// a deterministic echelon set and emits normalized rows. d = 0 produces the
// codimension-g rows, included only when include_top is set.
RelationTable relation_table(int g, bool include_top);

// Span comparison per (d, codim) group.
bool table_equivalent(const RelationTable& a, const RelationTable& b);

// Plain-text golden tables: '#' comments, "[d=N]" group headers, one
// "lhs = rhs" relation per line in the CLI expression grammar.
RelationTable load_relation_table(std::istream& in, int g);
RelationTable load_relation_table_file(const std::string& path, int g);

// Scales to primitive integer coefficients with a positive pivot coefficient.
Polynomial normalize_relation(const Polynomial& p);

}  // namespace taut
