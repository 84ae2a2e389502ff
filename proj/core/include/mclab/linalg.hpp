#pragma once

#include "mclab/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mclab {

using SparseVec = std::map<std::size_t, Q>;
using QMatrix = std::vector<std::vector<Q>>;

// Incremental fraction-free row echelon form over Z (rows are scaled to primitive integer vectors).
// The pivot of a row is its lowest nonzero column.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols = 0) : ncols_(ncols) {}

    // Returns true if the row was independent of the rows added so far.
    bool add_row(const SparseVec& row);
    // True iff row lies in the span of the rows added so far.
    bool in_span(const SparseVec& row) const;

    std::size_t rank() const { return piv_.size(); }
    std::size_t ncols() const { return ncols_; }
    void set_ncols(std::size_t n) { ncols_ = n; }

    // Basis of {x : row·x = 0 for all rows}; one vector per free column (ascending), free entry 1.
    std::vector<SparseVec> nullspace() const;
    // Non-pivot columns in ascending order; nullspace() emits one vector per entry, in this order.
    std::vector<std::size_t> free_columns() const;

private:
    using IRow = std::vector<std::pair<std::size_t, Z>>;
    IRow reduce(IRow r) const;
    static IRow to_int(const SparseVec& row);

    std::size_t ncols_;
    std::map<std::size_t, IRow> piv_;
};

std::size_t rank(const std::vector<SparseVec>& rows);

// Dense helpers.
QMatrix identity(std::size_t n);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
std::size_t rank(QMatrix m);
Q determinant(QMatrix m);
std::optional<QMatrix> inverse(QMatrix m);
// Solve m x = b; nullopt if inconsistent. Picks free variables = 0.
std::optional<std::vector<Q>> solve(QMatrix m, std::vector<Q> b);
std::vector<std::vector<Q>> nullspace(const QMatrix& m);

struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
};
// Inertia of a symmetric rational matrix via congruence diagonalization.
Inertia inertia(QMatrix m);

}  // namespace mclab
