#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dialg/rational.hpp"

namespace dialg {

// Sparse vector over Q: (position, coefficient) pairs, positions strictly
// increasing, no zero coefficients.
struct SparseVec {
    long dim = 0;
    std::vector<std::pair<long, Rat>> entries;

    bool is_zero() const { return entries.empty(); }
    long leading() const { return entries.front().first; }
    void scale(const Rat& c);
    std::string dump() const; // "pos:num/den pos:num/den ..."
    bool operator==(const SparseVec& o) const { return dim == o.dim && entries == o.entries; }
};

// r += c * s (merged, keeps sparsity)
void axpy(SparseVec& r, const Rat& c, const SparseVec& s);

// Row space in echelon form over Q, built incrementally. Rows are stored
// append-only with pivot coefficient 1; finalize() back-substitutes into the
// (unique) reduced row echelon form, which makes dump() independent of
// insertion order.
class RowBasis {
public:
    explicit RowBasis(long ambient);

    long ambient() const { return ambient_; }
    long rank() const { return static_cast<long>(rows_.size()); }

    // Returns true if the row was independent (rank grew).
    bool insert(SparseVec v);

    // Canonical residual of v modulo the span: zero at every pivot column.
    SparseVec reduce(SparseVec v) const;
    bool contains(SparseVec v) const;

    // Row-space equality as mutual containment of basis rows.
    bool equals_span(const RowBasis& other) const;

    void finalize(); // idempotent; required before dump() comparisons
    bool finalized() const { return finalized_; }

    // stored rows, insertion order (a basis of the span)
    const std::vector<SparseVec>& rows_stored() const { return rows_; }
    // indices into rows_stored(), ascending pivot
    std::vector<long> row_order() const;
    std::vector<long> pivots() const; // ascending
    long pivot_row(long col) const { return pivot_row_[col]; } // -1 if col is free

    std::string dump() const; // one row per line, ascending pivot

private:
    long ambient_;
    std::vector<SparseVec> rows_;
    std::vector<long> pivot_row_; // column -> index into rows_, or -1
    bool finalized_ = true;       // empty basis is trivially reduced
};

// Echelonize a batch of rows. Rows are ordered deterministically before
// insertion (leading position, then nonzero count, then content), the
// Markowitz-flavoured tie-break that keeps fill-in low; the finalized result
// is the unique RREF of the span either way. Throws ResourceLimitError from
// terms.hpp when ambient exceeds max_ambient.
RowBasis row_space(std::vector<SparseVec> rows, long ambient,
                   long max_ambient = 1000000);

// --- modular prefilter -------------------------------------------------------

// Row basis over F_p used to cheaply discard (probably) dependent rows before
// exact elimination. A row independent mod p is certainly independent over Q;
// a row dependent mod p must still be re-certified over Q by the caller. See
// ConsequenceOptions::modular_prefilter.
class ModRowBasis {
public:
    static constexpr uint64_t default_prime = 2305843009213693951ull; // 2^61 - 1

    explicit ModRowBasis(long ambient, uint64_t p = default_prime);

    long rank() const { return static_cast<long>(rows_.size()); }
    uint64_t prime() const { return p_; }

    // Reduce v mod p and insert if nonzero; returns true if rank grew.
    // Throws std::domain_error if a denominator vanishes mod p.
    bool insert(const SparseVec& v);

private:
    using ModRow = std::vector<std::pair<long, uint64_t>>;
    ModRow convert(const SparseVec& v) const;

    uint64_t p_;
    long ambient_;
    std::vector<ModRow> rows_;
    std::vector<long> pivot_row_;
};

} // namespace dialg
