#include "dialg/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "dialg/terms.hpp" // ResourceLimitError

namespace dialg {

void SparseVec::scale(const Rat& c) {
    if (c == 0) {
        entries.clear();
        return;
    }
    for (auto& [p, v] : entries) v *= c;
}

std::string SparseVec::dump() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, v] : entries) {
        if (!first) os << " ";
        os << p << ":" << rat_str(v);
        first = false;
    }
    return os.str();
}

void axpy(SparseVec& r, const Rat& c, const SparseVec& s) {
    if (c == 0 || s.entries.empty()) return;
    std::vector<std::pair<long, Rat>> out;
    out.reserve(r.entries.size() + s.entries.size());
    size_t i = 0, j = 0;
    while (i < r.entries.size() || j < s.entries.size()) {
        if (j == s.entries.size() ||
            (i < r.entries.size() && r.entries[i].first < s.entries[j].first)) {
            out.push_back(std::move(r.entries[i++]));
        } else if (i == r.entries.size() || s.entries[j].first < r.entries[i].first) {
            out.emplace_back(s.entries[j].first, c * s.entries[j].second);
            ++j;
        } else {
            Rat v = r.entries[i].second + c * s.entries[j].second;
            if (v != 0) out.emplace_back(r.entries[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    r.entries = std::move(out);
}

RowBasis::RowBasis(long ambient) : ambient_(ambient), pivot_row_(ambient, -1) {
    if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
}

bool RowBasis::insert(SparseVec v) {
    if (v.dim != ambient_)
        throw std::invalid_argument("ambient dimension mismatch");
    // eliminate leading entries against existing pivots
    while (!v.is_zero()) {
        long lead = v.leading();
        long r = pivot_row_[lead];
        if (r < 0) break;
        axpy(v, -v.entries.front().second, rows_[r]); // pivot coeff is 1
    }
    if (v.is_zero()) return false;
    Rat inv = 1 / v.entries.front().second;
    v.scale(inv);
    pivot_row_[v.leading()] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(v));
    finalized_ = rows_.size() <= 1;
    return true;
}

SparseVec RowBasis::reduce(SparseVec v) const {
    if (v.dim != ambient_)
        throw std::invalid_argument("ambient dimension mismatch");
    // eliminate pivot columns left to right; eliminations only add larger positions
    size_t cursor = 0;
    while (cursor < v.entries.size()) {
        long pos = v.entries[cursor].first;
        long r = pivot_row_[pos];
        if (r < 0) {
            ++cursor; // free column, part of the residual
            continue;
        }
        axpy(v, -v.entries[cursor].second, rows_[r]);
    }
    return v;
}

bool RowBasis::contains(SparseVec v) const {
    if (v.dim != ambient_)
        throw std::invalid_argument("ambient dimension mismatch");
    while (!v.is_zero()) {
        long lead = v.leading();
        long r = pivot_row_[lead];
        if (r < 0) return false;
        axpy(v, -v.entries.front().second, rows_[r]);
    }
    return true;
}

bool RowBasis::equals_span(const RowBasis& other) const {
    if (ambient_ != other.ambient_ || rank() != other.rank()) return false;
    for (const auto& r : rows_)
        if (!other.contains(r)) return false;
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

std::vector<long> RowBasis::row_order() const {
    std::vector<long> order;
    order.reserve(rows_.size());
    for (long col = 0; col < ambient_; ++col)
        if (pivot_row_[col] >= 0) order.push_back(pivot_row_[col]);
    return order;
}

void RowBasis::finalize() {
    if (finalized_) return;
    std::vector<long> order = row_order();
    // back-substitution, descending pivots: tails only contain larger positions
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        SparseVec& row = rows_[*it];
        size_t cursor = 1; // entry 0 is the pivot
        while (cursor < row.entries.size()) {
            long pos = row.entries[cursor].first;
            long r = pivot_row_[pos];
            if (r < 0) {
                ++cursor;
                continue;
            }
            axpy(row, -row.entries[cursor].second, rows_[r]);
        }
    }
    finalized_ = true;
}

std::vector<long> RowBasis::pivots() const {
    std::vector<long> out;
    out.reserve(rows_.size());
    for (long col = 0; col < ambient_; ++col)
        if (pivot_row_[col] >= 0) out.push_back(col);
    return out;
}

std::string RowBasis::dump() const {
    std::ostringstream os;
    for (long id : row_order()) os << rows_[id].dump() << "\n";
    return os.str();
}

RowBasis row_space(std::vector<SparseVec> rows, long ambient, long max_ambient) {
    if (ambient > max_ambient)
        throw ResourceLimitError("ambient dimension " + std::to_string(ambient) +
                                 " exceeds cap " + std::to_string(max_ambient));
    for (const auto& r : rows) {
        if (r.dim != ambient) throw std::invalid_argument("ambient dimension mismatch");
        for (const auto& [p, v] : r.entries)
            if (p < 0 || p >= ambient) throw std::invalid_argument("position out of range");
    }
    std::sort(rows.begin(), rows.end(), [](const SparseVec& a, const SparseVec& b) {
        if (a.is_zero() != b.is_zero()) return b.is_zero();
        if (a.is_zero()) return false;
        if (a.leading() != b.leading()) return a.leading() < b.leading();
        if (a.entries.size() != b.entries.size())
            return a.entries.size() < b.entries.size();
        return a.dump() < b.dump();
    });
    RowBasis basis(ambient);
    for (auto& r : rows) {
        if (r.is_zero()) continue;
        basis.insert(std::move(r));
    }
    basis.finalize();
    return basis;
}

// ---- modular arithmetic -------------------------------------------------------

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a % p, p - 2, p); }

uint64_t rat_mod(const Rat& v, uint64_t p) {
    uint64_t n = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
    uint64_t d = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
    if (d == 0) throw std::domain_error("denominator vanishes mod p");
    return mulmod(n, invmod(d, p), p);
}

} // namespace

ModRowBasis::ModRowBasis(long ambient, uint64_t p)
    : p_(p), ambient_(ambient), pivot_row_(ambient, -1) {}

ModRowBasis::ModRow ModRowBasis::convert(const SparseVec& v) const {
    ModRow out;
    out.reserve(v.entries.size());
    for (const auto& [pos, c] : v.entries) {
        uint64_t m = rat_mod(c, p_);
        if (m != 0) out.emplace_back(pos, m);
    }
    return out;
}

bool ModRowBasis::insert(const SparseVec& v) {
    ModRow row = convert(v);
    while (!row.empty()) {
        long lead = row.front().first;
        long r = pivot_row_[lead];
        if (r < 0) break;
        uint64_t c = row.front().second; // pivot coeff of rows_[r] is 1
        const ModRow& s = rows_[r];
        ModRow out;
        out.reserve(row.size() + s.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < s.size()) {
            if (j == s.size() || (i < row.size() && row[i].first < s[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || s[j].first < row[i].first) {
                uint64_t t = (p_ - mulmod(c, s[j].second, p_)) % p_;
                if (t != 0) out.emplace_back(s[j].first, t);
                ++j;
            } else {
                uint64_t t = (row[i].second + p_ - mulmod(c, s[j].second, p_)) % p_;
                if (t != 0) out.emplace_back(row[i].first, t);
                ++i;
                ++j;
            }
        }
        row = std::move(out);
    }
    if (row.empty()) return false;
    uint64_t inv = invmod(row.front().second, p_);
    for (auto& [pos, c] : row) c = mulmod(c, inv, p_);
    pivot_row_[row.front().first] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

} // namespace dialg
