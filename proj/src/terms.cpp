#include "dialg/terms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dialg {

// ---- Monomial -------------------------------------------------------------

Monomial Monomial::leaf(int var) {
    if (var < 1) throw std::invalid_argument("variable index must be >= 1");
    Monomial m;
    m.code_ = {var};
    return m;
}

Monomial Monomial::node(int op, const Monomial& left, const Monomial& right) {
    if (op < 0) throw std::invalid_argument("op index must be >= 0");
    if (left.code_.empty() || right.code_.empty())
        throw std::invalid_argument("empty subterm");
    Monomial m;
    m.code_.reserve(1 + left.code_.size() + right.code_.size());
    m.code_.push_back(-op - 1);
    m.code_.insert(m.code_.end(), left.code_.begin(), left.code_.end());
    m.code_.insert(m.code_.end(), right.code_.begin(), right.code_.end());
    return m;
}

Monomial Monomial::from_code(std::vector<int32_t> code) {
    Monomial m;
    m.code_ = std::move(code);
    return m;
}

namespace {

// length of the subtree code starting at pos
size_t subtree_len(const std::vector<int32_t>& code, size_t pos) {
    size_t need = 1, i = pos;
    while (need > 0) {
        if (i >= code.size()) throw std::logic_error("corrupt monomial code");
        if (code[i] < 0)
            ++need; // internal node consumes one slot, adds two subtrees
        --need;
        ++i;
    }
    return i - pos;
}

} // namespace

Monomial Monomial::left() const {
    size_t len = subtree_len(code_, 1);
    return from_code(std::vector<int32_t>(code_.begin() + 1, code_.begin() + 1 + len));
}

Monomial Monomial::right() const {
    size_t len = subtree_len(code_, 1);
    return from_code(std::vector<int32_t>(code_.begin() + 1 + len, code_.end()));
}

int Monomial::degree() const {
    int d = 0;
    for (int32_t c : code_)
        if (c > 0) ++d;
    return d;
}

std::vector<int> Monomial::leaves() const {
    std::vector<int> out;
    for (int32_t c : code_)
        if (c > 0) out.push_back(c);
    return out;
}

bool Monomial::is_multilinear() const {
    std::vector<int> ls = leaves();
    std::sort(ls.begin(), ls.end());
    for (size_t i = 0; i < ls.size(); ++i)
        if (ls[i] != static_cast<int>(i) + 1) return false;
    return true;
}

std::string Monomial::str(const Signature& sig) const {
    std::ostringstream os;
    auto rec = [&](auto&& self, size_t pos) -> size_t {
        if (code_[pos] > 0) {
            os << "x" << code_[pos];
            return pos + 1;
        }
        int op = -code_[pos] - 1;
        os << "(";
        size_t next = self(self, pos + 1);
        os << " " << sig.op_name(op) << " ";
        next = self(self, next);
        os << ")";
        return next;
    };
    rec(rec, 0);
    return os.str();
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da <=> db;
    return std::lexicographical_compare_three_way(code_.begin(), code_.end(),
                                                  o.code_.begin(), o.code_.end());
}

// ---- Poly -------------------------------------------------------------------

void Poly::add(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
Poly Poly::operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
Poly Poly::operator*(const Rat& c) const { Poly r = *this; r *= c; return r; }
Poly Poly::operator-() const { return *this * rat(-1); }

int Poly::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::string Poly::str(const Signature& sig) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "- "; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rat_str(a) << " ";
        os << m.str(sig);
        first = false;
    }
    return os.str();
}

// ---- enumeration ------------------------------------------------------------

long free_basis_size(int n, const Signature& sig) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    // n! * Catalan(n-1) * k^(n-1), guarded against overflow at desk scale
    long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    long cat = 1; // Catalan(n-1) = binom(2(n-1), n-1)/n
    for (int i = 0; i < n - 1; ++i) cat = cat * (2 * (n - 1) - i) / (i + 1);
    cat /= n;
    r *= cat;
    for (int i = 0; i < n - 1; ++i) r *= sig.op_count();
    return r;
}

namespace {

// all monomials on the given ordered variable set
void gen_on_set(const std::vector<int>& vars, const Signature& sig,
                std::vector<Monomial>& out) {
    if (vars.size() == 1) {
        out.push_back(Monomial::leaf(vars[0]));
        return;
    }
    size_t n = vars.size();
    // nonempty proper subsets as bitmasks; bit i selects vars[i] for the left
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> lv, rv;
        for (size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? lv : rv).push_back(vars[i]);
        std::vector<Monomial> ls, rs;
        gen_on_set(lv, sig, ls);
        gen_on_set(rv, sig, rs);
        for (int op = 0; op < sig.op_count(); ++op)
            for (const auto& l : ls)
                for (const auto& r : rs)
                    out.push_back(Monomial::node(op, l, r));
    }
}

} // namespace

std::vector<Monomial> enumerate_free_basis(int n, const Signature& sig, long max_count) {
    long count = free_basis_size(n, sig);
    if (count > max_count)
        throw ResourceLimitError("free basis size " + std::to_string(count) +
                                     " exceeds cap " + std::to_string(max_count),
                                 n);
    std::vector<int> vars(n);
    std::iota(vars.begin(), vars.end(), 1);
    std::vector<Monomial> out;
    out.reserve(count);
    gen_on_set(vars, sig, out);
    std::sort(out.begin(), out.end());
    return out;
}

FreeSpace::FreeSpace(int n, const Signature& sig, long max_count)
    : n_(n), sig_(sig), basis_(enumerate_free_basis(n, sig, max_count)) {
    index_.reserve(basis_.size() * 2);
    for (size_t i = 0; i < basis_.size(); ++i) {
        const auto& code = basis_[i].code();
        index_.emplace(std::string(reinterpret_cast<const char*>(code.data()),
                                   code.size() * sizeof(int32_t)),
                       static_cast<long>(i));
    }
}

long FreeSpace::index_of(const Monomial& m) const {
    const auto& code = m.code();
    auto it = index_.find(std::string(reinterpret_cast<const char*>(code.data()),
                                      code.size() * sizeof(int32_t)));
    return it == index_.end() ? -1 : it->second;
}

// ---- symmetric-group action -------------------------------------------------

Monomial act(const Permutation& perm, const Monomial& m) {
    std::vector<int32_t> code = m.code();
    for (auto& c : code) {
        if (c > 0) {
            if (c > static_cast<int>(perm.size()))
                throw std::invalid_argument("permutation degree does not match monomial");
            c = perm[c - 1];
        }
    }
    return Monomial::from_code(std::move(code));
}

Poly act(const Permutation& perm, const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) r.add(act(perm, m), c);
    return r;
}

// ---- substitution -----------------------------------------------------------

Monomial substitute(const Monomial& t, int i, const Monomial& m) {
    int n = t.degree();
    if (i < 1 || i > n) throw std::invalid_argument("substitute: variable out of range");
    int d = m.degree();
    // renumber m's leaves: left-to-right order -> i, n+1, ..., n+d-1
    std::vector<int32_t> mcode = m.code();
    int next = n + 1;
    bool first = true;
    for (auto& c : mcode) {
        if (c > 0) {
            c = first ? i : next++;
            first = false;
        }
    }
    std::vector<int32_t> out;
    out.reserve(t.code().size() + mcode.size() - 1);
    for (int32_t c : t.code()) {
        if (c == i)
            out.insert(out.end(), mcode.begin(), mcode.end());
        else
            out.push_back(c);
    }
    return Monomial::from_code(std::move(out));
}

Poly substitute(const Poly& p, int i, const Monomial& m) {
    Poly r;
    for (const auto& [t, c] : p.terms()) r.add(substitute(t, i, m), c);
    return r;
}

// ---- linearization ----------------------------------------------------------

namespace {

// multidegree pattern of a monomial: sorted (var, multiplicity) pairs
std::vector<std::pair<int, int>> pattern_of(const Monomial& m) {
    std::map<int, int> mult;
    for (int v : m.leaves()) ++mult[v];
    return {mult.begin(), mult.end()};
}

} // namespace

std::vector<Poly> multilinearize(const Poly& raw) {
    std::map<std::vector<std::pair<int, int>>, Poly> groups;
    for (const auto& [m, c] : raw.terms()) {
        Poly& g = groups[pattern_of(m)];
        g.add(m, c);
    }
    std::vector<Poly> out;
    for (auto& [pat, g] : groups) {
        // block of fresh indices per original variable, ascending
        std::map<int, std::pair<int, int>> block; // var -> [first, count]
        int next = 1;
        bool already_multilinear = true;
        for (auto [v, k] : pat) {
            block[v] = {next, k};
            next += k;
            if (k != 1) already_multilinear = false;
        }
        int n = next - 1;
        if (already_multilinear) {
            // still relabel so variables are exactly 1..n
            Poly lin;
            for (const auto& [m, c] : g.terms()) {
                std::vector<int32_t> code = m.code();
                for (auto& cc : code)
                    if (cc > 0) cc = block[cc].first;
                lin.add(Monomial::from_code(std::move(code)), c);
            }
            out.push_back(std::move(lin));
            continue;
        }
        Poly lin;
        for (const auto& [m, c] : g.terms()) {
            // enumerate, per variable, all bijections occurrences -> block
            std::vector<int> positions; // leaf slots in code order
            const auto& code = m.code();
            std::map<int, std::vector<size_t>> occ; // var -> code positions
            for (size_t p = 0; p < code.size(); ++p)
                if (code[p] > 0) occ[code[p]].push_back(p);
            // odometer over permutations of each block
            std::vector<std::pair<int, std::vector<int>>> assignments; // var -> current perm of block offsets
            std::vector<std::vector<int>> perms;                       // parallel: current permutation
            std::vector<int> vars;
            for (auto& [v, ps] : occ) {
                std::vector<int> idx(ps.size());
                std::iota(idx.begin(), idx.end(), 0);
                vars.push_back(v);
                perms.push_back(idx);
            }
            // iterate the cartesian product of std::next_permutation cycles
            auto emit = [&]() {
                std::vector<int32_t> ncode = code;
                for (size_t vi = 0; vi < vars.size(); ++vi) {
                    int v = vars[vi];
                    const auto& ps = occ[v];
                    for (size_t oi = 0; oi < ps.size(); ++oi)
                        ncode[ps[oi]] = block[v].first + perms[vi][oi];
                }
                lin.add(Monomial::from_code(std::move(ncode)), c);
            };
            // recursive product over variables
            auto recur = [&](auto&& self, size_t vi) -> void {
                if (vi == vars.size()) {
                    emit();
                    return;
                }
                std::vector<int>& idx = perms[vi];
                std::sort(idx.begin(), idx.end());
                do {
                    self(self, vi + 1);
                } while (std::next_permutation(idx.begin(), idx.end()));
            };
            recur(recur, 0);
        }
        (void)n;
        out.push_back(std::move(lin));
    }
    return out;
}

// ---- permutations -----------------------------------------------------------

std::vector<Permutation> symmetric_group(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Permutation compose(const Permutation& s, const Permutation& t) {
    Permutation r(t.size());
    for (size_t i = 0; i < t.size(); ++i) r[i] = s[t[i] - 1];
    return r;
}

} // namespace dialg
