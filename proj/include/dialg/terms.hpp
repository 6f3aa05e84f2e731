#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "dialg/rational.hpp"
#include "dialg/signature.hpp"

namespace dialg {

using Permutation = std::vector<int>; // perm[i-1] = image of i, a bijection of 1..n

// Multilinear nonassociative monomial: a planar binary tree whose internal
// nodes carry op indices and whose leaves carry variable indices. Stored as
// the preorder code, ops encoded as -(op+1) and leaves as the (positive)
// variable index; the canonical total order is (degree, lexicographic on the
// code).
class Monomial {
public:
    Monomial() = default;

    static Monomial leaf(int var);
    static Monomial node(int op, const Monomial& left, const Monomial& right);

    bool is_leaf() const { return code_.size() == 1 && code_[0] > 0; }
    int leaf_var() const { return code_[0]; }
    int root_op() const { return -code_[0] - 1; }
    Monomial left() const;
    Monomial right() const;

    // number of leaves
    int degree() const;
    // leaf variable indices in left-to-right order
    std::vector<int> leaves() const;
    bool is_multilinear() const; // leaves are exactly 1..degree, each once

    const std::vector<int32_t>& code() const { return code_; }
    static Monomial from_code(std::vector<int32_t> code);

    std::string str(const Signature& sig) const; // "(x1 * x2)"

    std::strong_ordering operator<=>(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return code_ == o.code_; }

private:
    std::vector<int32_t> code_;
};

// A finite Q-linear combination of monomials of one degree over one signature.
// No zero coefficients are stored; terms are keyed by the canonical order.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Monomial& m) { add(m, rat(1)); }

    void add(const Monomial& m, const Rat& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly operator-() const;

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    int degree() const; // degree of the terms; 0 for the zero poly
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    std::string str(const Signature& sig) const;

private:
    std::map<Monomial, Rat> terms_;
};

// --- free-basis enumeration ---------------------------------------------

struct ResourceLimitError : std::runtime_error {
    ResourceLimitError(std::string msg, int degree_reached_ = 0)
        : std::runtime_error(std::move(msg)), degree_reached(degree_reached_) {}
    int degree_reached;
};

// Count of multilinear degree-n monomials: n! * Catalan(n-1) * k^(n-1).
long free_basis_size(int n, const Signature& sig);

// All multilinear monomials of degree n in canonical order. Throws
// ResourceLimitError when the count exceeds max_count.
std::vector<Monomial> enumerate_free_basis(int n, const Signature& sig,
                                           long max_count = 1000000);

// Degree-n multilinear component of the free algebra, with basis indexing.
// Immutable after construction.
class FreeSpace {
public:
    FreeSpace(int n, const Signature& sig, long max_count = 1000000);

    int degree() const { return n_; }
    const Signature& sig() const { return sig_; }
    long dim() const { return static_cast<long>(basis_.size()); }
    const Monomial& at(long i) const { return basis_[i]; }
    long index_of(const Monomial& m) const; // -1 if absent

private:
    int n_;
    Signature sig_;
    std::vector<Monomial> basis_;
    std::unordered_map<std::string, long> index_;
};

// --- operations ----------------------------------------------------------

// Relabel leaves i -> perm(i). Linear, bijective.
Monomial act(const Permutation& perm, const Monomial& m);
Poly act(const Permutation& perm, const Poly& p);

// Replace leaf i of p (degree n) by the monomial m (degree d, on fresh
// variables 1..d); m's leaves take indices i, n+1, ..., n+d-1 in m's
// left-to-right leaf order, other leaves keep their index. Result is
// multilinear on 1..n+d-1.
Monomial substitute(const Monomial& t, int i, const Monomial& m);
Poly substitute(const Poly& p, int i, const Monomial& m);

// Complete linearization of a polynomial whose monomials may repeat
// variables: terms are grouped by multidegree pattern and each group is fully
// polarized into a multilinear Poly. Variables are renumbered 1..n blockwise,
// ascending in the original variable index, occurrences left to right. A
// multilinear input comes back as a single-element list containing itself.
std::vector<Poly> multilinearize(const Poly& raw);

// all permutations of 1..n in lexicographic order
std::vector<Permutation> symmetric_group(int n);
Permutation compose(const Permutation& s, const Permutation& t); // s after t

} // namespace dialg
