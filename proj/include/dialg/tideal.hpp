#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dialg/linalg.hpp"
#include "dialg/terms.hpp"

namespace dialg {

// A variety given by a finite set of multilinear defining identities.
struct VarietyPresentation {
    Signature sig;
    std::vector<Poly> generators; // multilinear, nonzero, degree >= 1
    std::string name;

    void validate() const; // throws std::invalid_argument on a broken invariant
    int min_degree() const;
};

struct CodimReport {
    int n = 0;
    long free_dim = 0;
    long ideal_dim = 0;
    long codim = 0; // free_dim - ideal_dim
};

struct ConsequenceOptions {
    long max_free_dim = 30240;
    long max_rows = 5000000;
    // Skip rows that reduce to zero mod p during the closure and re-certify
    // them over Q against the finished basis; exact answers either way.
    bool modular_prefilter = false;
};

// Degree-n multilinear component of the T-ideal generated by V.generators,
// as a row space inside FreeSpace(n, V.sig). Computed degree by degree from
// the elementary steps (external products with a fresh variable, variable
// doubling) plus full S_n-orbit closure.
RowBasis consequences(const VarietyPresentation& V, int n,
                      const ConsequenceOptions& opts = {});

CodimReport codim(const VarietyPresentation& V, int n,
                  const ConsequenceOptions& opts = {});

// One report per degree 1..n, sharing a single closure pass.
std::vector<CodimReport> codim_range(const VarietyPresentation& V, int n,
                                     const ConsequenceOptions& opts = {});

// True iff the two T-ideals have equal degree-m components for every m <= n.
// Decided by mutual membership of the defining identities of degree <= n in
// the other ideal (the components are generated from those identities by
// steps that preserve membership).
bool tideal_equal(const VarietyPresentation& V1, const VarietyPresentation& V2,
                  int n, const ConsequenceOptions& opts = {});

// Independent oracle: spans all one-box elements C[f(m_1,...,m_d)] of degree
// n directly (context with one hole, generator, disjoint multilinear fillers).
// Guarded to free_dim <= guard.
RowBasis brute_force_consequences(const VarietyPresentation& V, int n,
                                  long guard = 10000);

// Fixed presentations used across tests, the zoo and the CLI verify command.
namespace presets {
VarietyPresentation com();            // commutative associative, one op "*"
VarietyPresentation assoc();          // associative, one op "*"
VarietyPresentation lie();            // anticommutativity + Jacobi
VarietyPresentation leib();           // left Leibniz identity
VarietyPresentation perm();           // assoc + (x1*x2-x2*x1)*x3
VarietyPresentation zinbiel_single(); // (xy+yx)z = x(yz), one op
VarietyPresentation pois();           // Poisson: ops "*", "@"
VarietyPresentation trivial(int base_ops = 1); // no identities
VarietyPresentation leib_pairing_di();         // Leibniz-plus-pairing over the di signature
std::optional<VarietyPresentation> by_name(const std::string& name);
std::vector<std::string> names();
} // namespace presets

} // namespace dialg
