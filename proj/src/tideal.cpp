#include "dialg/tideal.hpp"

#include <algorithm>
#include <unordered_set>

namespace dialg {

void VarietyPresentation::validate() const {
    for (const auto& g : generators) {
        if (g.is_zero())
            throw std::invalid_argument("zero generator in presentation " + name);
        int deg = g.degree();
        if (deg < 1) throw std::invalid_argument("generator of degree < 1");
        for (const auto& [m, c] : g.terms()) {
            if (m.degree() != deg)
                throw std::invalid_argument("mixed-degree generator in " + name);
            if (!m.is_multilinear())
                throw std::invalid_argument("non-multilinear generator in " + name);
            for (const int32_t x : m.code())
                if (x < 0 && -x - 1 >= sig.op_count())
                    throw std::invalid_argument("op index out of signature in " + name);
        }
    }
}

int VarietyPresentation::min_degree() const {
    int d = 0;
    for (const auto& g : generators)
        if (d == 0 || g.degree() < d) d = g.degree();
    return d;
}

namespace {

SparseVec to_vec(const Poly& p, const FreeSpace& F) {
    SparseVec v;
    v.dim = F.dim();
    for (const auto& [m, c] : p.terms()) {
        long idx = F.index_of(m);
        if (idx < 0) throw std::logic_error("monomial outside free space");
        v.entries.emplace_back(idx, c);
    }
    // Poly iterates terms in canonical monomial order = basis order
    return v;
}

Poly to_poly(const SparseVec& v, const FreeSpace& F) {
    Poly p;
    for (const auto& [idx, c] : v.entries) p.add(F.at(idx), c);
    return p;
}

// replace leaf `var` of t by (x_var op x_fresh) or (x_fresh op x_var)
Monomial double_leaf(const Monomial& t, int var, int op, bool fresh_on_right) {
    int fresh = t.degree() + 1;
    std::vector<int32_t> out;
    out.reserve(t.code().size() + 2);
    for (int32_t c : t.code()) {
        if (c == var) {
            out.push_back(-op - 1);
            out.push_back(fresh_on_right ? var : fresh);
            out.push_back(fresh_on_right ? fresh : var);
        } else {
            out.push_back(c);
        }
    }
    return Monomial::from_code(std::move(out));
}

Poly double_leaf(const Poly& p, int var, int op, bool fresh_on_right) {
    Poly r;
    for (const auto& [t, c] : p.terms()) r.add(double_leaf(t, var, op, fresh_on_right), c);
    return r;
}

// x_fresh op p  or  p op x_fresh
Poly external_product(const Poly& p, int op, bool fresh_on_left) {
    int fresh = p.degree() + 1;
    Monomial x = Monomial::leaf(fresh);
    Poly r;
    for (const auto& [t, c] : p.terms())
        r.add(fresh_on_left ? Monomial::node(op, x, t) : Monomial::node(op, t, x), c);
    return r;
}

// permutation of 1..m sending m -> j, keeping the rest in order
Permutation insert_fresh_at(int m, int j) {
    Permutation perm(m);
    for (int t = 1; t < m; ++t) perm[t - 1] = t < j ? t : t + 1;
    perm[m - 1] = j;
    return perm;
}

// All step images of a degree-(m-1) poly into degree m, with the fresh
// variable placed at every position j. Applied to an S_{m-1}-invariant space
// this spans the full S_m-orbit closure of the elementary consequences.
void step_images(const Poly& p, const Signature& sig, std::vector<Poly>& out) {
    int m = p.degree() + 1;
    std::vector<Poly> raw;
    for (int op = 0; op < sig.op_count(); ++op) {
        raw.push_back(external_product(p, op, false));
        raw.push_back(external_product(p, op, true));
        for (int i = 1; i < m; ++i) {
            raw.push_back(double_leaf(p, i, op, true));
            raw.push_back(double_leaf(p, i, op, false));
        }
    }
    for (int j = 1; j <= m; ++j) {
        Permutation perm = insert_fresh_at(m, j);
        for (const auto& q : raw) out.push_back(act(perm, q));
    }
}

struct ClosureState {
    std::unique_ptr<FreeSpace> space;
    std::unique_ptr<RowBasis> basis;
};

// run the closure from degree 1 up to n; returns the per-degree bases
std::vector<ClosureState> run_closure(const VarietyPresentation& V, int n,
                                      const ConsequenceOptions& opts) {
    V.validate();
    if (n < 1) throw std::invalid_argument("degree must be >= 1");

    std::vector<ClosureState> states(n + 1); // states[m], m = 1..n
    long rows_seen = 0;

    for (int m = 1; m <= n; ++m) {
        auto F = std::make_unique<FreeSpace>(m, V.sig, opts.max_free_dim);
        auto basis = std::make_unique<RowBasis>(F->dim());
        ModRowBasis modbasis(F->dim());
        std::vector<SparseVec> deferred;
        std::unordered_set<std::string> seen;

        auto feed = [&](const Poly& p) {
            if (p.is_zero()) return;
            if (++rows_seen > opts.max_rows)
                throw ResourceLimitError("row cap exceeded during closure", m);
            SparseVec v = to_vec(p, *F);
            if (!seen.insert(v.dump()).second) return; // duplicate row
            if (opts.modular_prefilter) {
                bool fresh = false;
                try {
                    fresh = modbasis.insert(v);
                } catch (const std::domain_error&) {
                    fresh = true; // cannot decide mod p, fall through to Q
                }
                if (!fresh) {
                    deferred.push_back(std::move(v));
                    return;
                }
            }
            basis->insert(std::move(v));
        };

        // step images of the previous degree
        if (m > 1 && states[m - 1].basis && states[m - 1].basis->rank() > 0) {
            const auto& prev = states[m - 1];
            std::vector<Poly> steps;
            for (long id : prev.basis->row_order()) {
                steps.clear();
                step_images(to_poly(prev.basis->rows_stored()[id], *prev.space), V.sig,
                            steps);
                for (const auto& q : steps) feed(q);
            }
        }

        // full orbits of the generators of this degree
        for (const auto& g : V.generators) {
            if (g.degree() != m) continue;
            for (const auto& perm : symmetric_group(m)) feed(act(perm, g));
        }

        // re-certify rows the prefilter skipped
        if (opts.modular_prefilter) {
            basis->finalize();
            bool again = true;
            while (again) {
                again = false;
                std::vector<SparseVec> rest;
                for (auto& v : deferred) {
                    if (basis->insert(std::move(v))) again = true; // unlucky prime
                }
                deferred = std::move(rest);
                if (again) basis->finalize();
            }
        }

        basis->finalize();
        states[m].space = std::move(F);
        states[m].basis = std::move(basis);
    }
    return states;
}

} // namespace

RowBasis consequences(const VarietyPresentation& V, int n,
                      const ConsequenceOptions& opts) {
    auto states = run_closure(V, n, opts);
    return std::move(*states[n].basis);
}

CodimReport codim(const VarietyPresentation& V, int n, const ConsequenceOptions& opts) {
    FreeSpace F(n, V.sig, opts.max_free_dim);
    RowBasis b = consequences(V, n, opts);
    return CodimReport{n, F.dim(), b.rank(), F.dim() - b.rank()};
}

std::vector<CodimReport> codim_range(const VarietyPresentation& V, int n,
                                     const ConsequenceOptions& opts) {
    auto states = run_closure(V, n, opts);
    std::vector<CodimReport> out;
    for (int m = 1; m <= n; ++m) {
        long dim = states[m].space->dim();
        long rank = states[m].basis->rank();
        out.push_back(CodimReport{m, dim, rank, dim - rank});
    }
    return out;
}

bool tideal_equal(const VarietyPresentation& V1, const VarietyPresentation& V2,
                  int n, const ConsequenceOptions& opts) {
    if (V1.sig != V2.sig)
        throw std::invalid_argument("tideal_equal: signature mismatch");
    auto contains_generators = [&](const VarietyPresentation& host,
                                   const VarietyPresentation& guest) {
        auto states = run_closure(host, n, opts);
        for (const auto& g : guest.generators) {
            int d = g.degree();
            if (d > n) continue; // cannot influence components <= n
            if (!states[d].basis->contains(
                    to_vec(g, *states[d].space)))
                return false;
        }
        return true;
    };
    return contains_generators(V1, V2) && contains_generators(V2, V1);
}

// ---- brute-force oracle -------------------------------------------------------

namespace {

// all monomials on an ordered variable set (same enumeration as the free basis
// but on arbitrary label sets)
void monomials_on(const std::vector<int>& vars, const Signature& sig,
                  std::vector<Monomial>& out) {
    if (vars.size() == 1) {
        out.push_back(Monomial::leaf(vars[0]));
        return;
    }
    size_t n = vars.size();
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> lv, rv;
        for (size_t i = 0; i < n; ++i)
            ((mask >> i) & 1 ? lv : rv).push_back(vars[i]);
        std::vector<Monomial> ls, rs;
        monomials_on(lv, sig, ls);
        monomials_on(rv, sig, rs);
        for (int op = 0; op < sig.op_count(); ++op)
            for (const auto& l : ls)
                for (const auto& r : rs)
                    out.push_back(Monomial::node(op, l, r));
    }
}

// contexts: monomials on {hole} + vars, hole marked by index 0
void contexts_on(const std::vector<int>& vars, const Signature& sig,
                 std::vector<Monomial>& out) {
    std::vector<int> with_hole = vars;
    with_hole.push_back(0);
    std::sort(with_hole.begin(), with_hole.end());
    // reuse monomial enumeration with the hole encoded as variable number
    // `hole_code`, later substituted
    std::vector<int> shifted;
    for (int v : with_hole) shifted.push_back(v + 1); // avoid 0 as a leaf label
    monomials_on(shifted, sig, out);
}

// ordered set partitions of vars into d nonempty blocks
void ordered_partitions(const std::vector<int>& vars, int d,
                        std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<std::vector<int>> blocks(d);
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == vars.size()) {
            for (const auto& b : blocks)
                if (b.empty()) return;
            out.push_back(blocks);
            return;
        }
        for (int b = 0; b < d; ++b) {
            blocks[b].push_back(vars[idx]);
            self(self, idx + 1);
            blocks[b].pop_back();
        }
    };
    rec(rec, 0);
}

// substitute monomial fillers for the generator's variables: variable i of g
// is replaced by fillers[i-1] (whose leaves already carry final labels)
Monomial graft(const Monomial& g, const std::vector<Monomial>& fillers) {
    std::vector<int32_t> out;
    for (int32_t c : g.code()) {
        if (c > 0) {
            const auto& f = fillers[c - 1].code();
            out.insert(out.end(), f.begin(), f.end());
        } else {
            out.push_back(c);
        }
    }
    return Monomial::from_code(std::move(out));
}

} // namespace

RowBasis brute_force_consequences(const VarietyPresentation& V, int n, long guard) {
    V.validate();
    FreeSpace F(n, V.sig, guard);
    RowBasis basis(F.dim());
    std::unordered_set<std::string> seen;

    std::vector<int> all_vars(n);
    for (int i = 0; i < n; ++i) all_vars[i] = i + 1;

    for (const auto& g : V.generators) {
        int d = g.degree();
        if (d > n) continue;
        // choose the set of variables feeding the generator (the rest label the
        // context), sized f = |filler leaves| from d..n
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> filler_vars, context_vars;
            for (int i = 0; i < n; ++i)
                ((mask >> i) & 1 ? filler_vars : context_vars).push_back(i + 1);
            if (static_cast<int>(filler_vars.size()) < d) continue;

            std::vector<std::vector<std::vector<int>>> parts;
            ordered_partitions(filler_vars, d, parts);

            std::vector<Monomial> ctxs;
            contexts_on(context_vars, V.sig, ctxs);

            for (const auto& part : parts) {
                // every choice of a monomial on each block
                std::vector<std::vector<Monomial>> block_monos(d);
                for (int b = 0; b < d; ++b)
                    monomials_on(part[b], V.sig, block_monos[b]);
                std::vector<int> pick(d, 0);
                bool done = false;
                while (!done) {
                    std::vector<Monomial> fillers(d);
                    for (int b = 0; b < d; ++b) fillers[b] = block_monos[b][pick[b]];
                    Poly plugged;
                    for (const auto& [t, c] : g.terms()) plugged.add(graft(t, fillers), c);
                    for (const auto& ctx : ctxs) {
                        // hole was encoded as leaf 1 (shifted labels), real vars v as v+1
                        Poly element;
                        for (const auto& [pt, pc] : plugged.terms()) {
                            std::vector<int32_t> code;
                            for (int32_t c : ctx.code()) {
                                if (c == 1) {
                                    code.insert(code.end(), pt.code().begin(), pt.code().end());
                                } else if (c > 0) {
                                    code.push_back(c - 1);
                                } else {
                                    code.push_back(c);
                                }
                            }
                            element.add(Monomial::from_code(std::move(code)), pc);
                        }
                        SparseVec v;
                        v.dim = F.dim();
                        for (const auto& [m, c] : element.terms()) {
                            long idx = F.index_of(m);
                            if (idx < 0) throw std::logic_error("oracle produced a bad monomial");
                            v.entries.emplace_back(idx, c);
                        }
                        if (seen.insert(v.dump()).second) basis.insert(std::move(v));
                    }
                    // advance odometer
                    int b = 0;
                    while (b < d) {
                        if (++pick[b] < static_cast<int>(block_monos[b].size())) break;
                        pick[b] = 0;
                        ++b;
                    }
                    if (b == d) done = true;
                }
            }
        }
    }
    basis.finalize();
    return basis;
}

// ---- presets -------------------------------------------------------------------

namespace presets {

namespace {
Monomial X(int i) { return Monomial::leaf(i); }
Monomial op0(const Monomial& a, const Monomial& b) { return Monomial::node(0, a, b); }
Monomial op1(const Monomial& a, const Monomial& b) { return Monomial::node(1, a, b); }
} // namespace

VarietyPresentation assoc() {
    VarietyPresentation V;
    V.sig = Signature::plain({"*"});
    V.name = "assoc";
    Poly a(op0(op0(X(1), X(2)), X(3)));
    a -= Poly(op0(X(1), op0(X(2), X(3))));
    V.generators = {a};
    return V;
}

VarietyPresentation com() {
    VarietyPresentation V = assoc();
    V.name = "com";
    Poly c(op0(X(1), X(2)));
    c -= Poly(op0(X(2), X(1)));
    V.generators.insert(V.generators.begin(), c);
    return V;
}

VarietyPresentation lie() {
    VarietyPresentation V;
    V.sig = Signature::plain({"*"});
    V.name = "lie";
    Poly anti(op0(X(1), X(2)));
    anti += Poly(op0(X(2), X(1)));
    // (x1x2)x3 + (x2x3)x1 + (x3x1)x2 = 0
    Poly jac(op0(op0(X(1), X(2)), X(3)));
    jac += Poly(op0(op0(X(2), X(3)), X(1)));
    jac += Poly(op0(op0(X(3), X(1)), X(2)));
    V.generators = {anti, jac};
    return V;
}

VarietyPresentation leib() {
    VarietyPresentation V;
    V.sig = Signature::plain({"*"});
    V.name = "leib";
    // x1(x2x3) = (x1x2)x3 + x2(x1x3)
    Poly l(op0(X(1), op0(X(2), X(3))));
    l -= Poly(op0(op0(X(1), X(2)), X(3)));
    l -= Poly(op0(X(2), op0(X(1), X(3))));
    V.generators = {l};
    return V;
}

VarietyPresentation perm() {
    VarietyPresentation V = assoc();
    V.name = "perm";
    // (x1x2 - x2x1)x3
    Poly p(op0(op0(X(1), X(2)), X(3)));
    p -= Poly(op0(op0(X(2), X(1)), X(3)));
    V.generators.push_back(p);
    return V;
}

VarietyPresentation zinbiel_single() {
    VarietyPresentation V;
    V.sig = Signature::plain({"*"});
    V.name = "zinbiel";
    // (x1x2 + x2x1)x3 = x1(x2x3)
    Poly z(op0(op0(X(1), X(2)), X(3)));
    z += Poly(op0(op0(X(2), X(1)), X(3)));
    z -= Poly(op0(X(1), op0(X(2), X(3))));
    V.generators = {z};
    return V;
}

VarietyPresentation pois() {
    VarietyPresentation V;
    V.sig = Signature::plain({"*", "@"}); // * product, @ bracket
    V.name = "pois";
    Poly a(op0(op0(X(1), X(2)), X(3)));
    a -= Poly(op0(X(1), op0(X(2), X(3))));
    Poly c(op0(X(1), X(2)));
    c -= Poly(op0(X(2), X(1)));
    Poly anti(op1(X(1), X(2)));
    anti += Poly(op1(X(2), X(1)));
    Poly jac(op1(op1(X(1), X(2)), X(3)));
    jac += Poly(op1(op1(X(2), X(3)), X(1)));
    jac += Poly(op1(op1(X(3), X(1)), X(2)));
    // {x1*x2, x3} = x1*{x2,x3} + x2*{x1,x3}
    Poly der(op1(op0(X(1), X(2)), X(3)));
    der -= Poly(op0(X(1), op1(X(2), X(3))));
    der -= Poly(op0(X(2), op1(X(1), X(3))));
    V.generators = {c, a, anti, jac, der};
    return V;
}

VarietyPresentation trivial(int base_ops) {
    VarietyPresentation V;
    std::vector<std::string> ops;
    for (int i = 0; i < base_ops; ++i)
        ops.push_back(i == 0 ? "*" : "@" + std::to_string(i));
    V.sig = Signature::plain(ops);
    V.name = "alg";
    return V;
}

VarietyPresentation leib_pairing_di() {
    VarietyPresentation V;
    V.sig = Signature::di_of(Signature::plain({"*"}));
    V.name = "leib-pairing";
    const int vd = 0, dv = 1; // |- and -| of the single base op
    auto n2 = [&](int op, const Monomial& a, const Monomial& b) {
        return Monomial::node(op, a, b);
    };
    // pairing: x1 |- x2 + x2 -| x1
    Poly pair(n2(vd, X(1), X(2)));
    pair += Poly(n2(dv, X(2), X(1)));
    // left Leibniz in |-: x1|-(x2|-x3) - (x1|-x2)|-x3 - x2|-(x1|-x3)
    Poly l(n2(vd, X(1), n2(vd, X(2), X(3))));
    l -= Poly(n2(vd, n2(vd, X(1), X(2)), X(3)));
    l -= Poly(n2(vd, X(2), n2(vd, X(1), X(3))));
    // 0-identities: (x1|-x2 - x1-|x2)|-x3 and x1-|(x2|-x3 - x2-|x3)
    Poly z1(n2(vd, n2(vd, X(1), X(2)), X(3)));
    z1 -= Poly(n2(vd, n2(dv, X(1), X(2)), X(3)));
    Poly z2(n2(dv, X(1), n2(vd, X(2), X(3))));
    z2 -= Poly(n2(dv, X(1), n2(dv, X(2), X(3))));
    V.generators = {pair, l, z1, z2};
    return V;
}

std::optional<VarietyPresentation> by_name(const std::string& name) {
    if (name == "com") return com();
    if (name == "assoc") return assoc();
    if (name == "lie") return lie();
    if (name == "leib") return leib();
    if (name == "perm") return perm();
    if (name == "zinbiel") return zinbiel_single();
    if (name == "pois") return pois();
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"com", "assoc", "lie", "leib", "perm", "zinbiel", "pois"};
}

} // namespace presets

} // namespace dialg
