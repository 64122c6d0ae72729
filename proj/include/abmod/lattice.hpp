#pragma once

#include "abmod/ab_module.hpp"

#include <optional>
#include <vector>

namespace abmod {

struct Pivot {
    int column = 0;
    int valuation = 0;
    friend bool operator==(const Pivot&, const Pivot&) = default;
};

/// Finitely generated Q[[b]]-submodule of a module, held in valuation-pivot
/// (Hermite) normal form: basis vector i has the exact entry b^{v_i} in its
/// pivot column, zero in the pivot columns of later vectors, and entries of
/// degree < v_j in the pivot columns of earlier ones.
///
/// Precision: computations are exact modulo b^p where p is the precision that
/// survives the reductions. A residual that vanishes to precision p decides
/// membership only when the lattice is resolved at p: for full rank,
/// sum(v_i) <= p certifies b^p E inside L; for lower rank every pivot
/// valuation must be below p. Otherwise PrecisionExhausted is raised.
class Lattice {
public:
    explicit Lattice(ModulePtr host) : host_(std::move(host)) {}

    const ModulePtr& host() const { return host_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    bool full_rank() const { return rank() == host_->rank(); }
    const std::vector<SeriesVector>& basis() const { return basis_; }
    const std::vector<Pivot>& pivots() const { return pivots_; }
    int max_pivot_valuation() const;
    int index_valuation() const;
    std::vector<ModuleElement> elements() const;

    friend Lattice lattice_reduce(const ModulePtr& host, const std::vector<SeriesVector>& gens);

private:
    ModulePtr host_;
    std::vector<SeriesVector> basis_;
    std::vector<Pivot> pivots_;
};

// Pivot choice: lowest valuation, then lowest column index, then lowest generator.
Lattice lattice_reduce(const ModulePtr& host, const std::vector<SeriesVector>& gens);
Lattice lattice_reduce(const ModulePtr& host, const std::vector<ModuleElement>& gens);
Lattice whole_module(const ModulePtr& host);

// Coefficients (one per basis vector) expressing x in L, nullopt when x is not in L.
std::optional<SeriesVector> lattice_coordinates(const Lattice& lattice, const SeriesVector& x);
bool lattice_member(const ModuleElement& x, const Lattice& lattice);
bool lattice_member(const SeriesVector& x, const Lattice& lattice);
// inner is contained in outer
bool lattice_contains(const Lattice& outer, const Lattice& inner);
bool lattice_equal(const Lattice& x, const Lattice& y);

bool is_normal(const Lattice& lattice);
Lattice normal_hull(const Lattice& lattice);
bool is_a_stable(const Lattice& lattice);

Lattice lattice_sum(const Lattice& x, const Lattice& y);
Lattice lattice_intersection(const Lattice& x, const Lattice& y);
// Q[[b]]-linear relations sum_i c_i gens_i = 0 (generators of the syzygy module).
std::vector<SeriesVector> syzygies(const ModulePtr& host, const std::vector<SeriesVector>& gens);

// The a-stable lattice as a module in its own basis (NotAStable otherwise).
ModulePtr lattice_as_module(const Lattice& lattice);

/// E/L for a normal, a-stable L: free on the non-pivot columns of L.
struct QuotientModule {
    ModulePtr module;
    Lattice kernel;
    std::vector<int> complement;

    // Coordinates of the class of x.
    SeriesVector project(const SeriesVector& x) const;
    // A representative in the host with zero pivot coordinates.
    SeriesVector lift(const SeriesVector& y) const;
};

QuotientModule quotient_module(const ModulePtr& e, const Lattice& lattice);

// Image of L' (a lattice of the quotient) under the lift, plus the kernel.
Lattice preimage(const QuotientModule& q, const Lattice& in_quotient);
// Image of a host lattice in the quotient.
Lattice project_lattice(const QuotientModule& q, const Lattice& lattice);

}  // namespace abmod
