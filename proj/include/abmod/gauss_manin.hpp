#pragma once

#include "abmod/decomposition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace abmod {

// z d/dz F = A(z) F; entries are polynomials in z (ascending coefficients).
struct DiffSystem {
    int size = 0;
    std::vector<std::vector<std::vector<Rational>>> entries;
};

ModulePtr from_differential_system(const DiffSystem& sys, int prec);

struct XiShape {
    std::vector<Rational> alphas;
    int n = 0;
    int dim_v = 1;
    int rank() const { return static_cast<int>(alphas.size()) * (n + 1) * dim_v; }
};

ModulePtr build_xi(const XiShape& shape, int prec);

struct Embedding {
    XiShape shape;
    ModulePtr target;
    SeriesMatrix map;  // column j = image of e_j
    int maps_searched = 0;
    bool equivariant = false;
    bool injective = false;
};

Embedding embed_into_xi(const ModulePtr& e, std::uint64_t seed = 0, int max_iter = -1);

// coeff * s^(alpha + m - 1) * log(s)^j in component v of V
struct ExpansionTerm {
    Rational alpha;
    int m = 0;
    int j = 0;
    Rational coeff;
    int component = 0;
    friend bool operator==(const ExpansionTerm&, const ExpansionTerm&) = default;
};

using Expansion = std::vector<ExpansionTerm>;

// Terms with m <= order, sorted by (component, alpha, m, j), zero terms dropped.
Expansion realize_expansion(const XiShape& shape, const SeriesVector& x, int order);
Expansion expansion_times_s(const Expansion& x, int order);
Expansion expansion_integrate(const Expansion& x, int order);
Expansion expansion_add(const Expansion& x, const Expansion& y, const Rational& c = 1);
std::string expansion_to_string(const Expansion& x, int dim_v = 1);

struct SingularTerm {
    Rational alpha;
    int nilpotent_order = 0;
    std::vector<Rational> roots;  // roots -alpha - m of B_d
    std::vector<int> m;
    int log_power = 0;
    Rational exponent;  // 2 alpha - 2, the power of |s|
    std::string term;
};

struct SingularReport {
    std::vector<SingularTerm> classes;
    std::vector<std::string> diagnostics;
};

SingularReport singular_term_report(const Fresco& f, int max_iter = -1);

}  // namespace abmod
