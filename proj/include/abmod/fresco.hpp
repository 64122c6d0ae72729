#pragma once

#include "abmod/saturation.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace abmod {

// (a - lambda_1 b) S_1 (a - lambda_2 b) S_2 ... (a - lambda_k b) [S_k]
// The unit after the last factor is optional; when present it is multiplied in.
struct FrescoFactor {
    Rational lambda;
    std::optional<TruncSeries> unit;
};

struct FrescoPresentation {
    std::vector<FrescoFactor> factors;
    int rank() const { return static_cast<int>(factors.size()); }
};

using LeftForm = std::vector<std::pair<int, TruncSeries>>;

// A/AP for the left ideal AP, or the sub-module A x of some host.
struct Fresco {
    ModulePtr module;
    ModuleElement generator;
    std::optional<FrescoPresentation> presentation;
    std::optional<LeftForm> left_form;
    // When built inside a host: images of the module basis, in host coordinates.
    ModulePtr host;
    std::vector<SeriesVector> inclusion;

    int rank() const { return module ? module->rank() : 0; }
};

AbOperator presentation_operator(const FrescoPresentation& p, int prec);
// Companion module on [1], [a], ..., [a^{k-1}] for a left form with unit leading coefficient.
ModulePtr companion_module(const LeftForm& left_form);
Fresco fresco_from_presentation(const FrescoPresentation& p, int prec);
// Values -(lambda_j + j - k).
std::vector<Rational> formula_roots(const FrescoPresentation& p);

struct FormulaBernstein {
    RationalPolynomial poly;
    std::vector<Rational> non_negative_roots;
    bool geometric() const { return non_negative_roots.empty(); }
};
FormulaBernstein bernstein_via_formula(const FrescoPresentation& p);

// Characteristic-mode Bernstein polynomial of a fresco (1 for the zero fresco).
RationalPolynomial fresco_bernstein(const Fresco& f, int max_iter = -1);

// (a - lambda_k b)[S_k] applied to the generator of a presented fresco.
ModuleElement right_factor_element(const Fresco& f);

Fresco generated_submodule(const ModulePtr& e, const ModuleElement& x);
// The lattice spanned by the images of a fresco built inside a host.
Lattice fresco_lattice(const Fresco& f);

struct JhReport {
    RationalPolynomial b_sub;
    RationalPolynomial b_quot;
    RationalPolynomial b_total;
    int q = 0;
    bool shifted_minus_holds = false;  // B_F(x) = B_sub(x - q) B_quot(x)
    bool shifted_plus_holds = false;   // B_F(x) = B_sub(x + q) B_quot(x)
};

struct JhSplit {
    Fresco sub;
    Lattice sub_lattice;
    std::optional<Fresco> quot;
    JhReport report;
};

JhSplit jh_split(const Fresco& f, const ModuleElement& x, int max_iter = -1);

}  // namespace abmod
