#pragma once

#include "abmod/fresco.hpp"

#include <string>
#include <vector>

namespace abmod {

// Solutions of (a - lambda b) x = 0: a Q-basis and the lattice it spans.
struct EigenSpace {
    std::vector<SeriesVector> vectors;
    Lattice lattice;
};

EigenSpace eigen_elements(const ModulePtr& e, const Rational& lambda, int max_iter = -1);

// Normal hull of the span of all eigen elements.
Lattice semisimple_part(const ModulePtr& e, int max_iter = -1);
bool is_semisimple(const ModulePtr& e, int max_iter = -1);

struct Filtration {
    std::vector<Lattice> steps;  // S_1 ... S_d = E
    int nilpotent_order = 0;
    std::vector<std::string> diagnostics;
};

Filtration semisimple_filtration(const ModulePtr& e, int max_iter = -1);

// Representative in (0, 1] of alpha modulo Z.
Rational normalize_class(const Rational& alpha);
// Classes alpha (roots in -alpha - Z) met by the roots, ascending.
std::vector<Rational> root_classes(const RationalPolynomial& p);

struct PrimitiveSplit {
    std::vector<Rational> classes;
    Lattice e_not;           // part whose roots avoid the classes
    QuotientModule e_part;   // E / e_not; module is null when e_not = E
};

PrimitiveSplit primitive_split(const ModulePtr& e, const std::vector<Rational>& classes, int max_iter = -1);

struct HigherLevel {
    int j = 0;
    int delta = 0;
    RationalPolynomial tilde;  // Bernstein of S_j / S_{j-1}
    RationalPolynomial poly;   // tilde(x - delta)
};

struct ClassBernstein {
    Rational alpha;
    int rank = 0;
    int nilpotent_order = 0;
    std::vector<HigherLevel> levels;
};

struct HigherBernstein {
    std::vector<ClassBernstein> classes;
    std::vector<RationalPolynomial> levels;  // B_j = product over classes
    RationalPolynomial bernstein;            // characteristic-mode B_F
    bool product_check = false;
    bool simple_roots_check = false;
    bool degrees_check = false;
    std::vector<std::string> diagnostics;
    bool valid() const { return product_check && simple_roots_check && degrees_check; }
};

HigherBernstein higher_bernstein(const Fresco& f, int max_iter = -1);

}  // namespace abmod
