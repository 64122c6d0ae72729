#pragma once

#include "abmod/lattice.hpp"
#include "abmod/polynomial.hpp"

#include <string>
#include <vector>

namespace abmod {

// E# together with its position inside E (x) K. The E# basis vectors are
// b^{-shift} times the columns of `basis` (coordinates in E); `inclusion` maps
// E coordinates to E# coordinates.
struct Saturation {
    ModulePtr module;
    SeriesMatrix basis;
    int shift = 0;
    SeriesMatrix inclusion;
    int steps = 0;
};

// max_iter < 0 means rank * prec.
Saturation saturate(const ModulePtr& e, int max_iter = -1);

enum class BernsteinMode { Minimal, Characteristic };

// Coefficient of b in the a-matrix of a simple-pole module.
QMatrix residue_matrix(const AbModule& e);

RationalPolynomial bernstein_from_saturation(const Saturation& sat, BernsteinMode mode,
                                             const std::vector<Rational>& hints = {});
RationalPolynomial bernstein_polynomial(const ModulePtr& e, BernsteinMode mode = BernsteinMode::Minimal,
                                        const std::vector<Rational>& hints = {}, int max_iter = -1);

struct GeometricCertificate {
    bool geometric = false;
    RationalPolynomial bernstein;
    std::string reason;  // empty when geometric
};

GeometricCertificate is_geometric(const ModulePtr& e, BernsteinMode mode = BernsteinMode::Minimal, int max_iter = -1);

}  // namespace abmod
