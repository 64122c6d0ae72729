#pragma once

#include "abmod/linalg.hpp"

#include <functional>
#include <vector>

namespace abmod {

// All solutions of  lhs(n) x_n = rhs_n  for n = 0..steps-1, where rhs_n is a
// linear function of x_0..x_{n-1}. Solutions are x_n = coeffs[n] * t for a free
// parameter vector t of size `params`. When lhs(n) is singular, the solvability
// condition cuts the parameters down and the kernel adds new ones.
struct ParametricSolution {
    std::vector<QMatrix> coeffs;
    int params = 0;
};

// rhs(n, prev) gets the coefficient matrices of x_0..x_{n-1} (each dim x params)
// and returns the dim x params matrix of the right-hand side.
using RecursionRhs = std::function<QMatrix(int, const std::vector<QMatrix>&)>;

ParametricSolution solve_recursion(int dim, int steps, const std::function<QMatrix(int)>& lhs, const RecursionRhs& rhs);

}  // namespace abmod
