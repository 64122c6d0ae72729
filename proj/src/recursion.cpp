#include "abmod/recursion.hpp"

#include "abmod/errors.hpp"

namespace abmod {

namespace {

QMatrix pad_columns(const QMatrix& m, int cols) {
    QMatrix out(m.rows(), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

}  // namespace

ParametricSolution solve_recursion(int dim, int steps, const std::function<QMatrix(int)>& lhs, const RecursionRhs& rhs) {
    ParametricSolution sol;
    for (int n = 0; n < steps; ++n) {
        const QMatrix m = lhs(n);
        QMatrix b = sol.params > 0 ? rhs(n, sol.coeffs) : QMatrix(dim, 0);
        const QMatrix w = left_nullspace(m);
        if (w.rows() > 0 && sol.params > 0) {
            const QMatrix z = nullspace(w * b);
            if (z.cols() < sol.params) {
                for (auto& a : sol.coeffs) a = a * z;
                b = b * z;
                sol.params = z.cols();
            }
        }
        QMatrix a(dim, sol.params);
        if (sol.params > 0) {
            auto x = solve(m, b);
            if (!x) fail(ErrorKind::ValidationFailed, "recursion step unsolvable after reparametrization");
            a = *x;
        }
        const QMatrix k = nullspace(m);
        if (k.cols() > 0) {
            const int total = sol.params + k.cols();
            for (auto& c : sol.coeffs) c = pad_columns(c, total);
            a = pad_columns(a, total);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < k.cols(); ++j) a(i, sol.params + j) = k(i, j);
            sol.params = total;
        }
        sol.coeffs.push_back(a);
    }
    return sol;
}

}  // namespace abmod
