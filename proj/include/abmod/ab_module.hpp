#pragma once

#include "abmod/ab_operator.hpp"
#include "abmod/series_matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace abmod {

/// Free rank-k module over truncated series in b with an a-action. Column j of
/// the a-matrix holds the coordinates of a*e_j; on a general element the action
/// is  a(sum S_j e_j) = sum S_j a e_j + b^2 S_j' e_j.
class AbModule {
public:
    explicit AbModule(SeriesMatrix a_matrix);

    int rank() const { return a_matrix_.rows(); }
    int prec() const { return prec_; }
    const SeriesMatrix& a_matrix() const { return a_matrix_; }

    SeriesVector apply_a(const SeriesVector& x) const;
    SeriesVector apply(const AbOperator& op, const SeriesVector& x) const;
    bool is_simple_pole() const;

private:
    SeriesMatrix a_matrix_;
    int prec_;
};

using ModulePtr = std::shared_ptr<const AbModule>;

ModulePtr module_from_matrix(SeriesMatrix mat);

struct ModuleElement {
    ModulePtr host;
    SeriesVector coords;

    static ModuleElement basis(const ModulePtr& host, int j);
    static ModuleElement zero(const ModulePtr& host);
    int prec() const { return vector_prec(coords); }
};

ModuleElement operator+(const ModuleElement& x, const ModuleElement& y);
ModuleElement operator-(const ModuleElement& x, const ModuleElement& y);
ModuleElement operator*(const TruncSeries& s, const ModuleElement& x);

ModuleElement act(const AbOperator& op, const ModuleElement& x);
bool is_simple_pole(const AbModule& e);

// Direct sum over alpha of Xi_alpha^(N) (x) V: basis ordered (alpha, v, j) with
// a e_j = alpha b (e_j + e_{j-1}).
ModulePtr build_xi_tensor(const std::vector<Rational>& alphas, int n, int dim_v, int prec);
// Basis index of e_j (x) v in the alpha block number alpha_index.
inline int xi_index(int alpha_index, int v, int j, int n, int dim_v) { return (alpha_index * dim_v + v) * (n + 1) + j; }

// Direct sum of modules (block-diagonal a-matrix).
ModulePtr direct_sum(const std::vector<ModulePtr>& parts);

}  // namespace abmod
