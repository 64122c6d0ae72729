#pragma once

#include "abmod/decomposition.hpp"
#include "abmod/gauss_manin.hpp"

#include "json.hpp"

namespace abmod {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

// {"coeffs": [...], "prec": P}
Json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const Json& j);

Json qmatrix_to_json(const QMatrix& m);
Json series_matrix_to_json(const SeriesMatrix& m);

// {"rank", "prec", "a_matrix": [[series]]}
Json module_to_json(const AbModule& e);
ModulePtr module_from_json(const Json& j);

// {"coeffs", "roots": [{"value", "mult"}], "text"}
Json polynomial_to_json(const RationalPolynomial& p);

// [{"q", "poly"}]
Json operator_to_json(const AbOperator& op);

// {"size", "entries": [[[z-coeffs]]]}
Json system_to_json(const DiffSystem& sys);
DiffSystem system_from_json(const Json& j);

Json presentation_to_json(const FrescoPresentation& p);
Json filtration_to_json(const Filtration& f);
Json higher_bernstein_to_json(const HigherBernstein& hb);
Json embedding_to_json(const Embedding& e);
Json expansion_to_json(const Expansion& x);
Json singular_report_to_json(const SingularReport& r);
Json jh_report_to_json(const JhReport& r);

}  // namespace abmod
