#include "abmod/json_io.hpp"

#include "abmod/errors.hpp"

namespace abmod {

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail(ErrorKind::ParseError, "rational must be a \"p/q\" string or an integer");
}

Json series_to_json(const TruncSeries& s) {
    Json coeffs = Json::array();
    int last = s.prec() - 1;
    while (last >= 0 && s[last] == 0) --last;
    for (int i = 0; i <= last; ++i) coeffs.push_back(rational_to_json(s[i]));
    return Json{{"coeffs", coeffs}, {"prec", s.prec()}};
}

TruncSeries series_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    return from_polynomial(c, j.at("prec").get<int>());
}

Json qmatrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json series_matrix_to_json(const SeriesMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(series_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json module_to_json(const AbModule& e) {
    return Json{{"rank", e.rank()}, {"prec", e.prec()}, {"a_matrix", series_matrix_to_json(e.a_matrix())}};
}

ModulePtr module_from_json(const Json& j) {
    const auto& rows = j.at("a_matrix");
    const int k = static_cast<int>(rows.size());
    if (k == 0) fail(ErrorKind::InvalidArgument, "empty a_matrix");
    const int prec = j.contains("prec") ? j.at("prec").get<int>() : kDefaultPrecision;
    SeriesMatrix m(k, static_cast<int>(rows[0].size()), prec);
    for (int r = 0; r < k; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != m.cols()) fail(ErrorKind::NonSquare, "ragged a_matrix");
        for (int c = 0; c < m.cols(); ++c) m(r, c) = series_from_json(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]).truncated(prec);
    }
    return module_from_matrix(m);
}

Json polynomial_to_json(const RationalPolynomial& p) {
    Json coeffs = Json::array(), roots = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
    for (const auto& r : p.roots()) roots.push_back(Json{{"value", rational_to_json(r.value)}, {"mult", r.mult}});
    Json out{{"coeffs", coeffs}, {"roots", roots}, {"text", p.to_string()}};
    if (!p.splits()) {
        Json u = Json::array();
        for (const auto& c : p.unsplit()) u.push_back(rational_to_json(c));
        out["unsplit"] = u;
    }
    return out;
}

Json operator_to_json(const AbOperator& op) {
    Json out = Json::array();
    for (int q = 0; q < op.prec(); ++q) {
        const auto& poly = op.poly(q);
        bool any = false;
        for (const auto& c : poly) any = any || c != 0;
        if (!any) continue;
        Json cs = Json::array();
        for (const auto& c : poly) cs.push_back(rational_to_json(c));
        out.push_back(Json{{"q", q}, {"poly", cs}});
    }
    return out;
}

Json system_to_json(const DiffSystem& sys) {
    Json rows = Json::array();
    for (const auto& row : sys.entries) {
        Json r = Json::array();
        for (const auto& poly : row) {
            Json p = Json::array();
            for (const auto& c : poly) p.push_back(rational_to_json(c));
            r.push_back(p);
        }
        rows.push_back(r);
    }
    return Json{{"size", sys.size}, {"entries", rows}};
}

DiffSystem system_from_json(const Json& j) {
    DiffSystem sys;
    sys.size = j.at("size").get<int>();
    for (const auto& row : j.at("entries")) {
        std::vector<std::vector<Rational>> r;
        for (const auto& poly : row) {
            std::vector<Rational> p;
            for (const auto& c : poly) p.push_back(rational_from_json(c));
            r.push_back(p);
        }
        sys.entries.push_back(r);
    }
    return sys;
}

Json presentation_to_json(const FrescoPresentation& p) {
    Json fs = Json::array();
    for (const auto& f : p.factors) {
        Json e{{"lambda", rational_to_json(f.lambda)}};
        if (f.unit) e["unit"] = series_to_json(*f.unit);
        fs.push_back(e);
    }
    return Json{{"factors", fs}};
}

Json filtration_to_json(const Filtration& f) {
    Json steps = Json::array();
    for (std::size_t j = 0; j < f.steps.size(); ++j) {
        Json basis = Json::array();
        for (const auto& v : f.steps[j].basis()) {
            Json col = Json::array();
            for (const auto& s : v) col.push_back(series_to_json(s));
            basis.push_back(col);
        }
        steps.push_back(Json{{"j", j + 1}, {"rank", f.steps[j].rank()}, {"basis", basis}});
    }
    return Json{{"nilpotent_order", f.nilpotent_order}, {"steps", steps}, {"diagnostics", f.diagnostics}};
}

Json higher_bernstein_to_json(const HigherBernstein& hb) {
    Json classes = Json::array();
    for (const auto& c : hb.classes) {
        Json levels = Json::array();
        for (const auto& l : c.levels) {
            const Json pj = polynomial_to_json(l.poly);
            levels.push_back(Json{{"j", l.j}, {"delta", l.delta}, {"tilde", l.tilde.to_string()}, {"poly", pj["text"]}, {"roots", pj["roots"]}});
        }
        classes.push_back(Json{{"alpha", rational_to_json(c.alpha)}, {"rank", c.rank}, {"nilpotent_order", c.nilpotent_order}, {"levels", levels}});
    }
    Json assembled = Json::array();
    for (std::size_t j = 0; j < hb.levels.size(); ++j) assembled.push_back(Json{{"j", j + 1}, {"poly", hb.levels[j].to_string()}});
    return Json{{"bernstein", hb.bernstein.to_string()},
                {"classes", classes},
                {"levels", assembled},
                {"product_check", hb.product_check},
                {"simple_roots_check", hb.simple_roots_check},
                {"degrees_check", hb.degrees_check},
                {"diagnostics", hb.diagnostics}};
}

Json embedding_to_json(const Embedding& e) {
    Json alphas = Json::array();
    for (const auto& a : e.shape.alphas) alphas.push_back(rational_to_json(a));
    return Json{{"alphas", alphas},
                {"N", e.shape.n},
                {"dim_v", e.shape.dim_v},
                {"target_rank", e.shape.rank()},
                {"map", series_matrix_to_json(e.map)},
                {"equivariant", e.equivariant},
                {"injective", e.injective}};
}

Json expansion_to_json(const Expansion& x) {
    Json terms = Json::array();
    for (const auto& t : x)
        terms.push_back(Json{{"alpha", rational_to_json(t.alpha)}, {"m", t.m}, {"j", t.j}, {"coeff", rational_to_json(t.coeff)}, {"component", t.component}});
    return terms;
}

Json singular_report_to_json(const SingularReport& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json roots = Json::array();
        for (const auto& v : c.roots) roots.push_back(rational_to_json(v));
        classes.push_back(Json{{"alpha", rational_to_json(c.alpha)},
                               {"nilpotent_order", c.nilpotent_order},
                               {"roots", roots},
                               {"m", c.m},
                               {"log_power", c.log_power},
                               {"abs_s_exponent", rational_to_json(c.exponent)},
                               {"term", c.term}});
    }
    return Json{{"classes", classes}, {"kind", "algebraic prediction"}, {"diagnostics", r.diagnostics}};
}

Json jh_report_to_json(const JhReport& r) {
    return Json{{"b_sub", r.b_sub.to_string()},
                {"b_quot", r.b_quot.to_string()},
                {"b_total", r.b_total.to_string()},
                {"q", r.q},
                {"shift_minus_holds", r.shifted_minus_holds},
                {"shift_plus_holds", r.shifted_plus_holds}};
}

}  // namespace abmod
