#include "abmod/runner.hpp"

#include <map>
#include <memory>
#include <sstream>

namespace abmod {

bool Report::ok() const {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

namespace {

struct Value {
    Binding::Kind kind;
    int prec = 0;
    ModulePtr module;
    std::optional<Fresco> fresco;
    std::optional<XiShape> xi;
    std::optional<DiffSystem> system;
    std::string failure;  // non-empty when the binding could not be built
};

const char* kind_name(Binding::Kind k) {
    switch (k) {
        case Binding::Kind::Fresco: return "fresco";
        case Binding::Kind::Xi: return "xi";
        case Binding::Kind::Module: return "module";
        case Binding::Kind::System: return "system";
    }
    return "";
}

std::string join_rationals(const std::vector<Rational>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
    return out + "]";
}

std::string qmatrix_text(const QMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        out += i ? ", [" : "[";
        for (int j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
        out += "]";
    }
    return out + "]";
}

Value build(const Binding& b, int prec) {
    Value v;
    v.kind = b.kind;
    v.prec = prec;
    switch (b.kind) {
        case Binding::Kind::Fresco: {
            FrescoPresentation p;
            for (const auto& f : b.factors) {
                FrescoFactor ff{f.lambda, std::nullopt};
                if (f.unit) ff.unit = from_polynomial(*f.unit, prec);
                p.factors.push_back(ff);
            }
            v.fresco = fresco_from_presentation(p, prec);
            v.module = v.fresco->module;
            break;
        }
        case Binding::Kind::Xi: {
            v.xi = XiShape{b.alphas, b.xi_n, b.xi_dim.value_or(1)};
            v.module = build_xi(*v.xi, prec);
            break;
        }
        case Binding::Kind::Module: {
            const int k = static_cast<int>(b.matrix.size());
            SeriesMatrix m(k, k, prec);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m(i, j) = from_polynomial(b.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], prec);
            v.module = module_from_matrix(m);
            break;
        }
        case Binding::Kind::System: {
            DiffSystem sys{static_cast<int>(b.matrix.size()), b.matrix};
            for (auto& row : sys.entries)
                for (auto& p : row)
                    if (p.empty()) p.push_back(0);
            v.system = sys;
            v.module = from_differential_system(sys, prec);
            break;
        }
    }
    return v;
}

const Fresco& as_fresco(const Value& v, const std::string& what) {
    if (!v.fresco) fail(ErrorKind::InvalidArgument, what + " needs a fresco binding");
    return *v.fresco;
}

void validation(bool good, const std::string& what, const RunOptions& opts, CommandResult& out) {
    if (good) return;
    if (opts.check) fail(ErrorKind::ValidationFailed, what);
    out.result["diagnostics"].push_back(what);
    out.text += "\n    warning: " + what;
}

void show(const Command& c, const Value& v, const RunOptions& opts, CommandResult& out) {
    const int it = opts.max_sat_iter;
    const std::string& w = c.what;
    const BernsteinMode mode = v.fresco ? BernsteinMode::Characteristic : BernsteinMode::Minimal;
    if (w == "bernstein") {
        std::vector<Rational> hints;
        if (v.fresco) hints = formula_roots(*v.fresco->presentation);
        const RationalPolynomial p = bernstein_polynomial(v.module, mode, hints, it);
        out.result = polynomial_to_json(p);
        out.result["mode"] = mode == BernsteinMode::Minimal ? "minimal" : "characteristic";
        out.text = "B(x) = " + p.to_string();
    } else if (w == "formula") {
        if (!v.fresco) fail(ErrorKind::InvalidArgument, "formula needs a fresco binding");
        const FormulaBernstein f = bernstein_via_formula(*v.fresco->presentation);
        Json bad = Json::array();
        for (const auto& r : f.non_negative_roots) bad.push_back(rational_to_json(r));
        out.result = Json{{"poly", polynomial_to_json(f.poly)}, {"negative_roots", f.geometric()}, {"non_negative_roots", bad}};
        out.text = "product formula: " + f.poly.to_string();
        if (!f.geometric()) out.text += " (roots not all negative: " + join_rationals(f.non_negative_roots) + ")";
    } else if (w == "geometric") {
        const GeometricCertificate g = is_geometric(v.module, mode, it);
        out.result = Json{{"geometric", g.geometric}, {"bernstein", polynomial_to_json(g.bernstein)}, {"reason", g.reason}};
        out.text = std::string(g.geometric ? "geometric" : "not geometric: " + g.reason) + "; B(x) = " + g.bernstein.to_string();
    } else if (w == "simple_pole") {
        const bool sp = v.module->is_simple_pole();
        out.result = Json{{"simple_pole", sp}};
        out.text = sp ? "simple pole" : "no simple pole";
    } else if (w == "saturate") {
        const Saturation s = saturate(v.module, it);
        const QMatrix r = residue_matrix(*s.module);
        out.result = Json{{"steps", s.steps}, {"shift", s.shift}, {"residue", qmatrix_to_json(r)}, {"module", module_to_json(*s.module)}};
        out.text = "saturated after " + std::to_string(s.steps) + " step(s), rank " + std::to_string(s.module->rank()) +
                   ", prec " + std::to_string(s.module->prec()) + "\n    residue " + qmatrix_text(r);
    } else if (w == "filtration") {
        const Filtration f = semisimple_filtration(v.module, it);
        out.result = filtration_to_json(f);
        std::string ranks;
        for (const auto& s : f.steps) ranks += " " + std::to_string(s.rank());
        out.text = "nilpotent order " + std::to_string(f.nilpotent_order) + ", ranks" + ranks;
        for (const auto& d : f.diagnostics) validation(false, d, opts, out);
    } else if (w == "primitive") {
        std::vector<Rational> classes;
        for (const auto& a : c.args) classes.push_back(parse_rational(a));
        const PrimitiveSplit sp = primitive_split(v.module, classes, it);
        const int part_rank = sp.e_part.module ? sp.e_part.module->rank() : 0;
        const RationalPolynomial bp = sp.e_part.module ? bernstein_polynomial(sp.e_part.module, mode, {}, it) : RationalPolynomial();
        const RationalPolynomial bn = sp.e_not.rank() ? bernstein_polynomial(lattice_as_module(sp.e_not), mode, {}, it) : RationalPolynomial();
        Json cl = Json::array();
        for (const auto& a : sp.classes) cl.push_back(rational_to_json(a));
        out.result = Json{{"classes", cl}, {"part_rank", part_rank}, {"part_bernstein", polynomial_to_json(bp)},
                          {"not_rank", sp.e_not.rank()}, {"not_bernstein", polynomial_to_json(bn)}};
        out.text = "part " + join_rationals(sp.classes) + ": rank " + std::to_string(part_rank) + ", B = " + bp.to_string() +
                   "; rest: rank " + std::to_string(sp.e_not.rank()) + ", B = " + bn.to_string();
    } else if (w == "higher_bernstein") {
        const HigherBernstein hb = higher_bernstein(as_fresco(v, "higher_bernstein"), it);
        out.result = higher_bernstein_to_json(hb);
        std::ostringstream t;
        t << "B_F = " << hb.bernstein.to_string();
        for (const auto& cb : hb.classes) {
            t << "\n    class " << to_string(cb.alpha) << ", nilpotent order " << cb.nilpotent_order << ":";
            for (const auto& l : cb.levels) t << " B_" << l.j << " = " << l.poly.to_string() << " (delta " << l.delta << ");";
        }
        for (std::size_t j = 0; j < hb.levels.size(); ++j) t << "\n    B_" << j + 1 << " = " << hb.levels[j].to_string();
        t << "\n    product " << (hb.product_check ? "ok" : "FAILS") << ", simple roots " << (hb.simple_roots_check ? "ok" : "FAILS")
          << ", degrees " << (hb.degrees_check ? "ok" : "FAIL");
        out.text = t.str();
        for (const auto& d : hb.diagnostics) validation(false, d, opts, out);
    } else if (w == "jh") {
        if (!v.fresco) fail(ErrorKind::InvalidArgument, "jh needs a fresco binding");
        const ModuleElement x = v.fresco->rank() > 1 ? right_factor_element(*v.fresco) : v.fresco->generator;
        const JhSplit sp = jh_split(*v.fresco, x, it);
        out.result = jh_report_to_json(sp.report);
        out.result["sub_rank"] = sp.sub.rank();
        out.result["quot_rank"] = sp.quot ? sp.quot->rank() : 0;
        const auto& r = sp.report;
        out.text = "sub rank " + std::to_string(sp.sub.rank()) + ", B_sub = " + r.b_sub.to_string() + "; quot rank " +
                   std::to_string(r.q) + ", B_quot = " + r.b_quot.to_string() + "; B_F = " + r.b_total.to_string() +
                   "\n    B_sub(x - q) B_quot(x) = B_F: " + (r.shifted_minus_holds ? "holds" : "fails") +
                   "\n    B_sub(x + q) B_quot(x) = B_F: " + (r.shifted_plus_holds ? "holds" : "fails");
        validation(r.shifted_minus_holds, "B_sub(x - q) B_quot(x) differs from B_F", opts, out);
        if (r.shifted_plus_holds && !r.shifted_minus_holds) out.result["diagnostics"].push_back("only the x + q variant holds");
    } else if (w == "embed") {
        const Embedding e = embed_into_xi(v.module, opts.seed, it);
        out.result = embedding_to_json(e);
        out.text = "into Xi^(" + std::to_string(e.shape.n) + ") (x) V, alphas " + join_rationals(e.shape.alphas) + ", dim V " +
                   std::to_string(e.shape.dim_v) + (e.equivariant ? ", equivariant" : ", NOT equivariant") +
                   (e.injective ? ", injective" : ", NOT injective");
    } else if (w == "expansion") {
        const int order = c.args.empty() ? 3 : std::stoi(c.args[0]);
        XiShape shape;
        SeriesMatrix images;
        if (v.xi) {
            shape = *v.xi;
            images = SeriesMatrix::identity(v.module->rank(), v.module->prec());
        } else {
            const Embedding e = embed_into_xi(v.module, opts.seed, it);
            shape = e.shape;
            images = e.map;
        }
        Json elems = Json::array();
        std::ostringstream t;
        for (int j = 0; j < images.cols(); ++j) {
            const Expansion x = realize_expansion(shape, images.column(j), order);
            const std::string s = expansion_to_string(x, shape.dim_v);
            elems.push_back(Json{{"basis", j}, {"text", s}, {"terms", expansion_to_json(x)}});
            t << (j ? "\n    " : "") << "e" << j << " -> " << s;
        }
        out.result = Json{{"order", order}, {"via_embedding", !v.xi}, {"elements", elems}};
        out.text = t.str();
    } else if (w == "report") {
        const SingularReport r = singular_term_report(as_fresco(v, "report"), it);
        out.result = singular_report_to_json(r);
        std::ostringstream t;
        t << "algebraic prediction, no integral evaluated";
        for (const auto& cl : r.classes) {
            t << "\n    class " << to_string(cl.alpha) << ": d = " << cl.nilpotent_order << ", B_d roots " << join_rationals(cl.roots)
              << ", term " << cl.term << " s^m for m in [";
            for (std::size_t i = 0; i < cl.m.size(); ++i) t << (i ? ", " : "") << cl.m[i];
            t << "]";
        }
        out.text = t.str();
        for (const auto& d : r.diagnostics) validation(false, d, opts, out);
    } else {
        fail(ErrorKind::InvalidArgument, "unknown show target " + w);
    }
}

}  // namespace

Report run_session(const Session& s, const RunOptions& opts) {
    Report rep;
    std::map<std::string, Value> env;
    int precision = opts.precision;
    for (const auto& c : s.commands) {
        CommandResult out;
        out.line = c.line;
        out.command = render_command(c);
        try {
            switch (c.kind) {
                case Command::Kind::Precision:
                    precision = c.precision;
                    out.result = Json{{"precision", precision}};
                    out.text = "precision " + std::to_string(precision);
                    break;
                case Command::Kind::Let: {
                    if (env.count(c.binding.name)) fail(ErrorKind::DuplicateName, "name '" + c.binding.name + "' is already bound");
                    const int prec = c.binding.precision.value_or(precision);
                    Value v;
                    try {
                        v = build(c.binding, prec);
                    } catch (const Error& e) {
                        v.kind = c.binding.kind;
                        v.failure = e.what();
                        env[c.binding.name] = v;
                        throw;
                    }
                    env[c.binding.name] = v;
                    out.result = Json{{"name", c.binding.name}, {"kind", kind_name(v.kind)}, {"rank", v.module->rank()}, {"prec", v.module->prec()}};
                    out.text = c.binding.name + ": " + kind_name(v.kind) + " of rank " + std::to_string(v.module->rank()) + ", prec " +
                               std::to_string(v.module->prec());
                    break;
                }
                case Command::Kind::Show: {
                    const auto it = env.find(c.name);
                    if (it == env.end()) fail(ErrorKind::UnknownName, "name '" + c.name + "' is not bound");
                    if (!it->second.failure.empty()) fail(ErrorKind::InvalidArgument, "binding '" + c.name + "' failed: " + it->second.failure);
                    show(c, it->second, opts, out);
                    break;
                }
            }
        } catch (const Error& e) {
            out.ok = false;
            out.error_kind = e.kind();
            out.error = e.what();
            out.result = Json();
            out.text.clear();
        }
        rep.results.push_back(std::move(out));
    }
    return rep;
}

Report run_text(const std::string& text, const RunOptions& opts) {
    std::vector<SessionError> errors;
    const Session s = parse_session(text, errors);
    Report ran = run_session(s, opts);
    Report rep;
    std::size_t ei = 0;
    for (auto& r : ran.results) {
        while (ei < errors.size() && errors[ei].line < r.line) {
            const auto& e = errors[ei++];
            rep.results.push_back({e.line, e.column, e.text, false, Json(), "", e.kind,
                                   std::string(error_kind_name(e.kind)) + ": " + e.message});
        }
        rep.results.push_back(std::move(r));
    }
    while (ei < errors.size()) {
        const auto& e = errors[ei++];
        rep.results.push_back({e.line, e.column, e.text, false, Json(), "", e.kind, std::string(error_kind_name(e.kind)) + ": " + e.message});
    }
    return rep;
}

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    for (const auto& c : r.results) {
        out << "[" << c.line;
        if (c.column > 0) out << ":" << c.column;
        out << "] " << c.command << "\n";
        if (c.ok) {
            out << "    " << c.text << "\n";
        } else {
            out << "    error " << c.error << "\n";
        }
    }
    return out.str();
}

Json report_to_json(const Report& r) {
    Json results = Json::array();
    for (const auto& c : r.results) {
        Json e{{"line", c.line}, {"command", c.command}, {"ok", c.ok}};
        if (c.column > 0) e["column"] = c.column;
        if (c.ok) {
            e["result"] = c.result;
        } else {
            e["error"] = Json{{"kind", error_kind_name(c.error_kind)}, {"message", c.error}};
        }
        results.push_back(e);
    }
    return Json{{"ok", r.ok()}, {"results", results}};
}

}  // namespace abmod
