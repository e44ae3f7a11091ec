#include "schurzeta/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace schurzeta {

Json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return rational_str(s.rational());
    const Complex c = s.to_complex();
    return Json::array({c.real(), c.imag()});
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(parse_rational_string(j.get<std::string>()));
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_number_float()) return Scalar(j.get<double>());
    if (j.is_array() && j.size() == 2)
        return Scalar(Complex(j[0].get<double>(), j[1].get<double>()));
    throw std::invalid_argument("unrecognized scalar encoding: " + j.dump());
}

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array of parts");
    return Partition(j.get<std::vector<int>>());
}

Json diagram_to_json(const SkewDiagram& d) {
    Json rows = Json::array();
    for (const RowSpan& r : d.rows()) rows.push_back({{"start", r.start}, {"end", r.end}});
    return Json{{"rows", rows}};
}

SkewDiagram diagram_from_json(const Json& j) {
    if (j.is_array()) return SkewDiagram::of_partition(partition_from_json(j));
    if (j.is_object()) {
        if (j.contains("rows")) {
            std::vector<RowSpan> spans;
            for (const auto& r : j.at("rows"))
                spans.push_back({r.at("start").get<int>(), r.at("end").get<int>()});
            return SkewDiagram::from_rows(std::move(spans));
        }
        if (j.contains("partition"))
            return SkewDiagram::of_partition(partition_from_json(j.at("partition")));
        if (j.contains("outer"))
            return SkewDiagram::skew(partition_from_json(j.at("outer")),
                                     j.contains("inner") ? partition_from_json(j.at("inner"))
                                                         : Partition());
    }
    throw std::invalid_argument("unrecognized diagram encoding: " + j.dump());
}

Json expr_to_json(const ExponentExpr& e) {
    switch (e.kind()) {
        case ExponentExpr::Kind::Constant:
            return Json{{"const", scalar_to_json(e.constant_value())}};
        case ExponentExpr::Kind::Content:
            return Json{{"z", e.content_index()}};
        case ExponentExpr::Kind::Symbol:
            return Json{{"sym", e.symbol_name()}};
    }
    throw std::logic_error("unreachable");
}

ExponentExpr expr_from_json(const Json& j) {
    if (j.is_object()) {
        if (j.contains("z")) return ExponentExpr::content(j.at("z").get<int>());
        if (j.contains("sym")) return ExponentExpr::symbol(j.at("sym").get<std::string>());
        if (j.contains("const")) return ExponentExpr::constant(scalar_from_json(j.at("const")));
        throw std::invalid_argument("unrecognized exponent encoding: " + j.dump());
    }
    return ExponentExpr::constant(scalar_from_json(j));
}

Json tableau_to_json(const ExponentTableau& t) {
    Json out = diagram_to_json(t.shape());
    Json entries = Json::array();
    for (int r = 1; r <= t.shape().row_count(); ++r) {
        Json row = Json::array();
        for (int c = t.shape().row(r).start; c <= t.shape().row(r).end; ++c)
            row.push_back(expr_to_json(t.at(r, c)));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

ExponentTableau tableau_from_json(const Json& j) {
    if (j.is_array()) return content_fill(diagram_from_json(j));
    const SkewDiagram shape = diagram_from_json(j);
    if (!j.is_object() || !j.contains("entries")) return content_fill(shape);
    const Json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != shape.row_count())
        throw std::invalid_argument("entry rows do not match the shape");
    std::vector<ExponentExpr> flat;
    flat.reserve(static_cast<std::size_t>(shape.cell_count()));
    for (int r = 1; r <= shape.row_count(); ++r) {
        const Json& row = entries[static_cast<std::size_t>(r - 1)];
        if (static_cast<int>(row.size()) != shape.row(r).length())
            throw std::invalid_argument("entry row length does not match the shape");
        for (const auto& cell : row) flat.push_back(expr_from_json(cell));
    }
    return ExponentTableau(shape, std::move(flat));
}

Json binding_to_json(const Binding& b) {
    Json z = Json::object(), sym = Json::object();
    for (const auto& [k, v] : b.contents()) z[std::to_string(k)] = scalar_to_json(v);
    for (const auto& [name, v] : b.symbols()) sym[name] = scalar_to_json(v);
    return Json{{"z", z}, {"sym", sym}};
}

Binding binding_from_json(const Json& j) {
    Binding b;
    if (!j.is_object()) throw std::invalid_argument("binding must be an object");
    if (j.contains("z"))
        for (const auto& [key, value] : j.at("z").items())
            b.set_content(std::stoi(key), scalar_from_json(value));
    if (j.contains("sym"))
        for (const auto& [key, value] : j.at("sym").items())
            b.set_symbol(key, scalar_from_json(value));
    return b;
}

Json filling_to_json(const Filling& f) {
    Json out = diagram_to_json(f.shape());
    Json entries = Json::array();
    for (int r = 1; r <= f.shape().row_count(); ++r) {
        Json row = Json::array();
        for (int c = f.shape().row(r).start; c <= f.shape().row(r).end; ++c)
            row.push_back(f.at(r, c));
        entries.push_back(std::move(row));
    }
    out["entries"] = std::move(entries);
    return out;
}

Json report_to_json(const VerificationReport& r, const std::string& invocation) {
    Json dets = Json::array();
    for (std::size_t d = 0; d < r.determinant_values.size(); ++d) {
        Json entries = Json::array();
        const int n = r.det_sizes[d];
        for (std::size_t i = 0; i < r.entry_values[d].size(); ++i) {
            entries.push_back({{"row", static_cast<int>(i) / n + 1},
                               {"col", static_cast<int>(i) % n + 1},
                               {"value", scalar_to_json(r.entry_values[d][i])},
                               {"fillings", r.entry_fillings[d][i]}});
        }
        dets.push_back({{"label", r.det_labels[d]},
                        {"n", n},
                        {"value", scalar_to_json(r.determinant_values[d])},
                        {"entries", std::move(entries)}});
    }
    Json out{{"identity", r.identity},
             {"bound", r.bound},
             {"mode", r.mode == EvalMode::Exact ? "exact" : "float"},
             {"tolerance", r.tolerance},
             {"direct", {{"value", scalar_to_json(r.direct)}, {"fillings", r.direct_fillings}}},
             {"determinants", std::move(dets)},
             {"residual", scalar_to_json(r.residual)},
             {"pass", r.pass},
             {"seconds", r.seconds}};
    if (!invocation.empty()) out["invocation"] = invocation;
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_scalar(const Scalar& s) {
    return csv_escape(s.str());
}

}  // namespace

std::string report_to_csv(const VerificationReport& r, const std::string& invocation) {
    std::ostringstream os;
    os << "record,identity,bound,mode,det,label,row,col,value,fillings,residual,pass,seconds,"
          "invocation\n";
    const std::string mode = r.mode == EvalMode::Exact ? "exact" : "float";
    for (std::size_t d = 0; d < r.entry_values.size(); ++d) {
        const int n = r.det_sizes[d];
        for (std::size_t i = 0; i < r.entry_values[d].size(); ++i) {
            os << "entry," << csv_escape(r.identity) << ',' << r.bound << ',' << mode << ',' << d
               << ',' << csv_escape(r.det_labels[d]) << ',' << static_cast<int>(i) / n + 1 << ','
               << static_cast<int>(i) % n + 1 << ',' << csv_scalar(r.entry_values[d][i]) << ','
               << r.entry_fillings[d][i] << ",,,,\n";
        }
        os << "determinant," << csv_escape(r.identity) << ',' << r.bound << ',' << mode << ','
           << d << ',' << csv_escape(r.det_labels[d]) << ",,," << csv_scalar(r.determinant_values[d])
           << ",,,,,\n";
    }
    os << "summary," << csv_escape(r.identity) << ',' << r.bound << ',' << mode << ",,direct,,,"
       << csv_scalar(r.direct) << ',' << r.direct_fillings << ',' << csv_scalar(r.residual) << ','
       << (r.pass ? "true" : "false") << ',' << r.seconds << ',' << csv_escape(invocation) << '\n';
    return os.str();
}

Json qsym_to_json(const QSymElement& q) {
    Json obj = Json::object();
    for (const auto& [c, k] : q.terms()) obj[composition_str(c)] = k;
    return obj;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

}  // namespace schurzeta
