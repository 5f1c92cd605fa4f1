#include "symrep/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace symrep {

using nlohmann::json;

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string float_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

json to_json(const Partition& la) { return json(la.parts()); }

json to_json(const StandardTableau& t) {
    json rows = json::array();
    const Partition& outer = t.shape().outer();
    const Partition& inner = t.shape().inner();
    for (int r = 1; r <= outer.rows(); ++r) {
        json row = json::array();
        for (int c = inner.row(r) + 1; c <= outer.row(r); ++c)
            row.push_back(t.entry_at({r, c}));
        rows.push_back(row);
    }
    return json{{"shape", to_json(outer)}, {"inner", to_json(inner)}, {"rows", rows}};
}

json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(rational_str(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const FloatMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(float_str(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const GradedPolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"coeff", rational_str(c)}, {"exps", e}});
    return terms;
}

json to_json(const FockVector& v) {
    json terms = json::array();
    for (const auto& [la, c] : v.terms)
        terms.push_back(json{{"partition", to_json(la)}, {"coeff", rational_str(c)}});
    return terms;
}

namespace {
std::string cycle_type_label(const Partition& rho) {
    std::string s;
    for (size_t i = 0; i < rho.parts().size(); ++i) {
        if (i) s += '+';
        s += std::to_string(rho.parts()[i]);
    }
    return s.empty() ? "0" : s;
}
} // namespace

json to_json(const CharacterTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        json vals = json::array();
        for (const Integer& v : t.entries[i]) vals.push_back(v.str());
        rows.push_back(json{{"lambda", to_json(t.row_labels[i])}, {"values", vals}});
    }
    json classes = json::array();
    for (std::size_t j = 0; j < t.col_labels.size(); ++j)
        classes.push_back(json{{"rho", to_json(t.col_labels[j])},
                               {"size", t.class_sizes[j].str()}});
    return json{{"n", t.n}, {"classes", classes}, {"rows", rows}};
}

std::string character_table_csv(const CharacterTable& t) {
    std::ostringstream os;
    os << "lambda";
    for (const Partition& rho : t.col_labels) os << ",\"" << cycle_type_label(rho) << '"';
    os << '\n';
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        os << '"' << cycle_type_label(t.row_labels[i]) << '"';
        for (const Integer& v : t.entries[i]) os << ',' << v.str();
        os << '\n';
    }
    return os.str();
}

} // namespace symrep
