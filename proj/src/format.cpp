#include "flagcalc/format.hpp"

#include <sstream>

namespace flagcalc {

namespace {

constexpr long long kJsonIntMax = 9007199254740992LL;  // 2^53

std::string coeff_str(const Coeff& c) { return c.str(); }

bool coeff_fits_json(const Coeff& c) { return c >= -kJsonIntMax && c <= kJsonIntMax; }

std::string var_name_text(VarStyle style, int i) {
    return (style == VarStyle::alpha ? "a" : "t") + std::to_string(i);
}

std::string var_name_latex(VarStyle style, int i) {
    if (style == VarStyle::alpha) return "\\alpha_" + std::to_string(i);
    return "t_" + std::to_string(i);
}

// Renders the term list of a polynomial; `latex` controls variable names and
// whether explicit '*' separators are used.
std::string render_poly(const Polynomial& p, VarStyle style, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        bool constant_term = exponent_degree(e) == 0;
        bool print_coeff = constant_term || mag != 1;
        if (print_coeff) out << coeff_str(mag);
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!latex && (print_coeff || !first_var)) out << "*";
            out << (latex ? var_name_latex(style, static_cast<int>(i) + 1)
                          : var_name_text(style, static_cast<int>(i) + 1));
            if (e[i] > 1) out << (latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]));
            first_var = false;
        }
    }
    return out.str();
}

std::string render_tpoly(const TPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        Coeff c = p.coeff(k);
        if (c == 0) continue;
        Coeff mag = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        first = false;
        if (k == 0 || mag != 1) out << coeff_str(mag);
        if (k > 0) {
            out << "t";
            if (k > 1) out << (latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k));
        }
    }
    return out.str();
}

nlohmann::json coeff_to_json(const Coeff& c) {
    if (coeff_fits_json(c)) return static_cast<long long>(c);
    return coeff_str(c);
}

Coeff coeff_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Coeff(j.get<std::string>());
    return Coeff(j.get<long long>());
}

}  // namespace

std::string to_text(const Polynomial& p, VarStyle style) { return render_poly(p, style, false); }
std::string to_latex(const Polynomial& p, VarStyle style) { return render_poly(p, style, true); }
std::string to_text(const TPoly& p) { return render_tpoly(p, false); }
std::string to_latex(const TPoly& p) { return render_tpoly(p, true); }

std::string word_text(const Word& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out << ",";
        out << w[i];
    }
    return out.str();
}

Word parse_word(const std::string& text) {
    Word w;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("parse_word: bad letter '" + token + "'");
        w.push_back(v);
    }
    return w;
}

std::string word_latex(const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream out;
    for (int i : w) out << "s_" << i;
    return out.str();
}

nlohmann::json poly_to_json(const Polynomial& p, VarStyle style) {
    nlohmann::json vars = nlohmann::json::array();
    for (int i = 1; i <= p.nvars(); ++i) vars.push_back(var_name_text(style, i));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::json term;
        term["coeff"] = coeff_to_json(c);
        term["exp"] = e;
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

Polynomial poly_from_json(const nlohmann::json& j) {
    const auto& vars = j.at("vars");
    Polynomial p(static_cast<int>(vars.size()));
    for (const auto& term : j.at("terms")) {
        Exponent e = term.at("exp").get<Exponent>();
        p.add_term(e, coeff_from_json(term.at("coeff")));
    }
    return p;
}

nlohmann::json tpoly_to_json(const TPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (int k = p.degree(); k >= 0; --k) {
        if (p.coeff(k) == 0) continue;
        nlohmann::json term;
        term["coeff"] = coeff_to_json(p.coeff(k));
        term["exp"] = std::vector<int>{k};
        terms.push_back(std::move(term));
    }
    return nlohmann::json{{"vars", {"t"}}, {"terms", std::move(terms)}};
}

TPoly tpoly_from_json(const nlohmann::json& j) {
    TPoly p;
    for (const auto& term : j.at("terms")) {
        auto e = term.at("exp").get<std::vector<int>>();
        if (e.size() != 1) throw std::invalid_argument("tpoly_from_json: univariate expected");
        p += TPoly::monomial(coeff_from_json(term.at("coeff")), e[0]);
    }
    return p;
}

nlohmann::json word_to_json(const Word& w) { return nlohmann::json(w); }

Word word_from_json(const nlohmann::json& j) { return j.get<Word>(); }

nlohmann::json cartan_to_json(const CartanSpec& spec) {
    if (spec.family != 0)
        return nlohmann::json{{"family", std::string(1, spec.family)}, {"rank", spec.rank}};
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < spec.matrix.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j2 = 0; j2 < spec.matrix.cols(); ++j2)
            row.push_back(static_cast<long long>(spec.matrix(i, j2)));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"matrix", std::move(rows)}};
}

CartanSpec cartan_from_json(const nlohmann::json& j) {
    if (j.contains("family")) {
        std::string fam = j.at("family").get<std::string>();
        if (fam.size() != 1) throw std::invalid_argument("cartan_from_json: bad family");
        return CartanSpec::named(fam[0], j.at("rank").get<int>());
    }
    const auto& rows = j.at("matrix");
    int n = static_cast<int>(rows.size());
    IMat m(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("cartan_from_json: matrix not square");
        for (int c = 0; c < n; ++c) m(i, c) = rows[i][c].get<long long>();
    }
    return CartanSpec::from_matrix(m);
}

nlohmann::json class_table_to_json(const WeylGroup& g, const GKMClass& cls) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        nlohmann::json entry;
        entry["element"] = word_to_json(g.canonical_word(idx));
        entry["value"] = poly_to_json(cls.values[idx], VarStyle::alpha);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<std::pair<Word, Polynomial>> class_table_from_json(const nlohmann::json& j) {
    std::vector<std::pair<Word, Polynomial>> out;
    for (const auto& entry : j)
        out.push_back({word_from_json(entry.at("element")), poly_from_json(entry.at("value"))});
    return out;
}

std::string class_table_latex(const WeylGroup& g, const Word& v_word, const GKMClass& cls) {
    std::ostringstream out;
    out << "% class " << word_latex(v_word) << "\n";
    out << "\\begin{array}{c|c}\n";
    out << "w & \\sigma_{" << word_latex(v_word) << "}(w) \\\\\n\\hline\n";
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        out << word_latex(g.canonical_word(idx)) << " & "
            << to_latex(cls.values[idx], VarStyle::alpha) << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

std::string diagram_ascii(const MarkedDiagram& d) {
    std::ostringstream out;
    for (int r = 1; r <= d.shape.rows(); ++r) {
        for (int c = 1; c <= d.shape.part(r); ++c) out << (d.marks.count({r, c}) ? '*' : '.');
        out << "\n";
    }
    return out.str();
}

std::string diagram_latex(const MarkedDiagram& d) {
    std::ostringstream out;
    out << "\\begin{array}{" << std::string(d.shape.parts.empty() ? 1 : d.shape.parts[0], 'c')
        << "}\n";
    for (int r = 1; r <= d.shape.rows(); ++r) {
        for (int c = 1; c <= d.shape.part(r); ++c) {
            if (c > 1) out << " & ";
            out << (d.marks.count({r, c}) ? "\\ast" : "\\cdot");
        }
        out << " \\\\\n";
    }
    out << "\\end{array}\n";
    return out.str();
}

std::string partition_text(const Partition& p) {
    std::ostringstream out;
    for (int r = 1; r <= p.rows(); ++r) {
        if (r > 1) out << ",";
        out << p.part(r);
    }
    return out.str();
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        std::size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos != token.size())
            throw std::invalid_argument("parse_partition: bad part '" + token + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

}  // namespace flagcalc
