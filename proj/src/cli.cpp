#include "flagcalc/cli.hpp"

#include "flagcalc/billey.hpp"
#include "flagcalc/format.hpp"
#include "flagcalc/grassmannian.hpp"
#include "flagcalc/pinball.hpp"
#include "flagcalc/subvariety.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace flagcalc {

namespace {

using nlohmann::json;

struct GroupOpts {
    std::string family;
    int rank = 0;
    std::string cartan;  // inline JSON or a file path
    std::size_t max_group_size = 50000;

    CartanSpec resolve() const {
        if (!cartan.empty()) {
            std::string text = cartan;
            if (!text.empty() && text[0] != '{') {
                std::ifstream in(cartan);
                if (!in) throw std::invalid_argument("cannot open cartan file: " + cartan);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            return cartan_from_json(json::parse(text));
        }
        if (family.empty()) throw std::invalid_argument("a group is required: --type/--rank or --cartan");
        if (family.size() != 1) throw std::invalid_argument("bad family: " + family);
        return CartanSpec::named(family[0], rank);
    }
};

void add_group_options(CLI::App* cmd, GroupOpts& opts, bool required = true) {
    auto* type = cmd->add_option("--type", opts.family, "named family (A,B,C,D,F,G)");
    auto* rank = cmd->add_option("--rank", opts.rank, "rank of the named family");
    auto* cartan =
        cmd->add_option("--cartan", opts.cartan, "Cartan matrix as inline JSON or a JSON file path");
    cmd->add_option("--max-group-size", opts.max_group_size, "group enumeration cap");
    type->needs(rank);
    cartan->excludes(type);
    if (required) {
        // enforced at resolve() so --cartan alone also works
    }
}

struct OutputOpts {
    std::string format = "text";
    std::string out_file;
};

void add_output_options(CLI::App* cmd, OutputOpts& opts) {
    cmd->add_option("--format", opts.format, "output format: text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    cmd->add_option("--out", opts.out_file, "write output to a file instead of stdout");
}

void deliver(const OutputOpts& opts, std::ostream& out, const std::string& payload) {
    if (opts.out_file.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(opts.out_file);
    if (!f) throw std::invalid_argument("cannot open output file: " + opts.out_file);
    f << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<int> parse_index_list(const std::string& text) {
    Word w = parse_word(text);
    return w;
}

Polynomial root_form(const RootSystem& rs, const IVec& alpha) { return root_polynomial(rs, alpha); }

json root_coords_json(const IVec& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(static_cast<long long>(v(i)));
    return a;
}

// ---- subcommand payload builders ----------------------------------------

std::string run_roots(const GroupOpts& gopts, const OutputOpts& oopts) {
    RootSystem rs = build_root_system(gopts.resolve());
    if (oopts.format == "json") {
        json roots = json::array();
        for (const IVec& alpha : rs.positive_roots()) roots.push_back(root_coords_json(alpha));
        return dump(json{{"rank", rs.rank()}, {"positive_roots", roots}});
    }
    std::ostringstream out;
    for (const IVec& alpha : rs.positive_roots()) {
        Polynomial f = root_form(rs, alpha);
        out << (oopts.format == "latex" ? to_latex(f, VarStyle::alpha) : to_text(f, VarStyle::alpha))
            << "\n";
    }
    return out.str();
}

std::string run_group(const GroupOpts& gopts, const OutputOpts& oopts) {
    WeylGroup g(build_root_system(gopts.resolve()), gopts.max_group_size);
    if (oopts.format == "json") {
        json arr = json::array();
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            json entry{{"word", word_to_json(g.canonical_word(idx))}, {"length", g.length(idx)}};
            if (g.is_type_a()) entry["one_line"] = g.one_line(idx);
            arr.push_back(std::move(entry));
        }
        return dump(arr);
    }
    std::ostringstream out;
    for (std::size_t idx = 0; idx < g.size(); ++idx) {
        if (oopts.format == "latex") {
            out << word_latex(g.canonical_word(idx)) << "\n";
            continue;
        }
        out << "word=" << word_text(g.canonical_word(idx)) << " length=" << g.length(idx);
        if (g.is_type_a()) {
            out << " one_line=";
            auto ol = g.one_line(idx);
            for (std::size_t i = 0; i < ol.size(); ++i) out << (i ? "," : "") << ol[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string run_word(const GroupOpts& gopts, const OutputOpts& oopts, const std::string& w_text,
                     bool all_words, bool inversions) {
    RootSystem rs = build_root_system(gopts.resolve());
    WeylElement w = element_from_word(rs, parse_word(w_text));
    Word canonical = one_reduced_word(rs, w);
    if (oopts.format == "json") {
        json out{{"canonical_word", word_to_json(canonical)},
                 {"length", static_cast<int>(canonical.size())}};
        if (all_words) {
            json words = json::array();
            for (const Word& rw : all_reduced_words(rs, w)) words.push_back(word_to_json(rw));
            out["reduced_words"] = std::move(words);
        }
        if (inversions) {
            json inv = json::array();
            for (const IVec& alpha : inversion_set(rs, w)) inv.push_back(root_coords_json(alpha));
            out["inversions"] = std::move(inv);
        }
        return dump(out);
    }
    std::ostringstream out;
    if (oopts.format == "latex") {
        out << word_latex(canonical) << "\n";
    } else {
        out << "canonical=" << word_text(canonical) << " length=" << canonical.size() << "\n";
    }
    if (all_words)
        for (const Word& rw : all_reduced_words(rs, w)) out << word_text(rw) << "\n";
    if (inversions)
        for (const IVec& alpha : inversion_set(rs, w))
            out << (oopts.format == "latex" ? to_latex(root_form(rs, alpha), VarStyle::alpha)
                                            : to_text(root_form(rs, alpha), VarStyle::alpha))
                << "\n";
    return out.str();
}

std::string run_bruhat(const GroupOpts& gopts, const OutputOpts& oopts, const std::string& v_text,
                       const std::string& w_text, bool graph) {
    if (graph) {
        WeylGroup g(build_root_system(gopts.resolve()), gopts.max_group_size);
        BruhatGraph bg = bruhat_graph(g);
        if (oopts.format == "json") {
            json edges = json::array();
            for (const BruhatEdge& e : bg.edges)
                edges.push_back(json{{"a", word_to_json(g.canonical_word(e.a))},
                                     {"b", word_to_json(g.canonical_word(e.b))},
                                     {"label", root_coords_json(e.label)}});
            return dump(json{{"vertices", bg.vertex_count}, {"edges", edges}});
        }
        std::ostringstream out;
        out << "vertices=" << bg.vertex_count << " edges=" << bg.edges.size() << "\n";
        for (const BruhatEdge& e : bg.edges)
            out << word_text(g.canonical_word(e.a)) << " -- " << word_text(g.canonical_word(e.b))
                << "  label=" << to_text(root_form(g.roots(), e.label), VarStyle::alpha) << "\n";
        return out.str();
    }
    RootSystem rs = build_root_system(gopts.resolve());
    WeylElement v = element_from_word(rs, parse_word(v_text));
    WeylElement w = element_from_word(rs, parse_word(w_text));
    bool leq = bruhat_leq(rs, v, w);
    if (oopts.format == "json") return dump(json{{"leq", leq}});
    return std::string(leq ? "true" : "false") + "\n";
}

std::string run_billey(const GroupOpts& gopts, const OutputOpts& oopts, const std::string& v_text,
                       const std::string& w_text) {
    RootSystem rs = build_root_system(gopts.resolve());
    WeylElement v = element_from_word(rs, parse_word(v_text));
    WeylElement w = element_from_word(rs, parse_word(w_text));
    Polynomial value = billey(rs, v, w);
    if (oopts.format == "json") return dump(poly_to_json(value, VarStyle::alpha));
    if (oopts.format == "latex") return to_latex(value, VarStyle::alpha) + "\n";
    return to_text(value, VarStyle::alpha) + "\n";
}

std::string run_class_table(const GroupOpts& gopts, const OutputOpts& oopts,
                            const std::optional<std::string>& v_text, bool all) {
    WeylGroup g(build_root_system(gopts.resolve()), gopts.max_group_size);
    std::vector<std::size_t> v_indices;
    if (all) {
        for (std::size_t idx = 0; idx < g.size(); ++idx) v_indices.push_back(idx);
    } else if (v_text) {
        v_indices.push_back(g.index_of(element_from_word(g.roots(), parse_word(*v_text))));
    } else {
        throw std::invalid_argument("class-table: give --v or --all");
    }
    std::vector<GKMClass> classes;
    if (all)
        classes = all_schubert_classes(g);
    else
        classes.push_back(schubert_class(g, g.element(v_indices[0])));

    if (oopts.format == "json") {
        json arr = json::array();
        for (std::size_t k = 0; k < v_indices.size(); ++k)
            arr.push_back(json{{"class", word_to_json(g.canonical_word(v_indices[k]))},
                               {"table", class_table_to_json(g, classes[k])}});
        return dump(arr);
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < v_indices.size(); ++k) {
        if (oopts.format == "latex") {
            out << class_table_latex(g, g.canonical_word(v_indices[k]), classes[k]);
            continue;
        }
        out << "class " << (g.length(v_indices[k]) == 0 ? "e" : word_text(g.canonical_word(v_indices[k])))
            << ":\n";
        for (std::size_t idx = 0; idx < g.size(); ++idx)
            out << "  " << (g.length(idx) == 0 ? "e" : word_text(g.canonical_word(idx))) << " : "
                << to_text(classes[k].values[idx], VarStyle::alpha) << "\n";
    }
    return out.str();
}

std::string run_gkm_check(const GroupOpts& gopts, const OutputOpts& oopts,
                          const std::optional<std::string>& v_text,
                          const std::optional<std::string>& table_file) {
    WeylGroup g(build_root_system(gopts.resolve()), gopts.max_group_size);
    GKMClass cls;
    if (v_text) {
        cls = schubert_class(g, element_from_word(g.roots(), parse_word(*v_text)));
    } else if (table_file) {
        std::ifstream in(*table_file);
        if (!in) throw std::invalid_argument("cannot open table file: " + *table_file);
        json j = json::parse(in);
        cls.values.assign(g.size(), Polynomial::zero(g.rank()));
        std::vector<bool> seen(g.size(), false);
        for (const auto& [word, poly] : class_table_from_json(j)) {
            std::size_t idx = g.index_of(element_from_word(g.roots(), word));
            cls.values[idx] = poly;
            seen[idx] = true;
        }
        for (bool s : seen)
            if (!s) throw std::invalid_argument("gkm-check: table must cover the whole group");
    } else {
        throw std::invalid_argument("gkm-check: give --v or --table FILE");
    }
    BruhatGraph graph = bruhat_graph(g);
    GkmCheckResult res = gkm_check(g, graph, cls);
    if (oopts.format == "json") {
        json violated = json::array();
        for (std::size_t e : res.violated_edges)
            violated.push_back(json{{"a", word_to_json(g.canonical_word(graph.edges[e].a))},
                                    {"b", word_to_json(g.canonical_word(graph.edges[e].b))},
                                    {"label", root_coords_json(graph.edges[e].label)}});
        return dump(json{{"ok", res.ok}, {"violated_edges", violated}});
    }
    std::ostringstream out;
    out << (res.ok ? "ok" : "violated") << "\n";
    for (std::size_t e : res.violated_edges)
        out << word_text(g.canonical_word(graph.edges[e].a)) << " -- "
            << word_text(g.canonical_word(graph.edges[e].b)) << "  label="
            << to_text(root_form(g.roots(), graph.edges[e].label), VarStyle::alpha) << "\n";
    return out.str();
}

std::string run_kumar(const GroupOpts& gopts, const OutputOpts& oopts, const std::string& v_text,
                      const std::string& w_text) {
    RootSystem rs = build_root_system(gopts.resolve());
    WeylElement v = element_from_word(rs, parse_word(v_text));
    WeylElement w = element_from_word(rs, parse_word(w_text));
    KumarResult res = kumar_smooth(rs, v, w);
    if (oopts.format == "json")
        return dump(json{{"smooth", res.smooth},
                         {"lhs", poly_to_json(res.lhs, VarStyle::alpha)},
                         {"rhs", poly_to_json(res.rhs, VarStyle::alpha)}});
    std::ostringstream out;
    if (oopts.format == "latex") {
        out << (res.smooth ? "smooth" : "singular") << "\n"
            << to_latex(res.lhs, VarStyle::alpha) << "\n"
            << to_latex(res.rhs, VarStyle::alpha) << "\n";
    } else {
        out << (res.smooth ? "smooth" : "singular") << "\n"
            << "lhs=" << to_text(res.lhs, VarStyle::alpha) << "\n"
            << "rhs=" << to_text(res.rhs, VarStyle::alpha) << "\n";
    }
    return out.str();
}

std::string run_eyd(const OutputOpts& oopts, const std::string& lambda_text,
                    const std::string& mu_text, int k, int n) {
    Partition lambda = parse_partition(lambda_text);
    Partition mu = parse_partition(mu_text);
    auto diagrams = enumerate_excited(lambda, mu);
    int kk = k > 0 ? k : mu.rows();
    int nvars = n > 0 ? n : 0;
    Polynomial value = excited_diagram_polynomial(lambda, mu, kk, nvars);
    if (oopts.format == "json") {
        json ds = json::array();
        for (const MarkedDiagram& d : diagrams) {
            json marks = json::array();
            for (const auto& [r, c] : d.marks) marks.push_back(json::array({r, c}));
            ds.push_back(std::move(marks));
        }
        return dump(json{{"shape", mu.parts},
                         {"diagrams", ds},
                         {"polynomial", poly_to_json(value, VarStyle::tvars)}});
    }
    std::ostringstream out;
    for (const MarkedDiagram& d : diagrams)
        out << (oopts.format == "latex" ? diagram_latex(d) : diagram_ascii(d)) << "\n";
    out << (oopts.format == "latex" ? to_latex(value, VarStyle::tvars)
                                    : to_text(value, VarStyle::tvars))
        << "\n";
    return out.str();
}

std::string run_eyd_verify(const OutputOpts& oopts, const std::string& lambda_text,
                           const std::string& mu_text, int k, int n) {
    Partition lambda = parse_partition(lambda_text);
    Partition mu = parse_partition(mu_text);
    bool equal = excited_diagrams_match_schubert(lambda, mu, k, n);
    if (oopts.format == "json") return dump(json{{"equal", equal}});
    return std::string(equal ? "true" : "false") + "\n";
}

WeylGroup variety_group(const std::string& variety, const GroupOpts& gopts, int n) {
    if (variety == "peterson") return WeylGroup(build_root_system(gopts.resolve()), gopts.max_group_size);
    if (n < 1) throw std::invalid_argument("--n is required for springer/hessenberg");
    return WeylGroup(build_root_system(CartanSpec::named('A', n - 1)), gopts.max_group_size);
}

FixedPointSet variety_fixed_points(const WeylGroup& g, const std::string& variety,
                                   const std::string& jordan_text, const std::string& h_text,
                                   int n) {
    if (variety == "peterson") return peterson_fixed_points(g);
    JordanType jordan(parse_partition(jordan_text));
    if (jordan.blocks.size() != n)
        throw std::invalid_argument("--jordan must be a partition of --n");
    if (variety == "springer") return springer_fixed_points(g, jordan);
    if (variety == "hessenberg") {
        std::vector<int> h = parse_index_list(h_text);
        return hessenberg_fixed_points(g, jordan, HessenbergFunction(h));
    }
    throw std::invalid_argument("unknown variety: " + variety);
}

json fixed_points_json(const WeylGroup& g, const FixedPointSet& fps) {
    json members = json::array();
    for (std::size_t idx : fps.members) {
        json entry{{"word", word_to_json(g.canonical_word(idx))}, {"length", g.length(idx)}};
        if (g.is_type_a()) entry["one_line"] = g.one_line(idx);
        members.push_back(std::move(entry));
    }
    return json{{"origin", to_string(fps.origin)}, {"members", members}};
}

std::string run_fixed_points(const GroupOpts& gopts, const OutputOpts& oopts,
                             const std::string& variety, const std::string& jordan_text,
                             const std::string& h_text, int n) {
    WeylGroup g = variety_group(variety, gopts, n);
    FixedPointSet fps = variety_fixed_points(g, variety, jordan_text, h_text, n);
    if (oopts.format == "json") return dump(fixed_points_json(g, fps));
    std::ostringstream out;
    out << to_string(fps.origin) << " fixed points: " << fps.members.size() << "\n";
    for (std::size_t idx : fps.members) {
        out << "  word=" << (g.length(idx) == 0 ? "e" : word_text(g.canonical_word(idx)));
        if (g.is_type_a()) {
            out << " one_line=";
            auto ol = g.one_line(idx);
            for (std::size_t i = 0; i < ol.size(); ++i) out << (i ? "," : "") << ol[i];
        }
        out << "\n";
    }
    return out.str();
}

std::string run_pinball(const GroupOpts& gopts, const OutputOpts& oopts,
                        const std::string& variety, const std::string& jordan_text,
                        const std::string& h_text, int n, const std::string& mode_text,
                        std::ostream& err, int& exit_code) {
    WeylGroup g = variety_group(variety, gopts, n);
    FixedPointSet fps = variety_fixed_points(g, variety, jordan_text, h_text, n);
    PinballMode mode = mode_text == "all" ? PinballMode::all : PinballMode::first;
    auto assignments = pinball_search(g, fps, mode);
    if (assignments.empty()) {
        err << "pinball: no acceptable assignment exists for this fixed-point set\n";
        exit_code = 1;
    }
    if (oopts.format == "json") {
        json arr = json::array();
        for (const RolldownAssignment& a : assignments) {
            json fp = json::array(), rd = json::array(), rows = json::array();
            for (std::size_t idx : a.fixed_points) fp.push_back(word_to_json(g.canonical_word(idx)));
            for (std::size_t idx : a.rolldowns) rd.push_back(word_to_json(g.canonical_word(idx)));
            for (const auto& row : a.matrix) {
                json r = json::array();
                for (const TPoly& p : row) r.push_back(tpoly_to_json(p));
                rows.push_back(std::move(r));
            }
            arr.push_back(json{{"fixed_points", fp},
                               {"rolldowns", rd},
                               {"matrix", rows},
                               {"det", tpoly_to_json(a.det)}});
        }
        return dump(arr);
    }
    std::ostringstream out;
    out << "assignments: " << assignments.size() << "\n";
    for (const RolldownAssignment& a : assignments) {
        out << "rolldowns:";
        for (std::size_t idx : a.rolldowns)
            out << " " << (g.length(idx) == 0 ? "e" : word_text(g.canonical_word(idx)));
        out << "  det=" << to_text(a.det) << "\n";
        for (const auto& row : a.matrix) {
            out << "  [";
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << to_text(row[j]);
            out << "]\n";
        }
    }
    return out.str();
}

std::string run_peterson(const GroupOpts& gopts_in, const OutputOpts& oopts,
                         const std::string& check, int i, const std::string& a_text) {
    GroupOpts gopts = gopts_in;
    std::vector<int> subset = parse_index_list(a_text);
    if (gopts.family.empty() && gopts.cartan.empty()) {
        gopts.family = "A";
        int needed = i;
        for (int v : subset) needed = std::max(needed, v);
        gopts.rank = needed + 1;  // smallest rank with a cover above the subset
    }
    WeylGroup g(build_root_system(gopts.resolve()), gopts.max_group_size);
    if (check == "cm") {
        if (i < 1) throw std::invalid_argument("peterson --check cm requires --i");
        ChevalleyMonkResult res = chevalley_monk_expand(g, i, subset);
        if (oopts.format == "json") {
            json covers = json::array();
            for (const auto& [b, c] : res.covers)
                covers.push_back(json{{"B", b}, {"coeff", static_cast<long long>(c)}});
            return dump(json{{"diagonal", static_cast<long long>(res.diagonal)}, {"covers", covers}});
        }
        std::ostringstream out;
        out << "diagonal=" << res.diagonal.str() << "\n";
        for (const auto& [b, c] : res.covers) {
            out << "B=";
            for (std::size_t k = 0; k < b.size(); ++k) out << (k ? "," : "") << b[k];
            out << " coeff=" << c.str() << "\n";
        }
        return out.str();
    }
    if (check == "giambelli") {
        Coeff c = giambelli_constant(g, subset);
        if (oopts.format == "json") return dump(json{{"constant", static_cast<long long>(c)}});
        return c.str() + "\n";
    }
    throw std::invalid_argument("peterson: --check must be cm or giambelli");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations for flag-variety fixed-point classes"};
    app.set_help_flag("--help", "print help");  // keep -h free: hessenberg uses --h
    app.require_subcommand(1);

    GroupOpts gopts;
    OutputOpts oopts;

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "positive roots of a root system");
    add_group_options(roots_cmd, gopts);
    add_output_options(roots_cmd, oopts);

    // group
    auto* group_cmd = app.add_subcommand("group", "enumerate the Weyl group");
    add_group_options(group_cmd, gopts);
    add_output_options(group_cmd, oopts);

    // word
    std::string w_text, v_text;
    bool all_words = false, inversions = false;
    auto* word_cmd = app.add_subcommand("word", "reduced words and inversions of an element");
    add_group_options(word_cmd, gopts);
    add_output_options(word_cmd, oopts);
    word_cmd->add_option("--w", w_text, "word as comma-separated indices; empty = identity");
    word_cmd->add_flag("--all", all_words, "list all reduced words");
    word_cmd->add_flag("--inversions", inversions, "list the inversion set");

    // bruhat
    bool graph_flag = false;
    auto* bruhat_cmd = app.add_subcommand("bruhat", "Bruhat comparison or the full Bruhat graph");
    add_group_options(bruhat_cmd, gopts);
    add_output_options(bruhat_cmd, oopts);
    bruhat_cmd->add_option("--v", v_text, "left element");
    bruhat_cmd->add_option("--w", w_text, "right element");
    bruhat_cmd->add_flag("--graph", graph_flag, "emit all graph edges");

    // billey
    auto* billey_cmd = app.add_subcommand("billey", "restriction polynomial sigma_v(w)");
    add_group_options(billey_cmd, gopts);
    add_output_options(billey_cmd, oopts);
    billey_cmd->add_option("--v", v_text, "class index element")->required();
    billey_cmd->add_option("--w", w_text, "fixed point element")->required();

    // class-table
    bool all_classes = false;
    std::string ct_v;
    bool ct_v_given = false;
    auto* ct_cmd = app.add_subcommand("class-table", "fixed-point table(s) of classes");
    add_group_options(ct_cmd, gopts);
    add_output_options(ct_cmd, oopts);
    auto* ctv_opt = ct_cmd->add_option("--v", ct_v, "class index element");
    ct_cmd->add_flag("--all", all_classes, "all classes");
    (void)ctv_opt;

    // gkm-check
    std::string table_file;
    bool gkm_v_given = false;
    auto* gkm_cmd = app.add_subcommand("gkm-check", "edge divisibility check for a class table");
    add_group_options(gkm_cmd, gopts);
    add_output_options(gkm_cmd, oopts);
    auto* gkm_v_opt = gkm_cmd->add_option("--v", v_text, "check the class of this element");
    gkm_cmd->add_option("--table", table_file, "check a class table from a JSON file");
    (void)gkm_v_opt;

    // kumar
    auto* kumar_cmd = app.add_subcommand("kumar", "smoothness test at a fixed point");
    add_group_options(kumar_cmd, gopts);
    add_output_options(kumar_cmd, oopts);
    kumar_cmd->add_option("--v", v_text, "cell index element")->required();
    kumar_cmd->add_option("--w", w_text, "fixed point element")->required();

    // eyd
    std::string lambda_text, mu_text;
    int k_opt = 0, n_opt = 0;
    auto* eyd_cmd = app.add_subcommand("eyd", "excited diagrams and their weight polynomial");
    add_output_options(eyd_cmd, oopts);
    eyd_cmd->add_option("--lambda", lambda_text, "inner partition")->required();
    eyd_cmd->add_option("--mu", mu_text, "ambient partition")->required();
    eyd_cmd->add_option("--k", k_opt, "ambient row count (default: rows of mu)");
    eyd_cmd->add_option("--n", n_opt, "value variable count (default: k + mu_1)");

    // eyd-verify
    auto* eydv_cmd = app.add_subcommand("eyd-verify",
                                        "compare the diagram sum with the subword formula");
    add_output_options(eydv_cmd, oopts);
    eydv_cmd->add_option("--lambda", lambda_text, "inner partition")->required();
    eydv_cmd->add_option("--mu", mu_text, "ambient partition")->required();
    eydv_cmd->add_option("--k", k_opt, "subspace dimension")->required();
    eydv_cmd->add_option("--n", n_opt, "ambient dimension")->required();

    // fixed-points
    std::string variety, jordan_text, h_text, mode_text = "first";
    int n_points = 0;
    auto* fp_cmd = app.add_subcommand("fixed-points", "fixed points of a subvariety");
    add_group_options(fp_cmd, gopts, false);
    add_output_options(fp_cmd, oopts);
    fp_cmd->add_option("--variety", variety, "springer, hessenberg or peterson")->required();
    fp_cmd->add_option("--jordan", jordan_text, "Jordan block sizes, e.g. 2,1");
    fp_cmd->add_option("--h", h_text, "Hessenberg function values, e.g. 1,3,3");
    fp_cmd->add_option("--n", n_points, "matrix size for springer/hessenberg");

    // pinball
    auto* pin_cmd = app.add_subcommand("pinball", "roll-down assignments for a subvariety");
    add_group_options(pin_cmd, gopts, false);
    add_output_options(pin_cmd, oopts);
    pin_cmd->add_option("--variety", variety, "springer, hessenberg or peterson")->required();
    pin_cmd->add_option("--jordan", jordan_text, "Jordan block sizes");
    pin_cmd->add_option("--h", h_text, "Hessenberg function values");
    pin_cmd->add_option("--n", n_points, "matrix size for springer/hessenberg");
    pin_cmd->add_option("--mode", mode_text, "first or all")->check(CLI::IsMember({"first", "all"}));

    // peterson
    std::string check_text, a_text;
    int i_opt = 0;
    auto* pet_cmd = app.add_subcommand("peterson", "Chevalley-Monk / Giambelli checks");
    add_group_options(pet_cmd, gopts, false);
    add_output_options(pet_cmd, oopts);
    pet_cmd->add_option("--check", check_text, "cm or giambelli")->required();
    pet_cmd->add_option("--i", i_opt, "simple index for the degree-one class");
    pet_cmd->add_option("--A", a_text, "subset of simple indices, e.g. 1,2");

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    gkm_v_given = gkm_cmd->count("--v") > 0;
    ct_v_given = ct_cmd->count("--v") > 0;

    int exit_code = 0;
    try {
        std::string payload;
        if (roots_cmd->parsed()) payload = run_roots(gopts, oopts);
        else if (group_cmd->parsed()) payload = run_group(gopts, oopts);
        else if (word_cmd->parsed()) payload = run_word(gopts, oopts, w_text, all_words, inversions);
        else if (bruhat_cmd->parsed()) payload = run_bruhat(gopts, oopts, v_text, w_text, graph_flag);
        else if (billey_cmd->parsed()) payload = run_billey(gopts, oopts, v_text, w_text);
        else if (ct_cmd->parsed())
            payload = run_class_table(gopts, oopts,
                                      ct_v_given ? std::optional<std::string>(ct_v) : std::nullopt,
                                      all_classes);
        else if (gkm_cmd->parsed())
            payload = run_gkm_check(gopts, oopts,
                                    gkm_v_given ? std::optional<std::string>(v_text) : std::nullopt,
                                    table_file.empty() ? std::nullopt
                                                       : std::optional<std::string>(table_file));
        else if (kumar_cmd->parsed()) payload = run_kumar(gopts, oopts, v_text, w_text);
        else if (eyd_cmd->parsed()) payload = run_eyd(oopts, lambda_text, mu_text, k_opt, n_opt);
        else if (eydv_cmd->parsed())
            payload = run_eyd_verify(oopts, lambda_text, mu_text, k_opt, n_opt);
        else if (fp_cmd->parsed())
            payload = run_fixed_points(gopts, oopts, variety, jordan_text, h_text, n_points);
        else if (pin_cmd->parsed())
            payload = run_pinball(gopts, oopts, variety, jordan_text, h_text, n_points, mode_text,
                                  err, exit_code);
        else if (pet_cmd->parsed()) payload = run_peterson(gopts, oopts, check_text, i_opt, a_text);
        deliver(oopts, out, payload);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace flagcalc
