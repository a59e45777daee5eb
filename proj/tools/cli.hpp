// Command-line front end. Exit codes: 0 success, 1 a verification reported a
// failure, 2 invalid input or usage error.

#pragma once

#include <slpcat/slpcat.hpp>

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace slpcat::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, bad_input = 2 };

/// Which library operations each subcommand exercises.
inline const std::map<std::string, std::vector<std::string>>& subcommand_operations()
{
    static const std::map<std::string, std::vector<std::string>> table{
        {"signature", {"is_dominant", "addable_rows", "removable_rows", "alpha_signature", "reduce_signature", "string_lengths"}},
        {"crystal-op", {"crystal_f", "crystal_e"}},
        {"crystal-graph", {"crystal_graph", "singular_vertices"}},
        {"character", {"weyl_character", "dimension", "alternant", "verify_weyl_formula", "casimir_scalar", "weight_to_beta"}},
        {"pieri", {"tensor_filtration_F", "tensor_filtration_E", "verify_pieri", "dominance_leq"}},
        {"fock-apply", {"wedge_apply", "fock_apply", "h_apply", "weight_of", "chevalley_f_line", "chevalley_e_line",
                        "addable_boxes", "removable_boxes", "box_content", "beta_to_weight"}},
        {"fock-relations", {"check_kac_moody_relations"}},
        {"groth-check", {"groth_f", "groth_e"}},
        {"hecke-verify", {"matrix_unit_action", "casimir", "tensor_casimir", "build_Xi", "build_Ti", "verify_hecke_relations"}},
        {"eigendims", {"generalized_eigenspaces", "predicted_F_alpha_dims"}},
        {"classify-component", {"empty_component_classification"}},
        {"branch", {"branching"}},
        {"matrix", {"matrix_unit_action", "casimir", "tensor_casimir", "build_Xi", "build_Ti"}},
    };
    return table;
}

struct CliConfig {
    int p = 0;
    int n = 0;
    int N = 0;
    int d = 0;
    int alpha = -1;
    std::string weight;
    std::string partition;
    std::string wedge;
    int max_size = -1;
    int window = -1;
    int steps = 3;
    int index = 1;
    std::string format = "text";
    std::string model = "partition";
    std::string op = "X";
    bool use_f = false;
    bool use_e = false;
    bool use_h = false;
};

namespace detail {

inline std::string bool_word(bool b) { return b ? "holds" : "FAILS"; }

inline std::string dims_text(const std::vector<long long>& v)
{
    std::string s;
    for (std::size_t a = 0; a < v.size(); ++a)
        s += (a ? " " : "") + std::to_string(a) + ":" + std::to_string(v[a]);
    return s;
}

template <typename Label>
void print_vector(std::ostream& out, const FockVector<Label>& v)
{
    if (v.is_zero()) {
        out << "0\n";
        return;
    }
    for (const auto& [l, c] : v.terms())
        out << c << " * |" << to_string(l) << ">\n";
}

inline std::string joined(const std::vector<int>& v)
{
    return format_int_list(v);
}

inline Weight require_weight(const CliConfig& c)
{
    if (c.weight.empty())
        throw invalid_input("--weight is required");
    return parse_weight(c.weight);
}

inline Residue require_alpha(const CliConfig& c)
{
    if (c.alpha < 0)
        throw invalid_input("--alpha is required");
    if (c.alpha >= c.p)
        throw invalid_input("--alpha must lie in [0, p)");
    return Residue(c.p, c.alpha);
}

inline void require_p(const CliConfig& c, int min_p = 2)
{
    require_prime(c.p);
    if (c.p < min_p)
        throw unsupported_modulus("this command needs p >= " + std::to_string(min_p));
}

// ---------------------------------------------------------------------------

inline int cmd_signature(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    const Residue a = require_alpha(c);
    Signature raw;
    StringLengths len{};
    if (!c.partition.empty() || c.weight.empty()) {
        const Partition lam = parse_partition(c.partition);
        raw = alpha_signature(lam, a);
        len = string_lengths(lam, a);
    } else {
        const Weight lam = require_weight(c);
        raw = alpha_signature(lam, a);
        len = string_lengths(lam, a);
    }
    const Signature red = reduce_signature(raw);
    if (c.format == "json") {
        json j{{"raw", to_json(raw)}, {"reduced", to_json(red)}, {"epsilon", len.epsilon}, {"phi", len.phi}};
        out << j.dump(2) << "\n";
        return ok;
    }
    if (!c.weight.empty() && c.partition.empty()) {
        const Weight lam = parse_weight(c.weight);
        out << "addable rows:   " << joined(addable_rows(lam)) << "\n";
        out << "removable rows: " << joined(removable_rows(lam)) << "\n";
    }
    out << "raw:     " << raw.symbols() << "\n";
    out << "rows:    " << joined(raw.rows()) << "\n";
    out << "reduced: " << red.symbols() << "\n";
    out << "rows:    " << joined(red.rows()) << "\n";
    out << "epsilon: " << len.epsilon << "\n";
    out << "phi:     " << len.phi << "\n";
    return ok;
}

inline int cmd_crystal_op(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    if (c.use_f == c.use_e)
        throw invalid_input("exactly one of --f or --e is required");
    const Residue a = require_alpha(c);
    std::optional<std::string> result;
    if (!c.partition.empty()) {
        const Partition lam = parse_partition(c.partition);
        if (auto r = c.use_f ? crystal_f(lam, a) : crystal_e(lam, a))
            result = to_string(*r);
    } else {
        const Weight lam = require_weight(c);
        if (auto r = c.use_f ? crystal_f(lam, a) : crystal_e(lam, a))
            result = to_string(*r);
    }
    if (c.format == "json")
        out << json{{"result", result ? json(*result) : json(nullptr)}}.dump() << "\n";
    else
        out << result.value_or("0") << "\n";
    return ok;
}

template <typename Vertex>
int emit_graph(const CliConfig& c, const CrystalGraph<Vertex>& g, std::ostream& out)
{
    if (c.format == "dot") {
        out << to_dot(g);
    } else if (c.format == "json") {
        json j = to_json(g);
        json sing = json::array();
        for (const Vertex& v : singular_vertices(g))
            sing.push_back(to_string(v));
        j["singular"] = sing;
        out << j.dump(2) << "\n";
    } else {
        const json j = to_json(g);
        out << "vertices: " << j["vertices"].size() << "\n";
        for (const auto& v : j["vertices"])
            out << "  " << v.get<std::string>() << "\n";
        out << "edges: " << j["edges"].size() << "\n";
        for (const auto& e : j["edges"])
            out << "  " << e["source"].get<std::string>() << " -" << e["alpha"].get<int>() << "-> "
                << e["target"].get<std::string>() << "\n";
        out << "singular:";
        for (const Vertex& v : singular_vertices(g))
            out << " " << to_string(v);
        out << "\n";
    }
    return ok;
}

inline int cmd_crystal_graph(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    if (!c.weight.empty() && c.partition.empty()) {
        const Weight seed = require_weight(c);
        require_dominant(seed, "crystal-graph");
        return emit_graph(c, crystal_graph<Weight>({seed}, c.p, c.steps), out);
    }
    const Partition seed = parse_partition(c.partition);
    std::function<bool(const Partition&)> keep;
    if (c.max_size >= 0)
        keep = [m = c.max_size](const Partition& v) { return v.size() <= m; };
    return emit_graph(c, crystal_graph<Partition>({seed}, c.p, c.steps, keep), out);
}

inline Weight weight_from_args(const CliConfig& c)
{
    if (!c.weight.empty())
        return parse_weight(c.weight);
    if (!c.partition.empty()) {
        const Partition lam = parse_partition(c.partition);
        return lam.to_weight(c.n > 0 ? c.n : std::max(1, lam.length()));
    }
    throw invalid_input("--weight or --partition is required");
}

inline int cmd_character(const CliConfig& c, std::ostream& out)
{
    const Weight lam = weight_from_args(c);
    const FormalCharacter ch = weyl_character(lam);
    const bool weyl = verify_weyl_formula(lam);
    if (c.format == "json") {
        json j{{"weight", lam.entries()},
               {"character", to_json(ch)},
               {"dimension", dimension(ch)},
               {"casimir", casimir_scalar(lam)},
               {"beta", weight_to_beta(lam)},
               {"weyl_formula", weyl}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [w, m] : ch.terms())
            out << to_string(w) << " " << m << "\n";
        out << "dimension: " << dimension(ch) << "\n";
        out << "casimir: " << casimir_scalar(lam) << "\n";
        out << "beta: " << joined(weight_to_beta(lam)) << "\n";
        out << "weyl formula: " << bool_word(weyl) << "\n";
    }
    return weyl ? ok : verification_failed;
}

inline int cmd_pieri(const CliConfig& c, std::ostream& out)
{
    const Weight lam = weight_from_args(c);
    std::optional<Residue> a;
    if (c.alpha >= 0) {
        require_p(c);
        a = require_alpha(c);
    }
    const auto F = tensor_filtration_F(lam, a);
    const auto E = tensor_filtration_E(lam, a);
    const bool pf = verify_pieri(lam), pe = verify_dual_pieri(lam);
    bool ordered = true;
    for (std::size_t k = 1; k < F.size(); ++k)
        ordered = ordered && dominance_leq(F[k], F[k - 1]);
    if (c.format == "json") {
        json jf = json::array(), je = json::array();
        for (const Weight& w : F)
            jf.push_back(w.entries());
        for (const Weight& w : E)
            je.push_back(w.entries());
        out << json{{"F", jf}, {"E", je}, {"pieri_F", pf}, {"pieri_E", pe}}.dump(2) << "\n";
    } else {
        out << "F filtration:";
        for (const Weight& w : F)
            out << " (" << to_string(w) << ")";
        out << "\nE filtration:";
        for (const Weight& w : E)
            out << " (" << to_string(w) << ")";
        out << "\npieri F: " << bool_word(pf) << "\npieri E: " << bool_word(pe) << "\n";
    }
    return (pf && pe && ordered) ? ok : verification_failed;
}

inline Generator generator_of(const CliConfig& c)
{
    if (c.use_f + c.use_e + c.use_h != 1)
        throw invalid_input("exactly one of --f, --e or --h is required");
    return c.use_f ? Generator::f : Generator::e;
}

template <typename Label>
int fock_apply_common(const CliConfig& c, const Label& label, const FockVector<Label>& result, const ResidueMultiset& w,
                      std::ostream& out)
{
    if (c.format == "json") {
        out << json{{"input", to_json(label)}, {"weight", w.sorted()}, {"result", to_json(result)}}.dump(2) << "\n";
    } else {
        out << "weight: {" << joined(w.sorted()) << "}\n";
        print_vector(out, result);
    }
    return ok;
}

inline int cmd_fock_apply(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    const Residue a = require_alpha(c);
    const Generator g = generator_of(c);
    if (!c.wedge.empty() || !c.weight.empty()) {
        const WedgeLabel w = !c.wedge.empty() ? WedgeLabel(parse_int_list(c.wedge))
                                              : WedgeLabel::from_weight(parse_weight(c.weight));
        const auto r = c.use_h ? h_apply(a, FockVector<WedgeLabel>(w)) : wedge_apply(g, a, w);
        return fock_apply_common(c, w, r, weight_of(w, c.p), out);
    }
    const Partition lam = parse_partition(c.partition);
    const auto r = c.use_h ? h_apply(a, FockVector<Partition>(lam)) : fock_apply(g, a, lam);
    return fock_apply_common(c, lam, r, weight_of(lam, c.p), out);
}

inline int cmd_fock_relations(const CliConfig& c, std::ostream& out)
{
    require_p(c, 3);
    RelationReport report;
    std::size_t checked = 0;
    if (c.model == "wedge") {
        if (c.n < 1)
            throw invalid_input("--n is required for the wedge model");
        const int window = c.window >= 0 ? c.window : 2 * c.p + 3;
        const auto basis = wedge_labels_in_window(c.n, window);
        checked = basis.size();
        report = check_kac_moody_relations<WedgeLabel>(basis, c.p, WedgeModel{});
    } else if (c.model == "partition") {
        const auto basis = partitions_up_to(c.max_size >= 0 ? c.max_size : 8);
        checked = basis.size();
        report = check_kac_moody_relations<Partition>(basis, c.p, PartitionModel{});
    } else {
        throw invalid_input("--model must be wedge or partition");
    }
    if (c.format == "json")
        out << json{{"basis_vectors", checked}, {"violations", to_json(report)}}.dump(2) << "\n";
    else if (report.empty())
        out << "checked " << checked << " basis vectors: all relations hold\n";
    else
        for (const RelationViolation& v : report)
            out << "violated " << v.relation << " on |" << v.label << ">\n";
    return report.empty() ? ok : verification_failed;
}

inline int cmd_groth_check(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    const Weight lam = require_weight(c);
    require_dominant(lam, "groth-check");
    std::vector<Residue> alphas;
    if (c.alpha >= 0)
        alphas.push_back(require_alpha(c));
    else
        alphas = residues(c.p);
    const WedgeLabel w = WedgeLabel::from_weight(lam);
    bool all = true;
    json j = json::array();
    for (const Residue& a : alphas) {
        const auto gf = groth_f(a, lam), wf = wedge_apply(Generator::f, a, w);
        const auto ge = groth_e(a, lam), we = wedge_apply(Generator::e, a, w);
        const bool match = gf == wf && ge == we;
        all = all && match;
        if (c.format == "json") {
            j.push_back({{"alpha", a.value()}, {"F", to_json(gf)}, {"f", to_json(wf)}, {"E", to_json(ge)},
                         {"e", to_json(we)}, {"match", match}});
        } else {
            out << "alpha " << a.value() << ": [F] -> " << gf.term_count() << " terms, f -> " << wf.term_count()
                << " terms; [E] -> " << ge.term_count() << " terms, e -> " << we.term_count() << " terms: "
                << (match ? "match" : "MISMATCH") << "\n";
            for (const auto& [l, coeff] : gf.terms())
                out << "  F: " << coeff << " * |" << to_string(l) << "> = Delta(" << to_string(l.to_weight()) << ")\n";
        }
    }
    if (c.format == "json")
        out << j.dump(2) << "\n";
    return all ? ok : verification_failed;
}

inline int cmd_hecke_verify(const CliConfig& c, std::ostream& out)
{
    require_p(c, 3);
    if (c.n < 1 || c.N < 1 || c.d < 0)
        throw invalid_input("--n and --N must be positive, --d nonnegative");
    HeckeReport report = verify_hecke_relations(c.n, c.N, c.d, c.p);

    const TensorSpace space(c.n, c.N + c.d);
    if (c.N + c.d >= 2 && tensor_casimir(1, {2}, TensorSpace(c.n, 2), c.p) != slot_swap(1, 2, TensorSpace(c.n, 2), c.p))
        report.push_back("flip identity");
    std::vector<int> all, rest;
    for (int s = 1; s <= space.factors(); ++s) {
        all.push_back(s);
        if (s > 1)
            rest.push_back(s);
    }
    if (!all.empty()
        && casimir(all, space, c.p) - casimir({1}, space, c.p) - casimir(rest, space, c.p)
               != 2 * tensor_casimir(1, rest, space, c.p))
        report.push_back("casimir coproduct identity");
    if (!all.empty() && casimir(all, space, c.p) != casimir_expanded(all, space, c.p))
        report.push_back("casimir expansion");
    if (c.format == "json") {
        out << json{{"violations", report}}.dump(2) << "\n";
    } else if (report.empty()) {
        out << "all relations hold\n";
    } else {
        for (const auto& r : report)
            out << "violated: " << r << "\n";
    }
    return report.empty() ? ok : verification_failed;
}

inline int cmd_eigendims(const CliConfig& c, std::ostream& out)
{
    require_p(c, 3);
    if (c.n < 1 || c.d < 0)
        throw invalid_input("--n must be positive and --d nonnegative");
    const EigenDimensions got = generalized_eigenspaces(tensor_casimir_on_tensor_power(c.n, c.d, c.p));
    const std::vector<long long> want = predicted_F_alpha_dims(c.n, c.d, c.p);
    std::vector<long long> have(got.dims.begin(), got.dims.end());
    const bool match = have == want && got.complete();
    if (c.format == "json")
        out << json{{"computed", have}, {"predicted", want}, {"match", match}}.dump(2) << "\n";
    else
        out << "computed:  " << dims_text(have) << "\npredicted: " << dims_text(want) << "\n"
            << (match ? "match" : "MISMATCH") << "\n";
    return match ? ok : verification_failed;
}

inline int cmd_classify(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    const int max_size = c.max_size >= 0 ? c.max_size : 6;
    const ComponentClassification r = empty_component_classification(c.p, max_size);
    if (c.format == "json") {
        json comp = json::array(), pred = json::array();
        for (const Partition& l : r.computed)
            comp.push_back(to_json(l));
        for (const Partition& l : r.predicted)
            pred.push_back(to_json(l));
        out << json{{"computed", comp}, {"predicted", pred}, {"equal", r.equal}}.dump(2) << "\n";
    } else {
        out << "component vertices: " << r.computed.size() << "\npredicted:          " << r.predicted.size() << "\n"
            << (r.equal ? "equal" : "DIFFERENT") << "\n";
    }
    return r.equal ? ok : verification_failed;
}

inline int cmd_branch(const CliConfig& c, std::ostream& out)
{
    require_p(c);
    const Partition lam = parse_partition(c.partition);
    const auto br = branching(lam, c.p);
    if (c.format == "json") {
        json j = json::array();
        for (const auto& [a, mu] : br)
            j.push_back({{"alpha", a.value()}, {"partition", to_json(mu)}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [a, mu] : br)
            out << a.value() << ": " << to_string(mu) << "\n";
    }
    return ok;
}

inline int cmd_matrix(const CliConfig& c, std::ostream& out)
{
    require_p(c, 3);
    if (c.n < 1)
        throw invalid_input("--n is required");
    FpMatrix m = FpMatrix::zero(c.p, 1);
    if (c.op == "X") {
        m = build_Xi(c.index, c.N, c.d, c.n, c.p);
    } else if (c.op == "T") {
        m = build_Ti(c.index, c.N, c.d, c.n, c.p);
    } else if (c.op == "C") {
        const TensorSpace space(c.n, c.N + c.d);
        std::vector<int> all;
        for (int s = 1; s <= space.factors(); ++s)
            all.push_back(s);
        m = casimir(all, space, c.p);
    } else if (c.op == "flip") {
        m = tensor_casimir(1, {2}, TensorSpace(c.n, 2), c.p);
    } else {
        throw invalid_input("--op must be one of X, T, C, flip");
    }
    out << to_json(m).dump() << "\n";
    return ok;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Crystal, Fock space and degenerate affine Hecke computations over F_p", "slpcat"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    CliConfig c;

    auto add_common = [&c](CLI::App* s) {
        s->add_option("--p", c.p, "prime characteristic");
        s->add_option("--format", c.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
    };
    auto add_alpha = [&c](CLI::App* s) { s->add_option("--alpha", c.alpha, "residue in [0, p)"); };
    auto add_weight = [&c](CLI::App* s) {
        s->add_option("--weight", c.weight, "dominant weight, e.g. 18,16,-4");
        s->add_option("--partition", c.partition, "partition, e.g. 3,1 or ()");
    };
    auto add_fe = [&c](CLI::App* s) {
        s->add_flag("--f", c.use_f, "apply f");
        s->add_flag("--e", c.use_e, "apply e");
    };

    std::map<std::string, std::function<int(const CliConfig&, std::ostream&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, auto handler) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s);
        handlers[name] = handler;
        return s;
    };

    auto* sig = sub("signature", "alpha-signature, reduced signature and string lengths", detail::cmd_signature);
    add_alpha(sig);
    add_weight(sig);

    auto* cop = sub("crystal-op", "apply f~ or e~", detail::cmd_crystal_op);
    add_alpha(cop);
    add_weight(cop);
    add_fe(cop);

    auto* cg = sub("crystal-graph", "breadth-first crystal graph from a seed", detail::cmd_crystal_graph);
    add_weight(cg);
    cg->add_option("--steps", c.steps, "maximal number of operator applications (-1: unbounded)");
    cg->add_option("--max-size", c.max_size, "drop partitions larger than this");

    auto* ch = sub("character", "Weyl character, dimension and Casimir scalar", detail::cmd_character);
    add_weight(ch);
    ch->add_option("--n", c.n, "number of rows when --partition is used");

    auto* pi = sub("pieri", "filtrations of V and V* tensor Delta(lambda)", detail::cmd_pieri);
    add_weight(pi);
    add_alpha(pi);
    pi->add_option("--n", c.n, "number of rows when --partition is used");

    auto* fa = sub("fock-apply", "apply e, f or h in the wedge or partition model", detail::cmd_fock_apply);
    add_alpha(fa);
    add_weight(fa);
    add_fe(fa);
    fa->add_flag("--h", c.use_h, "apply h = [e, f]");
    fa->add_option("--wedge", c.wedge, "strictly decreasing wedge label");

    auto* fr = sub("fock-relations", "check the affine sl_p relations on a basis window", detail::cmd_fock_relations);
    fr->add_option("--model", c.model, "wedge | partition")->check(CLI::IsMember({"wedge", "partition"}));
    fr->add_option("--n", c.n, "wedge length");
    fr->add_option("--window", c.window, "entry bound |a_i| <= window");
    fr->add_option("--max-size", c.max_size, "largest partition size");

    auto* gc = sub("groth-check", "compare filtration sums with the wedge operators", detail::cmd_groth_check);
    add_alpha(gc);
    gc->add_option("--weight", c.weight, "dominant weight");

    auto* hv = sub("hecke-verify", "degenerate affine Hecke relations as F_p matrices", detail::cmd_hecke_verify);
    hv->add_option("--n", c.n, "dim V");
    hv->add_option("--N", c.N, "number of functor slots");
    hv->add_option("--d", c.d, "M = V^(x)d");

    auto* ed = sub("eigendims", "generalized eigenspaces of X vs prediction", detail::cmd_eigendims);
    ed->add_option("--n", c.n, "dim V");
    ed->add_option("--d", c.d, "M = V^(x)d");

    auto* cc = sub("classify-component", "component of the empty partition", detail::cmd_classify);
    cc->add_option("--max-size", c.max_size, "largest partition size");

    auto* br = sub("branch", "modular branching labels for S_d -> S_{d-1}", detail::cmd_branch);
    br->add_option("--partition", c.partition, "partition in the component of ()");

    auto* mx = sub("matrix", "dump an operator matrix as JSON", detail::cmd_matrix);
    mx->add_option("--op", c.op, "X | T | C | flip");
    mx->add_option("--i", c.index, "operator index");
    mx->add_option("--n", c.n, "dim V");
    mx->add_option("--N", c.N, "number of functor slots");
    mx->add_option("--d", c.d, "M = V^(x)d");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return bad_input;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(name)(c, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
}

} // namespace slpcat::cli
