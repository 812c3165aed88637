#include "cli.hpp"

#include "vtree/cfe.hpp"
#include "vtree/codes.hpp"
#include "vtree/experiments.hpp"
#include "vtree/fastpath.hpp"
#include "vtree/measures.hpp"
#include "vtree/ops_inventory.hpp"
#include "vtree/qmf.hpp"
#include "vtree/trees.hpp"
#include "vtree/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace vtree::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Output {
    bool as_json = false;
    bool with_timing = true;
    std::string command;
    json input;
    json result;
    std::string text;

    void line(const std::string& s) { text += s + "\n"; }
};

json rational_json(const Rational& r) {
    return {{"num", r.num().to_string()}, {"den", r.den().to_string()}, {"repr", r.to_string()}};
}

json dyadic_json(const Dyadic& d) {
    return {{"num", d.numerator().to_string()},
            {"exp", d.exponent()},
            {"repr", d.to_string()},
            {"binary", d.to_binary_string()}};
}

json even_cfe_json(const EvenCfe& e) {
    json a = json::array();
    for (const BigInt& b : e.pds) a.push_back(b.to_string());
    return a;
}

TreeKind need_tree(const std::string& s) {
    auto k = parse_tree(s);
    if (!k) throw std::domain_error("unknown tree kind: " + s);
    return *k;
}

std::string double_str(double v, int prec = 12) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

} // namespace

const std::map<std::string, std::vector<std::string>>& dispatch_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"encode", {"encode", "codeword_length"}},
        {"decode", {"decode_prefix"}},
        {"cfe", {"cfe_expand", "even_normalize", "cfe_value"}},
        {"convergents", {"convergents", "cfe_value", "cfe_expand"}},
        {"fsm", {"fsm_run"}},
        {"qmf", {"qmf_forward", "qmf_bar", "even_normalize", "word_to_dyadic", "word_to_index"}},
        {"qmf-inv", {"qmf_inverse", "qmf_bar_inverse", "dyadic_to_word"}},
        {"hat", {"hat"}},
        {"doublehat", {"doublehat"}},
        {"minkowski", {"minkowski_q", "sb_inverse"}},
        {"tree", {"node_value", "inorder_linearize", "word_to_index", "index_to_word", "word_to_dyadic"}},
        {"seq", {"sequence", "index_to_word"}},
        {"coverage", {"coverage_lambda", "address_of"}},
        {"verify determinants", {"verify_determinants", "fsm_run"}},
        {"verify mediants", {"verify_mediants"}},
        {"verify bijection", {"bijectivity_scan"}},
        {"verify envelope", {"verify_envelope"}},
        {"verify parabola", {"verify_parabola"}},
        {"verify monotone", {"verify_monotone"}},
        {"measure entropy", {"entropy", "gauss_kuzmin", "ideal_length"}},
        {"measure khinchin", {"khinchin_estimate"}},
        {"measure integral", {"riemann_integral"}},
        {"measure arclength", {"arc_length"}},
        {"measure selfsim", {"self_similarity_stat"}},
        {"measure optimality", {"phi"}},
        {"probe-derivative", {"derivative_probe"}},
        {"plotdata", {"qmf_bar"}},
    };
    return table;
}

namespace {

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Output& o) {
    CLI::App app{"binary continued-fraction codes, question-mark maps and tree enumerations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    app.add_flag("--json", o.as_json, "machine-readable output");
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "omit the elapsed-time field from JSON output");
    bool big = false;
    app.add_flag("--big", big, "allow long-running parameter ranges");

    int exit_code = 0;

    // ---- encode / decode ----
    auto* c_encode = app.add_subcommand("encode", "encode an integer >= 1");
    std::string enc_b, enc_code = "ci";
    c_encode->add_option("b", enc_b)->required();
    c_encode->add_option("--code", enc_code, "ci|cii|cu|cv|cup|cvp");
    c_encode->callback([&] {
        o.command = "encode";
        auto flavor = parse_flavor(enc_code);
        if (!flavor) throw std::domain_error("unknown code flavor: " + enc_code);
        BigInt b = BigInt::parse(enc_b);
        BitWord w = encode(b, *flavor);
        BigInt len = codeword_length(b, *flavor);
        o.input = {{"b", enc_b}, {"code", enc_code}};
        o.result = {{"codeword", w.str()}, {"length", len.to_string()}};
        o.line(w.to_string());
    });

    auto* c_decode = app.add_subcommand("decode", "decode one codeword from the front of a word");
    std::string dec_w, dec_code = "ci";
    int dec_tail = 0;
    c_decode->add_option("word", dec_w)->required();
    c_decode->add_option("--code", dec_code, "ci|cii|cu|cv");
    c_decode->add_option("--tail", dec_tail, "implicit tail bit (0 or 1)")->check(CLI::Range(0, 1));
    c_decode->callback([&] {
        o.command = "decode";
        auto flavor = parse_flavor(dec_code);
        if (!flavor) throw std::domain_error("unknown code flavor: " + dec_code);
        DecodeResult r = decode_prefix(BitWord::parse(dec_w), *flavor, dec_tail);
        o.input = {{"word", dec_w}, {"code", dec_code}, {"tail", dec_tail}};
        if (r.aleph) {
            o.result = {{"aleph", true}, {"consumed", r.consumed}};
            o.line("aleph (terminator)");
        } else {
            o.result = {{"aleph", false}, {"value", r.value.to_string()}, {"consumed", r.consumed}};
            o.line(r.value.to_string() + "  (consumed " + std::to_string(r.consumed) + " bits)");
        }
    });

    // ---- cfe / convergents / fsm ----
    auto* c_cfe = app.add_subcommand("cfe", "continued fraction expansion of a rational");
    std::string cfe_x;
    bool cfe_even = false;
    c_cfe->add_option("x", cfe_x, "rational p/q")->required();
    c_cfe->add_flag("--even", cfe_even, "also print the even-length form");
    c_cfe->callback([&] {
        o.command = "cfe";
        Rational x = Rational::parse(cfe_x);
        Cfe c = cfe_expand(x);
        o.input = {{"x", cfe_x}};
        o.result = {{"cfe", format_cfe(c)}, {"value", cfe_value(c).to_string()}};
        o.line(format_cfe(c));
        if (cfe_even) {
            EvenCfe e = even_normalize(c);
            o.result["even"] = even_cfe_json(e);
            o.line("even: " + format_even(e));
        }
    });

    auto* c_conv = app.add_subcommand("convergents", "Perron-schema convergents");
    std::string conv_in;
    c_conv->add_option("input", conv_in, "a CFE like [0;7,15,1,292] or a rational p/q")->required();
    c_conv->callback([&] {
        o.command = "convergents";
        Cfe c = conv_in.find('[') != std::string::npos ? parse_cfe(conv_in)
                                                       : cfe_expand(Rational::parse(conv_in));
        auto cs = convergents(c);
        o.input = {{"input", conv_in}};
        json rows = json::array();
        for (size_t i = 0; i < cs.size(); ++i) {
            rows.push_back({{"i", i}, {"A", cs[i].a.to_string()}, {"B", cs[i].b.to_string()}});
            o.line("A_" + std::to_string(i) + "/B_" + std::to_string(i) + " = " +
                   cs[i].a.to_string() + "/" + cs[i].b.to_string());
        }
        o.result = {{"cfe", format_cfe(c)}, {"convergents", rows},
                    {"value", cfe_value(c).to_string()}};
    });

    auto* c_fsm = app.add_subcommand("fsm", "run the address state machine");
    std::string fsm_w;
    c_fsm->add_option("word", fsm_w)->required();
    c_fsm->callback([&] {
        o.command = "fsm";
        FsmState s = fsm_run(BitWord::parse(fsm_w));
        o.input = {{"word", fsm_w}};
        o.result = {{"state", s.to_string()}};
        o.line(s.to_string());
    });

    // ---- question mark family ----
    auto* c_qmf = app.add_subcommand("qmf", "address and dyadic image of a rational in (0,1)");
    std::string qmf_x;
    c_qmf->add_option("x", qmf_x, "rational p/q in (0,1)")->required();
    c_qmf->callback([&] {
        o.command = "qmf";
        Rational x = Rational::parse(qmf_x);
        EvenCfe e = even_normalize(cfe_expand(x));
        BitWord pre = qmf_pre_strip_word(x);
        BitWord v = qmf_forward(x);
        Dyadic d = qmf_bar(x);
        o.input = {{"x", qmf_x}};
        o.result = {{"address", v.str()},
                    {"index", word_to_index(v).to_string()},
                    {"even_cfe", even_cfe_json(e)},
                    {"pre_strip", pre.str()},
                    {"dyadic", dyadic_json(d)}};
        o.line("address: " + v.to_string());
        o.line("dyadic:  " + d.to_string() + "  (" + d.to_binary_string() + ")");
    });

    auto* c_qmfi = app.add_subcommand("qmf-inv", "rational at a tree address or dyadic");
    std::string qmfi_in;
    c_qmfi->add_option("input", qmfi_in, "address word, a/2^k, or .bits")->required();
    c_qmfi->callback([&] {
        o.command = "qmf-inv";
        o.input = {{"input", qmfi_in}};
        Rational x;
        if (qmfi_in.find('/') != std::string::npos || qmfi_in.front() == '.') {
            Dyadic d = Dyadic::parse(qmfi_in);
            x = qmf_bar_inverse(d);
        } else {
            x = qmf_inverse(BitWord::parse(qmfi_in));
        }
        o.result = {{"value", rational_json(x)}};
        o.line(x.to_string());
    });

    auto* c_hat = app.add_subcommand("hat", "positive-rational tree map");
    std::string hat_in;
    bool hat_inv = false;
    c_hat->add_option("input", hat_in)->required();
    c_hat->add_flag("--inv", hat_inv, "treat the input as an address");
    c_hat->callback([&] {
        o.command = "hat";
        o.input = {{"input", hat_in}, {"inv", hat_inv}};
        if (hat_inv) {
            Rational x = hat_inverse(BitWord::parse(hat_in));
            o.result = {{"value", rational_json(x)}};
            o.line(x.to_string());
        } else {
            BitWord v = hat_forward(Rational::parse(hat_in));
            o.result = {{"address", v.str()}};
            o.line(v.to_string());
        }
    });

    auto* c_dhat = app.add_subcommand("doublehat", "signed-rational tree map");
    std::string dhat_in;
    bool dhat_inv = false;
    c_dhat->add_option("input", dhat_in)->required();
    c_dhat->add_flag("--inv", dhat_inv, "treat the input as an address");
    c_dhat->callback([&] {
        o.command = "doublehat";
        o.input = {{"input", dhat_in}, {"inv", dhat_inv}};
        if (dhat_inv) {
            Rational x = doublehat_inverse(BitWord::parse(dhat_in));
            o.result = {{"value", rational_json(x)}};
            o.line(x.to_string());
        } else {
            BitWord v = doublehat_forward(Rational::parse(dhat_in));
            o.result = {{"address", v.str()}};
            o.line(v.to_string());
        }
    });

    auto* c_mink = app.add_subcommand("minkowski", "classical question mark of a rational in (0,1)");
    std::string mink_x;
    c_mink->add_option("x", mink_x)->required();
    c_mink->callback([&] {
        o.command = "minkowski";
        Rational x = Rational::parse(mink_x);
        Dyadic d = minkowski_q(x);
        Dyadic d2 = minkowski_q_unary(x);
        if (!(d == d2)) throw std::logic_error("minkowski: route disagreement");
        BitWord sb = sb_forward(x);
        o.input = {{"x", mink_x}};
        o.result = {{"value", dyadic_json(d)}, {"sb_address", sb.str()},
                    {"routes_agree", true}};
        o.line(d.to_string() + "  (" + d.to_binary_string() + ")");
        o.line("sb address: " + sb.to_string());
    });

    // ---- trees ----
    auto* c_tree = app.add_subcommand("tree", "list nodes of a tree");
    std::string tree_kind = "v10", tree_fmt = "text", tree_trav = "breadth";
    unsigned tree_depth = 4;
    c_tree->add_option("--kind", tree_kind, "v|v1|v10|sb|vdc");
    c_tree->add_option("--depth", tree_depth)->check(CLI::Range(1, 24));
    c_tree->add_option("--format", tree_fmt, "text|json|csv|dot");
    c_tree->add_option("--traversal", tree_trav, "breadth|inorder");
    c_tree->callback([&] {
        o.command = "tree";
        TreeKind kind = need_tree(tree_kind);
        if (tree_fmt == "dot" && tree_depth > 6)
            throw std::domain_error("tree: dot output is limited to depth <= 6");
        if (tree_depth > 16 && !big)
            throw std::domain_error("tree: depth > 16 requires --big");
        o.input = {{"kind", tree_kind}, {"depth", tree_depth},
                   {"format", tree_fmt}, {"traversal", tree_trav}};
        json rows = json::array();
        auto emit = [&](const BitWord& v) {
            TreeLabel l = node_value(kind, v);
            BigInt n = word_to_index(v);
            if (tree_fmt == "csv")
                o.line(n.to_string() + "," + v.to_string() + "," + label_string(l));
            else if (tree_fmt == "dot") {
                o.line("  n" + n.to_string() + " [label=\"" + n.to_string() + "\\n" +
                       v.to_string() + "\\n" + label_string(l) + "\"];");
                if (v.size() + 1 < tree_depth) {
                    BigInt l2 = n * BigInt(2);
                    o.line("  n" + n.to_string() + " -> n" + l2.to_string() + ";");
                    o.line("  n" + n.to_string() + " -> n" + (l2 + BigInt(1)).to_string() + ";");
                }
            } else
                o.line(n.to_string() + "  " + v.to_string() + "  " + label_string(l));
            rows.push_back({{"index", n.to_string()}, {"address", v.str()},
                            {"label", label_string(l)}});
        };
        if (tree_fmt == "csv") o.line("index,address,label");
        if (tree_fmt == "dot") o.line("digraph tree {");
        if (tree_trav == "inorder") {
            // addresses in symmetric order, labels sorted for the rational kinds
            std::vector<TreeLabel> labels = inorder_labels(kind, tree_depth);
            if (labels.size() != (uint64_t(1) << tree_depth) - 1)
                throw std::logic_error("tree: inorder size mismatch");
            std::function<void(BitWord)> rec = [&](BitWord v) {
                if (v.size() + 1 < tree_depth) rec(v.append(0));
                emit(v);
                if (v.size() + 1 < tree_depth) rec(v.append(1));
            };
            rec(BitWord());
        } else {
            uint64_t count = (1ull << tree_depth) - 1;
            for (uint64_t n = 1; n <= count; ++n)
                emit(index_to_word(BigInt::from_uint64(n)));
        }
        if (tree_fmt == "dot") o.line("}");
        o.result = {{"nodes", rows}};
    });

    auto* c_seq = app.add_subcommand("seq", "breadth-first value sequence");
    std::string seq_kind = "v10";
    uint64_t seq_n = 15;
    c_seq->add_option("--kind", seq_kind);
    c_seq->add_option("-n,--count", seq_n)->check(CLI::Range(uint64_t(1), uint64_t(1) << 22));
    c_seq->callback([&] {
        o.command = "seq";
        TreeKind kind = need_tree(seq_kind);
        auto labels = sequence(kind, seq_n);
        o.input = {{"kind", seq_kind}, {"n", seq_n}};
        json arr = json::array();
        std::string linetext;
        for (size_t i = 0; i < labels.size(); ++i) {
            arr.push_back(label_string(labels[i]));
            linetext += (i ? ", " : "") + label_string(labels[i]);
        }
        o.result = {{"values", arr}};
        o.line(linetext);
    });

    auto* c_cov = app.add_subcommand("coverage", "depth statistics per denominator");
    std::string cov_kind = "v10";
    uint64_t cov_qmax = 64, cov_q = 0;
    c_cov->add_option("--kind", cov_kind);
    c_cov->add_option("--qmax", cov_qmax);
    c_cov->add_option("--q", cov_q, "single denominator");
    c_cov->callback([&] {
        o.command = "coverage";
        TreeKind kind = need_tree(cov_kind);
        o.input = {{"kind", cov_kind}, {"qmax", cov_qmax}, {"q", cov_q}};
        if (cov_qmax > 4096 && !big)
            throw std::domain_error("coverage: qmax > 4096 requires --big");
        if (cov_q >= 2) {
            CoverageStat st = coverage_lambda(kind, cov_q);
            o.result = {{"q", st.q}, {"max_len", st.max_len}, {"lambda", st.lambda},
                        {"worst", st.worst.to_string()}, {"code_len", st.code_len}};
            o.line("q = " + std::to_string(st.q) + ": max |v| = " + std::to_string(st.max_len) +
                   " at " + st.worst.to_string() + ", lambda = " + double_str(st.lambda, 6));
        } else {
            double worst = 0.0;
            uint64_t at = 0;
            for (uint64_t q = 2; q <= cov_qmax; ++q) {
                CoverageStat st = coverage_lambda(kind, q);
                if (st.lambda > worst) { worst = st.lambda; at = q; }
            }
            o.result = {{"qmax", cov_qmax}, {"max_lambda", worst}, {"argmax_q", at}};
            o.line("max lambda over q <= " + std::to_string(cov_qmax) + ": " +
                   double_str(worst, 6) + " at q = " + std::to_string(at));
        }
    });

    // ---- verify ----
    auto* c_verify = app.add_subcommand("verify", "run a verification");
    c_verify->require_subcommand(1);

    auto* v_det = c_verify->add_subcommand("determinants", "neighbour determinants");
    std::string det_kind = "v10";
    unsigned det_depth = 12;
    v_det->add_option("--kind", det_kind);
    v_det->add_option("--depth", det_depth)->check(CLI::Range(1, 30));
    v_det->callback([&] {
        o.command = "verify determinants";
        if (det_depth > 22 && !big) throw std::domain_error("verify determinants: depth > 22 requires --big");
        auto rep = verify_determinants(need_tree(det_kind), det_depth);
        json hist = json::object();
        for (auto& [e, c] : rep.by_exponent) hist[std::to_string(e)] = c;
        o.input = {{"kind", det_kind}, {"depth", det_depth}};
        o.result = {{"pairs", rep.pairs}, {"classified", rep.classified},
                    {"failures", rep.failure_count}, {"by_exponent", hist},
                    {"failure_samples", rep.failures}};
        o.line(std::to_string(rep.pairs) + " pairs, " + std::to_string(rep.failure_count) + " failures");
        for (const auto& f : rep.failures) o.line("  " + f);
        if (!rep.ok()) exit_code = 1;
    });

    auto* v_med = c_verify->add_subcommand("mediants", "weighted mediant identity");
    std::string med_kind = "v10";
    unsigned med_depth = 12;
    v_med->add_option("--kind", med_kind);
    v_med->add_option("--depth", med_depth)->check(CLI::Range(2, 30));
    v_med->callback([&] {
        o.command = "verify mediants";
        if (med_depth > 20 && !big) throw std::domain_error("verify mediants: depth > 20 requires --big");
        auto rep = verify_mediants(need_tree(med_kind), med_depth);
        o.input = {{"kind", med_kind}, {"depth", med_depth}};
        o.result = {{"interior", rep.interior}, {"failures", rep.failure_count},
                    {"failure_samples", rep.failures}};
        o.line(std::to_string(rep.interior) + " interior nodes, " +
               std::to_string(rep.failure_count) + " failures");
        if (!rep.ok()) exit_code = 1;
    });

    auto* v_bij = c_verify->add_subcommand("bijection", "every fraction exactly once");
    std::string bij_kind = "v10";
    unsigned bij_depth = 22;
    uint64_t bij_qmax = 64;
    v_bij->add_option("--kind", bij_kind);
    v_bij->add_option("--depth", bij_depth)->check(CLI::Range(1, 26));
    v_bij->add_option("--qmax", bij_qmax);
    v_bij->callback([&] {
        o.command = "verify bijection";
        if (bij_depth > 24 && !big) throw std::domain_error("verify bijection: depth > 24 requires --big");
        auto rep = bijectivity_scan(need_tree(bij_kind), bij_depth, bij_qmax);
        o.input = {{"kind", bij_kind}, {"depth", bij_depth}, {"qmax", bij_qmax}};
        o.result = {{"target", rep.target_count}, {"found", rep.found_count},
                    {"duplicates", rep.duplicates}, {"missing", rep.missing}};
        o.line(std::to_string(rep.found_count) + " of " + std::to_string(rep.target_count) +
               " target fractions found, " + std::to_string(rep.duplicates.size()) + " duplicates, " +
               std::to_string(rep.missing.size()) + " missing");
        if (!rep.ok()) exit_code = 1;
    });

    auto* v_env = c_verify->add_subcommand("envelope", "linear envelope bounds");
    unsigned env_k = 12;
    v_env->add_option("--k", env_k)->check(CLI::Range(1, 20));
    v_env->callback([&] {
        o.command = "verify envelope";
        if (env_k > 16 && !big) throw std::domain_error("verify envelope: k > 16 requires --big");
        auto rep = verify_envelope(env_k);
        o.input = {{"k", env_k}};
        o.result = {{"points", rep.points}, {"violations", rep.violation_count},
                    {"left_touch", rep.left_touch}, {"mid_touch", rep.mid_touch},
                    {"right_touch", rep.right_touch},
                    {"equality_anomalies", rep.equality_anomalies}};
        o.line(std::to_string(rep.points) + " points, " + std::to_string(rep.violation_count) +
               " violations, touches L/M/R = " + std::to_string(rep.left_touch) + "/" +
               std::to_string(rep.mid_touch) + "/" + std::to_string(rep.right_touch));
        if (!rep.ok()) exit_code = 1;
    });

    auto* v_par = c_verify->add_subcommand("parabola", "parabolic lower bound");
    unsigned par_k = 8;
    v_par->add_option("--kmax", par_k)->check(CLI::Range(0, 16));
    v_par->callback([&] {
        o.command = "verify parabola";
        auto rep = verify_parabola(par_k);
        o.input = {{"kmax", par_k}};
        o.result = {{"points", rep.points}, {"violations", rep.violation_count},
                    {"anchors_ok", rep.anchors_ok},
                    {"violation_samples", rep.violations},
                    {"equality_anomalies", rep.equality_anomalies}};
        o.line(std::to_string(rep.points) + " points, " + std::to_string(rep.violation_count) +
               " violations, anchors " + (rep.anchors_ok ? "exact" : "broken"));
        for (size_t i = 0; i < rep.violations.size() && i < 3; ++i) o.line("  " + rep.violations[i]);
        if (!rep.ok()) exit_code = 1;
    });

    auto* v_mono = c_verify->add_subcommand("monotone", "order preservation on random pairs");
    uint64_t mono_samples = 10000, mono_qmax = 1000000, mono_seed = 0xC0FFEE;
    v_mono->add_option("--samples", mono_samples);
    v_mono->add_option("--qmax", mono_qmax);
    v_mono->add_option("--seed", mono_seed);
    v_mono->callback([&] {
        o.command = "verify monotone";
        auto rep = verify_monotone(mono_samples, mono_qmax, mono_seed);
        o.input = {{"samples", mono_samples}, {"qmax", mono_qmax}, {"seed", mono_seed}};
        o.result = {{"samples", rep.samples}, {"failures", rep.failures}};
        o.line(std::to_string(rep.samples) + " pairs, " + std::to_string(rep.failures) + " failures");
        if (!rep.ok()) exit_code = 1;
    });

    // ---- measure ----
    auto* c_measure = app.add_subcommand("measure", "numerical measurements");
    c_measure->require_subcommand(1);

    auto* m_ent = c_measure->add_subcommand("entropy", "average codeword length");
    std::string ent_code = "ci";
    m_ent->add_option("--code", ent_code, "levy|gk|ci|sb");
    m_ent->callback([&] {
        o.command = "measure entropy";
        EntropyCode code;
        if (ent_code == "levy") code = EntropyCode::Levy;
        else if (ent_code == "gk") code = EntropyCode::GK;
        else if (ent_code == "ci") code = EntropyCode::CICII;
        else if (ent_code == "sb") code = EntropyCode::SB;
        else throw std::domain_error("unknown entropy code: " + ent_code);
        EntropyResult r = entropy(code);
        o.input = {{"code", ent_code}};
        json table = json::array();
        for (int b = 1; b <= 4; ++b)
            table.push_back({{"b", b}, {"mu", gauss_kuzmin(b)}, {"l_gk", ideal_length(b)}});
        o.result = {{"divergent", r.divergent}, {"value", r.value},
                    {"error_bound", r.error_bound}, {"terms", r.terms},
                    {"measure_head", table}};
        if (r.divergent)
            o.line("divergent (partial sum " + double_str(r.value, 6) + " at " +
                   std::to_string(r.terms) + " terms)");
        else
            o.line(double_str(r.value, 10) + " +/- " + double_str(r.error_bound, 3));
    });

    auto* m_khi = c_measure->add_subcommand("khinchin", "geometric-mean constant");
    uint64_t khi_bmax = 10'000'000;
    m_khi->add_option("--bmax", khi_bmax)->check(CLI::Range(uint64_t(1), uint64_t(2'000'000'000)));
    m_khi->callback([&] {
        o.command = "measure khinchin";
        if (khi_bmax > 100'000'000 && !big) throw std::domain_error("measure khinchin: bmax > 1e8 requires --big");
        auto r = khinchin_estimate(khi_bmax);
        o.input = {{"bmax", khi_bmax}};
        o.result = {{"value", r.value}, {"tail_bound", r.tail_bound}};
        o.line(double_str(r.value, 10) + "  (tail bound " + double_str(r.tail_bound, 3) + ")");
    });

    auto* m_int = c_measure->add_subcommand("integral", "Riemann sum of the diagonal distance");
    unsigned int_k = 16;
    bool int_exact = false;
    m_int->add_option("--k", int_k)->check(CLI::Range(1, 30));
    m_int->add_flag("--exact", int_exact, "exact rational accumulation (k <= 16)");
    m_int->callback([&] {
        o.command = "measure integral";
        if (int_k > 22 && !big) throw std::domain_error("measure integral: k > 22 requires --big");
        ProgressFn progress;
        if (big && int_k > 22)
            progress = [&err](uint64_t done, uint64_t total) {
                err << "integral: " << done << " / " << total << " grid points\n";
            };
        auto r = riemann_integral(int_k, int_exact, progress);
        o.input = {{"k", int_k}, {"exact", int_exact}};
        o.result = {{"value", r.value}};
        o.line("I(" + std::to_string(int_k) + ") = " + double_str(r.value, 10));
        if (r.exact) {
            o.result["exact"] = r.exact->to_string();
            o.line("exact: " + r.exact->to_string());
        }
    });

    auto* m_arc = c_measure->add_subcommand("arclength", "polygonal arc length");
    unsigned arc_k = 16;
    m_arc->add_option("--k", arc_k)->check(CLI::Range(1, 30));
    m_arc->callback([&] {
        o.command = "measure arclength";
        if (arc_k > 22 && !big) throw std::domain_error("measure arclength: k > 22 requires --big");
        ProgressFn progress;
        if (big && arc_k > 22)
            progress = [&err](uint64_t done, uint64_t total) {
                err << "arclength: " << done << " / " << total << " grid points\n";
            };
        double v = arc_length(arc_k, progress);
        o.input = {{"k", arc_k}};
        o.result = {{"value", v}};
        o.line("L(" + std::to_string(arc_k) + ") = " + double_str(v, 10));
    });

    auto* m_ss = c_measure->add_subcommand("selfsim", "self-similarity deviation");
    unsigned ss_k = 12;
    m_ss->add_option("--k", ss_k)->check(CLI::Range(1, 20));
    m_ss->callback([&] {
        o.command = "measure selfsim";
        auto st = self_similarity_stat(ss_k);
        o.input = {{"k", ss_k}};
        o.result = {{"max_deviation", st.max_deviation}, {"arg_x", st.arg_x}};
        o.line("max |f(x/2) - f(x)/2| = " + double_str(st.max_deviation, 6) + " at x = " +
               double_str(st.arg_x, 6));
    });

    auto* m_opt = c_measure->add_subcommand("optimality", "integral-wordlength obstruction");
    m_opt->callback([&] {
        o.command = "measure optimality";
        auto d = optimality_diagnostic();
        o.input = json::object();
        o.result = {{"lambda_floor", d.lambda_floor}, {"kraft_sum_64", d.kraft_sum},
                    {"kraft_exceeds_one", d.kraft_exceeds_one}};
        o.line("lambda floor " + double_str(d.lambda_floor, 6) + ", Kraft sum over b <= 64: " +
               double_str(d.kraft_sum, 6) + (d.kraft_exceeds_one ? " > 1" : " <= 1"));
    });

    // ---- probes and plots ----
    auto* c_probe = app.add_subcommand("probe-derivative", "one-sided difference quotients");
    std::string probe_x, probe_side = "left";
    uint64_t probe_n = 24;
    c_probe->add_option("x", probe_x)->required();
    c_probe->add_option("--side", probe_side, "left|right");
    c_probe->add_option("--n", probe_n)->check(CLI::Range(uint64_t(1), uint64_t(200)));
    c_probe->callback([&] {
        o.command = "probe-derivative";
        Side side;
        if (probe_side == "left") side = Side::Left;
        else if (probe_side == "right") side = Side::Right;
        else throw std::domain_error("side must be left or right");
        Rational x = Rational::parse(probe_x);
        auto r = derivative_probe(x, side, probe_n);
        o.input = {{"x", probe_x}, {"side", probe_side}, {"n", probe_n}};
        o.result = {{"x_n", r.x_n.to_string()},
                    {"quotient", r.quotient.to_string()},
                    {"quotient_approx", r.quotient.to_double()},
                    {"predicted", r.predicted.to_string()},
                    {"predicted_approx", r.predicted.to_double()},
                    {"image", dyadic_json(r.image)},
                    {"perturbed", dyadic_json(r.perturbed)}};
        o.line("quotient:  " + r.quotient.to_string() + " ~ " + double_str(r.quotient.to_double(), 10));
        o.line("predicted: " + r.predicted.to_string() + " ~ " + double_str(r.predicted.to_double(), 10));
    });

    auto* c_plot = app.add_subcommand("plotdata", "CSV of (x, image, image - x) on a dyadic grid");
    unsigned plot_k = 8;
    c_plot->add_option("--k", plot_k)->check(CLI::Range(1, 24));
    c_plot->callback([&] {
        o.command = "plotdata";
        if (plot_k > 16 && !big) throw std::domain_error("plotdata: k > 16 requires --big");
        o.input = {{"k", plot_k}};
        o.line("x,image,diff");
        uint64_t n = 1ull << plot_k;
        for (uint64_t a = 1; a < n; ++a) {
            double x = std::ldexp(double(a), -int(plot_k));
            double f = fast::qmf_bar_f64(a, plot_k);
            o.line(double_str(x, 10) + "," + double_str(f, 10) + "," + double_str(f - x, 10));
        }
        o.result = {{"rows", n - 1}};
    });

    // global flags (--json, --big, ...) may follow the subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
            s->fallthrough();
            enable_fallthrough(s);
        }
    };
    enable_fallthrough(&app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }
    if (no_timing) o.with_timing = false;
    return exit_code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Output o;
    auto t0 = std::chrono::steady_clock::now();
    int code;
    try {
        code = run_impl(args, out, err, o);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (o.command.empty()) return code;   // help/version path
    if (o.as_json) {
        json wrapper = {{"command", o.command}, {"version", kVersion},
                        {"input", o.input}, {"result", o.result},
                        {"exit_code", code}};
        if (o.with_timing) {
            auto ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0).count();
            wrapper["elapsed_ms"] = ms;
        }
        out << wrapper.dump(2) << "\n";
    } else {
        out << o.text;
    }
    return code;
}

} // namespace vtree::cli
