// Command-line front end for the torus_lab headers.

#include "torus_lab/component_graph.hpp"
#include "torus_lab/enumerate.hpp"
#include "torus_lab/farey.hpp"
#include "torus_lab/homology.hpp"
#include "torus_lab/markov.hpp"
#include "torus_lab/snake.hpp"
#include "torus_lab/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <regex>
#include <string>

using namespace torus_lab;

namespace {

// A parsed operand: always a module, and a component when the text names one.
struct Operand {
    std::optional<Component> component;
    std::optional<SeqForm> seq;
    DecoratedModule module;
};

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

// Accepts S1- .. S3-, tau(...), Psi codes "a1:1|2" and sequence forms "a1:1,2" / "a1:1,2,".
Operand parse_operand(const std::string& raw) {
    std::string text = trim(raw);
    Operand op;
    if (text.size() == 3 && text[0] == 'S' && text[2] == '-') {
        int i = text[1] - '0';
        op.component = Component::negative_simple(i);
        op.module = DecoratedModule::negative_simple(i);
        return op;
    }
    if (text.rfind("tau(", 0) == 0 && text.back() == ')') {
        Operand inner = parse_operand(text.substr(4, text.size() - 5));
        require(inner.component.has_value(), ErrorKind::invalid_input, "tau needs a component");
        op.component = inner.component->tau_copy();
        op.module = inner.module;
        return op;
    }
    if (text.find('|') != std::string::npos) {
        op.component = Component::from_code(parse_psi(text));
        op.module = op.component->module();
        if (op.component->kind != ComponentKind::negative_simple) op.seq = op.component->seq();
        return op;
    }
    SeqForm s = parse_seq(text);
    op.seq = s;
    if (s.band) {
        BandWord b = seq_to_band(s);
        op.module = DecoratedModule::of_band(b);
        if (is_strongly_reduced_band(s)) op.component = Component::from_seq(band_to_seq(b));
    } else {
        op.module = DecoratedModule::of_string(seq_to_string(s));
        if (is_zero_form(s) || is_rigid(s)) op.component = Component::from_seq(s);
    }
    return op;
}

const Component& need_component(const Operand& op) {
    require(op.component.has_value(), ErrorKind::unsupported, "the operand is not a strongly reduced component");
    return *op.component;
}

std::string fmt_g(const GVector& g) {
    return "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}

GVector parse_vector(std::string text) {
    text = trim(text);
    if (!text.empty() && text.front() == '(') text.erase(0, 1);
    if (!text.empty() && text.back() == ')') text.pop_back();
    GVector v{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = text.find(',', pos);
        require((i < 2) == (next != std::string::npos), ErrorKind::invalid_input, "expected three integers");
        std::string part = trim(text.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        std::size_t used = 0;
        try {
            v[i] = std::stol(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        require(used == part.size() && !part.empty(), ErrorKind::invalid_input, "expected three integers");
        pos = next + 1;
    }
    return v;
}

// "ccw(1,2)^0", rotation optional.
CurveVector parse_curve(const std::string& text) {
    static const std::regex pattern(R"(\s*(ccw|cw|cl)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)(\^([0-2]))?\s*)");
    std::smatch m;
    require(std::regex_match(text, m, pattern), ErrorKind::invalid_input, "curves look like ccw(1,2)^0");
    CurveFamily f = m[1] == "ccw" ? CurveFamily::ccw : m[1] == "cw" ? CurveFamily::cw : CurveFamily::closed;
    int r = m[5].matched ? std::stoi(m[5]) : 0;
    return curve_vector(f, {std::stol(m[2]), std::stol(m[3])}, r);
}

std::optional<int> truncation(int p) { return p > 0 ? std::optional<int>(p) : std::nullopt; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strings, bands, g-vectors and Markov numbers for the once-punctured torus"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: TORUS_LAB_THREADS or all cores)");

    int max_n = 3, max_a = 2;
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--max-n", max_n, "largest number of entries")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-a", max_a, "largest entry")->check(CLI::NonNegativeNumber);
    };
    int p = 0;
    std::string field = "rational";
    auto add_p = [&](CLI::App* sub) {
        sub->add_option("-p,--truncation", p, "truncation level (default: nilpotency + 2)");
        sub->add_option("--field", field, "coefficient field")->check(CLI::IsMember({"rational", "prime"}));
    };

    auto* enumerate = app.add_subcommand("enumerate", "list components up to the bounds");
    std::string kind = "all";
    enumerate->add_option("--kind", kind)->check(CLI::IsMember({"rigid", "band", "all"}));
    add_bounds(enumerate);

    auto* encode = app.add_subcommand("encode", "sequence form to Psi code");
    std::string seq_text;
    encode->add_option("SEQ", seq_text)->required();
    auto* decode = app.add_subcommand("decode", "Psi code to sequence form");
    std::string code_text;
    decode->add_option("CODE", code_text)->required();

    auto* einv = app.add_subcommand("e-inv", "E(LEFT, RIGHT)");
    std::string left, right, e_method = "hom";
    einv->add_option("LEFT", left)->required();
    einv->add_option("RIGHT", right)->required();
    einv->add_option("--method", e_method)->check(CLI::IsMember({"comb", "hom", "pairs"}));
    add_p(einv);

    auto* gvec = app.add_subcommand("gvec", "g-vector of a module or component");
    std::string g_method = "formula", g_algebra = "lambda";
    gvec->add_option("CODE", code_text)->required();
    gvec->add_option("--method", g_method)->check(CLI::IsMember({"formula", "copresentation"}));
    gvec->add_option("--algebra", g_algebra)->check(CLI::IsMember({"lambda", "tau-prime"}));
    add_p(gvec);

    auto* graph = app.add_subcommand("graph", "component graph up to the bounds");
    std::string algebra = "lambda", format = "text";
    graph->add_option("--algebra", algebra)->check(CLI::IsMember({"lambda", "lambda-prime"}));
    graph->add_option("--format", format);
    add_bounds(graph);

    auto* mutate = app.add_subcommand("mutate", "the two completions of an edge");
    std::string z1, z2;
    mutate->add_option("Z1", z1)->required();
    mutate->add_option("Z2", z2)->required();

    auto* markov = app.add_subcommand("markov", "number of successor-closed subsets of a string");
    std::string m_method = "dp";
    bool laurent = false;
    markov->add_option("CODE", code_text)->required();
    markov->add_option("--method", m_method)->check(CLI::IsMember({"dp", "subsets", "recurrence", "cc"}));
    markov->add_flag("--laurent", laurent, "with --method cc, print the Caldero-Chapoton function too");

    auto* tree = app.add_subcommand("markov-tree", "Markov triples by mutation from (1,1,1)");
    int depth = 3;
    tree->add_option("--depth", depth)->check(CLI::NonNegativeNumber);

    auto* scan = app.add_subcommand("scan", "rigid sequences sharing a Markov number");
    add_bounds(scan);

    auto* farey = app.add_subcommand("farey", "curves, g-vectors and decompositions");
    farey->require_subcommand(1);
    auto* to_g = farey->add_subcommand("to-g", "coordinates of a curve, e.g. ccw(1,2)^0");
    std::string curve_text, vec_text;
    to_g->add_option("CURVE", curve_text)->required();
    auto* from_g = farey->add_subcommand("from-g", "curve with the given coordinates");
    from_g->add_option("VEC", vec_text)->required();
    auto* decompose = farey->add_subcommand("decompose", "positive combination of compatible curves");
    int cap = default_descent_cap;
    decompose->add_option("VEC", vec_text)->required();
    decompose->add_option("--cap", cap, "Stern-Brocot depth limit")->check(CLI::PositiveNumber);

    auto* snake = app.add_subcommand("snake", "perfect matchings of the snake graph of SIGNS ('.' for none)");
    std::string signs;
    snake->add_option("SIGNS", signs)->required();

    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    std::string suite = "fast";
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "fast"}));

    CLI11_PARSE(app, argc, argv);
    if (threads > 0) setenv("TORUS_LAB_THREADS", std::to_string(threads).c_str(), 1);
    FieldKind fk = field == "prime" ? FieldKind::prime : FieldKind::rational;

    try {
        if (*enumerate) {
            for (const Component& c : gamma_vertices(max_n, max_a)) {
                bool band = c.kind == ComponentKind::band;
                if ((kind == "rigid" && band) || (kind == "band" && !band)) continue;
                std::cout << code_string(c);
                if (c.kind != ComponentKind::negative_simple) std::cout << "\t" << format_seq(c.seq());
                std::cout << "\n";
            }
        } else if (*encode) {
            SeqForm s = parse_seq(seq_text);
            if (s.band) s = band_to_seq(seq_to_band(s));
            std::cout << format_psi(psi_encode(s)) << "\n";
        } else if (*decode) {
            Component c = Component::from_code(parse_psi(code_text));
            require(c.kind != ComponentKind::negative_simple, ErrorKind::no_psi_form,
                    "the negative simple has no sequence form");
            std::cout << format_seq(c.seq()) << "\n";
        } else if (*einv) {
            Operand l = parse_operand(left), r = parse_operand(right);
            if (e_method == "comb") {
                // the combinatorial criterion only decides whether E vanishes
                bool zero;
                if (r.component && r.component->kind == ComponentKind::negative_simple)
                    zero = l.module.dims()[r.component->vertex() - 1] == 0;
                else if (l.component && l.component->kind == ComponentKind::negative_simple)
                    zero = true;
                else {
                    require(l.seq && r.seq && !l.seq->band && !r.seq->band && l.seq->x1 == r.seq->x1,
                            ErrorKind::unsupported, "the combinatorial criterion compares strings with the same x1");
                    zero = e_vanishes(l.seq->entries, r.seq->entries);
                }
                std::cout << (zero ? "0" : "nonzero") << "\n";
            } else {
                EMethod m = e_method == "pairs" ? EMethod::pairs : EMethod::hom;
                std::cout << e_invariant(l.module, r.module, truncation(p), m, fk) << "\n";
            }
        } else if (*gvec) {
            Operand op = parse_operand(code_text);
            bool tau = g_algebra == "tau-prime";
            GVector g;
            if (g_method == "formula") {
                Component c = need_component(op);
                if (tau && c.kind != ComponentKind::tau_rigid && c.kind != ComponentKind::injective_shift)
                    c = c.tau_copy();
                g = g_formula(c);
            } else if (!tau) {
                require(!op.component || (op.component->kind != ComponentKind::tau_rigid &&
                                          op.component->kind != ComponentKind::injective_shift),
                        ErrorKind::unsupported, "use --algebra tau-prime for translates");
                Dims d = g_vector_copresentation(op.module, truncation(p), fk);
                g = {d[0], d[1], d[2]};
            } else if (op.module.kind == DecoratedModule::Kind::zero) {
                // the translate of a negative simple is the shifted injective
                Dims v = op.module.v;
                g = {-v[0], -v[1], -v[2]};
            } else if (op.module.kind == DecoratedModule::Kind::band) {
                Dims d = g_vector_copresentation(op.module, truncation(p), fk);
                g = {d[0], d[1], d[2]};
            } else {
                Dims d = g_vector_translate(op.module, truncation(p));
                g = {d[0], d[1], d[2]};
            }
            std::cout << fmt_g(g) << "\n";
        } else if (*graph) {
            ComponentGraph g = algebra == "lambda" ? build_gamma(max_n, max_a) : build_gamma_prime(max_n, max_a);
            if (format == "text") {
                auto cl = clusters(g);
                std::cout << "vertices " << g.vertices.size() << "\nedges " << g.edges.size() << "\nclusters "
                          << cl.size() << "\nconnected components " << connected_components(g).size() << "\n";
                for (const auto& c : cl) {
                    for (std::size_t i = 0; i < c.size(); ++i)
                        std::cout << (i ? "  " : "") << code_string(g.vertices[c[i]].component);
                    std::cout << "\n";
                }
            } else {
                std::cout << export_graph(g, format);
            }
        } else if (*mutate) {
            auto [a, b] = complete_cluster(need_component(parse_operand(z1)), need_component(parse_operand(z2)));
            std::cout << code_string(a) << "\n" << code_string(b) << "\n";
        } else if (*markov) {
            Operand op = parse_operand(code_text);
            if (m_method == "cc") {
                LaurentPoly cc = cc_function(need_component(op));
                if (laurent) std::cout << cc.to_string() << "\n";
                std::cout << cc.at_ones() << "\n";
            } else if (op.component && op.component->kind == ComponentKind::negative_simple) {
                std::cout << 1 << "\n";
            } else {
                require(op.seq && !op.seq->band, ErrorKind::not_a_string, "Markov numbers are defined for strings");
                StringWord w = seq_to_string(*op.seq);
                if (m_method == "dp")
                    std::cout << m_dp(w) << "\n";
                else if (m_method == "subsets")
                    std::cout << m_subsets(w) << "\n";
                else
                    std::cout << m_recurrence(*op.seq) << "\n";
            }
        } else if (*tree) {
            for (const TripleNode& n : triple_tree(depth)) {
                std::string path;
                for (int k : n.path) path += std::to_string(k);
                std::cout << (path.empty() ? "-" : path) << "\t" << n.triple.to_string() << "\n";
            }
        } else if (*scan) {
            auto seqs = rigid_sequences(max_n, max_a);
            auto found = collision_scan(seqs);
            std::cout << "sequences " << seqs.size() << "\ncollisions " << found.size() << "\n";
            for (const auto& c : found)
                std::cout << format_seq({Letter{Arrow::alpha1, false}, c.first, false}) << "\t"
                          << format_seq({Letter{Arrow::alpha1, false}, c.second, false}) << "\t" << c.value << "\n";
        } else if (*to_g) {
            std::cout << fmt_g(parse_curve(curve_text).vector()) << "\n";
        } else if (*from_g) {
            std::cout << format_curve(gvector_to_curve(parse_vector(vec_text))) << "\n";
        } else if (*decompose) {
            for (const auto& w : decompose_z3(parse_vector(vec_text), cap))
                std::cout << w.weight << "\t" << format_curve(w.curve) << "\t" << fmt_g(w.curve.vector()) << "\n";
        } else if (*snake) {
            SignFunction sf = parse_signs(signs == "." ? "" : signs);
            std::cout << matchings(sf) << "\n";
        } else if (*verify) {
            Suite s = suite == "all" ? Suite::all : Suite::fast;
            bool ok = true;
            auto criteria = acceptance_criteria();
            for (std::size_t i = 0; i < criteria.size(); ++i) {
                CriterionResult r = run_criterion(criteria[i], static_cast<int>(i) + 1, s);
                ok = ok && r.passed;
                std::cout << format_result(r) << std::endl;
            }
            return ok ? 0 : 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
