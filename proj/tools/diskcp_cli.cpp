// diskcp: command-line front end. Every subcommand writes one JSON document
// to stdout; --verbose adds a human-readable summary on stderr.
//
// Exit codes: 0 ok, 1 module error, 2 domain error (|z0| >= 1, ...), 3 parse error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "diskcp/errors.hpp"
#include "diskcp/json_io.hpp"
#include "diskcp/normal_forms.hpp"
#include "diskcp/operator_models.hpp"

using namespace diskcp;
using io::Json;

namespace {

struct MapFlags {
    double theta = 0.0;
    double z0_re = 0.0;
    double z0_im = 0.0;
    std::vector<CLI::Option*> options;

    void attach(CLI::App* app) {
        options.push_back(app->add_option("--theta", theta, "rotation parameter theta"));
        options.push_back(app->add_option("--z0-re", z0_re, "real part of z0"));
        options.push_back(app->add_option("--z0-im", z0_im, "imaginary part of z0"));
    }
    bool given() const {
        return std::any_of(options.begin(), options.end(), [](const CLI::Option* o) { return o->count() > 0; });
    }
    DiskAutomorphism build() const { return DiskAutomorphism(theta, {z0_re, z0_im}); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json json_argument(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse(arg);
    return io::parse(read_file(arg));
}

Json envelope(const std::string& command) {
    return Json{{"schema_version", io::kSchemaVersion}, {"command", command}};
}

std::string class_name(const AutomorphismClass& c) { return to_string(c.tag); }

Json invariant_json(const ConjugacyInvariant& inv) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HyperbolicInvariant>) {
                return {{"kind", "hyperbolic"}, {"a", v.a}};
            } else if constexpr (std::is_same_v<T, EllipticInvariant>) {
                return {{"kind", "elliptic"}, {"mu", io::to_json(v.mu)}};
            } else if constexpr (std::is_same_v<T, ParabolicInvariant>) {
                return {{"kind", "parabolic"}, {"orientation", v.orientation}};
            } else {
                return {{"kind", "none"}};
            }
        },
        inv);
}

std::vector<std::int64_t> parse_n_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("--N-list expects comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw ParseError("--N-list is empty");
    return out;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const DomainError*>(&e) != nullptr) return 2;
    if (dynamic_cast<const ParseError*>(&e) != nullptr) return 3;
    return 1;
}

void print_error(const std::string& code, const std::string& message) {
    Json j{{"schema_version", io::kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
    std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Disk automorphisms, their crossed products and truncated representations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool verbose = false;
    std::uint64_t seed = 1;
    app.add_flag("--verbose,-v", verbose, "summary on stderr");
    app.add_option("--seed", seed, "seed for randomized checks");

    // classify
    MapFlags cls_map;
    double cls_tol = 1e-12;
    auto* classify_cmd = app.add_subcommand("classify", "class, margin, fixed points and multipliers");
    cls_map.attach(classify_cmd);
    classify_cmd->add_option("--tol", cls_tol, "classification tolerance");

    // orbit
    MapFlags orb_map;
    std::string orb_x = "0";
    std::vector<std::int64_t> orb_range{-10, 10};
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit points and the orbit closure");
    orb_map.attach(orbit_cmd);
    orbit_cmd->add_option("--x", orb_x, "base point, e.g. 0.2i or 0.3-0.1i");
    orbit_cmd->add_option("--range", orb_range, "lo hi")->expected(2);

    // normal-form
    MapFlags nf_map;
    auto* nf_cmd = app.add_subcommand("normal-form", "canonical representative and conjugator");
    nf_map.attach(nf_cmd);

    // conjugacy
    double conj_a = 1.0 / 3.0;
    double conj_b = 2.0 / 3.0;
    int conj_samples = 200;
    std::string conj_phi, conj_psi;
    auto* conj_cmd = app.add_subcommand("conjugacy", "arc-length conjugacy between hyperbolic normal forms");
    conj_cmd->add_option("--a", conj_a, "parameter of phi = (z + a)/(1 + a z)");
    conj_cmd->add_option("--b", conj_b, "parameter of psi = (z + b)/(1 + b z)");
    conj_cmd->add_option("--samples", conj_samples, "number of random sample points");
    conj_cmd->add_option("--phi", conj_phi, "first map as JSON (inline or file); overrides --a");
    conj_cmd->add_option("--psi", conj_psi, "second map as JSON (inline or file); overrides --b");

    // rep-check
    std::string rep_kind = "hyperbolic";
    std::string rep_x = "0.2i";
    std::int64_t rep_n = 20;
    std::string rep_n_list;
    std::string rep_element;
    std::string rep_matrix_out;
    std::string rep_csv_out;
    std::int64_t rep_p = 1, rep_q = 3;
    std::string rep_eta = "1", rep_lambda = "1";
    double rep_char_theta = 0.0;
    int rep_epsilon = 1;
    MapFlags rep_map;
    auto* rep_cmd = app.add_subcommand("rep-check", "covariance residuals and norms of truncated representations");
    rep_map.attach(rep_cmd);
    rep_cmd->add_option("--kind", rep_kind, "hyperbolic | parabolic | character | elliptic-circle | elliptic-rational")
        ->check(CLI::IsMember({"hyperbolic", "parabolic", "character", "elliptic-circle", "elliptic-rational"}));
    rep_cmd->add_option("--x", rep_x, "orbit base point (elliptic-circle: radius times fibre)");
    rep_cmd->add_option("--N", rep_n, "half width");
    rep_cmd->add_option("--N-list", rep_n_list, "comma-separated half widths");
    rep_cmd->add_option("--element", rep_element, "crossed-product element as JSON (default: A)");
    rep_cmd->add_option("--matrix-out", rep_matrix_out, "write the matrix at the last N as JSON");
    rep_cmd->add_option("--csv-out", rep_csv_out, "write the matrix at the last N as CSV");
    rep_cmd->add_option("--p", rep_p, "elliptic-rational numerator");
    rep_cmd->add_option("--q", rep_q, "elliptic-rational denominator");
    rep_cmd->add_option("--eta", rep_eta, "elliptic-rational phase of U");
    rep_cmd->add_option("--lambda", rep_lambda, "elliptic-rational diagonal base point");
    rep_cmd->add_option("--char-theta", rep_char_theta, "character: U -> exp(2 i pi theta)");
    rep_cmd->add_option("--epsilon", rep_epsilon, "character: fixed point +1 or -1")->check(CLI::IsMember({-1, 1}));

    // symbol
    double sym_a = 0.5;
    std::string sym_element;
    std::string sym_x = "0.2i";
    std::int64_t sym_n = 40;
    std::vector<std::int64_t> sym_margins{5, 10, 20};
    auto* sym_cmd = app.add_subcommand("symbol", "symbol pair and block decomposition residual tails");
    sym_cmd->add_option("--a", sym_a, "hyperbolic normal form parameter");
    sym_cmd->add_option("--element", sym_element, "crossed-product element as JSON (default: A)");
    sym_cmd->add_option("--x", sym_x, "orbit base point");
    sym_cmd->add_option("--N", sym_n, "half width");
    sym_cmd->add_option("--margins", sym_margins, "tail margins M");

    // spectrum-closure
    std::string spec_model;
    std::string spec_in;
    int spec_axioms = 0;
    auto* spec_cmd = app.add_subcommand("spectrum-closure", "closure of a finite spectrum description");
    spec_cmd->add_option("--model", spec_model, "hyperbolic | parabolic | elliptic_irrational | elliptic_rational")
        ->required();
    spec_cmd->add_option("--in", spec_in, "SpectrumSet JSON (inline or file)");
    spec_cmd->add_option("--axioms", spec_axioms, "also run the closure-axiom check on this many random sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("ParseError", e.what());
        return 3;
    }

    std::ostringstream summary;
    try {
        Json out;
        if (*classify_cmd) {
            const DiskAutomorphism phi = cls_map.build();
            const AutomorphismClass c = classify(phi, cls_tol);
            out = envelope("classify");
            out["map"] = io::to_json(phi);
            out["class"] = class_name(c);
            out["margin"] = c.margin;
            if (c.tag != ClassTag::Identity) {
                const FixedPointData fp = fixed_points(phi);
                out["fixed_points"] = io::to_json(fp.points);
                out["multipliers"] = fp.multipliers;
            } else {
                out["fixed_points"] = Json::array();
                out["multipliers"] = Json::array();
            }
            summary << "class " << out["class"].get<std::string>() << ", margin " << c.margin;
        } else if (*orbit_cmd) {
            const DiskAutomorphism phi = orb_map.build();
            const Complex x = io::parse_complex_literal(orb_x);
            if (orb_range[0] > orb_range[1]) throw DomainError("--range lo must not exceed hi");
            const auto pts = orbit(phi, x, orb_range[0], orb_range[1]);
            out = envelope("orbit");
            out["map"] = io::to_json(phi);
            out["x"] = io::to_json(x);
            out["range"] = orb_range;
            out["points"] = io::to_json(pts);
            const AutomorphismClass c = classify(phi);
            out["class"] = class_name(c);
            if (c.tag != ClassTag::Identity) {
                const OrbitClosureDescr cl = orbit_closure(phi, x);
                out["closure"] = {{"kind", to_string(cl.kind)},
                                  {"limit_points", io::to_json(cl.limit_points)},
                                  {"circle_center", io::to_json(cl.circle_center)},
                                  {"circle_radius", cl.circle_radius}};
            }
            summary << pts.size() << " orbit points, class " << class_name(c);
        } else if (*nf_cmd) {
            const DiskAutomorphism phi = nf_map.build();
            const NormalFormResult r = normal_form(phi);
            out = envelope("normal-form");
            out["map"] = io::to_json(phi);
            out["class"] = class_name(r.cls);
            out["canonical"] = io::to_json(r.canonical);
            out["conjugator"] = io::to_json(r.conjugator);
            out["invariant"] = invariant_json(r.invariant);
            out["residual"] = r.residual;
            summary << "class " << class_name(r.cls) << ", residual " << r.residual;
        } else if (*conj_cmd) {
            const DiskAutomorphism phi = conj_phi.empty() ? DiskAutomorphism::hyperbolic_normal_form(conj_a)
                                                          : io::automorphism_from_json(json_argument(conj_phi));
            const DiskAutomorphism psi = conj_psi.empty() ? DiskAutomorphism::hyperbolic_normal_form(conj_b)
                                                          : io::automorphism_from_json(json_argument(conj_psi));
            out = envelope("conjugacy");
            out["phi"] = io::to_json(phi);
            out["psi"] = io::to_json(psi);
            const bool conjugate = are_topologically_conjugate(phi, psi);
            out["topologically_conjugate"] = conjugate;
            const NormalFormResult nphi = normal_form(phi);
            const NormalFormResult npsi = normal_form(psi);
            if (nphi.cls.tag == ClassTag::Hyperbolic && npsi.cls.tag == ClassTag::Hyperbolic) {
                const HyperbolicConjugacy mu(nphi.canonical, npsi.canonical);
                const HyperbolicConjugacy back = mu.reversed();
                std::mt19937_64 rng(seed);
                std::uniform_real_distribution<double> unit(0.0, 1.0);
                std::vector<Complex> zs, images;
                double roundtrip = 0.0;
                for (int i = 0; i < conj_samples; ++i) {
                    const Complex z = std::polar(0.95 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
                    const Complex w = mu(z);
                    zs.push_back(z);
                    images.push_back(w);
                    roundtrip = std::max(roundtrip, std::abs(back(w) - z));
                }
                out["normal_forms"] = {io::to_json(nphi.canonical), io::to_json(npsi.canonical)};
                out["points"] = io::to_json(zs);
                out["images"] = io::to_json(images);
                out["equivariance_residual"] = mu.equivariance_residual(zs);
                out["roundtrip_residual"] = roundtrip;
                summary << "equivariance " << out["equivariance_residual"].get<double>() << ", roundtrip "
                        << roundtrip;
            } else {
                summary << "topologically conjugate: " << (conjugate ? "yes" : "no");
            }
        } else if (*rep_cmd) {
            DiskAutomorphism phi;
            RepKind kind;
            const Complex x = io::parse_complex_literal(rep_x);
            if (rep_kind == "hyperbolic") {
                phi = rep_map.given() ? rep_map.build() : DiskAutomorphism::hyperbolic_normal_form(0.5);
                kind = HyperbolicOrbit{x};
            } else if (rep_kind == "parabolic") {
                phi = rep_map.given() ? rep_map.build() : DiskAutomorphism::parabolic_plus();
                kind = ParabolicOrbit{x};
            } else if (rep_kind == "character") {
                phi = rep_map.given() ? rep_map.build() : DiskAutomorphism::hyperbolic_normal_form(0.5);
                kind = Character{Complex(rep_epsilon, 0.0), rep_char_theta};
            } else if (rep_kind == "elliptic-circle") {
                phi = rep_map.given() ? rep_map.build() : DiskAutomorphism::rotation(std::sqrt(2.0) - 1.0);
                const double r = std::abs(x);
                kind = EllipticCircle{r, r > 0.0 ? x / r : Complex{1.0, 0.0}, {1.0, 0.0}};
            } else {
                phi = DiskAutomorphism::rational(rep_p, rep_q);
                kind = EllipticRational{rep_p, rep_q, io::parse_complex_literal(rep_eta),
                                        io::parse_complex_literal(rep_lambda)};
            }
            const CrossedElement a = rep_element.empty() ? CrossedElement::generator_a()
                                                         : io::element_from_json(json_argument(rep_element));
            const std::vector<std::int64_t> ns = rep_n_list.empty() ? std::vector<std::int64_t>{rep_n}
                                                                     : parse_n_list(rep_n_list);
            out = envelope("rep-check");
            out["map"] = io::to_json(phi);
            out["kind"] = kind_name(kind);
            out["element"] = io::to_json(a);
            Json table = Json::array();
            TruncatedRep last;
            for (std::int64_t n : ns) {
                last = represent(a, phi, kind, n);
                const double cov = covariance_residual(phi, kind, n);
                const double norm = operator_norm(last.matrix);
                table.push_back({{"N", n}, {"covariance_residual", cov}, {"norm", norm},
                                 {"size", last.matrix.rows()}});
                summary << "N=" << n << " covariance " << cov << " norm " << norm << '\n';
            }
            out["table"] = table;
            if (!rep_matrix_out.empty()) {
                std::ofstream f(rep_matrix_out);
                f << io::to_json(last.matrix).dump() << '\n';
                out["matrix_out"] = rep_matrix_out;
            }
            if (!rep_csv_out.empty()) {
                std::ofstream f(rep_csv_out);
                f << io::matrix_to_csv(last.matrix);
                out["csv_out"] = rep_csv_out;
            }
        } else if (*sym_cmd) {
            const DiskAutomorphism phi = DiskAutomorphism::hyperbolic_normal_form(sym_a);
            const CrossedElement a = sym_element.empty() ? CrossedElement::generator_a()
                                                         : io::element_from_json(json_argument(sym_element));
            const SymbolPair s = symbol(a, phi);
            auto laurent_json = [](const Laurent& l) {
                Json terms = Json::array();
                for (const auto& [n, c] : l.coefficients()) terms.push_back({{"n", n}, {"c", io::to_json(c)}});
                return terms;
            };
            out = envelope("symbol");
            out["map"] = io::to_json(phi);
            out["element"] = io::to_json(a);
            out["minus"] = laurent_json(s.minus);
            out["plus"] = laurent_json(s.plus);
            const TruncatedRep rep = represent(a, phi, HyperbolicOrbit{io::parse_complex_literal(sym_x)}, sym_n);
            const BlockDecomposition bd = block_decompose(rep, a);
            Json tails = Json::array();
            for (std::int64_t m : sym_margins) tails.push_back({{"M", m}, {"tail_norm", bd.residual_tail_norm(m)}});
            out["N"] = sym_n;
            out["tail_norms"] = tails;
            out["multiplier"] = (1.0 - std::abs(sym_a)) / (1.0 + std::abs(sym_a));
            summary << "minus " << s.minus.coefficients().size() << " terms, plus " << s.plus.coefficients().size()
                    << " terms";
        } else if (*spec_cmd) {
            const SpectrumModel model = parse_spectrum_model(spec_model);
            SpectrumSet s(model);
            if (!spec_in.empty()) s = io::spectrum_set_from_json(json_argument(spec_in));
            if (s.model() != model) throw DomainError("--model does not match the model of the input set");
            const SpectrumSet c = closure(s);
            out = envelope("spectrum-closure");
            out["input"] = io::to_json(s.canonical());
            out["closure"] = io::to_json(c);
            out["input_closed"] = is_closed(s);
            if (spec_axioms > 0) {
                const ClosureAxiomsReport r = closure_axioms_check(model, spec_axioms, seed);
                out["axioms"] = {{"samples", r.samples},
                                 {"idempotent_failures", r.idempotent_failures},
                                 {"extensive_failures", r.extensive_failures},
                                 {"monotone_failures", r.monotone_failures},
                                 {"union_failures", r.union_failures},
                                 {"empty_preserved", r.empty_preserved},
                                 {"passed", r.passed()}};
            }
            summary << "closure has " << c.points().size() << " points, input "
                    << (out["input_closed"].get<bool>() ? "closed" : "not closed");
        }
        std::cout << out.dump(2) << '\n';
        if (verbose) std::cerr << summary.str() << (summary.str().ends_with('\n') ? "" : "\n");
        return 0;
    } catch (const Error& e) {
        print_error(e.code(), e.what());
        if (verbose) std::cerr << e.code() << ": " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        print_error("InternalError", e.what());
        return 1;
    }
}
