#include "diskcp/json_io.hpp"

#include <iomanip>
#include <regex>
#include <sstream>

#include "diskcp/errors.hpp"

namespace diskcp::io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) fail(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field '") + name + "'");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) fail(std::string(what) + " must be a number");
    return j.get<double>();
}

std::int64_t integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

Json to_json(const DiskAutomorphism& phi) {
    Json j{{"theta", phi.theta()}, {"z0", to_json(phi.z0())}};
    if (phi.rational_theta()) j["rational"] = Json::array({phi.rational_theta()->p, phi.rational_theta()->q});
    return j;
}

Json to_json(const MoebiusWord& w) {
    Json out = Json::array();
    for (const WordFactor& f : w.factors()) out.push_back({{"map", to_json(f.map)}, {"exp", f.exp}});
    return out;
}

Json to_json(const ExprFun& f) {
    switch (f.kind()) {
        case ExprKind::Const: return Json::array({"const", to_json(f.value())});
        case ExprKind::Z: return Json::array({"z"});
        case ExprKind::ConjZ: return Json::array({"conjz"});
        case ExprKind::Add: return Json::array({"add", to_json(f.lhs()), to_json(f.rhs())});
        case ExprKind::Mul: return Json::array({"mul", to_json(f.lhs()), to_json(f.rhs())});
        case ExprKind::Precompose: return Json::array({"precompose", to_json(f.inner()), to_json(f.word())});
    }
    return Json();
}

Json to_json(const CrossedElement& a) {
    Json terms = Json::array();
    for (const auto& [n, f] : a.coefficients()) terms.push_back({{"n", n}, {"expr", to_json(f)}});
    return {{"terms", terms}};
}

Json to_json(const SpectrumPoint& p) {
    Json j{{"kind", point_kind_name(p)}};
    std::visit(Overloaded{
                   [&](const OrbitClassPoint& q) {
                       j["u"] = q.u;
                       j["omega"] = to_json(q.omega);
                   },
                   [&](const BoundaryChar& q) {
                       j["epsilon"] = q.epsilon;
                       j["omega"] = to_json(q.omega);
                   },
                   [&](const ParabolicClassPoint& q) { j["point"] = to_json(q.point); },
                   [&](const CharPoint& q) { j["omega"] = to_json(q.omega); },
                   [&](const FiberPoint& q) { j["r"] = q.r; },
                   [&](const TorusPoint& q) {
                       j["t"] = q.t;
                       j["alpha"] = to_json(q.alpha);
                       j["beta"] = to_json(q.beta);
                   },
               },
               p);
    return j;
}

Json to_json(const SpectrumSet& s) {
    Json pts = Json::array();
    for (const SpectrumPoint& p : s.points()) pts.push_back(to_json(p));
    Json flags = Json::array();
    if (s.flags().all_boundary_chars) flags.push_back("all_boundary_chars");
    if (s.flags().all_chars) flags.push_back("all_chars");
    if (s.flags().fibers_accumulate_at_zero) flags.push_back("fibers_accumulate_at_zero");
    return {{"model", to_string(s.model())}, {"points", pts}, {"flags", flags}};
}

Json to_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const std::vector<Complex>& points) {
    Json out = Json::array();
    for (const Complex& z : points) out.push_back(to_json(z));
    return out;
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) fail("complex numbers are [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

DiskAutomorphism automorphism_from_json(const Json& j) {
    const Complex z0 = j.is_object() && j.contains("z0") ? complex_from_json(j["z0"]) : Complex{};
    if (j.is_object() && j.contains("rational")) {
        const Json& r = j["rational"];
        if (!r.is_array() || r.size() != 2) fail("rational must be [p, q]");
        return DiskAutomorphism::rational(integer(r[0], "p"), integer(r[1], "q"), z0);
    }
    return DiskAutomorphism(number(field(j, "theta"), "theta"), z0);
}

MoebiusWord word_from_json(const Json& j) {
    if (!j.is_array()) fail("a word is an array of {map, exp} factors");
    std::vector<WordFactor> factors;
    for (const Json& f : j) {
        const std::int64_t e = f.is_object() && f.contains("exp") ? integer(f["exp"], "exp") : 1;
        factors.push_back({automorphism_from_json(field(f, "map")), e});
    }
    return MoebiusWord(std::move(factors));
}

ExprFun expr_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_string()) fail("expressions are prefix arrays [op, ...]");
    const std::string op = j[0].get<std::string>();
    auto arity = [&](std::size_t n) {
        if (j.size() != n + 1) fail("'" + op + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (op == "const") {
        arity(1);
        return ExprFun::constant(complex_from_json(j[1]));
    }
    if (op == "z") {
        arity(0);
        return ExprFun::z();
    }
    if (op == "conjz") {
        arity(0);
        return ExprFun::conj_z();
    }
    if (op == "add") {
        arity(2);
        return expr_from_json(j[1]) + expr_from_json(j[2]);
    }
    if (op == "mul") {
        arity(2);
        return expr_from_json(j[1]) * expr_from_json(j[2]);
    }
    if (op == "precompose") {
        arity(2);
        return expr_from_json(j[1]).precompose(word_from_json(j[2]));
    }
    fail("unknown expression operator '" + op + "'");
}

CrossedElement element_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) fail("terms must be an array");
    CrossedElement out;
    for (const Json& t : terms) {
        out = out + CrossedElement::monomial(expr_from_json(field(t, "expr")), integer(field(t, "n"), "n"));
    }
    return out;
}

SpectrumPoint spectrum_point_from_json(const Json& j) {
    const Json& k = field(j, "kind");
    if (!k.is_string()) fail("point kind must be a string");
    const std::string kind = k.get<std::string>();
    if (kind == "orbit_class") return OrbitClassPoint{number(field(j, "u"), "u"), complex_from_json(field(j, "omega"))};
    if (kind == "boundary_char") {
        return BoundaryChar{static_cast<int>(integer(field(j, "epsilon"), "epsilon")),
                            complex_from_json(field(j, "omega"))};
    }
    if (kind == "parabolic_class") return ParabolicClassPoint{complex_from_json(field(j, "point"))};
    if (kind == "char") return CharPoint{complex_from_json(field(j, "omega"))};
    if (kind == "fiber") return FiberPoint{number(field(j, "r"), "r")};
    if (kind == "torus_point") {
        return TorusPoint{number(field(j, "t"), "t"), complex_from_json(field(j, "alpha")),
                          complex_from_json(field(j, "beta"))};
    }
    fail("unknown spectrum point kind '" + kind + "'");
}

SpectrumSet spectrum_set_from_json(const Json& j) {
    const Json& m = field(j, "model");
    if (!m.is_string()) fail("model must be a string");
    const SpectrumModel model = parse_spectrum_model(m.get<std::string>());
    std::vector<SpectrumPoint> pts;
    if (j.contains("points")) {
        if (!j["points"].is_array()) fail("points must be an array");
        for (const Json& p : j["points"]) pts.push_back(spectrum_point_from_json(p));
    }
    SpectrumFlags flags;
    if (j.contains("flags")) {
        if (!j["flags"].is_array()) fail("flags must be an array");
        for (const Json& f : j["flags"]) {
            const std::string name = f.is_string() ? f.get<std::string>() : std::string();
            if (name == "all_boundary_chars") {
                flags.all_boundary_chars = true;
            } else if (name == "all_chars") {
                flags.all_chars = true;
            } else if (name == "fibers_accumulate_at_zero") {
                flags.fibers_accumulate_at_zero = true;
            } else {
                fail("unknown flag '" + name + "'");
            }
        }
    }
    return SpectrumSet(model, std::move(pts), flags);
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
    if (!j.is_array()) fail("a matrix is an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail("ragged matrix rows");
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

std::string matrix_to_csv(const Eigen::MatrixXcd& m) {
    std::ostringstream os;
    os << std::setprecision(17) << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << i << ',' << j << ',' << m(i, j).real() << ',' << m(i, j).imag() << '\n';
        }
    }
    return os.str();
}

Complex parse_complex_literal(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c != ' ') t.push_back(c);
    }
    if (!t.empty() && t.front() == '[') return complex_from_json(parse(t));
    static const std::regex full(
        R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?$)");
    static const std::regex imag_only(R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i$)");
    std::smatch m;
    try {
        if (std::regex_match(t, m, imag_only)) {
            const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
            return {0.0, m[1].str() == "-" ? -mag : mag};
        }
        if (!t.empty() && std::regex_match(t, m, full) && m[1].matched) {
            const double re = std::stod(m[1].str());
            double im = 0.0;
            if (m[2].matched) {
                im = m[3].matched ? std::stod(m[3].str()) : 1.0;
                if (m[2].str() == "-") im = -im;
            }
            return {re, im};
        }
    } catch (const std::exception&) {
    }
    fail("cannot parse complex number '" + text + "'");
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace diskcp::io
