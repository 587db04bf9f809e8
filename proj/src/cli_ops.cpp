// SPDX-License-Identifier: Apache-2.0
//
// Subcommand bodies for the `akl` binary. Everything here returns a
// CommandResult instead of exiting, so the test suite can call the commands
// in-process and assert on exit codes and byte-exact output.

#include "akl/cli_ops.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "akl/certificates.hpp"
#include "akl/errors.hpp"
#include "akl/family.hpp"
#include "akl/killing.hpp"
#include "akl/models.hpp"
#include "akl/rational_function.hpp"

namespace akl {

using nlohmann::json;

int output_precision() {
    const char* env = std::getenv("AKL_PRECISION");
    if (env == nullptr || *env == '\0') return 17;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 25)
        throw ParseError("AKL_PRECISION must be an integer in 1..25, got '" +
                         std::string(env) + "'");
    return static_cast<int>(v);
}

std::string format_double(double v, int precision) {
    if (v == 0.0) v = 0.0; // print -0 as 0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (const char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double_text(const std::string& text) {
    const std::string t = trimmed(text);
    if (t.find('/') != std::string::npos) return to_double(parse_rational(t));
    try {
        size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid number: '" + text + "'");
    }
}

std::vector<Rational> parse_rational_list(const std::string& text, size_t min_len,
                                          size_t max_len, const std::string& what) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() < min_len || parts.size() > max_len)
        throw ParseError(what + " expects " + std::to_string(min_len) +
                         (min_len == max_len ? "" : ".." + std::to_string(max_len)) +
                         " comma-separated rationals, got '" + text + "'");
    std::vector<Rational> out;
    out.reserve(parts.size());
    for (const std::string& p : parts) out.push_back(parse_rational(trimmed(p)));
    return out;
}

Vec2 parse_vec2_text(const std::string& text, const std::string& what) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 2)
        throw ParseError(what + " expects two comma-separated numbers, got '" + text + "'");
    return {parse_double_text(parts[0]), parse_double_text(parts[1])};
}

FamilyParams parse_params_text(const std::string& text) {
    const std::vector<Rational> v = parse_rational_list(text, 4, 5, "--params");
    FamilyParams p{v[0], v[1], v[2], v[3], Rational(0)};
    if (v.size() == 5) p.delta = v[4];
    return p;
}

GroupElement parse_group_element(const std::string& text, const std::string& what) {
    const std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 4)
        throw ParseError(what + " expects s,t,u,v (four numbers), got '" + text + "'");
    return {{parse_double_text(parts[0]), parse_double_text(parts[1])},
            {parse_double_text(parts[2]), parse_double_text(parts[3])}};
}

Injection parse_injection(const std::string& text) {
    if (text.empty()) return Injection::None;
    if (text == "psi-sign-flip") return Injection::PsiSignFlip;
    if (text == "case6-target") return Injection::Case6Target;
    throw ParseError("--inject must be psi-sign-flip or case6-target, got '" + text + "'");
}

template <typename Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        return {kExitParse, "", std::string("error: ") + e.what()};
    } catch (const PoleError& e) {
        return {kExitDomain, "", std::string("error: ") + e.what()};
    } catch (const DomainError& e) {
        return {kExitDomain, "", std::string("error: ") + e.what()};
    } catch (const std::exception& e) {
        return {kExitCertificate, "", std::string("error: ") + e.what()};
    }
}

json jet_json(const KillingJet& j) {
    json arr = json::array();
    for (const Rational& r : j) arr.push_back(rational_to_string(r));
    return arr;
}

json qvec_json(const QVec& v) {
    json arr = json::array();
    for (const Rational& r : v) arr.push_back(rational_to_string(r));
    return arr;
}

json vec2_json(Vec2 v, int prec) {
    return json::array({format_double(v.x, prec), format_double(v.y, prec)});
}

json element_json(const GroupElement& g, int prec) {
    json out;
    out["h"] = vec2_json(g.h, prec);
    out["k"] = vec2_json(g.k, prec);
    return out;
}

std::string regime_kind_name(RegimeKind k) {
    switch (k) {
    case RegimeKind::RealDistinct: return "RealDistinct";
    case RegimeKind::ComplexPair: return "ComplexPair";
    case RegimeKind::RealDouble: return "RealDouble";
    }
    return "?";
}

json regime_json(const Regime& r, int prec) {
    json out;
    out["kind"] = regime_kind_name(r.kind);
    out["discriminant"] = rational_to_string(r.discriminant);
    out["exact_roots"] = r.exact;
    switch (r.kind) {
    case RegimeKind::RealDistinct:
        out["a1"] = format_double(r.a1, prec);
        out["a2"] = format_double(r.a2, prec);
        if (r.exact) {
            out["a1_exact"] = rational_to_string(r.a1_exact);
            out["a2_exact"] = rational_to_string(r.a2_exact);
        }
        break;
    case RegimeKind::ComplexPair:
        out["a"] = format_double(r.a, prec);
        out["b"] = format_double(r.b, prec);
        if (r.exact) {
            out["a_exact"] = rational_to_string(r.a_exact);
            out["b_exact"] = rational_to_string(r.b_exact);
        }
        break;
    case RegimeKind::RealDouble:
        out["a"] = format_double(r.a, prec);
        if (r.exact) out["a_exact"] = rational_to_string(r.a_exact);
        break;
    }
    return out;
}

json report_json(const AlgebraReport& rep, const BasePoint& p) {
    json out;
    out["label"] = rep.label.to_string();
    out["dim"] = rep.dim;
    out["homogeneous_at_point"] = rep.homogeneous_at_point;
    out["stabilized"] = rep.stabilized;
    out["flat"] = rep.flat;
    out["torsion_free"] = rep.torsion_free;
    out["point"] = json::array({rational_to_string(p.x), rational_to_string(p.y)});
    json basis = json::array();
    for (const KillingJet& j : rep.basis) basis.push_back(jet_json(j));
    out["basis"] = basis;
    json structure = json::array();
    for (const auto& row : rep.structure) {
        json jrow = json::array();
        for (const QVec& entry : row) jrow.push_back(qvec_json(entry));
        structure.push_back(jrow);
    }
    out["structure"] = structure;
    out["summary"] = rep.label.to_string() + ": Killing algebra of dimension " +
                     std::to_string(rep.dim) + " at (" + rational_to_string(p.x) + ", " +
                     rational_to_string(p.y) + ")" +
                     (rep.homogeneous_at_point ? "; locally homogeneous at the point"
                                               : "; not homogeneous at the point");
    return out;
}

} // namespace

Connection2D load_connection_file(const std::string& path, std::string* base_point_text) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open connection file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("connection file '" + path + "' must hold a JSON object");
    Connection2D c;
    const std::array<std::pair<const char*, RationalFunction2*>, 8> fields = {{
        {"A", &c.A},
        {"B", &c.B},
        {"C", &c.C},
        {"D", &c.D},
        {"E", &c.E},
        {"F", &c.F},
        {"U", &c.U},
        {"V", &c.V},
    }};
    for (const auto& [key, slot] : fields) {
        if (!doc.contains(key) || !doc[key].is_string())
            throw ParseError("connection file '" + path + "' needs a string field \"" +
                             key + "\"");
        try {
            *slot = parse_rational_function(doc[key].get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError("field \"" + std::string(key) + "\" of '" + path +
                             "': " + e.what());
        }
    }
    if (base_point_text != nullptr) {
        base_point_text->clear();
        if (doc.contains("base_point")) {
            const json& bp = doc["base_point"];
            if (!bp.is_array() || bp.size() != 2 || !bp[0].is_string() ||
                !bp[1].is_string())
                throw ParseError("base_point in '" + path +
                                 "' must be a pair of rational strings");
            *base_point_text =
                bp[0].get<std::string>() + "," + bp[1].get<std::string>();
        }
    }
    return c;
}

CommandResult cmd_classify(const std::string& connection_path, const std::string& point_text,
                           int max_order) {
    return guarded([&]() -> CommandResult {
        std::string file_point;
        const Connection2D c = load_connection_file(connection_path, &file_point);
        const std::string pt = point_text.empty() ? file_point : point_text;
        if (pt.empty())
            throw ParseError("no base point: pass --point x0,y0 or add base_point to '" +
                             connection_path + "'");
        const std::vector<Rational> xy = parse_rational_list(pt, 2, 2, "--point");
        const BasePoint p{xy[0], xy[1]};
        const AlgebraReport rep = classify_connection(c, p, max_order);
        return {kExitOk, report_json(rep, p).dump(2) + "\n", ""};
    });
}

CommandResult cmd_family(const std::string& params_text) {
    return guarded([&]() -> CommandResult {
        const int prec = output_precision();
        const FamilyParams p = parse_params_text(params_text);
        const Connection2D c = make_connection(p);
        const Regime r = regime_of(p);

        json out;
        out["params"] = json::array({rational_to_string(p.alpha), rational_to_string(p.beta),
                                     rational_to_string(p.gamma),
                                     rational_to_string(p.upsilon),
                                     rational_to_string(p.delta)});
        out["admissible"] = is_admissible(p);
        out["curvature_bracket"] = rational_to_string(curvature_bracket(p));

        json conn;
        conn["A"] = c.A.to_string();
        conn["B"] = c.B.to_string();
        conn["C"] = c.C.to_string();
        conn["D"] = c.D.to_string();
        conn["E"] = c.E.to_string();
        conn["F"] = c.F.to_string();
        conn["U"] = c.U.to_string();
        conn["V"] = c.V.to_string();
        out["connection"] = conn;

        const auto [t1, t2] = torsion(c);
        out["torsion"] = json::array({t1.to_string(), t2.to_string()});
        const TensorReport curv = curvature(c);
        json jcurv;
        jcurv["r_dx"] = json::array({curv.r_dx[0].to_string(), curv.r_dx[1].to_string()});
        jcurv["r_dy"] = json::array({curv.r_dy[0].to_string(), curv.r_dy[1].to_string()});
        out["curvature"] = jcurv;
        out["flat"] = curv.flat;
        out["torsion_free"] = is_torsion_free(c);
        out["regime"] = regime_json(r, prec);

        if (p.delta != 0) {
            const Normalization n = normalize_delta(p);
            json norm;
            norm["q"] = n.q_string();
            norm["params"] = json::array(
                {rational_to_string(n.params.alpha), rational_to_string(n.params.beta),
                 rational_to_string(n.params.gamma), rational_to_string(n.params.upsilon),
                 rational_to_string(n.params.delta)});
            out["normalization"] = norm;
        }

        if (is_admissible(p)) {
            const FamilyParams p0 = normalize_delta(p).params;
            const std::array<VectorFieldCF, 4> basis = killing_basis(p0, r);
            json kb = json::array();
            for (const VectorFieldCF& f : basis) kb.push_back(f.to_string());
            out["killing_basis"] = kb;
        }

        const AlgebraReport rep = classify_connection(c, BasePoint{Rational(0), Rational(0)});
        out["label"] = rep.label.to_string();
        out["dim"] = rep.dim;
        out["summary"] = rep.label.to_string() + ": " +
                         (is_admissible(p) ? "admissible" : "inadmissible") +
                         " member, regime " + regime_kind_name(r.kind) +
                         ", curvature bracket " + rational_to_string(curvature_bracket(p));
        return {kExitOk, out.dump(2) + "\n", ""};
    });
}

CommandResult cmd_holonomy(const std::string& params_text, const std::string& g1_text,
                           const std::string& g2_text) {
    return guarded([&]() -> CommandResult {
        const FamilyParams p = parse_params_text(params_text);
        if (!is_admissible(p))
            throw DomainError("holonomy analysis needs admissible parameters");
        const GroupElement g1 = parse_group_element(g1_text, "--g1");
        const GroupElement g2 = parse_group_element(g2_text, "--g2");
        const HolonomyVerdict v = classify_holonomy(p, g1, g2);
        json out;
        out["outcome"] = v.outcome_string();
        out["note"] = v.note;
        if (v.outcome == HolonomyVerdict::Outcome::CommutingFields) {
            out["field1"] = v.field1_text;
            out["field2"] = v.field2_text;
            out["has_degeneracy_curve"] = v.has_degeneracy_curve;
            if (v.has_degeneracy_curve) out["degeneracy_curve"] = v.degeneracy_curve;
        }
        out["summary"] = v.outcome_string() + ": " + v.note;
        return {kExitOk, out.dump(2) + "\n", ""};
    });
}

CommandResult cmd_group(const std::string& params_text, const std::string& g1_text,
                        const std::string& g2_text, const std::string& point_text) {
    return guarded([&]() -> CommandResult {
        const int prec = output_precision();
        const FamilyParams p = parse_params_text(params_text);
        if (!is_admissible(p))
            throw DomainError("the isometry group is defined for admissible parameters");
        const Regime r = regime_of(p);
        const GroupElement g1 = parse_group_element(g1_text, "--g1");
        const GroupElement g2 = parse_group_element(g2_text, "--g2");
        json out;
        out["regime"] = regime_kind_name(r.kind);
        out["g1"] = element_json(g1, prec);
        out["g2"] = element_json(g2, prec);
        out["product"] = element_json(multiply(g1, g2, r), prec);
        out["product_reversed"] = element_json(multiply(g2, g1, r), prec);
        out["inverse_g1"] = element_json(inverse(g1, r), prec);
        const bool comm = commutes(g1, g2, r);
        out["commutes"] = comm;
        const Mat2 m = psi(g1.h, r);
        out["psi_g1"] = json::array(
            {json::array({format_double(m.m[0][0], prec), format_double(m.m[0][1], prec)}),
             json::array({format_double(m.m[1][0], prec), format_double(m.m[1][1], prec)})});
        if (!point_text.empty()) {
            const Vec2 pt = parse_vec2_text(point_text, "--point");
            out["g1_point"] = vec2_json(act(g1, pt, r), prec);
        }
        out["summary"] = std::string("generators ") +
                         (comm ? "commute" : "do not commute") + " in the regime " +
                         regime_kind_name(r.kind) + " isometry group";
        return {kExitOk, out.dump(2) + "\n", ""};
    });
}

CommandResult cmd_models(const std::string& action) {
    return guarded([&]() -> CommandResult {
        if (action != "verify")
            throw ParseError("models supports the single action 'verify', got '" + action +
                             "'");
        const std::vector<CertificateResult> rows = model_invariance_table();
        std::ostringstream os;
        int passed = 0;
        for (const CertificateResult& row : rows) {
            os << (row.passed ? "[PASS] " : "[FAIL] ") << row.name << ": " << row.detail
               << "\n";
            if (row.passed) ++passed;
        }
        os << passed << "/" << rows.size() << " model checks passed\n";
        const bool ok = passed == static_cast<int>(rows.size());
        return {ok ? kExitOk : kExitCertificate, os.str(),
                ok ? "" : "error: model check failure"};
    });
}

CommandResult cmd_geodesic(const std::string& connection_path, const std::string& point_text,
                           const std::string& velocity_text, double total_time, int steps) {
    return guarded([&]() -> CommandResult {
        const int prec = output_precision();
        if (steps < 1) throw ParseError("--steps must be at least 1");
        std::string file_point;
        const Connection2D c = load_connection_file(connection_path, &file_point);
        const std::string pt = point_text.empty() ? file_point : point_text;
        if (pt.empty())
            throw ParseError("no start point: pass --point x,y or add base_point to '" +
                             connection_path + "'");
        const Vec2 p0 = parse_vec2_text(pt, "--point");
        const Vec2 v0 = parse_vec2_text(velocity_text, "--velocity");
        const std::vector<GeodesicPoint> path = geodesic(c, p0, v0, total_time, steps);
        std::ostringstream os;
        os << "t,x,y,vx,vy\n";
        for (const GeodesicPoint& g : path)
            os << format_double(g.t, prec) << ',' << format_double(g.x, prec) << ','
               << format_double(g.y, prec) << ',' << format_double(g.vx, prec) << ','
               << format_double(g.vy, prec) << '\n';
        return {kExitOk, os.str(), ""};
    });
}

CommandResult cmd_verify(const std::string& filter, const std::string& inject_text) {
    return guarded([&]() -> CommandResult {
        const Injection inject = parse_injection(inject_text);
        const std::vector<CertificateResult> results = run_certificates(filter, inject);
        if (results.empty())
            throw ParseError("no certificate matches filter '" + filter + "'");
        std::ostringstream os;
        int passed = 0;
        for (const CertificateResult& r : results) {
            os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
            if (r.passed) ++passed;
        }
        os << passed << "/" << results.size() << " certificates passed\n";
        const bool ok = passed == static_cast<int>(results.size());
        return {ok ? kExitOk : kExitCertificate, os.str(),
                ok ? "" : "error: certificate failure"};
    });
}

} // namespace akl
