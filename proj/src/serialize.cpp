#include "mestre/serialize.hpp"

#include <ostream>
#include <sstream>

namespace mestre {

Json curve_to_json(const ShortW<Rat>& e) {
    return Json{{"A", rat_to_string(e.A)}, {"B", rat_to_string(e.B)}};
}

Json point_to_json(const ECPoint<Rat>& p) {
    if (p.infinity) return Json("inf");
    return Json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

ShortW<Rat> curve_from_json(const Json& j) {
    return ShortW<Rat>(rat_from_string(j.at("A").get<std::string>()),
                       rat_from_string(j.at("B").get<std::string>()));
}

ECPoint<Rat> point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ECPoint<Rat>::inf();
    return ECPoint<Rat>(rat_from_string(j.at(0).get<std::string>()),
                        rat_from_string(j.at(1).get<std::string>()));
}

Json cover_to_json(const CoverSpec& c) {
    auto ps = +[](const Rat& q) { return rat_to_string(q); };
    return Json{
        {"E", curve_to_json(c.E)},
        {"Eprime", curve_to_json(c.Eprime)},
        {"phi", ratfunc_to_string(c.phi, "u")},
        {"S", poly_to_string(c.S, "u", ps)},
        {"T", poly_to_string(c.T, "u", ps)},
        {"rho", Json{{"x", ratfunc_to_string(c.rho.x_map, "t")},
                     {"y_mult", ratfunc_to_string(c.rho.y_mult, "t")}}},
        {"rho_prime", Json{{"x", ratfunc_to_string(c.rho_prime.x_map, "t")},
                           {"y_mult", ratfunc_to_string(c.rho_prime.y_mult, "t")}}},
        {"omega_ratio", ratfunc_to_string(c.ratio, "X")},
        {"genus", c.genus},
    };
}

Json CurveRecord::to_json() const {
    Json pj = Json::array();
    for (const auto& [x, y] : points) {
        if (x == "inf")
            pj.push_back("inf");
        else
            pj.push_back(Json::array({x, y}));
    }
    return Json{{"family", family},
                {"j", j},
                {"t", t},
                {"curve", Json{{"A", A}, {"B", B}}},
                {"points", pj},
                {"gram_det", gram_det},
                {"det_err", det_err},
                {"prec_bits", prec_bits},
                {"normalization_factor", normalization_factor},
                {"independent", independent},
                {"excluded_reason", excluded_reason}};
}

CurveRecord CurveRecord::from_json(const Json& js) {
    CurveRecord r;
    r.family = js.at("family").get<std::string>();
    r.j = js.at("j").get<std::string>();
    r.t = js.at("t").get<std::string>();
    if (js.contains("curve") && !js.at("curve").is_null()) {
        r.A = js.at("curve").at("A").get<std::string>();
        r.B = js.at("curve").at("B").get<std::string>();
    }
    for (const auto& pj : js.at("points")) {
        if (pj.is_string())
            r.points.push_back({"inf", ""});
        else
            r.points.push_back({pj.at(0).get<std::string>(), pj.at(1).get<std::string>()});
    }
    r.gram_det = js.value("gram_det", "");
    r.det_err = js.value("det_err", "");
    r.prec_bits = js.value("prec_bits", 0L);
    r.normalization_factor = js.value("normalization_factor", 1L);
    r.independent = js.value("independent", false);
    r.excluded_reason = js.value("excluded_reason", "");
    return r;
}

std::string CurveRecord::csv_header() {
    return "family,j,t,A,B,points,gram_det,det_err,prec_bits,normalization_factor,"
           "independent,excluded_reason";
}

namespace {
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}
}  // namespace

std::string CurveRecord::to_csv_row() const {
    std::ostringstream ps;
    for (size_t i = 0; i < points.size(); ++i) {
        if (i) ps << ";";
        if (points[i].first == "inf")
            ps << "inf";
        else
            ps << points[i].first << ":" << points[i].second;
    }
    std::ostringstream os;
    os << family << "," << csv_quote(j) << "," << csv_quote(t) << "," << csv_quote(A)
       << "," << csv_quote(B) << "," << csv_quote(ps.str()) << "," << csv_quote(gram_det)
       << "," << csv_quote(det_err) << "," << prec_bits << "," << normalization_factor
       << "," << (independent ? "true" : "false") << "," << csv_quote(excluded_reason);
    return os.str();
}

CurveRecord make_record(const SpecializedCurve& spec, const RankCertificate* cert,
                        long norm_factor) {
    CurveRecord r;
    r.family = spec.family;
    r.j = rat_to_string(spec.j);
    r.t = rat_to_string(spec.t0);
    r.normalization_factor = norm_factor;
    if (spec.excluded()) {
        r.excluded_reason = spec.excluded_reason;
        return r;
    }
    r.A = rat_to_string(spec.curve->A);
    r.B = rat_to_string(spec.curve->B);
    for (const auto& p : spec.points) {
        if (p.infinity)
            r.points.push_back({"inf", ""});
        else
            r.points.push_back({rat_to_string(p.x), rat_to_string(p.y)});
    }
    if (cert) {
        r.gram_det = cert->gram.determinant.to_string();
        r.det_err = cert->gram.determinant.err.to_string(6);
        r.prec_bits = cert->prec_bits;
        r.independent = cert->verdict == Verdict::independent;
    }
    return r;
}

bool revalidate_records(const Json& doc, std::string* why) {
    for (const auto& js : doc.at("records")) {
        CurveRecord r = CurveRecord::from_json(js);
        if (!r.excluded_reason.empty()) continue;
        ShortW<Rat> e(rat_from_string(r.A), rat_from_string(r.B));
        for (const auto& [xs, ys] : r.points) {
            if (xs == "inf") continue;
            ECPoint<Rat> p(rat_from_string(xs), rat_from_string(ys));
            if (!on_curve(e, p)) {
                if (why)
                    *why = "point off curve in record t=" + r.t + " family=" + r.family;
                return false;
            }
        }
    }
    return true;
}

bool ReportDoc::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Json ReportDoc::to_json() const {
    Json cj = Json::array();
    for (const auto& c : checks)
        cj.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"value", c.value}});
    Json ij = Json::object();
    for (const auto& [k, v] : inputs) ij[k] = v;
    return Json{{"command", command},
                {"inputs", ij},
                {"checks", cj},
                {"timings", Json{{"elapsed_seconds", elapsed_seconds}}}};
}

void ReportDoc::print(std::ostream& os) const {
    os << "== " << command << " ==\n";
    for (const auto& [k, v] : inputs) os << "   " << k << " = " << v << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.value.empty()) os << ": " << c.value;
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << " ("
       << elapsed_seconds << " s)\n";
}

}  // namespace mestre
