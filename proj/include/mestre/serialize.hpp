#ifndef MESTRE_SERIALIZE_HPP
#define MESTRE_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mestre/families.hpp"
#include "mestre/height.hpp"

namespace mestre {

using Json = nlohmann::json;

// One row of a family sweep. All numbers are decimal strings so files are
// stable across platforms and languages.
struct CurveRecord {
    std::string family;
    std::string j;
    std::string t;
    std::string A, B;                     // curve coefficients, "num/den"
    std::vector<std::pair<std::string, std::string>> points;  // or "inf"
    std::string gram_det;                 // empty when no verdict attempted
    std::string det_err;
    long prec_bits = 0;
    long normalization_factor = 1;        // 2^0, 2^4 or 2^6, from reproduction
    bool independent = false;
    std::string excluded_reason;

    Json to_json() const;
    static CurveRecord from_json(const Json& j);
    static std::string csv_header();
    std::string to_csv_row() const;
};

CurveRecord make_record(const SpecializedCurve& spec, const RankCertificate* cert,
                        long norm_factor);

// round-trip validation: every curve parses and every point is on it
bool revalidate_records(const Json& doc, std::string* why = nullptr);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string value;  // human-readable detail
};

struct ReportDoc {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0;

    bool all_pass() const;
    Json to_json() const;
    void print(std::ostream& os) const;
};

Json curve_to_json(const ShortW<Rat>& e);
Json point_to_json(const ECPoint<Rat>& p);
ShortW<Rat> curve_from_json(const Json& j);
ECPoint<Rat> point_from_json(const Json& j);
Json cover_to_json(const CoverSpec& c);

}  // namespace mestre

#endif
