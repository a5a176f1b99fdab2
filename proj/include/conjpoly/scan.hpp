#ifndef CONJPOLY_SCAN_HPP
#define CONJPOLY_SCAN_HPP

#include "conjpoly/bounds.hpp"
#include "conjpoly/irreducible.hpp"
#include "conjpoly/polytope.hpp"
#include "conjpoly/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace conjpoly {

enum class CheckKind { ANNULI, MEMBERSHIP, SZ_REMARK, UNIT_GAP, SEPARATION, MARGIN_IDENTITY };

const char* to_string(CheckKind k);
std::optional<CheckKind> parse_check_kind(const std::string& name);

enum class OutputFormat { JSON, CSV };

struct ScanConfig {
    std::vector<int> d_values;
    std::optional<std::vector<int>> j_values;  // nullopt: every 0 < j < d
    long h_lo = 3;
    long h_hi = 40;
    bool h_abs = true;  // range applies to |h|, both signs scanned
    std::vector<int> k_values{1};
    long precision_cap_bits = kDefaultPrecisionCap;
    std::set<CheckKind> checks;
    std::vector<mpq_class> annulus_epsilons{mpq_class(1, 5), mpq_class(1, 2), mpq_class(4, 5)};
    int jobs = 1;
};

enum class CheckOutcome { PASS, FAIL, SKIP, ERROR };

const char* to_string(CheckOutcome o);

struct CheckResult {
    CheckKind kind;
    CheckOutcome outcome = CheckOutcome::SKIP;
    std::string detail;
    nlohmann::json data;
};

struct ScanRecord {
    int d = 0;
    int j = 0;
    mpz_class h;
    IrreducibilityStatus irreducibility = IrreducibilityStatus::UNKNOWN;
    std::vector<CheckResult> checks;
    double seconds = 0.0;  // kept out of serialized output: files must be reproducible
};

struct ScanSummary {
    std::vector<ScanRecord> records;
    int failures = 0;
    int skips = 0;
    int errors = 0;
};

// Runs every enabled check on every (d, j, h) of the grid; records are
// ordered by (d, j, h) regardless of execution order or job count.
ScanSummary run_scan(const ScanConfig& config);

// One record, exposed for targeted reuse.
ScanRecord scan_one(int d, int j, const mpz_class& h, const ScanConfig& config);

struct TightnessReport {
    struct Entry {
        int k = 0;
        IntPolynomial poly;
        IrreducibilityStatus irreducibility = IrreducibilityStatus::UNKNOWN;
        std::optional<MarginReport> vertex_value;  // at (0,...,0,2)
        std::optional<UnitGapResult> unit_gap;
        double value_width = 0.0;
    };
    std::vector<Entry> entries;
};

// x^{3k} - x^k - 1 for k = 1..k_max at the tightness vertex (0,...,0,2);
// evaluated at a 256-bit cap where the value interval hugs 1.
TightnessReport tightness_family(int k_max, long cap_bits = 256);

// --- serialization -----------------------------------------------------

nlohmann::json interval_json(const RealInterval& v, long bits);
nlohmann::json enclosure_json(const RootEnclosure& e);
nlohmann::json vertex_set_json(const VertexSet& vs);
std::string vertex_set_csv(const VertexSet& vs);
nlohmann::json margin_report_json(const MarginReport& rep, const std::string& poly, int k,
                                  const std::vector<int>& subset_j);
nlohmann::json separation_report_json(const SeparationReport& rep, const std::string& poly);
nlohmann::json bounds_profile_json(const BoundsProfile& p);
nlohmann::json scan_record_json(const ScanRecord& r);
nlohmann::json scan_summary_json(const ScanConfig& cfg, const ScanSummary& s);
std::string scan_summary_csv(const ScanSummary& s);
nlohmann::json tightness_report_json(const TightnessReport& rep);

}  // namespace conjpoly

#endif
