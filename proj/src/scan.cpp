#include "conjpoly/scan.hpp"

#include "conjpoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace conjpoly {

using nlohmann::json;

const char* to_string(CheckKind k) {
    switch (k) {
        case CheckKind::ANNULI: return "ANNULI";
        case CheckKind::MEMBERSHIP: return "MEMBERSHIP";
        case CheckKind::SZ_REMARK: return "SZ_REMARK";
        case CheckKind::UNIT_GAP: return "UNIT_GAP";
        case CheckKind::SEPARATION: return "SEPARATION";
        case CheckKind::MARGIN_IDENTITY: return "MARGIN_IDENTITY";
    }
    return "?";
}

std::optional<CheckKind> parse_check_kind(const std::string& name) {
    std::string up;
    for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (up == "ANNULI") return CheckKind::ANNULI;
    if (up == "MEMBERSHIP") return CheckKind::MEMBERSHIP;
    if (up == "SZ_REMARK" || up == "SZ-REMARK") return CheckKind::SZ_REMARK;
    if (up == "UNIT_GAP" || up == "UNIT-GAP") return CheckKind::UNIT_GAP;
    if (up == "SEPARATION") return CheckKind::SEPARATION;
    if (up == "MARGIN_IDENTITY" || up == "MARGIN-IDENTITY") return CheckKind::MARGIN_IDENTITY;
    return std::nullopt;
}

const char* to_string(CheckOutcome o) {
    switch (o) {
        case CheckOutcome::PASS: return "PASS";
        case CheckOutcome::FAIL: return "FAIL";
        case CheckOutcome::SKIP: return "SKIP";
        case CheckOutcome::ERROR: return "ERROR";
    }
    return "?";
}

namespace {

template <typename F>
CheckResult guarded(CheckKind kind, F&& body) {
    CheckResult res;
    res.kind = kind;
    try {
        body(res);
    } catch (const CertificationError& e) {
        res.outcome = CheckOutcome::SKIP;
        res.detail = std::string("precision cap: ") + e.what();
    } catch (const std::exception& e) {
        res.outcome = CheckOutcome::ERROR;
        res.detail = e.what();
    }
    return res;
}

}  // namespace

ScanRecord scan_one(int d, int j, const mpz_class& h, const ScanConfig& config) {
    ScanRecord rec;
    rec.d = d;
    rec.j = j;
    rec.h = h;
    const auto t0 = std::chrono::steady_clock::now();

    IntPolynomial f = make_trinomial(TrinomialSpec(static_cast<unsigned>(d),
                                                   static_cast<unsigned>(j), h));
    const long cap = config.precision_cap_bits;
    const long target = std::min(kDefaultTargetBits, cap);

    try {
        IrreducibilityVerdict irr = certify_irreducible(f, std::min(256L, cap), cap);
        rec.irreducibility = irr.status;
    } catch (const std::exception&) {
        rec.irreducibility = IrreducibilityStatus::UNKNOWN;
    }
    const bool irreducible = rec.irreducibility == IrreducibilityStatus::IRREDUCIBLE;
    bool root_of_unity = false;
    if (irreducible) root_of_unity = is_root_of_unity_poly(f);

    std::optional<ModulusProfile> profile;
    auto get_profile = [&]() -> ModulusProfile& {
        if (!profile)
            profile.emplace(std::make_shared<RootSystem>(RootSystem::solve(f, target, cap)));
        return *profile;
    };

    for (CheckKind kind : config.checks) {
        switch (kind) {
            case CheckKind::ANNULI:
                rec.checks.push_back(guarded(kind, [&](CheckResult& res) {
                    mpz_class habs = abs(h);
                    if (habs < 3) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "requires |h| >= 3";
                        return;
                    }
                    TrinomialSpec spec(static_cast<unsigned>(d), static_cast<unsigned>(j), h);
                    json eps_results = json::array();
                    bool any = false, all_match = true;
                    for (const mpq_class& eps : config.annulus_epsilons) {
                        mpq_class lo_adm = mpq_class(1) / mpq_class(habs);
                        if (!(eps > lo_adm && eps < 1 - lo_adm)) continue;
                        any = true;
                        AnnulusPrediction pred = predicted_annuli(spec, eps, 192);
                        int inner = count_in_annulus(get_profile(), pred.inner_low, pred.inner_high);
                        int outer = count_in_annulus(get_profile(), pred.outer_low, pred.outer_high);
                        bool match = inner == pred.inner_count && outer == pred.outer_count;
                        all_match = all_match && match;
                        eps_results.push_back({{"epsilon", mpq_class(eps).get_str()},
                                               {"inner", inner},
                                               {"inner_expected", pred.inner_count},
                                               {"outer", outer},
                                               {"outer_expected", pred.outer_count},
                                               {"match", match}});
                    }
                    res.data["epsilons"] = eps_results;
                    if (!any) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "no admissible epsilon";
                    } else {
                        res.outcome = all_match ? CheckOutcome::PASS : CheckOutcome::FAIL;
                    }
                }));
                break;
            case CheckKind::MEMBERSHIP:
                rec.checks.push_back(guarded(kind, [&](CheckResult& res) {
                    if (!irreducible) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "not certified irreducible";
                        return;
                    }
                    int negatives = 0, indeterminates = 0, positives = 0;
                    json per_k = json::array();
                    for (int k : config.k_values) {
                        if (k < 1 || k >= d) continue;
                        VertexSet vs = vertices_closed_form(k, d);
                        json verdicts = json::array();
                        for (const LabeledVertex& v : vs.vertices) {
                            MarginReport rep = check_membership_witness(get_profile(), v.point);
                            switch (rep.verdict) {
                                case MarginVerdict::POSITIVE: ++positives; break;
                                case MarginVerdict::NEGATIVE: ++negatives; break;
                                case MarginVerdict::INDETERMINATE: ++indeterminates; break;
                            }
                            verdicts.push_back({{"J", v.subset()}, {"verdict", to_string(rep.verdict)}});
                        }
                        per_k.push_back({{"k", k}, {"verdicts", verdicts}});
                    }
                    res.data["per_k"] = per_k;
                    res.data["positives"] = positives;
                    res.data["negatives"] = negatives;
                    res.data["indeterminates"] = indeterminates;
                    res.data["root_of_unity"] = root_of_unity;
                    res.outcome = negatives == 0 ? CheckOutcome::PASS : CheckOutcome::FAIL;
                }));
                break;
            case CheckKind::SZ_REMARK:
                rec.checks.push_back(guarded(kind, [&](CheckResult& res) {
                    if (j != d - 1) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "requires j = d-1";
                        return;
                    }
                    if (abs(h) < 3) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "requires |h| >= 3";
                        return;
                    }
                    if (!irreducible) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "not certified irreducible";
                        return;
                    }
                    SzRemarkReport rep =
                        sz_remark_evaluate(get_profile(), static_cast<unsigned>(d), abs(h));
                    res.data["lhs"] = interval_json(rep.lhs, rep.precision_bits);
                    res.data["rhs"] = rep.rhs.get_str();
                    res.data["holds"] = rep.holds;
                    res.outcome = rep.holds ? CheckOutcome::PASS : CheckOutcome::FAIL;
                }));
                break;
            case CheckKind::UNIT_GAP:
                rec.checks.push_back(guarded(kind, [&](CheckResult& res) {
                    if (!irreducible) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "not certified irreducible";
                        return;
                    }
                    if (root_of_unity) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "root of unity";
                        return;
                    }
                    UnitGapResult gap = unit_gap_property(get_profile());
                    res.data["holds"] = gap.holds;
                    if (!gap.holds) res.data["violating_index"] = gap.violating_index;
                    res.outcome = gap.holds ? CheckOutcome::PASS : CheckOutcome::FAIL;
                }));
                break;
            case CheckKind::SEPARATION:
                rec.checks.push_back(guarded(kind, [&](CheckResult& res) {
                    SeparationReport rep = modulus_separation(get_profile());
                    res.data = separation_report_json(rep, f.to_pretty_string());
                    res.outcome = rep.min_gap.strictly_positive() ? CheckOutcome::PASS
                                                                  : CheckOutcome::FAIL;
                }));
                break;
            case CheckKind::MARGIN_IDENTITY:
                rec.checks.push_back(guarded(kind, [&](CheckResult& res) {
                    if (!irreducible) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "not certified irreducible";
                        return;
                    }
                    if (d < 3) {
                        res.outcome = CheckOutcome::SKIP;
                        res.detail = "no valid vertex index for d < 3";
                        return;
                    }
                    bool all_contain = true;
                    double max_width = 0.0;
                    for (int i_n = 1; i_n <= d - 2; ++i_n) {
                        MarginIdentityReport rep =
                            margin_identity_check(get_profile(), i_n, {i_n}, 192);
                        all_contain = all_contain && rep.residual.contains_zero();
                        max_width = std::max(max_width, rep.residual.width_d());
                    }
                    res.data["residual_max_width"] = max_width;
                    res.data["residuals_contain_zero"] = all_contain;
                    res.outcome = all_contain ? CheckOutcome::PASS : CheckOutcome::FAIL;
                }));
                break;
        }
    }

    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

ScanSummary run_scan(const ScanConfig& config) {
    if (config.precision_cap_bits < 53 || config.precision_cap_bits > 4096)
        throw std::invalid_argument("precision cap must be within [53, 4096]");
    if (config.d_values.empty()) throw std::invalid_argument("empty degree range");
    if (config.h_lo > config.h_hi) throw std::invalid_argument("empty h range");
    struct Task {
        int d, j;
        mpz_class h;
    };
    std::vector<Task> tasks;
    for (int d : config.d_values) {
        std::vector<int> js;
        if (config.j_values) {
            for (int j : *config.j_values)
                if (j >= 1 && j < d) js.push_back(j);
        } else {
            for (int j = 1; j < d; ++j) js.push_back(j);
        }
        std::sort(js.begin(), js.end());
        for (int j : js) {
            if (config.h_abs) {
                for (long a = config.h_hi; a >= config.h_lo; --a) tasks.push_back({d, j, mpz_class(-a)});
                for (long a = config.h_lo; a <= config.h_hi; ++a) tasks.push_back({d, j, mpz_class(a)});
            } else {
                for (long a = config.h_lo; a <= config.h_hi; ++a) tasks.push_back({d, j, mpz_class(a)});
            }
        }
    }

    ScanSummary out;
    out.records.resize(tasks.size());
    const int jobs = std::max(1, config.jobs);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            const Task& t = tasks[idx];
            out.records[idx] = scan_one(t.d, t.j, t.h, config);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const ScanRecord& r : out.records)
        for (const CheckResult& c : r.checks) switch (c.outcome) {
                case CheckOutcome::FAIL: ++out.failures; break;
                case CheckOutcome::SKIP: ++out.skips; break;
                case CheckOutcome::ERROR: ++out.errors; break;
                case CheckOutcome::PASS: break;
            }
    return out;
}

TightnessReport tightness_family(int k_max, long cap_bits) {
    if (k_max < 1 || k_max > 4)
        throw std::invalid_argument("tightness family supports 1 <= k_max <= 4");
    TightnessReport rep;
    for (int k = 1; k <= k_max; ++k) {
        TightnessReport::Entry e;
        e.k = k;
        std::vector<mpz_class> coeffs(static_cast<size_t>(3 * k) + 1, mpz_class(0));
        coeffs[0] = -1;
        coeffs[static_cast<size_t>(k)] = -1;
        coeffs[static_cast<size_t>(3 * k)] = 1;
        e.poly = IntPolynomial(std::move(coeffs));
        IrreducibilityVerdict irr = certify_irreducible(e.poly, std::min(256L, cap_bits), cap_bits);
        e.irreducibility = irr.status;
        if (irr.status == IrreducibilityStatus::IRREDUCIBLE) {
            ModulusProfile profile(std::make_shared<RootSystem>(
                RootSystem::solve(e.poly, std::min(kDefaultTargetBits, cap_bits), cap_bits)));
            RationalPoint c;
            c.coords.assign(static_cast<size_t>(k), Rational(0));
            c.coords.back() = 2;
            e.vertex_value = check_membership_witness(profile, c);
            e.value_width = e.vertex_value->value.width_d();
            e.unit_gap = unit_gap_property(profile);
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// --- serialization -----------------------------------------------------

json interval_json(const RealInterval& v, long bits) {
    return json{{"lo", v.lo_string()}, {"hi", v.hi_string()}, {"bits", bits}};
}

json enclosure_json(const RootEnclosure& e) {
    return json{{"re", to_decimal_string(e.center.re(), MPFR_RNDN)},
                {"im", to_decimal_string(e.center.im(), MPFR_RNDN)},
                {"radius", to_decimal_string(e.radius.hi(), MPFR_RNDU)},
                {"bits", e.precision_bits}};
}

json vertex_set_json(const VertexSet& vs) {
    json arr = json::array();
    for (const LabeledVertex& v : vs.vertices) {
        json coords = json::array();
        for (const Rational& q : v.point.coords) coords.push_back(q.get_str());
        arr.push_back({{"J", v.subset()}, {"v", coords}});
    }
    return arr;
}

std::string vertex_set_csv(const VertexSet& vs) {
    std::ostringstream os;
    os << "J";
    for (int i = 1; i <= vs.k; ++i) os << ",v" << i;
    os << "\n";
    for (const LabeledVertex& v : vs.vertices) {
        std::string jlist;
        for (int j : v.subset()) {
            if (!jlist.empty()) jlist += " ";
            jlist += std::to_string(j);
        }
        os << jlist;
        for (const Rational& q : v.point.coords) os << "," << q.get_str();
        os << "\n";
    }
    return os.str();
}

json margin_report_json(const MarginReport& rep, const std::string& poly, int k,
                        const std::vector<int>& subset_j) {
    json c = json::array();
    for (const Rational& q : rep.point.coords) c.push_back(q.get_str());
    json out{{"poly", poly},
             {"k", k},
             {"subsetJ", subset_j},
             {"c", c},
             {"value", interval_json(rep.value, rep.precision_bits)},
             {"verdict", to_string(rep.verdict)}};
    if (rep.power_form_verdict) out["powerFormVerdict"] = to_string(*rep.power_form_verdict);
    return out;
}

json separation_report_json(const SeparationReport& rep, const std::string& poly) {
    return json{{"poly", poly},
                {"H", rep.height.get_str()},
                {"d", rep.degree},
                {"gap", {{"lo", rep.min_gap.lo_string()}, {"hi", rep.min_gap.hi_string()}}},
                {"caseClass", to_string(rep.case_class)}};
}

json bounds_profile_json(const BoundsProfile& p) {
    return json{{"d", p.d},
                {"k", p.k},
                {"mu", p.mu},
                {"calE", p.cal_e.get_str()},
                {"branch", to_string(p.branch)},
                {"predictedExponent", p.predicted_exponent.get_str()}};
}

json scan_record_json(const ScanRecord& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json jc{{"check", to_string(c.kind)}, {"outcome", to_string(c.outcome)}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        if (!c.data.is_null()) jc["data"] = c.data;
        checks.push_back(jc);
    }
    return json{{"d", r.d},
                {"j", r.j},
                {"h", r.h.get_str()},
                {"irreducibility", to_string(r.irreducibility)},
                {"checks", checks}};
}

json scan_summary_json(const ScanConfig& cfg, const ScanSummary& s) {
    json checks = json::array();
    for (CheckKind k : cfg.checks) checks.push_back(to_string(k));
    json records = json::array();
    for (const ScanRecord& r : s.records) records.push_back(scan_record_json(r));
    return json{{"checks", checks},
                {"precisionCapBits", cfg.precision_cap_bits},
                {"failures", s.failures},
                {"skips", s.skips},
                {"errors", s.errors},
                {"records", records}};
}

namespace {

std::string csv_interval(const json& iv) {
    // intervals narrower than the display precision collapse to one value
    if (!iv.is_object()) return "";
    double lo = std::strtod(iv["lo"].get<std::string>().c_str(), nullptr);
    double hi = std::strtod(iv["hi"].get<std::string>().c_str(), nullptr);
    std::ostringstream os;
    os.precision(17);
    if (hi - lo < 1e-15)
        os << (lo + hi) / 2;
    else
        os << lo << ".." << hi;
    return os.str();
}

}  // namespace

std::string scan_summary_csv(const ScanSummary& s) {
    std::ostringstream os;
    os << "d,j,h,irreducibility,check,outcome,detail,value\n";
    for (const ScanRecord& r : s.records) {
        for (const CheckResult& c : r.checks) {
            os << r.d << "," << r.j << "," << r.h.get_str() << "," << to_string(r.irreducibility)
               << "," << to_string(c.kind) << "," << to_string(c.outcome) << ",";
            std::string detail = c.detail;
            std::replace(detail.begin(), detail.end(), ',', ';');
            os << detail << ",";
            if (c.kind == CheckKind::SZ_REMARK && c.data.contains("lhs"))
                os << csv_interval(c.data["lhs"]);
            else if (c.kind == CheckKind::SEPARATION && c.data.contains("gap"))
                os << csv_interval(c.data["gap"]);
            else if (c.data.contains("residual_max_width"))
                os << c.data["residual_max_width"].get<double>();
            os << "\n";
        }
        if (r.checks.empty())
            os << r.d << "," << r.j << "," << r.h.get_str() << ","
               << to_string(r.irreducibility) << ",,,,\n";
    }
    return os.str();
}

json tightness_report_json(const TightnessReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je{{"k", e.k},
                {"poly", e.poly.to_pretty_string()},
                {"irreducibility", to_string(e.irreducibility)}};
        if (e.vertex_value) {
            std::vector<int> subset{e.k};
            je["vertex"] = margin_report_json(*e.vertex_value, e.poly.to_pretty_string(), e.k, subset);
            je["valueWidth"] = e.value_width;
        }
        if (e.unit_gap) je["unitGapHolds"] = e.unit_gap->holds;
        entries.push_back(je);
    }
    return json{{"family", "x^{3k} - x^k - 1"}, {"entries", entries}};
}

}  // namespace conjpoly
