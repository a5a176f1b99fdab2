// conjpoly command-line driver: vertex enumeration, membership and identity
// verification, corpus scans, and the quantitative bounds tables.

#include "conjpoly/errors.hpp"
#include "conjpoly/scan.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

using namespace conjpoly;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCertificationCap = 3;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << text;
}

std::vector<int> parse_int_range(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(part));
        } else {
            int lo = std::stoi(part.substr(0, dots));
            int hi = std::stoi(part.substr(dots + 2));
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty range: " + text);
    return out;
}

RationalPoint parse_point(const std::string& text) {
    RationalPoint p;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        Rational q(part);
        q.canonicalize();
        p.coords.push_back(q);
    }
    return p;
}

struct GlobalOpts {
    long precision_cap = kDefaultPrecisionCap;
    int jobs = 1;
    std::string format = "json";
    std::string output;
};

int cmd_vertices(const GlobalOpts& g, int k, int d, bool cross_check) {
    VertexSet vs = vertices_closed_form(k, d);
    if (cross_check) {
        HalfSpaceSystem sys = ekd_half_spaces(k, d);
        VertexSet e = vertices_by_elimination(sys);
        VertexSet b = vertices_brute_force(sys);
        if (!vs.same_as(e) || !vs.same_as(b)) {
            std::cerr << "cross-check failed: enumeration paths disagree for k=" << k
                      << " d=" << d << "\n";
            return kExitCheckFailure;
        }
    }
    if (g.format == "csv")
        write_output(g.output, vertex_set_csv(vs));
    else
        write_output(g.output, vertex_set_json(vs).dump(2));
    return kExitPass;
}

int cmd_member(const GlobalOpts& g, const std::string& poly, const std::string& point) {
    IntPolynomial p = parse_polynomial(poly);
    RationalPoint c = parse_point(point);
    MarginReport rep = check_membership_witness(p, c, g.precision_cap);
    write_output(g.output,
                 margin_report_json(rep, p.to_pretty_string(), c.dim(), {}).dump(2));
    return kExitPass;
}

int cmd_irreducible(const GlobalOpts& g, const std::string& poly, long bits) {
    IntPolynomial p = parse_polynomial(poly);
    IrreducibilityVerdict v = certify_irreducible(p, bits, g.precision_cap);
    json out{{"poly", p.to_pretty_string()},
             {"status", to_string(v.status)},
             {"certifiedAtBits", v.certified_at_bits}};
    if (v.witness) out["witness"] = v.witness->to_pretty_string();
    write_output(g.output, out.dump(2));
    return kExitPass;
}

int cmd_separation(const GlobalOpts& g, const std::string& poly) {
    IntPolynomial p = parse_polynomial(poly);
    ModulusProfile profile(std::make_shared<RootSystem>(
        RootSystem::solve(p, std::min(kDefaultTargetBits, g.precision_cap), g.precision_cap)));
    SeparationReport rep = modulus_separation(profile);
    write_output(g.output, separation_report_json(rep, p.to_pretty_string()).dump(2));
    return kExitPass;
}

int cmd_bounds(const GlobalOpts& g, int d, int k, int table_max) {
    if (table_max > 0) {
        json rows = json::array();
        json exceptional = json::array();
        for (int dd = 4; dd <= table_max; ++dd)
            for (int kk = 1; 3 * kk < dd; ++kk) {
                BoundsProfile p = bounds_profile(dd, kk);
                rows.push_back(bounds_profile_json(p));
                if (p.branch == ExponentBranch::TWO_FACTOR)
                    exceptional.push_back(json{{"d", dd}, {"k", kk}});
            }
        write_output(g.output, json{{"rows", rows}, {"exceptional", exceptional}}.dump(2));
        return kExitPass;
    }
    BoundsProfile p = bounds_profile(d, k);
    write_output(g.output, bounds_profile_json(p).dump(2));
    return kExitPass;
}

int cmd_tightness(const GlobalOpts& g, int k_max) {
    TightnessReport rep = tightness_family(k_max, 256);
    write_output(g.output, tightness_report_json(rep).dump(2));
    for (const auto& e : rep.entries)
        if (e.irreducibility != IrreducibilityStatus::IRREDUCIBLE)
            std::cerr << "note: k=" << e.k << " skipped (irreducibility "
                      << to_string(e.irreducibility) << ")\n";
    return kExitPass;
}

int cmd_scan(const GlobalOpts& g, const std::string& d_range, const std::string& j_rule,
             const std::string& h_range, bool h_signed, const std::string& k_range,
             const std::vector<std::string>& check_names) {
    ScanConfig cfg;
    cfg.d_values = parse_int_range(d_range);
    if (j_rule != "all") cfg.j_values = parse_int_range(j_rule);
    {
        auto dots = h_range.find("..");
        if (dots == std::string::npos) {
            cfg.h_lo = cfg.h_hi = std::stol(h_range);
        } else {
            cfg.h_lo = std::stol(h_range.substr(0, dots));
            cfg.h_hi = std::stol(h_range.substr(dots + 2));
        }
    }
    cfg.h_abs = !h_signed;
    cfg.k_values = parse_int_range(k_range);
    cfg.precision_cap_bits = g.precision_cap;
    cfg.jobs = g.jobs;
    for (const std::string& name : check_names) {
        auto kind = parse_check_kind(name);
        if (!kind) throw std::invalid_argument("unknown check: " + name);
        cfg.checks.insert(*kind);
    }
    if (cfg.checks.empty()) throw std::invalid_argument("no checks enabled");
    if (cfg.precision_cap_bits < 53 || cfg.precision_cap_bits > 4096)
        throw std::invalid_argument("precision cap must be within [53, 4096]");

    ScanSummary summary = run_scan(cfg);
    if (g.format == "csv")
        write_output(g.output, scan_summary_csv(summary));
    else
        write_output(g.output, scan_summary_json(cfg, summary).dump(2));
    std::cerr << summary.records.size() << " records, " << summary.failures << " failures, "
              << summary.skips << " skips, " << summary.errors << " errors\n";
    return summary.failures > 0 ? kExitCheckFailure : kExitPass;
}

int cmd_verify(const GlobalOpts& g, const std::string& poly, int k_max) {
    IntPolynomial p = parse_polynomial(poly);
    const int d = p.degree();
    json out;
    out["poly"] = p.to_pretty_string();
    IrreducibilityVerdict irr = certify_irreducible(p, 256, g.precision_cap);
    out["irreducibility"] = to_string(irr.status);
    if (irr.status != IrreducibilityStatus::IRREDUCIBLE) {
        if (irr.witness) out["witness"] = irr.witness->to_pretty_string();
        write_output(g.output, out.dump(2));
        std::cerr << "verify: polynomial is not certified irreducible; nothing to verify\n";
        return kExitCheckFailure;
    }
    bool rou = is_root_of_unity_poly(p);
    out["rootOfUnity"] = rou;
    ModulusProfile profile(std::make_shared<RootSystem>(
        RootSystem::solve(p, std::min(kDefaultTargetBits, g.precision_cap), g.precision_cap)));
    json roots = json::array();
    for (const RootEnclosure& e : profile.system().enclosures())
        roots.push_back(enclosure_json(e));
    out["roots"] = roots;
    bool failed = false;

    if (is_unit_polynomial(p) && !rou) {
        UnitGapResult gap = unit_gap_property(profile);
        out["unitGapHolds"] = gap.holds;
        failed = failed || !gap.holds;
    }

    if (k_max < 1) k_max = std::min(d - 1, 6);
    json memberships = json::array();
    int negatives = 0;
    for (int k = 1; k <= k_max && k < d; ++k) {
        VertexSet vs = vertices_closed_form(k, d);
        for (const LabeledVertex& v : vs.vertices) {
            MarginReport rep = check_membership_witness(profile, v.point);
            if (rep.verdict == MarginVerdict::NEGATIVE) ++negatives;
            memberships.push_back(
                margin_report_json(rep, p.to_pretty_string(), k, v.subset()));
        }
    }
    out["vertexReports"] = memberships;
    out["negativeVerdicts"] = negatives;
    failed = failed || negatives > 0;

    if (abs(p.constant_term()) == 1 && d >= 3) {
        json identities = json::array();
        bool all_zero = true;
        for (int i_n = 1; i_n <= std::min(k_max, d - 2); ++i_n) {
            MarginIdentityReport rep = margin_identity_check(profile, i_n, {i_n});
            bool ok = rep.residual.contains_zero();
            all_zero = all_zero && ok;
            identities.push_back(json{{"i_n", i_n},
                                      {"residual", interval_json(rep.residual, rep.precision_bits)},
                                      {"containsZero", ok}});
        }
        out["marginIdentities"] = identities;
        failed = failed || !all_zero;
    }

    write_output(g.output, out.dump(2));
    return failed ? kExitCheckFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conjpoly: certified analysis of conjugate-product polytopes"};
    app.require_subcommand(1);
    app.set_config("--config");

    GlobalOpts g;
    app.add_option("--precision-cap", g.precision_cap, "precision ladder cap in bits [53,4096]")
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "parallel workers for scans")->capture_default_str();
    app.add_option("--format", g.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", g.output, "output file (default stdout)");

    // vertices
    auto* vertices = app.add_subcommand("vertices", "enumerate polytope vertices");
    int v_k = 1, v_d = 2;
    bool v_cross = false;
    vertices->add_option("-k", v_k, "dimension k")->required();
    vertices->add_option("-d", v_d, "degree d")->required();
    vertices->add_flag("--cross-check", v_cross, "run all three enumeration paths");

    // member
    auto* member = app.add_subcommand("member", "membership report for a point");
    std::string m_poly, m_point;
    member->add_option("-p,--poly", m_poly, "polynomial")->required();
    member->add_option("-c,--point", m_point, "comma-separated rational exponents")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the per-polynomial checks");
    std::string vf_poly;
    int vf_kmax = 0;
    verify->add_option("-p,--poly", vf_poly, "polynomial")->required();
    verify->add_option("-k,--k-max", vf_kmax, "largest dimension to verify (default min(d-1,6))");

    // scan
    auto* scan = app.add_subcommand("scan", "trinomial corpus scan");
    std::string s_d = "2..6", s_j = "all", s_h = "3..10", s_k = "1..3";
    bool s_signed = false;
    std::vector<std::string> s_checks;
    scan->add_option("--d-range", s_d, "degrees, e.g. 2..9 or 4,6")->capture_default_str();
    scan->add_option("--j-rule", s_j, "'all' or explicit list, e.g. 1,2")->capture_default_str();
    scan->add_option("--h-range", s_h, "range of |h| (or of h with --h-signed)")
        ->capture_default_str();
    scan->add_flag("--h-signed", s_signed, "interpret --h-range over signed h only");
    scan->add_option("--k-range", s_k, "dimensions for membership checks")->capture_default_str();
    scan->add_option("--checks", s_checks,
                     "annuli, membership, sz_remark, unit_gap, separation, margin_identity")
        ->required()
        ->delimiter(',');

    // tightness
    auto* tightness = app.add_subcommand("tightness", "d = 3k tightness family report");
    int t_kmax = 3;
    tightness->add_option("--k-max", t_kmax, "largest k (<= 4)")->capture_default_str();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "quantitative bound profiles");
    int b_d = 0, b_k = 0, b_table = 0;
    bounds->add_option("-d", b_d, "degree d");
    bounds->add_option("-k", b_k, "dimension k");
    bounds->add_option("--table", b_table, "emit the full table for d <= N");

    // separation
    auto* separation = app.add_subcommand("separation", "modulus separation report");
    std::string sep_poly;
    separation->add_option("-p,--poly", sep_poly, "polynomial")->required();

    // irreducible
    auto* irreducible = app.add_subcommand("irreducible", "certify irreducibility");
    std::string irr_poly;
    long irr_bits = 256;
    irreducible->add_option("-p,--poly", irr_poly, "polynomial")->required();
    irreducible->add_option("--bits", irr_bits, "starting precision")->capture_default_str();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (*vertices) return cmd_vertices(g, v_k, v_d, v_cross);
        if (*member) return cmd_member(g, m_poly, m_point);
        if (*verify) return cmd_verify(g, vf_poly, vf_kmax);
        if (*scan) return cmd_scan(g, s_d, s_j, s_h, s_signed, s_k, s_checks);
        if (*tightness) return cmd_tightness(g, t_kmax);
        if (*bounds) {
            if (b_table == 0 && (b_d == 0 || b_k == 0))
                throw std::invalid_argument("bounds requires -d and -k, or --table N");
            return cmd_bounds(g, b_d, b_k, b_table);
        }
        if (*separation) return cmd_separation(g, sep_poly);
        if (*irreducible) return cmd_irreducible(g, irr_poly, irr_bits);
    } catch (const CertificationError& e) {
        std::cerr << "certification cap reached: " << e.what() << "\n";
        return kExitCertificationCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitInputError;
}
