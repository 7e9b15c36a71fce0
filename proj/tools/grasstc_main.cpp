// Command-line front end: ring inspection, heights, cup-lengths, zero-divisor
// cup-lengths, TC/category bounds, cell structure, batch tables, and the
// claim-verification suite.
//
// Exit codes: 0 success (and all-pass for verify), 1 usage error,
// 2 resource-budget infeasibility, 3 verification failure.

#include "grasstc/bounds.hpp"
#include "grasstc/cells.hpp"
#include "grasstc/errors.hpp"
#include "grasstc/flag_oracle.hpp"
#include "grasstc/grassmann_ring.hpp"
#include "grasstc/ring_cache.hpp"
#include "grasstc/tensor_ring.hpp"
#include "grasstc/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ctime>
#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace grasstc;

namespace {

struct Config {
    std::string format = "plain"; // plain | json | csv
    bool no_timestamp = false;
    std::string cache_dir;
    std::uint64_t max_degree_cap = 2'000'000;
};

std::string utc_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void emit_json(const Config& cfg, json j) {
    if (!cfg.no_timestamp)
        j["generated_at"] = utc_now();
    std::cout << j.dump(2) << "\n";
}

void plain_header(const Config& cfg) {
    if (!cfg.no_timestamp)
        std::cout << "# generated " << utc_now() << "\n";
}

template <class V> json vec_json(const V& v) {
    json a = json::array();
    for (auto x : v)
        a.push_back(static_cast<unsigned long long>(x));
    return a;
}

template <class V> std::string vec_plain(const V& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(static_cast<unsigned long long>(v[i]));
    return s + ")";
}

// Build the ring, consulting the cache when one is configured; store back
// whatever got built when done.
struct CachedRing {
    const Config& cfg;
    GrassmannRing ring;
    std::filesystem::path dir;

    CachedRing(const Config& c, unsigned k, unsigned n)
        : cfg(c), ring(k, n, c.max_degree_cap), dir(cache_dir_or_default(c.cache_dir)) {
        if (!dir.empty()) {
            auto res = cache_load(ring, dir);
            if (!res.warning.empty())
                std::cerr << "cache: " << res.warning << "\n";
        }
    }
    ~CachedRing() {
        if (!dir.empty()) {
            try {
                cache_store(ring, dir);
            } catch (const std::exception& e) {
                std::cerr << "cache: " << e.what() << "\n";
            }
        }
    }
};

int cmd_ring(const Config& cfg, unsigned k, unsigned n) {
    CachedRing cr(cfg, k, n);
    std::vector<std::size_t> sizes;
    for (unsigned d = 0; d <= cr.ring.dim(); ++d)
        sizes.push_back(cr.ring.basis_size(d));
    if (cfg.format == "json") {
        json j{{"k", k}, {"n", n}, {"dim", cr.ring.dim()},
               {"basis_sizes", vec_json(sizes)}};
        emit_json(cfg, std::move(j));
    } else if (cfg.format == "csv") {
        std::cout << "degree,basis_size\n";
        for (unsigned d = 0; d < sizes.size(); ++d)
            std::cout << d << "," << sizes[d] << "\n";
    } else {
        plain_header(cfg);
        std::cout << "ring k=" << k << " n=" << n << " dim=" << cr.ring.dim()
                  << "\n";
        for (unsigned d = 0; d < sizes.size(); ++d)
            std::cout << "  degree " << d << ": " << sizes[d] << "\n";
    }
    return 0;
}

int cmd_height(const Config& cfg, unsigned k, unsigned n) {
    CachedRing cr(cfg, k, n);
    const auto h = cr.ring.heights();
    const auto cf = closed_form_height_w1(k, n);
    if (cfg.format == "json") {
        json j{{"k", k}, {"n", n}, {"heights", vec_json(h)}};
        json c{{"applicable", cf.applicable}};
        if (cf.applicable)
            c["value"] = cf.value;
        else
            c["reason"] = cf.reason;
        j["closed_form_w1"] = std::move(c);
        emit_json(cfg, std::move(j));
    } else if (cfg.format == "csv") {
        std::cout << "generator,height\n";
        for (unsigned i = 0; i < h.size(); ++i)
            std::cout << "w" << (i + 1) << "," << h[i] << "\n";
    } else {
        plain_header(cfg);
        std::cout << "heights k=" << k << " n=" << n << ":";
        for (unsigned i = 0; i < h.size(); ++i)
            std::cout << " w" << (i + 1) << "=" << h[i];
        std::cout << "\n";
        if (cf.applicable)
            std::cout << "  closed form for w1: " << cf.value
                      << (h[0] == cf.value ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    return 0;
}

int cmd_cuplength(const Config& cfg, unsigned k, unsigned n, bool certificate) {
    CachedRing cr(cfg, k, n);
    const auto cup = cr.ring.max_monomial_cup_length();
    std::string cert;
    if (certificate) {
        if (n > 9)
            std::cerr << "note: certificate search above n = 9 may be slow\n";
        Monomial m;
        m.exps = cup.witness;
        const auto fc = grassmann_nonzero_via_flag(
            k, n, Polynomial::from_monomial(cr.ring.space(), std::move(m)));
        cert = fc.status == FlagCheck::Status::nonzero ? "confirmed"
               : fc.status == FlagCheck::Status::zero  ? "refuted"
                                                       : "out-of-budget";
    }
    if (cfg.format == "json") {
        json j{{"k", k},
               {"n", n},
               {"cup_length", cup.length},
               {"witness", vec_json(cup.witness)},
               {"cat_lower", cup.length + 1}};
        if (certificate)
            j["certificate"] = cert;
        emit_json(cfg, std::move(j));
    } else if (cfg.format == "csv") {
        std::cout << "k,n,cup_length,cat_lower,witness\n"
                  << k << "," << n << "," << cup.length << "," << cup.length + 1
                  << "," << vec_plain(cup.witness) << "\n";
    } else {
        plain_header(cfg);
        std::cout << "cup-length k=" << k << " n=" << n << ": " << cup.length
                  << " via " << vec_plain(cup.witness)
                  << "  (cat >= " << cup.length + 1 << ")\n";
        if (certificate)
            std::cout << "  flag certificate: " << cert << "\n";
    }
    return 0;
}

int cmd_zcl(const Config& cfg, unsigned k, unsigned n, bool exact) {
    CachedRing cr(cfg, k, n);
    TensorRing tr(cr.ring);
    const auto z = exact ? tr.zcl_exact() : tr.zcl_basic();
    if (cfg.format == "json") {
        json j{{"k", k},
               {"n", n},
               {"mode", exact ? "exact" : "basic"},
               {"zcl", z.length},
               {"witness", json{{"m", vec_json(z.witness)}}},
               {"tc_lower", z.length + 1}};
        emit_json(cfg, std::move(j));
    } else if (cfg.format == "csv") {
        std::cout << "k,n,mode,zcl,tc_lower,witness\n"
                  << k << "," << n << "," << (exact ? "exact" : "basic") << ","
                  << z.length << "," << z.length + 1 << ","
                  << vec_plain(z.witness) << "\n";
    } else {
        plain_header(cfg);
        std::cout << "zcl k=" << k << " n=" << n << " (" << (exact ? "exact" : "basic")
                  << "): " << z.length << " via z-powers " << vec_plain(z.witness)
                  << "  (TC >= " << z.length + 1 << ")\n";
    }
    return 0;
}

json bounds_json(const BoundsReport& b, bool exact) {
    json j{{"k", b.k}, {"n", b.n}, {"dim", b.dim}};
    j["cat"] = json{{"lower", b.cat_lower},
                    {"upper", b.cat_upper},
                    {"witness", vec_json(b.cup_witness)}};
    json tc{{"lower", b.tc_lower},
            {"upper", b.tc_upper},
            {"witness", vec_json(b.zcl_witness)},
            {"zcl", b.zcl}};
    if (exact)
        tc["zcl_exact"] = b.zcl;
    j["tc"] = std::move(tc);
    json ex = json::array();
    for (const auto& e : b.exceptions)
        ex.push_back(e);
    j["exceptions"] = std::move(ex);
    if (b.complement_used)
        j["complement_used"] = true;
    if (b.partial) {
        j["partial"] = true;
        j["partial_reason"] = b.partial_reason;
    }
    return j;
}

int cmd_bounds(const Config& cfg, unsigned k, unsigned n, bool exact) {
    const auto b = bounds_report(k, n, cfg.max_degree_cap);
    if (cfg.format == "json") {
        emit_json(cfg, bounds_json(b, exact));
    } else if (cfg.format == "csv") {
        std::cout << "k,n,dim,cup,cat_lower,cat_upper,zcl,tc_lower,tc_upper,partial\n"
                  << b.k << "," << b.n << "," << b.dim << "," << b.cup_length
                  << "," << b.cat_lower << "," << b.cat_upper << "," << b.zcl
                  << "," << b.tc_lower << "," << b.tc_upper << ","
                  << (b.partial ? 1 : 0) << "\n";
    } else {
        plain_header(cfg);
        std::cout << "bounds k=" << b.k << " n=" << b.n << " dim=" << b.dim << "\n";
        if (b.partial)
            std::cout << "  PARTIAL: " << b.partial_reason << "\n";
        if (b.complement_used)
            std::cout << "  computed via the complementary rank " << (b.n - b.k)
                      << "\n";
        std::cout << "  cat in [" << b.cat_lower << ", " << b.cat_upper
                  << "]  cup witness " << vec_plain(b.cup_witness) << "\n";
        std::cout << "  tc  in [" << b.tc_lower << ", " << b.tc_upper
                  << "]  zcl " << b.zcl << " via " << vec_plain(b.zcl_witness)
                  << "\n";
        for (const auto& e : b.exceptions)
            std::cout << "  note: " << e << "\n";
    }
    return b.partial ? 2 : 0;
}

int cmd_cells(const Config& cfg, unsigned k, unsigned n, int dim_filter) {
    const auto counts = cell_counts(k, n);
    std::vector<SchubertSymbol> symbols;
    if (dim_filter >= 0)
        symbols = enumerate_symbols(k, n, static_cast<unsigned>(dim_filter));
    if (cfg.format == "json") {
        json j{{"k", k}, {"n", n}, {"counts", vec_json(counts)},
               {"total", binomial(n, k)}};
        if (dim_filter >= 0) {
            json arr = json::array();
            for (const auto& s : symbols)
                arr.push_back(vec_json(s.sigma));
            j["symbols"] = std::move(arr);
            j["dimension"] = dim_filter;
        }
        emit_json(cfg, std::move(j));
    } else if (cfg.format == "csv") {
        std::cout << "dimension,cells\n";
        for (unsigned d = 0; d < counts.size(); ++d)
            std::cout << d << "," << counts[d] << "\n";
    } else {
        plain_header(cfg);
        std::cout << "cells k=" << k << " n=" << n << " total=" << binomial(n, k)
                  << "\n";
        for (unsigned d = 0; d < counts.size(); ++d)
            std::cout << "  dim " << d << ": " << counts[d] << "\n";
        if (dim_filter >= 0) {
            std::cout << "  symbols of dim " << dim_filter << ":";
            for (const auto& s : symbols)
                std::cout << " " << vec_plain(s.sigma);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_table(const Config& cfg, unsigned min_k, unsigned max_k, unsigned min_n,
              unsigned max_n) {
    if (min_k == 0 || min_k > max_k || min_n > max_n)
        throw usage_error("table: need 1 <= min-k <= max-k and min-n <= max-n");
    std::vector<BoundsReport> rows;
    for (unsigned k = min_k; k <= max_k; ++k)
        for (unsigned n = std::max(min_n, 2 * k); n <= max_n; ++n)
            rows.push_back(bounds_report(k, n, cfg.max_degree_cap));
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& b : rows)
            arr.push_back(bounds_json(b, false));
        emit_json(cfg, json{{"table", std::move(arr)}});
    } else if (cfg.format == "csv") {
        std::cout << "k,n,dim,cup,cat_lower,cat_upper,zcl,tc_lower,tc_upper,partial\n";
        for (const auto& b : rows)
            std::cout << b.k << "," << b.n << "," << b.dim << "," << b.cup_length
                      << "," << b.cat_lower << "," << b.cat_upper << "," << b.zcl
                      << "," << b.tc_lower << "," << b.tc_upper << ","
                      << (b.partial ? 1 : 0) << "\n";
    } else {
        plain_header(cfg);
        std::cout << "k  n  dim  cup  cat        zcl  tc\n";
        for (const auto& b : rows) {
            std::cout << b.k << "  " << b.n << "  " << b.dim << "  "
                      << b.cup_length << "  [" << b.cat_lower << ","
                      << b.cat_upper << "]  " << b.zcl << "  [" << b.tc_lower
                      << "," << b.tc_upper << "]"
                      << (b.partial ? "  PARTIAL" : "") << "\n";
        }
    }
    for (const auto& b : rows)
        if (b.partial)
            return 2;
    return 0;
}

int cmd_verify(const Config& cfg, const std::string& suite, unsigned max_k,
               unsigned max_n, bool certificates) {
    if (suite != "paper")
        throw usage_error("verify: unknown suite '" + suite + "' (have: paper)");
    VerifyOptions opt;
    opt.max_k = max_k;
    opt.max_n = max_n;
    opt.certificates = certificates;
    opt.degree_block_bit_cap = cfg.max_degree_cap;
    const auto recs = verify_suite(opt);

    unsigned pass = 0, fail = 0, inap = 0, infe = 0;
    for (const auto& r : recs) {
        switch (r.status) {
        case VerificationRecord::Status::pass: ++pass; break;
        case VerificationRecord::Status::fail: ++fail; break;
        case VerificationRecord::Status::inapplicable: ++inap; break;
        case VerificationRecord::Status::infeasible: ++infe; break;
        }
    }
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : recs) {
            json jr{{"id", r.id},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"status", to_string(r.status)}};
            if (!r.note.empty())
                jr["note"] = r.note;
            arr.push_back(std::move(jr));
        }
        json j{{"suite", suite},
               {"records", std::move(arr)},
               {"summary", json{{"pass", pass},
                                {"fail", fail},
                                {"inapplicable", inap},
                                {"infeasible", infe}}}};
        emit_json(cfg, std::move(j));
    } else if (cfg.format == "csv") {
        std::cout << "status,id,expected,computed\n";
        for (const auto& r : recs)
            std::cout << to_string(r.status) << "," << r.id << ",\""
                      << r.expected << "\",\"" << r.computed << "\"\n";
    } else {
        plain_header(cfg);
        for (const auto& r : recs) {
            std::cout << to_string(r.status) << "  " << r.id;
            if (r.status == VerificationRecord::Status::fail)
                std::cout << "  expected: " << r.expected
                          << "  computed: " << r.computed;
            if (!r.note.empty())
                std::cout << "  [" << r.note << "]";
            std::cout << "\n";
        }
        std::cout << "summary: " << pass << " pass, " << fail << " fail, "
                  << inap << " inapplicable, " << infe << " infeasible\n";
    }
    return fail ? 3 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 cohomology engine for real Grassmannians: heights, "
                 "cup-lengths, zero-divisor cup-lengths, TC/category bounds, "
                 "cells, and claim verification"};
    app.require_subcommand(1);

    Config cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timestamp", cfg.no_timestamp,
                 "omit the generated-at timestamp (byte-stable output)");
    app.add_option("--cache-dir", cfg.cache_dir,
                   "ring cache directory (default: $GRASSTC_CACHE_DIR)");
    app.add_option("--max-degree-cap", cfg.max_degree_cap,
                   "per-degree relation-matrix budget in bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    unsigned k = 2, n = 4;
    auto add_kn = [&](CLI::App* sub) {
        sub->fallthrough(); // let global flags appear after the subcommand
        sub->add_option("-k,--k", k, "number of planes (rank)")->required();
        sub->add_option("-n,--n", n, "ambient dimension")->required();
    };

    auto* s_ring = app.add_subcommand("ring", "basis sizes per degree");
    add_kn(s_ring);
    auto* s_height = app.add_subcommand("height", "heights of the generators");
    add_kn(s_height);
    bool certificate = false;
    auto* s_cup = app.add_subcommand("cuplength", "maximal nonzero monomial length");
    add_kn(s_cup);
    s_cup->add_flag("--certificate", certificate,
                    "independently certify the witness via the flag manifold");
    bool exact = false;
    auto* s_zcl = app.add_subcommand("zcl", "zero-divisor cup-length");
    add_kn(s_zcl);
    s_zcl->add_flag("--exact", exact, "exact search over kernel products");
    auto* s_bounds = app.add_subcommand("bounds", "cat and TC bounds");
    add_kn(s_bounds);
    s_bounds->add_flag("--exact", exact, "also report the exact-mode zcl");
    int dim_filter = -1;
    auto* s_cells = app.add_subcommand("cells", "cell structure");
    add_kn(s_cells);
    s_cells->add_option("-d,--dim", dim_filter, "list symbols of one dimension");

    unsigned min_k = 2, tab_max_k = 3, min_n = 4, tab_max_n = 10;
    auto* s_table = app.add_subcommand("table", "bounds over a (k,n) grid");
    s_table->fallthrough();
    s_table->add_option("--min-k", min_k, "smallest rank")->capture_default_str();
    s_table->add_option("--max-k", tab_max_k, "largest rank")->capture_default_str();
    s_table->add_option("--min-n", min_n, "smallest n")->capture_default_str();
    s_table->add_option("--max-n", tab_max_n, "largest n")->capture_default_str();

    std::string suite = "paper";
    unsigned ver_max_k = 8, ver_max_n = 16;
    bool no_certificates = false;
    auto* s_verify = app.add_subcommand("verify", "run a claim-verification suite");
    s_verify->fallthrough();
    s_verify->add_option("--suite", suite, "suite name")->capture_default_str();
    s_verify->add_option("--max-k", ver_max_k, "rank ceiling")->capture_default_str();
    s_verify->add_option("--max-n", ver_max_n, "ambient ceiling")->capture_default_str();
    s_verify->add_flag("--no-certificates", no_certificates,
                       "skip the independent flag-manifold pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (s_ring->parsed())
            return cmd_ring(cfg, k, n);
        if (s_height->parsed())
            return cmd_height(cfg, k, n);
        if (s_cup->parsed())
            return cmd_cuplength(cfg, k, n, certificate);
        if (s_zcl->parsed())
            return cmd_zcl(cfg, k, n, exact);
        if (s_bounds->parsed())
            return cmd_bounds(cfg, k, n, exact);
        if (s_cells->parsed())
            return cmd_cells(cfg, k, n, dim_filter);
        if (s_table->parsed())
            return cmd_table(cfg, min_k, tab_max_k, min_n, tab_max_n);
        if (s_verify->parsed())
            return cmd_verify(cfg, suite, ver_max_k, ver_max_n, !no_certificates);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
