#include "cli.hpp"

#include "qdiamond/catalog.hpp"
#include "qdiamond/diamond.hpp"
#include "qdiamond/eta_quotient.hpp"
#include "qdiamond/jsonl.hpp"
#include "qdiamond/number_theory.hpp"
#include "qdiamond/scan.hpp"
#include "qdiamond/theta_identities.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

namespace qdiamond::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void usage_check(bool ok, const std::string& message)
{
    if (!ok)
        throw UsageError(message);
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

struct ExpandArgs {
    std::string eta;
    std::size_t order = 0;
    std::uint64_t modulus = 0;
};

int do_expand(const ExpandArgs& a, std::ostream& out)
{
    EtaQuotient eq;
    try {
        eq = EtaQuotient::parse(a.eta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    usage_check(a.order >= 1, "--order must be at least 1");
    usage_check(a.modulus != 1, "--mod must be at least 2");
    const auto ring = a.modulus == 0 ? CoeffRing::integers() : CoeffRing::modulo(a.modulus);
    const Series s = eta_quotient_series(eq, a.order, ring);
    for (std::size_t n = 0; n < s.order(); ++n)
        out << n << '\t' << s.coeff(n) << '\n';
    return exit_ok;
}

int do_verify_lemma(const std::string& id, std::size_t order, std::ostream& out)
{
    std::vector<LemmaId> ids;
    if (id == "all") {
        ids.assign(all_lemmas.begin(), all_lemmas.end());
    } else {
        auto parsed = parse_lemma(id);
        usage_check(parsed.has_value(), "unknown lemma id '" + id + "'");
        ids.push_back(*parsed);
    }
    usage_check(order >= 1, "--order must be at least 1");
    bool all_ok = true;
    for (LemmaId lemma : ids) {
        const LemmaReport r = verify_lemma(lemma, order);
        all_ok = all_ok && r.passed();
        out << pass_fail(r.passed()) << '\t' << r.name << "\torder=" << r.order;
        if (!r.passed())
            out << "\tindex=" << r.mismatch->index << "\tlhs=" << r.mismatch->lhs
                << "\trhs=" << r.mismatch->rhs;
        out << '\n';
    }
    return all_ok ? exit_ok : exit_failed;
}

Congruence checked_claim(std::uint64_t k, std::uint64_t A, std::uint64_t B, std::uint64_t M)
{
    Congruence c{k, A, B, M, "command line", ClaimSource::Generated};
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return c;
}

int print_reports(const std::vector<Report>& reports, std::ostream& out)
{
    std::size_t held = 0;
    for (const auto& r : reports) {
        held += r.holds();
        out << pass_fail(r.holds()) << '\t' << render(r) << '\t' << r.claim.family << '\n';
    }
    out << held << '/' << reports.size() << " congruences hold";
    if (!reports.empty())
        out << " up to bound " << reports.front().bound;
    out << '\n';
    return held == reports.size() ? exit_ok : exit_failed;
}

void check_bound(const std::vector<Congruence>& claims, std::size_t bound)
{
    for (const auto& c : claims)
        usage_check(bound >= c.A + c.B,
                    "--bound " + std::to_string(bound) + " is below A + B for " + c.to_string());
}

int do_families(std::uint64_t p, const std::string& kind, std::uint64_t j, std::size_t bound,
                std::ostream& out)
{
    std::vector<Congruence> claims;
    try {
        if (kind == "pm2")
            claims = family_p_minus_2(p);
        else if (kind == "pm1")
            claims = family_p_minus_1(p);
        else if (kind == "ramanujan")
            claims.push_back(family_ramanujan(p));
        else if (kind == "d7")
            claims = family_d7_prime(p);
        else
            throw UsageError("unknown --kind '" + kind + "'");
        if (kind != "d7")
            for (auto& c : claims)
                c = lift(c, j);
        else
            usage_check(j == 0, "--j does not apply to --kind d7");
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    check_bound(claims, bound);
    return print_reports(verify_all(claims, bound), out);
}

int do_smoot(unsigned alpha_max, std::size_t bound, std::ostream& out)
{
    usage_check(alpha_max >= 1 && alpha_max <= 20, "--alpha-max must be in [1, 20]");
    for (unsigned a = 1; a <= alpha_max; ++a)
        check_bound({smoot_claim(a)}, bound);
    const auto reports = smoot_check(alpha_max, bound);
    bool all_ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        all_ok = all_ok && r.holds();
        out << pass_fail(r.holds()) << "\talpha=" << (i + 1) << '\t' << render(r) << '\n';
    }
    return all_ok ? exit_ok : exit_failed;
}

int do_scan(const ScanOptions& opts, const std::string& out_path, std::ostream& out)
{
    usage_check(!opts.ks.empty(), "--k needs at least one value");
    usage_check(!opts.moduli.empty(), "--mods needs at least one value");
    usage_check(opts.A_max >= 1, "--A-max must be at least 1");
    usage_check(opts.bound >= 10 * opts.A_max, "--bound must be at least 10 * A-max");
    for (auto k : opts.ks)
        usage_check(k >= 1, "--k values must be at least 1");
    for (auto m : opts.moduli)
        usage_check(m >= 2, "--mods values must be at least 2");

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        usage_check(file.good(), "cannot open '" + out_path + "' for writing");
    }
    const auto found = scan(opts);
    write_jsonl(out_path.empty() ? out : file, found, opts.bound);
    if (!out_path.empty())
        out << found.size() << " congruences written to " << out_path << '\n';
    return exit_ok;
}

template <class Fn>
double time_ms(Fn&& fn)
{
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int do_bench(std::size_t order, std::ostream& out)
{
    usage_check(order >= 1, "--order must be at least 1");
    std::mt19937_64 rng(12345);
    constexpr std::uint64_t big_modulus = (std::uint64_t{1} << 61) - 1;

    auto random_mod = [&](std::uint64_t m) {
        Series::Residues v(order);
        for (auto& x : v)
            x = rng() % m;
        return Series::from_residues(m, std::move(v));
    };
    auto random_exact = [&] {
        Series::Integers v(order);
        for (auto& x : v)
            x = static_cast<long>(rng() % 2001) - 1000;
        return Series::from_exact(std::move(v));
    };

    out << std::left << std::setw(44) << "operation" << std::setw(10) << "order" << std::setw(14)
        << "ms" << "check" << '\n';
    auto row = [&](const std::string& name, double ms, const std::string& check) {
        out << std::left << std::setw(44) << name << std::setw(10) << order << std::setw(14)
            << std::fixed << std::setprecision(2) << ms << check << '\n';
    };

    for (std::uint64_t m : {std::uint64_t{2187}, big_modulus}) {
        const Series a = random_mod(m), b = random_mod(m);
        Series s = a, k = a;
        const double t_s = time_ms([&] { s = mul(a, b, MulAlgorithm::Schoolbook); });
        const double t_k = time_ms([&] { k = mul(a, b, MulAlgorithm::Karatsuba); });
        const std::string tag = "mod " + std::to_string(m);
        row("mul schoolbook " + tag, t_s, "");
        row("mul karatsuba " + tag, t_k, s == k ? "identical" : "MISMATCH");
    }
    {
        const Series a = random_exact(), b = random_exact();
        Series s = a, k = a;
        const double t_s = time_ms([&] { s = mul(a, b, MulAlgorithm::Schoolbook); });
        const double t_k = time_ms([&] { k = mul(a, b, MulAlgorithm::Karatsuba); });
        row("mul schoolbook Z", t_s, "");
        row("mul karatsuba Z", t_k, s == k ? "identical" : "MISMATCH");
    }
    {
        Series p = Series::one(CoeffRing::integers(), 1);
        const double t = time_ms([&] { p = partition_series(order, CoeffRing::modulo(2187)); });
        row("partition recurrence mod 2187", t, "");
    }
    for (std::uint64_t k : {2, 7}) {
        Series d = Series::one(CoeffRing::integers(), 1);
        const double t = time_ms([&] { d = dk_series(k, order, CoeffRing::modulo(2187)).values; });
        row("d_" + std::to_string(k) + " expansion mod 2187", t, "");
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"q-series engine and congruence checker for k-elongated partition diamonds",
                 "qdiamond"};
    app.require_subcommand(1, 1);

    ExpandArgs expand;
    auto* c_expand = app.add_subcommand("expand", "Expand an eta quotient");
    c_expand->add_option("--eta", expand.eta, "Quotient as r^e tokens, e.g. \"2^2 1^-7\"")->required();
    c_expand->add_option("--order", expand.order, "Number of coefficients")->required();
    c_expand->add_option("--mod", expand.modulus, "Reduce modulo M");

    std::string lemma_id;
    std::size_t lemma_order = 2000;
    auto* c_lemma = app.add_subcommand("verify-lemma", "Check theta identities over Z");
    c_lemma->add_option("--id", lemma_id, "Lemma name or 'all'")->required();
    c_lemma->add_option("--order", lemma_order, "Truncation order");

    std::uint64_t vk = 0, vA = 0, vB = 0, vM = 0;
    std::size_t v_bound = 0;
    auto* c_verify = app.add_subcommand("verify", "Check d_k(An+B) = 0 (mod M) up to a bound");
    c_verify->add_option("--k", vk)->required();
    c_verify->add_option("--A", vA)->required();
    c_verify->add_option("--B", vB)->required();
    c_verify->add_option("--mod", vM)->required();
    c_verify->add_option("--bound", v_bound)->required();

    std::size_t cat_bound = 20000;
    std::uint64_t cat_j_max = 2;
    unsigned threads = 0;
    auto* c_catalog = app.add_subcommand("catalog", "Verify every catalogued congruence");
    c_catalog->add_option("--bound", cat_bound, "Verification bound");
    c_catalog->add_option("--j-max", cat_j_max, "Expand lifted families for j = 0..J");
    c_catalog->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::uint64_t fam_p = 0, fam_j = 0;
    std::string fam_kind;
    std::size_t fam_bound = 20000;
    auto* c_families = app.add_subcommand("families", "Generate and verify a prime family");
    c_families->add_option("--p", fam_p, "Prime (or l for ramanujan)")->required();
    c_families->add_option("--kind", fam_kind, "pm2 | pm1 | ramanujan | d7")
        ->required()
        ->check(CLI::IsMember({"pm2", "pm1", "ramanujan", "d7"}));
    c_families->add_option("--j", fam_j, "Lift to k' = p j + k");
    c_families->add_option("--bound", fam_bound, "Verification bound");

    unsigned alpha_max = 0;
    std::size_t smoot_bound = 0;
    auto* c_smoot = app.add_subcommand("smoot", "Check d_2 modulo powers of 3 on 8n = 1 (mod 3^a)");
    c_smoot->add_option("--alpha-max", alpha_max)->required();
    c_smoot->add_option("--bound", smoot_bound)->required();

    ScanOptions scan_opts;
    std::string scan_out;
    auto* c_scan = app.add_subcommand("scan", "Search for congruences, JSON lines output");
    c_scan->add_option("--k", scan_opts.ks, "k values")->required()->delimiter(',');
    c_scan->add_option("--A-max", scan_opts.A_max, "Largest progression modulus")->required();
    c_scan->add_option("--mods", scan_opts.moduli, "Candidate moduli")->required()->delimiter(',');
    c_scan->add_option("--bound", scan_opts.bound, "Verification bound")->required();
    c_scan->add_option("--min-survivors", scan_opts.min_survivors, "Minimum terms per progression");
    c_scan->add_option("--out", scan_out, "Output file (default stdout)");
    c_scan->add_option("--threads", scan_opts.threads, "Worker threads (0 = all cores)");

    std::size_t bench_order = 0;
    auto* c_bench = app.add_subcommand("bench", "Time multiplication and expansion kernels");
    c_bench->add_option("--order", bench_order)->required();

    std::vector<const char*> argv{"qdiamond"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*c_expand)
            return do_expand(expand, out);
        if (*c_lemma)
            return do_verify_lemma(lemma_id, lemma_order, out);
        if (*c_verify) {
            const Congruence c = checked_claim(vk, vA, vB, vM);
            check_bound({c}, v_bound);
            const Report r = verify(c, v_bound);
            out << render(r) << '\n';
            return r.holds() ? exit_ok : exit_failed;
        }
        if (*c_catalog) {
            const auto claims = paper_catalog(cat_j_max);
            check_bound(claims, cat_bound);
            return print_reports(verify_all(claims, cat_bound, threads), out);
        }
        if (*c_families)
            return do_families(fam_p, fam_kind, fam_j, fam_bound, out);
        if (*c_smoot)
            return do_smoot(alpha_max, smoot_bound, out);
        if (*c_scan)
            return do_scan(scan_opts, scan_out, out);
        if (*c_bench)
            return do_bench(bench_order, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace qdiamond::cli
