#include "rsum/cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>

#include "rsum/errors.hpp"
#include "rsum/json_io.hpp"
#include "rsum/rng.hpp"
#include "rsum/witness.hpp"

namespace rsum::cli {

namespace {

struct Options {
    unsigned p = 0;
    int a_size = 0, b_size = 0, s_size = 0;
    std::string a_lit, b_lit, s_lit;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t samples = 0;
    bool samples_given = false;
    bool exhaustive = false;
    bool no_symmetry = false;
    int jobs = 1;
    std::uint64_t budget = 50'000'000;
    int trials = 200;
    int max_s = 0;
    std::string format = "json";
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_bounds(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    const BoundReport r = bound_table(p, o.a_size, o.b_size, o.s_size);
    switch (parse_format(o.format)) {
        case OutputFormat::json: emit_json(out, to_json(r)); break;
        case OutputFormat::csv: out << bound_report_csv(r); break;
        case OutputFormat::human: out << bound_report_human(r); break;
    }
    return 0;
}

int run_sumset(const Options& o, std::ostream& out) {
    if (parse_format(o.format) == OutputFormat::csv)
        throw std::invalid_argument("sumset supports json or human output");
    const PrimeModulus p(o.p);
    const ResidueSet A = parse_set_literal(o.a_lit, p);
    const ResidueSet B = parse_set_literal(o.b_lit, p);
    const ResidueSet S = parse_set_literal(o.s_lit, p);
    const ResidueSet C = restricted_sumset(A, B, S);
    const BoundReport bounds = bound_table(p, A.size(), B.size(), S.size());
    if (!A.empty() && !B.empty() && C.size() < bounds.thm2)
        throw CheckFailure("|C| = " + std::to_string(C.size()) + " violates the bound " +
                           std::to_string(bounds.thm2));

    if (parse_format(o.format) == OutputFormat::human) {
        out << "C = {" << set_literal(C) << "}, size " << C.size() << ", thm2 bound "
            << bounds.thm2 << (C.size() == bounds.thm2 ? " (tight)" : "") << "\n";
        return 0;
    }
    Json j;
    j["p"] = o.p;
    j["a"] = to_json(A);
    j["b"] = to_json(B);
    j["s"] = to_json(S);
    j["c"] = to_json(C);
    j["size"] = C.size();
    j["thm2_bound"] = bounds.thm2;
    j["tight"] = C.size() == bounds.thm2;
    emit_json(out, j);
    return 0;
}

int run_uncertainty(const Options& o, std::ostream& out) {
    if (parse_format(o.format) == OutputFormat::csv)
        throw std::invalid_argument("uncertainty supports json or human output");
    const PrimeModulus p(o.p);
    if (o.trials < 0) throw std::invalid_argument("--trials must be nonnegative");
    Prng rng(o.seed);
    int violations = 0;
    int min_lhs = 2 * static_cast<int>(o.p);
    for (int t = 0; t < o.trials; ++t) {
        std::vector<CycNum> vals;
        bool nonzero = false;
        while (!nonzero) {
            vals.clear();
            for (unsigned a = 0; a < o.p; ++a) {
                const long long v = rng.int_in(-5, 5);
                nonzero = nonzero || v != 0;
                vals.push_back(CycNum::from_integer(p, v));
            }
        }
        const auto rep = uncertainty_check(ZpFunction::from_values(p, std::move(vals)));
        min_lhs = std::min(min_lhs, rep.lhs);
        if (!rep.holds) ++violations;
    }
    Json j;
    j["p"] = o.p;
    j["trials"] = o.trials;
    j["seed"] = o.seed;
    j["violations"] = violations;
    j["min_lhs"] = o.trials > 0 ? Json(min_lhs) : Json(nullptr);
    if (parse_format(o.format) == OutputFormat::human)
        out << "p=" << o.p << ": " << violations << " violations in " << o.trials << " trials\n";
    else
        emit_json(out, j);
    if (violations > 0)
        throw CheckFailure("uncertainty principle violated " + std::to_string(violations) +
                           " times; the exact arithmetic is broken");
    return 0;
}

int run_witness(const Options& o, std::ostream& out) {
    if (parse_format(o.format) == OutputFormat::csv)
        throw std::invalid_argument("witness supports json or human output");
    const PrimeModulus p(o.p);
    const ResidueSet A = parse_set_literal(o.a_lit, p);
    const ResidueSet B = parse_set_literal(o.b_lit, p);
    const ZpFunction f = construct_witness(p, A, B, o.seed);
    const ZpFunction f_hat = dft(f);
    Json j;
    j["p"] = o.p;
    j["a"] = to_json(A);
    j["b"] = to_json(B);
    j["seed"] = o.seed;
    j["f"] = to_json(f);
    j["f_hat"] = to_json(f_hat);
    Json supports;
    supports["f"] = to_json(support(f));
    supports["f_hat"] = to_json(support(f_hat));
    j["supports"] = std::move(supports);
    j["verified"] = verify_witness(f, A, B);
    if (parse_format(o.format) == OutputFormat::human) {
        out << "f with supp(f)={" << set_literal(A) << "}, supp(f_hat)={" << set_literal(B)
            << "}:\n";
        for (unsigned a = 0; a < o.p; ++a) out << "  f(" << a << ") = " << f[a].to_string() << "\n";
    } else {
        emit_json(out, j);
    }
    return 0;
}

int run_trace(const Options& o, std::ostream& out) {
    if (parse_format(o.format) == OutputFormat::csv)
        throw std::invalid_argument("trace supports json or human output");
    const PrimeModulus p(o.p);
    const ResidueSet A = parse_set_literal(o.a_lit, p);
    const ResidueSet B = parse_set_literal(o.b_lit, p);
    const ResidueSet S = parse_set_literal(o.s_lit, p);
    const TraceReport rep = trace_restricted_bound(p, A, B, S, o.seed);
    if (parse_format(o.format) == OutputFormat::human)
        out << trace_report_human(rep);
    else
        emit_json(out, to_json(rep));
    return 0;
}

int run_search(const Options& o, std::ostream& out) {
    SearchSpec spec{PrimeModulus(o.p)};
    spec.nA = o.a_size;
    spec.nB = o.b_size;
    spec.nS = o.s_size;
    spec.symmetry_reduction = !o.no_symmetry;
    spec.workers = o.jobs;
    spec.budget = o.budget;
    if (o.samples_given && o.exhaustive)
        throw std::invalid_argument("--exhaustive and --samples are mutually exclusive");
    if (o.samples_given) {
        spec.mode = SearchSpec::Mode::sampled;
        spec.sample_count = o.samples;
        spec.seed = o.seed;
    } else {
        spec.mode = SearchSpec::Mode::exhaustive;
    }
    const SearchReport rep = spec.mode == SearchSpec::Mode::sampled ? sampled_min(spec) : exhaustive_min(spec);
    switch (parse_format(o.format)) {
        case OutputFormat::json: emit_json(out, to_json(rep)); break;
        case OutputFormat::csv: out << search_report_csv(rep); break;
        case OutputFormat::human: out << search_report_human(rep); break;
    }
    return 0;
}

int run_scan(const Options& o, std::ostream& out) {
    const PrimeModulus p(o.p);
    const auto cells = conjecture_scan(p, o.max_s, o.jobs);
    switch (parse_format(o.format)) {
        case OutputFormat::json: emit_json(out, scan_to_json(p, o.max_s, cells)); break;
        case OutputFormat::csv: out << scan_csv(p, cells); break;
        case OutputFormat::human:
            throw std::invalid_argument("scan supports json or csv output");
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact restricted-sumset laboratory over Z_p"};
    app.require_subcommand(1);
    Options o;

    auto add_p = [&](CLI::App* cmd) { cmd->add_option("--p", o.p, "prime modulus")->required(); };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "json|csv|human");
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "PRNG seed (default 1729)");
    };

    CLI::App* bounds = app.add_subcommand("bounds", "closed-form lower bounds for the cell sizes");
    add_p(bounds);
    bounds->add_option("--a-size", o.a_size, "|A|")->required();
    bounds->add_option("--b-size", o.b_size, "|B|")->required();
    bounds->add_option("--s-size", o.s_size, "|S|");
    add_format(bounds);

    CLI::App* sumset = app.add_subcommand("sumset", "restricted sumset of explicit sets");
    add_p(sumset);
    sumset->add_option("--a", o.a_lit, "set literal, e.g. 0,1,2")->required();
    sumset->add_option("--b", o.b_lit, "set literal")->required();
    sumset->add_option("--s", o.s_lit, "excluded differences (default empty)");
    add_format(sumset);

    CLI::App* unc = app.add_subcommand("uncertainty", "random exact checks of |supp f|+|supp f_hat| >= p+1");
    add_p(unc);
    unc->add_option("--trials", o.trials, "number of random functions (default 200)");
    add_seed(unc);
    add_format(unc);

    CLI::App* wit = app.add_subcommand("witness", "construct f with supp(f)=A, supp(f_hat)=B");
    add_p(wit);
    wit->add_option("--a", o.a_lit, "target supp(f)")->required();
    wit->add_option("--b", o.b_lit, "target supp(f_hat)")->required();
    add_seed(wit);
    add_format(wit);

    CLI::App* trace = app.add_subcommand("trace", "run the checked bound derivation on one instance");
    add_p(trace);
    trace->add_option("--a", o.a_lit, "set literal")->required();
    trace->add_option("--b", o.b_lit, "set literal")->required();
    trace->add_option("--s", o.s_lit, "set literal (default empty)");
    add_seed(trace);
    add_format(trace);

    CLI::App* search = app.add_subcommand("search", "minimum |C| over a size-constrained cell");
    add_p(search);
    search->add_option("--a-size", o.a_size, "|A|")->required();
    search->add_option("--b-size", o.b_size, "|B|")->required();
    search->add_option("--s-size", o.s_size, "|S|");
    search->add_flag("--exhaustive", o.exhaustive, "scan every configuration (default)");
    search->add_option("--samples", o.samples, "sampled mode with this many draws");
    add_seed(search);
    search->add_flag("--no-symmetry", o.no_symmetry, "disable affine symmetry reduction");
    search->add_option("--jobs", o.jobs, "worker threads (default 1)");
    search->add_option("--budget", o.budget, "max configurations for exhaustive mode");
    add_format(search);

    CLI::App* scan = app.add_subcommand("scan", "conjecture evidence table over all cells");
    add_p(scan);
    scan->add_option("--max-s", o.max_s, "largest |S| to scan")->required();
    scan->add_option("--jobs", o.jobs, "worker threads (default 1)");
    add_format(scan);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    o.samples_given = search->count("--samples") > 0;

    try {
        if (bounds->parsed()) return run_bounds(o, out);
        if (sumset->parsed()) return run_sumset(o, out);
        if (unc->parsed()) return run_uncertainty(o, out);
        if (wit->parsed()) return run_witness(o, out);
        if (trace->parsed()) return run_trace(o, out);
        if (search->parsed()) return run_search(o, out);
        if (scan->parsed()) return run_scan(o, out);
    } catch (const CheckFailure& e) {
        err << "mathematical check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace rsum::cli
