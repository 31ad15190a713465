// aeq: command-line front end for arithmetic-equivalence computations.

#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "aeq/corpus.hpp"
#include "aeq/errors.hpp"
#include "aeq/report.hpp"

namespace {

using aeq::Json;
using aeq::u64;

enum Exit : int { kOk = 0, kExcludedPrime = 2, kDegreeMismatch = 3, kInputError = 4, kInsufficientData = 5 };

// Thrown for bad option values after CLI11 has accepted the syntax.
struct UsageError : aeq::Error {
    using aeq::Error::Error;
};

/// Accepts "100000", "1e5", "10^5".
u64 parse_count(const std::string& text, const char* what) {
    auto fail = [&] { return UsageError(std::string("invalid ") + what + ": " + text); };
    if (text.empty()) throw fail();
    auto digits = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) throw fail();
        return std::stoull(s);
    };
    auto power = [&](u64 base, u64 exp) {
        u64 v = 1;
        for (u64 i = 0; i < exp; ++i) {
            if (v > UINT64_MAX / base) throw fail();
            v *= base;
        }
        return v;
    };
    if (auto e = text.find_first_of("eE"); e != std::string::npos) {
        const u64 mant = digits(text.substr(0, e)), p = power(10, digits(text.substr(e + 1)));
        if (mant != 0 && p > UINT64_MAX / mant) throw fail();
        return mant * p;
    }
    if (auto c = text.find('^'); c != std::string::npos) return power(digits(text.substr(0, c)), digits(text.substr(c + 1)));
    return digits(text);
}

struct Globals {
    bool csv = false;
    bool pretty = false;
    bool compact = false;
    unsigned threads = 1;
    u64 seed = aeq::kDefaultSeed;
};

struct Outcome {
    Json inputs = Json::object();
    Json result = nullptr;
    Json warnings = Json::array();
    int code = kOk;
    std::optional<std::string> csv;  // replaces the JSON envelope when set
};

aeq::NumberField load_field(const std::string& label, const std::string& text, bool assume) {
    return aeq::new_field(label, aeq::parse_poly(text), assume);
}

void note_irreducibility(Outcome& out, const aeq::NumberField& F) {
    if (F.irreducibility() != aeq::Irreducibility::certified)
        out.warnings.push_back("irreducibility of " + aeq::render(F.poly()) + " is " + aeq::to_string(F.irreducibility()));
}

std::string excluded_list(const aeq::NumberField& F) {
    std::string s;
    for (const auto& p : F.excluded_primes()) s += (s.empty() ? "" : ", ") + p.get_str();
    return s;
}

struct TypeArgs {
    std::string poly;
    std::string prime;
    bool verify = false;
    bool assume = false;
};

void cmd_type(const TypeArgs& a, const Globals& g, Outcome& out) {
    const auto F = load_field("K", a.poly, a.assume);
    const u64 p = parse_count(a.prime, "prime");
    out.inputs = {{"poly", aeq::render(F.poly())}, {"prime", p}};
    if (a.verify) out.inputs["seed"] = g.seed;
    note_irreducibility(out, F);
    try {
        const auto t = aeq::arithmetic_type(F, p);
        Json r;
        r["type"] = aeq::to_json(t);
        r["ap"] = t.ones();
        r["g"] = t.g();
        r["frobeniusCharpoly"] = aeq::render(aeq::frobenius_charpoly(t));
        if (a.verify) {
            const auto full = aeq::ArithmeticType::from_multiset(aeq::factor_full(aeq::reduce_mod(F.poly(), p), g.seed));
            r["oracleType"] = aeq::to_json(full);
            r["oracleAgrees"] = full == t;
        }
        out.result = std::move(r);
    } catch (const aeq::ExcludedPrimeError&) {
        out.warnings.push_back("excluded prime: " + std::to_string(p) + " divides the polynomial discriminant");
        out.code = kExcludedPrime;
    }
}

struct CoeffsArgs {
    std::string poly;
    std::string limit;
    bool assume = false;
};

void cmd_coeffs(const CoeffsArgs& a, const Globals&, Outcome& out) {
    const auto F = load_field("K", a.poly, a.assume);
    const u64 limit = parse_count(a.limit, "limit");
    if (limit < 1) throw UsageError("limit must be >= 1");
    out.inputs = {{"poly", aeq::render(F.poly())}, {"limit", limit}};
    note_irreducibility(out, F);
    if (!F.excluded_primes().empty())
        out.warnings.push_back("a_n omitted for n divisible by an excluded prime (" + excluded_list(F) + ")");
    out.result = aeq::to_json(aeq::zeta_coeffs(F, limit));
}

struct PairArgs {
    std::string k, l;
    std::string xmax = "1000000";
    bool assume = false;
};

std::string histogram_csv(const aeq::SweepTally& t) {
    std::ostringstream s;
    s << "m,histK,histL,fractionK,fractionL\n";
    for (std::size_t m = 0; m < t.histK.size(); ++m) {
        const aeq::DensityEstimate ek{t.histK[m], t.considered}, el{t.histL[m], t.considered};
        s << m << ',' << t.histK[m] << ',' << t.histL[m] << ',' << aeq::fraction_string(ek.fraction()) << ','
          << aeq::fraction_string(el.fraction()) << '\n';
    }
    return s.str();
}

void cmd_sweep(const PairArgs& a, const Globals& g, Outcome& out) {
    const auto K = load_field("K", a.k, a.assume), L = load_field("L", a.l, a.assume);
    const u64 xmax = parse_count(a.xmax, "xmax");
    out.inputs = {{"k", aeq::render(K.poly())}, {"l", aeq::render(L.poly())}, {"xmax", xmax}};
    note_irreducibility(out, K);
    note_irreducibility(out, L);
    const auto tally = aeq::sweep_pair(K, L, xmax, g.threads);
    Json r;
    r["tally"] = aeq::to_json(tally);
    r["density"] = tally.considered ? aeq::to_json(aeq::density_report(tally)) : Json(nullptr);
    if (!tally.considered) {
        out.warnings.push_back("no unramified primes below xmax");
        out.code = kInsufficientData;
    }
    out.result = std::move(r);
    if (g.csv) out.csv = histogram_csv(tally);
}

void cmd_delta(const PairArgs& a, const Globals& g, Outcome& out) {
    const auto K = load_field("K", a.k, a.assume), L = load_field("L", a.l, a.assume);
    const u64 xmax = parse_count(a.xmax, "xmax");
    out.inputs = {{"k", aeq::render(K.poly())}, {"l", aeq::render(L.poly())}, {"xmax", xmax}};
    note_irreducibility(out, K);
    note_irreducibility(out, L);
    std::optional<aeq::SweepTally> tally;
    aeq::ClosureEstimate est;
    if (K.degree() == L.degree()) {
        tally = aeq::sweep_pair(K, L, xmax, g.threads);
        est = aeq::estimate_closure(*tally, "K", "L");
    } else {
        est = aeq::estimate_closure(K, L, xmax, g.threads);
    }
    Json r = aeq::to_json(aeq::delta_report(est, tally));
    r["closureEstimate"] = aeq::to_json(est);
    out.result = std::move(r);
}

struct VerdictArgs {
    PairArgs pair;
    bool grh = false;
    std::optional<std::string> closureDegree;
    std::optional<std::string> closureDisc;
    std::optional<double> closureDiscLog10;
};

// log10 |d| from either a literal integer or a precomputed logarithm.
std::optional<double> disc_log10(const std::optional<std::string>& disc, const std::optional<double>& log10) {
    if (disc && log10) throw UsageError("give either --closure-disc or --closure-disc-log10, not both");
    if (log10) {
        if (!(*log10 >= 0)) throw UsageError("--closure-disc-log10 must be >= 0");
        return *log10;
    }
    if (!disc) return std::nullopt;
    aeq::BigInt d;
    if (d.set_str(*disc, 10) != 0 || d == 0) throw UsageError("invalid --closure-disc: " + *disc);
    return aeq::log10_abs(d);
}

void cmd_verdict(const VerdictArgs& a, const Globals& g, Outcome& out) {
    const auto K = load_field("K", a.pair.k, a.pair.assume), L = load_field("L", a.pair.l, a.pair.assume);
    aeq::DecideOptions opts;
    opts.xmax = parse_count(a.pair.xmax, "xmax");
    opts.grh = a.grh;
    opts.threads = g.threads;
    out.inputs = {{"k", aeq::render(K.poly())}, {"l", aeq::render(L.poly())}, {"xmax", opts.xmax}, {"grh", a.grh}};
    if (auto l10 = disc_log10(a.closureDisc, a.closureDiscLog10)) {
        aeq::ClosureData cd;
        cd.discLog10 = *l10;
        if (a.closureDegree) cd.degree = parse_count(*a.closureDegree, "closure degree");
        opts.closure = cd;
        out.inputs["closureDiscLog10"] = *l10;
        out.inputs["closureDegree"] = cd.degree ? Json(*cd.degree) : Json(nullptr);
    } else if (a.closureDegree) {
        throw UsageError("--closure-degree needs --closure-disc or --closure-disc-log10");
    }
    const auto v = aeq::decide(K, L, opts);
    out.result = aeq::to_json(v);
    if (v.status == aeq::VerdictStatus::DEGREE_MISMATCH) {
        out.warnings.push_back("degree mismatch: " + std::to_string(K.degree()) + " vs " + std::to_string(L.degree()));
        out.code = kDegreeMismatch;
    }
}

struct BoundsArgs {
    std::string closureDegree;
    std::optional<std::string> closureDisc;
    std::optional<double> closureDiscLog10;
};

void cmd_bounds(const BoundsArgs& a, const Globals&, Outcome& out) {
    const u64 N = parse_count(a.closureDegree, "closure degree");
    if (N < 1) throw UsageError("closure degree must be >= 1");
    aeq::BoundsReport b;
    if (a.closureDisc && !a.closureDiscLog10) {
        aeq::BigInt d;
        if (d.set_str(*a.closureDisc, 10) != 0 || d == 0) throw UsageError("invalid --closure-disc: " + *a.closureDisc);
        b = aeq::effective_bounds(N, d);
        out.inputs = {{"closureDegree", N}, {"closureDisc", aeq::bigint_json(d)}};
    } else {
        const auto l10 = disc_log10(a.closureDisc, a.closureDiscLog10);
        if (!l10) throw UsageError("give --closure-disc or --closure-disc-log10");
        b = aeq::effective_bounds(N, *l10, *l10 * std::log(10.0));
        out.inputs = {{"closureDegree", N}, {"closureDiscLog10", *l10}};
    }
    out.result = aeq::to_json(b);
}

struct ScanArgs {
    std::string input;
    std::string format;
    int m = aeq::kDefaultFingerprintPrimes;
    std::string xmax = "100000";
};

void cmd_scan(const ScanArgs& a, const Globals& g, Outcome& out) {
    std::string fmt = a.format;
    if (fmt.empty()) fmt = a.input.size() >= 4 && a.input.substr(a.input.size() - 4) == ".csv" ? "csv" : "jsonl";
    if (fmt != "csv" && fmt != "jsonl") throw UsageError("unknown format " + fmt);
    if (a.m < 1) throw UsageError("m must be >= 1");
    const u64 xmax = parse_count(a.xmax, "xmax");
    out.inputs = {{"input", a.input}, {"format", fmt}, {"m", a.m}, {"xmax", xmax}};
    const auto loaded = aeq::load_fields(a.input, fmt == "csv" ? aeq::CorpusFormat::csv : aeq::CorpusFormat::jsonl);
    for (const auto& e : loaded.errors) out.warnings.push_back("line " + std::to_string(e.line) + ": " + e.message);
    Json pairs = Json::array();
    for (const auto& c : aeq::scan(loaded.records, a.m, xmax, g.threads)) pairs.push_back(aeq::to_json(c));
    out.result = std::move(pairs);
    if (!loaded.errors.empty()) out.code = kInputError;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const aeq::DegreeMismatchError*>(&e)) return kDegreeMismatch;
    if (dynamic_cast<const aeq::ExcludedPrimeError*>(&e)) return kExcludedPrime;
    if (dynamic_cast<const aeq::InsufficientDataError*>(&e)) return kInsufficientData;
    return kInputError;
}

void emit(const std::string& command, Outcome& out, const Globals& g) {
    if (out.csv) {
        std::cout << *out.csv;
        return;
    }
    Json env;
    env["command"] = command;
    env["inputs"] = std::move(out.inputs);
    env["result"] = std::move(out.result);
    env["warnings"] = std::move(out.warnings);
    env["version"] = AEQ_VERSION;
    const bool pretty = g.pretty || (!g.compact && ::isatty(STDOUT_FILENO));
    std::cout << (pretty ? env.dump(2) : env.dump()) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic equivalence of number fields: prime splitting, zeta coefficients, densities and verdicts"};
    app.set_version_flag("--version", std::string(AEQ_VERSION));
    app.require_subcommand(1);

    Globals g;
    bool json_flag = false;
    auto* json_opt = app.add_flag("--json", json_flag, "JSON envelope output (default)");
    app.add_flag("--csv", g.csv, "CSV histogram output (sweep only)")->excludes(json_opt);
    app.add_flag("--pretty", g.pretty, "Indent JSON even when piped");
    app.add_flag("--compact", g.compact, "Single-line JSON even on a terminal");
    app.add_option("--threads", g.threads, "Worker threads for prime sweeps")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", g.seed, "Seed for randomized factoring");

    TypeArgs type_args;
    auto* type = app.add_subcommand("type", "Arithmetic type of an unramified prime");
    type->add_option("--poly", type_args.poly, "Defining polynomial")->required();
    type->add_option("--prime", type_args.prime, "Prime p")->required();
    type->add_flag("--verify", type_args.verify, "Cross-check with the randomized full factorization");
    type->add_flag("--assume-irreducible", type_args.assume);

    CoeffsArgs coeffs_args;
    auto* coeffs = app.add_subcommand("coeffs", "Dedekind zeta coefficients a_n for n <= limit");
    coeffs->add_option("--poly", coeffs_args.poly, "Defining polynomial")->required();
    coeffs->add_option("--limit", coeffs_args.limit, "Largest n")->required();
    coeffs->add_flag("--assume-irreducible", coeffs_args.assume);

    auto add_pair = [](CLI::App* sub, PairArgs& p, const char* default_xmax) {
        p.xmax = default_xmax;
        sub->add_option("--k", p.k, "First defining polynomial")->required();
        sub->add_option("--l", p.l, "Second defining polynomial")->required();
        sub->add_option("--xmax", p.xmax, "Sweep bound")->capture_default_str();
        sub->add_flag("--assume-irreducible", p.assume);
    };

    PairArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Tally type agreement over primes <= xmax");
    add_pair(sweep, sweep_args, "1000000");

    PairArgs delta_args;
    auto* delta = app.add_subcommand("delta", "Closure-degree estimates and delta_KL");
    add_pair(delta, delta_args, "1000000");

    VerdictArgs verdict_args;
    auto* verdict = app.add_subcommand("verdict", "Decide arithmetic equivalence up to a sweep bound");
    add_pair(verdict, verdict_args.pair, "100000");
    verdict->add_flag("--grh", verdict_args.grh, "Accept certification under GRH");
    verdict->add_option("--closure-degree", verdict_args.closureDegree, "Degree of the common Galois closure");
    verdict->add_option("--closure-disc", verdict_args.closureDisc, "Absolute discriminant of the Galois closure");
    verdict->add_option("--closure-disc-log10", verdict_args.closureDiscLog10, "log10 of that discriminant");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Effective Chebotarev bounds for a Galois closure");
    bounds->add_option("--closure-degree", bounds_args.closureDegree, "Degree N of the closure")->required();
    bounds->add_option("--closure-disc", bounds_args.closureDisc, "Absolute discriminant d");
    bounds->add_option("--closure-disc-log10", bounds_args.closureDiscLog10, "log10 d");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Find candidate equivalent pairs in a field list");
    scan->add_option("--input", scan_args.input, "JSONL or CSV file")->required();
    scan->add_option("--format", scan_args.format, "jsonl | csv (default: from extension)");
    scan->add_option("--m", scan_args.m, "Fingerprint length in primes")->capture_default_str();
    scan->add_option("--xmax", scan_args.xmax, "Verification sweep bound")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    Outcome out;
    try {
        if (g.csv && chosen != sweep) throw UsageError("--csv is only available for sweep");
        if (chosen == type) cmd_type(type_args, g, out);
        else if (chosen == coeffs) cmd_coeffs(coeffs_args, g, out);
        else if (chosen == sweep) cmd_sweep(sweep_args, g, out);
        else if (chosen == delta) cmd_delta(delta_args, g, out);
        else if (chosen == verdict) cmd_verdict(verdict_args, g, out);
        else if (chosen == bounds) cmd_bounds(bounds_args, g, out);
        else cmd_scan(scan_args, g, out);
    } catch (const std::exception& e) {
        out.result = nullptr;
        out.csv.reset();
        out.warnings.push_back(e.what());
        out.code = exit_code_for(e);
        std::cerr << "aeq " << command << ": " << e.what() << '\n';
    }
    emit(command, out, g);
    return out.code;
}
