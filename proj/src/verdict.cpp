#include "aeq/verdict.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "aeq/errors.hpp"

namespace aeq {

namespace {

constexpr u64 kUnconditionalExponent = 12577;

Rational one_minus(unsigned long num, unsigned long den) {
    Rational q = Rational(1) - Rational(BigInt(num), BigInt(den));
    q.canonicalize();
    return q;
}

// Fixed-point with two decimals, trailing zeros dropped: 241.65, 1257700.
std::string short_decimal(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << v;
    std::string s = out.str();
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

}  // namespace

Thresholds thresholds(int n) {
    if (n < 1) throw std::invalid_argument("thresholds require n >= 1");
    const auto un = static_cast<unsigned long>(n);
    Thresholds t;
    t.n = n;
    t.serreB = 2 * n;
    t.main = one_minus(1, 4 * un * un);
    t.conjectural = one_minus(2, un * un);
    if (is_prime(un)) t.galoisPrimeDegree = one_minus(2, un * un);
    if (n == 3) t.cubicConstant = Rational(13, 18);
    return t;
}

BoundsReport effective_bounds(u64 closureDegree, double discLog10, double grhLnDisc) {
    if (closureDegree < 1) throw std::invalid_argument("closure degree must be >= 1");
    if (!(discLog10 >= 0)) throw std::invalid_argument("closure discriminant must be >= 1");
    BoundsReport b;
    b.closureDegree = closureDegree;
    b.closureDiscLog10 = discLog10;
    b.unconditionalLog10 = static_cast<double>(kUnconditionalExponent) * discLog10;
    if (discLog10 == 0) b.unconditionalBound = 1;
    const double base = 4.0 * grhLnDisc + 2.5 * static_cast<double>(closureDegree) + 5.0;
    b.grhBound = base * base;
    b.zamanLog10WithoutC = 40.0 * discLog10;
    return b;
}

BoundsReport effective_bounds(u64 closureDegree, const BigInt& closureDisc) {
    if (closureDisc == 0) throw std::invalid_argument("closure discriminant must be nonzero");
    const double l10 = log10_abs(closureDisc);
    BoundsReport b = effective_bounds(closureDegree, l10, l10 * std::log(10.0));
    if (abs(closureDisc) == 1) b.unconditionalBound = 1;
    return b;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::NOT_EQUIVALENT: return "NOT_EQUIVALENT";
        case VerdictStatus::CERTIFIED_EQUIVALENT_GRH: return "CERTIFIED_EQUIVALENT_GRH";
        case VerdictStatus::CERTIFIED_EQUIVALENT: return "CERTIFIED_EQUIVALENT";
        case VerdictStatus::NO_MISMATCH_BELOW_X: return "NO_MISMATCH_BELOW_X";
        case VerdictStatus::DEGREE_MISMATCH: return "DEGREE_MISMATCH";
    }
    return "UNKNOWN";
}

Verdict decide(const NumberField& K, const NumberField& L, const DecideOptions& opts) {
    Verdict v;
    v.thresholds = thresholds(std::max(1, K.degree()));
    for (const NumberField* F : {&K, &L}) {
        if (F->irreducibility() != Irreducibility::certified)
            v.caveats.push_back("irreducibility of " + render(F->poly()) + " is " + to_string(F->irreducibility()) +
                                ", not certified");
    }

    if (K.degree() != L.degree()) {
        v.status = VerdictStatus::DEGREE_MISMATCH;
        v.citations.push_back("AEImpliesSameDeg");
        return v;
    }
    if (K.poly() == L.poly()) {
        v.status = VerdictStatus::CERTIFIED_EQUIVALENT;
        v.caveats.push_back("identical defining polynomials");
        v.citations.push_back("Perlis");
        return v;
    }

    v.caveats.push_back(
        "only primes not dividing either polynomial discriminant are compared; ramified primes are never consulted");

    const SweepTally tally = sweep_pair(K, L, opts.xmax, opts.threads);
    v.evidence.sweptTo = opts.xmax;
    v.evidence.considered = tally.considered;
    if (tally.considered > 0)
        v.observedAgreement = DensityEstimate{tally.agreeType, tally.considered}.fraction();

    if (tally.firstMismatch) {
        const u64 p = *tally.firstMismatch;
        v.status = VerdictStatus::NOT_EQUIVALENT;
        v.evidence.witness = MismatchWitness{p, arithmetic_type(K, p), arithmetic_type(L, p)};
        v.citations = {"Perlis", "ElPrincipal"};
        return v;
    }

    v.status = VerdictStatus::NO_MISMATCH_BELOW_X;
    v.citations.push_back("Perlis");

    // Types agree at every swept prime, so the splitting sets agree there and the
    // closure-degree estimates of the two fields coincide whenever they exist.
    u64 estimated = 0;  // 0: no estimate
    try {
        ClosureEstimate c = estimate_closure(tally, K.label(), L.label());
        if (c.estClosureDegK == c.estClosureDegL)
            estimated = c.estClosureDegK;
        else
            v.caveats.push_back("closure-degree estimates differ");
        v.closure = c;
    } catch (const InsufficientDataError& e) {
        v.caveats.push_back(std::string("closure degree not estimated: ") + e.what());
    }
    v.caveats.push_back("closure equality assumed, not proven (no splitting-set discrepancy observed)");

    if (!opts.closure) return v;

    const ClosureData& cd = *opts.closure;
    std::string provenance = "supplied";
    u64 N = 0;
    if (cd.degree) {
        N = *cd.degree;
        if (estimated && estimated != N) {
            v.caveats.push_back("supplied closure degree " + std::to_string(N) + " disagrees with estimate " +
                                std::to_string(estimated) + "; certification withheld");
            v.bounds = effective_bounds(N, cd.discLog10, cd.discLog10 * std::log(10.0));
            return v;
        }
    } else if (estimated) {
        N = estimated;
        provenance = "estimated";
    } else {
        v.caveats.push_back("no closure degree available; certification bounds not evaluated");
        return v;
    }
    BoundsReport b = effective_bounds(N, cd.discLog10, cd.discLog10 * std::log(10.0));
    b.provenance = provenance;
    v.bounds = b;
    const double x = static_cast<double>(opts.xmax);

    if (b.unconditionalBound && opts.xmax >= *b.unconditionalBound) {
        v.status = VerdictStatus::CERTIFIED_EQUIVALENT;
        v.evidence.requiredBound = static_cast<double>(*b.unconditionalBound);
        v.evidence.requiredBoundKind = "unconditional";
        v.citations.push_back("AECheboEfectiva");
        return v;
    }
    if (opts.grh) {
        v.evidence.requiredBound = b.grhBound;
        v.evidence.requiredBoundKind = "grh";
        if (x >= b.grhBound) {
            v.status = VerdictStatus::CERTIFIED_EQUIVALENT_GRH;
            v.caveats.push_back("conditional on GRH");
            v.citations.push_back("AECheboEfectiva");
        } else {
            v.caveats.push_back("GRH bound " + short_decimal(b.grhBound) + " exceeds sweep bound " +
                                std::to_string(opts.xmax));
        }
    } else {
        if (b.unconditionalLog10 < 300) v.evidence.requiredBound = std::pow(10.0, b.unconditionalLog10);
        v.evidence.requiredBoundKind = "unconditional";
        v.caveats.push_back("unconditional bound 10^" + short_decimal(b.unconditionalLog10) + " unreachable");
    }
    return v;
}

}  // namespace aeq
