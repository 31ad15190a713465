#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aeq/density.hpp"

namespace aeq {

/// Agreement-density thresholds for degree-n fields.
struct Thresholds {
    int n = 0;
    /// 1 - 1/(4n^2): agreement above this forces equal zeta functions.
    Rational main;
    /// 1 - 2/n^2, the conjectured sharp value.
    Rational conjectural;
    /// 1 - 2/l^2 for Galois fields of prime degree l.
    std::optional<Rational> galoisPrimeDegree;
    /// 13/18 for cubic fields.
    std::optional<Rational> cubicConstant;
    /// B = B(X_1) + B(X_2) = 2n, so main = 1 - 1/B^2.
    int serreB = 0;
};

Thresholds thresholds(int n);

/// Effective Chebotarev bounds for a Galois closure of degree N and
/// absolute discriminant d.
struct BoundsReport {
    u64 closureDegree = 0;
    double closureDiscLog10 = 0;  // log10 d
    double unconditionalLog10 = 0;  // log10 of d^12577
    /// d^12577 when it fits in 64 bits.
    std::optional<u64> unconditionalBound;
    double grhBound = 0;  // (4 ln d + 2.5 N + 5)^2
    std::string logBase = "natural";
    std::string zamanForm = "C*d^40, C unspecified";
    double zamanLog10WithoutC = 0;  // log10 of d^40
    std::string provenance = "supplied";  // of the closure degree: supplied | estimated
};

/// discLog10 = log10 d; grhLnDisc = ln d (normally discLog10 * ln 10).
BoundsReport effective_bounds(u64 closureDegree, double discLog10, double grhLnDisc);
/// Convenience form taking d itself.
BoundsReport effective_bounds(u64 closureDegree, const BigInt& closureDisc);

enum class VerdictStatus { NOT_EQUIVALENT, CERTIFIED_EQUIVALENT_GRH, CERTIFIED_EQUIVALENT, NO_MISMATCH_BELOW_X, DEGREE_MISMATCH };

std::string to_string(VerdictStatus s);

/// Galois-closure data for the certification bounds. The degree may be left
/// out, in which case the estimate from the sweep is used.
struct ClosureData {
    std::optional<u64> degree;
    double discLog10 = 0;
};

struct DecideOptions {
    u64 xmax = 100000;
    bool grh = false;
    std::optional<ClosureData> closure;
    unsigned threads = 1;
};

struct MismatchWitness {
    u64 prime = 0;
    ArithmeticType typeK, typeL;
};

struct Evidence {
    std::optional<MismatchWitness> witness;
    u64 sweptTo = 0;
    u64 considered = 0;
    std::optional<double> requiredBound;  // the bound the certification needed, when known
    std::string requiredBoundKind;        // "grh" | "unconditional" | ""
};

struct Verdict {
    VerdictStatus status = VerdictStatus::NO_MISMATCH_BELOW_X;
    Evidence evidence;
    Thresholds thresholds;
    /// agreeType / considered over the sweep.
    std::optional<Rational> observedAgreement;
    std::optional<BoundsReport> bounds;
    std::optional<ClosureEstimate> closure;
    std::vector<std::string> caveats;
    /// Citation keys for each inference step taken.
    std::vector<std::string> citations;
};

Verdict decide(const NumberField& K, const NumberField& L, const DecideOptions& opts);

}  // namespace aeq
