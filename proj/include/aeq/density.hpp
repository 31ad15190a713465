#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aeq/field.hpp"

namespace aeq {

/// Closed interval of integers swept for primes.
struct PrimeInterval {
    u64 lo;
    u64 hi;
    friend bool operator==(const PrimeInterval&, const PrimeInterval&) = default;
};

/// Counters over the primes of one or more disjoint intervals that are
/// unramified for both fields (i.e. divide neither polynomial discriminant).
struct SweepTally {
    std::string polyK, polyL;  // rendered defining polynomials, identify the pair
    int degree = 0;
    std::vector<PrimeInterval> ranges;  // sorted, disjoint, adjacent ones coalesced

    u64 considered = 0;
    u64 excluded = 0;
    u64 agreeType = 0;  // A_p(K) = A_p(L)
    u64 agreeAp = 0;    // a_p(K) = a_p(L)
    u64 agreeG = 0;     // same number of primes above p
    u64 splitBoth = 0;
    std::vector<u64> histK, histL;  // m -> #{p : a_p = m}, m = 0..n
    std::optional<u64> firstMismatch;

    /// Largest swept bound, 0 for an empty tally.
    u64 xmax() const;

    friend bool operator==(const SweepTally&, const SweepTally&) = default;
};

/// Tally with no primes for the pair; the identity of merge.
SweepTally empty_tally(const NumberField& K, const NumberField& L);

/// Sweeps the primes in [lo, hi]. Throws DegreeMismatchError.
SweepTally sweep_range(const NumberField& K, const NumberField& L, u64 lo, u64 hi);

/// Sweeps all primes <= xmax, partitioned over `threads` workers. The result
/// does not depend on the number of workers.
SweepTally sweep_pair(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads = 1);

/// Componentwise sum of tallies over disjoint ranges of the same pair.
/// Throws IncompatibleTallyError for a different pair or overlapping ranges.
SweepTally merge(const SweepTally& a, const SweepTally& b);

/// count / total together with the heuristic half-width 1/sqrt(total).
struct DensityEstimate {
    u64 count = 0;
    u64 total = 0;
    Rational fraction() const;
    double value() const;
    double halfWidth() const;
};

struct DensityReport {
    DensityEstimate agreeType;   // A_{K,L}
    DensityEstimate agreeAp;     // T_{K,L}
    DensityEstimate agreeG;      // S_{K,L}
    DensityEstimate splitBoth;
    std::vector<DensityEstimate> histK, histL;  // S_K(m), S_L(m)
};

/// Natural-density estimates over the swept primes. Throws InsufficientDataError when empty.
DensityReport density_report(const SweepTally& t);

/// Minimum number of splitting primes before a closure degree is estimated.
inline constexpr u64 kMinSplitEvents = 100;

/// Possible Galois closure degrees of a degree-n field: multiples of n dividing n!.
std::vector<u64> closure_degree_candidates(int n);
/// Nearest candidate to `raw`; ties go to the smaller one.
u64 round_to_candidates(double raw, const std::vector<u64>& candidates);

/// Closure degree from the density of primes splitting completely.
/// Throws InsufficientDataError below kMinSplitEvents splitting primes.
u64 estimate_closure_degree(const NumberField& F, u64 xmax, unsigned threads = 1);

struct ClosureEstimate {
    std::string labelK, labelL;
    u64 estClosureDegK = 0, estClosureDegL = 0, estCompositumDeg = 0;
    double rawInverses[3] = {0, 0, 0};  // K, L, compositum
    u64 considered = 0, splitK = 0, splitL = 0, splitBoth = 0;
    u64 xmax = 0;
};

/// Estimates [K~:Q], [L~:Q] and [K~L~:Q] in one sweep over primes good for both fields.
/// The fields may have different degrees.
ClosureEstimate estimate_closure(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads = 1);

/// Same estimates from the split counters of an existing pair sweep.
ClosureEstimate estimate_closure(const SweepTally& t, std::string labelK, std::string labelL);

u64 estimate_compositum_degree(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads = 1);

/// 2/dKL + 1 - 1/dK - 1/dL. Throws std::invalid_argument unless
/// lcm(dK, dL) | dKL | dK*dL.
Rational delta_kl(u64 dK, u64 dL, u64 dKL);

struct DeltaCheck {
    DensityEstimate empiricalT;
    Rational delta;
    bool withinBound = false;  // empirical <= delta + 3 halfWidth
};

struct DeltaReport {
    Rational deltaKL;
    u64 dK = 0, dL = 0, dKL = 0;
    Rational lowerBound;  // 1/dKL
    std::optional<DeltaCheck> checkTleDelta;
};

DeltaReport delta_report(const ClosureEstimate& c, const std::optional<SweepTally>& tally = std::nullopt);

}  // namespace aeq
