#include "aeq/density.hpp"

#include <algorithm>
#include <cmath>

#include "aeq/errors.hpp"
#include "aeq/primes.hpp"
#include "parallel.hpp"

namespace aeq {

u64 SweepTally::xmax() const { return ranges.empty() ? 0 : ranges.back().hi; }

SweepTally empty_tally(const NumberField& K, const NumberField& L) {
    if (K.degree() != L.degree()) throw DegreeMismatchError(K.degree(), L.degree());
    SweepTally t;
    t.polyK = render(K.poly());
    t.polyL = render(L.poly());
    t.degree = K.degree();
    t.histK.assign(static_cast<std::size_t>(t.degree) + 1, 0);
    t.histL.assign(static_cast<std::size_t>(t.degree) + 1, 0);
    return t;
}

SweepTally sweep_range(const NumberField& K, const NumberField& L, u64 lo, u64 hi) {
    SweepTally t = empty_tally(K, L);
    if (hi < lo) return t;
    t.ranges.push_back({lo, hi});
    PrimeStream primes(lo, hi);
    while (auto next = primes.next()) {
        const u64 p = *next;
        if (K.is_excluded(p) || L.is_excluded(p)) {
            ++t.excluded;
            continue;
        }
        const ArithmeticType a = arithmetic_type(K, p);
        const ArithmeticType b = arithmetic_type(L, p);
        const int apK = a.ones(), apL = b.ones();
        ++t.considered;
        ++t.histK[static_cast<std::size_t>(apK)];
        ++t.histL[static_cast<std::size_t>(apL)];
        if (apK == apL) ++t.agreeAp;
        if (a.g() == b.g()) ++t.agreeG;
        if (a == b) {
            ++t.agreeType;
            if (apK == t.degree) ++t.splitBoth;
        } else if (!t.firstMismatch) {
            t.firstMismatch = p;
        }
    }
    return t;
}

SweepTally sweep_pair(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads) {
    if (xmax < 2) throw std::invalid_argument("sweep bound must be >= 2");
    auto parts = detail::map_prime_ranges(xmax, threads, [&](u64 lo, u64 hi) { return sweep_range(K, L, lo, hi); });
    SweepTally acc = empty_tally(K, L);
    for (const auto& part : parts) acc = merge(acc, part);
    return acc;
}

SweepTally merge(const SweepTally& a, const SweepTally& b) {
    if (a.polyK != b.polyK || a.polyL != b.polyL || a.degree != b.degree)
        throw IncompatibleTallyError("tallies belong to different field pairs");
    if (a.histK.size() != b.histK.size() || a.histL.size() != b.histL.size())
        throw IncompatibleTallyError("histogram sizes differ");

    std::vector<PrimeInterval> ranges = a.ranges;
    ranges.insert(ranges.end(), b.ranges.begin(), b.ranges.end());
    std::sort(ranges.begin(), ranges.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
    std::vector<PrimeInterval> merged;
    for (const auto& r : ranges) {
        if (!merged.empty() && r.lo <= merged.back().hi)
            throw IncompatibleTallyError("overlapping prime ranges [" + std::to_string(merged.back().lo) + ", " +
                                         std::to_string(merged.back().hi) + "] and [" + std::to_string(r.lo) + ", " +
                                         std::to_string(r.hi) + "]");
        if (!merged.empty() && r.lo == merged.back().hi + 1)
            merged.back().hi = r.hi;
        else
            merged.push_back(r);
    }

    SweepTally out = a;
    out.ranges = std::move(merged);
    out.considered += b.considered;
    out.excluded += b.excluded;
    out.agreeType += b.agreeType;
    out.agreeAp += b.agreeAp;
    out.agreeG += b.agreeG;
    out.splitBoth += b.splitBoth;
    for (std::size_t m = 0; m < out.histK.size(); ++m) out.histK[m] += b.histK[m];
    for (std::size_t m = 0; m < out.histL.size(); ++m) out.histL[m] += b.histL[m];
    if (b.firstMismatch && (!out.firstMismatch || *b.firstMismatch < *out.firstMismatch))
        out.firstMismatch = b.firstMismatch;
    return out;
}

Rational DensityEstimate::fraction() const {
    Rational q(BigInt(static_cast<unsigned long>(count)), BigInt(static_cast<unsigned long>(total)));
    q.canonicalize();
    return q;
}

double DensityEstimate::value() const { return total ? static_cast<double>(count) / static_cast<double>(total) : 0.0; }

double DensityEstimate::halfWidth() const { return total ? 1.0 / std::sqrt(static_cast<double>(total)) : 1.0; }

DensityReport density_report(const SweepTally& t) {
    if (t.considered == 0) throw InsufficientDataError("empty tally: no unramified primes swept");
    auto est = [&](u64 c) { return DensityEstimate{c, t.considered}; };
    DensityReport r;
    r.agreeType = est(t.agreeType);
    r.agreeAp = est(t.agreeAp);
    r.agreeG = est(t.agreeG);
    r.splitBoth = est(t.splitBoth);
    for (u64 c : t.histK) r.histK.push_back(est(c));
    for (u64 c : t.histL) r.histL.push_back(est(c));
    return r;
}

}  // namespace aeq
