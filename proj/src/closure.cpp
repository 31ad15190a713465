#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "aeq/density.hpp"
#include "aeq/errors.hpp"
#include "aeq/primes.hpp"
#include "parallel.hpp"
#include "zp_poly.hpp"

namespace aeq {

namespace {

// p splits completely iff x^p = x mod f (f squarefree mod p).
bool splits_completely(const NumberField& F, u64 p) {
    if (F.degree() == 1) return true;
    const ModPolynomial fbar = reduce_mod(F.poly(), p);
    const detail::Zp Z{p};
    const detail::Coeffs x{0, 1};
    return detail::pow_mod(Z, x, p, fbar.coeffs()) == x;
}

struct SplitCounts {
    u64 considered = 0, splitK = 0, splitL = 0, splitBoth = 0;
};

SplitCounts count_splits(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads) {
    auto parts = detail::map_prime_ranges(xmax, threads, [&](u64 lo, u64 hi) {
        SplitCounts c;
        PrimeStream primes(lo, hi);
        while (auto next = primes.next()) {
            const u64 p = *next;
            if (K.is_excluded(p) || L.is_excluded(p)) continue;
            ++c.considered;
            const bool k = splits_completely(K, p);
            const bool l = (&K == &L) ? k : splits_completely(L, p);
            c.splitK += k;
            c.splitL += l;
            c.splitBoth += (k && l);
        }
        return c;
    });
    SplitCounts total;
    for (const auto& c : parts) {
        total.considered += c.considered;
        total.splitK += c.splitK;
        total.splitL += c.splitL;
        total.splitBoth += c.splitBoth;
    }
    return total;
}

double raw_inverse(u64 considered, u64 events, const std::string& what) {
    if (events < kMinSplitEvents)
        throw InsufficientDataError("only " + std::to_string(events) + " primes split in " + what + "; need " +
                                    std::to_string(kMinSplitEvents) + " (raise the sweep bound)");
    return static_cast<double>(considered) / static_cast<double>(events);
}

}  // namespace

std::vector<u64> closure_degree_candidates(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (n > 20) throw std::invalid_argument("closure degree candidates need n! < 2^64 (degree <= 20)");
    u64 fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<u64>(i);
    // Divisors of n! from its prime factorization (Legendre's formula).
    std::vector<u64> divisors{1};
    for (int q = 2; q <= n; ++q) {
        if (!is_prime(static_cast<u64>(q))) continue;
        int e = 0;
        for (int pw = q; pw <= n; pw *= q) e += n / pw;
        const std::size_t base = divisors.size();
        u64 pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= static_cast<u64>(q);
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pw);
        }
    }
    std::vector<u64> out;
    for (u64 d : divisors)
        if (d % static_cast<u64>(n) == 0 && fact % d == 0) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

u64 round_to_candidates(double raw, const std::vector<u64>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("no candidates");
    u64 best = candidates.front();
    double best_dist = std::fabs(static_cast<double>(best) - raw);
    for (u64 c : candidates) {
        const double d = std::fabs(static_cast<double>(c) - raw);
        if (d < best_dist || (d == best_dist && c < best)) {
            best = c;
            best_dist = d;
        }
    }
    return best;
}

u64 estimate_closure_degree(const NumberField& F, u64 xmax, unsigned threads) {
    const SplitCounts c = count_splits(F, F, xmax, threads);
    const double raw = raw_inverse(c.considered, c.splitK, F.label().empty() ? render(F.poly()) : F.label());
    return round_to_candidates(raw, closure_degree_candidates(F.degree()));
}

namespace {

ClosureEstimate closure_from_counts(const SplitCounts& c, int nK, int nL) {
    ClosureEstimate e;
    e.considered = c.considered;
    e.splitK = c.splitK;
    e.splitL = c.splitL;
    e.splitBoth = c.splitBoth;
    e.rawInverses[0] = raw_inverse(c.considered, c.splitK, "K");
    e.rawInverses[1] = raw_inverse(c.considered, c.splitL, "L");
    e.rawInverses[2] = raw_inverse(c.considered, c.splitBoth, "both fields");
    e.estClosureDegK = round_to_candidates(e.rawInverses[0], closure_degree_candidates(nK));
    e.estClosureDegL = round_to_candidates(e.rawInverses[1], closure_degree_candidates(nL));

    const u64 l = std::lcm(e.estClosureDegK, e.estClosureDegL);
    const u64 prod = e.estClosureDegK * e.estClosureDegL;
    std::vector<u64> joint;
    for (u64 m = l; m <= prod; m += l)
        if (prod % m == 0) joint.push_back(m);
    e.estCompositumDeg = round_to_candidates(e.rawInverses[2], joint);
    return e;
}

}  // namespace

ClosureEstimate estimate_closure(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads) {
    ClosureEstimate e = closure_from_counts(count_splits(K, L, xmax, threads), K.degree(), L.degree());
    e.labelK = K.label();
    e.labelL = L.label();
    e.xmax = xmax;
    return e;
}

ClosureEstimate estimate_closure(const SweepTally& t, std::string labelK, std::string labelL) {
    const std::size_t n = static_cast<std::size_t>(t.degree);
    SplitCounts c{t.considered, t.histK.at(n), t.histL.at(n), t.splitBoth};
    ClosureEstimate e = closure_from_counts(c, t.degree, t.degree);
    e.labelK = std::move(labelK);
    e.labelL = std::move(labelL);
    e.xmax = t.xmax();
    return e;
}

u64 estimate_compositum_degree(const NumberField& K, const NumberField& L, u64 xmax, unsigned threads) {
    return estimate_closure(K, L, xmax, threads).estCompositumDeg;
}

Rational delta_kl(u64 dK, u64 dL, u64 dKL) {
    if (dK == 0 || dL == 0 || dKL == 0) throw std::invalid_argument("degrees must be positive");
    const u64 l = std::lcm(dK, dL);
    const unsigned __int128 prod = static_cast<unsigned __int128>(dK) * dL;
    if (dKL % l != 0 || prod % dKL != 0)
        throw std::invalid_argument("inconsistent degree triple (" + std::to_string(dK) + ", " + std::to_string(dL) +
                                    ", " + std::to_string(dKL) + "): need lcm | dKL | dK*dL");
    auto q = [](u64 num, u64 den) {
        return Rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
    };
    Rational d = q(2, dKL) + 1 - q(1, dK) - q(1, dL);
    d.canonicalize();
    return d;
}

DeltaReport delta_report(const ClosureEstimate& c, const std::optional<SweepTally>& tally) {
    DeltaReport r;
    r.dK = c.estClosureDegK;
    r.dL = c.estClosureDegL;
    r.dKL = c.estCompositumDeg;
    r.deltaKL = delta_kl(r.dK, r.dL, r.dKL);
    r.lowerBound = Rational(1, static_cast<unsigned long>(r.dKL));
    if (tally && tally->considered > 0) {
        DeltaCheck check;
        check.empiricalT = DensityEstimate{tally->agreeAp, tally->considered};
        check.delta = r.deltaKL;
        check.withinBound = check.empiricalT.value() <= r.deltaKL.get_d() + 3.0 * check.empiricalT.halfWidth();
        r.checkTleDelta = check;
    }
    return r;
}

}  // namespace aeq
