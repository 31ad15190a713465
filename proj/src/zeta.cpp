#include <stdexcept>
#include <unordered_map>

#include "aeq/field.hpp"
#include "aeq/primes.hpp"

namespace aeq {

std::optional<u64> ZetaCoefficients::at(u64 n) const {
    auto it = values.find(n);
    if (it == values.end()) return std::nullopt;
    return it->second;
}

ZetaCoefficients zeta_coeffs(const NumberField& F, u64 limit) {
    if (limit < 1) throw std::invalid_argument("zeta_coeffs requires limit >= 1");
    ZetaCoefficients out;
    out.limit = limit;
    out.degree = F.degree();

    // Smallest prime factor table.
    std::vector<u64> spf(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j <= limit; j += i)
            if (spf[j] == 0) spf[j] = i;
    }

    // Local factors, one per good prime p <= limit.
    std::unordered_map<u64, std::vector<u64>> local;
    std::unordered_map<u64, bool> excluded;
    for (u64 p = 2; p <= limit; ++p) {
        if (spf[p] != p) continue;
        if (F.is_excluded(p)) {
            excluded[p] = true;
            continue;
        }
        int k = 0;
        for (u64 q = p; q <= limit; q *= p) {
            ++k;
            if (q > limit / p) break;
        }
        local.emplace(p, euler_coeffs(arithmetic_type(F, p), k));
    }

    out.values.emplace(1, 1);
    for (u64 n = 2; n <= limit; ++n) {
        u64 m = n, value = 1;
        bool keep = true;
        while (m > 1) {
            const u64 p = spf[m];
            if (excluded.count(p)) {
                keep = false;
                break;
            }
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            value *= local.at(p)[static_cast<std::size_t>(e)];
        }
        if (keep) out.values.emplace(n, value);
    }
    return out;
}

}  // namespace aeq
