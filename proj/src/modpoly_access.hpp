#pragma once

#include "aeq/modpoly.hpp"

namespace aeq {

// Builds ModPolynomials from coefficient vectors already known to be reduced
// modulo a validated prime.
class ModPolynomialAccess {
   public:
    static ModPolynomial make(u64 p, std::vector<u64> c) { return ModPolynomial(ModPolynomial::Trusted{}, p, std::move(c)); }
};

}  // namespace aeq
