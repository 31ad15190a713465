#pragma once

#include <string>

#include <json.hpp>

#include "aeq/corpus.hpp"

namespace aeq {

using Json = nlohmann::ordered_json;

/// {"fraction": "7/18", "decimal": 0.3888...}
Json rational_json(const Rational& q);

Json to_json(const IntPolynomial& f);
Json to_json(const NumberField& F);
Json to_json(const ArithmeticType& t);
Json to_json(const ZetaCoefficients& z);
Json to_json(const SweepTally& t);
Json to_json(const DensityEstimate& e);
Json to_json(const DensityReport& r);
Json to_json(const ClosureEstimate& c);
Json to_json(const DeltaReport& d);
Json to_json(const Thresholds& t);
Json to_json(const BoundsReport& b);
Json to_json(const Verdict& v);
Json to_json(const Fingerprint& f);
Json to_json(const CandidatePair& c);

/// Big integers are emitted as JSON numbers when they fit in int64, else as strings.
Json bigint_json(const BigInt& v);

}  // namespace aeq
