#pragma once

#include <string>
#include <vector>

#include "aeq/verdict.hpp"

namespace aeq {

struct FieldRecord {
    std::string label;
    std::vector<BigInt> coeffs;  // ascending, monic
    NumberField parsed;
};

struct LineError {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct LoadResult {
    std::vector<FieldRecord> records;
    std::vector<LineError> errors;
};

enum class CorpusFormat { jsonl, csv };

/// JSONL: one {"label": ..., "coeffs": [...]} object per line.
/// CSV: header "label,coeffs", coefficients separated by ';'.
/// Invalid lines are reported in `errors`; I/O failure throws aeq::Error.
LoadResult load_fields(const std::string& path, CorpusFormat format);
/// Same, reading from a string.
LoadResult parse_fields(const std::string& text, CorpusFormat format);

/// Types at the first m primes not dividing the polynomial discriminant.
struct Fingerprint {
    int degree = 0;
    std::vector<u64> primes;
    std::vector<ArithmeticType> types;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline constexpr int kDefaultFingerprintPrimes = 20;

Fingerprint fingerprint(const NumberField& F, int m);

/// True when the fingerprints have equal degree and agree at every prime both contain.
bool fingerprints_compatible(const Fingerprint& a, const Fingerprint& b);

struct CandidatePair {
    std::string labelK, labelL;      // labelK < labelL
    std::vector<u64> commonPrimes;  // fingerprint primes shared by both
    Verdict verdict;
};

/// Groups records by degree and fingerprint agreement on common primes,
/// then runs decide on every candidate pair. Sorted by label pair.
std::vector<CandidatePair> scan(const std::vector<FieldRecord>& records, int m, u64 xmax, unsigned threads = 1);

}  // namespace aeq
