#include <gtest/gtest.h>

#include <random>

#include "aeq/corpus.hpp"
#include "aeq/errors.hpp"

using namespace aeq;

namespace {

const std::string kData = AEQ_TEST_DATA_DIR;

NumberField field(const char* poly) { return new_field("F", parse_poly(poly)); }

std::vector<FieldRecord> records(std::initializer_list<std::pair<const char*, const char*>> items) {
    std::vector<FieldRecord> out;
    for (auto [label, poly] : items) {
        auto f = parse_poly(poly);
        out.push_back(FieldRecord{label, f.coeffs(), new_field(label, f)});
    }
    return out;
}

}  // namespace

TEST(LoadFields, Jsonl) {
    const auto r = load_fields(kData + "/quadratics.jsonl", CorpusFormat::jsonl);
    ASSERT_EQ(r.records.size(), 3u);
    EXPECT_TRUE(r.errors.empty());
    EXPECT_EQ(r.records[0].label, "A");
    EXPECT_EQ(r.records[0].parsed.poly(), parse_poly("x^2-2"));
    EXPECT_EQ(r.records[0].coeffs, (std::vector<BigInt>{-2, 0, 1}));
}

TEST(LoadFields, Csv) {
    const auto r = load_fields(kData + "/gassmann.csv", CorpusFormat::csv);
    ASSERT_EQ(r.records.size(), 2u);
    EXPECT_EQ(r.records[1].parsed.poly(), parse_poly("x^8-48"));
    EXPECT_TRUE(r.errors.empty());

    const auto no_header = parse_fields("K,-2;0;1\n", CorpusFormat::csv);
    ASSERT_EQ(no_header.errors.size(), 1u);
    EXPECT_EQ(no_header.errors[0].line, 1u);
    EXPECT_EQ(parse_fields("label,coeffs\nK,-2;0;2\nL,-2;0;1;0\n", CorpusFormat::csv).errors.size(), 2u);
}

TEST(LoadFields, ErrorsCarryLineNumbers) {
    const auto r = load_fields(kData + "/mixed.jsonl", CorpusFormat::jsonl);
    ASSERT_EQ(r.records.size(), 3u);
    EXPECT_EQ(r.records[2].label, "big");
    std::vector<std::size_t> lines;
    for (const auto& e : r.errors) lines.push_back(e.line);
    EXPECT_EQ(lines, (std::vector<std::size_t>{3, 5, 6}));
    EXPECT_NE(r.errors[0].message.find("monic"), std::string::npos);
}

TEST(LoadFields, EmptyAndMissing) {
    EXPECT_TRUE(parse_fields("", CorpusFormat::jsonl).records.empty());
    EXPECT_TRUE(parse_fields("", CorpusFormat::csv).errors.empty());
    EXPECT_THROW(load_fields(kData + "/does-not-exist.jsonl", CorpusFormat::jsonl), Error);
}

TEST(Fingerprint, QuadraticExample) {
    const auto fp = fingerprint(field("x^2-2"), 3);
    EXPECT_EQ(fp.degree, 2);
    // Only 2 divides the discriminant 8, so the first good primes are 3, 5, 7.
    EXPECT_EQ(fp.primes, (std::vector<u64>{3, 5, 7}));
    EXPECT_EQ(fp.types, (std::vector<ArithmeticType>{{{2}}, {{2}}, {{1, 1}}}));
    // 2 is a square mod p exactly when p = +-1 mod 8.
    const auto longer = fingerprint(field("x^2-2"), 30);
    for (std::size_t i = 0; i < longer.primes.size(); ++i) {
        const u64 p = longer.primes[i];
        EXPECT_EQ(longer.types[i].is_split(), p % 8 == 1 || p % 8 == 7) << p;
    }
    EXPECT_THROW(fingerprint(field("x^2-2"), 0), std::invalid_argument);
}

TEST(Fingerprint, SameFieldDifferentPolynomial) {
    const auto a = fingerprint(field("x^2-2"), 20), b = fingerprint(field("x^2-18"), 20);
    EXPECT_NE(a.primes, b.primes);  // 3 divides disc(x^2 - 18)
    EXPECT_TRUE(fingerprints_compatible(a, b));
    EXPECT_FALSE(fingerprints_compatible(a, fingerprint(field("x^2-3"), 20)));
    EXPECT_FALSE(fingerprints_compatible(a, fingerprint(field("x^3-2"), 20)));
}

TEST(Scan, Quadratics) {
    const auto pairs = scan(records({{"A", "x^2-2"}, {"B", "x^2-3"}, {"C", "x^2-18"}}), 10, 10000);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0].labelK, "A");
    EXPECT_EQ(pairs[0].labelL, "C");
    EXPECT_EQ(pairs[0].verdict.status, VerdictStatus::NO_MISMATCH_BELOW_X);
    bool iso = false;
    for (const auto& c : pairs[0].verdict.caveats) iso |= c.find("fields may be isomorphic") != std::string::npos;
    EXPECT_TRUE(iso);
}

TEST(Scan, GassmannPair) {
    const auto pairs = scan(records({{"K8b", "x^8-48"}, {"K8a", "x^8-3"}}), 20, 100000);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_EQ(pairs[0].labelK, "K8a");
    EXPECT_EQ(pairs[0].verdict.status, VerdictStatus::NO_MISMATCH_BELOW_X);
    EXPECT_FALSE(pairs[0].verdict.evidence.witness.has_value());
}

TEST(Scan, EmptyAndIdentical) {
    EXPECT_TRUE(scan({}, 10, 1000).empty());
    EXPECT_TRUE(scan(records({{"A", "x^2-2"}, {"B", "x^2-2"}}), 10, 1000).empty());
    EXPECT_THROW(scan({}, 0, 1000), std::invalid_argument);
}

TEST(Scan, FindsEveryCompatiblePair) {
    std::mt19937_64 rng(41);
    std::vector<FieldRecord> corpus;
    int label = 0;
    while (corpus.size() < 40) {
        // x^2 - a and x^3 - a with small a; many share quadratic fields.
        const long a = static_cast<long>(rng() % 60) + 2;
        const bool cubic = rng() % 3 == 0;
        IntPolynomial f = cubic ? IntPolynomial{-a, 0, 0, 1} : IntPolynomial{-a, 0, 1};
        try {
            std::string name = "F" + std::to_string(label++);
            corpus.push_back(FieldRecord{name, f.coeffs(), new_field(name, f)});
        } catch (const InvalidFieldError&) {
        }
    }
    const int m = 8;
    const auto pairs = scan(corpus, m, 200);
    std::set<std::pair<std::string, std::string>> found;
    for (const auto& c : pairs) found.emplace(c.labelK, c.labelL);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j) {
            if (corpus[i].parsed.poly() == corpus[j].parsed.poly()) continue;
            const auto fi = fingerprint(corpus[i].parsed, m), fj = fingerprint(corpus[j].parsed, m);
            if (!fingerprints_compatible(fi, fj)) continue;
            ++expected;
            auto key = std::minmax(corpus[i].label, corpus[j].label);
            EXPECT_TRUE(found.count({key.first, key.second})) << key.first << " " << key.second;
        }
    EXPECT_EQ(found.size(), expected);
    EXPECT_GT(expected, 0u);
    EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.labelK, a.labelL) < std::tie(b.labelK, b.labelL);
    }));
}

TEST(Scan, WitnessSeparatesFingerprints) {
    const char* polys[] = {"x^2-2", "x^2-3", "x^2-5", "x^2+1", "x^3-2", "x^3-3", "x^3-x-1", "x^4+1", "x^4-2"};
    for (const char* a : polys)
        for (const char* b : polys) {
            auto K = field(a), L = field(b);
            if (K.degree() != L.degree() || K.poly() == L.poly()) continue;
            const auto v = decide(K, L, {.xmax = 10000});
            if (v.status != VerdictStatus::NOT_EQUIVALENT) continue;
            const u64 p = v.evidence.witness->prime;
            int m = 1;
            for (;; ++m) {
                const auto fk = fingerprint(K, m), fl = fingerprint(L, m);
                if (fk.primes.back() >= p && fl.primes.back() >= p) break;
            }
            EXPECT_FALSE(fingerprints_compatible(fingerprint(K, m), fingerprint(L, m))) << a << " vs " << b;
        }
}
