#include "aeq/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "aeq/errors.hpp"
#include "aeq/primes.hpp"

namespace aeq {

namespace {

std::string trim_copy(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

FieldRecord make_record(std::string label, std::vector<BigInt> coeffs) {
    if (label.empty()) throw ParseError("empty label");
    IntPolynomial f(coeffs);
    if (f.degree() < 1) throw InvalidFieldError("degree must be >= 1");
    if (coeffs.empty() || coeffs.back() != 1) throw InvalidFieldError("coefficients are not monic (last entry must be 1)");
    NumberField F = new_field(label, f);
    return FieldRecord{std::move(label), std::move(coeffs), std::move(F)};
}

FieldRecord parse_jsonl_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("label") || !j.contains("coeffs"))
        throw ParseError("expected an object with \"label\" and \"coeffs\"");
    if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
    if (!j["coeffs"].is_array()) throw ParseError("\"coeffs\" must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_number_integer())
            coeffs.emplace_back(c.dump());
        else if (c.is_string() && !c.get<std::string>().empty())
            coeffs.emplace_back(parse_poly("[" + c.get<std::string>() + "]")[0]);
        else
            throw ParseError("non-integer coefficient " + c.dump());
    }
    return make_record(j["label"].get<std::string>(), std::move(coeffs));
}

FieldRecord parse_csv_line(const std::string& line) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("expected label,coeffs");
    std::string label = trim_copy(line.substr(0, comma));
    std::string list = trim_copy(line.substr(comma + 1));
    if (list.size() >= 2 && list.front() == '"' && list.back() == '"') list = list.substr(1, list.size() - 2);
    std::replace(list.begin(), list.end(), ';', ',');
    IntPolynomial parsed = parse_poly("[" + list + "]");
    std::vector<BigInt> coeffs = parsed.coeffs();
    // Keep the raw length so a trailing zero leading coefficient is reported as non-monic.
    const auto n = static_cast<std::size_t>(std::count(list.begin(), list.end(), ',') + 1);
    coeffs.resize(std::max(coeffs.size(), n), 0);
    return make_record(std::move(label), std::move(coeffs));
}

}  // namespace

LoadResult parse_fields(const std::string& text, CorpusFormat format) {
    LoadResult out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim_copy(line);
        if (t.empty()) continue;
        if (format == CorpusFormat::csv && !header_seen) {
            header_seen = true;
            std::string h = t;
            h.erase(std::remove(h.begin(), h.end(), ' '), h.end());
            if (h != "label,coeffs") out.errors.push_back({lineno, "expected header \"label,coeffs\""});
            continue;
        }
        try {
            out.records.push_back(format == CorpusFormat::jsonl ? parse_jsonl_line(t) : parse_csv_line(t));
        } catch (const Error& e) {
            out.errors.push_back({lineno, e.what()});
        }
    }
    return out;
}

LoadResult load_fields(const std::string& path, CorpusFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error("read failure on " + path);
    return parse_fields(buf.str(), format);
}

Fingerprint fingerprint(const NumberField& F, int m) {
    if (m < 1) throw std::invalid_argument("fingerprint requires m >= 1");
    Fingerprint fp;
    fp.degree = F.degree();
    u64 hi = 64;
    u64 lo = 2;
    while (static_cast<int>(fp.primes.size()) < m) {
        PrimeStream primes(lo, hi);
        while (auto p = primes.next()) {
            if (F.is_excluded(*p)) continue;
            fp.primes.push_back(*p);
            fp.types.push_back(arithmetic_type(F, *p));
            if (static_cast<int>(fp.primes.size()) == m) break;
        }
        lo = hi + 1;
        hi *= 2;
    }
    return fp;
}

bool fingerprints_compatible(const Fingerprint& a, const Fingerprint& b) {
    if (a.degree != b.degree) return false;
    std::size_t i = 0, j = 0;
    while (i < a.primes.size() && j < b.primes.size()) {
        if (a.primes[i] < b.primes[j])
            ++i;
        else if (a.primes[i] > b.primes[j])
            ++j;
        else {
            if (a.types[i] != b.types[j]) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

namespace {

// Refines a group by the type at prime p. Members whose fingerprint lacks p
// agree with every class and are copied into each of them.
std::vector<std::vector<std::size_t>> refine(const std::vector<std::size_t>& group, u64 p,
                                             const std::vector<Fingerprint>& fps) {
    std::map<ArithmeticType, std::vector<std::size_t>> classes;
    std::vector<std::size_t> wildcard;
    for (std::size_t idx : group) {
        const auto& fp = fps[idx];
        auto it = std::lower_bound(fp.primes.begin(), fp.primes.end(), p);
        if (it == fp.primes.end() || *it != p)
            wildcard.push_back(idx);
        else
            classes[fp.types[static_cast<std::size_t>(it - fp.primes.begin())]].push_back(idx);
    }
    std::vector<std::vector<std::size_t>> out;
    if (classes.empty()) {
        out.push_back(group);
        return out;
    }
    for (auto& [type, members] : classes) {
        members.insert(members.end(), wildcard.begin(), wildcard.end());
        std::sort(members.begin(), members.end());
        if (members.size() >= 2) out.push_back(std::move(members));
    }
    return out;
}

}  // namespace

std::vector<CandidatePair> scan(const std::vector<FieldRecord>& records, int m, u64 xmax, unsigned threads) {
    if (m < 1) throw std::invalid_argument("scan requires m >= 1");
    std::vector<Fingerprint> fps;
    fps.reserve(records.size());
    for (const auto& r : records) fps.push_back(fingerprint(r.parsed, m));

    std::map<int, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < records.size(); ++i) by_degree[fps[i].degree].push_back(i);

    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto& [deg, bucket] : by_degree) {
        if (bucket.size() < 2) continue;
        std::set<u64> all_primes;
        for (std::size_t i : bucket) all_primes.insert(fps[i].primes.begin(), fps[i].primes.end());
        std::vector<std::vector<std::size_t>> groups{bucket};
        for (u64 p : all_primes) {
            std::vector<std::vector<std::size_t>> next;
            for (const auto& g : groups) {
                auto parts = refine(g, p, fps);
                next.insert(next.end(), std::make_move_iterator(parts.begin()), std::make_move_iterator(parts.end()));
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            groups = std::move(next);
            if (groups.empty()) break;
        }
        for (const auto& g : groups)
            for (std::size_t a = 0; a < g.size(); ++a)
                for (std::size_t b = a + 1; b < g.size(); ++b) pairs.emplace(g[a], g[b]);
    }

    std::vector<CandidatePair> out;
    for (auto [i, j] : pairs) {
        const FieldRecord* x = &records[i];
        const FieldRecord* y = &records[j];
        if (x->parsed.poly() == y->parsed.poly()) continue;
        if (y->label < x->label) std::swap(x, y);
        CandidatePair c;
        c.labelK = x->label;
        c.labelL = y->label;
        const Fingerprint& fx = fps[static_cast<std::size_t>(x - records.data())];
        const Fingerprint& fy = fps[static_cast<std::size_t>(y - records.data())];
        std::set_intersection(fx.primes.begin(), fx.primes.end(), fy.primes.begin(), fy.primes.end(),
                              std::back_inserter(c.commonPrimes));
        DecideOptions opts;
        opts.xmax = xmax;
        opts.threads = threads;
        c.verdict = decide(x->parsed, y->parsed, opts);
        c.verdict.caveats.push_back(
            "fields may be isomorphic: equal zeta functions do not distinguish isomorphic fields from non-isomorphic "
            "arithmetically equivalent ones");
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CandidatePair& a, const CandidatePair& b) {
        return std::tie(a.labelK, a.labelL) < std::tie(b.labelK, b.labelL);
    });
    return out;
}

}  // namespace aeq
