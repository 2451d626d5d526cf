#include "contraction/universal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "contraction/common.hpp"

namespace contraction {

namespace {

constexpr int kFullFamilyMaxN = 16;
constexpr std::uint64_t kBuilderSeed = 0x9e3779b97f4a7c15ull;
constexpr std::size_t kMaxMembers = std::size_t{1} << 22;

double binomial_estimate(int n, int t) {
    double r = 1;
    for (int i = 1; i <= t; ++i) r *= static_cast<double>(n - i + 1) / i;
    return r;
}

UniversalFamily full_family(int n, int t) {
    UniversalFamily f;
    f.n = n;
    f.t = t;
    f.members.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        TwoColoring c;
        c.color.resize(n);
        for (int v = 0; v < n; ++v) c.color[v] = static_cast<std::uint8_t>(1 + ((mask >> v) & 1));
        f.members.push_back(std::move(c));
    }
    return f;
}

// Generate random functions [n] -> [t] until every t-subset of [n] is hit
// injectively by at least one of them.
std::vector<std::vector<int>> perfect_hash_family(int n, int t, bool& bail_to_full) {
    bail_to_full = false;
    if (n > 62 || binomial_estimate(n, t) > 8e6)
        throw input_too_large("build_universal: too many t-subsets for the hash-family construction");

    // all t-subsets as bitmasks, Gosper's hack
    std::vector<std::uint64_t> uncovered;
    std::uint64_t sub = (std::uint64_t{1} << t) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (sub < limit) {
        uncovered.push_back(sub);
        std::uint64_t c = sub & (~sub + 1), r = sub + c;
        sub = (((r ^ sub) >> 2) / c) | r;
    }

    std::mt19937_64 rng(kBuilderSeed + static_cast<std::uint64_t>(n) * 131 + t);
    std::vector<std::vector<int>> family;
    std::vector<int> h(n);
    while (!uncovered.empty()) {
        for (int v = 0; v < n; ++v) h[v] = static_cast<int>(rng() % t);
        std::size_t kept = 0;
        for (std::uint64_t s : uncovered) {
            std::uint32_t hit = 0;
            bool injective = true;
            std::uint64_t rest = s;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (hit & (1u << h[v])) {
                    injective = false;
                    break;
                }
                hit |= 1u << h[v];
            }
            if (!injective) uncovered[kept++] = s;
        }
        if (kept < uncovered.size()) family.push_back(h);
        uncovered.resize(kept);
        if ((family.size() + 1) << t >= (std::uint64_t{1} << std::min(n, 62))) {
            bail_to_full = true; // the composition would be larger than 2^n
            return {};
        }
        if (family.size() > 200000) throw input_too_large("build_universal: hash family not converging");
    }
    return family;
}

} // namespace

UniversalFamily build_universal(int n, int t) {
    if (t < 0 || t > n) throw std::invalid_argument("build_universal: need 0 <= t <= n");
    if (t == 0) {
        UniversalFamily f;
        f.n = n;
        f.t = 0;
        f.members.push_back(TwoColoring::constant(n));
        return f;
    }
    if (n <= kFullFamilyMaxN || t == n) return full_family(n, t);

    bool bail = false;
    auto phf = perfect_hash_family(n, t, bail);
    if (bail) {
        if (n <= 18) return full_family(n, t);
        throw input_too_large("build_universal: family would exceed the size budget");
    }

    UniversalFamily f;
    f.n = n;
    f.t = t;
    f.hash_family_size = phf.size();
    if (phf.size() << t > kMaxMembers) throw input_too_large("build_universal: family too large");
    f.members.reserve(phf.size() << t);
    for (const auto& h : phf) {
        for (std::uint32_t pattern = 0; pattern < (1u << t); ++pattern) {
            TwoColoring c;
            c.color.resize(n);
            for (int v = 0; v < n; ++v) c.color[v] = static_cast<std::uint8_t>(1 + ((pattern >> h[v]) & 1));
            f.members.push_back(std::move(c));
        }
    }
    // every t-subset is hit injectively by some h, and that h is composed
    // with all 2^t patterns, so universality holds by construction
    return f;
}

bool verify_universal(const UniversalFamily& f) {
    const int n = f.n, t = f.t;
    if (t == 0) return !f.members.empty();
    if (n > 62) throw input_too_large("verify_universal: n too large");
    double subsets = binomial_estimate(n, t);
    double checks = subsets * static_cast<double>(f.members.size());
    if (t > 20 || subsets > 2e7 || checks > 5e8) throw input_too_large("verify_universal: enumeration too large");

    std::vector<int> subset(t);
    const std::uint32_t pattern_count = 1u << t;
    std::vector<char> seen(pattern_count);
    std::uint64_t sub = (std::uint64_t{1} << t) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (sub < limit) {
        int idx = 0;
        std::uint64_t rest = sub;
        while (rest) {
            subset[idx++] = std::countr_zero(rest);
            rest &= rest - 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        std::uint32_t distinct = 0;
        for (const auto& c : f.members) {
            std::uint32_t pattern = 0;
            for (int i = 0; i < t; ++i)
                if (c.color[subset[i]] == 2) pattern |= 1u << i;
            if (!seen[pattern]) {
                seen[pattern] = 1;
                if (++distinct == pattern_count) break;
            }
        }
        if (distinct != pattern_count) return false;
        std::uint64_t c2 = sub & (~sub + 1), r = sub + c2;
        sub = (((r ^ sub) >> 2) / c2) | r;
    }
    return true;
}

const UniversalFamily& universal_family_cached(int n, int t) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, UniversalFamily> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, t});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, t), build_universal(n, t)).first;
    return it->second;
}

} // namespace contraction
