#include "ascart/search.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ascart/bounds.hpp"
#include "ascart/cartier.hpp"
#include "ascart/holo.hpp"
#include "ascart/linalg.hpp"

namespace ascart {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    // Distinct state per trial; the multiplier is odd, so the map
    // trial -> state is injective mod 2^64.
    std::uint64_t state = seed + trial * 0xD1342543DE82EF95ULL;
    return std::mt19937_64(splitmix64(state));
}

std::int64_t uniform_below(std::mt19937_64& rng, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("uniform_below: n must be positive");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    // Reject the low 2^64 mod n values; the surviving range is a whole
    // number of residue cycles, so the draw is exactly uniform.
    const std::uint64_t cut = (0 - bound) % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r < cut);
    return static_cast<std::int64_t>(r % bound);
}

FpPoly random_poly(const PrimeModulus& p, std::int64_t d, std::mt19937_64& rng) {
    if (d < 1 || d % p.value() == 0)
        throw std::invalid_argument("random_poly: degree must be positive and coprime to p");
    std::vector<Residue> c(static_cast<std::size_t>(d) + 1, 0);
    for (std::int64_t e = 1; e < d; ++e)
        if (e % p.value() != 0) c[static_cast<std::size_t>(e)] = uniform_below(rng, p.value());
    c[static_cast<std::size_t>(d)] = 1 + uniform_below(rng, p.value() - 1);
    return FpPoly(p, std::move(c));
}

std::int64_t exhaustive_space(const PrimeModulus& p, std::int64_t d) {
    if (d < 1 || d % p.value() == 0)
        throw std::invalid_argument("exhaustive_space: degree must be positive and coprime to p");
    const std::int64_t cap = 2'000'000;
    std::int64_t total = p.value() - 1;
    for (std::int64_t e = 1; e < d && total <= cap; ++e)
        if (e % p.value() != 0) total *= p.value();
    return total > cap ? cap + 1 : total;
}

namespace {

FpPoly decode_poly(const PrimeModulus& p, std::int64_t d, std::int64_t idx) {
    std::vector<Residue> c(static_cast<std::size_t>(d) + 1, 0);
    for (std::int64_t e = 1; e < d; ++e) {
        if (e % p.value() == 0) continue;
        c[static_cast<std::size_t>(e)] = idx % p.value();
        idx /= p.value();
    }
    c[static_cast<std::size_t>(d)] = 1 + idx % (p.value() - 1);
    return FpPoly(p, std::move(c));
}

void validate(const SearchConfig& cfg) {
    PrimeModulus pm(cfg.p);
    if (cfg.d < 1 || cfg.d % cfg.p == 0)
        throw std::invalid_argument("search: d must be positive and coprime to p");
    if (cfg.budget < 1) throw std::invalid_argument("search: budget must be at least 1");
    if (cfg.threads < 1) throw std::invalid_argument("search: threads must be at least 1");
    if (cfg.strategy == SearchStrategy::ExhaustiveSmall &&
        exhaustive_space(pm, cfg.d) > 1'000'000)
        throw std::invalid_argument(
            "search: exhaustive-small needs a coefficient space of at most 10^6 polynomials");
}

}  // namespace

FpPoly trial_poly(const SearchConfig& cfg, std::int64_t trial) {
    PrimeModulus pm(cfg.p);
    if (cfg.strategy == SearchStrategy::ExhaustiveSmall) return decode_poly(pm, cfg.d, trial);
    std::mt19937_64 rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    return random_poly(pm, cfg.d, rng);
}

SearchResult search_minimal(const SearchConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    validate(cfg);
    PrimeModulus pm(cfg.p);

    SearchResult res;
    res.lower = lower_bound_single(pm, cfg.d);
    res.upper = upper_bound(pm, cfg.d, 0);
    const std::int64_t g = genus(pm, cfg.d);

    std::int64_t total = cfg.budget;
    if (cfg.strategy == SearchStrategy::ExhaustiveSmall)
        total = std::min(total, exhaustive_space(pm, cfg.d));

    const int workers = static_cast<int>(
        std::min<std::int64_t>(cfg.threads, total));
    std::atomic<std::int64_t> best{total};  // sentinel: no witness yet
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> trace(
        static_cast<std::size_t>(workers));

    auto run = [&](int t) {
        for (std::int64_t i = t; i < total; i += workers) {
            // best only decreases, so indices at or below the final
            // witness are never skipped.
            if (i > best.load(std::memory_order_relaxed)) break;
            Curve c = make_curve(trial_poly(cfg, i));
            const std::int64_t a =
                g - static_cast<std::int64_t>(rank(cartier_matrix(c).mat));
            trace[static_cast<std::size_t>(t)].emplace_back(i, a);
            if (a == res.lower) {
                std::int64_t cur = best.load(std::memory_order_relaxed);
                while (i < cur &&
                       !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                }
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    const std::int64_t w = best.load();
    const bool found = w < total;
    const std::int64_t cutoff = found ? w : total - 1;

    std::int64_t counted = 0;
    for (const auto& part : trace) {
        for (const auto& [idx, a] : part) {
            if (idx > cutoff) continue;
            ++counted;
            res.stats.histogram[a] += 1;
            if (res.stats.min_a < 0 || a < res.stats.min_a) res.stats.min_a = a;
        }
    }
    res.stats.trials = cutoff + 1;
    if (counted != res.stats.trials)
        throw std::logic_error("search: trial accounting mismatch: saw " +
                               std::to_string(counted) + " of " +
                               std::to_string(res.stats.trials));

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (found) {
        SearchWitness wit{make_curve(trial_poly(cfg, w)), res.lower, res.lower,
                          w, w + 1, cfg.seed, elapsed};
        res.witness = wit;
    }
    return res;
}

}  // namespace ascart
