#ifndef ASCART_SEARCH_HPP
#define ASCART_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>

#include "ascart/curve.hpp"
#include "ascart/poly.hpp"

namespace ascart {

enum class SearchStrategy { Random, ExhaustiveSmall };

struct SearchConfig {
    std::int64_t p = 3;
    std::int64_t d = 2;  // must be coprime to p
    std::int64_t budget = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    SearchStrategy strategy = SearchStrategy::Random;
};

struct SearchWitness {
    Curve curve;
    std::int64_t a = 0;
    std::int64_t lower = 0;
    std::int64_t trial = 0;  // zero-based index of the winning trial
    std::int64_t trials_used = 0;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;
};

/// Statistics cover exactly the trials a single-threaded run would have
/// executed (indices 0 .. witness trial, or the whole budget when no
/// witness exists), so reports are independent of the thread count.
struct SearchStats {
    std::int64_t trials = 0;
    std::int64_t min_a = -1;
    std::map<std::int64_t, std::int64_t> histogram;  // a-number -> count
};

struct SearchResult {
    std::optional<SearchWitness> witness;
    SearchStats stats;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Independent generator per (seed, trial) pair; trial order is therefore
/// a pure function of the seed, whatever the thread count.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform draw from [0, n) by rejection, identical on every platform
/// (std::uniform_int_distribution is implementation-defined).
std::int64_t uniform_below(std::mt19937_64& rng, std::int64_t n);

/// Random f of degree exactly d: leading coefficient uniform in F_p^x,
/// the rest uniform in F_p, except that every coefficient whose exponent
/// is divisible by p (the constant term included) is zero. Those terms
/// never change the a-number, so skipping them shrinks the space.
FpPoly random_poly(const PrimeModulus& p, std::int64_t d, std::mt19937_64& rng);

/// Number of reduced polynomials of degree exactly d, capped at 2*10^6
/// (the exhaustive strategy refuses anything larger).
std::int64_t exhaustive_space(const PrimeModulus& p, std::int64_t d);

/// Polynomial examined at the given trial index under cfg's strategy.
FpPoly trial_poly(const SearchConfig& cfg, std::int64_t trial);

/// Runs trials until a curve with a = L(d) appears or the budget is
/// exhausted. The witness is the one with the smallest trial index among
/// all threads, making the result deterministic for a fixed seed.
SearchResult search_minimal(const SearchConfig& cfg);

}  // namespace ascart

#endif
