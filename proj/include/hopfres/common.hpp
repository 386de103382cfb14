#ifndef HOPFRES_COMMON_HPP
#define HOPFRES_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfres {

// Every failure that is a fault (as opposed to a contract outcome like
// NoSolution) is thrown as an Error carrying a stable machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

inline void check(bool cond, const std::string& kind, const std::string& msg) {
    if (!cond) fail(kind, msg);
}

// Deterministic splittable RNG (splitmix64). std::uniform_int_distribution is
// not portable across standard libraries, so all randomized routines draw
// through this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) fail("EmptyRange", "Rng::below(0)");
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // Independent child stream, used to keep sub-tasks reproducible when the
    // number of draws in between changes.
    Rng split(std::uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

private:
    std::uint64_t state_;
};

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace hopfres

#endif
