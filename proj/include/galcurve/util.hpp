#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace galcurve {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrKind {
  input,          // malformed or mathematically inadmissible input
  incomplete,     // a tower-bounded computation could not be completed
  undetermined,   // a required invariant could not be determined
  violation,      // a checked inequality failed
  internal,       // broken internal invariant
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrKind::input, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrKind::internal, msg); }

// Deterministic PRNG used wherever sampling is required.  splitmix64: tiny,
// well distributed, and the whole run is reproducible from the seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

inline std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace galcurve
