#ifndef RANKONE_NUMERIC_HPP
#define RANKONE_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rankone {

// Heights and spacers grow doubly exponentially with the stage index;
// everything structural is arbitrary precision, measures are exact rationals.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big(long v) { return BigInt(v); }

inline BigInt big_from_string(const std::string& s) {
  return BigInt(s, 10);
}

inline Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_string(const std::string& s) {
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline double to_double(const Rational& v) { return v.get_d(); }

// Counter-scheme seed derivation (splitmix64). Every Monte-Carlo stream in
// the library derives its engine seed as mix64(seed, stream_index), so the
// output is a function of (seed, declared chunking) only, never of worker
// count or scheduling order.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream-index spaces for derived seeds. Sample chunks use indices starting
// at 0; other consumers get disjoint tag bases so streams never collide.
inline constexpr std::uint64_t kStreamBootstrap = 1ULL << 40;
inline constexpr std::uint64_t kStreamScanBase = 1ULL << 41;
inline constexpr std::uint64_t kStreamBaseEntropy = 1ULL << 42;

}  // namespace rankone

#endif
