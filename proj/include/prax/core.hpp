// Core types shared by the whole library: the finite universe, bitset
// subsets over it, and the error hierarchy.
#ifndef PRAX_CORE_HPP
#define PRAX_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace prax {

// A subset of a universe with at most 31 elements, one bit per element.
using Bits = std::uint32_t;

constexpr int kMaxUniverse = 31;

inline int popcount(Bits b) { return std::popcount(b); }
inline bool subset_of(Bits a, Bits b) { return (a & ~b) == 0; }
inline bool proper_subset_of(Bits a, Bits b) { return a != b && subset_of(a, b); }
inline Bits full_mask(int n) { return n >= 32 ? ~Bits(0) : (Bits(1) << n) - 1; }
inline bool has_bit(Bits b, int i) { return (b >> i) & 1u; }

// Iterate set bits: for (int i : bit_range(b)) ...
struct BitRange {
  Bits b;
  struct It {
    Bits b;
    int operator*() const { return std::countr_zero(b); }
    It& operator++() { b &= b - 1; return *this; }
    bool operator!=(const It& o) const { return b != o.b; }
  };
  It begin() const { return {b}; }
  It end() const { return {0}; }
};
inline BitRange bit_range(Bits b) { return {b}; }

struct Universe {
  std::vector<std::string> names;

  Universe() = default;
  explicit Universe(std::vector<std::string> labels);
  // Universe {"0", "1", ..., "n-1"}.
  static Universe numbered(int n);

  int size() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& label) const;  // throws UnknownElement
  Bits all() const { return full_mask(size()); }
};

struct PraxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define PRAX_ERROR(Name)                      \
  struct Name : PraxError {                   \
    using PraxError::PraxError;               \
  }

PRAX_ERROR(UniverseMismatch);
PRAX_ERROR(NonEquivalenceTau);
PRAX_ERROR(NotInLQO);
PRAX_ERROR(UnknownElement);
PRAX_ERROR(UniverseTooLarge);
PRAX_ERROR(NotSubrelation);
PRAX_ERROR(NotTransitive);
PRAX_ERROR(SideConditionViolated);
PRAX_ERROR(EmptyResult);
PRAX_ERROR(Undefined);
PRAX_ERROR(EmptyFamily);

#undef PRAX_ERROR

// Render a subset as {a,b,c} using universe labels.
std::string subset_to_string(const Universe& u, Bits s);

}  // namespace prax

#endif
