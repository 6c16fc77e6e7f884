#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ntv {

/// A bounded search ran out of room. The bound is a knob, not a proof failure.
class NotFoundWithinBound : public std::runtime_error {
 public:
  NotFoundWithinBound(const std::string& what, std::uint64_t bound)
      : std::runtime_error(what), bound_(bound) {}
  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

/// A request exceeded a configured resource cap (sieve size, bitmap bits, sequence terms).
class CapExceeded : public std::length_error {
 public:
  CapExceeded(std::string cap_name, std::uint64_t requested, std::uint64_t cap)
      : std::length_error(cap_name + " cap exceeded: requested " + std::to_string(requested) +
                          ", cap " + std::to_string(cap)),
        cap_name_(std::move(cap_name)),
        requested_(requested),
        cap_(cap) {}

  const std::string& cap_name() const { return cap_name_; }
  std::uint64_t requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string cap_name_;
  std::uint64_t requested_;
  std::uint64_t cap_;
};

/// Base for every "the mathematics did not check out" outcome. The CLI maps
/// these to exit status 1; everything else is a usage/config error.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ResourceCaps {
  static constexpr std::uint64_t kDefaultSieve = 100'000'000;
  static constexpr std::uint64_t kDefaultBitmap = 100'000'000;
  static constexpr std::uint64_t kDefaultSeqTerms = 10'000;

  std::uint64_t sieve = kDefaultSieve;
  std::uint64_t bitmap = kDefaultBitmap;
  std::uint64_t seq_terms = kDefaultSeqTerms;

  /// Overrides from NTV_SIEVE_CAP, NTV_BITMAP_CAP and NTV_SEQ_CAP when set.
  /// Throws std::invalid_argument on a malformed value.
  static ResourceCaps from_env();
};

inline void check_cap(const char* name, std::uint64_t requested, std::uint64_t cap) {
  if (requested > cap) throw CapExceeded(name, requested, cap);
}

}  // namespace ntv
