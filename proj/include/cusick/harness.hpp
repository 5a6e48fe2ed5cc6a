#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cusick/bitword.hpp"
#include "cusick/dyadic.hpp"

namespace cusick {

/// Hard checks (floor, mass, symmetry) are proven facts and fail a sweep.
/// The rest are conjectures: violations are counted and reported only.
enum class Check { kFloor, kMass, kSymmetry, kCusick, kPair, kSufficient };

class CheckSet {
 public:
  CheckSet() = default;
  static CheckSet all();
  /// "all" or a comma-separated list of floor, mass, symmetry, cusick, pair,
  /// sufficient. Throws std::invalid_argument on unknown names.
  static CheckSet parse(std::string_view text);

  void insert(Check c) { bits_ |= 1u << static_cast<unsigned>(c); }
  [[nodiscard]] bool contains(Check c) const { return (bits_ >> static_cast<unsigned>(c)) & 1u; }
  /// Canonical comma list in declaration order.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const CheckSet&, const CheckSet&) = default;

 private:
  unsigned bits_ = 0;
};

/// One line of sweep output (schema 1).
struct SweepRecord {
  BitWord t;
  std::int64_t lambda = 0;
  BitWord t_prime;
  std::size_t blocks = 0;
  Dyadic c_t;
  Dyadic c_t_prime;
  Dyadic pair_sum;
  bool pair_sum_ge_15_16 = false;
  bool cusick_holds = false;
  bool pair_conjecture_holds = false;
  bool sufficient_holds = false;
  std::optional<std::int64_t> sufficient_witness;
  std::vector<std::int64_t> argmax_set;
  std::int64_t support_min = 0;
  std::int64_t support_max = 0;

  // not serialized: outcomes of the hard checks that ran
  bool mass_ok = true;
  bool symmetry_ok = true;

  friend bool operator==(const SweepRecord& a, const SweepRecord& b);
};

inline constexpr int kSchemaVersion = 1;
inline constexpr int kDecimalDigits = 12;

/// Computes every field for t >= 1, running the hard checks named in
/// `checks`.
SweepRecord make_record(const BitWord& t, const CheckSet& checks);

/// JSON object on one line, fields in documented order, no trailing newline.
std::string to_json_line(const SweepRecord& r);
/// Inverse of to_json_line. Throws std::invalid_argument on schema mismatch.
SweepRecord parse_record(std::string_view line);

std::string csv_header();
std::string to_csv_line(const SweepRecord& r);

struct ViolationTally {
  std::uint64_t count = 0;
  std::optional<BitWord> first;

  void note(const BitWord& t);
  void merge(const ViolationTally& later);
};

struct SweepSummary {
  std::uint64_t records = 0;
  std::optional<Dyadic> min_pair_sum;
  std::optional<BitWord> min_pair_sum_t;
  ViolationTally floor, mass, symmetry;    // hard
  ViolationTally cusick, pair, sufficient;  // conjectural
  bool complete = false;

  [[nodiscard]] std::uint64_t hard_failures() const {
    return floor.count + mass.count + symmetry.count;
  }
  void add(const SweepRecord& r, const CheckSet& checks);
  /// Folds in a summary of records that come after this one's.
  void merge(const SweepSummary& later);

  [[nodiscard]] std::string to_json() const;
  static SweepSummary from_json(std::string_view text);
};

struct SweepOptions {
  BitWord from{1};
  BitWord to{1};
  CheckSet checks = CheckSet::all();
  unsigned jobs = 1;
  std::filesystem::path out;
  /// Resume from and persist progress to this file when set.
  std::optional<std::filesystem::path> checkpoint;
  std::uint64_t block_size = 1024;
  /// Return after writing this many blocks in this call, leaving the
  /// checkpoint as an interrupted run would.
  std::optional<std::uint64_t> stop_after_blocks;
};

/// Writes one record per t in [from, to], ordered by t whatever the worker
/// count. Throws std::invalid_argument for a bad range, std::runtime_error for
/// I/O failures and a corrupt or mismatched checkpoint.
SweepSummary sweep(const SweepOptions& options);

/// Worker count after applying the CUSICK_MAX_JOBS cap; 0 means hardware
/// concurrency.
unsigned effective_jobs(unsigned requested);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

}  // namespace cusick
