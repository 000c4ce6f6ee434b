#pragma once

// Named property suites over seeded random instances. Instance k of a run is
// generated from a seed derived from (seed, k) alone, so any failure can be
// replayed with `only` set to its index.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fundseq/exactlin.hpp"

namespace fundseq {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;  // instances per ring; the suite default otherwise
  std::vector<RingDesc> rings;       // empty: the suite's rings
  std::optional<int> depth;
  std::size_t workers = 1;
  std::optional<std::size_t> only;   // run a single instance index
};

struct PropertyTally {
  std::string name;
  std::size_t passes = 0;
  std::size_t failures = 0;
};

struct SuiteFailure {
  long index = 0;      // -1 for the suite's fixed worked instances
  std::string ring;
  std::string inputs;  // JSON object of the serialized inputs
  std::string verdict;
  std::string node;    // display label of the failing node, if any
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t count = 0;   // instances run, fixed ones included
  std::size_t passes = 0;  // instances with every verdict true
  std::vector<PropertyTally> properties;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> warnings;
  double duration_ms = 0;

  bool passed() const { return failures.empty(); }
  // Fields: suite, seed, count, passes, properties, failures, warnings, duration_ms.
  std::string to_json(bool with_timing = true) const;
  std::string summary() const;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};
std::vector<SuiteInfo> suite_catalog();

// Throws UnknownSuite for names outside suite_catalog().
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace fundseq
