#pragma once

// Named reproductions of the worked examples with their expected verdicts.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rankext/io.hpp"

namespace rankext {

using FixtureParams = std::map<std::string, std::int64_t>;

struct FixtureDescriptor {
  std::string name;
  std::string summary;
  FixtureParams defaults;
};

struct FixtureReport {
  std::string name;
  FixtureParams params;
  io::Json computed;  // verdict fields
  io::Json expected;  // same keys as computed
  io::Json details;   // witnesses, refutations, strategy notes
  bool pass = false;
};

std::vector<FixtureDescriptor> list_examples();

// Unknown keys in `params` raise UnsupportedParams; missing keys take the
// defaults. Throws UnknownFixture.
FixtureReport run_example(const std::string& name, const FixtureParams& params = {});

io::Json to_json(const FixtureReport& report);

// Smallest e >= 1 with M^e = Id, or nullopt when none exists up to `limit`.
std::optional<std::uint64_t> multiplicative_order(const MatrixFq& m, std::uint64_t limit);

// Companion matrix of the first monic primitive polynomial of degree n over
// the prime field, in monic_from_index order. Its order is q^n - 1.
// Throws UnsupportedField (not prime), SearchSpaceTooLarge (q^n - 1 > 10^6),
// SearchExhausted.
MatrixFq primitive_companion(const FieldPtr& field, int n);

}  // namespace rankext
