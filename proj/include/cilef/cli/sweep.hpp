#pragma once

#include <cilef/cli/report.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cilef::cli {

struct SweepOptions {
  std::vector<unsigned> degrees;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;  // 0: hardware concurrency
  OrderKind order = OrderKind::Grevlex;
  int coefficient_bound = 5;
  ProbabilisticOptions probabilistic;  // used when n > 4; the seed is per instance
};

struct SweepEntry {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  int regenerations = 0;
  std::vector<Polynomial> generators;
  std::vector<std::size_t> hilbert;
  unsigned socle_degree = 0;
  std::optional<EquivalenceReport> report;
  std::string error;  // set when the pipeline threw
};

struct SweepSummary {
  std::vector<SweepEntry> entries;  // sorted by index
  std::size_t agree = 0;
  std::size_t anomalies = 0;  // agree == false or a pipeline error
  std::size_t unknown = 0;
  std::size_t hessian_zero = 0;
  double seconds = 0;
};

/// Instance i is generated from derive_seed(seed, i), so results do not
/// depend on the number of workers.
SweepSummary run_sweep(const SweepOptions& options);

Json to_json(const SweepOptions& options, const SweepSummary& summary);

}  // namespace cilef::cli
