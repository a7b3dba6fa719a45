#include <cilef/cli/sweep.hpp>
#include <cilef/error.hpp>
#include <cilef/inverse_systems.hpp>
#include <cilef/random_instances.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace cilef::cli {

namespace {

SweepEntry run_one(const SweepOptions& options, const AlphabetPtr& alphabet, std::size_t index) {
  SweepEntry e;
  e.index = index;
  e.seed = derive_seed(options.seed, index);
  try {
    Rng rng(e.seed);
    RandomCI ci = random_complete_intersection(alphabet, options.degrees,
                                               options.coefficient_bound, rng, options.order);
    e.regenerations = ci.regenerations;
    e.generators = std::move(ci.generators);
    const ArtinianCI alg = build_algebra(e.generators, MonomialOrder(options.order, alphabet));
    e.hilbert = alg.hilbert_function();
    e.socle_degree = alg.socle_degree();
    ProbabilisticOptions prob = options.probabilistic;
    prob.seed = e.seed;
    e.report = theorem_equivalence_check(alg, prob);
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  return e;
}

}  // namespace

SweepSummary run_sweep(const SweepOptions& options) {
  if (options.degrees.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, "sweep needs at least 2 degrees");
  }
  for (unsigned d : options.degrees) {
    if (d < 2) throw Error(ErrorKind::DegreeTooSmall, "sweep degrees must be at least 2");
  }
  const auto start = std::chrono::steady_clock::now();
  const AlphabetPtr alphabet = VariableAlphabet::indexed("x", options.degrees.size(), Side::S);

  SweepSummary summary;
  summary.entries.resize(options.count);
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(options.count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < options.count; i = next++) {
      summary.entries[i] = run_one(options, alphabet, i);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (const auto& e : summary.entries) {
    if (!e.report) {
      ++summary.anomalies;
      continue;
    }
    switch (e.report->agree) {
      case Truth::Yes: ++summary.agree; break;
      case Truth::No: ++summary.anomalies; break;
      case Truth::Unknown: ++summary.unknown; break;
    }
    if (e.report->hessian.nonzero == Truth::No) ++summary.hessian_zero;
  }
  summary.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

Json to_json(const SweepOptions& options, const SweepSummary& summary) {
  Json out;
  out["degrees"] = options.degrees;
  out["count"] = options.count;
  out["seed"] = options.seed;
  out["order"] = std::string(to_string(options.order));
  out["field"] = "rationals";
  Json instances = Json::array();
  for (const auto& e : summary.entries) {
    Json item;
    item["index"] = e.index;
    item["seed"] = e.seed;
    item["regenerations"] = e.regenerations;
    Json gens = Json::array();
    for (const auto& g : e.generators) gens.push_back(to_json(g));
    item["generators"] = gens;
    if (e.report) {
      item["hilbert"] = e.hilbert;
      item["T"] = e.socle_degree;
      item["associated_form"] = to_json(e.report->associated_form);
      item["slp"] = to_json(e.report->slp);
      item["hessian"] = to_json(e.report->hessian);
      item["agree"] = std::string(to_string(e.report->agree));
    } else {
      item["error"] = e.error;
    }
    instances.push_back(item);
  }
  out["instances"] = instances;
  out["summary"] = {{"instances", summary.entries.size()},
                    {"agree", summary.agree},
                    {"anomalies", summary.anomalies},
                    {"unknown", summary.unknown},
                    {"hessian_zero", summary.hessian_zero}};
  out["timings"] = {{"seconds", summary.seconds}};
  return out;
}

}  // namespace cilef::cli
