#pragma once

#include <cilef/artinian.hpp>
#include <cilef/groebner.hpp>
#include <cilef/polynomial.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cilef::cli {

/// An input file: either n generators (complete intersection) or a single
/// form f whose gradient ideal is used (Milnor).
struct Instance {
  std::string source;
  AlphabetPtr variables;
  std::vector<Polynomial> generators;
  std::optional<Polynomial> f;
  std::optional<OrderKind> order;
  std::optional<std::uint64_t> seed;

  bool is_milnor() const noexcept { return f.has_value(); }
};

/// Parses the JSON text of an instance. Errors name the offending field or
/// generator.
Instance parse_instance(const std::string& text, std::string source = "<string>");
Instance load_instance(const std::string& path);

/// build_algebra for generator instances, milnor_pipeline for f instances.
ArtinianCI build(const Instance& instance, OrderKind order);

}  // namespace cilef::cli
