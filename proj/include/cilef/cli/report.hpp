#pragma once

#include <cilef/cli/instance.hpp>
#include <cilef/lefschetz.hpp>

#include <json.hpp>

#include <span>
#include <string>

namespace cilef::cli {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Polynomial& p);
Json to_json(std::span<const Rational> point);
Json to_json(const Instance& instance);
Json to_json(const SlpVerdict& v);
Json to_json(const HessianVerdict& v);

/// One-line summaries used by the text format.
std::string describe(const SlpVerdict& v);
std::string describe(const HessianVerdict& v);

std::string join(std::span<const std::string> parts, const std::string& sep);
std::string format_point(std::span<const Rational> point);
std::string format_hilbert(std::span<const std::size_t> h);

}  // namespace cilef::cli
