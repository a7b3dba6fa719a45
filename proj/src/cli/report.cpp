#include <cilef/cli/report.hpp>

#include <sstream>

namespace cilef::cli {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Polynomial& p) { return to_string(p); }

Json to_json(std::span<const Rational> point) {
  Json out = Json::array();
  for (const auto& c : point) out.push_back(to_string(c));
  return out;
}

Json to_json(const Instance& instance) {
  Json out;
  out["source"] = instance.source;
  out["variables"] = instance.variables->names();
  if (instance.f) {
    out["f"] = to_json(*instance.f);
  } else {
    Json gens = Json::array();
    for (const auto& g : instance.generators) gens.push_back(to_json(g));
    out["generators"] = gens;
  }
  return out;
}

Json to_json(const SlpVerdict& v) {
  Json out;
  out["holds"] = to_string(v.holds);
  out["mode"] = to_string(v.mode);
  if (v.determinant) out["determinant"] = to_json(*v.determinant);
  if (v.mode == CheckMode::Probabilistic) {
    out["seed"] = v.seed;
    out["trials_used"] = v.trials_used;
    Json trials = Json::array();
    for (const auto& t : v.trials) {
      trials.push_back({{"linear_form", to_json(t.linear_form)}, {"rank", t.rank}});
    }
    out["trials"] = trials;
  }
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.failure_probability_bound) {
    out["failure_probability_bound"] = to_json(*v.failure_probability_bound);
  }
  return out;
}

Json to_json(const HessianVerdict& v) {
  Json out;
  out["nonzero"] = to_string(v.nonzero);
  out["mode"] = to_string(v.mode);
  if (v.hessian) out["hessian"] = to_json(*v.hessian);
  if (v.mode == HessianMode::Probabilistic) {
    out["seed"] = v.seed;
    out["trials_used"] = v.trials_used;
  }
  if (v.point) out["point"] = to_json(std::span<const Rational>(*v.point));
  if (v.value) out["value"] = to_json(*v.value);
  if (v.failure_probability_bound) {
    out["failure_probability_bound"] = to_json(*v.failure_probability_bound);
  }
  return out;
}

std::string join(std::span<const std::string> parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string format_point(std::span<const Rational> point) {
  std::vector<std::string> parts;
  for (const auto& c : point) parts.push_back(to_string(c));
  return "(" + join(parts, ", ") + ")";
}

std::string format_hilbert(std::span<const std::size_t> h) {
  std::vector<std::string> parts;
  for (auto v : h) parts.push_back(std::to_string(v));
  return "[" + join(parts, ", ") + "]";
}

std::string describe(const SlpVerdict& v) {
  std::ostringstream out;
  switch (v.holds) {
    case Truth::Yes: out << "SLP holds"; break;
    case Truth::No: out << "SLP fails"; break;
    case Truth::Unknown: out << "SLP unknown"; break;
  }
  if (v.determinant) {
    out << "; certificate det = " << *v.determinant;
  } else if (v.witness) {
    out << "; witness l = " << *v.witness << " (trial " << v.trials_used << ")";
  }
  if (v.failure_probability_bound) {
    out << " (likely fails, bound = " << to_string(*v.failure_probability_bound) << " after "
        << v.trials_used << " trials)";
  }
  return out.str();
}

std::string describe(const HessianVerdict& v) {
  std::ostringstream out;
  out << "Hessian nonzero: " << to_string(v.nonzero);
  if (v.hessian) out << "; det Hess = " << *v.hessian;
  if (v.point && v.value) {
    out << "; det Hess" << format_point(*v.point) << " = " << to_string(*v.value);
  }
  if (v.failure_probability_bound) {
    out << " (likely zero, bound = " << to_string(*v.failure_probability_bound) << " after "
        << v.trials_used << " points)";
  }
  return out.str();
}

}  // namespace cilef::cli
