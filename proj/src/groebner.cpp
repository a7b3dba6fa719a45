#include <cilef/error.hpp>
#include <cilef/groebner.hpp>

#include <algorithm>
#include <map>

namespace cilef {

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::Grevlex ? "grevlex" : "lex";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "grevlex") return OrderKind::Grevlex;
  if (text == "lex") return OrderKind::Lex;
  throw Error(ErrorKind::InvalidArgument, "unknown monomial order '" + std::string(text) + "'");
}

const Term& MonomialOrder::leading_term(const Polynomial& p) const {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading term of the zero polynomial");
  auto terms = p.terms();
  if (kind_ == OrderKind::Grevlex) return terms.front();
  return *std::max_element(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
    return greater(b.monomial, a.monomial);
  });
}

namespace {

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

struct IntTerm {
  Monomial monomial;
  Integer coefficient;
};

// Integer polynomial with terms sorted largest first.
using IntPoly = std::vector<IntTerm>;

void make_primitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().coefficient) < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), g.get_mpz_t());
  }
}

IntPoly to_int_poly(const Polynomial& p, const MonomialOrder& order) {
  Integer d = 1;
  for (const auto& t : p.terms()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coefficient.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    out.push_back({t.monomial, t.coefficient.get_num() * (d / t.coefficient.get_den())});
  }
  std::sort(out.begin(), out.end(), [&order](const IntTerm& a, const IntTerm& b) {
    return order.greater(a.monomial, b.monomial);
  });
  make_primitive(out);
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;  // i < j
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order) : order_(order) {}

  // Input generators are reduced first so no leading monomial divides another.
  void add_generator(IntPoly h) { add(reduce(std::move(h))); }

  void add(IntPoly h) {
    if (h.empty()) return;
    polys_.push_back(std::move(h));
    active_.push_back(false);
    update(polys_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        auto c = order_.compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
      });
      const Pair pair = *best;
      pairs_.erase(best);
      IntPoly h = reduce(s_polynomial(pair));
      if (!h.empty()) add(std::move(h));
    }
  }

  std::vector<const IntPoly*> basis() const {
    std::vector<const IntPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) out.push_back(&polys_[k]);
    }
    return out;
  }

 private:
  const Monomial& lead(std::size_t k) const { return polys_[k].front().monomial; }

  // Gebauer-Moeller pair update for the new element h.
  void update(std::size_t h) {
    const Monomial& lh = lead(h);
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) candidates.push_back({g, h, lcm(lead(g), lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(lead(p.i), lh);
      if (!keep) {
        keep = true;
        for (std::size_t r = c + 1; r < candidates.size() && keep; ++r) {
          if (candidates[r].lcm.divides(p.lcm)) keep = false;
        }
        for (const auto& q : kept) {
          if (!keep) break;
          if (q.lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }
    std::erase_if(kept, [&](const Pair& p) { return coprime(lead(p.i), lh); });

    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && lcm(lead(p.i), lh) != p.lcm && lcm(lead(p.j), lh) != p.lcm;
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g] && lh.divides(lead(g))) active_[g] = false;
    }
    active_[h] = true;
  }

  IntPoly s_polynomial(const Pair& pair) const {
    const IntPoly& f = polys_[pair.i];
    const IntPoly& g = polys_[pair.j];
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.front().coefficient.get_mpz_t(), g.front().coefficient.get_mpz_t());
    const Integer cf = g.front().coefficient / gcd;
    const Integer cg = f.front().coefficient / gcd;
    const Monomial mf = pair.lcm / f.front().monomial;
    const Monomial mg = pair.lcm / g.front().monomial;
    std::map<Monomial, Integer, OrderGreater> acc(OrderGreater{&order_});
    for (const auto& t : f) acc[t.monomial * mf] += cf * t.coefficient;
    for (const auto& t : g) acc[t.monomial * mg] -= cg * t.coefficient;
    IntPoly out;
    for (auto& [m, c] : acc) {
      if (sgn(c) != 0) out.push_back({m, std::move(c)});
    }
    return out;
  }

  // Full reduction by the active elements, kept integral by scaling.
  IntPoly reduce(IntPoly p) const {
    std::map<Monomial, Integer, OrderGreater> work(OrderGreater{&order_});
    for (auto& t : p) work.emplace(std::move(t.monomial), std::move(t.coefficient));
    IntPoly rem;
    while (!work.empty()) {
      auto top = work.begin();
      const IntPoly* reducer = nullptr;
      for (std::size_t k = 0; k < polys_.size(); ++k) {
        if (active_[k] && lead(k).divides(top->first)) {
          reducer = &polys_[k];
          break;
        }
      }
      if (!reducer) {
        rem.push_back({top->first, std::move(top->second)});
        work.erase(top);
        continue;
      }
      const Integer& a = reducer->front().coefficient;
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), a.get_mpz_t(), top->second.get_mpz_t());
      const Integer scale = a / gcd;
      const Integer factor = top->second / gcd;
      const Monomial shift = top->first / reducer->front().monomial;
      work.erase(top);
      if (scale != 1) {
        for (auto& [m, c] : work) c *= scale;
        for (auto& t : rem) t.coefficient *= scale;
      }
      for (auto it = reducer->begin() + 1; it != reducer->end(); ++it) {
        auto [pos, inserted] = work.try_emplace(it->monomial * shift, 0);
        pos->second -= factor * it->coefficient;
        if (sgn(pos->second) == 0) work.erase(pos);
      }
    }
    make_primitive(rem);
    return rem;
  }

  const MonomialOrder& order_;
  std::vector<IntPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

// Rational normal form against monic reducers given as order-sorted terms.
Polynomial reduce_rational(const Polynomial& p, const MonomialOrder& order,
                           const std::vector<Monomial>& leading,
                           const std::vector<std::vector<Term>>& reducers,
                           std::size_t skip = static_cast<std::size_t>(-1)) {
  std::map<Monomial, Rational, OrderGreater> work(OrderGreater{&order});
  for (const auto& t : p.terms()) work.emplace(t.monomial, t.coefficient);
  std::vector<Term> rem;
  while (!work.empty()) {
    auto top = work.begin();
    std::size_t k = 0;
    for (; k < leading.size(); ++k) {
      if (k != skip && leading[k].divides(top->first)) break;
    }
    if (k == leading.size()) {
      rem.push_back({top->first, std::move(top->second)});
      work.erase(top);
      continue;
    }
    const Rational factor = top->second;
    const Monomial shift = top->first / leading[k];
    work.erase(top);
    const auto& g = reducers[k];
    for (auto it = g.begin() + 1; it != g.end(); ++it) {
      auto [pos, inserted] = work.try_emplace(it->monomial * shift, 0);
      pos->second -= factor * it->coefficient;
      if (sgn(pos->second) == 0) work.erase(pos);
    }
  }
  return Polynomial(order.alphabet(), std::move(rem));
}

std::vector<Term> ordered(const Polynomial& p, const MonomialOrder& order) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [&order](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  return terms;
}

}  // namespace

GroebnerBasis groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "empty generator list");
  Buchberger engine(order);
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_alphabet(g.alphabet(), order.alphabet())) {
      throw Error(ErrorKind::AlphabetMismatch, "generator is not over the order's variables");
    }
    engine.add_generator(to_int_poly(g, order));
  }
  if (engine.basis().empty()) throw Error(ErrorKind::InvalidArgument, "all generators are zero");
  engine.run();

  GroebnerBasis gb(order);
  for (const IntPoly* p : engine.basis()) {
    const Rational lc(p->front().coefficient);
    std::vector<Term> terms;
    for (const auto& t : *p) terms.push_back({t.monomial, Rational(t.coefficient) / lc});
    gb.leading_.push_back(p->front().monomial);
    gb.ordered_.push_back(terms);
    gb.generators_.emplace_back(order.alphabet(), std::move(terms));
  }
  // interreduce tails; leading monomials are already minimal
  for (std::size_t k = 0; k < gb.generators_.size(); ++k) {
    gb.generators_[k] = reduce_rational(gb.generators_[k], order, gb.leading_, gb.ordered_, k);
    gb.ordered_[k] = ordered(gb.generators_[k], order);
  }
  std::vector<std::size_t> perm(gb.generators_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order.greater(gb.leading_[a], gb.leading_[b]);
  });
  GroebnerBasis sorted(order);
  for (std::size_t k : perm) {
    sorted.generators_.push_back(std::move(gb.generators_[k]));
    sorted.leading_.push_back(std::move(gb.leading_[k]));
    sorted.ordered_.push_back(std::move(gb.ordered_[k]));
  }
  return sorted;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.is_zero()) return Polynomial(gb.order().alphabet());
  if (!same_alphabet(p.alphabet(), gb.order().alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch, "polynomial is not over the basis variables");
  }
  std::vector<std::vector<Term>> reducers;
  reducers.reserve(gb.generators().size());
  for (std::size_t k = 0; k < gb.generators().size(); ++k) reducers.push_back(gb.ordered_terms(k));
  return reduce_rational(p, gb.order(), gb.leading_monomials(), reducers);
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  std::vector<bool> covered(gb.num_vars(), false);
  for (const auto& m : gb.leading_monomials()) {
    if (m.is_one()) return true;  // the unit ideal
    if (!m.is_pure_power()) continue;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) covered[i] = true;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree) {
  if (degree < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(gb.num_vars(), static_cast<unsigned>(degree))) {
    const bool in_ideal = std::any_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                                      [&m](const Monomial& l) { return l.divides(m); });
    if (!in_ideal) out.push_back(std::move(m));
  }
  const MonomialOrder& order = gb.order();
  std::sort(out.begin(), out.end(),
            [&order](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return out;
}

std::vector<std::size_t> hilbert_function(const GroebnerBasis& gb, int up_to) {
  if (!is_zero_dimensional(gb)) {
    throw Error(ErrorKind::NotZeroDimensional, "Hilbert function of a positive-dimensional quotient");
  }
  if (up_to < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree");
  std::vector<std::size_t> out;
  for (int k = 0; k <= up_to; ++k) out.push_back(standard_monomials(gb, k).size());
  return out;
}

}  // namespace cilef
