#pragma once

// Multi-modular elimination: the reduced basis is computed over Z/p for a
// deterministic sequence of word-size primes, lifted by Chinese remaindering
// and rational reconstruction, and accepted only once the lift is stable and
// passes a caller-supplied exact check.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bour/elimination/ideal.hpp"

namespace bour::elim {

/// n/d with |n|, d <= sqrt(m/2) and n = a*d mod m, if it exists.
inline std::optional<ExactRational> rational_reconstruction(const BigInt& a, const BigInt& m) {
  BigInt bound;
  BigInt half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  BigInt r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1 && r1 != 0) return std::nullopt;
  return make_rational(r1, t1);
}

/// Primes below 2^31, descending, starting at 2^31 - 1.
class PrimeSequence {
 public:
  std::uint32_t next() {
    do {
      --candidate_;
    } while (mpz_probab_prime_p(BigInt(candidate_).get_mpz_t(), 30) == 0);
    return static_cast<std::uint32_t>(candidate_);
  }

 private:
  unsigned long candidate_ = 2147483648ul;
};

struct ModularOptions {
  std::size_t max_primes = 96;
  Budget budget;
};

struct ModularResult {
  std::vector<Polynomial> generators;  ///< primitive integer, full registry
  std::size_t primes_used = 0;
  EliminationStats stats;
};

/// Elimination ideal generators of `ideal` for the block order it carries.
/// `accept` receives each stable reconstruction and decides whether it is
/// final (typically an exact substitution certificate).
inline ModularResult modular_eliminate(const Ideal& ideal,
                                       const std::function<bool(const std::vector<Polynomial>&)>& accept,
                                       const ModularOptions& options = {}) {
  const MonomialOrder& order = ideal.order();
  if (order.kind() != MonomialOrder::Kind::block) throw InputError("modular elimination needs a block order");
  const VariableRegistry& reg = ideal.registry();
  KeyedOrder keyed(order, reg.size());
  std::uint32_t elim_mask = 0;
  for (std::size_t i : order.elimination_indices()) elim_mask |= 1u << i;

  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  // Leading monomials of the inputs, to detect primes that kill one.
  std::vector<EngineMonomial> input_leads;
  for (const auto& g : ideal.generators())
    input_leads.push_back(to_engine(g, keyed, RationalField{}).back().mono);

  using Support = std::vector<std::vector<EngineMonomial>>;
  Support reference;
  std::vector<std::vector<BigInt>> residues;  // per generator, per term
  BigInt modulus = 1;
  std::size_t agreeing = 0, disagreeing = 0;
  std::optional<std::vector<Polynomial>> previous;
  ModularResult result;
  PrimeSequence primes;

  for (std::size_t attempt = 0; attempt < options.max_primes; ++attempt) {
    const std::uint32_t p = primes.next();
    PrimeField field(p);
    std::vector<EnginePoly<PrimeField>> gens;
    bool bad = false;
    try {
      for (std::size_t k = 0; k < ideal.generators().size() && !bad; ++k) {
        auto g = to_engine(ideal.generators()[k], keyed, field);
        if (g.empty() || !same_exponents(g.back().mono, input_leads[k])) bad = true;
        gens.push_back(std::move(g));
      }
    } catch (const DivisionError&) {
      bad = true;
    }
    if (bad) continue;

    Budget budget = options.budget;
    if (budget.max_seconds > 0) {
      budget.max_seconds -= elapsed();
      if (budget.max_seconds <= 0) {
        result.stats.elapsed_seconds = elapsed();
        throw BudgetExceeded("time budget exceeded", result.stats);
      }
    }
    Buchberger<PrimeField> engine(field, keyed, budget);
    std::vector<EnginePoly<PrimeField>> basis;
    try {
      basis = engine.run(std::move(gens));
    } catch (BudgetExceeded& e) {
      EliminationStats s = e.stats();
      s.primes_used = result.primes_used;
      throw BudgetExceeded("modular elimination stopped", s);
    }
    result.stats = engine.stats();

    std::vector<EnginePoly<PrimeField>> eliminated;
    for (auto& b : basis)
      if ((b.back().mono.mask & elim_mask) == 0) eliminated.push_back(std::move(b));
    Support support;
    for (const auto& e : eliminated) {
      std::vector<EngineMonomial> s;
      for (const auto& t : e) s.push_back(t.mono);
      support.push_back(std::move(s));
    }
    auto same_support = [](const Support& a, const Support& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
          if (!same_exponents(a[i][j], b[i][j])) return false;
      }
      return true;
    };

    if (result.primes_used == 0 || !same_support(support, reference)) {
      if (result.primes_used > 0 && ++disagreeing <= agreeing) continue;  // unlucky prime
      reference = support;
      residues.assign(eliminated.size(), {});
      for (std::size_t i = 0; i < eliminated.size(); ++i)
        for (const auto& t : eliminated[i]) residues[i].push_back(BigInt(t.coeff));
      modulus = p;
      result.primes_used = 1;
      agreeing = 1;
      disagreeing = 0;
      previous.reset();
      continue;
    }

    // Chinese remaindering: x = r mod M, x = c mod p.
    BigInt pz(p), inv;
    mpz_invert(inv.get_mpz_t(), BigInt(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < eliminated.size(); ++i)
      for (std::size_t j = 0; j < eliminated[i].size(); ++j) {
        BigInt& r = residues[i][j];
        BigInt diff = (BigInt(eliminated[i][j].coeff) - r % pz) % pz;
        if (diff < 0) diff += pz;
        BigInt k = (diff * inv) % pz;
        r += modulus * k;
      }
    modulus *= pz;
    ++result.primes_used;
    ++agreeing;

    std::vector<Polynomial> lifted;
    bool ok = true;
    for (std::size_t i = 0; i < residues.size() && ok; ++i) {
      std::vector<Polynomial::Term> terms;
      for (std::size_t j = 0; j < residues[i].size() && ok; ++j) {
        auto q = rational_reconstruction(residues[i][j], modulus);
        if (!q) ok = false;
        else terms.push_back({keyed.unpack(reference[i][j]), GaussianRational(*q)});
      }
      if (ok) lifted.push_back(normalize_primitive_integer(Polynomial::from_terms(reg, std::move(terms)), order));
    }
    if (!ok) {
      previous.reset();
      continue;
    }
    if (previous && *previous == lifted) {
      if (accept(lifted)) {
        result.generators = std::move(lifted);
        result.stats.primes_used = result.primes_used;
        result.stats.elapsed_seconds = elapsed();
        return result;
      }
    }
    previous = std::move(lifted);
  }
  result.stats.primes_used = result.primes_used;
  result.stats.elapsed_seconds = elapsed();
  throw BudgetExceeded("modular elimination did not stabilise within the prime budget", result.stats);
}

}  // namespace bour::elim
