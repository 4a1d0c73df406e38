#pragma once

// Registry of named identity checks. Each check walks a parameter grid,
// compares both sides exactly, counts cases and keeps the first
// counterexample. No tolerances exist anywhere in here.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "norlund/rational.hpp"
#include "norlund/unipoly.hpp"

namespace norlund {

/// Parameter domain of a check. Excluded points (rho = 1, alpha rho = 1,
/// d_i = 0, lambda = 0) are skipped or redrawn by construction.
struct Grid {
  std::size_t n_max = 12;
  std::size_t m_max = 4;
  /// Random weight vectors drawn per order m = 1 .. m_max.
  std::size_t weight_vectors = 5;
  std::vector<Rational> weight_pool{Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                    Rational(2), Rational(-2), Rational(3)};
  std::vector<Rational> rho{Rational(1, 2), Rational(-1), Rational(2), Rational(-1, 3)};
  std::vector<Rational> alpha{Rational(0), Rational(1), Rational(1, 2)};
  std::vector<Rational> lambda{Rational(1), Rational(1, 2), Rational(-2)};
  std::vector<Rational> s_samples{Rational(0), Rational(1), Rational(-1, 2), Rational(3, 7)};
};

struct GridOverride {
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> m_max;
  std::optional<std::size_t> weight_vectors;

  Grid apply(Grid g) const;
};

using GridPoint = std::vector<std::pair<std::string, std::string>>;

struct Counterexample {
  GridPoint point;
  std::string lhs;
  std::string rhs;
};

enum class CheckMode { symbolic, sampled };
const char* to_string(CheckMode mode);

struct IdentityReport {
  std::string name;
  std::string anchor;
  CheckMode mode = CheckMode::symbolic;
  std::size_t total_cases = 0;
  std::optional<Counterexample> counterexample;  ///< present iff failed
  std::chrono::nanoseconds elapsed{0};

  bool passed() const { return !counterexample.has_value(); }
};

/// Collects case outcomes for one check run.
class CheckContext {
 public:
  CheckContext(Grid grid, std::uint64_t seed);

  const Grid& grid() const { return grid_; }
  std::mt19937_64& rng() { return rng_; }

  /// Uniform pick from a nonempty pool, portable across standard libraries.
  const Rational& pick(std::span<const Rational> pool);
  /// Random weight vectors of length m (grid().weight_vectors of them).
  std::vector<std::vector<Rational>> weight_vectors(std::size_t m);
  /// Valid (rho, alpha) pairs of the grid.
  std::vector<std::pair<Rational, Rational>> rho_alpha_pairs() const;

  bool expect(const GridPoint& point, const Rational& lhs, const Rational& rhs);
  bool expect(const GridPoint& point, const UniPoly& lhs, const UniPoly& rhs);
  bool expect(const GridPoint& point, bool condition, const std::string& what);

  std::size_t cases() const { return cases_; }
  const std::optional<Counterexample>& counterexample() const { return first_failure_; }

 private:
  bool record(const GridPoint& point, bool ok, std::string lhs, std::string rhs);

  Grid grid_;
  std::mt19937_64 rng_;
  std::size_t cases_ = 0;
  std::optional<Counterexample> first_failure_;
};

struct IdentityCheck {
  std::string name;
  std::string anchor;
  CheckMode mode = CheckMode::symbolic;
  /// Adjusts the suite-wide default grid for this check.
  std::function<Grid(Grid)> default_grid;
  std::function<void(CheckContext&)> runner;
};

/// The 26 registered identities, in report order.
const std::vector<IdentityCheck>& identity_registry();

/// Deliberately broken checks that must fail; never part of the registry.
const std::vector<IdentityCheck>& mutation_fixtures();

/// Registry first, then fixtures. nullptr when unknown.
const IdentityCheck* find_check(std::string_view name);

/// Throws std::out_of_range for an unknown name.
IdentityReport run_check(std::string_view name, const GridOverride& override, std::uint64_t seed);
IdentityReport run_check(const IdentityCheck& check, const GridOverride& override, std::uint64_t seed);

/// Runs the given checks concurrently; reports are in input order.
std::vector<IdentityReport> run_checks(std::span<const IdentityCheck> checks, const GridOverride& override,
                                       std::uint64_t seed);
/// Serial reference for run_checks.
std::vector<IdentityReport> run_checks_serial(std::span<const IdentityCheck> checks, const GridOverride& override,
                                              std::uint64_t seed);

std::vector<IdentityReport> run_all(std::uint64_t seed, const GridOverride& override = {});

}  // namespace norlund
