#include "norlund/binomial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace norlund {

namespace {

struct PascalTable {
  std::shared_mutex mutex;
  std::deque<std::vector<Rational>> rows{{Rational(1)}};

  void grow_to(std::size_t n) {
    std::unique_lock lock(mutex);
    while (rows.size() <= n) {
      const auto& prev = rows.back();
      std::vector<Rational> row(prev.size() + 1);
      row.front() = Rational(1);
      row.back() = Rational(1);
      for (std::size_t k = 1; k + 1 < row.size(); ++k) row[k] = prev[k - 1] + prev[k];
      rows.push_back(std::move(row));
    }
  }
};

PascalTable& table() {
  static PascalTable t;
  return t;
}

const Rational kZero{};

}  // namespace

const Rational& binomial(std::size_t n, std::size_t k) {
  if (k > n) return kZero;
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (n < t.rows.size()) return t.rows[n][k];
  }
  t.grow_to(n);
  std::shared_lock lock(t.mutex);
  return t.rows[n][k];
}

}  // namespace norlund
