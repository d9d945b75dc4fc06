#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

#include "drinfeld/frobenius.hpp"

namespace drinfeld {

struct BenchConfig {
  std::uint32_t p = 2;
  std::size_t e = 1;
  std::vector<std::size_t> d_grid{8, 16, 32};
  std::vector<std::size_t> r_grid{2, 4, 8};
  std::vector<Method> methods{Method::mff, Method::mku, Method::csa};
  std::size_t reps = 3;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::uint64_t q = 0;
  std::size_t e = 0;
  std::size_t d = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  Method method = Method::mff;
  std::size_t rep = 0;
  double wall_seconds = 0;
};

/// One fresh random module per (d, r, rep), shared by all methods. Throws
/// std::logic_error if two methods disagree.
std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace drinfeld
