#include "drinfeld/bench.hpp"

#include <chrono>
#include <stdexcept>

namespace drinfeld {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  std::uint64_t seed = config.seed;
  for (std::size_t d : config.d_grid)
    for (std::size_t r : config.r_grid)
      for (std::size_t rep = 0; rep < config.reps; ++rep) {
        const auto tower = FieldTower::random(config.p, config.e, d, seed++);
        const DrinfeldModule phi = random_module(tower, r, seed++);
        std::optional<CharPoly> reference;
        for (Method method : config.methods) {
          const auto start = std::chrono::steady_clock::now();
          CharPoly pi = frobenius_charpoly(phi, method);
          const auto stop = std::chrono::steady_clock::now();
          if (!reference) {
            reference = std::move(pi);
          } else if (!(pi == *reference)) {
            throw std::logic_error("Frobenius charpoly methods disagree");
          }
          rows.push_back({tower->q(), tower->e(), d, r, phi.characteristic_degree(), method, rep,
                          std::chrono::duration<double>(stop - start).count()});
        }
      }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "q,e,d,r,m,method,rep,wall_seconds\n";
  for (const auto& row : rows)
    out << row.q << ',' << row.e << ',' << row.d << ',' << row.r << ',' << row.m << ',' << method_name(row.method)
        << ',' << row.rep << ',' << row.wall_seconds << '\n';
}

}  // namespace drinfeld
