#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drinfeld/bench.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/frobenius.hpp"
#include "drinfeld/io/module_file.hpp"
#include "drinfeld/io/render.hpp"
#include "drinfeld/kernels.hpp"

using namespace drinfeld;

namespace {

DrinfeldModule load_module(const std::string& path) { return io::parse_module(io::read_text_file(path)); }

OrePoly load_ore(const std::string& path, const DrinfeldModule& phi) {
  return io::parse_ore(io::read_text_file(path), phi.tower());
}

bool same_tower(const FieldTower& a, const FieldTower& b) {
  return a.p() == b.p() && a.fq().modulus() == b.fq().modulus() && a.k().modulus() == b.k().modulus();
}

/// Re-reads psi over phi's tower so that both share one set of field objects.
DrinfeldModule on_tower_of(const DrinfeldModule& phi, const DrinfeldModule& psi) {
  if (!same_tower(*phi.tower(), *psi.tower())) fail(Errc::tower_mismatch, "modules are defined over different fields");
  return DrinfeldModule(phi.tower(), psi.coefficients());
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(item, &pos);
    if (pos != item.size() || v == 0) fail(Errc::invalid_argument, "bad grid entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) fail(Errc::invalid_argument, "empty grid");
  return out;
}

std::vector<Method> parse_methods(const std::string& text) {
  std::vector<Method> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto m = parse_method(item);
    if (!m || *m == Method::automatic) fail(Errc::invalid_argument, "unknown method '" + item + "'");
    out.push_back(*m);
  }
  return out;
}

/// (p, e) with p^e = q.
std::pair<std::uint32_t, std::size_t> split_prime_power(std::uint64_t q, std::size_t e) {
  if (q < 2) fail(Errc::invalid_argument, "q must be a prime power");
  if (e == 0) {
    for (std::uint64_t p = 2; p <= q; ++p)
      if (q % p == 0) {
        std::uint64_t v = q;
        while (v % p == 0) {
          v /= p;
          ++e;
        }
        if (v != 1 || !is_prime(p)) fail(Errc::invalid_argument, "q must be a prime power");
        return {static_cast<std::uint32_t>(p), e};
      }
  }
  const auto p = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / e)));
  std::uint64_t check = 1;
  for (std::size_t i = 0; i < e; ++i) check *= p;
  if (check != q || !is_prime(p)) fail(Errc::invalid_argument, "q is not the e-th power of a prime");
  return {static_cast<std::uint32_t>(p), e};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius characteristic polynomials and isogeny norms of Drinfeld modules"};
  app.require_subcommand(1);
  std::string isa = "auto";
  app.add_option("--isa", isa, "Dot-product kernel: auto, scalar, avx2")->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string module_path, morphism_path, domain_path, codomain_path, method_name_arg = "auto";

  auto* frob = app.add_subcommand("frobenius", "Characteristic polynomial of the Frobenius endomorphism");
  frob->add_option("--module", module_path, "Module file")->required();
  frob->add_option("--method", method_name_arg, "mff, mku, csa or auto")->check(CLI::IsMember({"mff", "mku", "csa", "auto"}));

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of an endomorphism");
  charpoly->add_option("--module", module_path, "Module file")->required();
  charpoly->add_option("--morphism", morphism_path, "Ore file")->required();

  auto* norm = app.add_subcommand("norm", "Norm of an isogeny");
  norm->add_option("--domain", domain_path, "Module file")->required();
  norm->add_option("--isogeny", morphism_path, "Ore file")->required();
  norm->add_option("--codomain", codomain_path, "Module file; computed from the isogeny when omitted");

  auto* verify = app.add_subcommand("verify", "Check that an Ore polynomial is a morphism");
  verify->add_option("--domain", domain_path, "Module file")->required();
  verify->add_option("--codomain", codomain_path, "Module file")->required();
  verify->add_option("--morphism", morphism_path, "Ore file")->required();

  std::uint64_t q = 0, seed = 1;
  std::size_t e = 0, d = 0, r = 0;
  auto* random = app.add_subcommand("random", "Print a random module file");
  random->add_option("--q", q, "Size of the constant field")->required();
  random->add_option("--e", e, "Degree of F_q over F_p (derived from q when omitted)");
  random->add_option("--d", d, "Degree of K over F_q")->required()->check(CLI::PositiveNumber);
  random->add_option("--r", r, "Rank")->required()->check(CLI::PositiveNumber);
  random->add_option("--seed", seed, "Random seed");

  std::string d_grid = "8,16,32", r_grid = "2,4,8", methods = "mff,mku,csa", output;
  std::size_t reps = 3;
  std::uint64_t bench_q = 2;
  auto* bench = app.add_subcommand("bench", "Time the Frobenius charpoly methods, CSV on stdout");
  bench->add_option("--d-grid", d_grid, "Comma-separated degrees d");
  bench->add_option("--r-grid", r_grid, "Comma-separated ranks r");
  bench->add_option("--methods", methods, "Comma-separated subset of mff,mku,csa");
  bench->add_option("--reps", reps, "Repetitions per cell")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Random seed");
  bench->add_option("--q", bench_q, "Size of the constant field");
  bench->add_option("--e", e, "Degree of F_q over F_p (derived from q when omitted)");
  bench->add_option("--output", output, "Write the CSV to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (isa == "scalar") kernels::force_isa(kernels::Isa::scalar);
    if (isa == "avx2" && !kernels::force_isa(kernels::Isa::avx2)) fail(Errc::invalid_argument, "AVX2 kernels unavailable");

    if (*frob) {
      const DrinfeldModule phi = load_module(module_path);
      const CharPoly pi = frobenius_charpoly(phi, *parse_method(method_name_arg));
      std::cout << io::render_charpoly(*phi.tower(), pi) << '\n';
    } else if (*charpoly) {
      const DrinfeldModule phi = load_module(module_path);
      const Morphism u(phi, phi, load_ore(morphism_path, phi));
      std::cout << io::render_charpoly(*phi.tower(), endomorphism_charpoly(u)) << '\n';
    } else if (*norm) {
      const DrinfeldModule phi = load_module(domain_path);
      const OrePoly u = load_ore(morphism_path, phi);
      std::optional<DrinfeldModule> psi;
      if (codomain_path.empty()) {
        psi = push_forward(phi, u);
        if (!psi) fail(Errc::not_a_morphism, "no codomain makes the given Ore polynomial an isogeny");
      } else {
        psi = on_tower_of(phi, load_module(codomain_path));
      }
      const Morphism iso(phi, *psi, u);
      std::cout << io::render_norm(*phi.tower(), isogeny_norm(iso)) << '\n';
    } else if (*verify) {
      const DrinfeldModule phi = load_module(domain_path);
      const DrinfeldModule psi = on_tower_of(phi, load_module(codomain_path));
      if (!is_morphism(phi, psi, load_ore(morphism_path, phi))) {
        std::cout << "not a morphism\n";
        return 1;
      }
      std::cout << "morphism\n";
    } else if (*random) {
      const auto [p, ee] = split_prime_power(q, e);
      const auto tower = FieldTower::random(p, ee, d, seed);
      std::cout << io::render_module(random_module(tower, r, seed));
    } else if (*bench) {
      BenchConfig config;
      std::tie(config.p, config.e) = split_prime_power(bench_q, e);
      config.d_grid = parse_grid(d_grid);
      config.r_grid = parse_grid(r_grid);
      config.methods = parse_methods(methods);
      config.reps = reps;
      config.seed = seed;
      const auto rows = run_bench(config);
      if (output.empty()) {
        write_bench_csv(std::cout, rows);
      } else {
        std::ofstream out(output);
        if (!out) fail(Errc::invalid_argument, "cannot write " + output);
        write_bench_csv(out, rows);
      }
    }
  } catch (const Error& err) {
    std::cerr << "error: " << errc_name(err.code()) << ": " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}
