// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drinfeld/bench.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/frobenius.hpp"
#include "drinfeld/oracle.hpp"

using namespace drinfeld;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d (%s) [%.2fs]: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), seconds_since(start),
              o.detail.c_str());
  std::fflush(stdout);
}

std::shared_ptr<const FieldTower> f9() { return FieldTower::build(3, std::nullopt, {1, 0, 1}); }

FqPoly fq_poly(std::vector<FqElem> c) { return FqPoly{std::move(c)}; }

/// A module from the random test population.
struct Sample {
  std::uint32_t p;
  std::size_t e, d, r;
  std::uint64_t seed;
};

std::vector<Sample> population(std::size_t count) {
  const std::uint32_t primes[] = {2, 3, 5, 7};
  std::vector<Sample> out;
  std::mt19937_64 rng(20240601);
  for (std::size_t i = 0; i < count; ++i) {
    Sample s;
    s.p = primes[i % 4];
    s.e = 1 + (i / 4) % 2;
    s.d = 1 + rng() % 32;
    s.r = 1 + rng() % 6;
    s.seed = rng();
    out.push_back(s);
  }
  return out;
}

DrinfeldModule build(const Sample& s) {
  return random_module(FieldTower::random(s.p, s.e, s.d, s.seed), s.r, s.seed ^ 0x9e3779b97f4a7c15ULL);
}

struct Computed {
  Sample sample;
  DrinfeldModule phi;
  CharPoly pi;
};

std::vector<Computed> computed;  // filled by criterion 2, reused by 3-6

bool within_degree_bounds(const CharPoly& pi, std::size_t d) {
  const std::size_t r = pi.degree();
  for (std::size_t i = 0; i <= r; ++i)
    if (static_cast<std::ptrdiff_t>(r) * pi.coeffs[i].degree() > static_cast<std::ptrdiff_t>((r - i) * d)) return false;
  return true;
}

std::string describe(const Sample& s) {
  std::ostringstream o;
  o << "p=" << s.p << " e=" << s.e << " d=" << s.d << " r=" << s.r << " seed=" << s.seed;
  return o.str();
}

}  // namespace

int main() {
  report(1, "golden instance A", [] {
    Outcome o;
    const auto start = Clock::now();
    const auto t = f9();
    const DrinfeldModule phi(t, {{0, 1}, {1, 0}, {1, 0}});
    const CharPoly expected{{fq_poly({1, 0, 1}), fq_poly({2, 1}), fq_poly({1})}};
    for (Method m : {Method::mff, Method::mku, Method::csa})
      require(o, frobenius_charpoly(phi, m) == expected, std::string(method_name(m)) + " differs from X^2 - (2T+1)X + (T^2+1)");
    const FrobeniusNorm n = frobenius_norm_formula(phi);
    require(o, n.unit == 1 && n.ideal.generator == fq_poly({1, 0, 1}), "norm formula is not 1 * (T^2 + 1)");
    require(o, expected.coeffs[0] == PolyRing<Fq>(t->fq()).scale(n.unit, n.ideal.generator), "constant term differs from formula");
    require(o, rank2_trace_exhaustive(phi) == expected, "exhaustive oracle disagrees");
    const double elapsed = seconds_since(start);
    require(o, elapsed < 1.0, "runtime above 1 s");
    if (o.pass) o.detail = "mff = mku = csa = oracle = X^2 - (2T+1)X + (T^2+1), unit 1, generator T^2+1";
    return o;
  });

  report(2, "cross-method agreement", [] {
    Outcome o;
    const auto start = Clock::now();
    for (const Sample& s : population(200)) {
      const DrinfeldModule phi = build(s);
      const CharPoly mff = frobenius_charpoly(phi, Method::mff);
      require(o, frobenius_charpoly(phi, Method::mku) == mff, "mku differs at " + describe(s));
      require(o, frobenius_charpoly(phi, Method::csa) == mff, "csa differs at " + describe(s));
      computed.push_back({s, phi, mff});
    }
    const double elapsed = seconds_since(start);
    require(o, elapsed < 120.0, "total above 120 s");
    if (o.pass) o.detail = std::to_string(computed.size()) + " modules, p in {2,3,5,7}, e in {1,2}, d <= 32, r <= 6";
    return o;
  });

  report(3, "oracle equivalence", [] {
    Outcome o;
    std::size_t exhaustive = 0;
    // Every rank-2 tower shape within the budget, several modules each.
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      for (std::size_t e : {1u, 2u})
        for (std::size_t d = 1;; ++d) {
          std::uint64_t q = 1, cost = 1;
          for (std::size_t i = 0; i < e; ++i) q *= p;
          bool over = false;
          for (std::size_t i = 0; i < d / 2 + 1 && !over; ++i) over = (cost *= q) > kDefaultTraceBudget;
          if (over) break;
          for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const DrinfeldModule phi = random_module(FieldTower::random(p, e, d, 31 * d + seed), 2, seed);
            const CharPoly pi = frobenius_charpoly(phi, Method::automatic);
            require(o, rank2_trace_exhaustive(phi) == pi,
                    "exhaustive trace differs at p=" + std::to_string(p) + " e=" + std::to_string(e) + " d=" + std::to_string(d));
            ++exhaustive;
          }
        }
    std::size_t residues = 0;
    for (const Computed& c : computed) {
      require(o, frobenius_residue(c.phi, c.pi).is_zero(), "nonzero Cayley-Hamilton residue at " + describe(c.sample));
      ++residues;
    }
    if (o.pass)
      o.detail = std::to_string(exhaustive) + " rank-2 modules match the exhaustive trace; " + std::to_string(residues) +
                 " residues vanish";
    return o;
  });

  report(4, "degree bounds", [] {
    Outcome o;
#ifndef DRINFELD_CHECK_INVARIANTS
    require(o, false, "built without invariant checks");
#endif
    std::size_t matrices = 0;
    for (const Computed& c : computed) {
      require(o, within_degree_bounds(c.pi, c.sample.d), "charpoly degree bound fails at " + describe(c.sample));
      if (c.sample.d <= 16) {
        const auto t = c.phi.tower();
        const OrePoly frob = OrePoly::tau(t, t->d());
        require(o, motive_matrix_within_bounds(frob.degree(), motive_matrix(c.phi, frob)),
                "motive matrix bound fails at " + describe(c.sample));
        std::mt19937_64 rng(c.sample.seed);
        std::vector<KElem> coeffs(1 + rng() % 40);
        for (auto& x : coeffs) x = t->k().random(rng);
        const OrePoly f(t, coeffs);
        require(o, coordinates_within_bounds(f.degree(), c.phi.rank(), motive_coordinates(c.phi, f)),
                "coordinate bound fails at " + describe(c.sample));
        ++matrices;
      }
    }
    if (o.pass)
      o.detail = std::to_string(computed.size()) + " charpolys within deg(pi_i) <= (r-i)d/r; " + std::to_string(matrices) +
                 " motive matrices and coordinate vectors within bounds; invariant assertions compiled in";
    return o;
  });

  report(5, "norm laws", [] {
    Outcome o;
    std::mt19937_64 rng(5);
    const auto t = FieldTower::random(3, 2, 4, 17);
    const Fq& fq = t->fq();
    const PolyRing<Fq> ring(fq);
    const DrinfeldModule phi = random_module(t, 3, 4);
    std::size_t scalar_checks = 0;
    for (int i = 0; i < 20; ++i) {
      std::vector<FqElem> c(2 + rng() % 3);
      for (auto& x : c) x = fq.random(rng);
      const FqPoly a = ring.normalize(c);
      if (a.is_zero()) {
        --i;
        continue;
      }
      const NormIdeal n = isogeny_norm(Morphism(phi, phi, phi.phi(a)));
      require(o, n.generator == ring.monic(ring.pow(a, phi.rank())), "n(phi_a) != (a^r)");
      ++scalar_checks;
    }

    std::size_t chains = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto tt = FieldTower::random(seed % 2 ? 2 : 3, 1, 2 + seed % 5, 100 + seed);
      const PolyRing<Fq> rr(tt->fq());
      const DrinfeldModule a = random_module(tt, 1 + seed % 3, seed);
      const OrePoly tm = OrePoly::tau(tt, a.characteristic_degree());
      const auto b = push_forward(a, tm);
      require(o, b.has_value(), "tau^m is not an isogeny");
      if (!b) continue;
      const Morphism u(a, *b, tm);
      const FqPoly s = rr.normalize({tt->fq().random(rng), tt->fq().random(rng), 1});
      const Morphism v(*b, *b, b->phi(s));
      const Morphism w = compose(v, u);
      const auto c = push_forward(*b, tm);
      require(o, c.has_value(), "second tau^m is not an isogeny");
      if (!c) continue;
      const Morphism x(*b, *c, tm);
      const Morphism chain = compose(x, w);
      const FqPoly nu = isogeny_norm(u).generator, nv = isogeny_norm(v).generator, nx = isogeny_norm(x).generator;
      require(o, isogeny_norm(w).generator == rr.mul(nv, nu), "n(v u) != n(v) n(u)");
      require(o, isogeny_norm(chain).generator == rr.mul(nx, rr.mul(nv, nu)), "n(x v u) != n(x) n(v) n(u)");
      require(o, nu == a.characteristic(), "n(tau^m) != p");
      ++chains;
    }

    std::size_t frob = 0;
    for (const Computed& c : computed) {
      const PolyRing<Fq> rr(c.phi.tower()->fq());
      const FrobeniusNorm f = frobenius_norm_formula(c.phi);
      if (c.sample.d <= 16) {
        require(o, isogeny_norm(frobenius_endomorphism(c.phi)) == f.ideal, "n(F) != (p^(d/m)) at " + describe(c.sample));
      }
      require(o, rr.monic(c.pi.coeffs[0]) == f.ideal.generator, "((-1)^r pi_0) != n(F) at " + describe(c.sample));
      require(o, c.pi.coeffs[0] == rr.scale(f.unit, f.ideal.generator), "pi_0 != unit * p^(d/m) at " + describe(c.sample));
      ++frob;
    }
    if (o.pass)
      o.detail = std::to_string(scalar_checks) + " scalar norms, " + std::to_string(chains) + " isogeny chains, " +
                 std::to_string(frob) + " Frobenius norms";
    return o;
  });

  report(6, "structural equalities", [] {
    Outcome o;
    std::size_t mku = 0, csa = 0;
    for (const Computed& c : computed) {
      const auto t = c.phi.tower();
      const std::size_t d = t->d();
      if (d <= 16) {
        require(o, mku_matrix(c.phi, d).matrix == motive_matrix(c.phi, OrePoly::tau(t, d)),
                "mku_matrix != motive_matrix(tau^d) at " + describe(c.sample));
        ++mku;
      }
      // Charpoly of the reduced-norm matrix without assuming periodicity.
      const auto m = csa_matrix(*t, c.phi.phi_T());
      const auto coeffs = charpoly_poly_matrix(t->fq(), m, c.sample.r * d, 1, Strategy::eval_interp);
      bool periodic = true;
      for (const auto& poly : coeffs)
        for (std::size_t k = 0; k < poly.c.size(); ++k)
          if (k % d != 0 && poly.c[k] != 0) periodic = false;
      require(o, periodic, "csa charpoly not in F_q[t^d] at " + describe(c.sample));
      ++csa;
    }
    std::mt19937_64 rng(6);
    std::size_t scalars = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = FieldTower::random(seed % 2 ? 5 : 2, 1 + seed % 2, 1 + seed % 7, seed);
      const Fq& fq = t->fq();
      const PolyRing<Fq> ring(fq);
      const DrinfeldModule phi = random_module(t, 1 + seed % 5, seed);
      std::vector<FqElem> c(1 + rng() % 4);
      for (auto& x : c) x = fq.random(rng);
      const FqPoly a = ring.normalize(c);
      const CharPoly pi = endomorphism_charpoly(Morphism(phi, phi, phi.phi(a)));
      // (X - a)^r by repeated multiplication.
      std::vector<FqPoly> expected{ring.one()};
      for (std::size_t k = 0; k < phi.rank(); ++k) {
        std::vector<FqPoly> next(expected.size() + 1);
        for (std::size_t i = 0; i < expected.size(); ++i) {
          next[i + 1] = ring.add(next[i + 1], expected[i]);
          next[i] = ring.sub(next[i], ring.mul(a, expected[i]));
        }
        expected = std::move(next);
      }
      require(o, pi.coeffs == expected, "charpoly(phi_a) != (X - a)^r");
      ++scalars;
    }
    if (o.pass)
      o.detail = std::to_string(mku) + " mku/motive matrix equalities, " + std::to_string(scalars) +
                 " scalar charpolys, " + std::to_string(csa) + " periodic csa charpolys";
    return o;
  });

  report(7, "linalg strategy equivalence", [] {
    Outcome o;
    std::mt19937_64 rng(7);
    const SmallField f9(3, {1, 0, 1});
    const SmallField f3(3);
    std::size_t count = 0;
    const auto run = [&](const SmallField& f) {
      const PolyRing<SmallField> ring(f);
      for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 1 + rng() % 6;
        const std::size_t deg = rng() % 9;
        PolyMatrix<SmallField::Elem> m(n, n, {});
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            std::vector<SmallField::Elem> c(deg + 1);
            for (auto& x : c) x = f.random(rng);
            m(i, j) = ring.normalize(c);
          }
        const std::size_t bound = n * deg;
        require(o,
                det_poly_matrix(f, m, bound, Strategy::division_free) == det_poly_matrix(f, m, bound, Strategy::eval_interp),
                "determinants differ");
        require(o,
                charpoly_poly_matrix(f, m, bound, 1, Strategy::division_free) ==
                    charpoly_poly_matrix(f, m, bound, 1, Strategy::eval_interp),
                "charpolys differ");
        ++count;
      }
    };
    run(f9);
    run(f3);
    if (o.pass) o.detail = std::to_string(count) + " matrices (50 over F_9[T], 50 over F_3[t]), det and charpoly";
    return o;
  });

  report(8, "bench sanity", [] {
    Outcome o;
    BenchConfig config;
    config.p = 2;
    config.e = 1;
    config.d_grid = {8, 16, 32};
    config.r_grid = {2, 4, 8};
    config.reps = 3;
    config.seed = 8;
    const auto rows = run_bench(config);
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    std::size_t lines = 0;
    for (char ch : csv.str()) lines += ch == '\n';
    require(o, rows.size() == 3 * 3 * 3 * 3 && lines == rows.size() + 1, "incomplete CSV");

    std::map<std::tuple<Method, std::size_t, std::size_t>, double> mean;
    for (const auto& row : rows) mean[{row.method, row.r, row.d}] += row.wall_seconds / config.reps;
    for (Method m : config.methods)
      for (std::size_t r : config.r_grid)
        for (std::size_t i = 0; i + 1 < config.d_grid.size(); ++i) {
          const double a = mean[{m, r, config.d_grid[i]}], b = mean[{m, r, config.d_grid[i + 1]}];
          require(o, a <= b,
                  std::string(method_name(m)) + " mean time decreases from d=" + std::to_string(config.d_grid[i]) +
                      " to d=" + std::to_string(config.d_grid[i + 1]) + " at r=" + std::to_string(r));
        }
    const double csa = mean[{Method::csa, 8, 8}], mff = mean[{Method::mff, 8, 8}], mku = mean[{Method::mku, 8, 8}];
    const bool csa_fastest = csa <= mff && csa <= mku;
    if (o.pass) {
      std::ostringstream detail;
      detail << rows.size() << " CSV rows, times nondecreasing in d; at (d=8, r=8) mean mff=" << mff << "s mku=" << mku
             << "s csa=" << csa << "s, "
             << (csa_fastest ? "csa fastest" : "deviation: csa is not the fastest");
      o.detail = detail.str();
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
