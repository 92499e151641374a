#include <algorithm>
#include <ostream>
#include <random>

#include "bitga/cli.hpp"

namespace bitga::cli {

namespace {

constexpr int kMaxVerifyGenerators = 12;
constexpr int kMaxProductGenerators = 10;
constexpr int kMaxHomomorphismGenerators = 8;
constexpr double kMatrixTolerance = 1e-9;

Blade random_blade(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<Mask> dist(0, window(m));
  return Blade(dist(rng), m);
}

Multivector random_integer_multivector(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Term> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    terms.push_back({random_blade(rng, m).mask(), static_cast<double>(coeff(rng))});
  }
  return Multivector::from_terms(m, std::move(terms));
}

void record(CheckTally& tally, bool ok) { ok ? ++tally.passed : ++tally.failed; }

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckTally& c) { return c.failed == 0; });
}

VerifyReport run_verification(int m, std::size_t trials, std::uint64_t seed) {
  if (m < 1 || m > kMaxVerifyGenerators) {
    throw UsageError("--m must be in [1, " +
                     std::to_string(kMaxVerifyGenerators) + "]");
  }
  std::mt19937_64 rng(seed);

  CheckTally oracle{"sign-oracle"};
  CheckTally assoc{"associativity"};
  CheckTally anticomm{"anticommutation"};
  CheckTally reverse_products{"reverse-by-products"};
  CheckTally anti_auto{"reverse-anti-automorphism"};
  CheckTally homomorphism{"cartan-homomorphism"};

  const int mv_m = std::min(m, kMaxProductGenerators);
  const int rep_m = std::min(m, kMaxHomomorphismGenerators);
  std::uniform_int_distribution<int> pick(1, m);

  for (std::size_t t = 0; t < trials; ++t) {
    {
      const Blade a = random_blade(rng, m);
      const Blade b = random_blade(rng, m);
      const SignedBlade ab = blade_product(a, b);
      record(oracle, ab.sign == sign_oracle(a, b) &&
                         ab.blade.mask() == (a.mask() ^ b.mask()));
    }
    {
      const Blade a = random_blade(rng, m);
      const Blade b = random_blade(rng, m);
      const Blade c = random_blade(rng, m);
      const SignedBlade ab = blade_product(a, b);
      const SignedBlade bc = blade_product(b, c);
      const SignedBlade left = blade_product(ab.blade, c);
      const SignedBlade right = blade_product(a, bc.blade);
      record(assoc, ab.sign * left.sign == bc.sign * right.sign &&
                        left.blade == right.blade);
    }
    {
      const int i = pick(rng);
      const int j = pick(rng);
      const Blade ei = Blade::generator(i, m);
      const Blade ej = Blade::generator(j, m);
      const bool ok =
          i == j ? blade_product(ei, ej) == SignedBlade{1, Blade::scalar(m)}
                 : blade_product(ei, ej) == -blade_product(ej, ei);
      record(anticomm, ok);
    }
    {
      const Blade a = random_blade(rng, m);
      SignedBlade forward{1, Blade::scalar(m)};
      SignedBlade backward{1, Blade::scalar(m)};
      for (int j = 1; j <= m; ++j) {
        if (!a.has(j)) continue;
        const SignedBlade f = blade_product(forward.blade, Blade::generator(j, m));
        forward = {forward.sign * f.sign, f.blade};
        const SignedBlade b = blade_product(Blade::generator(j, m), backward.blade);
        backward = {backward.sign * b.sign, b.blade};
      }
      record(reverse_products, forward.blade == a && forward.sign == 1 &&
                                   backward.blade == a &&
                                   backward.sign == reverse_sign(a));
    }
    {
      const Multivector x = random_integer_multivector(rng, mv_m);
      const Multivector y = random_integer_multivector(rng, mv_m);
      record(anti_auto, reverse(geometric_product(x, y)) ==
                            geometric_product(reverse(y), reverse(x)));
    }
    {
      const Blade a = random_blade(rng, rep_m);
      const Blade b = random_blade(rng, rep_m);
      const ComplexMatrix lhs = represent(
          Multivector::from_signed_blade(blade_product(a, b)),
          RepKind::CartanGeneral);
      const ComplexMatrix rhs = blade_matrix(a, RepKind::CartanGeneral) *
                                blade_matrix(b, RepKind::CartanGeneral);
      record(homomorphism, (lhs - rhs).cwiseAbs().maxCoeff() <= kMatrixTolerance);
    }
  }

  return {{oracle, assoc, anticomm, reverse_products, anti_auto, homomorphism}};
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  VerifyReport report;
  try {
    report = run_verification(opts.m, opts.trials, opts.seed);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opts.json) {
    nlohmann::json j;
    j["m"] = opts.m;
    j["trials"] = opts.trials;
    j["seed"] = opts.seed;
    for (const CheckTally& c : report.checks) {
      j["checks"][c.name] = {{"passed", c.passed}, {"failed", c.failed}};
    }
    j["ok"] = report.ok();
    out << j.dump() << '\n';
  } else {
    out << "verify m=" << opts.m << " trials=" << opts.trials
        << " seed=" << opts.seed << '\n';
    for (const CheckTally& c : report.checks) {
      out << (c.failed == 0 ? "PASS " : "FAIL ") << c.name
          << " passed=" << c.passed << " failed=" << c.failed << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace bitga::cli
