#include "qnoise/mc_oracle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <thread>

#include "qnoise/errors.hpp"

namespace qnoise {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Box-Muller over mt19937_64. Pairs are cached so every draw consumes half a
// pair; the sequence is fixed by the engine seed alone.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct Moments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0) return;
    const double na = static_cast<double>(n);
    const double nb = static_cast<double>(o.n);
    const double d = o.mean - mean;
    const double total = na + nb;
    mean += d * nb / total;
    m2 += o.m2 + d * d * na * nb / total;
    n += o.n;
  }
};

struct Model {
  double sd_sq;
  double sd_anti;
  double angle;
  double sigma;
  std::vector<double> keep;  // sqrt(eta) per stage
  std::vector<double> leak;  // sqrt(1 - eta) per stage
};

Moments sample_shard(const Model& m, std::uint64_t seed, std::size_t shard, std::size_t count) {
  GaussianStream g(splitmix64(seed + shard));
  Moments acc;
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = m.sigma > 0.0 ? m.angle + m.sigma * g.next() : m.angle;
    const double a = m.sd_sq * g.next();
    const double b = m.sd_anti * g.next();
    double x = a * std::cos(theta) + b * std::sin(theta);
    for (std::size_t s = 0; s < m.keep.size(); ++s) x = m.keep[s] * x + m.leak[s] * g.next();
    acc.add(x);
  }
  return acc;
}

}  // namespace

SampleRun sample_lossy_squeezed(const QuadratureState& state, std::span<const double> etas,
                                double sigma, std::size_t n, std::uint64_t seed, unsigned workers) {
  if (n < 2) throw UsageError("sample_lossy_squeezed needs n >= 2, got " + std::to_string(n));
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw DomainError("phase jitter sigma must be >= 0, got " + std::to_string(sigma));
  }
  Model model{std::sqrt(state.v_sq()), std::sqrt(state.v_anti()), state.angle(), sigma, {}, {}};
  for (double eta : etas) {
    if (!std::isfinite(eta) || eta <= 0.0 || eta > 1.0) {
      throw DomainError("efficiency must lie in (0, 1], got " + std::to_string(eta));
    }
    model.keep.push_back(std::sqrt(eta));
    model.leak.push_back(std::sqrt(1.0 - eta));
  }

  const std::size_t shards = (n + kShardSize - 1) / kShardSize;
  std::vector<Moments> parts(shards);
  auto run_shard = [&](std::size_t k) {
    const std::size_t count = std::min(kShardSize, n - k * kShardSize);
    parts[k] = sample_shard(model, seed, k, count);
  };

  const std::size_t pool = std::min<std::size_t>(std::max(workers, 1u), shards);
  if (pool <= 1) {
    for (std::size_t k = 0; k < shards; ++k) run_shard(k);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(pool);
    for (std::size_t w = 0; w < pool; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t k = w; k < shards; k += pool) run_shard(k);
      });
    }
  }

  Moments total;
  for (const auto& p : parts) total.merge(p);
  const double var = total.m2 / static_cast<double>(n - 1);
  return {n, seed, var, var * std::sqrt(2.0 / static_cast<double>(n - 1))};
}

SampleRun sample_lossy_squeezed(double v_in, double eta, double sigma, std::size_t n,
                                std::uint64_t seed) {
  const double etas[] = {eta};
  return sample_lossy_squeezed(QuadratureState(v_in, 1.0 / v_in), etas, sigma, n, seed);
}

OracleVerdict oracle_compare(double analytic, const SampleRun& run) {
  const double diff = run.estimated_variance - analytic;
  if (run.standard_error == 0.0) return {diff == 0.0, diff == 0.0 ? 0.0 : INFINITY};
  const double z = diff / run.standard_error;
  return {std::abs(z) <= 3.0, z};
}

OracleVerdict oracle_compare(const SampleRun& a, const SampleRun& b) {
  const double diff = a.estimated_variance - b.estimated_variance;
  const double se = std::hypot(a.standard_error, b.standard_error);
  if (se == 0.0) return {diff == 0.0, diff == 0.0 ? 0.0 : INFINITY};
  const double z = diff / se;
  return {std::abs(z) <= 3.0, z};
}

std::vector<OracleCheck> run_oracle_suite(std::uint64_t seed, std::size_t n, unsigned workers) {
  std::vector<OracleCheck> checks;
  // Each check draws from its own seed so the checks are independent.
  std::uint64_t next_seed = seed;
  auto single = [&](std::string name, const QuadratureState& s, std::vector<double> etas,
                    double sigma, double analytic) {
    const SampleRun run = sample_lossy_squeezed(s, etas, sigma, n, next_seed++, workers);
    checks.push_back({std::move(name), analytic, run, oracle_compare(analytic, run)});
  };

  for (const auto& [v, eta] : {std::pair{0.1, 0.62}, std::pair{1.0, 0.5}, std::pair{0.126, 0.833}}) {
    const QuadratureState s(v, 1.0 / v);
    char name[64];
    std::snprintf(name, sizeof name, "loss v=%g eta=%g", v, eta);
    single(name, s, {eta}, 0.0, apply_loss(s, eta).v_sq());
  }

  const QuadratureState injected = state_from_db({10.0, 15.0});
  single("chain 0.9 then 0.8", injected, {0.9, 0.8}, 0.0, apply_loss(injected, 0.72).v_sq());
  {
    const double chain[] = {0.9, 0.8};
    const double merged[] = {0.72};
    const SampleRun a = sample_lossy_squeezed(injected, chain, 0.0, n, next_seed++, workers);
    const SampleRun b = sample_lossy_squeezed(injected, merged, 0.0, n, next_seed++, workers);
    checks.push_back({"chain vs single beamsplitter", b.estimated_variance, a, oracle_compare(a, b)});
  }
  single("jitter sigma=0.2 eta=0.62", injected, {0.62}, 0.2,
         readout_variance(dephase(apply_loss(injected, 0.62), 0.2)));
  const QuadratureState tilted = rotate(injected, std::numbers::pi / 8.0);
  single("readout at pi/8 eta=0.62", tilted, {0.62}, 0.0,
         readout_variance(apply_loss(tilted, 0.62)));
  return checks;
}

}  // namespace qnoise
