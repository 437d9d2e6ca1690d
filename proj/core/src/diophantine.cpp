#include "extrema/diophantine.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "extrema/errors.hpp"
#include "extrema/numeric.hpp"
#include "extrema/primes.hpp"

namespace extrema {

namespace {

using boost::multiprecision::cpp_int;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kScanChunk = 1 << 16;

void check_primes(const std::vector<std::uint64_t>& primes, const char* what) {
  if (primes.empty()) throw RangeError(std::string(what) + ": prime list is empty");
  std::set<std::uint64_t> seen;
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw RangeError(std::string(what) + ": " + std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) {
      throw RangeError(std::string(what) + ": prime " + std::to_string(p) + " repeated");
    }
  }
}

// prod p^{u_j} over u_j > 0 and u_j < 0 separately, so the ratio is num/den.
void split_product(const std::vector<std::uint64_t>& primes, const std::vector<int>& u,
                   cpp_int& num, cpp_int& den) {
  num = 1;
  den = 1;
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (int k = 0; k < std::abs(u[j]); ++k) {
      if (u[j] > 0) {
        num *= primes[j];
      } else {
        den *= primes[j];
      }
    }
  }
  if (num < den) std::swap(num, den);
}

}  // namespace

ChenInstance::ChenInstance(std::vector<double> lambdas, std::vector<double> betas,
                           std::vector<double> deltas, int M, double T1, double T2)
    : lambdas_(std::move(lambdas)),
      betas_(std::move(betas)),
      deltas_(std::move(deltas)),
      M_(M),
      T1_(T1),
      T2_(T2) {
  if (lambdas_.empty()) throw RangeError("ChenInstance: needs at least one frequency");
  if (betas_.size() != lambdas_.size() || deltas_.size() != lambdas_.size()) {
    throw RangeError("ChenInstance: lambda, beta and delta lists differ in length");
  }
  if (M_ < 1) throw RangeError("ChenInstance: M must be >= 1");
  if (!(T1_ < T2_) || !std::isfinite(T1_) || !std::isfinite(T2_)) {
    throw RangeError("ChenInstance: need finite T1 < T2");
  }
  CompensatedSum<double> acc;
  for (std::size_t j = 0; j < lambdas_.size(); ++j) {
    if (!(lambdas_[j] > 0.0) || !std::isfinite(lambdas_[j])) {
      throw RangeError("ChenInstance: lambdas must be positive");
    }
    if (!std::isfinite(betas_[j])) throw RangeError("ChenInstance: betas must be finite");
    if (!(deltas_[j] >= 0.0) || !std::isfinite(deltas_[j])) {
      throw RangeError("ChenInstance: deltas must be >= 0");
    }
    acc.add(deltas_[j]);
  }
  delta_big_ = acc.value();
}

ChenInstance ChenInstance::from_primes(const std::vector<std::uint64_t>& primes,
                                       std::vector<double> betas, std::vector<double> deltas,
                                       int M, double T1, double T2) {
  check_primes(primes, "ChenInstance");
  std::vector<double> lambdas;
  lambdas.reserve(primes.size());
  for (std::uint64_t p : primes) lambdas.push_back(std::log(static_cast<double>(p)) / kTwoPi);
  return ChenInstance(std::move(lambdas), std::move(betas), std::move(deltas), M, T1, T2);
}

double ChenInstance::max_lambda() const noexcept {
  return *std::max_element(lambdas_.begin(), lambdas_.end());
}

double chen_bound(const ChenInstance& inst, double Lambda) {
  if (!(Lambda > 0.0)) throw RangeError("chen_bound: Lambda must be positive");
  const double delta = inst.delta_big();
  if (delta == 0.0) return 0.0;
  const double s = std::sin(std::numbers::pi / (2.0 * (inst.M() + 1)));
  const double first = 0.25 * delta * s * s;
  const double log_second = std::log(delta) + static_cast<double>(inst.n()) * std::log(inst.M()) -
                            std::log(4.0 * std::numbers::pi) - std::log(Lambda) -
                            std::log(inst.T2() - inst.T1());
  if (log_second > std::log(std::numeric_limits<double>::max())) {
    return std::numeric_limits<double>::infinity();
  }
  return first + std::exp(log_second);
}

LinearFormMin lambda_exact(const std::vector<std::uint64_t>& primes, int M, std::uint64_t budget) {
  check_primes(primes, "lambda_exact");
  if (M < 1) throw RangeError("lambda_exact: M must be >= 1");
  const std::size_t n = primes.size();
  const double side = 2.0 * M + 1.0;
  const double total = std::pow(side, static_cast<double>(n));
  if (total > static_cast<double>(budget)) {
    throw BudgetExceeded("lambda_exact enumeration (use lambda_analytic instead)",
                         total >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max()
                                         : static_cast<std::uint64_t>(total),
                         budget);
  }

  std::vector<double> logs(n);
  for (std::size_t j = 0; j < n; ++j) logs[j] = std::log(static_cast<double>(primes[j]));
  double screen = 0.0;
  for (double l : logs) screen += M * l;
  const double slack = 1e-12 * (1.0 + screen);

  std::vector<int> u(n, -M);
  std::vector<int> best_u;
  cpp_int best_num;
  cpp_int best_den;
  double best_float = std::numeric_limits<double>::infinity();
  cpp_int num;
  cpp_int den;

  // level[j] = sum_{k >= j} u_k log p_k, refreshed below the digit that moved.
  std::vector<double> level(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) level[k] = level[k + 1] + u[k] * logs[k];
  while (true) {
    const bool nonzero = std::any_of(u.begin(), u.end(), [](int x) { return x != 0; });
    if (nonzero) {
      const double a = std::abs(level[0]);
      if (a <= best_float + slack) {
        // Leading nonzero entry positive: each +-u pair is compared once.
        const auto lead = std::find_if(u.begin(), u.end(), [](int x) { return x != 0; });
        if (*lead > 0) {
          split_product(primes, u, num, den);
          // num/den < best_num/best_den  <=>  num * best_den < best_num * den
          if (best_u.empty() || num * best_den < best_num * den) {
            best_num = num;
            best_den = den;
            best_u = u;
            best_float = std::min(best_float, a);
          }
        }
      }
    }
    std::size_t j = 0;
    while (j < n && u[j] == M) {
      u[j] = -M;
      ++j;
    }
    if (j == n) break;
    ++u[j];
    for (std::size_t k = j + 1; k-- > 0;) level[k] = level[k + 1] + u[k] * logs[k];
  }

  LinearFormMin out;
  const cpp_int diff = best_num - best_den;
  const double ratio = diff.convert_to<double>() / best_den.convert_to<double>();
  out.lambda = std::log1p(ratio) / kTwoPi;
  out.u = best_u;
  return out;
}

double log_lambda_analytic(const std::vector<std::uint64_t>& primes, int M) {
  check_primes(primes, "lambda_analytic");
  if (M < 1) throw RangeError("lambda_analytic: M must be >= 1");
  double log_p = 0.0;
  for (std::uint64_t p : primes) log_p += std::log(static_cast<double>(p));
  const double y = M * log_p;
  // log(log1p(e^-y)) = -y + log1p(-e^-y / 2 + ...) for large y
  const double log_log1p = y > 30.0 ? -y - 0.5 * std::exp(-y) : std::log(std::log1p(std::exp(-y)));
  return log_log1p - std::log(kTwoPi);
}

double lambda_analytic(const std::vector<std::uint64_t>& primes, int M) {
  return std::exp(log_lambda_analytic(primes, M));
}

double objective(const ChenInstance& inst, double t) {
  const auto& lam = inst.lambdas();
  const auto& beta = inst.betas();
  const auto& delta = inst.deltas();
  const auto lt = static_cast<long double>(t);
  double acc = 0.0;
  for (std::size_t j = 0; j < lam.size(); ++j) {
    const long double x = static_cast<long double>(lam[j]) * lt - beta[j];
    const auto d = static_cast<double>(std::abs(x - std::nearbyint(x)));
    acc += delta[j] * d * d;
  }
  return acc;
}

SearchResult search_t(const ChenInstance& inst, double grid_step, int refine_iters,
                      const SearchOptions& opts) {
  if (!(grid_step > 0.0)) throw RangeError("search_t: grid step must be positive");
  const double max_step = 1.0 / (4.0 * inst.max_lambda());
  if (grid_step > max_step * (1.0 + 1e-12)) {
    throw RangeError("search_t: grid step " + format_double(grid_step) +
                     " exceeds 1/(4 max lambda) = " + format_double(max_step));
  }
  if (refine_iters < 0) throw RangeError("search_t: refine_iters must be >= 0");

  const double T1 = inst.T1();
  const double T2 = inst.T2();
  SearchResult best;
  if (T2 - T1 < grid_step) {
    best.t = T1;
    best.value = objective(inst, T1);
    best.evaluations = 1;
    return best;
  }

  const double span = std::ceil((T2 - T1) / grid_step);
  if (span > static_cast<double>(opts.max_points)) {
    throw BudgetExceeded("search_t grid points", static_cast<std::uint64_t>(span), opts.max_points);
  }
  auto count = static_cast<std::uint64_t>(span);
  while (count > 1 && T1 + grid_step * static_cast<double>(count - 1) >= T2) --count;

  // Each chunk keeps its best local minima as (value, index), merged in order.
  using Cell = std::pair<double, std::uint64_t>;
  const std::size_t keep = std::max<std::size_t>(1, opts.refine_cells);
  const std::size_t chunks = (count + kScanChunk - 1) / kScanChunk;
  std::vector<std::vector<Cell>> chunk_cells(chunks);
  const auto at = [&](std::uint64_t i) { return objective(inst, T1 + grid_step * static_cast<double>(i)); };
  for_each_index(chunks, opts.workers, [&](std::size_t c) {
    const std::uint64_t lo = c * kScanChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(count, lo + kScanChunk);
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<Cell>& cells = chunk_cells[c];
    double prev = lo == 0 ? inf : at(lo - 1);
    double cur = at(lo);
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double next = i + 1 < count ? at(i + 1) : inf;
      if (cur <= prev && cur <= next) {
        const Cell cell{cur, i};
        if (cells.size() < keep) {
          cells.push_back(cell);
          std::push_heap(cells.begin(), cells.end());
        } else if (cell < cells.front()) {
          std::pop_heap(cells.begin(), cells.end());
          cells.back() = cell;
          std::push_heap(cells.begin(), cells.end());
        }
      }
      prev = cur;
      cur = next;
    }
  });
  std::vector<Cell> cells;
  for (const auto& cc : chunk_cells) cells.insert(cells.end(), cc.begin(), cc.end());
  std::sort(cells.begin(), cells.end());
  if (cells.size() > keep) cells.resize(keep);

  best.t = T1 + grid_step * static_cast<double>(cells.front().second);
  best.value = cells.front().first;
  best.evaluations = count;
  auto consider = [&](double t, double v) {
    if (v < best.value || (v == best.value && t < best.t)) {
      best.value = v;
      best.t = t;
    }
  };

  if (refine_iters > 0) {
    const double upper = std::nextafter(T2, -std::numeric_limits<double>::infinity());
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (const Cell& cell : cells) {
      const double center = T1 + grid_step * static_cast<double>(cell.second);
      double a = std::max(T1, center - grid_step);
      double b = std::min(upper, center + grid_step);
      double c = b - inv_phi * (b - a);
      double d = a + inv_phi * (b - a);
      double fc = objective(inst, c);
      double fd = objective(inst, d);
      best.evaluations += 2;
      consider(c, fc);
      consider(d, fd);
      for (int it = 1; it < refine_iters; ++it) {
        if (fc <= fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - inv_phi * (b - a);
          fc = objective(inst, c);
          consider(c, fc);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + inv_phi * (b - a);
          fd = objective(inst, d);
          consider(d, fd);
        }
        ++best.evaluations;
      }
    }
  }
  return best;
}

double cos_floor(double y) noexcept {
  const double d = dist_to_nearest_int(y / kTwoPi);
  return 1.0 - 2.0 * std::numbers::pi * std::numbers::pi * d * d;
}

ChenTrial chen_trial(const std::vector<std::uint64_t>& primes, int M, double window_factor,
                     std::mt19937_64& rng, const SearchOptions& opts) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ChenTrial trial;
  trial.primes = primes;
  trial.M = M;
  std::vector<double> betas(primes.size());
  std::vector<double> deltas(primes.size());
  for (double& b : betas) b = 1.0 - unit(rng);
  for (double& d : deltas) d = 1.0 - unit(rng);
  const double T1 = 1000.0 * unit(rng);

  trial.lambda = lambda_exact(primes, M).lambda;
  const double length = window_factor * std::pow(static_cast<double>(M), static_cast<double>(primes.size())) /
                        (4.0 * std::numbers::pi * trial.lambda);
  const ChenInstance inst =
      ChenInstance::from_primes(primes, std::move(betas), std::move(deltas), M, T1, T1 + length);
  trial.bound = chen_bound(inst, trial.lambda);
  const SearchResult r = search_t(inst, 1.0 / (4.0 * inst.max_lambda()), 40, opts);
  trial.value = r.value;
  trial.t = r.t;
  trial.pass = r.value <= trial.bound + 1e-9;
  return trial;
}

}  // namespace extrema
