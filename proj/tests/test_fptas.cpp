#include <doctest.h>

#include <random>
#include <set>

#include "dmkp/fptas.hpp"
#include "dmkp/greedy.hpp"
#include "dmkp/linalg.hpp"
#include "dmkp/oracle.hpp"

using namespace dmkp;

namespace {

KnapsackInstance make(int m, int n, Mat a, std::vector<long long> b, std::vector<long long> c,
                      std::vector<long long> u) {
  KnapsackInstance k;
  k.m = m;
  k.n = n;
  k.A = std::move(a);
  k.b = std::move(b);
  k.c = std::move(c);
  k.u = std::move(u);
  return k;
}

KnapsackInstance random_knapsack(std::mt19937_64& rng) {
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  const int m = 1 + static_cast<int>(draw(0, 2));
  const int n = 1 + static_cast<int>(draw(0, 7));
  Mat a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = draw(0, 5);
  std::vector<long long> b(m), c(n), u(n);
  for (int i = 0; i < m; ++i) b[i] = draw(0, 12);
  for (int j = 0; j < n; ++j) {
    c[j] = draw(0, 5);
    u[j] = draw(0, 3);
  }
  return make(m, n, std::move(a), std::move(b), std::move(c), std::move(u));
}

// Reference for dp_by_costs: enumerate the box directly.
std::set<std::pair<Int, std::vector<long long>>> dp_reference(const Mat& cols,
                                                              const std::vector<long long>& u,
                                                              const std::vector<long long>& b,
                                                              const std::vector<Int>& w,
                                                              const Int& ceiling,
                                                              long long gamma_floor) {
  std::set<std::pair<Int, std::vector<long long>>> out;
  const int n = cols.cols();
  const int m = cols.rows();
  std::vector<long long> x(n, 0);
  while (true) {
    long long l1 = 0;
    for (long long v : x) l1 += v;
    if (l1 <= gamma_floor) {
      Int c0 = 0;
      for (int j = 0; j < n; ++j) c0 += make_int(x[j]) * w[j];
      std::vector<long long> y(m, 0);
      bool fits = true;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) y[i] += cols.at(i, j) * x[j];
        if (y[i] > b[i]) fits = false;
      }
      if (fits && c0 <= ceiling) out.emplace(c0, y);
    }
    int j = n - 1;
    while (j >= 0) {
      if (x[j] < u[j]) { ++x[j]; break; }
      x[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("scaled cost floors") {
  CHECK(scaled_costs({10}, Rat(3), {0}) == std::vector<Int>{3});
  CHECK(scaled_costs({9}, Rat(3), {0}) == std::vector<Int>{3});
  CHECK(scaled_costs({7}, Rat(7, 2), {0}) == std::vector<Int>{2});
  CHECK_THROWS_AS(scaled_costs({1}, Rat(0), {0}), std::invalid_argument);
}

TEST_CASE("dp_by_costs base case and single item") {
  const CostLevelTable empty = dp_by_costs(Mat(2, 0), {}, {4, 4}, {}, Int(5), 3);
  REQUIRE(empty.levels.size() == 1);
  REQUIRE(empty.levels[0].size() == 1);
  CHECK(empty.levels[0].at(Int(0)).size() == 1);
  CHECK(empty.levels[0].at(Int(0)).count({0, 0}) == 1);

  const Mat one_col{{1}, {1}};
  const CostLevelTable t = dp_by_costs(one_col, {2}, {2, 2}, {Int(1)}, Int(2), 3);
  REQUIRE(t.levels.size() == 2);
  CHECK(t.levels[1].at(Int(0)).count({0, 0}) == 1);
  CHECK(t.levels[1].at(Int(1)).count({1, 1}) == 1);
  CHECK(t.levels[1].at(Int(2)).count({2, 2}) == 1);
  CHECK(t.levels[1].at(Int(0)).size() == 1);
  CHECK(t.levels[1].at(Int(1)).size() == 1);
  CHECK(t.levels[1].at(Int(2)).size() == 1);
}

TEST_CASE("dp_by_costs equals direct enumeration on random heavy blocks") {
  std::mt19937_64 rng(43);
  auto draw = [&](long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  for (int round = 0; round < 80; ++round) {
    const int m = 2;
    const int kH = 1 + static_cast<int>(draw(0, 2));
    Mat cols(m, kH);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < kH; ++j) cols.at(i, j) = draw(0, 3);
    std::vector<long long> u(kH), b = {draw(0, 8), draw(0, 8)};
    std::vector<Int> w(kH);
    for (int j = 0; j < kH; ++j) {
      u[j] = draw(0, 3);
      w[j] = make_int(draw(0, 4));
    }
    const long long gamma_floor = draw(0, 5);
    const Int ceiling = make_int(draw(0, 12));

    const CostLevelTable t = dp_by_costs(cols, u, b, w, ceiling, gamma_floor);
    std::set<std::pair<Int, std::vector<long long>>> got;
    for (const auto& [c0, cell] : t.levels[kH])
      for (const auto& [y, node] : cell) got.emplace(c0, y);
    CHECK(got == dp_reference(cols, u, b, w, ceiling, gamma_floor));

    // Witnesses reconstruct exactly: cost, image and budget all match.
    for (const auto& [c0, cell] : t.levels[kH]) {
      for (const auto& [y, node] : cell) {
        const auto x = t.reconstruct(kH, c0, y, cols, w);
        Int c0_check = 0;
        long long l1 = 0;
        for (int j = 0; j < kH; ++j) {
          c0_check += make_int(x[j]) * w[j];
          l1 += x[j];
          CHECK(x[j] <= u[j]);
        }
        CHECK(c0_check == c0);
        CHECK(l1 <= gamma_floor);
        std::vector<Int> ax = cols.mul_i64(x);
        for (int i = 0; i < m; ++i) CHECK(ax[i] == make_int(y[i]));
      }
    }
  }
}

TEST_CASE("fptas short-circuits when the greedy value is zero") {
  const auto k = make(1, 1, Mat{{1}}, {0}, {5}, {1});
  const auto rep = fptas_solve(k, Rat(1, 2));
  CHECK(rep.value == 0);
  CHECK(rep.witness == std::vector<long long>{0});
}

TEST_CASE("fptas on the two-item fractional example") {
  const auto k = make(1, 2, Mat{{2, 3}}, {4}, {2, 3}, {1, 1});
  const auto rep = fptas_solve(k, Rat(1, 2));
  const auto opt = brute_force_knapsack(k);
  CHECK(opt.value == 3);
  CHECK(rep.value >= 2);  // ceil((1 - eps) * 3)
  CHECK(rep.value <= opt.value);
  CHECK(check_report(k, rep).empty());
}

TEST_CASE("fptas guarantee, bounds and determinism on random instances") {
  std::mt19937_64 rng(47);
  const std::vector<Rat> epsilons = {Rat(1, 2), Rat(1, 4), Rat(1, 10)};
  for (int round = 0; round < 70; ++round) {
    const auto k = random_knapsack(rng);
    const auto opt = brute_force_knapsack(k);
    for (const Rat& eps : epsilons) {
      const auto rep = fptas_solve(k, eps);
      CHECK(check_report(k, rep).empty());
      CHECK(rep.value <= opt.value);
      CHECK(Rat(rep.value) >= (1 - eps) * Rat(opt.value));

      const auto pre = preprocess(k);
      const Int cgr = greedy_solve(pre).value;
      if (cgr != 0) {
        const FptasParams prm = make_fptas_params(pre, eps, cgr);
        // scaled costs stay below (m+1)/beta, heavy witnesses below (m+1)/alpha
        CHECK(make_rat(rep.stats.at("dp_max_c0")) <= Rat(k.m + 1) / prm.beta);
        CHECK(make_rat(rep.stats.at("heavy_l1_max")) <= prm.gamma);
        // cell bound from the counting argument (skip the all-zero matrix)
        if (rank(k.A) > 0) {
          const Int cell_bound =
              pow_int(Int(2), k.m) * pow_int(rat_ceil(1 + prm.gamma), k.m) * delta(k.A);
          CHECK(make_int(rep.stats.at("dp_max_cell")) <= cell_bound);
        }
      }

      const auto rep2 = fptas_solve(k, eps);
      CHECK(rep2.value == rep.value);
      CHECK(rep2.witness == rep.witness);
      CHECK(rep2.stats == rep.stats);
    }
  }
}

TEST_CASE("fptas epsilon domain") {
  const auto k = make(1, 1, Mat{{1}}, {1}, {1}, {1});
  CHECK_THROWS_AS(fptas_solve(k, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(fptas_solve(k, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(fptas_solve(k, Rat(3, 2)), std::invalid_argument);
}
