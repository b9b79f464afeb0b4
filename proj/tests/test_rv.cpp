#include "qrv/rv.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace qrv;
using namespace qrv::testing;

namespace {

const ScalarFunction1 kIdentity1{[](double v) { return v; }, "a"};
const ScalarFunction1 kSquare{[](double v) { return v * v; }, "a^2"};
const ScalarFunction2 kSum{[](double va, double vb) { return va + vb; }, "a + b"};
const ScalarFunction2 kProduct{[](double va, double vb) { return va * vb; }, "a * b"};

DiscreteDistribution spin_one_law() {
  // Uniform law on the spin-1 eigenvalues.
  return DiscreteDistribution::from_points({-1.0, 0.0, 1.0}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
}

double weight_at(const DiscreteDistribution& d, double value, double tol = 1e-9) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (std::abs(d.values()[i] - value) <= tol) total += d.weights()[i];
  }
  return total;
}

}  // namespace

TEST_CASE("pushforward") {
  SUBCASE("identity map leaves the law unchanged") {
    const auto rho = spin_one_law();
    const auto image = pushforward(rho, kIdentity1);
    REQUIRE(image.size() == rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) {
      CHECK(image.values()[i] == doctest::Approx(rho.values()[i]));
      CHECK(std::abs(image.weights()[i] - rho.weights()[i]) <= 1e-15);
    }
  }

  SUBCASE("squaring folds symmetric support points together") {
    const auto image = pushforward(spin_one_law(), kSquare);
    REQUIRE(image.size() == 2);
    CHECK(std::abs(weight_at(image, 0.0) - 1.0 / 3) <= 1e-12);
    CHECK(std::abs(weight_at(image, 1.0) - 2.0 / 3) <= 1e-12);
  }

  SUBCASE("translation shifts the support") {
    const auto rho = DiscreteDistribution::from_points({0.0, 2.0}, {0.25, 0.75});
    const auto image = pushforward(rho, ScalarFunction1{[](double v) { return v - 5.0; }, "a - 5"});
    CHECK(image.values()[0] == doctest::Approx(-5.0));
    CHECK(image.values()[1] == doctest::Approx(-3.0));
    CHECK(std::abs(image.weights()[1] - 0.75) <= 1e-15);
  }

  SUBCASE("mass is conserved on random laws") {
    Rng rng(501);
    for (int round = 0; round < 10; ++round) {
      const auto rho = random_distribution(8, -2.0, 3.0, rng);
      const auto image = pushforward(rho, ScalarFunction1{[](double v) { return std::sin(v); },
                                                          "sin(a)"});
      CHECK(std::abs(image.total_mass() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("independent combination") {
  SUBCASE("point-mass first argument reduces to a pushforward of the second") {
    const auto rho = DiscreteDistribution::point_mass(2.0);
    const auto pi = spin_one_law();
    const auto combined = independent_combine(rho, pi, kProduct);
    const auto pushed = pushforward(pi, ScalarFunction1{[](double v) { return 2.0 * v; }, "2 b"});
    REQUIRE(combined.size() == pushed.size());
    for (std::size_t i = 0; i < combined.size(); ++i) {
      CHECK(combined.values()[i] == doctest::Approx(pushed.values()[i]));
      CHECK(std::abs(combined.weights()[i] - pushed.weights()[i]) <= 1e-15);
    }
  }

  SUBCASE("product of two fair signs") {
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    const auto law = independent_combine(coin, coin, kProduct);
    REQUIRE(law.size() == 2);
    CHECK(std::abs(weight_at(law, -1.0) - 0.5) <= 1e-12);
    CHECK(std::abs(weight_at(law, 1.0) - 0.5) <= 1e-12);
  }

  SUBCASE("sum of two fair signs is a binomial triangle") {
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    const auto law = independent_combine(coin, coin, kSum);
    REQUIRE(law.size() == 3);
    CHECK(std::abs(weight_at(law, -2.0) - 0.25) <= 1e-12);
    CHECK(std::abs(weight_at(law, 0.0) - 0.5) <= 1e-12);
    CHECK(std::abs(weight_at(law, 2.0) - 0.25) <= 1e-12);
  }

  SUBCASE("mass is conserved on random pairs") {
    Rng rng(502);
    for (int round = 0; round < 10; ++round) {
      const auto rho = random_distribution(6, -1.0, 1.0, rng);
      const auto pi = random_distribution(7, 0.0, 2.0, rng);
      const auto law = independent_combine(rho, pi, kSum);
      CHECK(std::abs(law.total_mass() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("dependent combination") {
  SUBCASE("F(a, b) = a ignores the dependence") {
    const auto rho = spin_one_law();
    const auto law = dependent_combine(rho, kSquare,
                                       ScalarFunction2{[](double va, double) { return va; }, "a"});
    REQUIRE(law.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(law.values()[i] == doctest::Approx(rho.values()[i]));
    }
  }

  SUBCASE("spin-1 sum a + a^2 lands on two points") {
    const auto law = dependent_combine(spin_one_law(), kSquare, kSum);
    REQUIRE(law.size() == 2);
    CHECK(std::abs(weight_at(law, 0.0) - 2.0 / 3) <= 1e-12);
    CHECK(std::abs(weight_at(law, 2.0) - 1.0 / 3) <= 1e-12);
  }

  SUBCASE("F(a, b) = b agrees bit-for-bit with the direct pushforward") {
    Rng rng(503);
    const auto rho = random_distribution(9, -3.0, 3.0, rng);
    const auto via_pair = dependent_combine(rho, kSquare,
                                            ScalarFunction2{[](double, double vb) { return vb; },
                                                            "b"});
    const auto direct = pushforward(rho, kSquare);
    REQUIRE(via_pair.size() == direct.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      CHECK(via_pair.values()[i] == direct.values()[i]);
      CHECK(via_pair.weights()[i] == direct.weights()[i]);
    }
  }
}

TEST_CASE("classical moments") {
  SUBCASE("fair coin moments alternate") {
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    CHECK(rv_moment(coin, 0) == doctest::Approx(1.0));
    CHECK(std::abs(rv_moment(coin, 1)) <= 1e-15);
    CHECK(rv_moment(coin, 2) == doctest::Approx(1.0));
    CHECK(std::abs(rv_moment(coin, 3)) <= 1e-15);
  }

  SUBCASE("order outside 0..8 throws") {
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    CHECK_THROWS_AS(rv_moment(coin, 9), std::invalid_argument);
    CHECK_THROWS_AS(rv_moment(coin, -1), std::invalid_argument);
  }

  SUBCASE("independent moments come from the double sum") {
    Rng rng(504);
    for (int round = 0; round < 5; ++round) {
      const auto rho = random_distribution(5, -1.0, 2.0, rng);
      const auto pi = random_distribution(6, -2.0, 1.0, rng);
      const auto law = independent_combine(rho, pi, kSum, 0.0);
      for (int n = 0; n <= 4; ++n) {
        double expected = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) {
          for (std::size_t j = 0; j < pi.size(); ++j) {
            expected += rho.weights()[i] * pi.weights()[j] *
                        std::pow(rho.values()[i] + pi.values()[j], n);
          }
        }
        CHECK(std::abs(rv_moment(law, n) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
      }
    }
  }

  SUBCASE("variance basics") {
    CHECK(std::abs(rv_variance(DiscreteDistribution::point_mass(3.0))) <= 1e-15);
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    CHECK(rv_variance(coin) == doctest::Approx(1.0));
  }

  SUBCASE("variance of an independent sum is additive") {
    Rng rng(505);
    const auto rho = random_distribution(5, -1.0, 1.0, rng);
    const auto pi = random_distribution(4, 2.0, 5.0, rng);
    const auto law = independent_combine(rho, pi, kSum, 0.0);
    const double expected = rv_variance(rho) + rv_variance(pi);
    CHECK(std::abs(rv_variance(law) - expected) <= 1e-9 * std::max(1.0, expected));
  }
}

TEST_CASE("sampling oracle") {
  SUBCASE("point masses sample to a point mass") {
    const auto law = sample_oracle(DiscreteDistribution::point_mass(1.5),
                                   DiscreteDistribution::point_mass(-0.5), kSum, 1000, 42);
    REQUIRE(law.size() == 1);
    CHECK(law.values()[0] == doctest::Approx(1.0));
    CHECK(std::abs(law.weights()[0] - 1.0) <= 1e-15);
  }

  SUBCASE("same seed gives bit-identical output") {
    Rng rng(506);
    const auto rho = random_distribution(4, -1.0, 1.0, rng);
    const auto pi = random_distribution(3, 0.0, 1.0, rng);
    const auto first = sample_oracle(rho, pi, kProduct, 20000, 777);
    const auto second = sample_oracle(rho, pi, kProduct, 20000, 777);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first.values()[i] == second.values()[i]);
      CHECK(first.weights()[i] == second.weights()[i]);
    }
  }

  SUBCASE("different seeds explore different draws") {
    Rng rng(507);
    const auto rho = random_distribution(4, -1.0, 1.0, rng);
    const auto pi = random_distribution(3, 0.0, 1.0, rng);
    const auto first = sample_oracle(rho, pi, kProduct, 20000, 1);
    const auto second = sample_oracle(rho, pi, kProduct, 20000, 2);
    bool any_difference = first.size() != second.size();
    for (std::size_t i = 0; !any_difference && i < first.size(); ++i) {
      any_difference = first.weights()[i] != second.weights()[i];
    }
    CHECK(any_difference);
  }

  SUBCASE("empirical law converges at the statistical rate") {
    Rng rng(508);
    const auto rho = random_distribution(5, -1.0, 1.0, rng);
    const auto pi = random_distribution(4, -1.0, 1.0, rng);
    const auto exact = independent_combine(rho, pi, kSum);
    const double support = static_cast<double>(exact.size());
    for (std::size_t n : {std::size_t{10000}, std::size_t{1000000}}) {
      const auto sampled = sample_oracle(rho, pi, kSum, n, 2024);
      const double tv = total_variation(sampled, exact);
      CHECK(tv <= 5.0 * std::sqrt(support / static_cast<double>(n)));
    }
  }

  SUBCASE("a million two-point draws get within one percent") {
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    const auto sampled = sample_oracle(coin, coin, kProduct, 1000000, 99);
    const auto exact = independent_combine(coin, coin, kProduct);
    CHECK(total_variation(sampled, exact) <= 0.01);
  }

  SUBCASE("zero samples throws") {
    const auto coin = DiscreteDistribution::from_points({-1.0, 1.0}, {0.5, 0.5});
    CHECK_THROWS_AS(sample_oracle(coin, coin, kProduct, 0, 5), std::invalid_argument);
  }
}
