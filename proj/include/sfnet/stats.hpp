#pragma once

#include <cstddef>
#include <span>

namespace sfnet::stats {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double r_squared = 0.0;
    std::size_t n = 0;
};

/// Ordinary least squares y = intercept + slope * x. Requires x.size() == y.size() >= 2.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stddev(std::span<const double> xs);

struct TTest {
    double t = 0.0;
    double p_value = 1.0;  ///< two-sided
    double mean_difference = 0.0;  ///< mean(a) - mean(b)
};

/// Welch's unequal-variance two-sample t test. When both samples have zero
/// variance the p-value is 0 if the means differ and 1 otherwise.
TTest welch_t_test(std::span<const double> a, std::span<const double> b);

/// Upper-tail probability of a chi-squared statistic.
double chi_squared_p_value(double statistic, double degrees_of_freedom);

}  // namespace sfnet::stats
