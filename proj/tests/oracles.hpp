#pragma once

// Independent reference implementations the tests check the library
// against. Deliberately written with different algorithms / accumulation
// strategies than the code under test wherever the contract allows it.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "inquest/design.hpp"
#include "inquest/inference.hpp"
#include "inquest/inquiry.hpp"
#include "inquest/rng.hpp"
#include "inquest/world.hpp"

namespace oracle {

// Entropy in bits with long-double terms and Kahan summation.
long double entropy_bits(const std::vector<double>& p);

// Every set partition of {0, ..., n-1} (Bell(n) of them).
std::vector<inquest::Partition> all_set_partitions(std::size_t n);

// Number of integer partitions of n, counted by explicit recursive
// enumeration (descending part order). Fine up to n ~ 60.
std::uint64_t count_integer_partitions_slow(unsigned n);

// Monte Carlo estimate of the overlap area of circles with radii r1, r2
// whose centers are d apart.
double overlap_area_mc(double d, double r1, double r2, std::size_t samples,
                       std::uint64_t seed);

// Plain ascending-index accumulation of the outcome distribution at one
// location, visiting every state (zero-mass states included).
std::vector<double> outcome_dist_direct(const inquest::GridPosterior& p,
                                        const inquest::SensorModel& sensor,
                                        const inquest::MeasurementLocation& m);

// Same direct enumeration for the flattened joint table of an ordered
// location pair (first location's bin is the major index).
std::vector<double> joint_table_direct(const inquest::GridPosterior& p,
                                       const inquest::SensorModel& sensor,
                                       const inquest::MeasurementLocation& m1,
                                       const inquest::MeasurementLocation& m2);

// Random normalized posterior; roughly zero_fraction of the states get
// exactly zero mass (at least one state always stays positive).
inquest::GridPosterior random_posterior(
    std::shared_ptr<const inquest::StateGrid> grid, inquest::Rng& rng,
    double zero_fraction = 0.0);

}  // namespace oracle
