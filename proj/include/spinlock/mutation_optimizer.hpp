// Copyright 2026 The spinlock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Random-mutation minimiser for a scalar function on a closed interval.
//
// A simplified genetic search without crossover: each generation keeps the
// best `elitism` individuals and refills the population with Gaussian
// mutations of parents drawn from the better half. The mutation width decays
// geometrically and candidates leaving the interval are reflected back.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinlock {

struct OptimizerConfig {
    int population = 16;
    int generations = 200;
    double sigma0 = 0.3;
    double decay = 0.85;
    int elitism = 2;
    std::uint64_t seed = 1;

    void validate() const {
        if (population < 2) throw std::invalid_argument("population must be >= 2");
        if (generations < 1) throw std::invalid_argument("generations must be >= 1");
        if (!(sigma0 > 0.0)) throw std::invalid_argument("sigma0 must be positive");
        if (!(decay > 0.0) || decay > 1.0) throw std::invalid_argument("decay must be in (0, 1]");
        if (elitism < 1 || elitism >= population)
            throw std::invalid_argument("elitism must be in [1, population)");
    }
};

struct OptimizerResult {
    double argmin = 0.0;
    double value = 0.0;
    long evaluations = 0;
    bool converged = false;  // elite spread <= spread_tolerance at exit
};

/// Fold x back into [lo, hi] by mirror reflection at the boundaries.
inline double reflect_into(double x, double lo, double hi) {
    const double width = hi - lo;
    if (width <= 0.0) return lo;
    double y = std::fmod(x - lo, 2.0 * width);
    if (y < 0.0) y += 2.0 * width;
    return y <= width ? lo + y : lo + 2.0 * width - y;
}

template <typename Objective>
OptimizerResult minimize_random_mutation(Objective&& f, double lo, double hi,
                                         const OptimizerConfig& cfg,
                                         double spread_tolerance = 1e-6) {
    cfg.validate();
    if (!(hi > lo)) throw std::invalid_argument("empty search interval");

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> uniform(lo, hi);
    std::normal_distribution<double> gauss(0.0, 1.0);

    struct Individual {
        double x;
        double fx;
    };
    const auto n = static_cast<std::size_t>(cfg.population);
    std::vector<Individual> pop(n);
    long evals = 0;
    for (auto& ind : pop) {
        ind.x = uniform(rng);
        ind.fx = f(ind.x);
        ++evals;
    }
    auto by_fitness = [](const Individual& a, const Individual& b) {
        return a.fx < b.fx || (a.fx == b.fx && a.x < b.x);
    };
    std::sort(pop.begin(), pop.end(), by_fitness);

    const auto elite = static_cast<std::size_t>(cfg.elitism);
    const std::size_t parents = std::max<std::size_t>(elite, n / 2);
    std::uniform_int_distribution<std::size_t> pick(0, parents - 1);

    double sigma = cfg.sigma0;
    for (int g = 0; g < cfg.generations; ++g) {
        std::vector<Individual> next(pop.begin(), pop.begin() + static_cast<long>(elite));
        next.reserve(n);
        while (next.size() < n) {
            const Individual& parent = pop[pick(rng)];
            const double x = reflect_into(parent.x + sigma * gauss(rng), lo, hi);
            next.push_back({x, f(x)});
            ++evals;
        }
        std::sort(next.begin(), next.end(), by_fitness);
        pop = std::move(next);
        sigma *= cfg.decay;
    }

    double spread = 0.0;
    for (std::size_t i = 1; i < elite; ++i) spread = std::max(spread, std::abs(pop[i].x - pop[0].x));
    return {pop[0].x, pop[0].fx, evals, spread <= spread_tolerance};
}

}  // namespace spinlock
