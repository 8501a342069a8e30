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

#include <cstdio>
#include <numbers>

#include "spinlock/discord.hpp"
#include "spinlock/entangle.hpp"
#include "spinlock/pulsekit.hpp"

int main() {
    using namespace spinlock;
    const double beta = 2.0, tbar = 1.0;

    std::printf("scheme A, a = 3, tbar = %.1f, beta = %.1f\n", tbar, beta);
    std::printf("%4s %14s %14s %14s %14s\n", "M", "M_x", "C (closed)", "C (oracle)", "D");
    for (long long m = 1; m <= 5; ++m) {
        const auto rho = propagate(PulseProgram::scheme_a(3.0, tbar, m), thermal_state(beta));
        std::printf("%4lld %14.10f %14.10f %14.10f %14.10f\n", m, magnetization_x(rho),
                    concurrence_scheme_a(3.0, static_cast<double>(m), tbar, beta), concurrence_oracle(rho),
                    discord_exact_x(3.0, static_cast<double>(m), tbar, beta));
    }

    std::printf("\nscheme B, phi = pi/4, tbar = 0.1, beta = 3\n");
    for (long long m = 1; m <= 10; ++m)
        std::printf("  M = %2lld  C = %.6g\n", m, concurrence_scheme_b_quarter(static_cast<double>(m), 0.1, 3.0));

    std::printf("\ncritical beta %.6f, T_cr at 500 MHz %.2f mK\n", critical_beta(),
                1e3 * critical_temperature(2 * std::numbers::pi * 500e6));
    return 0;
}
