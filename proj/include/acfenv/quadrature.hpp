// SPDX-License-Identifier: Apache-2.0
//
// acfenv: environment-dependent autocorrelation of mobile radio signals
// Copyright (C) 2026 The acfenv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef ACFENV_QUADRATURE_HPP
#define ACFENV_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>

namespace acfenv
{

// Adaptive quadrature did not meet its tolerance within the subdivision limit.
class QuadratureError : public std::runtime_error
{
public:
    QuadratureError(const std::string &what, double estimate, double error_estimate)
        : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double estimate_;
    double error_estimate_;
};

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0;    // estimated
    std::size_t intervals = 0; // panels in the final partition
};

struct QuadratureOptions
{
    double abs_tol = 1e-9;
    std::size_t max_intervals = 200;
};

// Globally adaptive 10-point Gauss / 21-point Kronrod integration of f over
// [a, b]. The panel with the largest error estimate (|K21 - G10|) is bisected
// until the summed estimate is <= abs_tol. Throws QuadratureError when
// max_intervals is reached first.
QuadratureResult integrate(const std::function<double(double)> &f, double a, double b,
                           const QuadratureOptions &opts = {});

// Integral of f over [-half_width, half_width]. With `even` set, f must
// satisfy f(-x) == f(x); only [0, half_width] is integrated (to abs_tol / 2)
// and the result doubled.
QuadratureResult integrate_even_interval(const std::function<double(double)> &f, double half_width, bool even,
                                         const QuadratureOptions &opts = {});

} // namespace acfenv

#endif
