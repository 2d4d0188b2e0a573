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

#ifndef ACFENV_BESSEL_HPP
#define ACFENV_BESSEL_HPP

namespace acfenv
{

// Zero-order Bessel function of the first kind. Power series (accumulated in
// extended precision) for |x| < 12, Hankel asymptotic expansion beyond.
// Absolute error below 1e-11 on the whole real line.
double bessel_j0(double x) noexcept;

} // namespace acfenv

#endif
