/*
 * Copyright 2026 The kmnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace kmnet
{

/// Input violates a documented precondition or invariant (CLI exit code 1).
class ValidationError : public std::runtime_error
{
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation left the numerically meaningful regime (CLI exit code 2).
class NumericalError : public std::runtime_error
{
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// The stacked constraint system admits no solution (CLI exit code 3).
class InfeasibleError : public std::runtime_error
{
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kmnet
