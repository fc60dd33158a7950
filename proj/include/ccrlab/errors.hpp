// Copyright 2026 The ccr-lab authors
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

#ifndef CCRLAB_ERRORS_HPP
#define CCRLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccrlab {

/// Base class for all ccr-lab errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

struct NotPSD : Error {
    explicit NotPSD(const std::string& msg) : Error(msg) {}
};

struct TraceNotOne : Error {
    explicit TraceNotOne(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct IncompleteSettings : Error {
    explicit IncompleteSettings(const std::string& msg) : Error(msg) {}
};

struct SingularConfusionMatrix : Error {
    explicit SingularConfusionMatrix(const std::string& msg) : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

struct MalformedDataset : Error {
    explicit MalformedDataset(const std::string& msg) : Error(msg) {}
};

}  // namespace ccrlab

#endif
