// cfsim: compute-and-forward simulator for the cell-free massive MIMO uplink
// Copyright (C) 2026 cfsim contributors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cfsim {

// Invalid configuration or operation input. Messages name the offending field.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Filesystem failures while reading configs or writing outputs.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive oracle would exceed its enumeration cap.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cfsim
