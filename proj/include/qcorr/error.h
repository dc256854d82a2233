// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCORR_ERROR_H
#define QCORR_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcorr {

enum class ErrorKind {
    InvalidArgument,
    NonHermitianInput,
    NotPositiveSemidefinite,
    NotPhysical,
    NotXStructured,
    TruncationOverflow,
    StepTooLarge,
    UnknownPreset,
    OracleMismatch,
};

/// Coarse grouping used to map failures onto process exit codes.
enum class ErrorCategory {
    InvalidConfig,     // exit 2
    Physicality,       // exit 3
    Numerical,         // exit 4
};

std::string_view error_kind_name(ErrorKind kind);
ErrorCategory error_category(ErrorKind kind);

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    ErrorCategory category() const noexcept {
        return error_category(kind_);
    }

   private:
    ErrorKind kind_;
};

}  // namespace qcorr

#endif
