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

#include "qcorr/error.h"

namespace qcorr {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorKind::NotPositiveSemidefinite:
            return "NotPositiveSemidefinite";
        case ErrorKind::NotPhysical:
            return "NotPhysical";
        case ErrorKind::NotXStructured:
            return "NotXStructured";
        case ErrorKind::TruncationOverflow:
            return "TruncationOverflow";
        case ErrorKind::StepTooLarge:
            return "StepTooLarge";
        case ErrorKind::UnknownPreset:
            return "UnknownPreset";
        case ErrorKind::OracleMismatch:
            return "OracleMismatch";
    }
    return "Unknown";
}

ErrorCategory error_category(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::UnknownPreset:
            return ErrorCategory::InvalidConfig;
        case ErrorKind::NonHermitianInput:
        case ErrorKind::NotPositiveSemidefinite:
        case ErrorKind::NotPhysical:
        case ErrorKind::NotXStructured:
            return ErrorCategory::Physicality;
        case ErrorKind::TruncationOverflow:
        case ErrorKind::StepTooLarge:
        case ErrorKind::OracleMismatch:
            return ErrorCategory::Numerical;
    }
    return ErrorCategory::Numerical;
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

}  // namespace qcorr
