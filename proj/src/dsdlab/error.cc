// Copyright 2026 The dsdlab Authors
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

#include "dsdlab/error.h"

namespace dsdlab {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::FieldMismatch:
            return "FieldMismatch";
        case ErrorCode::CeilingExceeded:
            return "CeilingExceeded";
        case ErrorCode::ZeroBlock:
            return "ZeroBlock";
        case ErrorCode::NotSpanning:
            return "NotSpanning";
        case ErrorCode::NotADsd:
            return "NotADsd";
        case ErrorCode::Incompatible:
            return "Incompatible";
        case ErrorCode::NotInLogic:
            return "NotInLogic";
        case ErrorCode::NotAnAtom:
            return "NotAnAtom";
        case ErrorCode::BasisMismatch:
            return "BasisMismatch";
        case ErrorCode::SingularMap:
            return "SingularMap";
        case ErrorCode::EmptyState:
            return "EmptyState";
        case ErrorCode::EmptyBlock:
            return "EmptyBlock";
        case ErrorCode::ZeroProbability:
            return "ZeroProbability";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::Parse:
            return "Parse";
    }
    return "Unknown";
}

}  // namespace dsdlab
