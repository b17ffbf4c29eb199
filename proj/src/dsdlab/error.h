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

#ifndef DSDLAB_ERROR_H
#define DSDLAB_ERROR_H

#include <stdexcept>
#include <string>

namespace dsdlab {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    FieldMismatch,
    CeilingExceeded,
    ZeroBlock,
    NotSpanning,
    NotADsd,
    Incompatible,
    NotInLogic,
    NotAnAtom,
    BasisMismatch,
    SingularMap,
    EmptyState,
    EmptyBlock,
    ZeroProbability,
    ShapeMismatch,
    Parse,
};

const char *error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// C API can map it onto a stable status value.
class DsdError : public std::runtime_error {
   public:
    DsdError(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {
    }
    ErrorCode code() const {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace dsdlab

#endif
