/*
 * Copyright 2026 The wvlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
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

namespace wvlab {

/// Base of every error raised by the simulator.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define WVLAB_DEFINE_ERROR(Name)         \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

WVLAB_DEFINE_ERROR(ParseError);
WVLAB_DEFINE_ERROR(ScopeError);
WVLAB_DEFINE_ERROR(CookieFormatError);
WVLAB_DEFINE_ERROR(BodyNotAllowed);
WVLAB_DEFINE_ERROR(DuplicateHeader);
WVLAB_DEFINE_ERROR(HostUnreachable);
WVLAB_DEFINE_ERROR(DuplicateHost);
WVLAB_DEFINE_ERROR(PermissionDenied);
WVLAB_DEFINE_ERROR(NoCurrentPage);
WVLAB_DEFINE_ERROR(ValidationError);

#undef WVLAB_DEFINE_ERROR

}  // namespace wvlab
