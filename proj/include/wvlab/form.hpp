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

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wvlab {

using FormFields = std::vector<std::pair<std::string, std::string>>;

/// "k=v&k=v", percent-encoding only '&', '=' and '%'.
std::string form_encode(const FormFields& fields);

/// Inverse of form_encode. Unknown escapes pass through unchanged.
FormFields form_decode(std::string_view body);

std::optional<std::string> form_value(const FormFields& fields, std::string_view key);

}  // namespace wvlab
