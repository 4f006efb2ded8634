// Copyright 2026 The bilip Authors
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


#ifndef BILIP_SVG_HPP_
#define BILIP_SVG_HPP_

#include <string>

#include "bilip/json_io.hpp"

namespace bilip::svg {

// Renders a report (or a bare interval-set file) as a standalone SVG 1.1
// document. Coordinates are rounded to 1e-6 for display; nothing here
// feeds back into exact computation. Throws kParseError for documents it
// does not recognize.
std::string Render(const io::Json& doc);

}  // namespace bilip::svg

#endif  // BILIP_SVG_HPP_
