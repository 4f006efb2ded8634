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


#ifndef BILIP_CERTIFICATE_HPP_
#define BILIP_CERTIFICATE_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace bilip {

// One exact inequality (or family of them) checked by a construction.
struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Certificates = std::vector<CertificateCheck>;

inline bool AllPass(const Certificates& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CertificateCheck& c) { return c.pass; });
}

}  // namespace bilip

#endif  // BILIP_CERTIFICATE_HPP_
