// Copyright 2026 the momcert authors
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

#include "momcert/rational.hpp"

#include <cctype>

namespace momcert {

Rational parse_rational(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw Error("empty rational literal");
  }
  std::string body = text.substr(begin, end - begin + 1);
  if (!body.empty() && body[0] == '+') body.erase(0, 1);  // gmp rejects '+'

  auto is_integer = [](const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };

  const size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!is_integer(body)) {
      throw Error("malformed rational literal '" + text + "'");
    }
    return Rational(body);
  }
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };
  const std::string num = strip_plus(body.substr(0, slash));
  const std::string den = strip_plus(body.substr(slash + 1));
  if (!is_integer(num) || !is_integer(den)) {
    throw Error("malformed rational literal '" + text + "'");
  }
  Integer den_z(den);
  if (den_z == 0) {
    throw Error("zero denominator in rational literal '" + text + "'");
  }
  Rational q(Integer(num), den_z);
  q.canonicalize();
  return q;
}

}  // namespace momcert
