/*
   Copyright 2026 The fockcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOCKCHECK_TESTS_TEST_UTIL_HPP
#define FOCKCHECK_TESTS_TEST_UTIL_HPP

#include "fockcheck/numeric.hpp"

namespace fockcheck::testing {

inline BigComplex big(const char* re, const char* im) { return {BigFloat::parse(re), BigFloat::parse(im)}; }

/// |z - (re + i im)| with the reference parsed at the working precision.
inline long double distance(const BigComplex& z, const char* re, const char* im) {
    return magnitude(z - big(re, im));
}

inline ExactComplex exact(const char* re, const char* im = "0") {
    return {parse_rational(re), parse_rational(im)};
}

}  // namespace fockcheck::testing

#endif  // FOCKCHECK_TESTS_TEST_UTIL_HPP
