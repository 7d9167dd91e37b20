/*
   Copyright 2026 The expm Authors

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

#ifndef EXPM_ERROR_HPP
#define EXPM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace expm {

/// Malformed or inconsistent user input (files, dimensions, flags).
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Failure of a numerical step: non-convergence, overflow, broken realification.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace expm

#endif
