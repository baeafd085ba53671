/*
   Copyright 2026 The gd2 authors

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

#ifndef GD2_ERRORS_HPP
#define GD2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gd2 {

/// Base class for all library errors. `code()` mirrors the CLI exit codes.
class error : public std::runtime_error {
public:
    error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

/// Malformed input (unparseable polynomial, rational, flag value). Exit code 2.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(2, what) {}
};

/// Precondition violation in a mathematical operation. Exit code 3.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(3, what) {}
};

/// A construction is provably impossible; the witness is a nontrivial
/// quaternion symbol, rendered into the message by the thrower. Exit code 4.
class obstructed_error : public error {
public:
    explicit obstructed_error(const std::string& what) : error(4, what) {}
};

/// A bounded search ran out of budget without deciding. Exit code 5.
class search_bound_error : public error {
public:
    explicit search_bound_error(const std::string& what) : error(5, what) {}
};

} // namespace gd2

#endif
