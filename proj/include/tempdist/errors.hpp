// Copyright 2026 The tempdist Authors
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

#ifndef TEMPDIST_ERRORS_HPP_
#define TEMPDIST_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tempdist {

/// Invalid argument or inconsistent configuration.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force guard was exceeded. Carries the offending size and the limit.
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(const std::string& what_arg, std::size_t size, std::size_t limit)
      : std::length_error(what_arg + " (size " + std::to_string(size) + " exceeds limit " +
                          std::to_string(limit) + ")"),
        size_(size),
        limit_(limit) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

/// Malformed scenario text or config document. `position` is a 0-based offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what_arg, std::size_t position)
      : std::runtime_error(what_arg + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tempdist

#endif  // TEMPDIST_ERRORS_HPP_
