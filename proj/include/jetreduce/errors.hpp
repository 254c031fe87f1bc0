/*
 * Copyright 2026 The jetreduce Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef JETREDUCE_ERRORS_HPP
#define JETREDUCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetreduce {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what) : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define JETREDUCE_ERROR(Name)                                                   \
  class Name : public Error {                                                   \
   public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name, what) {}              \
  }

JETREDUCE_ERROR(InputContainsJets);
JETREDUCE_ERROR(DivisionByZeroPolynomial);
JETREDUCE_ERROR(SingularSystem);
JETREDUCE_ERROR(Inconsistent);
JETREDUCE_ERROR(Underdetermined);
JETREDUCE_ERROR(SignatureMismatch);
JETREDUCE_ERROR(UnsupportedShape);
JETREDUCE_ERROR(VerificationFailed);
JETREDUCE_ERROR(SingularJetMap);
JETREDUCE_ERROR(IndexOutOfRange);
JETREDUCE_ERROR(UndeclaredSymbol);
JETREDUCE_ERROR(SessionError);

#undef JETREDUCE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error("SyntaxError", what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

}  // namespace jetreduce

#endif  // JETREDUCE_ERRORS_HPP
