// Copyright 2026 The spinlock Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace spinlock {

// Base for every error raised by the library. Derives from
// std::invalid_argument because each one reports a violated precondition.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotHermitian : public Error {
public:
    explicit NotHermitian(const std::string& what) : Error("not Hermitian: " + what) {}
};

class NotUnitary : public Error {
public:
    explicit NotUnitary(const std::string& what) : Error("not unitary: " + what) {}
};

class InvalidDensityMatrix : public Error {
public:
    explicit InvalidDensityMatrix(const std::string& what)
        : Error("invalid density matrix: " + what) {}
};

class InvalidProgram : public Error {
public:
    explicit InvalidProgram(const std::string& what) : Error("invalid pulse program: " + what) {}
};

class NonPhysicalState : public Error {
public:
    explicit NonPhysicalState(const std::string& what) : Error("non-physical state: " + what) {}
};

class MagnetizationOutOfRange : public Error {
public:
    explicit MagnetizationOutOfRange(const std::string& what)
        : Error("magnetization out of range: " + what) {}
};

class InvalidProjector : public Error {
public:
    explicit InvalidProjector(const std::string& what) : Error("invalid projector: " + what) {}
};

}  // namespace spinlock
