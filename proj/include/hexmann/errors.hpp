/*
   Copyright 2026 The hexmann authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace hexmann {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositeModulus : Error {
    using Error::Error;
};
struct EvenModulus : Error {
    using Error::Error;
};
struct BadOrder : Error {
    using Error::Error;
};
struct BadResidueClass : Error {
    using Error::Error;
};
struct OutsideDomain : Error {
    using Error::Error;
};
struct NoAdmissibleSet : Error {
    using Error::Error;
};
struct InadmissibleSet : Error {
    using Error::Error;
};
struct AsymmetricSet : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct SpaceTooLarge : Error {
    using Error::Error;
};
struct RadiusTooLarge : Error {
    using Error::Error;
};
struct CharacteristicTooSmall : Error {
    using Error::Error;
};
struct ZeroFirstSyndrome : Error {
    using Error::Error;
};

/// Signals that the quotient in the S1/S4/S7 product identity is 0/0.
/// Callers recover: the product then equals the square of the first syndrome.
struct DegenerateDenominator : Error {
    using Error::Error;
};
struct KindMismatch : Error {
    using Error::Error;
};

}  // namespace hexmann
