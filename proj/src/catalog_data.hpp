#pragma once

#include <cstddef>

// Internal operator data tables. Expression strings use the operator
// expression language and are parsed once, on first use.
namespace ttw::detail {

struct CoeffEntry {
    unsigned dt;
    unsigned du;
    const char* expr;  // polynomial coefficient in t, u, a, b, w
};

struct GenTermEntry {
    unsigned n;  // H exponent
    unsigned m;  // I1 exponent
    unsigned p;  // I2 exponent
    unsigned q;  // I12 exponent
    const char* coeff;  // polynomial in a, b, w
};

extern const char* const kI12ReferenceK1;
extern const char* const kI2ReferenceK2;
extern const char* const kI12ReferenceK2;

extern const CoeffEntry kI2TableK3[];
extern const std::size_t kI2TableK3Size;
extern const CoeffEntry kI12TableK3[];
extern const std::size_t kI12TableK3Size;
extern const CoeffEntry kI2TableK4[];
extern const std::size_t kI2TableK4Size;
extern const CoeffEntry kI12TableK4[];
extern const std::size_t kI12TableK4Size;

extern const GenTermEntry kClosureK1DoubleI1[];
extern const std::size_t kClosureK1DoubleI1Size;
extern const GenTermEntry kClosureK1DoubleI2[];
extern const std::size_t kClosureK1DoubleI2Size;
extern const GenTermEntry kSyzygyK1[];
extern const std::size_t kSyzygyK1Size;
extern const GenTermEntry kFreeDoubleI1K1[];
extern const std::size_t kFreeDoubleI1K1Size;
extern const GenTermEntry kFreeDoubleI2K1[];
extern const std::size_t kFreeDoubleI2K1Size;
extern const GenTermEntry kFreeSyzygyK1[];
extern const std::size_t kFreeSyzygyK1Size;
extern const GenTermEntry kClosureK2DoubleI1[];
extern const std::size_t kClosureK2DoubleI1Size;
extern const GenTermEntry kClosureK2DoubleI2[];
extern const std::size_t kClosureK2DoubleI2Size;
extern const GenTermEntry kSyzygyK2[];
extern const std::size_t kSyzygyK2Size;
extern const GenTermEntry kClosureK3DoubleI1[];
extern const std::size_t kClosureK3DoubleI1Size;
extern const GenTermEntry kClosureK3DoubleI2[];
extern const std::size_t kClosureK3DoubleI2Size;
extern const GenTermEntry kSyzygyK3[];
extern const std::size_t kSyzygyK3Size;
extern const GenTermEntry kSyzygyOmega0K3[];
extern const std::size_t kSyzygyOmega0K3Size;
extern const GenTermEntry kSyzygyOmega0K4[];
extern const std::size_t kSyzygyOmega0K4Size;
extern const GenTermEntry kClosureK4DoubleI1[];
extern const std::size_t kClosureK4DoubleI1Size;
extern const GenTermEntry kClosureK4DoubleI2[];
extern const std::size_t kClosureK4DoubleI2Size;

}  // namespace ttw::detail
