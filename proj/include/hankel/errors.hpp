#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Shape mismatch (non-square input, incompatible product, bad entry count).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Elimination found no usable pivot. `pivot()` is the column where it stopped.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(std::size_t pivot)
        : std::runtime_error("singular matrix: no pivot in column " + std::to_string(pivot)),
          pivot_(pivot) {}

    std::size_t pivot() const noexcept { return pivot_; }

private:
    std::size_t pivot_;
};

/// Operation is not defined for the requested moment family.
class UnsupportedFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameter outside the admissible domain (s a pole, t = 0, index out of range).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace hankel
