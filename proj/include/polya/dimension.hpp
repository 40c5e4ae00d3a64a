#pragma once

#include <string>

#include "polya/errors.hpp"

namespace polya {

/// Lattice dimension d of Z^d; always at least 1.
class Dimension {
public:
    explicit Dimension(int d) : d_(d)
    {
        if (d < 1)
            throw DomainError("dimension must be >= 1, got " + std::to_string(d));
    }

    int value() const noexcept { return d_; }
    int directions() const noexcept { return 2 * d_; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int d_;
};

} // namespace polya
