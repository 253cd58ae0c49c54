#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmvf {

/// Dense index of a cell within one complex. Stable for the lifetime of the complex.
using CellId = std::int32_t;

constexpr CellId kNoCell = -1;

/// Coefficient field for incidence numbers and homology.
enum class Coeff { Mod2, Rational };

inline std::string to_string(Coeff c) { return c == Coeff::Mod2 ? "mod2" : "rational"; }

/// Thrown when an input fails a structural validation; carries the itemized report.
class validation_error : public std::runtime_error {
public:
    validation_error(std::string what, std::vector<std::string> items)
        : std::runtime_error(std::move(what)), items_(std::move(items)) {}

    const std::vector<std::string>& items() const { return items_; }

private:
    std::vector<std::string> items_;
};

} // namespace cmvf
