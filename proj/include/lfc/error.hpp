#pragma once

#include <stdexcept>
#include <string>

namespace lfc {

/// Invalid configuration, prior, partition or other user-supplied setting.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation could not produce a usable result (failed simulations,
/// singular systems that cannot be repaired, engine failures).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lfc
