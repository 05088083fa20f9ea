#pragma once

#include <stdexcept>

namespace happyset {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace happyset
