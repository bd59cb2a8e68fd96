#pragma once

#include <stdexcept>
#include <string>

namespace ribbonfusion {

// Violation of a mathematical precondition (as opposed to malformed input syntax).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ribbonfusion
