#pragma once

#include <stdexcept>
#include <string>

namespace flagbal {

/// Malformed or out-of-contract input. Maps to CLI exit status 2.
class input_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A configured enumeration budget would be exceeded. Maps to CLI exit status 3.
class budget_exceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace flagbal
