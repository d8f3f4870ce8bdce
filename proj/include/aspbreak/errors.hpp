#pragma once

#include <stdexcept>

namespace aspbreak {

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace aspbreak
