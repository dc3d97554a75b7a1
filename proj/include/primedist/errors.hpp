#pragma once

#include <stdexcept>
#include <string>

namespace primedist {

/// A bounded computation ran out of its configured budget before reaching
/// an answer. Never means "does not exist".
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor produced a labeling that failed its own verification.
class ConstructionFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace primedist
