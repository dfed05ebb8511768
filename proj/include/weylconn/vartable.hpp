#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylconn/errors.hpp"

namespace weylconn {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered list of variable names: base variables first, then parameters.
/// The order is fixed for the lifetime of a computation; monomial comparison
/// and every canonical form depend on it.
class VarTable {
public:
    static VarTablePtr make(std::vector<std::string> baseVars, std::vector<std::string> params = {});

    std::size_t size() const { return names_.size(); }
    std::size_t baseCount() const { return baseCount_; }
    std::size_t paramCount() const { return names_.size() - baseCount_; }

    const std::string& name(std::size_t i) const { return names_.at(i); }
    bool isParam(std::size_t i) const { return i >= baseCount_; }

    std::optional<std::size_t> indexOf(std::string_view name) const;

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.baseCount_ == b.baseCount_ && a.names_ == b.names_;
    }
    friend bool operator!=(const VarTable& a, const VarTable& b) { return !(a == b); }

private:
    VarTable(std::vector<std::string> names, std::size_t baseCount)
        : names_(std::move(names)), baseCount_(baseCount) {}

    std::vector<std::string> names_;
    std::size_t baseCount_;
};

/// True when the two pointers denote the same table (by identity or value).
bool sameTable(const VarTablePtr& a, const VarTablePtr& b);

/// Reconciles the tables of two operands: a null table (contextless zero)
/// defers to the other side; distinct tables throw ContextMismatchError.
VarTablePtr mergeTables(const VarTablePtr& a, const VarTablePtr& b);

} // namespace weylconn
