#include "weylconn/vartable.hpp"

#include <algorithm>
#include <set>

namespace weylconn {

VarTablePtr VarTable::make(std::vector<std::string> baseVars, std::vector<std::string> params) {
    std::vector<std::string> names = std::move(baseVars);
    const std::size_t baseCount = names.size();
    names.insert(names.end(), params.begin(), params.end());

    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw InputError("empty variable name");
        if (!seen.insert(n).second) throw InputError("duplicate variable name: '" + n + "'");
    }
    return VarTablePtr(new VarTable(std::move(names), baseCount));
}

std::optional<std::size_t> VarTable::indexOf(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

bool sameTable(const VarTablePtr& a, const VarTablePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

VarTablePtr mergeTables(const VarTablePtr& a, const VarTablePtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || *a == *b) return a;
    throw ContextMismatchError("mismatched variable tables");
}

} // namespace weylconn
