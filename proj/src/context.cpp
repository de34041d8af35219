#include "hilb/context.hpp"

namespace hilb {

ContextData::ContextData(std::vector<std::string> names) : names_(std::move(names)) {
    for (VarId i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw context_error("empty variable name");
        auto [it, fresh] = index_.emplace(names_[i], i);
        (void)it;
        if (!fresh) throw context_error("duplicate variable name '" + names_[i] + "'");
    }
}

VarId ContextData::var(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw context_error("unknown variable '" + name + "'");
    return it->second;
}

Context make_context(std::vector<std::string> names) {
    return std::make_shared<const ContextData>(std::move(names));
}

} // namespace hilb
