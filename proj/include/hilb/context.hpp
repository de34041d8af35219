#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilb {

using VarId = unsigned;

struct context_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable declaration of a variable sequence. Every Poly/Frac carries a
// pointer to its context; operations mixing contexts throw context_error.
// The declaration order fixes the canonical (graded-lex) storage order.
class ContextData {
  public:
    explicit ContextData(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(VarId v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    VarId var(const std::string& name) const;
    bool has(const std::string& name) const { return index_.count(name) != 0; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, VarId> index_;
};

using Context = std::shared_ptr<const ContextData>;

Context make_context(std::vector<std::string> names);

inline bool same_context(const Context& a, const Context& b) {
    return a == b || (a && b && a->names() == b->names());
}

inline void require_same_context(const Context& a, const Context& b) {
    if (!same_context(a, b)) throw context_error("operands live in different variable contexts");
}

} // namespace hilb
