#include "dialg/signature.hpp"

#include <set>

namespace dialg {

Signature::Signature(SigFlavor f, std::vector<std::string> ops)
    : flavor_(f), ops_(std::move(ops)) {
    if (ops_.empty())
        throw std::invalid_argument("signature needs at least one operation");
    std::set<std::string> seen;
    for (const auto& o : ops_) {
        if (o.empty()) throw std::invalid_argument("empty operation name");
        if (!seen.insert(o).second)
            throw std::invalid_argument("duplicate operation name: " + o);
    }
    if (flavor_ != SigFlavor::plain && ops_.size() % 2 != 0)
        throw std::invalid_argument("di/pre signature needs an even number of operations");
}

Signature Signature::plain(std::vector<std::string> ops) {
    return Signature(SigFlavor::plain, std::move(ops));
}

Signature Signature::di(std::vector<std::string> ops) {
    return Signature(SigFlavor::di, std::move(ops));
}

Signature Signature::pre(std::vector<std::string> ops) {
    return Signature(SigFlavor::pre, std::move(ops));
}

Signature Signature::di_of(const Signature& base) {
    if (!base.is_plain())
        throw std::invalid_argument("di_of expects a plain signature");
    std::vector<std::string> ops;
    for (const auto& b : base.ops()) {
        ops.push_back(b + ">");
        ops.push_back(b + "<");
    }
    return Signature(SigFlavor::di, std::move(ops));
}

Signature Signature::pre_of(const Signature& base) {
    if (!base.is_plain())
        throw std::invalid_argument("pre_of expects a plain signature");
    std::vector<std::string> ops;
    for (const auto& b : base.ops()) {
        ops.push_back(b + "}");
        ops.push_back(b + "{");
    }
    return Signature(SigFlavor::pre, std::move(ops));
}

int Signature::index_of(const std::string& name) const {
    for (size_t i = 0; i < ops_.size(); ++i)
        if (ops_[i] == name) return static_cast<int>(i);
    return -1;
}

} // namespace dialg
