#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dialg {

enum class SigFlavor { plain, di, pre };

// A family of binary operation symbols. Di and pre signatures hold the doubled
// family: ops come in ordered pairs, ops[2t] / ops[2t+1] being the pair derived
// from base operation t. For di that is (|- , -|) in the usual notation, for
// pre it is (succ, prec). Derived names use the suffixes ">", "<" (di) and
// "}", "{" (pre) so that files written by the translation commands stay
// parseable.
class Signature {
public:
    Signature() = default;

    static Signature plain(std::vector<std::string> ops);
    static Signature di(std::vector<std::string> ops);   // already-doubled names
    static Signature pre(std::vector<std::string> ops);
    static Signature di_of(const Signature& base);
    static Signature pre_of(const Signature& base);

    SigFlavor flavor() const { return flavor_; }
    bool is_plain() const { return flavor_ == SigFlavor::plain; }
    int op_count() const { return static_cast<int>(ops_.size()); }
    // number of base operations (pairs count once)
    int base_count() const { return is_plain() ? op_count() : op_count() / 2; }

    const std::string& op_name(int i) const { return ops_.at(i); }
    const std::vector<std::string>& ops() const { return ops_; }
    int index_of(const std::string& name) const;

    // pair access for di/pre signatures
    int left_of_pair(int base) const { return 2 * base; }      // |-  /  succ
    int right_of_pair(int base) const { return 2 * base + 1; } // -|  /  prec

    bool operator==(const Signature& o) const { return flavor_ == o.flavor_ && ops_ == o.ops_; }
    bool operator!=(const Signature& o) const { return !(*this == o); }

private:
    Signature(SigFlavor f, std::vector<std::string> ops);

    SigFlavor flavor_ = SigFlavor::plain;
    std::vector<std::string> ops_;
};

} // namespace dialg
