#include "swv/well_log.hpp"

#include <stdexcept>

#include "swv/util.hpp"

namespace swv {

std::string canonical_mnemonic(const std::string& name) {
    std::string up = to_upper(trim(name));
    if (up == "NPFI") return "NPHI";
    if (up == "DEPT") return "DEPTH";
    return up;
}

const Curve* WellLog::find_curve(const std::string& mnemonic) const {
    const std::string want = canonical_mnemonic(mnemonic);
    for (const Curve& c : curves) {
        if (canonical_mnemonic(c.mnemonic) == want) return &c;
    }
    return nullptr;
}

Curve* WellLog::find_curve(const std::string& mnemonic) {
    return const_cast<Curve*>(static_cast<const WellLog*>(this)->find_curve(mnemonic));
}

void validate_well_log(const WellLog& log) {
    for (std::size_t i = 1; i < log.depth.size(); ++i) {
        if (!(log.depth[i] > log.depth[i - 1])) {
            throw std::invalid_argument("depth not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
    for (const Curve& c : log.curves) {
        if (c.mnemonic.empty()) throw std::invalid_argument("curve with empty mnemonic");
        if (c.samples.size() != log.depth.size()) {
            throw std::invalid_argument("curve " + c.mnemonic + " has " +
                                        std::to_string(c.samples.size()) + " samples, depth has " +
                                        std::to_string(log.depth.size()));
        }
        std::size_t dup = 0;
        for (const Curve& other : log.curves) {
            if (canonical_mnemonic(other.mnemonic) == canonical_mnemonic(c.mnemonic)) ++dup;
        }
        if (dup > 1) throw std::invalid_argument("duplicate curve mnemonic " + c.mnemonic);
    }
}

}  // namespace swv
