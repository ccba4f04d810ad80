#ifndef WPH_WEIGHT_SYSTEM_HPP
#define WPH_WEIGHT_SYSTEM_HPP

#include <array>
#include <cstddef>

namespace wph {

inline constexpr std::size_t kNumVars = 4;

/// Weights (w1..w4) and a target degree d for hypersurfaces in P(w1,..,w4).
/// Weights must be positive with gcd 1; non-reduced systems are rejected
/// rather than normalized.
class WeightSystem {
public:
    WeightSystem(const std::array<int, kNumVars>& weights, int degree);

    const std::array<int, kNumVars>& weights() const { return w_; }
    int weight(std::size_t i) const { return w_[i]; }
    int degree() const { return d_; }
    int sigma() const { return sigma_; }

    bool operator==(const WeightSystem& other) const {
        return w_ == other.w_ && d_ == other.d_;
    }
    bool operator!=(const WeightSystem& other) const { return !(*this == other); }

private:
    std::array<int, kNumVars> w_;
    int d_;
    int sigma_;
};

}  // namespace wph

#endif
