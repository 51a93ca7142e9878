#include "qwalk/state.hpp"

#include <stdexcept>

namespace qwalk {

WalkState WalkState::initial(const InitialState& init) {
    auto [up, um] = initial_spinor(init);
    WalkState s;
    s.t_ = 0;
    s.plus_.assign(1, up);
    s.minus_.assign(1, um);
    return s;
}

WalkState WalkState::from_amplitudes(long long t, std::vector<Complex> plus,
                                     std::vector<Complex> minus) {
    if (t < 0) {
        throw std::invalid_argument("WalkState: negative time index");
    }
    const auto expected = static_cast<std::size_t>(2 * t + 1);
    if (plus.size() != expected || minus.size() != expected) {
        throw std::invalid_argument("WalkState: amplitude arrays must span -t..t");
    }
    WalkState s;
    s.t_ = t;
    s.plus_ = std::move(plus);
    s.minus_ = std::move(minus);
    return s;
}

double WalkState::total_probability() const {
    double sum = 0.0;
    for (const Complex& a : plus_) {
        sum += std::norm(a);
    }
    for (const Complex& a : minus_) {
        sum += std::norm(a);
    }
    return sum;
}

}  // namespace qwalk
