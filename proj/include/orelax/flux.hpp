#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace orelax {

// Scalar flux f and its exact derivative f'. The linear model f(u) = c*u
// is the one exercised by the built-in experiments; is_linear() unlocks
// the vectorized relaxation path.
class FluxModel {
public:
    static FluxModel linear(double c) {
        FluxModel m;
        m.linear_speed_ = c;
        m.descriptor_ = "linear";
        return m;
    }

    static FluxModel custom(std::function<double(double)> f,
                            std::function<double(double)> df,
                            std::string descriptor) {
        FluxModel m;
        m.f_ = std::move(f);
        m.df_ = std::move(df);
        m.descriptor_ = std::move(descriptor);
        return m;
    }

    double operator()(double u) const {
        return linear_speed_ ? *linear_speed_ * u : f_(u);
    }

    // f'(u), the wave velocity of the conservation law
    double velocity(double u) const {
        return linear_speed_ ? *linear_speed_ : df_(u);
    }

    bool is_linear() const { return linear_speed_.has_value(); }
    double linear_speed() const { return *linear_speed_; }
    const std::string& descriptor() const { return descriptor_; }

private:
    FluxModel() = default;
    std::function<double(double)> f_, df_;
    std::optional<double> linear_speed_;
    std::string descriptor_;
};

}  // namespace orelax
