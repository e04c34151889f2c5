#pragma once

#include "susylab/catalog.hpp"
#include "susylab/superpotential.hpp"

#include <stdexcept>
#include <string>

namespace testing {

inline susylab::SuperpotentialInstance entry(const std::string& name) {
    const auto e = susylab::find_entry(name);
    if (!e) throw std::logic_error("no catalog entry " + name);
    return e->instance;
}

inline susylab::SuperpotentialInstance broken(const std::string& name) {
    const auto e = susylab::find_entry(name);
    if (!e || !e->broken_preset) throw std::logic_error("no broken preset for " + name);
    return e->instance.with_params(*e->broken_preset);
}

// 3-D oscillator with a = l and omega = 1.
inline susylab::SuperpotentialInstance oscillator(double l, double hbar = 1.0) {
    susylab::ParamRecord p;
    p.a = l;
    p.omega = 1.0;
    p.hbar = hbar;
    return susylab::SuperpotentialInstance::make("oscillator-3d", susylab::ClassTag::IIIA, p);
}

// Trigonometric Scarf with lambda = -1.
inline susylab::SuperpotentialInstance scarf(double a, double B, double hbar = 1.0) {
    susylab::ParamRecord p;
    p.a = a;
    p.B = B;
    p.lambda = -1.0;
    p.hbar = hbar;
    return susylab::SuperpotentialInstance::make("scarf1", susylab::ClassTag::IIIB_neg_lambda, p);
}

inline susylab::SuperpotentialInstance unbounded(double a, double B,
                                                 susylab::Branch branch = susylab::Branch::Right) {
    susylab::ParamRecord p;
    p.a = a;
    p.B = B;
    p.lambda = 1.0;
    return susylab::SuperpotentialInstance::make(
        "unbounded", susylab::ClassTag::IIIB_pos_lambda_unbounded, p, branch);
}

} // namespace testing
