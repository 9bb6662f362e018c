#pragma once

#include "sconvex/core_types.hpp"

namespace sconvex {

// Ostrowski-type bounds on |f(x) - (1/(b-a)) int_a^b f| for functions whose
// derivative magnitude (or a power of it) is s-convex. Every bound takes the
// derivative magnitudes as data; none of them differentiates anything.
//
// Throughout, lambda = (b-x)/(b-a) and mu = (x-a)/(b-a).

/// |f'| s-convex:
///   (b-a)/((s+1)(s+2)) [B(lambda) |f'(a)| + B(mu) |f'(b)|],
///   B(r) = 2(s+1) r^{s+2} - (s+2) r^{s+1} + 1.
BoundResult bound_sconvex_abs(const Interval& iv, double x, SParam s,
                              const EndpointData& ep);

/// The bracket B(r) above.
double sconvex_abs_bracket(double r, SParam s);

/// Midpoint form: (b-a)/((s+1)(s+2)) (1 - 2^{-(s+1)}) (|f'(a)| + |f'(b)|).
BoundResult midpoint_sconvex_abs(const Interval& iv, SParam s,
                                 const EndpointData& ep);

/// |f'|^q s-convex, Hoelder on each side of the kernel breakpoint.
BoundResult bound_holder_split(const Interval& iv, double x, SParam s,
                               const ConjugatePair& cp, const EndpointData& ep);

/// |f'|^q s-convex, Hermite-Hadamard on [a, x] and [x, b]. Needs ep.dx.
BoundResult bound_holder_hadamard(const Interval& iv, double x, SParam s,
                                  const ConjugatePair& cp, const EndpointData& ep);

/// (b-a)/(p+1)^{1/p} (|f'(a)| + |f'(b)|)/4.
BoundResult midpoint_e5(const Interval& iv, const ConjugatePair& cp,
                        const EndpointData& ep);

/// |f'|^q s-convex, Hoelder over the whole kernel:
///   (b-a)/(p+1)^{1/p} [lambda^{p+1} + mu^{p+1}]^{1/p}
///   ((|f'(a)|^q + |f'(b)|^q)/(s+1))^{1/q}.
BoundResult bound_holder_global(const Interval& iv, double x, SParam s,
                                const ConjugatePair& cp, const EndpointData& ep);

/// |f'|^q s-convex with q >= 1, via the power-mean inequality.
BoundResult bound_power_mean(const Interval& iv, double x, SParam s, double q,
                             const EndpointData& ep);

/// (b-a)/8 (1/3)^{1/q} [(|f'(a)|^q + 3|f'(b)|^q)^{1/q} + (3|f'(a)|^q + |f'(b)|^q)^{1/q}],
/// evaluated exactly as published for s = 1 and q >= 1.
BoundResult midpoint_power_mean(const Interval& iv, double q,
                                const EndpointData& ep);

}  // namespace sconvex
