#include "somos/diophantine.hpp"

#include <set>

#include "somos/invariants.hpp"

namespace somos {

QuarticInstance quartic_instance(const Rat& alpha, const Rat& beta,
                                 const std::array<Rat, 4>& window) {
    QuarticInstance inst;
    inst.alpha = alpha;
    inst.beta = beta;
    inst.T = t_invariant(alpha, beta, window);
    inst.beta_t_integral = (beta * inst.T).is_integer();
    return inst;
}

Rat quartic_residual(const QuarticInstance& inst, const std::array<Rat, 4>& stuv) {
    const Rat& s = stuv[0];
    const Rat& t = stuv[1];
    const Rat& u = stuv[2];
    const Rat& v = stuv[3];
    return s * s * v * v + inst.alpha * (s * u * u * u + t * t * t * v) +
           inst.beta * t * t * u * u - inst.T * s * t * u * v;
}

QuinticInstance quintic_instance(const Rat& alpha_t, const Rat& beta_t,
                                 const std::array<Rat, 5>& window) {
    QuinticInstance inst;
    inst.alpha_t = alpha_t;
    inst.beta_t = beta_t;
    inst.J = j_tilde(alpha_t, beta_t, window).J;
    inst.alpha_j_integral = (alpha_t * inst.J).is_integer();
    return inst;
}

Rat quintic_residual(const QuinticInstance& inst, const std::array<Rat, 5>& stuvw) {
    const Rat& s = stuvw[0];
    const Rat& t = stuvw[1];
    const Rat& u = stuvw[2];
    const Rat& v = stuvw[3];
    const Rat& w = stuvw[4];
    return (s * w + inst.alpha_t * u * u) * (s * v * v + t * t * w) +
           inst.beta_t * t * u * u * u * v - inst.J * s * t * u * v * w;
}

namespace {

template <std::size_t K, class ResidualFn>
StreamResult stream_windows(const SomosRecurrence<Rat>& rec, const std::array<Rat, K>& inits,
                            std::size_t count, bool primitive_only, ResidualFn&& residual) {
    StreamResult out;
    std::vector<Rat> iv(inits.begin(), inits.end());
    Orbit<Rat> orbit(rec, iv, 1);
    const std::int64_t scan_limit = std::int64_t(std::max<std::size_t>(count, 64));
    std::set<std::vector<Rat>> seen;

    for (std::int64_t n = 1; out.items.size() < count && n <= scan_limit; ++n) {
        orbit.extend_to(n + std::int64_t(K) - 1);
        std::array<Rat, K> window;
        std::vector<Rat> key;
        for (std::size_t i = 0; i < K; ++i) {
            window[i] = orbit.at(n + std::int64_t(i));
            key.push_back(window[i]);
        }
        ++out.scanned;
        if (!seen.insert(key).second) {
            out.periodic = true;
            break;
        }
        Int g(0);
        for (const auto& v : window) {
            if (!v.is_integer())
                throw NonIntegerOrbitError("window term " + v.str() + " is not an integer");
            g = int_gcd(g, v.num());
        }
        if (primitive_only && g != 1) continue;
        StreamItem item;
        item.start_index = n;
        item.window.assign(window.begin(), window.end());
        item.gcd = g;
        item.residual = residual(window);
        out.items.push_back(std::move(item));
    }
    return out;
}

}  // namespace

StreamResult stream_quartic(const QuarticInstance& inst, const std::array<Rat, 4>& inits,
                            std::size_t count, bool primitive_only) {
    SomosRecurrence<Rat> rec(4, {inst.alpha, inst.beta});
    return stream_windows<4>(rec, inits, count, primitive_only,
                             [&](const std::array<Rat, 4>& w) { return quartic_residual(inst, w); });
}

StreamResult stream_quintic(const QuinticInstance& inst, const std::array<Rat, 5>& inits,
                            std::size_t count, bool primitive_only) {
    SomosRecurrence<Rat> rec(5, {inst.alpha_t, inst.beta_t});
    return stream_windows<5>(rec, inits, count, primitive_only,
                             [&](const std::array<Rat, 5>& w) { return quintic_residual(inst, w); });
}

}  // namespace somos
