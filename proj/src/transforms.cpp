#include "circulant/transforms.hpp"

#include <numeric>

namespace circulant {

ThetaParams::ThetaParams(const Modulus& mod_n, i64 r_in, i64 t_in)
    : n(mod_n.value()), r(mod(r_in, n)), m(std::gcd(n, r)) {
    if (r == 0) {
        throw InvalidRError("shift parameter r must not vanish mod " + std::to_string(n));
    }
    if (m <= 1) {
        throw InvalidRError("gcd(" + std::to_string(n) + ", " + std::to_string(r_in) +
                            ") = 1; Theta needs a common factor");
    }
    t = mod(t_in, n / m);
}

CirculantGraph adams_image(const CirculantGraph& g, i64 a) {
    const i64 n = g.order();
    if (std::gcd(mod(a, n), n) != 1) {
        throw NotAUnitError("multiplier " + std::to_string(a) + " is not a unit mod " +
                            std::to_string(n));
    }
    std::vector<i64> mapped;
    mapped.reserve(g.jumps().size());
    for (i64 r : g.jumps()) {
        mapped.push_back(mod(a * r, n));
    }
    return CirculantGraph(n, mapped);
}

i64 theta_residue(i64 x, const ThetaParams& p) {
    const i64 xx = mod(x, p.n);
    const i64 j = xx % p.m;
    return mod(xx + j * p.t * p.m, p.n);
}

std::set<i64> theta_set(const std::set<i64>& s, const ThetaParams& p) {
    std::set<i64> out;
    for (i64 x : s) {
        out.insert(theta_residue(x, p));
    }
    return out;
}

bool is_symmetric(const std::set<i64>& s, const Modulus& n) {
    const i64 N = n.value();
    for (i64 x : s) {
        if (!s.count(mod(N - x, N))) {
            return false;
        }
    }
    return true;
}

std::optional<CirculantGraph> theta_graph(const CirculantGraph& g, i64 r, i64 t) {
    ThetaParams p(g.modulus(), r, t);
    const auto full = g.full_set();
    std::set<i64> image = theta_set(std::set<i64>(full.begin(), full.end()), p);
    if (!is_symmetric(image, g.modulus())) {
        return std::nullopt;
    }
    return CirculantGraph(g.order(), std::vector<i64>(image.begin(), image.end()));
}

}  // namespace circulant
