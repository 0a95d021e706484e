#include "circulant/zmod.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace circulant {

Modulus::Modulus(i64 n) : n_(n) {
    if (n < 3) {
        throw Error("modulus must be at least 3, got " + std::to_string(n));
    }
}

i64 mod(i64 x, i64 n) {
    i64 r = x % n;
    return r < 0 ? r + n : r;
}

i64 gcd_i64(i64 a, i64 b) {
    return std::gcd(a, b);
}

std::vector<i64> reflexive_reduce(const std::vector<i64>& values, const Modulus& n) {
    const i64 N = n.value();
    std::vector<i64> out;
    out.reserve(values.size());
    for (i64 v : values) {
        i64 r = mod(v, N);
        if (r == 0) {
            throw ZeroJumpError("jump " + std::to_string(v) + " is 0 mod " + std::to_string(N));
        }
        if (r > N / 2) {
            r = N - r;
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

JumpSet::JumpSet(const Modulus& n, const std::vector<i64>& values)
    : jumps_(reflexive_reduce(values, n)) {}

bool JumpSet::contains(i64 r) const {
    return std::binary_search(jumps_.begin(), jumps_.end(), r);
}

std::vector<i64> expand_full(const JumpSet& jumps, const Modulus& n) {
    const i64 N = n.value();
    std::vector<i64> full;
    full.reserve(jumps.size() * 2);
    for (i64 r : jumps.jumps()) {
        full.push_back(r);
        if (N - r != r) {
            full.push_back(N - r);
        }
    }
    std::sort(full.begin(), full.end());
    return full;
}

CirculantGraph::CirculantGraph(const Modulus& n, const JumpSet& jumps)
    : n_(n), jumps_(jumps) {}

CirculantGraph::CirculantGraph(i64 n, const std::vector<i64>& values)
    : n_(n), jumps_(n_, values) {}

std::vector<i64> CirculantGraph::full_set() const {
    return expand_full(jumps_, n_);
}

i64 CirculantGraph::degree() const {
    return static_cast<i64>(full_set().size());
}

bool CirculantGraph::adjacent(i64 u, i64 v) const {
    i64 d = mod(u - v, n_.value());
    if (d == 0) {
        return false;
    }
    if (d > n_.value() / 2) {
        d = n_.value() - d;
    }
    return jumps_.contains(d);
}

bool CirculantGraph::is_connected() const {
    i64 g = n_.value();
    for (i64 r : jumps_.jumps()) {
        g = std::gcd(g, r);
    }
    return g == 1;
}

std::string CirculantGraph::to_text() const {
    std::ostringstream os;
    os << 'C' << n_.value() << '(';
    const auto& js = jumps_.jumps();
    for (std::size_t i = 0; i < js.size(); ++i) {
        if (i) {
            os << ',';
        }
        os << js[i];
    }
    os << ')';
    return os.str();
}

std::vector<i64> gcd_profile(const CirculantGraph& g) {
    std::vector<i64> out;
    out.reserve(g.jumps().size());
    for (i64 r : g.jumps()) {
        out.push_back(std::gcd(g.order(), r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 periodic_cycle_length(const Modulus& n, i64 r) {
    i64 rr = mod(r, n.value());
    return n.value() / std::gcd(n.value(), rr);
}

std::vector<i64> units(const Modulus& n) {
    std::vector<i64> out;
    for (i64 a = 1; a < n.value(); ++a) {
        if (std::gcd(a, n.value()) == 1) {
            out.push_back(a);
        }
    }
    return out;
}

std::vector<double> spectrum_invariant(const CirculantGraph& g) {
    const i64 N = g.order();
    const auto full = g.full_set();
    std::vector<double> spec;
    spec.reserve(static_cast<std::size_t>(N));
    for (i64 k = 0; k < N; ++k) {
        double lambda = 0.0;
        for (i64 s : full) {
            lambda += std::cos(2.0 * std::numbers::pi * static_cast<double>(k) *
                               static_cast<double>(s) / static_cast<double>(N));
        }
        // Quantize so equality tests are exact at the pinned tolerance.
        lambda = static_cast<double>(std::llround(lambda / kSpectrumTolerance)) * kSpectrumTolerance;
        spec.push_back(lambda + 0.0);  // fold -0.0 into +0.0
    }
    std::sort(spec.begin(), spec.end(), std::greater<>());
    return spec;
}

}  // namespace circulant
