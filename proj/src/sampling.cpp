#include "stereodual/sampling.hpp"

#include <cmath>
#include <numbers>

#include "stereodual/errors.hpp"
#include "stereodual/observables.hpp"

namespace stereodual {

PointSampler::PointSampler(std::uint64_t seed, double r_min, double r_max, double p_max)
    : rng_(seed), r_min_(r_min), r_max_(r_max), p_max_(p_max) {}

double PointSampler::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

PhasePoint PointSampler::planar() {
    // uniform by area: r^2 uniform
    const double r = std::sqrt(uniform(r_min_ * r_min_, r_max_ * r_max_));
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const cplx pi(uniform(-p_max_, p_max_), uniform(-p_max_, p_max_));
    return PhasePoint::planar(std::polar(r, phi), pi);
}

PhasePoint PointSampler::pair() {
    std::normal_distribution<double> gauss;
    double d[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& v : d) {
            v = gauss(rng_);
            norm += v * v;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    // uniform by 4-volume: r^4 uniform
    const double r4 = uniform(std::pow(r_min_, 4), std::pow(r_max_, 4));
    const double r = std::pow(r4, 0.25);
    std::vector<cplx> z = {cplx(d[0], d[1]) * (r / norm), cplx(d[2], d[3]) * (r / norm)};
    std::vector<cplx> pi(2);
    for (cplx& c : pi) c = cplx(uniform(-p_max_, p_max_), uniform(-p_max_, p_max_));
    return PhasePoint(std::move(z), std::move(pi));
}

namespace {

// (potential at z, kinetic coefficient at z)
std::pair<double, double> split_energy(const std::vector<cplx>& z, const SpaceParams& params) {
    const PhasePoint rest(z, std::vector<cplx>(z.size()));
    const double V = osc_hamiltonian(rest, params);
    const double plus = 1.0 + params.epsilon() * rest.z_norm2();
    const double K = plus * plus / (2.0 * params.radius * params.radius);
    return {V, K};
}

}  // namespace

PhasePoint place_on_energy_surface(const PhasePoint& p, const SpaceParams& params, double E) {
    const auto [V, K] = split_energy(p.z, params);
    if (E < V) throw PreconditionError("energy below the potential at z");
    const double target = std::sqrt((E - V) / K);
    const double current = std::sqrt(p.pi_norm2());
    PhasePoint q = p;
    if (current == 0.0) {
        q.pi.assign(p.n(), cplx(0.0));
        q.pi[0] = target;
    } else {
        for (cplx& c : q.pi) c *= target / current;
    }
    return q;
}

PhasePoint place_on_joint_level_set(const std::vector<cplx>& z, const SpaceParams& params, double E,
                                    double s, PointSampler& sampler) {
    if (z.size() != 2) throw std::invalid_argument("joint level set needs a complex pair");
    const auto [V, K] = split_energy(z, params);
    if (E < V) throw PreconditionError("energy below the potential at z");
    const double zz = std::norm(z[0]) + std::norm(z[1]);
    // pi = lambda zbar + mu (z2, -z1): J = -2 Im(lambda) zz, |pi|^2 = (|lambda|^2 + |mu|^2) zz
    const double im_lambda = -s / zz;
    const double budget = (E - V) / K / zz - im_lambda * im_lambda;
    if (budget < 0.0) throw PreconditionError("angular momentum 2s exceeds the energy budget at z");
    const double f = sampler.uniform(0.0, 1.0);
    const double re_lambda = (sampler.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * std::sqrt(f * budget);
    const cplx mu = std::polar(std::sqrt((1.0 - f) * budget), sampler.uniform(0.0, 2.0 * std::numbers::pi));
    const cplx lambda(re_lambda, im_lambda);
    std::vector<cplx> pi = {lambda * std::conj(z[0]) + mu * z[1], lambda * std::conj(z[1]) - mu * z[0]};
    return PhasePoint(z, std::move(pi));
}

}  // namespace stereodual
