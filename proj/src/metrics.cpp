#include "netsamp/metrics.hpp"

#include "netsamp/types.hpp"

#include <cmath>
#include <vector>

namespace netsamp {

namespace {

void check_lengths(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw Error("distribution vectors differ in length");
    if (p.empty()) throw Error("empty distribution vectors");
}

double kl_one_way(std::span<const double> p, std::span<const double> q) {
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] > 0.0) d += std::log(p[i] / q[i]) * p[i];
    return d;
}

} // namespace

double kl_symmetric(std::span<const double> p, std::span<const double> q,
                    double epsilon) {
    check_lengths(p, q);
    bool has_zero = false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == 0.0 || q[i] == 0.0) {
            has_zero = true;
            break;
        }
    if (!has_zero)
        return kl_one_way(p, q) + kl_one_way(q, p);
    if (epsilon <= 0.0) throw DivergenceUndefinedError();

    std::vector<double> ps(p.begin(), p.end());
    std::vector<double> qs(q.begin(), q.end());
    double psum = 0.0, qsum = 0.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        ps[i] += epsilon;
        qs[i] += epsilon;
        psum += ps[i];
        qsum += qs[i];
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        ps[i] /= psum;
        qs[i] /= qsum;
    }
    return kl_one_way(ps, qs) + kl_one_way(qs, ps);
}

double l2_distance(std::span<const double> p, std::span<const double> q) {
    check_lengths(p, q);
    double ss = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        ss += d * d;
    }
    return std::sqrt(ss);
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    check_lengths(p, q);
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

double relative_error(double estimate, double truth) {
    if (truth == 0.0) throw Error("relative error undefined for zero ground truth");
    return std::abs(estimate - truth) / std::abs(truth);
}

} // namespace netsamp
