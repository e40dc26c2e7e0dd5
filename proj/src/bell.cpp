#include "qnet/bell.hpp"

#include "qnet/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qnet {

BellDiagonalSpectrum BellDiagonalSpectrum::make(const std::array<double, 4>& lambdas) {
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= -tol::trace && l <= 1.0 + tol::trace)) {
            std::ostringstream os;
            os << "Bell spectrum entry " << l << " outside [0,1]";
            throw std::domain_error(os.str());
        }
        sum += l;
    }
    if (std::abs(sum - 1.0) > tol::trace) {
        std::ostringstream os;
        os << "Bell spectrum sums to " << sum << ", expected 1";
        throw std::domain_error(os.str());
    }
    std::array<double, 4> sorted = lambdas;
    for (double& l : sorted) l = std::clamp(l, 0.0, 1.0);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    return BellDiagonalSpectrum(sorted);
}

ComplexMatrix bell_vector(int k) {
    ComplexMatrix v(4, 1);
    const double s = 1.0 / std::sqrt(2.0);
    switch (k) {
        case 0: v(0, 0) = s; v(3, 0) = s; break;
        case 1: v(1, 0) = s; v(2, 0) = s; break;
        case 2: v(1, 0) = s; v(2, 0) = -s; break;
        case 3: v(0, 0) = s; v(3, 0) = -s; break;
        default: throw std::invalid_argument("bell_vector index must be 0..3");
    }
    return v;
}

DensityMatrix bell_diagonal_state(const std::array<double, 4>& weights) {
    ComplexMatrix m(4, 4);
    for (int k = 0; k < 4; ++k) {
        const ComplexMatrix v = bell_vector(k);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) += weights[static_cast<std::size_t>(k)] * v(i, 0) * std::conj(v(j, 0));
    }
    return DensityMatrix::make(m);
}

std::array<double, 4> bell_overlaps(const DensityMatrix& rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("bell_overlaps: state must be two-qubit");
    std::array<double, 4> out{};
    for (int k = 0; k < 4; ++k) {
        const ComplexMatrix v = bell_vector(k);
        cplx acc(0.0, 0.0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                acc += std::conj(v(i, 0)) * rho.matrix()(i, j) * v(j, 0);
        out[static_cast<std::size_t>(k)] = acc.real();
    }
    return out;
}

bool is_ppt(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b, double tolerance) {
    const ComplexMatrix pt = partial_transpose_second(rho.matrix(), dim_a, dim_b);
    EigenSystem es = hermitian_eigensystem(pt);
    return es.values.back() >= -tolerance;
}

double ree_bell_diagonal(const BellDiagonalSpectrum& spec) {
    const double lmax = spec.lambda_max();
    if (lmax < 0.5) return 0.0;
    return 1.0 - binary_entropy(lmax);
}

DensityMatrix closest_separable_bell_diagonal(const BellDiagonalSpectrum& spec) {
    const auto& l = spec.lambdas();
    if (l[0] < 0.5) return bell_diagonal_state(l);

    std::array<double, 4> g{};
    g[0] = 0.5;
    const double rest = 1.0 - l[0];
    if (rest <= tol::supp) {
        // Pure Bell state: spread the remaining half on one orthogonal
        // Bell vector; the value S(rho||gamma) is unaffected.
        g[1] = 0.5;
    } else {
        for (std::size_t i = 1; i < 4; ++i) g[i] = l[i] / (2.0 * rest);
    }
    return bell_diagonal_state(g);
}

namespace {

// Candidate gamma from free weights, paired positionally with the sorted
// spectrum of rho. Returns +inf for infeasible weights.
double oracle_objective(const DensityMatrix& rho, const std::array<double, 4>& g) {
    constexpr double slack = 1e-12;
    double sum = 0.0;
    for (double x : g) {
        if (x < -slack || x > 0.5 + slack) return std::numeric_limits<double>::infinity();
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9) return std::numeric_limits<double>::infinity();
    std::array<double, 4> clamped = g;
    for (double& x : clamped) x = std::clamp(x, 0.0, 0.5);
    return relative_entropy(rho, bell_diagonal_state(clamped));
}

} // namespace

double ree_numeric_oracle(const BellDiagonalSpectrum& spec) {
    const DensityMatrix rho = bell_diagonal_state(spec.lambdas());

    double best = std::numeric_limits<double>::infinity();
    std::array<double, 4> best_g{0.25, 0.25, 0.25, 0.25};

    // The input spectrum itself is a feasible candidate when already PPT.
    if (spec.lambda_max() <= 0.5) {
        const double v = oracle_objective(rho, spec.lambdas());
        if (v < best) {
            best = v;
            best_g = spec.lambdas();
        }
    }

    // Dense grid over the weight simplex with the 1/2 cap.
    const int steps = 20;
    const double h = 1.0 / steps;  // grid pitch 0.05, capped at 1/2 per weight
    for (int i = 0; i <= steps / 2; ++i) {
        for (int j = 0; j <= steps / 2; ++j) {
            for (int k = 0; k <= steps / 2; ++k) {
                const double g0 = i * h;
                const double g1 = j * h;
                const double g2 = k * h;
                const double g3 = 1.0 - g0 - g1 - g2;
                if (g3 < -1e-12 || g3 > 0.5 + 1e-12) continue;
                const std::array<double, 4> g{g0, g1, g2, g3};
                const double v = oracle_objective(rho, g);
                if (v < best) {
                    best = v;
                    best_g = g;
                }
            }
        }
    }

    // Local refinement: move mass between pairs of weights with a
    // shrinking step, keeping the simplex sum exact.
    double step = h;
    while (step > 1e-7) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (int from = 0; from < 4; ++from) {
                for (int to = 0; to < 4; ++to) {
                    if (from == to) continue;
                    std::array<double, 4> cand = best_g;
                    const double delta =
                        std::min(step, std::min(cand[static_cast<std::size_t>(from)],
                                                0.5 - cand[static_cast<std::size_t>(to)]));
                    if (delta <= 0.0) continue;
                    cand[static_cast<std::size_t>(from)] -= delta;
                    cand[static_cast<std::size_t>(to)] += delta;
                    const double v = oracle_objective(rho, cand);
                    if (v < best - 1e-15) {
                        best = v;
                        best_g = cand;
                        improved = true;
                    }
                }
            }
        }
        step *= 0.5;
    }
    return best;
}

} // namespace qnet
