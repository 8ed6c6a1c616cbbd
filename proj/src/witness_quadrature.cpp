#include <embnorm/witness_quadrature.hpp>

#include <cmath>

#include <embnorm/errors.hpp>
#include <embnorm/matrix_pnorm.hpp>

namespace embnorm {
namespace {

// n-point Gauss-Legendre rule on [-1, 1], Newton iteration on the
// Legendre recurrence.
void gauss_legendre_base(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
}

} // namespace

QuadratureGrid QuadratureGrid::make(int n) {
    if (n < 24) throw std::invalid_argument("QuadratureGrid: need n >= 24");
    constexpr int kPanelPoints = 8;
    const int halving = std::max(2, n / kPanelPoints - 2);

    std::vector<double> breaks{0.0, 0.25, 0.5};
    for (int i = 1; i <= halving; ++i) breaks.push_back(1.0 - std::pow(2.0, -1.0 - i));
    breaks.push_back(1.0);

    std::vector<double> bx, bw;
    gauss_legendre_base(kPanelPoints, bx, bw);

    QuadratureGrid grid;
    const auto total = static_cast<Eigen::Index>((breaks.size() - 1) * kPanelPoints);
    grid.nodes.resize(total);
    grid.weights.resize(total);
    Eigen::Index k = 0;
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p], b = breaks[p + 1];
        for (int i = 0; i < kPanelPoints; ++i, ++k) {
            grid.nodes[k] = 0.5 * (a + b) + 0.5 * (b - a) * bx[static_cast<std::size_t>(i)];
            grid.weights[k] = 0.5 * (b - a) * bw[static_cast<std::size_t>(i)];
        }
    }
    return grid;
}

double WitnessFunction::operator()(double t) const {
    if (exps.is_one()) return 1.0;
    return std::pow(exps.p_star + 1.0, 1.0 / exps.p) *
           std::pow(1.0 - t, exps.p_star - 1.0);
}

double WitnessFunction::antiderivative(double x) const {
    if (exps.is_one()) return x;
    return std::pow(exps.p_star + 1.0, 1.0 / exps.p) *
           (1.0 - std::pow(1.0 - x, exps.p_star)) / exps.p_star;
}

WitnessFunction extremal_h(const ExponentPair& exps) {
    if (exps.is_inf())
        throw std::domain_error(
            "extremal_h: p = inf has no integrable witness; the m = 1/2 endpoint "
            "is handled analytically by the bounds module");
    return WitnessFunction{exps};
}

namespace {

void check_alignment(const Eigen::VectorXd& c, const std::vector<SubsetMask>& sets,
                     int max_dim) {
    if (static_cast<std::size_t>(c.size()) != sets.size())
        throw std::invalid_argument("witness: coefficient/active-set size mismatch");
    if (!sets.empty() && sets.front().dim > max_dim)
        throw capacity_error("witness: tensor quadrature capped at s <= " +
                             std::to_string(max_dim));
}

} // namespace

double anchored_eval(const Eigen::VectorXd& c, const WeightScheme& scheme,
                     const std::vector<SubsetMask>& sets, const ExponentPair& exps,
                     const Eigen::VectorXd& x) {
    check_alignment(c, sets, kQuadratureDimCap);
    const WitnessFunction h = extremal_h(exps);
    double f = 0.0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (c[static_cast<Eigen::Index>(i)] == 0.0) continue;
        double term = c[static_cast<Eigen::Index>(i)] * weight(scheme, sets[i]);
        std::uint64_t rest = sets[i].bits;
        while (rest) {
            const int j = std::countr_zero(rest);
            term *= h.antiderivative(x[j]);
            rest &= rest - 1;
        }
        f += term;
    }
    return f;
}

double norm_F_numeric(const Eigen::VectorXd& c, const WeightScheme&,
                      const std::vector<SubsetMask>& sets, const ExponentPair& exps) {
    check_alignment(c, sets, kQuadratureDimCap);
    if (exps.is_inf()) throw std::domain_error("norm_F_numeric: finite p only");
    return vector_pnorm(c, exps.p);
}

double norm_F_quadrature(const Eigen::VectorXd& c, const WeightScheme&,
                         const std::vector<SubsetMask>& sets, const ExponentPair& exps,
                         const QuadratureGrid& grid) {
    check_alignment(c, sets, 2);
    const WitnessFunction h = extremal_h(exps);
    const double p = exps.p;
    double sum = 0.0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const double cu = c[static_cast<Eigen::Index>(i)];
        const int k = sets[i].cardinality();
        // integral over D^u of prod_j h(t_j)^p, as a literal tensor loop
        double integral = 1.0;
        if (k >= 1) {
            double one_dim = 0.0;
            for (int a = 0; a < grid.size(); ++a)
                one_dim += grid.weights[a] * std::pow(h(grid.nodes[a]), p);
            integral = one_dim;
            if (k == 2) {
                integral = 0.0;
                for (int a = 0; a < grid.size(); ++a)
                    for (int b = 0; b < grid.size(); ++b)
                        integral += grid.weights[a] * grid.weights[b] *
                                    std::pow(h(grid.nodes[a]) * h(grid.nodes[b]), p);
            }
        }
        sum += std::pow(cu, p) * integral;
    }
    return std::pow(sum, 1.0 / p);
}

double norm_H_numeric(const Eigen::VectorXd& c, const WeightScheme& scheme,
                      const std::vector<SubsetMask>& sets, const ExponentPair& exps,
                      const QuadratureGrid& grid) {
    check_alignment(c, sets, kQuadratureDimCap);
    if (exps.is_inf()) throw std::domain_error("norm_H_numeric: finite p only");
    const WitnessFunction h = extremal_h(exps);
    const double p = exps.p;

    // inner anchored-to-ANOVA coupling constant, by quadrature
    double IH = 0.0;
    for (int a = 0; a < grid.size(); ++a)
        IH += grid.weights[a] * h.antiderivative(grid.nodes[a]);

    double sum = 0.0;
    for (std::size_t vi = 0; vi < sets.size(); ++vi) {
        const SubsetMask& v = sets[vi];
        const double gv = weight(scheme, v);
        if (gv <= 0.0) continue;

        double coupled = 0.0; // sum over active u >= v of c_u gamma_u IH^(u\v)
        for (std::size_t ui = 0; ui < sets.size(); ++ui) {
            if (!v.subset_of(sets[ui])) continue;
            const double gu = weight(scheme, sets[ui]);
            if (gu <= 0.0) continue;
            const int k = std::popcount(sets[ui].bits & ~v.bits);
            coupled += c[static_cast<Eigen::Index>(ui)] * gu * std::pow(IH, k);
        }

        // L_p norm over D^v of prod_{j in v} h(x_j) times the coupled sum
        const int kv = v.cardinality();
        double integral = 1.0;
        if (kv >= 1) {
            std::vector<int> idx(static_cast<std::size_t>(kv), 0);
            integral = 0.0;
            while (true) {
                double wgt = 1.0, val = 1.0;
                for (int d = 0; d < kv; ++d) {
                    wgt *= grid.weights[idx[static_cast<std::size_t>(d)]];
                    val *= h(grid.nodes[idx[static_cast<std::size_t>(d)]]);
                }
                integral += wgt * std::pow(val, p);
                int d = 0;
                for (; d < kv; ++d) {
                    if (++idx[static_cast<std::size_t>(d)] < grid.size()) break;
                    idx[static_cast<std::size_t>(d)] = 0;
                }
                if (d == kv) break;
            }
        }
        sum += std::pow(std::abs(coupled) / gv, p) * integral;
    }
    return std::pow(sum, 1.0 / p);
}

} // namespace embnorm
